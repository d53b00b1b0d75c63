//! Finite complex reflection groups: the family G(m,b,n), the supported
//! exceptional groups, and their reflections, hyperplanes and orbits.

mod combinat;
mod exceptional;
pub mod monomial;
mod orbits;
pub mod reference;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::exactnum::{CycloNum, Rat};
use crate::exec::Strategy;
use crate::linalg::{Cayley, CycMatrix, FiniteGroup, LinalgError, DEFAULT_CAP};

pub use combinat::{count_decoration_tuples, stirling_numbers};
pub use exceptional::{build_exceptional, build_exceptional_with, exceptional_generators, EXCEPTIONAL_NAMES};
pub use monomial::{monomial_generators, MonomialElement};
pub use orbits::{minimal_generating_sets, root_line, Flat};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("b = {b} does not divide m = {m}")]
    BadParameters { m: u32, b: u32 },
    #[error("unsupported group {0}")]
    Unsupported(String),
    #[error("cannot parse group name {0:?}")]
    Parse(String),
    #[error(transparent)]
    Closure(#[from] LinalgError),
    #[error("generator table for {name} failed validation: {reason}")]
    Validation { name: String, reason: String },
    #[error("generator data: {0}")]
    Data(String),
}

/// Which group: `G(m,b,n)` or an exceptional `G_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupName {
    Monomial { m: u32, b: u32, n: usize },
    Exceptional(u32),
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupName::Monomial { m, b, n } => write!(f, "G({m},{b},{n})"),
            GroupName::Exceptional(k) => write!(f, "G{k}"),
        }
    }
}

impl FromStr for GroupName {
    type Err = GroupError;
    fn from_str(s: &str) -> Result<GroupName, GroupError> {
        let bad = || GroupError::Parse(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let rest = t.strip_prefix('G').ok_or_else(bad)?;
        if let Some(inner) = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            let parts: Vec<&str> = inner.split(',').collect();
            if parts.len() != 3 {
                return Err(bad());
            }
            let m = parts[0].parse().map_err(|_| bad())?;
            let b = parts[1].parse().map_err(|_| bad())?;
            let n = parts[2].parse().map_err(|_| bad())?;
            if m == 0 || b == 0 || n == 0 {
                return Err(bad());
            }
            Ok(GroupName::Monomial { m, b, n })
        } else {
            let k = rest.trim_start_matches('_').parse().map_err(|_| bad())?;
            Ok(GroupName::Exceptional(k))
        }
    }
}

impl GroupName {
    /// `(m, b, n)` for a monomial group.
    pub fn monomial_params(&self) -> Option<(u32, u32, usize)> {
        match *self {
            GroupName::Monomial { m, b, n } => Some((m, b, n)),
            GroupName::Exceptional(_) => None,
        }
    }
}

/// The concrete elements behind a [`ReflectionGroup`].
#[derive(Clone)]
pub enum Realization {
    Monomial(FiniteGroup<MonomialElement>),
    Matrix(FiniteGroup<CycMatrix>),
}

impl Realization {
    pub fn cayley(&self) -> &Cayley {
        match self {
            Realization::Monomial(g) => g.cayley(),
            Realization::Matrix(g) => g.cayley(),
        }
    }

    /// Element `i` as a matrix (built on demand for monomial elements).
    pub fn matrix(&self, i: usize) -> CycMatrix {
        match self {
            Realization::Monomial(g) => g.element(i).to_matrix(),
            Realization::Matrix(g) => g.element(i).clone(),
        }
    }

    pub fn monomial(&self) -> Option<&FiniteGroup<MonomialElement>> {
        match self {
            Realization::Monomial(g) => Some(g),
            Realization::Matrix(_) => None,
        }
    }
}

/// A reflecting hyperplane, stored by its normal line (the image of `r − 1`).
#[derive(Clone, Debug)]
pub struct Hyperplane {
    /// Spans the normal line; the first nonzero coordinate is 1.
    pub normal: Vec<CycloNum>,
    /// Reflections fixing this hyperplane, by element id.
    pub reflections: Vec<usize>,
    pub orbit: usize,
}

/// A G-orbit of reflecting hyperplanes.
#[derive(Clone, Debug)]
pub struct Orbit {
    pub label: char,
    pub hyperplanes: Vec<usize>,
    pub reflections: Vec<usize>,
    /// Indices of the generators lying in this orbit; their number is n_ε.
    pub generators: Vec<usize>,
}

impl Orbit {
    pub fn n_eps(&self) -> usize {
        self.generators.len()
    }
}

/// An enumerated reflection group with per-element statistics.
#[derive(Clone)]
pub struct ReflectionGroup {
    name: GroupName,
    rank: usize,
    conductor: u32,
    realization: Realization,
    m_v: Vec<u8>,
    det_modulus: u32,
    det: Vec<u32>,
    class_of: Vec<u32>,
    class_polys: Vec<Vec<CycloNum>>,
    class_sizes: Vec<usize>,
    reflections: Vec<usize>,
    hyperplanes: Vec<Hyperplane>,
    hyperplane_of: HashMap<usize, usize>,
    orbits: Vec<Orbit>,
}

/// Statistics of one element: M_V, det exponent, and det(1 − q g) coefficients.
struct ElementStats {
    m_v: u8,
    det: u32,
    char_poly: Vec<CycloNum>,
}

impl ReflectionGroup {
    pub fn name(&self) -> GroupName {
        self.name
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Conductor of the field the realization is written over.
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn order(&self) -> usize {
        self.cayley().order()
    }

    pub fn realization(&self) -> &Realization {
        &self.realization
    }

    pub fn cayley(&self) -> &Cayley {
        self.realization.cayley()
    }

    pub fn generator_count(&self) -> usize {
        self.cayley().generator_count()
    }

    /// Element ids of the generators.
    pub fn generator_ids(&self) -> Vec<usize> {
        (0..self.generator_count()).map(|s| self.cayley().gen_index(s)).collect()
    }

    pub fn generator_matrices(&self) -> Vec<CycMatrix> {
        self.generator_ids().into_iter().map(|i| self.matrix(i)).collect()
    }

    pub fn matrix(&self, i: usize) -> CycMatrix {
        self.realization.matrix(i)
    }

    /// M_V(g) = rank(g − 1).
    pub fn m_v(&self, i: usize) -> usize {
        self.m_v[i] as usize
    }

    /// det(g) = ζ_k^e as `(k, e)`.
    pub fn det_exponent(&self, i: usize) -> (u32, u32) {
        (self.det_modulus, self.det[i])
    }

    pub fn det(&self, i: usize) -> CycloNum {
        CycloNum::root_of_unity(self.det_modulus, self.det[i] as i64)
    }

    /// Id of the class of elements sharing det(1 − q g).
    pub fn char_class(&self, i: usize) -> usize {
        self.class_of[i] as usize
    }

    pub fn class_count(&self) -> usize {
        self.class_polys.len()
    }

    /// det(1 − q g) for the elements of class `c`, coefficients from q^0.
    pub fn class_char_poly(&self, c: usize) -> &[CycloNum] {
        &self.class_polys[c]
    }

    pub fn class_size(&self, c: usize) -> usize {
        self.class_sizes[c]
    }

    /// Trace of the reflection representation at element `i`.
    pub fn trace(&self, i: usize) -> CycloNum {
        let p = &self.class_polys[self.char_class(i)];
        -p[1].clone()
    }

    /// Element ids with M_V = 1, in increasing order.
    pub fn reflections(&self) -> &[usize] {
        &self.reflections
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    /// Hyperplane fixed by reflection `r`.
    pub fn hyperplane_of(&self, r: usize) -> Option<usize> {
        self.hyperplane_of.get(&r).copied()
    }

    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    pub fn orbit(&self, label: char) -> Option<&Orbit> {
        self.orbits.iter().find(|o| o.label == label)
    }

    pub fn orbit_index(&self, label: char) -> Option<usize> {
        self.orbits.iter().position(|o| o.label == label)
    }

    /// Orbit index of a reflection, or `None` for non-reflections.
    pub fn orbit_of_reflection(&self, r: usize) -> Option<usize> {
        self.hyperplane_of(r).map(|h| self.hyperplanes[h].orbit)
    }

    /// Generated by `rank` reflections (checked on the minimal generating set in use).
    pub fn is_well_generated(&self) -> bool {
        self.generator_count() == self.rank
    }

    /// Some parabolic subgroup generated by reflections of the orbit is
    /// minimally generated by n_ε reflections.
    pub fn is_well_restricted(&self, label: char) -> bool {
        orbits::is_well_restricted(self, label)
    }

    /// Assembles a group from an enumerated realization, computing all
    /// per-element statistics and the orbit structure. `labels` maps each
    /// orbit (given by the generator indices it contains, in generator order)
    /// to its letter.
    fn assemble(
        name: GroupName,
        rank: usize,
        conductor: u32,
        realization: Realization,
        strategy: Strategy,
        labels: &orbits::OrbitLabeler<'_>,
    ) -> Result<ReflectionGroup, GroupError> {
        let det_modulus = if conductor.is_multiple_of(2) { conductor } else { 2 * conductor };
        let stats: Vec<ElementStats> = match &realization {
            Realization::Monomial(g) => strategy.map(g.order(), |i| {
                let e = g.element(i);
                ElementStats { m_v: e.m_v() as u8, det: e.det_exponent_2m() * det_modulus / (2 * e.modulus()), char_poly: e.char_poly_reversed() }
            }),
            Realization::Matrix(g) => strategy.map(g.order(), |i| {
                let e = g.element(i);
                let det = e.det().embed(det_modulus).expect("conductor divides det modulus");
                let det = det.root_of_unity_exponent().expect("finite-order determinant is a root of unity");
                ElementStats { m_v: e.minus_identity().rank() as u8, det, char_poly: e.char_poly_reversed() }
            }),
        };
        let mut class_index: HashMap<Vec<Vec<Rat>>, u32> = HashMap::new();
        let mut class_polys = Vec::new();
        let mut class_sizes = Vec::new();
        let mut class_of = Vec::with_capacity(stats.len());
        let mut m_v = Vec::with_capacity(stats.len());
        let mut det = Vec::with_capacity(stats.len());
        for st in stats {
            let key: Vec<Vec<Rat>> = st.char_poly.iter().map(|c| c.embed(conductor).expect("same field").coeffs().to_vec()).collect();
            let c = *class_index.entry(key).or_insert_with(|| {
                class_polys.push(st.char_poly.clone());
                class_sizes.push(0);
                (class_polys.len() - 1) as u32
            });
            class_sizes[c as usize] += 1;
            class_of.push(c);
            m_v.push(st.m_v);
            det.push(st.det);
        }
        let reflections: Vec<usize> = (0..m_v.len()).filter(|&i| m_v[i] == 1).collect();
        let mut g = ReflectionGroup {
            name,
            rank,
            conductor,
            realization,
            m_v,
            det_modulus,
            det,
            class_of,
            class_polys,
            class_sizes,
            reflections,
            hyperplanes: Vec::new(),
            hyperplane_of: HashMap::new(),
            orbits: Vec::new(),
        };
        orbits::compute_orbits(&mut g, labels)?;
        Ok(g)
    }
}

/// G(m,b,n) realized by decorated permutations, with the default strategy.
pub fn build_monomial_group(m: u32, b: u32, n: usize) -> Result<ReflectionGroup, GroupError> {
    build_monomial_group_with(m, b, n, Strategy::default())
}

pub fn build_monomial_group_with(m: u32, b: u32, n: usize, strategy: Strategy) -> Result<ReflectionGroup, GroupError> {
    if m == 0 || b == 0 || !m.is_multiple_of(b) || n == 0 || m > 255 || n > 12 {
        return Err(GroupError::BadParameters { m, b });
    }
    if m == 1 && n == 1 {
        return Err(GroupError::Unsupported("G(1,1,1)".to_string()));
    }
    let gens = monomial_generators(m, b, n);
    if gens.is_empty() {
        return Err(GroupError::Unsupported(format!("G({m},{b},{n})")));
    }
    let fg = FiniteGroup::closure(gens, DEFAULT_CAP)?;
    let name = GroupName::Monomial { m, b, n };
    ReflectionGroup::assemble(name, n, m, Realization::Monomial(fg), strategy, &|g, orbit_gens| monomial_labels(g, m, b, orbit_gens))
}

/// Labels: the coordinate hyperplanes are `s`; the orbit of `x_1 = x_2` is
/// `t`; a remaining orbit (only for n = 2 with b even) is `u`, or `s` when
/// there are no coordinate reflections.
fn monomial_labels(g: &ReflectionGroup, m: u32, b: u32, orbit_gens: &[Vec<usize>]) -> Result<Vec<char>, GroupError> {
    let a = m / b;
    let n = g.rank();
    let gen_kinds: Vec<char> = {
        let mut v = Vec::new();
        if a > 1 {
            v.push('s');
        }
        if b > 1 && n >= 2 {
            v.push('p');
        }
        v.extend(std::iter::repeat_n('t', n.saturating_sub(1)));
        v
    };
    Ok(orbit_gens
        .iter()
        .map(|gens| {
            let kinds: Vec<char> = gens.iter().map(|&s| gen_kinds[s]).collect();
            if kinds.contains(&'s') {
                's'
            } else if kinds.contains(&'t') {
                't'
            } else if a > 1 {
                'u'
            } else {
                's'
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in ["G(6,2,3)", "G13", "G(2,1,2)"] {
            let n: GroupName = s.parse().unwrap();
            assert_eq!(n.to_string(), s);
        }
        assert!("G(99".parse::<GroupName>().is_err());
        assert!("H3".parse::<GroupName>().is_err());
        assert_eq!("G_5".parse::<GroupName>().unwrap(), GroupName::Exceptional(5));
    }

    #[test]
    fn b2_orbits() {
        let g = build_monomial_group(2, 1, 2).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.reflections().len(), 4);
        assert_eq!(g.orbits().len(), 2);
        for o in g.orbits() {
            assert_eq!(o.hyperplanes.len(), 2);
            assert_eq!(o.n_eps(), 1);
        }
        assert!(g.is_well_generated());
    }

    #[test]
    fn g623_orbits() {
        let g = build_monomial_group(6, 2, 3).unwrap();
        assert_eq!(g.order(), 648);
        assert_eq!(g.orbit('s').unwrap().hyperplanes.len(), 3);
        assert_eq!(g.orbit('t').unwrap().hyperplanes.len(), 18);
        assert_eq!(g.orbit('t').unwrap().n_eps(), 3);
        assert!(!g.is_well_generated());
        assert!(g.is_well_restricted('s'));
        assert!(!g.is_well_restricted('t'));
    }

    #[test]
    fn cyclic_group() {
        let g = build_monomial_group(3, 1, 1).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.reflections().len(), 2);
        assert_eq!(g.orbits().len(), 1);
    }

    #[test]
    fn dihedral_split() {
        let g = build_monomial_group(6, 6, 2).unwrap();
        assert_eq!(g.orbits().len(), 2);
        let labels: Vec<char> = g.orbits().iter().map(|o| o.label).collect();
        assert!(labels.contains(&'s') && labels.contains(&'t'));
        let odd = build_monomial_group(5, 5, 2).unwrap();
        assert_eq!(odd.orbits().len(), 1);
        let three = build_monomial_group(4, 2, 2).unwrap();
        assert_eq!(three.orbits().len(), 3);
    }
}
