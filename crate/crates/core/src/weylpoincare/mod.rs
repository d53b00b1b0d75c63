//! Weighted Poincaré series of finite and affine Weyl groups, Macdonald's
//! product, the two-parameter dihedral series and orders of twisted
//! Chevalley groups.

pub mod affine;
pub mod chevalley;
pub mod dihedral;

use std::collections::{HashMap, VecDeque};

use crate::exec::Strategy;
use crate::exactnum::Rat;
use crate::rootsys::{exponents_from_heights, short_exponents, weighted_height, RootSystem, RootSystemError};
use crate::series::{Poly, SeriesError};

pub use affine::{affine_rhs, affine_weighted_series, alcoves_up_to, AffineForm, Alcove};
pub use chevalley::{chevalley_order, classical_order, ChevalleyType};
pub use dihedral::{dihedral_two_param, DihedralReport};

/// Largest Weyl group enumerated element by element.
pub const WEYL_CAP: usize = 60_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeylError {
    #[error("Weyl group of {0} has more than {1} elements")]
    CapExceeded(String, usize),
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
    #[error("{what} for {system}: {source}")]
    Series { system: String, what: String, source: SeriesError },
    #[error("unsupported: {0}")]
    Unsupported(String),
}

/// How inverted roots are counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Weighting {
    /// ‖α‖² with short roots of weight 1.
    SquaredLength,
    /// Every root counts 1, giving the Coxeter length.
    Unit,
}

impl Weighting {
    pub fn weights(self, sys: &RootSystem) -> Vec<u32> {
        sys.positive_roots()
            .iter()
            .map(|r| match self {
                Weighting::SquaredLength => r.weight,
                Weighting::Unit => 1,
            })
            .collect()
    }
}

/// An element of a finite Weyl group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    /// A reduced word in the simple reflections (0-based, applied right to left
    /// as a product s_{w_0} s_{w_1} ⋯).
    pub word: Vec<usize>,
    /// Action on coefficient vectors over the simple roots, row-major; column
    /// j is w(α_j).
    pub matrix: Vec<i64>,
    /// Indices into the positive roots of the α > 0 with w(α) < 0.
    pub inversions: Vec<usize>,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.inversions.len()
    }

    /// w applied to a coefficient vector.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let n = v.len();
        (0..n).map(|i| (0..n).map(|j| self.matrix[i * n + j] * v[j]).sum()).collect()
    }
}

/// s_i on coefficient vectors: β ↦ β − ⟨β, α_i^∨⟩ α_i.
fn simple_reflection(sys: &RootSystem, i: usize) -> Vec<i64> {
    let n = sys.rank();
    let cartan = sys.cartan();
    let mut m = vec![0i64; n * n];
    for j in 0..n {
        m[j * n + j] = 1;
    }
    // column j is s_i(α_j) = α_j − cartan[j][i] α_i
    for j in 0..n {
        m[i * n + j] -= cartan[j][i];
    }
    m
}

fn mat_mul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x != 0 {
                for j in 0..n {
                    out[i * n + j] += x * b[k * n + j];
                }
            }
        }
    }
    out
}

/// All elements of W, by breadth-first search on right multiplication by
/// simple reflections, so words are reduced and elements come in length order.
pub fn enumerate_weyl(sys: &RootSystem) -> Result<Vec<WeylElement>, WeylError> {
    let n = sys.rank();
    let gens: Vec<Vec<i64>> = (0..n).map(|i| simple_reflection(sys, i)).collect();
    let mut identity = vec![0i64; n * n];
    for i in 0..n {
        identity[i * n + i] = 1;
    }
    let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut found: Vec<(Vec<usize>, Vec<i64>)> = vec![(Vec::new(), identity.clone())];
    index.insert(identity, 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for (i, g) in gens.iter().enumerate() {
            let m = mat_mul(&found[k].1, g, n);
            if index.contains_key(&m) {
                continue;
            }
            if found.len() >= WEYL_CAP {
                return Err(WeylError::CapExceeded(sys.label(), WEYL_CAP));
            }
            let mut word = found[k].0.clone();
            word.push(i);
            index.insert(m.clone(), found.len());
            queue.push_back(found.len());
            found.push((word, m));
        }
    }
    let roots = sys.positive_roots();
    Ok(found
        .into_iter()
        .map(|(word, matrix)| {
            let mut e = WeylElement { word, matrix, inversions: Vec::new() };
            e.inversions = (0..roots.len()).filter(|&r| e.apply(&roots[r].coeffs).iter().all(|&c| c <= 0)).collect();
            e
        })
        .collect())
}

/// Σ of the weights of the inverted roots.
pub fn weighted_stat(w: &WeylElement, weights: &[u32]) -> u32 {
    w.inversions.iter().map(|&r| weights[r]).sum()
}

/// Σ_{w ∈ W} q^{stat(w)} over an already enumerated group.
pub fn poincare_from_elements(elements: &[WeylElement], weights: &[u32], strategy: Strategy) -> Poly {
    let counts = strategy.fold(
        elements.len(),
        Vec::<i64>::new,
        |acc, i| {
            let s = weighted_stat(&elements[i], weights) as usize;
            if acc.len() <= s {
                acc.resize(s + 1, 0);
            }
            acc[s] += 1;
        },
        |mut a, b| {
            if a.len() < b.len() {
                a.resize(b.len(), 0);
            }
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    );
    Poly::from_ints(&counts)
}

/// Σ_{w ∈ W} q^{ℒ(w)} by enumeration.
pub fn finite_weighted_poincare(sys: &RootSystem, weighting: Weighting) -> Result<Poly, WeylError> {
    let elements = enumerate_weyl(sys)?;
    Ok(poincare_from_elements(&elements, &weighting.weights(sys), Strategy::default()))
}

/// Degrees d_i = e_i + 1 from the heights of the positive roots.
pub fn degrees(sys: &RootSystem) -> Vec<u32> {
    exponents_from_heights(sys).into_iter().map(|e| e + 1).collect()
}

/// Short exponents, empty for a simply laced system.
pub fn short_exponents_or_empty(sys: &RootSystem) -> Vec<u32> {
    short_exponents(sys).unwrap_or_default()
}

/// ∏ [r]_{q^{δ_i}} / [r]_q · ∏ [d_i]_q, divided out exactly; with unit
/// weights only the second product.
pub fn closed_form_finite(sys: &RootSystem, weighting: Weighting) -> Result<Poly, WeylError> {
    let mut num = degrees(sys).iter().fold(Poly::one(), |acc, &d| &acc * &Poly::q_integer(d as usize));
    if weighting == Weighting::Unit {
        return Ok(num);
    }
    let r = sys.length_ratio() as usize;
    let mut den = Poly::one();
    for eps in short_exponents_or_empty(sys) {
        num = &num * &Poly::q_integer(r).substitute_power(eps as usize + 1);
        den = &den * &Poly::q_integer(r);
    }
    num.div_exact(&den).map_err(|source| WeylError::Series { system: sys.label(), what: "closed form".into(), source })
}

/// Per positive root, (Ht(α), ‖α‖² + Ht(α)).
pub fn macdonald_entries(sys: &RootSystem) -> Vec<(u32, u32)> {
    sys.positive_roots()
        .iter()
        .map(|r| {
            let ht = weighted_height(r, sys);
            (ht, r.weight + ht)
        })
        .collect()
}

/// ∏_{α > 0} (q^{‖α‖² + Ht(α)} − 1) and ∏_{α > 0} (q^{Ht(α)} − 1).
pub fn macdonald_product(sys: &RootSystem) -> (Poly, Poly) {
    macdonald_entries(sys).iter().fold((Poly::one(), Poly::one()), |(n, d), &(ht, top)| {
        (&n * &Poly::q_power_minus_one(top as usize), &d * &Poly::q_power_minus_one(ht as usize))
    })
}

/// Macdonald's product divided out exactly.
pub fn macdonald_polynomial(sys: &RootSystem) -> Result<Poly, WeylError> {
    let (n, d) = macdonald_product(sys);
    n.div_exact(&d).map_err(|source| WeylError::Series { system: sys.label(), what: "Macdonald product".into(), source })
}

/// Value of a polynomial with integer coefficients at an integer, exactly.
pub fn eval_int(p: &Poly, q: i64) -> Rat {
    p.eval(&Rat::from_int(q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, RootType};

    #[test]
    fn small_groups() {
        let a1 = build_root_system(RootType::A, 1).unwrap();
        assert_eq!(enumerate_weyl(&a1).unwrap().len(), 2);
        let b3 = build_root_system(RootType::B, 3).unwrap();
        assert_eq!(enumerate_weyl(&b3).unwrap().len(), 48);
    }

    #[test]
    fn c2_closed_forms() {
        let c2 = build_root_system(RootType::C, 2).unwrap();
        let p = finite_weighted_poincare(&c2, Weighting::SquaredLength).unwrap();
        assert_eq!(p.to_string(), "q^6+q^5+q^4+2q^3+q^2+q+1");
        assert_eq!(closed_form_finite(&c2, Weighting::SquaredLength).unwrap(), p);
        assert_eq!(macdonald_polynomial(&c2).unwrap(), p);
    }
}
