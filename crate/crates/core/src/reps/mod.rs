//! Orbit representations: the representation V_ε attached to a
//! well-restricted hyperplane orbit, and the substitutes U_t, U'_t for the
//! two orbits that are not well-restricted.
//!
//! Every representation stores, per group element, its M-statistic
//! `rank(ρ(g) − 1)` and its character value, plus enough to rebuild `ρ(g)`
//! as a matrix for validation.

mod search;

use crate::exactnum::CycloNum;
use crate::groups::{GroupName, MonomialElement, ReflectionGroup};
use crate::linalg::CycMatrix;

pub use search::{det_rule_candidates, reflection_quotient};

/// Groups up to this order are validated on the full multiplication table.
pub const FULL_CHECK_ORDER: usize = 2000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error("{group} has no orbit {orbit}")]
    NoOrbit { group: String, orbit: char },
    #[error("{what} is not defined for {group}")]
    NotApplicable { group: String, what: String },
    #[error("orbit {orbit} of {group} is not well-restricted; use the U_t substitutes")]
    NotWellRestricted { group: String, orbit: char },
    #[error("{count} candidate representations for orbit {orbit} of {group}: {detail}")]
    Ambiguous { group: String, orbit: char, count: usize, detail: String },
    #[error("no representation found for orbit {orbit} of {group}")]
    NotFound { group: String, orbit: char },
    #[error("representation {rep} of {group} fails validation: {reason}")]
    Invalid { group: String, rep: String, reason: String },
}

/// How the representation is built.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepKind {
    /// One-dimensional character.
    LinearCharacter,
    /// The reflection representation of the symmetric group, through the
    /// underlying permutation.
    PermQuotient,
    /// Decorations reduced modulo `b`, acting monomially.
    ModBQuotient,
    /// Explicit generator matrices extended along the Cayley graph.
    EmbeddedMatrix,
}

/// Rule that evaluates the representation on an element.
#[derive(Clone, Debug)]
enum Evaluator {
    /// `ρ(g)` stored per element.
    Stored(Vec<CycMatrix>),
    /// `g ↦ ζ_m^{Σ decorations}` on a monomial group.
    DecorationCharacter,
    /// Forget decorations, act on the sum-zero hyperplane of ℂ^n.
    Permutation,
    /// Reduce decorations modulo `b`.
    Modulo(u32),
}

/// A representation of a reflection group attached to a hyperplane orbit.
#[derive(Clone, Debug)]
pub struct EpsRep {
    group: GroupName,
    name: String,
    orbit: char,
    dim: usize,
    kind: RepKind,
    gen_images: Vec<CycMatrix>,
    m_stat: Vec<u8>,
    character: Vec<CycloNum>,
    eval: Evaluator,
}

impl EpsRep {
    pub fn group(&self) -> GroupName {
        self.group
    }

    /// Short name such as `V_s` or `U'_t`.
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn orbit(&self) -> char {
        self.orbit
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> RepKind {
        self.kind
    }

    /// Images of the group's generators, in generator order.
    pub fn gen_images(&self) -> &[CycMatrix] {
        &self.gen_images
    }

    /// M_ρ(g) = rank(ρ(g) − 1).
    pub fn m(&self, i: usize) -> usize {
        self.m_stat[i] as usize
    }

    pub fn m_stats(&self) -> &[u8] {
        &self.m_stat
    }

    pub fn character(&self, i: usize) -> &CycloNum {
        &self.character[i]
    }

    /// ρ(g) for element `i` of `g`.
    pub fn image(&self, g: &ReflectionGroup, i: usize) -> CycMatrix {
        match &self.eval {
            Evaluator::Stored(v) => v[i].clone(),
            Evaluator::DecorationCharacter => {
                let e = monomial_element(g, i);
                CycMatrix::from_rows(vec![vec![CycloNum::root_of_unity(e.modulus(), e.decoration_sum() as i64)]], e.modulus())
                    .expect("1x1")
            }
            Evaluator::Permutation => permutation_reflection_matrix(&monomial_element(g, i).perm()),
            Evaluator::Modulo(b) => monomial_element(g, i).map_decorations(*b, 1).to_matrix(),
        }
    }

    /// Builds a representation from generator images by extending them along
    /// the Cayley graph; fails if they do not define a homomorphism.
    pub fn from_generator_images(
        g: &ReflectionGroup,
        name: &str,
        orbit: char,
        kind: RepKind,
        gen_images: Vec<CycMatrix>,
    ) -> Result<EpsRep, RepError> {
        let dim = gen_images[0].dim();
        let conductor = gen_images.iter().map(|m| m.conductor()).fold(1, num_integer::lcm);
        let gens: Vec<CycMatrix> = gen_images.iter().map(|m| m.embed(conductor).expect("divides lcm")).collect();
        let images = g.cayley().extend_homomorphism(&gens, CycMatrix::identity(dim, conductor), |a, b| a.mul(b)).ok_or_else(|| {
            RepError::Invalid { group: g.name().to_string(), rep: name.to_string(), reason: "generator images do not extend to a homomorphism".into() }
        })?;
        let m_stat = images.iter().map(|x| x.minus_identity().rank() as u8).collect();
        let character = images.iter().map(|x| x.trace()).collect();
        Ok(EpsRep {
            group: g.name(),
            name: name.to_string(),
            orbit,
            dim,
            kind,
            gen_images: gens,
            m_stat,
            character,
            eval: Evaluator::Stored(images),
        })
    }

    fn from_monomial(g: &ReflectionGroup, name: &str, orbit: char, kind: RepKind, eval: Evaluator) -> EpsRep {
        let fg = g.realization().monomial().expect("monomial realization");
        let n = g.rank();
        type Stat<'a> = Box<dyn Fn(&MonomialElement) -> (u8, CycloNum) + 'a>;
        let (dim, stat): (usize, Stat) = match eval {
            Evaluator::DecorationCharacter => (
                1,
                Box::new(|e: &MonomialElement| {
                    let s = e.decoration_sum();
                    ((s != 0) as u8, CycloNum::root_of_unity(e.modulus(), s as i64))
                }),
            ),
            Evaluator::Permutation => (
                n - 1,
                Box::new(move |e: &MonomialElement| {
                    let fixed = e.perm().iter().enumerate().filter(|(i, p)| i == *p).count() as i64;
                    ((n - e.cycle_count()) as u8, CycloNum::from_int(1, fixed - 1))
                }),
            ),
            Evaluator::Modulo(b) => (n, Box::new(move |e: &MonomialElement| (e.m_v_modulo(b) as u8, e.map_decorations(b, 1).trace()))),
            Evaluator::Stored(_) => unreachable!("stored images go through from_generator_images"),
        };
        let (m_stat, character): (Vec<u8>, Vec<CycloNum>) = fg.elements().iter().map(stat).unzip();
        let mut rep = EpsRep { group: g.name(), name: name.to_string(), orbit, dim, kind, gen_images: Vec::new(), m_stat, character, eval };
        rep.gen_images = g.generator_ids().into_iter().map(|i| rep.image(g, i)).collect();
        rep
    }

    /// The dual character χ̄.
    pub fn dual_character(&self, i: usize) -> CycloNum {
        self.character[i].conj()
    }
}

fn monomial_element(g: &ReflectionGroup, i: usize) -> &MonomialElement {
    g.realization().monomial().expect("monomial realization").element(i)
}

/// The reflection representation of S_n on the sum-zero hyperplane, in the
/// basis `e_k − e_{k+1}`, for the permutation `e_i ↦ e_{perm[i]}`.
pub fn permutation_reflection_matrix(perm: &[usize]) -> CycMatrix {
    let n = perm.len();
    let mut m = CycMatrix::zero(n - 1, 1);
    for j in 0..n - 1 {
        // image of e_j − e_{j+1} is e_p − e_q = ±(f_lo + … + f_{hi−1})
        let (p, q) = (perm[j], perm[j + 1]);
        let (lo, hi, sign) = if p < q { (p, q, 1) } else { (q, p, -1) };
        for k in lo..hi {
            m.set(k, j, CycloNum::from_int(1, sign));
        }
    }
    m
}

fn monomial_params(g: &ReflectionGroup) -> Option<(u32, u32, usize)> {
    g.name().monomial_params()
}

fn not_applicable(g: &ReflectionGroup, what: &str) -> RepError {
    RepError::NotApplicable { group: g.name().to_string(), what: what.to_string() }
}

/// V_s of G(m,b,n) with a = m/b > 1: the character g ↦ ζ_m^{Σ decorations}.
///
/// Decorations of G(ab,b,n) sum to a multiple of b, so this is also
/// ζ_a^{(Σ decorations)/b}; it sends `s` to det(s).
pub fn eps_rep_infinite_s(g: &ReflectionGroup) -> Result<EpsRep, RepError> {
    match monomial_params(g) {
        Some((m, b, _)) if m / b > 1 && g.orbit('s').is_some() => {}
        _ => return Err(not_applicable(g, "V_s (needs G(m,b,n) with m/b > 1)")),
    }
    Ok(EpsRep::from_monomial(g, "V_s", 's', RepKind::LinearCharacter, Evaluator::DecorationCharacter))
}

/// V_t of G(a,1,n), a > 1: the reflection representation of the underlying S_n.
pub fn eps_rep_infinite_t(g: &ReflectionGroup) -> Result<EpsRep, RepError> {
    match monomial_params(g) {
        Some((a, 1, n)) if a > 1 && n >= 2 => {}
        _ => return Err(not_applicable(g, "V_t (needs G(a,1,n) with a > 1, n ≥ 2)")),
    }
    Ok(EpsRep::from_monomial(g, "V_t", 't', RepKind::PermQuotient, Evaluator::Permutation))
}

/// G(ab,b,n) whose t orbit is not well-restricted.
fn has_u_t(m: u32, b: u32, n: usize) -> bool {
    m / b > 1 && b > 1 && (n > 2 || (n == 2 && b % 2 == 1))
}

fn check_u_range(g: &ReflectionGroup, what: &str) -> Result<u32, RepError> {
    match monomial_params(g) {
        Some((m, b, n)) if has_u_t(m, b, n) => Ok(b),
        _ => Err(not_applicable(g, &format!("{what} (needs G(ab,b,n) with a, b > 1 and n > 2, or n = 2 and b odd)"))),
    }
}

/// U_t of G(ab,b,n): decorations reduced mod b, i.e. the reflection
/// representation of G(b,b,n) pulled back along G(ab,b,n) → G(b,1,n).
pub fn eps_rep_u_t(g: &ReflectionGroup) -> Result<EpsRep, RepError> {
    let b = check_u_range(g, "U_t")?;
    Ok(EpsRep::from_monomial(g, "U_t", 't', RepKind::ModBQuotient, Evaluator::Modulo(b)))
}

/// U'_t of G(ab,b,n): forget decorations and act by the reflection
/// representation of S_n.
pub fn eps_rep_u_t_prime(g: &ReflectionGroup) -> Result<EpsRep, RepError> {
    check_u_range(g, "U'_t")?;
    Ok(EpsRep::from_monomial(g, "U'_t", 't', RepKind::PermQuotient, Evaluator::Permutation))
}

fn require_exceptional(g: &ReflectionGroup, k: u32) -> Result<(), RepError> {
    if g.name() == GroupName::Exceptional(k) {
        Ok(())
    } else {
        Err(not_applicable(g, &format!("a representation of G{k}")))
    }
}

/// U_t of G13: s ↦ 1, t ↦ [[−1,1],[0,1]], u ↦ [[1,0],[1,−1]].
pub fn eps_rep_g13_u_t(g: &ReflectionGroup) -> Result<EpsRep, RepError> {
    require_exceptional(g, 13)?;
    let images = vec![CycMatrix::identity(2, 1), CycMatrix::from_ints(2, &[-1, 1, 0, 1], 1), CycMatrix::from_ints(2, &[1, 0, 1, -1], 1)];
    EpsRep::from_generator_images(g, "U_t", 't', RepKind::EmbeddedMatrix, images)
}

/// U'_t of G13: s ↦ 1, t ↦ −1, u ↦ −1.
pub fn eps_rep_g13_u_t_prime(g: &ReflectionGroup) -> Result<EpsRep, RepError> {
    require_exceptional(g, 13)?;
    let images = [1, -1, -1].iter().map(|&v| CycMatrix::from_ints(1, &[v], 1)).collect();
    EpsRep::from_generator_images(g, "U'_t", 't', RepKind::LinearCharacter, images)
}

/// The reflection representation itself, as V_ε of a group with one orbit.
pub fn reflection_rep(g: &ReflectionGroup, orbit: char) -> Result<EpsRep, RepError> {
    let images = g.generator_matrices();
    EpsRep::from_generator_images(g, "V", orbit, RepKind::EmbeddedMatrix, images)
}

/// V_ε for an orbit of a group with several orbits: one-dimensional
/// characters by the determinant rule, two-dimensional ones by a reflection
/// quotient.
pub fn eps_rep_exceptional(g: &ReflectionGroup, orbit: char) -> Result<EpsRep, RepError> {
    let o = g.orbit(orbit).ok_or_else(|| RepError::NoOrbit { group: g.name().to_string(), orbit })?;
    if !g.is_well_restricted(orbit) {
        return Err(RepError::NotWellRestricted { group: g.name().to_string(), orbit });
    }
    let name = format!("V_{orbit}");
    match o.n_eps() {
        1 => {
            let cands = det_rule_candidates(g, orbit);
            let chosen: Vec<_> = cands.iter().filter(|c| c.matches_det).collect();
            if chosen.len() != 1 {
                let detail = cands.iter().map(|c| format!("{:?}{}", c.generator_exponents, if c.matches_det { "*" } else { "" })).collect::<Vec<_>>().join(", ");
                return Err(RepError::Ambiguous { group: g.name().to_string(), orbit, count: chosen.len(), detail });
            }
            EpsRep::from_generator_images(g, &name, orbit, RepKind::LinearCharacter, chosen[0].generator_images.clone())
        }
        _ => {
            let images = reflection_quotient(g, orbit).ok_or_else(|| RepError::NotFound { group: g.name().to_string(), orbit })?;
            EpsRep::from_generator_images(g, &name, orbit, RepKind::EmbeddedMatrix, images)
        }
    }
}

/// The representation playing the role of V_ε in the two-variable identity:
/// V_ε itself for well-restricted orbits, U_t for the two exceptions.
pub fn eps_rep(g: &ReflectionGroup, orbit: char) -> Result<EpsRep, RepError> {
    if g.orbit(orbit).is_none() {
        return Err(RepError::NoOrbit { group: g.name().to_string(), orbit });
    }
    if g.orbits().len() == 1 {
        return reflection_rep(g, orbit);
    }
    match (monomial_params(g), orbit) {
        (Some(_), 's') if g.orbit('s').is_some_and(|o| o.generators.contains(&0)) && eps_rep_infinite_s(g).is_ok() => eps_rep_infinite_s(g),
        (Some((_, 1, _)), 't') => eps_rep_infinite_t(g),
        (Some((m, b, n)), 't') if has_u_t(m, b, n) => eps_rep_u_t(g),
        (None, 't') if g.name() == GroupName::Exceptional(13) => eps_rep_g13_u_t(g),
        _ => eps_rep_exceptional(g, orbit),
    }
}

/// The representation whose fake degrees give the co-reflexponents:
/// V_ε for well-restricted orbits (used through its dual), U'_t for the two
/// exceptions.
pub fn co_eps_rep(g: &ReflectionGroup, orbit: char) -> Result<EpsRep, RepError> {
    match (monomial_params(g), orbit) {
        (Some((m, b, n)), 't') if has_u_t(m, b, n) => eps_rep_u_t_prime(g),
        (None, 't') if g.name() == GroupName::Exceptional(13) => eps_rep_g13_u_t_prime(g),
        _ => eps_rep(g, orbit),
    }
}

/// Which invariants a representation satisfies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Validation {
    /// Checked on the whole multiplication table (otherwise on generator pairs).
    pub full_table: bool,
    pub homomorphism: bool,
    /// M and character agree with the matrices (on every element checked).
    pub statistics: bool,
    pub support: bool,
    pub dominance: bool,
    /// Only meaningful for dim ≥ 2; `true` for characters.
    pub irreducible: bool,
    /// Orbit generators act as reflections; for a well-restricted orbit the
    /// subgroup they generate also acts faithfully.
    pub restriction: bool,
}

impl Validation {
    pub fn ok(&self) -> bool {
        self.homomorphism && self.statistics && self.support && self.dominance && self.irreducible && self.restriction
    }
}

/// Checks the representation invariants against `g`.
pub fn validate(g: &ReflectionGroup, rep: &EpsRep) -> Validation {
    let cay = g.cayley();
    let full = g.order() <= FULL_CHECK_ORDER;
    let gens = g.generator_ids();
    let (homomorphism, statistics) = if full {
        let images: Vec<CycMatrix> = (0..g.order()).map(|i| rep.image(g, i)).collect();
        let hom = (0..g.order()).all(|i| (0..gens.len()).all(|s| images[cay.right_mul_gen(i, s)] == images[i].mul(&images[gens[s]])));
        let stats = (0..g.order()).all(|i| images[i].minus_identity().rank() == rep.m(i) && images[i].trace() == rep.character[i]);
        (hom, stats)
    } else {
        let hom = gens.iter().all(|&x| gens.iter().all(|&y| rep.image(g, cay.mul(x, y)) == rep.image(g, x).mul(&rep.image(g, y))));
        let stats = gens.iter().all(|&x| {
            let im = rep.image(g, x);
            im.minus_identity().rank() == rep.m(x) && im.trace() == rep.character[x]
        });
        (hom, stats)
    };
    let oi = g.orbit_index(rep.orbit());
    let support = g.reflections().iter().all(|&r| (rep.m(r) >= 1) == (g.orbit_of_reflection(r) == oi));
    let dominance = (0..g.order()).all(|i| rep.m(i) <= g.m_v(i));
    let irreducible = rep.dim() < 2 || {
        let total = rep.character.iter().fold(CycloNum::zero(1), |acc, c| acc + &(c * &c.conj()));
        total.as_rat().is_some_and(|r| r == crate::exactnum::Rat::from_int(g.order() as i64))
    };
    let restriction = match oi {
        Some(oi) => {
            let og: Vec<usize> = g.orbits()[oi].generators.iter().map(|&s| gens[s]).collect();
            let reflections = og.iter().all(|&x| rep.m(x) == 1);
            let sub = cay.subgroup_generated(&og);
            let faithful = !g.is_well_restricted(rep.orbit()) || (1..g.order()).all(|i| !sub[i] || rep.m(i) > 0);
            reflections && faithful
        }
        None => false,
    };
    Validation { full_table: full, homomorphism, statistics, support, dominance, irreducible, restriction }
}
