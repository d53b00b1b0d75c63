//! Alcove walks for the weighted affine Poincaré series.
//!
//! Points are written in coordinates x_j = ⟨x, α_j⟩, so ⟨x, α⟩ is the dot
//! product of x with the coefficient vector of α. An alcove is identified by
//! the floors ⌊⟨x, α⟩⌋ over α > 0 at any interior point x.

use std::collections::{HashSet, VecDeque};

use crate::exactnum::Rat;
use crate::rootsys::RootSystem;
use crate::series::{Poly, Series};

use super::{degrees, short_exponents_or_empty, WeylError, Weighting};

/// One alcove reached by the walk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alcove {
    /// ⌊⟨x, α⟩⌋ for each positive root.
    pub floors: Vec<i64>,
    /// An interior point.
    pub point: Vec<Rat>,
    /// Number of hyperplanes H_{α,k} separating it from the fundamental alcove, per root.
    pub separations: Vec<u32>,
    pub stat: u32,
}

fn pair(x: &[Rat], coeffs: &[i64]) -> Rat {
    x.iter().zip(coeffs).filter(|(_, &c)| c != 0).map(|(a, &c)| a * &Rat::from_int(c)).sum()
}

fn floor_i64(r: &Rat) -> i64 {
    i64::try_from(r.floor()).expect("alcove coordinates stay small")
}

fn separation(floor: i64) -> u32 {
    if floor >= 0 {
        floor as u32
    } else {
        (-floor) as u32
    }
}

struct Arrangement {
    coeffs: Vec<Vec<i64>>,
    /// α^∨ in the same coordinates: ⟨α^∨, α_j⟩.
    coroots: Vec<Vec<Rat>>,
    weights: Vec<u32>,
}

impl Arrangement {
    fn new(sys: &RootSystem, weights: &[u32]) -> Arrangement {
        let dot = |a: &[Rat], b: &[Rat]| -> Rat { a.iter().zip(b).map(|(x, y)| x * y).sum() };
        let simple = sys.simple_roots();
        let coroots = sys
            .positive_roots()
            .iter()
            .map(|r| {
                let scale = Rat::from_int(2) / dot(&r.vector, &r.vector);
                simple.iter().map(|s| &dot(&r.vector, s) * &scale).collect()
            })
            .collect();
        Arrangement { coeffs: sys.positive_roots().iter().map(|r| r.coeffs.clone()).collect(), coroots, weights: weights.to_vec() }
    }

    fn alcove(&self, point: Vec<Rat>) -> Alcove {
        let floors: Vec<i64> = self.coeffs.iter().map(|c| floor_i64(&pair(&point, c))).collect();
        let separations: Vec<u32> = floors.iter().map(|&f| separation(f)).collect();
        let stat = separations.iter().zip(&self.weights).map(|(k, w)| k * w).sum();
        Alcove { floors, point, separations, stat }
    }

    /// Reflection of `x` in H_{α_r, k}.
    fn reflect(&self, x: &[Rat], r: usize, k: i64) -> Vec<Rat> {
        let t = &pair(x, &self.coeffs[r]) - &Rat::from_int(k);
        x.iter().zip(&self.coroots[r]).map(|(a, c)| a - &(&t * c)).collect()
    }

    /// Alcoves sharing a wall with `a`: reflect across each hyperplane next
    /// to the interior point and keep the images that differ in one floor.
    fn neighbours(&self, a: &Alcove) -> Vec<Alcove> {
        let mut out = Vec::new();
        for r in 0..self.coeffs.len() {
            for k in [a.floors[r], a.floors[r] + 1] {
                let b = self.alcove(self.reflect(&a.point, r, k));
                let changed: Vec<usize> = (0..b.floors.len()).filter(|&i| b.floors[i] != a.floors[i]).collect();
                if changed == [r] {
                    out.push(b);
                }
            }
        }
        out
    }
}

/// Every alcove of the arrangement {⟨x, α⟩ = k} of `sys` whose weighted
/// separation count is at most `cutoff`.
///
/// Removing the last wall crossing from a minimal gallery lowers the
/// statistic, so the walk never needs to pass through an alcove above the
/// cutoff.
pub fn alcoves_up_to(sys: &RootSystem, weights: &[u32], cutoff: u32) -> Vec<Alcove> {
    let arr = Arrangement::new(sys, weights);
    let h = sys.coxeter_number();
    let start = arr.alcove(vec![Rat::new(1, h); sys.rank()]);
    let mut seen: HashSet<Vec<i64>> = HashSet::from([start.floors.clone()]);
    let mut queue = VecDeque::from([start.clone()]);
    let mut out = vec![start];
    while let Some(a) = queue.pop_front() {
        for b in arr.neighbours(&a) {
            if b.stat <= cutoff && seen.insert(b.floors.clone()) {
                queue.push_back(b.clone());
                out.push(b);
            }
        }
    }
    out
}

/// The arrangement and weights that realize the weighted affine statistic
/// of `sys`: the hyperplanes of the dual system, each weighted by the
/// squared length of the root of `sys` it comes from.
fn affine_setup(sys: &RootSystem, weighting: Weighting) -> (RootSystem, Vec<u32>) {
    let dual = sys.dual();
    let r = sys.length_ratio();
    let weights = dual
        .positive_roots()
        .iter()
        .map(|c| match weighting {
            Weighting::Unit => 1,
            // a coroot of squared length 1 comes from a long root and vice versa
            Weighting::SquaredLength => r + 1 - c.weight,
        })
        .collect();
    (dual, weights)
}

/// Σ q^{ℒ(alcove)} over the affine Weyl group, truncated at q^cutoff.
pub fn affine_weighted_series(sys: &RootSystem, weighting: Weighting, cutoff: u32) -> Series {
    let (arrangement, weights) = affine_setup(sys, weighting);
    let mut counts = vec![Rat::ZERO; cutoff as usize + 1];
    for a in alcoves_up_to(&arrangement, &weights, cutoff) {
        counts[a.stat as usize] = &counts[a.stat as usize] + &Rat::ONE;
    }
    Series::from_coeffs(counts, cutoff as usize)
}

/// Which product to expand for the affine series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AffineForm {
    /// (1 − q)^{−n} ∏ (q^{ε_i} − 1)/(q^{ε_i r} − 1) ∏ (q^{d_i} − 1)/(q^{e_i} − 1).
    Plain,
    /// The plain product times ∏ [r]_{q^{δ_i}} / [r]_q, i.e. the finite
    /// weighted polynomial times ∏ (q^{ε_i} − 1)/(q^{ε_i r} − 1) ∏ 1/(1 − q^{e_i}).
    WithShortFactor,
}

/// The chosen product as a series to `order`; with unit weights both forms
/// reduce to (1 − q)^{−n} ∏ (q^{d_i} − 1)/(q^{e_i} − 1).
pub fn affine_rhs(sys: &RootSystem, weighting: Weighting, form: AffineForm, order: usize) -> Result<Series, WeylError> {
    let mut num = Poly::one();
    let mut den = Poly::from_ints(&[1, -1]).pow(sys.rank() as u32);
    for d in degrees(sys) {
        num = &num * &Poly::q_power_minus_one(d as usize);
        den = &den * &Poly::q_power_minus_one(d as usize - 1);
    }
    if weighting == Weighting::SquaredLength {
        let r = sys.length_ratio() as usize;
        for eps in short_exponents_or_empty(sys) {
            let eps = eps as usize;
            num = &num * &Poly::q_power_minus_one(eps);
            den = &den * &Poly::q_power_minus_one(eps * r);
            if form == AffineForm::WithShortFactor {
                num = &num * &Poly::q_integer(r).substitute_power(eps + 1);
                den = &den * &Poly::q_integer(r);
            }
        }
    }
    num.to_series(order)
        .div(&den.to_series(order))
        .map_err(|source| WeylError::Series { system: sys.label(), what: "affine right-hand side".into(), source })
}
