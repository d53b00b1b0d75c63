//! Molien series, degrees, fake degrees and the table of (co)exponents and
//! (co)reflexponents of a reflection group.

use crate::exactnum::{CycloNum, Rat};
use crate::exec::Strategy;
use crate::groups::{GroupName, ReflectionGroup};
use crate::reps::{co_eps_rep, eps_rep, EpsRep, RepError};

use super::poly::reciprocal_series_cyc;
use super::Poly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error("Molien series of {0} does not factor into degrees")]
    Peeling(String),
    #[error("fake-degree series of {rep} for {group} has a coefficient {coeff} at q^{k}")]
    BadFakeDegree { group: String, rep: String, k: usize, coeff: String },
    #[error("fake degrees of {rep} for {group} have total multiplicity {got}, expected {dim}")]
    Multiplicity { group: String, rep: String, got: usize, dim: usize },
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// Per-class reciprocals 1/det(1 − q g) and the truncation order used for a group.
pub struct MolienData {
    order: usize,
    class_series: Vec<Vec<CycloNum>>,
    degrees: Vec<usize>,
}

impl MolienData {
    /// Expands every class reciprocal to order |R| + 2 and peels off the degrees.
    pub fn new(g: &ReflectionGroup, strategy: Strategy) -> Result<MolienData, InvariantError> {
        let order = g.reflections().len() + 2;
        let class_series = strategy.map(g.class_count(), |c| reciprocal_series_cyc(g.class_char_poly(c), order));
        let mut data = MolienData { order, class_series, degrees: Vec::new() };
        let molien = data.average(g, |_| CycloNum::one(1)).ok_or_else(|| InvariantError::Peeling(g.name().to_string()))?;
        data.degrees = peel_degrees(&molien, g.rank(), order).ok_or_else(|| InvariantError::Peeling(g.name().to_string()))?;
        Ok(data)
    }

    pub fn truncation(&self) -> usize {
        self.order
    }

    /// The degrees d_1 ≤ … ≤ d_n.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// (1/|G|) Σ_g χ(g) / det(1 − q g) with rational coefficients, or `None`
    /// if some coefficient is not rational.
    fn average(&self, g: &ReflectionGroup, chi: impl Fn(usize) -> CycloNum) -> Option<Vec<Rat>> {
        let mut weight: Vec<CycloNum> = vec![CycloNum::zero(1); g.class_count()];
        for i in 0..g.order() {
            let c = g.char_class(i);
            weight[c] = &weight[c] + &chi(i);
        }
        let mut total: Vec<CycloNum> = vec![CycloNum::zero(1); self.order + 1];
        for (c, w) in weight.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            for (k, s) in self.class_series[c].iter().enumerate() {
                total[k] = &total[k] + &(w * s);
            }
        }
        let scale = Rat::new(1, g.order() as i64);
        total.iter().map(|c| c.as_rat().map(|r| &r * &scale)).collect()
    }

    /// ∏(1 − q^{d_i}) · (1/|G|) Σ_g χ(g)/det(1 − q g), truncated.
    pub fn graded_multiplicity(&self, g: &ReflectionGroup, chi: impl Fn(usize) -> CycloNum) -> Option<Poly> {
        let avg = self.average(g, chi)?;
        let mut p = Poly::from_coeffs(avg);
        for &d in &self.degrees {
            let mut f = vec![Rat::from_int(0); d + 1];
            f[0] = Rat::from_int(1);
            f[d] = Rat::from_int(-1);
            p = &p * &Poly::from_coeffs(f);
        }
        Some(Poly::from_coeffs(p.coeffs().iter().take(self.order + 1).cloned().collect()))
    }

    /// Fake degrees of the representation with character `chi`, as a sorted multiset.
    pub fn fake_degrees(
        &self,
        g: &ReflectionGroup,
        rep: &str,
        dim: usize,
        chi: impl Fn(usize) -> CycloNum,
    ) -> Result<Vec<usize>, InvariantError> {
        let bad = |k: usize, coeff: String| InvariantError::BadFakeDegree { group: g.name().to_string(), rep: rep.to_string(), k, coeff };
        let p = self.graded_multiplicity(g, chi).ok_or_else(|| bad(0, "irrational".into()))?;
        let mut out = Vec::new();
        for (k, c) in p.coeffs().iter().enumerate() {
            let v = c.to_i64().filter(|v| *v >= 0).ok_or_else(|| bad(k, c.to_string()))?;
            out.extend(std::iter::repeat_n(k, v as usize));
        }
        if out.len() != dim {
            return Err(InvariantError::Multiplicity { group: g.name().to_string(), rep: rep.to_string(), got: out.len(), dim });
        }
        Ok(out)
    }
}

/// Repeatedly divides out the smallest factor 1/(1 − q^d) visible in the
/// series; succeeds when `n` factors leave exactly 1.
pub fn peel_degrees(molien: &[Rat], n: usize, order: usize) -> Option<Vec<usize>> {
    let mut cur = molien.to_vec();
    let mut degrees = Vec::new();
    for _ in 0..n {
        // cur = 1 + c q^d + …; the first discrepancy from 1 is the next degree
        let d = (1..=order).find(|&k| !cur[k].is_zero())?;
        if cur[d] <= Rat::from_int(0) {
            return None;
        }
        // multiply by (1 − q^d)
        let mut next = cur.clone();
        for k in d..=order {
            next[k] = &next[k] - &cur[k - d];
        }
        cur = next;
        degrees.push(d);
    }
    let residual_ok = cur[0] == Rat::from_int(1) && cur[1..].iter().all(Rat::is_zero);
    residual_ok.then_some(degrees)
}

/// The degrees of `g` from its Molien series.
pub fn molien_degrees(g: &ReflectionGroup) -> Result<Vec<usize>, InvariantError> {
    Ok(MolienData::new(g, Strategy::default())?.degrees().to_vec())
}

/// Fake degrees of `rep` (or of its dual).
pub fn fake_degrees(g: &ReflectionGroup, data: &MolienData, rep: &EpsRep, dual: bool) -> Result<Vec<usize>, InvariantError> {
    let name = if dual { format!("{}*", rep.name()) } else { rep.name().to_string() };
    if dual {
        data.fake_degrees(g, &name, rep.dim(), |i| rep.dual_character(i))
    } else {
        data.fake_degrees(g, &name, rep.dim(), |i| rep.character(i).clone())
    }
}

/// (Co)reflexponents of one orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitInvariants {
    pub label: char,
    pub n_eps: usize,
    pub reflections: usize,
    pub hyperplanes: usize,
    pub well_restricted: bool,
    /// Fake degrees of V_ε (or of U_t for a non-well-restricted orbit), ascending.
    pub reflexponents: Vec<usize>,
    /// Fake degrees of V_ε* (or of U'_t padded with zeros to n_ε entries), ascending.
    pub coreflexponents: Vec<usize>,
}

/// Degrees, (co)exponents and per-orbit (co)reflexponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantTable {
    pub group: GroupName,
    pub order: usize,
    pub rank: usize,
    pub degrees: Vec<usize>,
    pub exponents: Vec<usize>,
    pub coexponents: Vec<usize>,
    pub reflections: usize,
    pub hyperplanes: usize,
    pub well_generated: bool,
    pub orbits: Vec<OrbitInvariants>,
}

impl InvariantTable {
    pub fn orbit(&self, label: char) -> Option<&OrbitInvariants> {
        self.orbits.iter().find(|o| o.label == label)
    }

    /// Numerology checks, each with a short name.
    pub fn checks(&self) -> Vec<(String, bool)> {
        let mut out = Vec::new();
        let n = self.rank;
        out.push(("e_i + 1 = d_i".to_string(), self.exponents.iter().zip(&self.degrees).all(|(e, d)| e + 1 == *d)));
        out.push(("sum e_i = |R|".to_string(), self.exponents.iter().sum::<usize>() == self.reflections));
        out.push(("sum e*_i = |H|".to_string(), self.coexponents.iter().sum::<usize>() == self.hyperplanes));
        out.push(("prod d_i = |G|".to_string(), self.degrees.iter().product::<usize>() == self.order));
        let top = self.exponents.last().copied().unwrap_or(0);
        if self.well_generated {
            let dual = (0..n).all(|i| self.exponents[i] + self.coexponents[n - 1 - i] == top + 1);
            out.push(("e_i + e*_{n+1-i} = e_n + 1".to_string(), dual));
        }
        for o in &self.orbits {
            let l = o.label;
            out.push((format!("{l}: sum of reflexponents = |R_{l}|"), o.reflexponents.iter().sum::<usize>() == o.reflections));
            out.push((format!("{l}: sum of co-reflexponents = |H_{l}|"), o.coreflexponents.iter().sum::<usize>() == o.hyperplanes));
            if self.well_generated && o.well_restricted {
                let k = o.n_eps;
                let dual = o.reflexponents.len() == k
                    && o.coreflexponents.len() == k
                    && (0..k).all(|i| o.reflexponents[i] + o.coreflexponents[k - 1 - i] == top + 1);
                out.push((format!("{l}: eps_i + eps*_(n_eps+1-i) = e_n + 1"), dual));
            }
        }
        out
    }
}

/// Computes the invariant table of `g` from scratch.
pub fn invariant_table(g: &ReflectionGroup, data: &MolienData) -> Result<InvariantTable, InvariantError> {
    let exponents = data.fake_degrees(g, "V", g.rank(), |i| g.trace(i))?;
    let coexponents = data.fake_degrees(g, "V*", g.rank(), |i| g.trace(i).conj())?;
    let mut orbits = Vec::new();
    for o in g.orbits() {
        let well_restricted = g.is_well_restricted(o.label);
        let rep = eps_rep(g, o.label)?;
        let reflexponents = fake_degrees(g, data, &rep, false)?;
        let coreflexponents = if well_restricted {
            fake_degrees(g, data, &rep, true)?
        } else {
            let co = co_eps_rep(g, o.label)?;
            let mut v = vec![0; o.n_eps().saturating_sub(co.dim())];
            v.extend(fake_degrees(g, data, &co, true)?);
            v.sort_unstable();
            v
        };
        orbits.push(OrbitInvariants {
            label: o.label,
            n_eps: o.n_eps(),
            reflections: o.reflections.len(),
            hyperplanes: o.hyperplanes.len(),
            well_restricted,
            reflexponents,
            coreflexponents,
        });
    }
    Ok(InvariantTable {
        group: g.name(),
        order: g.order(),
        rank: g.rank(),
        degrees: data.degrees().to_vec(),
        exponents,
        coexponents,
        reflections: g.reflections().len(),
        hyperplanes: g.hyperplanes().len(),
        well_generated: g.is_well_generated(),
        orbits,
    })
}
