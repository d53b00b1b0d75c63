//! Both sides of the one- and two-variable generating-function identities.

use std::collections::BTreeMap;

use crate::exactnum::{CycloNum, Rat};
use crate::groups::{GroupName, ReflectionGroup};
use crate::reps::EpsRep;

use super::invariants::InvariantTable;
use super::{BiPoly, Poly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdentityError {
    #[error("det-weighted sum of {0} has a non-integer coefficient")]
    NonInteger(String),
    #[error("M of {rep} exceeds M_V at element {element} of {group}")]
    Dominance { group: String, rep: String, element: usize },
    #[error("{group} has no orbit {orbit}")]
    NoOrbit { group: String, orbit: char },
    #[error("pairing for orbit {orbit} of {group} gives e_i - eps_i < 0")]
    Pairing { group: String, orbit: char },
}

/// Sums det(g)-weighted counts: `counts[key][e]` elements with det = ζ_k^e.
fn collapse<K: Ord + Copy>(counts: &BTreeMap<K, Vec<i64>>, modulus: u32, what: &str) -> Result<BTreeMap<K, i64>, IdentityError> {
    let mut out = BTreeMap::new();
    for (key, by_det) in counts {
        let mut acc = CycloNum::zero(modulus);
        for (e, &c) in by_det.iter().enumerate() {
            if c != 0 {
                acc += &CycloNum::root_of_unity(modulus, e as i64).scale(&Rat::from_int(c));
            }
        }
        let v = acc.as_rat().and_then(|r| r.to_i64()).ok_or_else(|| IdentityError::NonInteger(what.to_string()))?;
        if v != 0 {
            out.insert(*key, v);
        }
    }
    Ok(out)
}

fn weighted_counts<K: Ord + Copy>(g: &ReflectionGroup, key: impl Fn(usize) -> K) -> BTreeMap<K, Vec<i64>> {
    let modulus = g.det_exponent(0).0 as usize;
    let mut counts: BTreeMap<K, Vec<i64>> = BTreeMap::new();
    for i in 0..g.order() {
        let e = g.det_exponent(i).1 as usize;
        counts.entry(key(i)).or_insert_with(|| vec![0; modulus])[e] += 1;
    }
    counts
}

/// Σ_g x^{M_V(g)}, or Σ_g det(g) x^{M_V(g)} when `signed`.
pub fn lhs_solomon(g: &ReflectionGroup, signed: bool) -> Result<Poly, IdentityError> {
    let terms: BTreeMap<usize, i64> = if signed {
        collapse(&weighted_counts(g, |i| g.m_v(i)), g.det_exponent(0).0, &g.name().to_string())?
    } else {
        let mut t = BTreeMap::new();
        for i in 0..g.order() {
            *t.entry(g.m_v(i)).or_insert(0) += 1;
        }
        t
    };
    let deg = terms.keys().max().copied().unwrap_or(0);
    let mut c = vec![0i64; deg + 1];
    for (k, v) in terms {
        c[k] = v;
    }
    Ok(Poly::from_ints(&c))
}

/// ∏(1 + e_i x) or ∏(1 − e*_i x).
pub fn rhs_solomon(table: &InvariantTable, signed: bool) -> Poly {
    let (list, sign) = if signed { (&table.coexponents, -1) } else { (&table.exponents, 1) };
    list.iter().fold(Poly::one(), |acc, &e| &acc * &Poly::from_ints(&[1, sign * e as i64]))
}

/// Σ_g (x/y)^{M_ρ(g)} y^{M_V(g)}, optionally det-weighted; the monomial of
/// `g` is x^{M_ρ} y^{M_V − M_ρ}.
pub fn lhs_two_orbit(g: &ReflectionGroup, rep: &EpsRep, signed: bool) -> Result<BiPoly, IdentityError> {
    if let Some(i) = (0..g.order()).find(|&i| rep.m(i) > g.m_v(i)) {
        return Err(IdentityError::Dominance { group: g.name().to_string(), rep: rep.name().to_string(), element: i });
    }
    let key = |i: usize| (rep.m(i) as u32, (g.m_v(i) - rep.m(i)) as u32);
    let terms: BTreeMap<(u32, u32), i64> = if signed {
        collapse(&weighted_counts(g, key), g.det_exponent(0).0, &g.name().to_string())?
    } else {
        let mut t = BTreeMap::new();
        for i in 0..g.order() {
            *t.entry(key(i)).or_insert(0) += 1;
        }
        t
    };
    let mut p = BiPoly::zero();
    for ((i, j), c) in terms {
        p.add_term(c, i, j);
    }
    Ok(p)
}

/// Positions (into the ascending exponents, and into the ascending
/// coexponents) that the ascending (co)reflexponents of an orbit attach to.
///
/// The default shifts indices by n − n_ε. For the orbit `s` of G(ab,b,n)
/// with b > 1 the single reflexponent goes with the exponent an − 1.
pub fn pairing(table: &InvariantTable, orbit: char) -> Option<(Vec<usize>, Vec<usize>)> {
    let o = table.orbit(orbit)?;
    let n = table.rank;
    let k = o.reflexponents.len();
    let shift: Vec<usize> = (0..k).map(|i| i + n - k).collect();
    match table.group {
        GroupName::Monomial { m, b, n } if b > 1 && m / b > 1 && orbit == 's' && table.orbits.len() > 1 => {
            let target = (m / b) as usize * n - 1;
            let pos = table.exponents.iter().position(|&e| e == target)?;
            Some((vec![pos], shift.clone()))
        }
        _ => Some((shift.clone(), shift)),
    }
}

/// The linear factors (a_i, b_i) of the right-hand side, in exponent order,
/// using the reindexing of [`pairing`].
pub fn rhs_factors(table: &InvariantTable, orbit: char, signed: bool) -> Result<Vec<(i64, i64)>, IdentityError> {
    let (unsigned_pos, signed_pos) = pairing(table, orbit).ok_or_else(|| IdentityError::Pairing { group: table.group.to_string(), orbit })?;
    factors_at(table, orbit, signed, if signed { &signed_pos } else { &unsigned_pos })
}

/// The linear factors when the i-th ascending (co)reflexponent attaches to
/// the (co)exponent at `pos[i]`.
pub fn factors_at(table: &InvariantTable, orbit: char, signed: bool, pos: &[usize]) -> Result<Vec<(i64, i64)>, IdentityError> {
    let o = table.orbit(orbit).ok_or_else(|| IdentityError::NoOrbit { group: table.group.to_string(), orbit })?;
    let (base, eps, sign) = if signed { (&table.coexponents, &o.coreflexponents, -1) } else { (&table.exponents, &o.reflexponents, 1) };
    let mut attached = vec![0i64; base.len()];
    for (slot, &p) in pos.iter().enumerate() {
        attached[p] = eps[slot] as i64;
    }
    let mut out = Vec::new();
    for (e, a) in base.iter().zip(attached) {
        let rest = *e as i64 - a;
        if !signed && rest < 0 {
            return Err(IdentityError::Pairing { group: table.group.to_string(), orbit });
        }
        out.push((sign * a, sign * rest));
    }
    Ok(out)
}

/// Every injective placement of `k` items into `n` slots.
fn placements(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for p in 0..n {
            if !cur.contains(&p) {
                cur.push(p);
                rec(n, k, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, k, &mut Vec::new(), &mut out);
    out
}

fn product(factors: &[(i64, i64)]) -> BiPoly {
    factors.iter().fold(BiPoly::one(), |acc, &(a, b)| acc.mul(&BiPoly::linear(1, a, b)))
}

/// ∏(1 + ε_i x + (e_i − ε_i) y) or ∏(1 − ε*_i x − (e*_i − ε*_i) y).
pub fn rhs_two_orbit(table: &InvariantTable, orbit: char, signed: bool) -> Result<BiPoly, IdentityError> {
    Ok(product(&rhs_factors(table, orbit, signed)?))
}

/// Outcome of comparing both sides of a two-variable identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub group: String,
    pub orbit: char,
    pub signed: bool,
    /// The identity holds for some reindexing.
    pub ok: bool,
    /// The identity holds with the default reindexing of [`pairing`].
    pub default_pairing: bool,
    /// Positions actually used when the default reindexing fails.
    pub reindexed: Option<Vec<usize>>,
    pub lhs: BiPoly,
    pub rhs: BiPoly,
    /// lhs − rhs.
    pub diff: BiPoly,
    /// Right-hand side as a product, e.g. `(1+2x+y)(1+y)`.
    pub rhs_factored: String,
}

/// Compares the two-variable sum for `rep` against the product built from
/// `table`. If the default reindexing fails, every other placement of the
/// (co)reflexponents is tried and the first that works is reported.
pub fn verify_identity(g: &ReflectionGroup, table: &InvariantTable, rep: &EpsRep, signed: bool) -> Result<IdentityReport, IdentityError> {
    let orbit = rep.orbit();
    let lhs = lhs_two_orbit(g, rep, signed)?;
    let mut factors = rhs_factors(table, orbit, signed)?;
    let mut rhs = product(&factors);
    let default_pairing = lhs == rhs;
    let mut reindexed = None;
    if !default_pairing {
        let k = table.orbit(orbit).map_or(0, |o| if signed { o.coreflexponents.len() } else { o.reflexponents.len() });
        for pos in placements(table.rank, k) {
            let Ok(f) = factors_at(table, orbit, signed, &pos) else { continue };
            let p = product(&f);
            if p == lhs {
                factors = f;
                rhs = p;
                reindexed = Some(pos);
                break;
            }
        }
    }
    let diff = lhs.sub(&rhs);
    let mut shown = factors.clone();
    shown.sort_by(|a, b| b.0.abs().cmp(&a.0.abs()).then(b.1.abs().cmp(&a.1.abs())));
    Ok(IdentityReport {
        group: g.name().to_string(),
        orbit,
        signed,
        ok: diff.is_zero(),
        default_pairing,
        reindexed,
        lhs,
        rhs,
        diff,
        rhs_factored: BiPoly::format_factors(&shown),
    })
}
