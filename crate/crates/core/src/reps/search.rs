//! Searches that produce V_ε when no formula is available.

use crate::exactnum::CycloNum;
use crate::groups::{root_line, ReflectionGroup};
use crate::linalg::{CycMatrix, FiniteGroup};

/// A linear character supported exactly on an orbit's reflections.
#[derive(Clone, Debug)]
pub struct CharCandidate {
    /// Exponents `k` with χ(gen) = ζ_L^k, in generator order.
    pub generator_exponents: Vec<u32>,
    pub modulus: u32,
    pub generator_images: Vec<CycMatrix>,
    /// χ(r) = det(r) on the orbit's generators.
    pub matches_det: bool,
}

/// All linear characters that are nontrivial on every reflection of the
/// orbit and trivial on every other reflection.
///
/// Generators outside the orbit must go to 1; generators inside range over
/// the nontrivial roots of unity of their order.
pub fn det_rule_candidates(g: &ReflectionGroup, orbit: char) -> Vec<CharCandidate> {
    let Some(oi) = g.orbit_index(orbit) else {
        return Vec::new();
    };
    let cay = g.cayley();
    let gens = g.generator_ids();
    let inside = &g.orbits()[oi].generators;
    let orders: Vec<u32> = gens.iter().map(|&x| cay.element_order(x) as u32).collect();
    let l = inside.iter().map(|&s| orders[s]).fold(1, num_integer::lcm);
    let mut out = Vec::new();
    let mut choice: Vec<u32> = inside.iter().map(|_| 1).collect();
    loop {
        let mut assign = vec![0u32; gens.len()];
        for (k, &s) in inside.iter().enumerate() {
            assign[s] = choice[k] * (l / orders[s]);
        }
        if let Some(exps) = cay.extend_homomorphism(&assign, 0u32, |a, b| (a + b) % l) {
            let supported = g.reflections().iter().all(|&r| (exps[r] != 0) == (g.orbit_of_reflection(r) == Some(oi)));
            if supported {
                let matches_det = inside.iter().all(|&s| CycloNum::root_of_unity(l, assign[s] as i64) == g.det(gens[s]));
                let generator_images = assign
                    .iter()
                    .map(|&e| CycMatrix::from_rows(vec![vec![CycloNum::root_of_unity(l, e as i64)]], l).expect("1x1"))
                    .collect();
                out.push(CharCandidate { generator_exponents: assign, modulus: l, generator_images, matches_det });
            }
        }
        // next choice of nontrivial values
        let mut k = inside.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < orders[inside[k]] {
                break;
            }
            choice[k] = 1;
        }
    }
}

/// Coordinates of `y` in the basis `cols` of a subspace containing it.
fn coordinates(cols: &[Vec<CycloNum>], y: &[CycloNum], conductor: u32) -> Option<Vec<CycloNum>> {
    let n = y.len();
    let k = cols.len();
    // pick k rows on which the basis is independent
    let rows = choose_rows(cols, n, k, conductor)?;
    let sub = CycMatrix::from_rows(rows.iter().map(|&i| cols.iter().map(|c| c[i].clone()).collect()).collect(), conductor).ok()?;
    let inv = sub.inverse().ok()?;
    let rhs: Vec<CycloNum> = rows.iter().map(|&i| y[i].clone()).collect();
    let c: Vec<CycloNum> = (0..k).map(|i| (0..k).fold(CycloNum::zero(conductor), |acc, j| acc + &(inv.get(i, j) * &rhs[j]))).collect();
    // confirm y really lies in the span
    let ok = (0..n).all(|i| (0..k).fold(CycloNum::zero(conductor), |acc, j| acc + &(&c[j] * &cols[j][i])) == y[i]);
    ok.then_some(c)
}

fn choose_rows(cols: &[Vec<CycloNum>], n: usize, k: usize, conductor: u32) -> Option<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, acc: &mut Vec<usize>, test: &dyn Fn(&[usize]) -> bool) -> bool {
        if acc.len() == k {
            return test(acc);
        }
        for i in start..n {
            acc.push(i);
            if rec(i + 1, n, k, acc, test) {
                return true;
            }
            acc.pop();
        }
        false
    }
    let test = |rows: &[usize]| {
        CycMatrix::from_rows(rows.iter().map(|&i| cols.iter().map(|c| c[i].clone()).collect()).collect(), conductor)
            .map(|m| m.rank() == k)
            .unwrap_or(false)
    };
    let mut acc = Vec::new();
    rec(0, n, k, &mut acc, &test).then_some(acc)
}

/// Rank of a list of vectors, padded with zero rows to a square matrix.
fn rank_of(vectors: &[Vec<CycloNum>], conductor: u32) -> usize {
    let n = vectors[0].len();
    let mut rows = vectors.to_vec();
    rows.resize(n.max(rows.len()), vec![CycloNum::zero(conductor); n]);
    CycMatrix::from_rows(rows, conductor).map(|m| m.rank()).unwrap_or(0)
}

/// The matrix of `m` on the subspace spanned by `basis`, assumed invariant.
fn restrict(m: &CycMatrix, basis: &[Vec<CycloNum>], conductor: u32) -> Option<CycMatrix> {
    let n = m.dim();
    let k = basis.len();
    let mut out = CycMatrix::zero(k, conductor);
    for (j, w) in basis.iter().enumerate() {
        let y: Vec<CycloNum> = (0..n).map(|i| (0..n).fold(CycloNum::zero(conductor), |acc, l| acc + &(m.get(i, l) * &w[l]))).collect();
        let c = coordinates(basis, &y, conductor)?;
        for (i, v) in c.into_iter().enumerate() {
            out.set(i, j, v);
        }
    }
    Some(out)
}

/// Generator images for an n_ε-dimensional V_ε: the orbit's generators act
/// through the subgroup they generate, restricted to the span of their
/// roots, and the other generators act trivially.
///
/// If the plain restriction does not extend to a homomorphism, every
/// assignment of orbit generators to reflections of the restricted group
/// with matching determinant is tried.
pub fn reflection_quotient(g: &ReflectionGroup, orbit: char) -> Option<Vec<CycMatrix>> {
    let oi = g.orbit_index(orbit)?;
    let gens = g.generator_ids();
    let inside = g.orbits()[oi].generators.clone();
    let conductor = g.conductor();
    let mats: Vec<CycMatrix> = gens.iter().map(|&x| g.matrix(x).embed(conductor).expect("group field")).collect();
    let roots: Vec<Vec<CycloNum>> = inside.iter().map(|&s| root_line(&mats[s])).collect();
    // independent roots
    let mut basis: Vec<Vec<CycloNum>> = Vec::new();
    for r in &roots {
        let mut trial = basis.clone();
        trial.push(r.clone());
        if rank_of(&trial, conductor) == trial.len() {
            basis = trial;
        }
    }
    let k = basis.len();
    let restricted: Vec<CycMatrix> = inside.iter().map(|&s| restrict(&mats[s], &basis, conductor)).collect::<Option<_>>()?;
    let identity = CycMatrix::identity(k, conductor);
    let assemble = |imgs: &[CycMatrix]| -> Vec<CycMatrix> {
        let mut out = vec![identity.clone(); gens.len()];
        for (slot, &s) in inside.iter().enumerate() {
            out[s] = imgs[slot].clone();
        }
        out
    };
    let cay = g.cayley();
    let extends = |imgs: &[CycMatrix]| cay.extend_homomorphism(&assemble(imgs), identity.clone(), |a, b| a.mul(b)).is_some();
    if extends(&restricted) {
        return Some(assemble(&restricted));
    }
    let h = FiniteGroup::closure(restricted.clone(), crate::linalg::DEFAULT_CAP).ok()?;
    let refl: Vec<&CycMatrix> = h.elements().iter().filter(|m| m.minus_identity().rank() == 1).collect();
    let dets: Vec<CycloNum> = restricted.iter().map(|m| m.det()).collect();
    let options: Vec<Vec<&CycMatrix>> = dets.iter().map(|d| refl.iter().copied().filter(|r| r.det() == *d).collect()).collect();
    let mut pick = vec![0usize; inside.len()];
    loop {
        let imgs: Vec<CycMatrix> = pick.iter().enumerate().map(|(slot, &p)| options[slot][p].clone()).collect();
        if extends(&imgs) {
            return Some(assemble(&imgs));
        }
        let mut k = inside.len();
        loop {
            if k == 0 {
                return None;
            }
            k -= 1;
            pick[k] += 1;
            if pick[k] < options[k].len() {
                break;
            }
            pick[k] = 0;
        }
    }
}
