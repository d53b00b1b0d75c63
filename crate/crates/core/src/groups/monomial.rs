//! Decorated permutations: the monomial realization of G(m,b,n).

use crate::exactnum::CycloNum;
use crate::linalg::{CycMatrix, GroupElem};

/// A permutation of `{0..n}` with a residue modulo `m` on each point.
///
/// It stands for the monomial matrix sending `e_i` to `ζ_m^{decor[i]} e_{perm[i]}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MonomialElement {
    m: u32,
    perm: Vec<u8>,
    decor: Vec<u8>,
}

impl MonomialElement {
    pub fn identity(m: u32, n: usize) -> MonomialElement {
        MonomialElement { m, perm: (0..n as u8).collect(), decor: vec![0; n] }
    }

    /// Builds an element; decorations are reduced modulo `m`.
    pub fn new(m: u32, perm: Vec<usize>, decor: Vec<i64>) -> MonomialElement {
        assert_eq!(perm.len(), decor.len());
        assert!((1..=255).contains(&m) && perm.len() <= 255);
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            assert!(p < perm.len() && !seen[p], "not a permutation");
            seen[p] = true;
        }
        MonomialElement {
            m,
            perm: perm.into_iter().map(|p| p as u8).collect(),
            decor: decor.into_iter().map(|d| d.rem_euclid(m as i64) as u8).collect(),
        }
    }

    /// The diagonal element with decoration `k` at coordinate `i`.
    pub fn diagonal(m: u32, n: usize, i: usize, k: i64) -> MonomialElement {
        let mut d = vec![0i64; n];
        d[i] = k;
        MonomialElement::new(m, (0..n).collect(), d)
    }

    /// The transposition of `i` and `j` carrying the hyperplane x_j = ζ^k x_i
    /// (decorations `k` on `i` and `-k` on `j`).
    pub fn transposition(m: u32, n: usize, i: usize, j: usize, k: i64) -> MonomialElement {
        let mut p: Vec<usize> = (0..n).collect();
        p.swap(i, j);
        let mut d = vec![0i64; n];
        d[i] = k;
        d[j] = -k;
        MonomialElement::new(m, p, d)
    }

    pub fn modulus(&self) -> u32 {
        self.m
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> Vec<usize> {
        self.perm.iter().map(|&p| p as usize).collect()
    }

    pub fn decorations(&self) -> Vec<u32> {
        self.decor.iter().map(|&d| d as u32).collect()
    }

    pub fn decoration_sum(&self) -> u32 {
        self.decor.iter().map(|&d| d as u32).sum::<u32>() % self.m
    }

    /// Cycles of the underlying permutation as `(length, decoration sum mod m)`.
    pub fn cycles(&self) -> Vec<(usize, u32)> {
        let n = self.perm.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut sum = 0u32;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                len += 1;
                sum += self.decor[i] as u32;
                i = self.perm[i] as usize;
            }
            out.push((len, sum % self.m));
        }
        out
    }

    /// M_V(g) = n − #(cycles whose decoration sum is 0 mod m).
    pub fn m_v(&self) -> usize {
        self.m_v_modulo(self.m)
    }

    /// n − #(cycles whose decoration sum is 0 mod `q`); `q` must divide `m`.
    pub fn m_v_modulo(&self, q: u32) -> usize {
        self.rank() - self.cycles().iter().filter(|(_, s)| s % q == 0).count()
    }

    /// Number of cycles of the underlying permutation.
    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// Sign of the underlying permutation.
    pub fn sign(&self) -> i64 {
        if (self.rank() - self.cycle_count()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// det(g) = sign(σ)·ζ_m^{Σ decorations}, as the exponent `k` with det = ζ_{2m}^k.
    pub fn det_exponent_2m(&self) -> u32 {
        let twice = 2 * self.decoration_sum();
        if self.sign() == 1 {
            twice
        } else {
            (twice + self.m) % (2 * self.m)
        }
    }

    pub fn det(&self) -> CycloNum {
        let z = CycloNum::root_of_unity(self.m, self.decoration_sum() as i64);
        if self.sign() == 1 {
            z
        } else {
            -z
        }
    }

    /// det(𝟙 − q g) = ∏ over cycles of (1 − ζ^{sum} q^{len}), coefficients over ℚ(ζ_m).
    pub fn char_poly_reversed(&self) -> Vec<CycloNum> {
        let m = self.m;
        let mut p = vec![CycloNum::one(m)];
        for (len, sum) in self.cycles() {
            let mut next = vec![CycloNum::zero(m); p.len() + len];
            let c = -CycloNum::root_of_unity(m, sum as i64);
            for (k, a) in p.iter().enumerate() {
                next[k] += a;
                next[k + len] += &(a * &c);
            }
            p = next;
        }
        p
    }

    /// Trace of the monomial matrix: Σ over fixed points of ζ^{decor}.
    pub fn trace(&self) -> CycloNum {
        let mut t = CycloNum::zero(self.m);
        for i in 0..self.rank() {
            if self.perm[i] as usize == i {
                t += &CycloNum::root_of_unity(self.m, self.decor[i] as i64);
            }
        }
        t
    }

    /// The monomial matrix, with entry ζ^{decor[i]} in row `perm[i]`, column `i`.
    pub fn to_matrix(&self) -> CycMatrix {
        let n = self.rank();
        let mut mat = CycMatrix::zero(n, self.m);
        for i in 0..n {
            mat.set(self.perm[i] as usize, i, CycloNum::root_of_unity(self.m, self.decor[i] as i64));
        }
        mat
    }

    /// The same permutation with decorations multiplied by `f` and taken modulo `m2`.
    pub fn map_decorations(&self, m2: u32, f: u32) -> MonomialElement {
        MonomialElement {
            m: m2,
            perm: self.perm.clone(),
            decor: self.decor.iter().map(|&d| ((d as u32 * f) % m2) as u8).collect(),
        }
    }
}

impl GroupElem for MonomialElement {
    /// (σ,c)·(τ,d) = (στ, e) with e_i = d_i + c_{τ(i)}.
    fn compose(&self, o: &Self) -> Self {
        let n = self.perm.len();
        let mut perm = Vec::with_capacity(n);
        let mut decor = Vec::with_capacity(n);
        for i in 0..n {
            let t = o.perm[i] as usize;
            perm.push(self.perm[t]);
            decor.push(((o.decor[i] as u32 + self.decor[t] as u32) % self.m) as u8);
        }
        MonomialElement { m: self.m, perm, decor }
    }

    fn inverse(&self) -> Self {
        let n = self.perm.len();
        let mut perm = vec![0u8; n];
        let mut decor = vec![0u8; n];
        for i in 0..n {
            let j = self.perm[i] as usize;
            perm[j] = i as u8;
            decor[j] = ((self.m - self.decor[i] as u32) % self.m) as u8;
        }
        MonomialElement { m: self.m, perm, decor }
    }

    fn identity_like(&self) -> Self {
        MonomialElement::identity(self.m, self.perm.len())
    }
}

/// Generators of G(m,b,n) in the order s, t₂′, t₂, …, t_n.
///
/// `s` (decoration `b` on the first point) is present iff m/b > 1; `t₂′`
/// (the decorated transposition of the first two points) iff b > 1 and n ≥ 2.
pub fn monomial_generators(m: u32, b: u32, n: usize) -> Vec<MonomialElement> {
    let mut gens = Vec::new();
    if m / b > 1 {
        gens.push(MonomialElement::diagonal(m, n, 0, b as i64));
    }
    if b > 1 && n >= 2 {
        gens.push(MonomialElement::transposition(m, n, 0, 1, 1));
    }
    for i in 1..n {
        gens.push(MonomialElement::transposition(m, n, i - 1, i, 0));
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> MonomialElement {
        MonomialElement::diagonal(2, 2, 0, 1)
    }

    fn t() -> MonomialElement {
        MonomialElement::transposition(2, 2, 0, 1, 0)
    }

    #[test]
    fn statistics_in_rank_two() {
        let id = MonomialElement::identity(2, 2);
        assert_eq!(id.m_v(), 0);
        let st = s().compose(&t());
        assert_eq!(st.m_v(), 2);
        // ut = -1 (both points decorated)
        let ut = MonomialElement::new(2, vec![0, 1], vec![1, 1]);
        assert_eq!(ut.m_v(), 2);
        assert!(ut.det().is_one());
        assert_eq!(s().det(), CycloNum::from_int(2, -1));
        assert!(id.det().is_one());
    }

    #[test]
    fn product_matches_matrices() {
        let a = MonomialElement::new(6, vec![1, 2, 0], vec![1, 4, 3]);
        let b = MonomialElement::new(6, vec![2, 0, 1], vec![5, 0, 2]);
        assert_eq!(a.compose(&b).to_matrix(), a.to_matrix().mul(&b.to_matrix()));
        assert_eq!(a.inverse().to_matrix(), a.to_matrix().inverse().unwrap());
        assert_eq!(a.det(), a.to_matrix().det());
        assert_eq!(a.m_v(), a.to_matrix().minus_identity().rank());
        assert_eq!(a.trace(), a.to_matrix().trace());
        let cp = a.char_poly_reversed();
        assert_eq!(cp, a.to_matrix().char_poly_reversed());
    }
}
