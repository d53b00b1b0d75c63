//! The dihedral group I_2(2b) with its two classes of reflections weighted
//! separately.
//!
//! With m = 2b, root directions are the 2m-th roots of unity ζ^k, and the
//! positive roots are those with 0 ≤ k < m. The reflection orthogonal to ζ^j
//! is z ↦ −ζ^{2j} z̄, which on exponents reads k ↦ m + 2j − k (mod 2m), so
//! every group element is k ↦ ±k + c and everything stays exact.

use std::collections::{HashSet, VecDeque};

use crate::series::{BiPoly, Poly};

/// k ↦ sign·k + shift (mod 2m).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct AngleMap {
    sign: i64,
    shift: i64,
}

impl AngleMap {
    fn apply(self, k: i64, modulus: i64) -> i64 {
        (self.sign * k + self.shift).rem_euclid(modulus)
    }

    /// self ∘ other
    fn compose(self, other: AngleMap, modulus: i64) -> AngleMap {
        AngleMap { sign: self.sign * other.sign, shift: (self.sign * other.shift + self.shift).rem_euclid(modulus) }
    }
}

/// Outcome of the two checks for one b.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DihedralReport {
    pub b: u32,
    pub order: usize,
    /// Σ_w x^{|inv(w) ∩ Φ_s|} y^{|inv(w) ∩ Φ_t|}.
    pub bivariate: BiPoly,
    /// (1 + x)(1 + y)(1 + xy + … + (xy)^{b−1}).
    pub closed_form: BiPoly,
    /// The sum at x = q^b, y = q.
    pub specialized: Poly,
    /// ([b]_{q^{b+1}} / [b]_q) [2]_q [2b]_q.
    pub specialized_rhs: Poly,
    pub ok_bivariate: bool,
    pub ok_specialized: bool,
}

impl DihedralReport {
    pub fn ok(&self) -> bool {
        self.ok_bivariate && self.ok_specialized
    }
}

/// Enumerates I_2(2b) and compares both sides. Φ_s is the class of the
/// first simple root.
pub fn dihedral_two_param(b: u32) -> DihedralReport {
    assert!(b >= 1, "I_2(2b) needs b ≥ 1");
    let m = 2 * b as i64;
    let modulus = 2 * m;
    let reflection = |j: i64| AngleMap { sign: -1, shift: (m + 2 * j).rem_euclid(modulus) };
    let gens = [reflection(0), reflection(m - 1)];
    let identity = AngleMap { sign: 1, shift: 0 };
    let mut seen = HashSet::from([identity]);
    let mut queue = VecDeque::from([identity]);
    let mut elements = vec![identity];
    while let Some(w) = queue.pop_front() {
        for g in gens {
            let x = w.compose(g, modulus);
            if seen.insert(x) {
                queue.push_back(x);
                elements.push(x);
            }
        }
    }
    // the class of root lines containing the first simple root
    let mut in_s = vec![false; m as usize];
    let mut stack = vec![0i64];
    in_s[0] = true;
    while let Some(k) = stack.pop() {
        for g in gens {
            let line = g.apply(k, modulus) % m;
            if !in_s[line as usize] {
                in_s[line as usize] = true;
                stack.push(line);
            }
        }
    }
    let mut bivariate = BiPoly::zero();
    for w in &elements {
        let (mut s, mut t) = (0u32, 0u32);
        for k in 0..m {
            if w.apply(k, modulus) >= m {
                if in_s[k as usize] {
                    s += 1;
                } else {
                    t += 1;
                }
            }
        }
        bivariate.add_term(1, s, t);
    }
    let mut geometric = BiPoly::zero();
    for k in 0..b {
        geometric.add_term(1, k, k);
    }
    let closed_form = BiPoly::linear(1, 1, 0).mul(&BiPoly::linear(1, 0, 1)).mul(&geometric);
    let mut coeffs = Vec::new();
    for ((i, j), c) in bivariate.terms() {
        let deg = (b * i + j) as usize;
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, 0);
        }
        coeffs[deg] += c;
    }
    let specialized = Poly::from_ints(&coeffs);
    let bu = b as usize;
    let numerator = &(&Poly::q_integer(bu).substitute_power(bu + 1) * &Poly::q_integer(2)) * &Poly::q_integer(2 * bu);
    let specialized_rhs = numerator.div_exact(&Poly::q_integer(bu)).unwrap_or_else(|_| Poly::zero());
    DihedralReport {
        b,
        order: elements.len(),
        ok_bivariate: bivariate == closed_form,
        ok_specialized: specialized == specialized_rhs,
        bivariate,
        closed_form,
        specialized,
        specialized_rhs,
    }
}
