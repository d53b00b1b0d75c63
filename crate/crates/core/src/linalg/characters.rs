//! One-dimensional characters of an enumerated group.

use num_integer::Integer;

use crate::exactnum::CycloNum;

use super::group::Cayley;

/// A homomorphism G → μ_L ⊂ ℂ^×, stored as exponents: χ(g_i) = ζ_L^{exps[i]}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearChar {
    pub modulus: u32,
    pub exps: Vec<u32>,
}

impl LinearChar {
    pub fn value(&self, i: usize) -> CycloNum {
        CycloNum::root_of_unity(self.modulus, self.exps[i] as i64)
    }

    pub fn is_trivial_at(&self, i: usize) -> bool {
        self.exps[i] == 0
    }

    /// Values on the generators, as exponents modulo `modulus`.
    pub fn generator_exponents(&self, g: &Cayley) -> Vec<u32> {
        (0..g.generator_count()).map(|s| self.exps[g.gen_index(s)]).collect()
    }

    pub fn conj(&self) -> LinearChar {
        LinearChar {
            modulus: self.modulus,
            exps: self.exps.iter().map(|e| (self.modulus - e) % self.modulus).collect(),
        }
    }
}

/// The size of the abelianization G/[G,G], and the exponent bound used for
/// character values (lcm of the generators' orders modulo [G,G]).
pub fn abelianization(g: &Cayley) -> (usize, u32) {
    let comm = g.commutator_subgroup();
    let (coset, count) = g.cosets(&comm);
    let mut l: u32 = 1;
    for s in 0..g.generator_count() {
        let x = g.gen_index(s);
        let mut k = 1u32;
        let mut cur = x;
        while coset[cur] != coset[0] {
            cur = g.mul(cur, x);
            k += 1;
        }
        l = l.lcm(&k);
    }
    (count, l)
}

/// All linear characters of `g`, in lexicographic order of their generator values.
///
/// Candidates are generator assignments in μ_L (L from [`abelianization`]);
/// each is kept iff it extends to a homomorphism. The count is checked
/// against |G/[G,G]|.
pub fn linear_characters(g: &Cayley) -> Vec<LinearChar> {
    let (count, l) = abelianization(g);
    let ngens = g.generator_count();
    let mut out = Vec::new();
    let mut assign = vec![0u32; ngens];
    loop {
        if let Some(exps) = g.extend_homomorphism(&assign, 0u32, |a, b| (a + b) % l) {
            out.push(LinearChar { modulus: l, exps });
        }
        // next assignment in lexicographic order
        let mut k = ngens;
        loop {
            if k == 0 {
                assert_eq!(out.len(), count, "linear character count must equal |G/[G,G]|");
                return out;
            }
            k -= 1;
            assign[k] += 1;
            if assign[k] < l {
                break;
            }
            assign[k] = 0;
        }
    }
}
