//! Geometric representations of Coxeter groups.

use num_integer::Integer;

use crate::exactnum::CycloNum;

use super::CycMatrix;

/// 2cos(π/m) = ζ_{2m} + ζ_{2m}^{-1}, as an element of conductor `2m`.
pub fn two_cos_pi_over(m: u32) -> CycloNum {
    CycloNum::root_of_unity(2 * m, 1) + CycloNum::root_of_unity(2 * m, -1)
}

/// Simple reflections of the geometric representation attached to a
/// Coxeter matrix, in the basis of simple roots:
/// `s_i(α_j) = α_j + 2cos(π/m_ij) α_i` for `j ≠ i` and `s_i(α_i) = −α_i`.
///
/// The conductor is the lcm of `2m_ij` over entries `m_ij ≥ 4`, or 1.
pub fn coxeter_generators(coxeter: &[Vec<u32>]) -> Vec<CycMatrix> {
    let n = coxeter.len();
    let conductor = coxeter.iter().flatten().filter(|&&m| m >= 4).fold(1u32, |acc, &m| acc.lcm(&(2 * m)));
    (0..n)
        .map(|i| {
            let mut s = CycMatrix::identity(n, conductor);
            for (j, &m) in coxeter[i].iter().enumerate() {
                let v = if i == j {
                    CycloNum::from_int(conductor, -2)
                } else {
                    let c = two_cos_pi_over(m);
                    match c.as_rat() {
                        Some(r) => CycloNum::from_rat(conductor, r),
                        None => c.embed(conductor).expect("conductor covers every irrational entry"),
                    }
                };
                let cur = s.get(i, j).clone();
                s.set(i, j, cur + v);
            }
            s
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::group_closure;

    #[test]
    fn small_coxeter_groups() {
        assert_eq!(two_cos_pi_over(3), CycloNum::one(6));
        assert!(two_cos_pi_over(2).is_zero());
        let h3 = coxeter_generators(&[vec![1, 5, 2], vec![5, 1, 3], vec![2, 3, 1]]);
        assert_eq!(h3[0].conductor(), 10);
        assert_eq!(group_closure(h3, 1000).unwrap().order(), 120);
        let i2_8 = coxeter_generators(&[vec![1, 8], vec![8, 1]]);
        assert_eq!(group_closure(i2_8, 1000).unwrap().order(), 16);
    }
}
