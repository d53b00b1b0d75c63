//! Counting helpers for decorated permutations.

use num_integer::Integer;

/// `Stir_i(n)` for `i = 0..n-1`: the number of permutations of `n` points
/// with `n − i` cycles (coefficients of ∏_{k<n} (1 + k q)).
pub fn stirling_numbers(n: usize) -> Vec<u64> {
    assert!(n >= 1);
    let mut c = vec![1u64];
    for k in 1..n as u64 {
        let mut next = vec![0u64; c.len() + 1];
        for (i, a) in c.iter().enumerate() {
            next[i] += a;
            next[i + 1] += a * k;
        }
        c = next;
    }
    c
}

/// `(m_j, n_j)` for `m = a·b` and `d = gcd(a, b)`:
/// `m_j = d((m−1)^j − (−1)^j)/m + (−1)^j` and `n_j = (a−d)((m−1)^j − (−1)^j)/m`.
pub fn count_decoration_tuples(m: i64, a: i64, b: i64, j: u32) -> (i64, i64) {
    assert_eq!(m, a * b, "m must equal a·b");
    let d = a.gcd(&b);
    let sign = if j.is_multiple_of(2) { 1 } else { -1 };
    let num = (m - 1).pow(j) - sign;
    debug_assert_eq!(num % m, 0);
    (d * num / m + sign, (a - d) * num / m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(stirling_numbers(1), vec![1]);
        assert_eq!(stirling_numbers(3), vec![1, 3, 2]);
        assert_eq!(stirling_numbers(4), vec![1, 6, 11, 6]);
        assert_eq!(count_decoration_tuples(6, 3, 2, 1), (0, 2));
        assert_eq!(count_decoration_tuples(6, 3, 2, 0), (1, 0));
        assert_eq!(count_decoration_tuples(4, 2, 2, 2), (5, 0));
    }
}
