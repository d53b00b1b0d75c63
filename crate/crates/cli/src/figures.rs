//! Published tables of (co)exponents and (co)reflexponents, instantiated at
//! concrete parameters so they can be compared with computed values.

use reflex_core::groups::GroupName;

/// Expected data for one group. Every list is a multiset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedRow {
    pub group: GroupName,
    pub exponents: Vec<usize>,
    pub coexponents: Vec<usize>,
    /// (orbit, reflexponents, co-reflexponents)
    pub orbits: Vec<(char, Vec<usize>, Vec<usize>)>,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn monomial(m: u32, b: u32, n: usize) -> GroupName {
    GroupName::Monomial { m, b, n }
}

/// G(a,1,n) with a > 1.
pub fn row_a1n(a: u32, n: usize) -> ExpectedRow {
    let au = a as usize;
    let mut orbits = vec![('s', vec![(au - 1) * n], vec![n])];
    if n >= 2 {
        let t: Vec<usize> = (1..n).map(|i| i * au).collect();
        orbits.push(('t', t.clone(), t));
    }
    ExpectedRow {
        group: monomial(a, 1, n),
        exponents: (1..=n).map(|i| i * au - 1).collect(),
        coexponents: (0..n).map(|i| i * au + 1).collect(),
        orbits,
    }
}

/// G(ab,b,n) with a, b > 1 and n > 2; the orbit t is not well-restricted
/// and is listed separately by [`extension_t_row`].
pub fn row_mbn(m: u32, b: u32, n: usize) -> ExpectedRow {
    let (mu, a) = (m as usize, (m / b) as usize);
    let d = gcd(a, b as usize);
    let mut exponents: Vec<usize> = (1..n).map(|i| i * mu - 1).collect();
    exponents.push(n * a - 1);
    let mut coexponents = vec![1];
    coexponents.extend((1..n).map(|i| i * mu + 1));
    // (a − d) n as printed; negative values cannot occur since d ≤ a
    ExpectedRow { group: monomial(m, b, n), exponents, coexponents, orbits: vec![('s', vec![(a - d) * n], vec![n])] }
}

/// G(2b,2b,2).
pub fn row_dihedral_even(b: u32) -> ExpectedRow {
    let bu = b as usize;
    ExpectedRow {
        group: monomial(2 * b, 2 * b, 2),
        exponents: vec![1, 2 * bu - 1],
        coexponents: vec![2 * bu - 1, 1],
        orbits: vec![('s', vec![bu], vec![bu]), ('t', vec![bu], vec![bu])],
    }
}

type Exceptional = (u32, [usize; 4], [usize; 4], &'static [(char, &'static [usize], &'static [usize])]);

const EXCEPTIONAL_ROWS: &[Exceptional] = &[
    (5, [5, 11, 0, 0], [7, 1, 0, 0], &[('s', &[8], &[4]), ('t', &[8], &[4])]),
    (6, [3, 11, 0, 0], [9, 1, 0, 0], &[('s', &[6], &[6]), ('t', &[8], &[4])]),
    (7, [11, 11, 0, 0], [13, 1, 0, 0], &[('s', &[6], &[6]), ('t', &[8], &[4]), ('u', &[8], &[4])]),
    (9, [7, 23, 0, 0], [17, 1, 0, 0], &[('s', &[12], &[12]), ('t', &[18], &[6])]),
    (10, [11, 23, 0, 0], [13, 1, 0, 0], &[('s', &[16], &[8]), ('t', &[18], &[6])]),
    (11, [23, 23, 0, 0], [25, 1, 0, 0], &[('s', &[12], &[12]), ('t', &[16], &[8]), ('u', &[18], &[6])]),
    (13, [7, 11, 0, 0], [17, 1, 0, 0], &[('s', &[6], &[6])]),
    (14, [5, 23, 0, 0], [19, 1, 0, 0], &[('s', &[12], &[12]), ('t', &[16], &[8])]),
    (15, [11, 23, 0, 0], [25, 1, 0, 0], &[('s', &[12], &[12]), ('t', &[16], &[8]), ('u', &[6], &[6])]),
    (17, [19, 59, 0, 0], [41, 1, 0, 0], &[('s', &[30], &[30]), ('t', &[48], &[12])]),
    (18, [29, 59, 0, 0], [31, 1, 0, 0], &[('s', &[40], &[20]), ('t', &[48], &[12])]),
    (19, [59, 59, 0, 0], [61, 1, 0, 0], &[('s', &[30], &[30]), ('t', &[40], &[20]), ('u', &[48], &[12])]),
    (21, [11, 59, 0, 0], [49, 1, 0, 0], &[('s', &[30], &[30]), ('t', &[40], &[20])]),
    (26, [5, 11, 17, 0], [13, 7, 1, 0], &[('s', &[9], &[9]), ('t', &[9, 15], &[9, 3])]),
    (28, [1, 5, 7, 11], [1, 5, 7, 11], &[('s', &[4, 8], &[8, 4]), ('t', &[4, 8], &[8, 4])]),
];

pub fn exceptional_rows() -> Vec<ExpectedRow> {
    EXCEPTIONAL_ROWS
        .iter()
        .map(|(k, e, c, orbits)| {
            let rank = if *k == 28 { 4 } else if *k == 26 { 3 } else { 2 };
            ExpectedRow {
                group: GroupName::Exceptional(*k),
                exponents: e[..rank].to_vec(),
                coexponents: c[..rank].to_vec(),
                orbits: orbits.iter().map(|(l, r, c)| (*l, r.to_vec(), c.to_vec())).collect(),
            }
        })
        .collect()
}

/// Every instantiated row: G(a,1,n) for 2 ≤ a ≤ 4, n ≤ 4; G(m,2,n) for
/// m ∈ {4, 6}, n ∈ {3, 4}; G(2b,2b,2) for b ≤ 6; and the exceptional rows.
pub fn reflexponent_rows() -> Vec<ExpectedRow> {
    let mut rows = Vec::new();
    for a in 2..=4 {
        for n in 1..=4 {
            rows.push(row_a1n(a, n));
        }
    }
    for m in [4, 6] {
        for n in [3, 4] {
            rows.push(row_mbn(m, 2, n));
        }
    }
    for b in 1..=6 {
        rows.push(row_dihedral_even(b));
    }
    rows.extend(exceptional_rows());
    rows
}

/// The replacement (co)reflexponents for the orbit t of G(ab,b,n):
/// a(b−1), 2a(b−1), …, (n−1)a(b−1), an and (n−1)ab, …, ab, 0.
pub fn extension_t_row(a: usize, b: usize, n: usize) -> (Vec<usize>, Vec<usize>) {
    let mut t: Vec<usize> = (1..n).map(|i| i * a * (b - 1)).collect();
    t.push(a * n);
    let co: Vec<usize> = (0..n).map(|i| i * a * b).collect();
    (t, co)
}

/// The replacement (co)reflexponents for the orbit t of G13.
pub fn g13_t_row() -> (Vec<usize>, Vec<usize>) {
    (vec![4, 8], vec![12, 0])
}

/// Short exponents by type: B_n gives 2, 4, …, 2n − 2; C_n gives n.
pub fn short_exponent_row(kind: char, n: usize) -> Option<Vec<usize>> {
    match (kind, n) {
        ('B', n) if n >= 2 => Some((1..n).map(|i| 2 * i).collect()),
        ('C', n) if n >= 2 => Some(vec![n]),
        ('F', 4) => Some(vec![4, 8]),
        ('G', 2) => Some(vec![3]),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instantiations() {
        let r = row_a1n(2, 2);
        assert_eq!(r.exponents, vec![1, 3]);
        assert_eq!(r.orbits[1], ('t', vec![2], vec![2]));
        assert_eq!(extension_t_row(2, 2, 3), (vec![2, 4, 6], vec![0, 4, 8]));
        assert_eq!(row_mbn(6, 2, 3).exponents, vec![5, 11, 8]);
    }
}
