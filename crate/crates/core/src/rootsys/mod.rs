//! Crystallographic root systems: positive roots, heights, weights, duals,
//! exponents and short exponents.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::exactnum::Rat;
use crate::linalg::CycMatrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootSystemError {
    #[error("unsupported root system {0}")]
    Unsupported(String),
    #[error("root system {0} has a single root length")]
    SimplyLaced(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            RootType::A => 'A',
            RootType::B => 'B',
            RootType::C => 'C',
            RootType::D => 'D',
            RootType::E => 'E',
            RootType::F => 'F',
            RootType::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for RootType {
    type Err = RootSystemError;
    fn from_str(s: &str) -> Result<RootType, RootSystemError> {
        match s.trim() {
            "A" | "a" => Ok(RootType::A),
            "B" | "b" => Ok(RootType::B),
            "C" | "c" => Ok(RootType::C),
            "D" | "d" => Ok(RootType::D),
            "E" | "e" => Ok(RootType::E),
            "F" | "f" => Ok(RootType::F),
            "G" | "g" => Ok(RootType::G),
            other => Err(RootSystemError::Unsupported(other.to_string())),
        }
    }
}

/// A positive root, with its coordinates over the simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    /// Coefficients over the simple roots.
    pub coeffs: Vec<i64>,
    /// Coordinates in the ambient Euclidean space.
    pub vector: Vec<Rat>,
    /// Squared length, normalized so short roots have weight 1.
    pub weight: u32,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

/// An irreducible crystallographic root system in a standard realization.
#[derive(Clone, Debug)]
pub struct RootSystem {
    kind: RootType,
    rank: usize,
    simple: Vec<Vec<Rat>>,
    /// Cartan integers `cartan[i][j] = 2(α_i, α_j)/(α_j, α_j)`.
    cartan: Vec<Vec<i64>>,
    positive: Vec<Root>,
    ratio: u32,
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn unit(dim: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::ZERO; dim];
    v[i] = Rat::ONE;
    v
}

fn diff(dim: usize, i: usize, j: usize) -> Vec<Rat> {
    let mut v = unit(dim, i);
    v[j] = Rat::from_int(-1);
    v
}

fn simple_roots(kind: RootType, n: usize) -> Result<Vec<Vec<Rat>>, RootSystemError> {
    let bad = || RootSystemError::Unsupported(format!("{kind}{n}"));
    let r = |k: i64| Rat::from_int(k);
    let half = Rat::new(1, 2);
    let roots = match kind {
        RootType::A if n >= 1 => (0..n).map(|i| diff(n + 1, i, i + 1)).collect(),
        RootType::B if n >= 2 => {
            let mut v: Vec<Vec<Rat>> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            v.push(unit(n, n - 1));
            v
        }
        RootType::C if n >= 2 => {
            let mut v: Vec<Vec<Rat>> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            let mut last = vec![Rat::ZERO; n];
            last[n - 1] = r(2);
            v.push(last);
            v
        }
        RootType::D if (3..=8).contains(&n) => {
            let mut v: Vec<Vec<Rat>> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            let mut last = vec![Rat::ZERO; n];
            last[n - 2] = r(1);
            last[n - 1] = r(1);
            v.push(last);
            v
        }
        RootType::E if (6..=8).contains(&n) => {
            // α_1 = ½(e_1 + e_8 − e_2 − … − e_7), α_2 = e_1 + e_2, α_k = e_{k−1} − e_{k−2}
            let mut first = vec![-half.clone(); 8];
            first[0] = half.clone();
            first[7] = half.clone();
            let mut v = vec![first];
            let mut a2 = vec![Rat::ZERO; 8];
            a2[0] = r(1);
            a2[1] = r(1);
            v.push(a2);
            for k in 3..=n {
                v.push(diff(8, k - 2, k - 3));
            }
            v
        }
        RootType::F if n == 4 => vec![
            diff(4, 1, 2),
            diff(4, 2, 3),
            unit(4, 3),
            vec![half.clone(), -half.clone(), -half.clone(), -half],
        ],
        RootType::G if n == 2 => vec![diff(3, 0, 1), vec![r(-2), r(1), r(1)]],
        _ => return Err(bad()),
    };
    Ok(roots)
}

impl RootSystem {
    fn from_simple(kind: RootType, simple: Vec<Vec<Rat>>) -> RootSystem {
        let n = simple.len();
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = Rat::from_int(2) * dot(&simple[i], &simple[j]) / dot(&simple[j], &simple[j]);
                        c.to_i64().expect("Cartan integers are integers")
                    })
                    .collect()
            })
            .collect();
        // All roots are the Weyl orbit of the simple roots, in coefficient form.
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0i64; n];
            e[i] = 1;
            if seen.insert(e.clone()) {
                queue.push_back(e);
            }
        }
        while let Some(b) = queue.pop_front() {
            for i in 0..n {
                // s_i(β) = β − ⟨β, α_i^∨⟩ α_i with ⟨β, α_i^∨⟩ = Σ_j b_j cartan[j][i].
                let pairing: i64 = (0..n).map(|j| b[j] * cartan[j][i]).sum();
                let mut c = b.clone();
                c[i] -= pairing;
                if seen.insert(c.clone()) {
                    queue.push_back(c);
                }
            }
        }
        let dim = simple[0].len();
        let norm = |v: &[Rat]| dot(v, v);
        let min_norm = simple.iter().map(|s| norm(s)).min().expect("nonempty");
        let mut positive: Vec<Root> = seen
            .into_iter()
            .filter(|c| c.iter().all(|&x| x >= 0))
            .map(|coeffs| {
                let mut vector = vec![Rat::ZERO; dim];
                for (k, a) in coeffs.iter().enumerate() {
                    for (x, y) in vector.iter_mut().zip(&simple[k]) {
                        *x = &*x + &(Rat::from_int(*a) * y);
                    }
                }
                let w = (norm(&vector) / min_norm.clone()).to_i64().expect("integral length ratio") as u32;
                Root { coeffs, vector, weight: w }
            })
            .collect();
        positive.sort_by(|a, b| (a.height(), std::cmp::Reverse(&a.coeffs)).cmp(&(b.height(), std::cmp::Reverse(&b.coeffs))));
        let ratio = positive.iter().map(|r| r.weight).max().unwrap_or(1);
        RootSystem { kind, rank: n, simple, cartan, positive, ratio }
    }

    pub fn kind(&self) -> RootType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.kind, self.rank)
    }

    pub fn simple_roots(&self) -> &[Vec<Rat>] {
        &self.simple
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots, by increasing height.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// Ratio of squared lengths, long to short (1 when simply laced).
    pub fn length_ratio(&self) -> u32 {
        self.ratio
    }

    /// Weight of simple root `i`.
    pub fn simple_weight(&self, i: usize) -> u32 {
        let mut e = vec![0i64; self.rank];
        e[i] = 1;
        self.positive.iter().find(|r| r.coeffs == e).expect("simple roots are positive").weight
    }

    pub fn highest_root(&self) -> &Root {
        self.positive.iter().max_by_key(|r| r.height()).expect("nonempty")
    }

    /// Coxeter number h = ht(highest root) + 1.
    pub fn coxeter_number(&self) -> i64 {
        self.highest_root().height() + 1
    }

    /// The dual system, with simple roots 2α/(α, α).
    pub fn dual(&self) -> RootSystem {
        let simple: Vec<Vec<Rat>> = self
            .simple
            .iter()
            .map(|a| {
                let c = Rat::from_int(2) / dot(a, a);
                a.iter().map(|x| x * &c).collect()
            })
            .collect();
        let kind = match self.kind {
            RootType::B => RootType::C,
            RootType::C => RootType::B,
            k => k,
        };
        RootSystem::from_simple(kind, simple)
    }

    /// Reflection in the hyperplane orthogonal to `v`, as a rational matrix
    /// acting on ambient coordinates.
    pub fn reflection_matrix(v: &[Rat]) -> CycMatrix {
        let n = v.len();
        let vv = dot(v, v);
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let delta = if i == j { Rat::ONE } else { Rat::ZERO };
                entries.push(delta - Rat::from_int(2) * &v[i] * &v[j] / vv.clone());
            }
        }
        CycMatrix::from_rats(n, &entries, 1)
    }

    /// Simple reflections acting on ambient coordinates.
    pub fn simple_reflection_matrices(&self) -> Vec<CycMatrix> {
        self.simple.iter().map(|a| RootSystem::reflection_matrix(a)).collect()
    }
}

/// Builds a root system of type A_n, B_n, C_n, D_n (3 ≤ n ≤ 8), E6–E8, F4 or G2.
pub fn build_root_system(kind: RootType, rank: usize) -> Result<RootSystem, RootSystemError> {
    Ok(RootSystem::from_simple(kind, simple_roots(kind, rank)?))
}

/// Ht(α) = Σ a_i w(α_i).
pub fn weighted_height(root: &Root, sys: &RootSystem) -> u32 {
    root.coeffs.iter().enumerate().map(|(i, a)| *a as u32 * sys.simple_weight(i)).sum()
}

/// Conjugate partition of a multiset of positive heights, ascending.
pub fn dual_partition(heights: &[i64]) -> Vec<u32> {
    let max = heights.iter().copied().max().unwrap_or(0);
    // m_k = number of heights equal to k; the parts are #{k : m_k ≥ j}.
    let counts: Vec<usize> = (1..=max).map(|k| heights.iter().filter(|&&h| h == k).count()).collect();
    let top = counts.iter().copied().max().unwrap_or(0);
    let mut parts: Vec<u32> = (1..=top).map(|j| counts.iter().filter(|&&c| c >= j).count() as u32).collect();
    parts.sort_unstable();
    parts
}

/// Exponents as the partition dual to the heights of the positive roots.
pub fn exponents_from_heights(sys: &RootSystem) -> Vec<u32> {
    let h: Vec<i64> = sys.positive_roots().iter().map(Root::height).collect();
    dual_partition(&h)
}

/// Short exponents: the partition dual to the heights of the short roots of the dual system.
pub fn short_exponents(sys: &RootSystem) -> Result<Vec<u32>, RootSystemError> {
    if sys.length_ratio() == 1 {
        return Err(RootSystemError::SimplyLaced(sys.label()));
    }
    let dual = sys.dual();
    let h: Vec<i64> = dual.positive_roots().iter().filter(|r| r.weight == 1).map(Root::height).collect();
    Ok(dual_partition(&h))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c2_roots() {
        let c2 = build_root_system(RootType::C, 2).unwrap();
        let roots: Vec<(Vec<i64>, u32)> = c2.positive_roots().iter().map(|r| (r.coeffs.clone(), r.weight)).collect();
        assert!(roots.contains(&(vec![0, 1], 2)));
        assert!(roots.contains(&(vec![1, 0], 1)));
        assert!(roots.contains(&(vec![1, 1], 1)));
        assert!(roots.contains(&(vec![2, 1], 2)));
        assert_eq!(exponents_from_heights(&c2), vec![1, 3]);
    }

    #[test]
    fn counts_and_exponents() {
        let f4 = build_root_system(RootType::F, 4).unwrap();
        assert_eq!(f4.positive_roots().len(), 24);
        assert_eq!(f4.positive_roots().iter().filter(|r| r.weight == 2).count(), 12);
        assert_eq!(exponents_from_heights(&f4), vec![1, 5, 7, 11]);
        assert_eq!(short_exponents(&f4).unwrap(), vec![4, 8]);
        let g2 = build_root_system(RootType::G, 2).unwrap();
        assert_eq!(g2.length_ratio(), 3);
        assert_eq!(short_exponents(&g2).unwrap(), vec![3]);
        let e6 = build_root_system(RootType::E, 6).unwrap();
        assert_eq!(e6.positive_roots().len(), 36);
        assert_eq!(exponents_from_heights(&e6), vec![1, 4, 5, 7, 8, 11]);
        let a2 = build_root_system(RootType::A, 2).unwrap();
        assert_eq!(exponents_from_heights(&a2), vec![1, 2]);
        assert!(short_exponents(&a2).is_err());
        for n in 2..=5 {
            let b = build_root_system(RootType::B, n).unwrap();
            assert_eq!(b.positive_roots().len(), n * n);
            assert_eq!(short_exponents(&b).unwrap(), (1..n as u32).map(|i| 2 * i).collect::<Vec<_>>());
            let c = build_root_system(RootType::C, n).unwrap();
            assert_eq!(short_exponents(&c).unwrap(), vec![n as u32]);
            assert_eq!(b.coxeter_number(), 2 * n as i64);
        }
    }
}
