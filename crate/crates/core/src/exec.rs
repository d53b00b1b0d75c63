//! Data-parallel helpers with a sequential fallback.
//!
//! Per-element work (statistics, Molien summands, identity sums) goes through
//! [`Strategy`]. Without the `parallel` feature every strategy runs sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    Sequential,
    #[default]
    Parallel,
}

impl Strategy {
    /// `(0..n).map(f)` collected in index order.
    pub fn map<T, F>(self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Strategy::Parallel => (0..n).into_par_iter().map(f).collect(),
            _ => (0..n).map(f).collect(),
        }
    }

    /// Folds `f(i)` for `i < n` into per-chunk accumulators, then merges them.
    ///
    /// `merge` must be associative and commutative with `init()` as identity.
    pub fn fold<A, I, F, M>(self, n: usize, init: I, f: F, merge: M) -> A
    where
        A: Send,
        I: Fn() -> A + Sync + Send,
        F: Fn(&mut A, usize) + Sync + Send,
        M: Fn(A, A) -> A + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Strategy::Parallel => (0..n)
                .into_par_iter()
                .fold(&init, |mut acc, i| {
                    f(&mut acc, i);
                    acc
                })
                .reduce(&init, &merge),
            _ => {
                let mut acc = init();
                for i in 0..n {
                    f(&mut acc, i);
                }
                // one chunk; merging with the identity keeps both arms on the same contract
                merge(init(), acc)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        for s in [Strategy::Sequential, Strategy::Parallel] {
            assert_eq!(s.map(5, |i| i * i), vec![0, 1, 4, 9, 16]);
            assert_eq!(s.fold(1000, || 0u64, |a, i| *a += i as u64, |a, b| a + b), 499_500);
        }
    }
}
