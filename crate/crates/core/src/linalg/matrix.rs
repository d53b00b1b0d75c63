//! Square matrices over a cyclotomic field.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::exactnum::{CycloNum, NumError, Rat};
use crate::series::poly::reciprocal_series_cyc;

/// An `n×n` matrix whose entries all live in ℚ(ζ_N) for one conductor `N`.
///
/// Equality and hashing are structural (conductor plus coefficient vectors),
/// which is value equality because entries are canonical and share `N`.
#[derive(Clone)]
pub struct CycMatrix {
    n: usize,
    conductor: u32,
    e: Vec<CycloNum>,
}

impl CycMatrix {
    pub fn identity(n: usize, conductor: u32) -> CycMatrix {
        let mut m = CycMatrix::zero(n, conductor);
        for i in 0..n {
            m.e[i * n + i] = CycloNum::one(conductor);
        }
        m
    }

    pub fn zero(n: usize, conductor: u32) -> CycMatrix {
        CycMatrix { n, conductor, e: vec![CycloNum::zero(conductor); n * n] }
    }

    /// Builds from rows, embedding every entry into `conductor`.
    pub fn from_rows(rows: Vec<Vec<CycloNum>>, conductor: u32) -> Result<CycMatrix, NumError> {
        let n = rows.len();
        let mut e = Vec::with_capacity(n * n);
        for r in rows {
            if r.len() != n {
                return Err(NumError::Parse(format!("row of length {} in a {n}x{n} matrix", r.len())));
            }
            for x in r {
                e.push(x.embed(conductor)?);
            }
        }
        Ok(CycMatrix { n, conductor, e })
    }

    /// Integer matrix given row-major.
    pub fn from_ints(n: usize, entries: &[i64], conductor: u32) -> CycMatrix {
        assert_eq!(entries.len(), n * n);
        CycMatrix { n, conductor, e: entries.iter().map(|x| CycloNum::from_int(conductor, *x)).collect() }
    }

    pub fn from_rats(n: usize, entries: &[Rat], conductor: u32) -> CycMatrix {
        assert_eq!(entries.len(), n * n);
        CycMatrix { n, conductor, e: entries.iter().map(|x| CycloNum::from_rat(conductor, x.clone())).collect() }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn get(&self, i: usize, j: usize) -> &CycloNum {
        &self.e[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycloNum) {
        self.e[i * self.n + j] = v.embed(self.conductor).expect("entry conductor must divide matrix conductor");
    }

    pub fn rows(&self) -> Vec<Vec<CycloNum>> {
        self.e.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn embed(&self, conductor: u32) -> Result<CycMatrix, NumError> {
        Ok(CycMatrix {
            n: self.n,
            conductor,
            e: self.e.iter().map(|x| x.embed(conductor)).collect::<Result<_, _>>()?,
        })
    }

    pub fn mul(&self, o: &CycMatrix) -> CycMatrix {
        assert_eq!(self.n, o.n, "dimension mismatch");
        let cond = if self.conductor == o.conductor {
            self.conductor
        } else {
            num_integer::lcm(self.conductor, o.conductor)
        };
        let n = self.n;
        let mut e = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = CycloNum::zero(cond);
                for k in 0..n {
                    let a = &self.e[i * n + k];
                    if a.is_zero() {
                        continue;
                    }
                    let b = &o.e[k * n + j];
                    if !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                e.push(acc.embed(cond).expect("common conductor"));
            }
        }
        CycMatrix { n, conductor: cond, e }
    }

    pub fn sub(&self, o: &CycMatrix) -> CycMatrix {
        let cond = num_integer::lcm(self.conductor, o.conductor);
        CycMatrix {
            n: self.n,
            conductor: cond,
            e: self.e.iter().zip(&o.e).map(|(a, b)| (a - b).embed(cond).expect("common conductor")).collect(),
        }
    }

    pub fn minus_identity(&self) -> CycMatrix {
        let mut m = self.clone();
        for i in 0..self.n {
            m.e[i * self.n + i] = &m.e[i * self.n + i] - &CycloNum::one(self.conductor);
        }
        m
    }

    pub fn is_identity(&self) -> bool {
        *self == CycMatrix::identity(self.n, self.conductor)
    }

    pub fn transpose(&self) -> CycMatrix {
        let n = self.n;
        let mut e = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                e.push(self.e[j * n + i].clone());
            }
        }
        CycMatrix { n, conductor: self.conductor, e }
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> CycMatrix {
        CycMatrix { n: self.n, conductor: self.conductor, e: self.e.iter().map(CycloNum::conj).collect() }
    }

    pub fn trace(&self) -> CycloNum {
        (0..self.n).fold(CycloNum::zero(self.conductor), |acc, i| &acc + &self.e[i * self.n + i])
    }

    /// Rank by fraction-free (Bareiss) elimination, pivoting on the first nonzero entry.
    pub fn rank(&self) -> usize {
        let n = self.n;
        let mut a = self.e.clone();
        let mut prev = CycloNum::one(self.conductor);
        let mut row = 0;
        for col in 0..n {
            let Some(p) = (row..n).find(|&r| !a[r * n + col].is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..n {
                    a.swap(p * n + j, row * n + j);
                }
            }
            let piv = a[row * n + col].clone();
            for r in row + 1..n {
                let f = a[r * n + col].clone();
                for j in col..n {
                    let v = &(&piv * &a[r * n + j]) - &(&f * &a[row * n + j]);
                    a[r * n + j] = v.checked_div(&prev).expect("Bareiss pivot is nonzero");
                }
            }
            prev = piv;
            row += 1;
            if row == n {
                break;
            }
        }
        row
    }

    /// Determinant by Bareiss elimination (all divisions exact).
    pub fn det(&self) -> CycloNum {
        let n = self.n;
        if n == 0 {
            return CycloNum::one(self.conductor);
        }
        let mut a = self.e.clone();
        let mut prev = CycloNum::one(self.conductor);
        let mut sign = false;
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a[r * n + k].is_zero()) else {
                return CycloNum::zero(self.conductor);
            };
            if p != k {
                for j in 0..n {
                    a.swap(p * n + j, k * n + j);
                }
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &(&a[k * n + k] * &a[i * n + j]) - &(&a[i * n + k] * &a[k * n + j]);
                    a[i * n + j] = v.checked_div(&prev).expect("Bareiss pivot is nonzero");
                }
            }
            prev = a[k * n + k].clone();
        }
        let d = a[n * n - 1].clone();
        if sign {
            -d
        } else {
            d
        }
    }

    /// Inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<CycMatrix, NumError> {
        let n = self.n;
        let mut a = self.e.clone();
        let mut inv = CycMatrix::identity(n, self.conductor).e;
        for col in 0..n {
            let p = (col..n).find(|&r| !a[r * n + col].is_zero()).ok_or(NumError::DivisionByZero)?;
            if p != col {
                for j in 0..n {
                    a.swap(p * n + j, col * n + j);
                    inv.swap(p * n + j, col * n + j);
                }
            }
            let pinv = a[col * n + col].inv()?;
            for j in 0..n {
                a[col * n + j] = &a[col * n + j] * &pinv;
                inv[col * n + j] = &inv[col * n + j] * &pinv;
            }
            for r in 0..n {
                if r == col || a[r * n + col].is_zero() {
                    continue;
                }
                let f = a[r * n + col].clone();
                for j in 0..n {
                    a[r * n + j] = &a[r * n + j] - &(&f * &a[col * n + j]);
                    inv[r * n + j] = &inv[r * n + j] - &(&f * &inv[col * n + j]);
                }
            }
        }
        Ok(CycMatrix { n, conductor: self.conductor, e: inv })
    }

    /// Coefficients of det(𝟙 − q·M), from q^0 up to q^n (Faddeev–LeVerrier).
    pub fn char_poly_reversed(&self) -> Vec<CycloNum> {
        let n = self.n;
        let cond = self.conductor;
        // det(λ − M) = Σ c_k λ^k with c_n = 1; det(1 − qM) = Σ c_{n-k} q^k.
        let mut c = vec![CycloNum::zero(cond); n + 1];
        c[n] = CycloNum::one(cond);
        let mut mk = CycMatrix::zero(n, cond);
        for k in 1..=n {
            // M_k = M·M_{k−1} + c_{n−k+1} I; c_{n−k} = −tr(M·M_k)/k
            let mut next = self.mul(&mk);
            for i in 0..n {
                next.e[i * n + i] = &next.e[i * n + i] + &c[n - k + 1];
            }
            mk = next;
            let tr = self.mul(&mk).trace();
            c[n - k] = -tr.scale(&Rat::new(1, k as i64));
        }
        c.reverse();
        c
    }

    /// The series 1/det(𝟙 − q·M) up to and including q^order.
    pub fn char_series(&self, order: usize) -> Vec<CycloNum> {
        reciprocal_series_cyc(&self.char_poly_reversed(), order)
    }

    /// Canonical comparison key: entries in row-major order, coefficient-wise.
    fn cmp_entries(&self, o: &CycMatrix) -> Ordering {
        (self.n, self.conductor).cmp(&(o.n, o.conductor)).then_with(|| {
            for (a, b) in self.e.iter().zip(&o.e) {
                let ord = a.coeffs().cmp(b.coeffs());
                if ord != Ordering::Equal {
                    return ord;
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialEq for CycMatrix {
    fn eq(&self, o: &CycMatrix) -> bool {
        self.n == o.n && self.conductor == o.conductor && self.e.iter().zip(&o.e).all(|(a, b)| a.coeffs() == b.coeffs())
    }
}

impl Eq for CycMatrix {}

impl Hash for CycMatrix {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.n.hash(h);
        self.conductor.hash(h);
        for x in &self.e {
            x.coeffs().hash(h);
        }
    }
}

impl Ord for CycMatrix {
    fn cmp(&self, o: &CycMatrix) -> Ordering {
        self.cmp_entries(o)
    }
}

impl PartialOrd for CycMatrix {
    fn partial_cmp(&self, o: &CycMatrix) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Debug for CycMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.e.chunks(self.n).enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", cells.join(", "))?;
        }
        write!(f, "]_{}", self.conductor)
    }
}

impl serde::Serialize for CycMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> CycloNum {
        CycloNum::root_of_unity(n, k)
    }

    fn ints(s: &[CycloNum]) -> Vec<i64> {
        s.iter().map(|c| c.as_rat().unwrap().to_i64().unwrap()).collect()
    }

    #[test]
    fn rank_of_small_matrices() {
        let id = CycMatrix::identity(2, 1);
        assert_eq!(id.minus_identity().rank(), 0);
        let s = CycMatrix::from_ints(2, &[-1, 0, 0, 1], 1);
        assert_eq!(s.minus_identity().rank(), 1);
        // st: rotation by 90 degrees
        let st = CycMatrix::from_ints(2, &[0, -1, 1, 0], 1);
        assert_eq!(st.minus_identity().rank(), 2);
    }

    #[test]
    fn determinants() {
        assert!(CycMatrix::identity(3, 5).det().is_one());
        let d = CycMatrix::from_rows(vec![vec![z(3, 1), z(3, 0) - z(3, 0)], vec![CycloNum::zero(3), CycloNum::one(3)]], 3).unwrap();
        assert_eq!(d.det(), z(3, 1));
        let ut = CycMatrix::from_ints(2, &[-1, 0, 0, -1], 1);
        assert!(ut.det().is_one());
        // needs a row swap
        let p = CycMatrix::from_ints(3, &[0, 1, 0, 1, 0, 0, 0, 0, 1], 1);
        assert_eq!(p.det(), CycloNum::from_int(1, -1));
    }

    #[test]
    fn char_series_examples() {
        let id = CycMatrix::identity(2, 1);
        assert_eq!(ints(&id.char_series(2)), vec![1, 2, 3]);
        let refl = CycMatrix::from_ints(2, &[-1, 0, 0, 1], 1);
        assert_eq!(ints(&refl.char_series(2)), vec![1, 0, 1]);
        let mut d = CycMatrix::zero(2, 3);
        d.set(0, 0, z(3, 1));
        d.set(1, 1, z(3, 2));
        assert_eq!(ints(&d.char_series(3)), vec![1, -1, 0, 1]);
    }

    #[test]
    fn inverse_round_trip() {
        let m = CycMatrix::from_rows(
            vec![vec![z(5, 1), CycloNum::one(5)], vec![z(5, 3), z(5, 2) + z(5, 4)]],
            5,
        )
        .unwrap();
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(CycMatrix::zero(2, 1).inverse().is_err());
    }
}
