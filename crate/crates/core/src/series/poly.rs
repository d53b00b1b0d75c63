//! Dense univariate polynomials and truncated power series over ℚ.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::exactnum::{CycloNum, Rat};

use super::SeriesError;

/// A univariate polynomial with rational coefficients, lowest degree first.
///
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients and
/// derived equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    c: Vec<Rat>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Rat::ONE)
    }

    pub fn constant(r: Rat) -> Poly {
        Poly::from_coeffs(vec![r])
    }

    /// `coef * q^k`.
    pub fn monomial(coef: Rat, k: usize) -> Poly {
        let mut c = vec![Rat::ZERO; k + 1];
        c[k] = coef;
        Poly::from_coeffs(c)
    }

    pub fn from_coeffs(mut c: Vec<Rat>) -> Poly {
        while c.last().is_some_and(Rat::is_zero) {
            c.pop();
        }
        Poly { c }
    }

    pub fn from_ints(c: &[i64]) -> Poly {
        Poly::from_coeffs(c.iter().map(|x| Rat::from_int(*x)).collect())
    }

    /// `1 + q + … + q^{k-1}`, the q-integer [k]_q.
    pub fn q_integer(k: usize) -> Poly {
        Poly::from_coeffs(vec![Rat::ONE; k])
    }

    /// `q^k - 1`.
    pub fn q_power_minus_one(k: usize) -> Poly {
        &Poly::monomial(Rat::ONE, k) - &Poly::one()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.c.get(k).cloned().unwrap_or(Rat::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Integer coefficients, if every coefficient is integral and fits `i64`.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.c.iter().map(Rat::to_i64).collect()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.c.iter().rev().fold(Rat::ZERO, |acc, a| &(&acc * x) + a)
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// `self(q^k)`.
    pub fn substitute_power(&self, k: usize) -> Poly {
        let mut c = vec![Rat::ZERO; self.c.len().saturating_sub(1) * k + 1];
        for (i, a) in self.c.iter().enumerate() {
            c[i * k] = a.clone();
        }
        Poly::from_coeffs(c)
    }

    /// Quotient and remainder of polynomial long division.
    pub fn divrem(&self, d: &Poly) -> Result<(Poly, Poly), SeriesError> {
        let dd = d.degree().ok_or(SeriesError::DivisionByZero)?;
        let lead = d.c[dd].clone();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut q = vec![Rat::ZERO; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &lead;
            if !c.is_zero() {
                for (j, b) in d.c.iter().enumerate() {
                    r[k + j] -= &c * b;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((Poly::from_coeffs(q), Poly::from_coeffs(r)))
    }

    /// Exact division; fails if the remainder is nonzero.
    pub fn div_exact(&self, d: &Poly) -> Result<Poly, SeriesError> {
        let (q, r) = self.divrem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(SeriesError::InexactDivision)
        }
    }

    /// The coefficients as a truncated series of order `order`.
    pub fn to_series(&self, order: usize) -> Series {
        Series::from_coeffs(self.c.clone(), order)
    }

    /// Formats with the given variable name, highest degree first (`q^2+2q+1`).
    pub fn display_with(&self, var: &str) -> String {
        if self.c.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for k in (0..self.c.len()).rev() {
            let a = &self.c[k];
            if a.is_zero() {
                continue;
            }
            let neg = a.is_negative();
            let mag = a.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}{mono}"));
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("q"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.c.len().max(rhs.c.len());
        Poly::from_coeffs((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.c.len().max(rhs.c.len());
        Poly::from_coeffs((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Rat::ZERO; self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::from_coeffs(c)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { c: self.c.iter().map(|a| -a).collect() }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

/// A power series known exactly up to and including `q^order`.
#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    c: Vec<Rat>,
    order: usize,
}

impl Series {
    pub fn from_coeffs(mut c: Vec<Rat>, order: usize) -> Series {
        c.resize(order + 1, Rat::ZERO);
        Series { c, order }
    }

    pub fn zero(order: usize) -> Series {
        Series { c: vec![Rat::ZERO; order + 1], order }
    }

    pub fn one(order: usize) -> Series {
        Poly::one().to_series(order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.c.get(k).cloned().unwrap_or(Rat::ZERO)
    }

    /// The same series known to a lower order.
    pub fn truncate(&self, order: usize) -> Series {
        Series::from_coeffs(self.c[..=order.min(self.order)].to_vec(), order.min(self.order))
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from_coeffs(self.c.clone())
    }

    pub fn scale(&self, r: &Rat) -> Series {
        Series { c: self.c.iter().map(|a| a * r).collect(), order: self.order }
    }

    pub fn add(&self, o: &Series) -> Series {
        let order = self.order.min(o.order);
        Series { c: (0..=order).map(|k| &self.c[k] + &o.c[k]).collect(), order }
    }

    pub fn sub(&self, o: &Series) -> Series {
        let order = self.order.min(o.order);
        Series { c: (0..=order).map(|k| &self.c[k] - &o.c[k]).collect(), order }
    }

    pub fn mul(&self, o: &Series) -> Series {
        let order = self.order.min(o.order);
        let mut c = vec![Rat::ZERO; order + 1];
        for (i, a) in self.c.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate().take(order + 1 - i) {
                c[i + j] += a * b;
            }
        }
        Series { c, order }
    }

    pub fn mul_poly(&self, p: &Poly) -> Series {
        self.mul(&p.to_series(self.order))
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inv(&self) -> Result<Series, SeriesError> {
        let c0 = self.c[0].recip().map_err(|_| SeriesError::DivisionByZero)?;
        let mut out = vec![Rat::ZERO; self.order + 1];
        out[0] = c0.clone();
        for k in 1..=self.order {
            let mut acc = Rat::ZERO;
            for j in 1..=k {
                if !self.c[j].is_zero() {
                    acc += &self.c[j] * &out[k - j];
                }
            }
            out[k] = -(&acc * &c0);
        }
        Ok(Series { c: out, order: self.order })
    }

    pub fn div(&self, o: &Series) -> Result<Series, SeriesError> {
        Ok(self.mul(&o.inv()?))
    }

    /// Integer coefficients, if all are integral.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.c.iter().map(Rat::to_i64).collect()
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series({} + O(q^{}))", self.to_poly(), self.order + 1)
    }
}

/// Expansion of `1 / p(q)` to order `order`, for `p` with constant term 1 and
/// cyclotomic coefficients (a Molien summand).
pub fn reciprocal_series_cyc(p: &[CycloNum], order: usize) -> Vec<CycloNum> {
    let n = p[0].conductor();
    debug_assert!(p[0].is_one(), "constant term must be 1");
    let mut out: Vec<CycloNum> = Vec::with_capacity(order + 1);
    out.push(CycloNum::one(n));
    for k in 1..=order {
        let mut acc = CycloNum::zero(n);
        for j in 1..p.len().min(k + 1) {
            if !p[j].is_zero() {
                acc += &(&p[j] * &out[k - j]);
            }
        }
        out.push(-acc);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let p = Poly::from_ints(&[1, 1]);
        let sq = &p * &p;
        assert_eq!(sq, Poly::from_ints(&[1, 2, 1]));
        assert_eq!(sq.to_string(), "q^2+2q+1");
        assert_eq!(Poly::from_ints(&[0, -1, 0, 3]).display_with("x"), "3x^3-x");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let num = Poly::q_power_minus_one(6);
        let den = Poly::q_power_minus_one(2);
        assert_eq!(num.div_exact(&den).unwrap(), Poly::from_ints(&[1, 0, 1, 0, 1]));
        assert_eq!(Poly::q_integer(3).div_exact(&Poly::q_integer(2)), Err(SeriesError::InexactDivision));
    }

    #[test]
    fn series_inverse() {
        // 1/(1-q)^2 = 1 + 2q + 3q^2 + ...
        let s = Poly::from_ints(&[1, -2, 1]).to_series(4).inv().unwrap();
        assert_eq!(s.to_ints().unwrap(), vec![1, 2, 3, 4, 5]);
        assert!(Series::zero(3).inv().is_err());
    }

    #[test]
    fn cyclotomic_reciprocal() {
        // (1 - z q)(1 - z^2 q) with z = ζ_3 is 1 + q + q^2.
        let n = 3;
        let p = vec![CycloNum::one(n), CycloNum::one(n), CycloNum::one(n)];
        let s = reciprocal_series_cyc(&p, 3);
        let ints: Vec<i64> = s.iter().map(|c| c.as_rat().unwrap().to_i64().unwrap()).collect();
        assert_eq!(ints, vec![1, -1, 0, 1]);
    }
}
