//! Elements of cyclotomic fields ℚ(ζ_N), stored as residues modulo Φ_N.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{OnceLock, RwLock};

use num_integer::Integer;

use super::{NumError, Rat};

/// Per-conductor tables, built once and shared for the life of the process.
pub(crate) struct Field {
    pub phi: usize,
    /// Φ_N, monic, coefficients from x^0 up to x^φ.
    pub cyclotomic: Vec<i64>,
    /// `powers[k]` is x^k reduced modulo Φ_N, for `k < max(N, 2φ)`.
    pub powers: Vec<Vec<i64>>,
}

static FIELDS: OnceLock<RwLock<HashMap<u32, &'static Field>>> = OnceLock::new();

/// Returns the cached tables for conductor `n`, building them on first use.
pub(crate) fn field(n: u32) -> &'static Field {
    assert!(n >= 1, "conductor must be positive");
    let cache = FIELDS.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(f) = cache.read().expect("field cache poisoned").get(&n) {
        return f;
    }
    // Build outside the write lock; a concurrent builder may win, which is harmless.
    let built = build_field(n);
    let mut w = cache.write().expect("field cache poisoned");
    w.entry(n).or_insert_with(|| Box::leak(Box::new(built)))
}

/// Φ_N with integer coefficients, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    field(n).cyclotomic.clone()
}

#[cfg(test)]
fn poly_mul_i64(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j]
                .checked_add(x.checked_mul(*y).expect("cyclotomic coefficient overflow"))
                .expect("cyclotomic coefficient overflow");
        }
    }
    out
}

/// Exact division of integer polynomials by a monic divisor.
fn poly_div_exact_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![0i64; num.len() - dd];
    for k in (0..q.len()).rev() {
        let c = rem[k + dd];
        q[k] = c;
        if c != 0 {
            for (j, d) in den.iter().enumerate() {
                rem[k + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|x| *x == 0), "inexact cyclotomic division");
    q
}

fn build_field(n: u32) -> Field {
    // x^N - 1 divided by Φ_d for every proper divisor d.
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = poly_div_exact_monic(&p, &field(d).cyclotomic);
        }
    }
    let phi = p.len() - 1;
    let top = (n as usize).max(2 * phi);
    let mut powers = Vec::with_capacity(top);
    let mut cur = vec![0i64; phi];
    if phi > 0 {
        cur[0] = 1;
    }
    for _ in 0..top {
        powers.push(cur.clone());
        // multiply by x and reduce by the monic Φ_N
        let carry = cur[phi - 1];
        for j in (1..phi).rev() {
            cur[j] = cur[j - 1] - carry * p[j];
        }
        cur[0] = -carry * p[0];
    }
    Field { phi, cyclotomic: p, powers }
}

/// Euler's totient of `n`.
pub fn euler_phi(n: u32) -> usize {
    field(n).phi
}

/// An exact element of ℚ(ζ_N).
///
/// Arithmetic between different conductors first embeds both operands in
/// ℚ(ζ_lcm). Equality is value equality (it embeds when conductors differ);
/// for hashing, first bring values to a common conductor and use
/// [`CycloNum::coeffs`].
#[derive(Clone)]
pub struct CycloNum {
    n: u32,
    c: Vec<Rat>,
}

impl CycloNum {
    pub fn zero(n: u32) -> CycloNum {
        CycloNum { n, c: vec![Rat::ZERO; field(n).phi] }
    }

    pub fn one(n: u32) -> CycloNum {
        CycloNum::from_rat(n, Rat::ONE)
    }

    pub fn from_rat(n: u32, r: Rat) -> CycloNum {
        let mut z = CycloNum::zero(n);
        z.c[0] = r;
        z
    }

    pub fn from_int(n: u32, k: i64) -> CycloNum {
        CycloNum::from_rat(n, Rat::from_int(k))
    }

    /// ζ_N^k, with `k` taken modulo `N`.
    pub fn root_of_unity(n: u32, k: i64) -> CycloNum {
        let f = field(n);
        let k = k.rem_euclid(n as i64) as usize;
        CycloNum { n, c: f.powers[k].iter().map(|x| Rat::from_int(*x)).collect() }
    }

    /// Builds an element from coefficients of powers of ζ_N (any length; reduced).
    pub fn from_power_coeffs(n: u32, coeffs: &[Rat]) -> CycloNum {
        let f = field(n);
        let mut out = vec![Rat::ZERO; f.phi];
        for (k, a) in coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let row = &f.powers[k % n as usize];
            for (j, p) in row.iter().enumerate() {
                if *p != 0 {
                    out[j] += a * &Rat::from_int(*p);
                }
            }
        }
        CycloNum { n, c: out }
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    /// Coefficients on 1, ζ, …, ζ^{φ(N)−1}.
    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rat::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Rat::is_zero)
    }

    /// The value as a rational, if it lies in ℚ.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.c[1..].iter().all(Rat::is_zero) {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    /// Image under the inclusion ℚ(ζ_N) → ℚ(ζ_M), ζ_N ↦ ζ_M^{M/N}.
    pub fn embed(&self, m: u32) -> Result<CycloNum, NumError> {
        if m == self.n {
            return Ok(self.clone());
        }
        if !m.is_multiple_of(self.n) {
            return Err(NumError::ConductorMismatch { from: self.n, to: m });
        }
        let step = (m / self.n) as usize;
        let mut spread = vec![Rat::ZERO; step * self.c.len()];
        for (k, a) in self.c.iter().enumerate() {
            spread[k * step] = a.clone();
        }
        Ok(CycloNum::from_power_coeffs(m, &spread))
    }

    fn lift_pair(a: &CycloNum, b: &CycloNum) -> (CycloNum, CycloNum) {
        let m = a.n.lcm(&b.n);
        (a.embed(m).expect("lcm conductor"), b.embed(m).expect("lcm conductor"))
    }

    /// The automorphism ζ ↦ ζ^{-1} (complex conjugation).
    pub fn conj(&self) -> CycloNum {
        let n = self.n as usize;
        let mut spread = vec![Rat::ZERO; n];
        for (k, a) in self.c.iter().enumerate() {
            spread[(n - k) % n] = a.clone();
        }
        CycloNum::from_power_coeffs(self.n, &spread)
    }

    fn mul_same(&self, other: &CycloNum) -> CycloNum {
        let f = field(self.n);
        if let Some(r) = self.as_rat() {
            return other.scale(&r);
        }
        if let Some(r) = other.as_rat() {
            return self.scale(&r);
        }
        let mut full = vec![Rat::ZERO; 2 * f.phi - 1];
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.c.iter().enumerate() {
                if !y.is_zero() {
                    full[i + j] += x * y;
                }
            }
        }
        let mut out: Vec<Rat> = full[..f.phi].to_vec();
        for (k, a) in full.iter().enumerate().skip(f.phi) {
            if a.is_zero() {
                continue;
            }
            for (j, p) in f.powers[k].iter().enumerate() {
                if *p != 0 {
                    out[j] += a * &Rat::from_int(*p);
                }
            }
        }
        CycloNum { n: self.n, c: out }
    }

    pub fn scale(&self, r: &Rat) -> CycloNum {
        CycloNum { n: self.n, c: self.c.iter().map(|x| x * r).collect() }
    }

    /// Multiplicative inverse via the extended gcd of the representative and Φ_N.
    pub fn inv(&self) -> Result<CycloNum, NumError> {
        if self.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        if let Some(r) = self.as_rat() {
            return Ok(CycloNum::from_rat(self.n, r.recip()?));
        }
        let f = field(self.n);
        let phi: Vec<Rat> = f.cyclotomic.iter().map(|x| Rat::from_int(*x)).collect();
        let s = poly::inverse_mod(&self.c, &phi).ok_or(NumError::DivisionByZero)?;
        Ok(CycloNum::from_power_coeffs(self.n, &s))
    }

    pub fn checked_div(&self, other: &CycloNum) -> Result<CycloNum, NumError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<CycloNum, NumError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = CycloNum::one(self.n);
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            k >>= 1;
        }
        Ok(acc)
    }

    /// If the value is a root of unity ζ_N^k (with the element's own conductor N), returns k.
    pub fn root_of_unity_exponent(&self) -> Option<u32> {
        (0..self.n).find(|k| *self == CycloNum::root_of_unity(self.n, *k as i64))
    }

    /// Numerical value as (re, im) via ζ_N = exp(2πi/N).
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, a) in self.c.iter().enumerate() {
            let t = 2.0 * std::f64::consts::PI * k as f64 / self.n as f64;
            re += a.to_f64() * t.cos();
            im += a.to_f64() * t.sin();
        }
        (re, im)
    }

    /// Parses expressions like `1/2*z^3 - z^5 + 1` (any power of `z`, reduced mod Φ_N).
    pub fn parse(n: u32, s: &str) -> Result<CycloNum, NumError> {
        let bad = |msg: &str| NumError::Parse(format!("{msg} in {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty expression"));
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !cur.is_empty() {
                terms.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            } else if (ch == '+' || ch == '-') && cur.is_empty() {
                if ch == '-' {
                    neg = !neg;
                }
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(bad("dangling sign"));
        }
        terms.push((neg, cur));
        let mut coeffs = vec![Rat::ZERO; n as usize];
        for (neg, t) in terms {
            let (coef, power) = match t.find('z') {
                None => (t.parse::<Rat>()?, 0usize),
                Some(pos) => {
                    let head = t[..pos].trim_end_matches('*');
                    let coef = if head.is_empty() { Rat::ONE } else { head.parse::<Rat>()? };
                    let tail = &t[pos + 1..];
                    let power = if tail.is_empty() {
                        1
                    } else {
                        let e = tail.strip_prefix('^').ok_or_else(|| bad("expected ^"))?;
                        e.parse::<usize>().map_err(|_| bad("bad exponent"))?
                    };
                    (coef, power)
                }
            };
            let coef = if neg { -coef } else { coef };
            coeffs[power % n as usize] += coef;
        }
        Ok(CycloNum::from_power_coeffs(n, &coeffs))
    }
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &CycloNum) -> bool {
        if self.n == other.n {
            return self.c == other.c;
        }
        let (a, b) = CycloNum::lift_pair(self, other);
        a.c == b.c
    }
}

impl Eq for CycloNum {}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let neg = a.is_negative();
            let mag = a.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{mag}*z")?,
                (_, true) => write!(f, "z^{k}")?,
                (_, false) => write!(f, "{mag}*z^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]_{}", self, self.n)
    }
}

impl Add<&CycloNum> for &CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &CycloNum) -> CycloNum {
        if self.n != rhs.n {
            let (a, b) = CycloNum::lift_pair(self, rhs);
            return &a + &b;
        }
        CycloNum { n: self.n, c: self.c.iter().zip(&rhs.c).map(|(x, y)| x + y).collect() }
    }
}

impl Sub<&CycloNum> for &CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &CycloNum) -> CycloNum {
        if self.n != rhs.n {
            let (a, b) = CycloNum::lift_pair(self, rhs);
            return &a - &b;
        }
        CycloNum { n: self.n, c: self.c.iter().zip(&rhs.c).map(|(x, y)| x - y).collect() }
    }
}

impl Mul<&CycloNum> for &CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &CycloNum) -> CycloNum {
        if self.n != rhs.n {
            let (a, b) = CycloNum::lift_pair(self, rhs);
            return a.mul_same(&b);
        }
        self.mul_same(rhs)
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum { n: self.n, c: self.c.iter().map(|x| -x).collect() }
    }
}

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -&self
    }
}

macro_rules! forward_cyc {
    ($tr:ident, $m:ident, $atr:ident, $am:ident) => {
        impl $tr<CycloNum> for CycloNum {
            type Output = CycloNum;
            fn $m(self, rhs: CycloNum) -> CycloNum {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&CycloNum> for CycloNum {
            type Output = CycloNum;
            fn $m(self, rhs: &CycloNum) -> CycloNum {
                (&self).$m(rhs)
            }
        }
        impl $atr<&CycloNum> for CycloNum {
            fn $am(&mut self, rhs: &CycloNum) {
                *self = (&*self).$m(rhs);
            }
        }
    };
}

forward_cyc!(Add, add, AddAssign, add_assign);
forward_cyc!(Sub, sub, SubAssign, sub_assign);
forward_cyc!(Mul, mul, MulAssign, mul_assign);

/// JSON form `{"N": n, "coeffs": ["num/den", ...]}`.
#[derive(serde::Serialize, serde::Deserialize)]
struct CycloRepr {
    #[serde(rename = "N")]
    n: u32,
    coeffs: Vec<Rat>,
}

impl serde::Serialize for CycloNum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CycloRepr { n: self.n, coeffs: self.c.clone() }.serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for CycloNum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<CycloNum, D::Error> {
        let r = CycloRepr::deserialize(d)?;
        if r.n == 0 || r.coeffs.len() != euler_phi(r.n) {
            return Err(serde::de::Error::custom("coefficient count does not match conductor"));
        }
        Ok(CycloNum { n: r.n, c: r.coeffs })
    }
}

/// Dense polynomial helpers over ℚ (lowest degree first).
pub(crate) mod poly {
    use super::Rat;

    pub fn trim(p: &mut Vec<Rat>) {
        while p.len() > 1 && p.last().is_some_and(Rat::is_zero) {
            p.pop();
        }
        if p.is_empty() {
            p.push(Rat::ZERO);
        }
    }

    fn is_zero(p: &[Rat]) -> bool {
        p.iter().all(Rat::is_zero)
    }

    pub fn divrem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
        let mut b = b.to_vec();
        trim(&mut b);
        let mut r = a.to_vec();
        trim(&mut r);
        let db = b.len() - 1;
        let lead = b[db].clone();
        if r.len() < b.len() {
            return (vec![Rat::ZERO], r);
        }
        let mut q = vec![Rat::ZERO; r.len() - db];
        for k in (0..q.len()).rev() {
            let c = &r[k + db] / &lead;
            if !c.is_zero() {
                for (j, bj) in b.iter().enumerate() {
                    r[k + j] -= &c * bj;
                }
            }
            q[k] = c;
        }
        r.truncate(db.max(1));
        trim(&mut r);
        (q, r)
    }

    fn sub_mul(a: &[Rat], q: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let mut out = a.to_vec();
        let len = (q.len() + b.len()).saturating_sub(1).max(out.len());
        out.resize(len, Rat::ZERO);
        for (i, x) in q.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] -= x * y;
            }
        }
        trim(&mut out);
        out
    }

    /// `s` with `s·a ≡ 1 (mod m)`, or `None` if `gcd(a, m) ≠ 1`.
    pub fn inverse_mod(a: &[Rat], m: &[Rat]) -> Option<Vec<Rat>> {
        let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
        trim(&mut r0);
        trim(&mut r1);
        let (mut s0, mut s1) = (vec![Rat::ZERO], vec![Rat::ONE]);
        while !is_zero(&r1) {
            let (q, r) = divrem(&r0, &r1);
            let s2 = sub_mul(&s0, &q, &s1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        if r0.len() != 1 {
            return None;
        }
        let c = r0[0].recip().ok()?;
        Some(s0.iter().map(|x| x * &c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> CycloNum {
        CycloNum::root_of_unity(n, k)
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(60), 16);
    }

    #[test]
    fn divisor_product_is_x_pow_n_minus_one() {
        for n in 1..=120u32 {
            let mut prod = vec![1i64];
            for d in (1..=n).filter(|d| n % d == 0) {
                prod = poly_mul_i64(&prod, &cyclotomic_polynomial(d));
            }
            let mut expected = vec![0i64; n as usize + 1];
            expected[0] = -1;
            expected[n as usize] = 1;
            assert_eq!(prod, expected, "conductor {n}");
        }
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(z(2, 1), CycloNum::from_int(2, -1));
        assert!((z(3, 0) + z(3, 1) + z(3, 2)).is_zero());
        assert_eq!(&z(4, 1) * &z(4, 1), CycloNum::from_int(4, -1));
        assert!((&z(5, 1) * &z(5, 4)).is_one());
        assert_eq!(z(7, -1), z(7, 6));
    }

    #[test]
    fn hand_checked_products() {
        let a = CycloNum::one(3) + z(3, 1);
        let b = CycloNum::one(3) + z(3, 2);
        assert!((&a * &b).is_one());
        assert_eq!(z(3, 1).embed(6).unwrap(), z(6, 2));
        assert_eq!(z(3, 1), z(6, 2));
    }

    #[test]
    fn conjugation() {
        assert_eq!(z(8, 1).conj(), z(8, 7));
        assert_eq!(CycloNum::from_int(5, -1).conj(), CycloNum::from_int(5, -1));
        assert_eq!((CycloNum::one(3) + z(3, 1)).conj(), CycloNum::one(3) + z(3, 2));
    }

    #[test]
    fn inverse_and_division() {
        let golden = CycloNum::one(5) + z(5, 1) + z(5, 4);
        let inv = golden.inv().unwrap();
        assert!((&golden * &inv).is_one());
        // φ - 1 = 1/φ
        assert_eq!(inv, &golden - &CycloNum::one(5));
        assert_eq!(CycloNum::zero(7).inv(), Err(NumError::DivisionByZero));
    }

    #[test]
    fn parse_and_display_round_trip() {
        let x = CycloNum::parse(12, "1/2*z^3 - z^5 + 1").unwrap();
        assert_eq!(CycloNum::parse(12, &x.to_string()).unwrap(), x);
        assert_eq!(CycloNum::parse(4, "z^2").unwrap(), CycloNum::from_int(4, -1));
        assert_eq!(CycloNum::parse(4, "-z").unwrap().to_string(), "-z");
        assert!(CycloNum::parse(4, "2*y").is_err());
    }

    #[test]
    fn json_round_trip() {
        let x = CycloNum::parse(24, "3/7*z^5 - 2").unwrap();
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(serde_json::from_str::<CycloNum>(&s).unwrap(), x);
        assert!(serde_json::from_str::<CycloNum>(r#"{"N":5,"coeffs":["1"]}"#).is_err());
    }

    #[test]
    fn numeric_value() {
        let (re, im) = z(8, 1).to_complex();
        assert!((re - 0.5f64.sqrt()).abs() < 1e-12 && (im - 0.5f64.sqrt()).abs() < 1e-12);
    }
}
