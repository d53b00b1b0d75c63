//! Bivariate integer polynomials in `x` and `y`.

use std::collections::BTreeMap;
use std::fmt;

/// A finitely supported polynomial Σ c_{ij} x^i y^j with `i64` coefficients.
///
/// Zero coefficients are never stored. Overflow panics; every polynomial we
/// build has coefficients bounded by a group order.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), i64>,
}

impl BiPoly {
    pub fn zero() -> BiPoly {
        BiPoly::default()
    }

    pub fn one() -> BiPoly {
        BiPoly::monomial(1, 0, 0)
    }

    pub fn monomial(c: i64, i: u32, j: u32) -> BiPoly {
        let mut p = BiPoly::zero();
        p.add_term(c, i, j);
        p
    }

    /// `c0 + a x + b y`.
    pub fn linear(c0: i64, a: i64, b: i64) -> BiPoly {
        let mut p = BiPoly::monomial(c0, 0, 0);
        p.add_term(a, 1, 0);
        p.add_term(b, 0, 1);
        p
    }

    pub fn add_term(&mut self, c: i64, i: u32, j: u32) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert(0);
        *e = e.checked_add(c).expect("bivariate coefficient overflow");
        if *e == 0 {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> i64 {
        self.terms.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero terms `((i, j), c)` in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), i64)> + '_ {
        self.terms.iter().map(|(k, v)| (*k, *v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    pub fn add(&self, o: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for ((i, j), c) in o.terms() {
            out.add_term(c, i, j);
        }
        out
    }

    pub fn sub(&self, o: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for ((i, j), c) in o.terms() {
            out.add_term(-c, i, j);
        }
        out
    }

    pub fn mul(&self, o: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for ((i1, j1), c1) in self.terms() {
            for ((i2, j2), c2) in o.terms() {
                out.add_term(c1.checked_mul(c2).expect("bivariate coefficient overflow"), i1 + i2, j1 + j2);
            }
        }
        out
    }

    pub fn neg(&self) -> BiPoly {
        BiPoly { terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect() }
    }

    /// Product of `1 + a x + b y` (or `c0 + …`) factors.
    pub fn product_of_linear(factors: &[(i64, i64, i64)]) -> BiPoly {
        factors.iter().fold(BiPoly::one(), |acc, (c0, a, b)| acc.mul(&BiPoly::linear(*c0, *a, *b)))
    }

    /// The univariate polynomial obtained by substituting `x := y`,
    /// as coefficients from degree 0 upward.
    pub fn diagonal(&self) -> Vec<i64> {
        let d = self.total_degree().unwrap_or(0) as usize;
        let mut out = vec![0i64; d + 1];
        for ((i, j), c) in self.terms() {
            out[(i + j) as usize] += c;
        }
        while out.len() > 1 && out.last() == Some(&0) {
            out.pop();
        }
        out
    }

    /// Exact quotient by `1 + a x + b y`, or `None` if it does not divide.
    pub fn div_linear(&self, a: i64, b: i64) -> Option<BiPoly> {
        let d = self.total_degree()?;
        if d == 0 {
            return None;
        }
        // Solve q (1 + a x + b y) = p degree by degree.
        let mut q = BiPoly::zero();
        for t in 0..d {
            for i in 0..=t {
                let j = t - i;
                let mut c = self.coeff(i, j);
                if i > 0 {
                    c -= a.checked_mul(q.coeff(i - 1, j))?;
                }
                if j > 0 {
                    c -= b.checked_mul(q.coeff(i, j - 1))?;
                }
                q.add_term(c, i, j);
            }
        }
        if q.mul(&BiPoly::linear(1, a, b)) == *self {
            Some(q)
        } else {
            None
        }
    }

    /// Formats a product of linear factors, e.g. `(1+2x+y)(1+y)`.
    pub fn format_factors(factors: &[(i64, i64)]) -> String {
        factors
            .iter()
            .map(|(a, b)| format!("({})", BiPoly::linear(1, *a, *b).format_linear()))
            .collect()
    }

    /// `1+ax+by` with constant first and `x` before `y`.
    fn format_linear(&self) -> String {
        let mut out = String::new();
        for (c, mono) in [(self.coeff(0, 0), ""), (self.coeff(1, 0), "x"), (self.coeff(0, 1), "y")] {
            push_term(&mut out, c, mono);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

fn push_term(out: &mut String, c: i64, mono: &str) {
    if c == 0 {
        return;
    }
    if c < 0 {
        out.push('-');
    } else if !out.is_empty() {
        out.push('+');
    }
    let mag = c.unsigned_abs();
    if mag != 1 || mono.is_empty() {
        out.push_str(&mag.to_string());
    }
    out.push_str(mono);
}

fn monomial_text(i: u32, j: u32) -> String {
    let var = |v: &str, e: u32| match e {
        0 => String::new(),
        1 => v.to_string(),
        _ => format!("{v}^{e}"),
    };
    format!("{}{}", var("x", i), var("y", j))
}

impl fmt::Display for BiPoly {
    /// Graded order: total degree ascending; within a degree, mixed monomials
    /// before pure powers (the more balanced first), and `y` before `x` on ties.
    /// `1+2y+2x+2xy+y^2` is printed in that order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<(u32, u32)> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(i, j)| (i + j, i.abs_diff(j), std::cmp::Reverse(j)));
        let mut out = String::new();
        for (i, j) in keys {
            push_term(&mut out, self.coeff(i, j), &monomial_text(i, j));
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

/// Writes `p` as `±∏(1 + a_i x + b_i y)` with integer `a_i, b_i`, if possible.
///
/// Returns the factors sorted in decreasing order and the overall sign (the
/// constant term), or `None` when no such factorization exists. Candidate
/// coefficients are bounded by the absolute degree-one coefficients of `p`.
pub fn factor_bivariate_linear(p: &BiPoly) -> Option<(i64, Vec<(i64, i64)>)> {
    let sign = p.coeff(0, 0);
    if sign != 1 && sign != -1 {
        return None;
    }
    let p = if sign == -1 { p.neg() } else { p.clone() };
    let k = p.total_degree()? as usize;
    if k == 0 {
        return Some((sign, Vec::new()));
    }
    let bound = p.coeff(1, 0).abs() + p.coeff(0, 1).abs();
    let xs = univariate_linear_roots(&p, true, bound, k)?;
    let ys = univariate_linear_roots(&p, false, bound, k)?;
    let mut factors = Vec::with_capacity(k);
    if pair_up(&p, &xs, &ys, &mut factors) {
        factors.sort_unstable_by(|a, b| b.cmp(a));
        Some((sign, factors))
    } else {
        None
    }
}

/// The multiset {a_i} with p(x, 0) = ∏(1 + a_i x) (or p(0, y)), padded with zeros to `k`.
fn univariate_linear_roots(p: &BiPoly, along_x: bool, bound: i64, k: usize) -> Option<Vec<i64>> {
    let mut rest = BiPoly::zero();
    for ((i, j), c) in p.terms() {
        if along_x && j == 0 {
            rest.add_term(c, i, 0);
        } else if !along_x && i == 0 {
            rest.add_term(c, 0, j);
        }
    }
    let mut roots = Vec::new();
    let mut cand = -bound;
    while rest.total_degree()? > 0 && cand <= bound {
        if cand == 0 {
            cand += 1;
            continue;
        }
        let (a, b) = if along_x { (cand, 0) } else { (0, cand) };
        match rest.div_linear(a, b) {
            Some(q) => {
                rest = q;
                roots.push(cand);
            }
            None => cand += 1,
        }
    }
    if rest != BiPoly::one() || roots.len() > k {
        return None;
    }
    roots.resize(k, 0);
    Some(roots)
}

fn pair_up(p: &BiPoly, xs: &[i64], ys: &[i64], acc: &mut Vec<(i64, i64)>) -> bool {
    if xs.is_empty() {
        return *p == BiPoly::one();
    }
    let a = xs[0];
    let mut tried = Vec::new();
    for (idx, &b) in ys.iter().enumerate() {
        if tried.contains(&b) {
            continue;
        }
        tried.push(b);
        if let Some(q) = p.div_linear(a, b) {
            let mut rest_y = ys.to_vec();
            rest_y.remove(idx);
            acc.push((a, b));
            if pair_up(&q, &xs[1..], &rest_y, acc) {
                return true;
            }
            acc.pop();
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse_factors(f: &[(i64, i64)]) -> BiPoly {
        BiPoly::product_of_linear(&f.iter().map(|(a, b)| (1, *a, *b)).collect::<Vec<_>>())
    }

    #[test]
    fn display_order_matches_worked_example() {
        let p = parse_factors(&[(2, 1), (0, 1)]);
        assert_eq!(p.to_string(), "1+2y+2x+2xy+y^2");
        let s = parse_factors(&[(-2, -1), (0, -1)]);
        assert_eq!(s.to_string(), "1-2y-2x+2xy+y^2");
        assert_eq!(BiPoly::format_factors(&[(2, 1), (0, 1)]), "(1+2x+y)(1+y)");
        assert_eq!(BiPoly::format_factors(&[(-2, -1), (0, -1)]), "(1-2x-y)(1-y)");
    }

    #[test]
    fn factoring() {
        let p = parse_factors(&[(2, 1), (0, 1)]);
        assert_eq!(factor_bivariate_linear(&p), Some((1, vec![(2, 1), (0, 1)])));
        let q = BiPoly::linear(1, 1, 0).mul(&BiPoly::linear(1, 0, 1));
        assert_eq!(factor_bivariate_linear(&q), Some((1, vec![(1, 0), (0, 1)])));
        assert_eq!(factor_bivariate_linear(&BiPoly::linear(1, 1, 1)), Some((1, vec![(1, 1)])));
        // 1 + x + y + x y^2 is not a product of linear factors
        let mut r = BiPoly::linear(1, 1, 1);
        r.add_term(1, 1, 2);
        assert_eq!(factor_bivariate_linear(&r), None);
        let g13 = parse_factors(&[(8, 3), (4, 3)]);
        assert_eq!(factor_bivariate_linear(&g13), Some((1, vec![(8, 3), (4, 3)])));
        let neg = parse_factors(&[(0, -1), (-3, -2)]).neg();
        assert_eq!(factor_bivariate_linear(&neg), Some((-1, vec![(0, -1), (-3, -2)])));
    }

    #[test]
    fn diagonal_substitution() {
        let p = parse_factors(&[(2, 1), (0, 1)]);
        // (1+3y)(1+y) at x = y
        assert_eq!(p.diagonal(), vec![1, 4, 3]);
    }
}
