//! Orders of twisted Chevalley groups from the weighted Poincaré data of the
//! folded root system.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow};

use crate::rootsys::{build_root_system, RootType};

use super::{degrees, short_exponents_or_empty, WeylError};

/// A twisted type together with the simply-laced type it folds and the
/// folded type.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChevalleyType {
    /// ²A_{2n−1}, folding to B_n.
    TwistedA(usize),
    /// ²D_{n+1}, folding to C_n.
    TwistedD(usize),
    /// ²E_6, folding to F_4.
    TwistedE6,
    /// ³D_4, folding to G_2.
    Triality,
}

impl fmt::Display for ChevalleyType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChevalleyType::TwistedA(n) => write!(f, "2A{}", 2 * n - 1),
            ChevalleyType::TwistedD(n) => write!(f, "2D{}", n + 1),
            ChevalleyType::TwistedE6 => write!(f, "2E6"),
            ChevalleyType::Triality => write!(f, "3D4"),
        }
    }
}

/// A root system type and rank.
pub type TypeRank = (RootType, usize);

impl ChevalleyType {
    /// The simply-laced type X and the folded type Y.
    pub fn folding(self) -> Result<(TypeRank, TypeRank), WeylError> {
        match self {
            ChevalleyType::TwistedA(n) if n >= 2 => Ok(((RootType::A, 2 * n - 1), (RootType::B, n))),
            ChevalleyType::TwistedD(n) if n >= 2 => Ok(((RootType::D, n + 1), (RootType::C, n))),
            ChevalleyType::TwistedE6 => Ok(((RootType::E, 6), (RootType::F, 4))),
            ChevalleyType::Triality => Ok(((RootType::D, 4), (RootType::G, 2))),
            other => Err(WeylError::Unsupported(format!("{other}"))),
        }
    }
}

/// q^N ∏ (1 + q^{δ_i} + … + q^{δ_i (r−1)}) ∏ (q^{d_i} − 1), where N counts the
/// positive roots of X and d_i, δ_i, r belong to Y.
pub fn chevalley_order(ty: ChevalleyType, q: u64) -> Result<BigInt, WeylError> {
    if q < 2 {
        return Err(WeylError::Unsupported(format!("{ty} over a field of size {q}")));
    }
    let ((xt, xn), (yt, yn)) = ty.folding()?;
    let x = build_root_system(xt, xn)?;
    let y = build_root_system(yt, yn)?;
    let q = BigInt::from(q);
    let n_pos = x.positive_roots().len() as u32;
    let r = y.length_ratio();
    let mut out: BigInt = Pow::pow(&q, n_pos);
    for eps in short_exponents_or_empty(&y) {
        let delta = eps + 1;
        let mut s = BigInt::from(0);
        for j in 0..r {
            s += Pow::pow(&q, delta * j);
        }
        out *= s;
    }
    for d in degrees(&y) {
        let f: BigInt = Pow::pow(&q, d) - BigInt::one();
        out *= f;
    }
    Ok(out)
}

/// The classical order formulas, written independently of any root system:
/// |SU(2n, q)|, |Ω⁻(2n+2, q)| with the (q^{n+1} + 1) factor, |³D₄(q)| and
/// |²E₆(q)| without dividing by the centre.
pub fn classical_order(ty: ChevalleyType, q: u64) -> Result<BigInt, WeylError> {
    ty.folding()?;
    if q < 2 {
        return Err(WeylError::Unsupported(format!("{ty} over a field of size {q}")));
    }
    let qq = |e: u32| -> BigInt { Pow::pow(&BigInt::from(q), e) };
    let one = BigInt::one();
    Ok(match ty {
        ChevalleyType::TwistedA(n) => {
            let n = n as u32;
            (2..=2 * n).fold(qq(n * (2 * n - 1)), |acc, i| acc * if i % 2 == 0 { qq(i) - &one } else { qq(i) + &one })
        }
        ChevalleyType::TwistedD(n) => {
            let n = n as u32;
            (1..=n).fold(qq(n * (n + 1)) * (qq(n + 1) + &one), |acc, i| acc * (qq(2 * i) - &one))
        }
        ChevalleyType::Triality => qq(12) * (qq(8) + qq(4) + &one) * (qq(6) - &one) * (qq(2) - &one),
        ChevalleyType::TwistedE6 => {
            qq(36) * (qq(12) - &one) * (qq(9) + &one) * (qq(8) - &one) * (qq(6) - &one) * (qq(5) + &one) * (qq(2) - &one)
        }
    })
}
