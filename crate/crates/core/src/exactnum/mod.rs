//! Exact rationals and cyclotomic field arithmetic.

mod cyclo;
mod rat;

pub use cyclo::{cyclotomic_polynomial, euler_phi, CycloNum};
pub use rat::Rat;

/// Failures of exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot embed conductor {from} into conductor {to}")]
    ConductorMismatch { from: u32, to: u32 },
    #[error("parse error: {0}")]
    Parse(String),
}

/// ζ_N^k as a canonical cyclotomic number.
pub fn root_of_unity(n: u32, k: i64) -> CycloNum {
    CycloNum::root_of_unity(n, k)
}
