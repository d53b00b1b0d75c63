//! Exact polynomials and power series, Molien series, fake degrees and the
//! generating-function identities built from them.

pub mod bipoly;
pub mod identities;
pub mod invariants;
pub mod poly;

pub use bipoly::{factor_bivariate_linear, BiPoly};
pub use identities::{
    factors_at, lhs_solomon, lhs_two_orbit, pairing, rhs_factors, rhs_solomon, rhs_two_orbit, verify_identity, IdentityError, IdentityReport,
};
pub use invariants::{fake_degrees, invariant_table, molien_degrees, InvariantTable, MolienData, OrbitInvariants};
pub use poly::{Poly, Series};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial division is not exact")]
    InexactDivision,
}
