//! Exact linear algebra over cyclotomic fields and finite group enumeration.

mod characters;
pub mod coxeter;
mod group;
mod matrix;

pub use characters::{abelianization, linear_characters, LinearChar};
pub use group::{group_closure, Cayley, FiniteGroup, GroupElem, DEFAULT_CAP};
pub use matrix::CycMatrix;

/// A group enumerated as explicit matrices.
pub type MatGroup = FiniteGroup<CycMatrix>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("group closure exceeded {0} elements")]
    CapExceeded(usize),
    #[error("no generators given")]
    NoGenerators,
}
