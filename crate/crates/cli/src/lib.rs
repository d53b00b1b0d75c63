//! Library side of the `reflex` command: group specifications, reports,
//! the acceptance suite and the command implementations.

pub mod catalog;
pub mod commands;
pub mod figures;
pub mod report;
pub mod groupspec;
pub mod suite;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad arguments; exit code 2.
    #[error("{0}")]
    Usage(String),
    /// A computation failed; exit code 1.
    #[error("{0}")]
    Compute(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Compute(_) => 1,
        }
    }
}
