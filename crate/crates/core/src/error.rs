use thiserror::Error;

/// Errors raised by constructions whose preconditions fail.
///
/// Law violations found by checkers are *not* errors; they come back as
/// report values carrying a witness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size cap exceeded: {what} = {got}, cap is {cap}")]
    Size {
        what: &'static str,
        got: usize,
        cap: usize,
    },
    #[error("membership error: {0}")]
    Membership(String),
    #[error("structure error: {0}")]
    Structure(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("not representable: {0}")]
    Representability(String),
    #[error("ideal must be proper: {0}")]
    Properness(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
