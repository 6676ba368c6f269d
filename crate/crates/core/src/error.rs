use thiserror::Error;

/// Errors raised by the algebraic routines of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("lcm of the generators is undefined for the zero ideal")]
    UndefinedLambda,

    #[error("exponent overflow")]
    Overflow,

    #[error("operation is undefined for the zero ideal")]
    ZeroIdeal,

    #[error("operation is undefined for the unit ideal")]
    UnitIdeal,

    #[error("ideal is not artinian: {0}")]
    NotArtinian(&'static str),

    #[error("node has fewer than two generators and cannot be split")]
    Leaf,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("scale guard exceeded: {0}")]
    Scale(String),

    #[error("infeasible request: {0}")]
    Infeasible(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::Dimension { expected, found })
    }
}
