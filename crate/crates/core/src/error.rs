use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("constant term is not a unit")]
    NonUnitConstantTerm,
    #[error("division by {0} is not exact in the coefficient ring")]
    NonQAlgebra(i64),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("bound exceeded: {what} = {value} > {limit}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("class function is missing the cycle type {0}")]
    IncompleteClassFunction(String),
    #[error("objects carry different groups")]
    GroupMismatch,
    #[error("map is not an endomorphism")]
    NotEndomorphism,
    #[error("map is not equivariant at group element {0}")]
    NotEquivariant(String),
    #[error("differentials do not square to zero at degree {0}")]
    NotAComplex(i64),
    #[error("invalid group action: {0}")]
    InvalidAction(String),
    #[error("{0} is not an integral combination")]
    NotIntegral(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_bound(what: &'static str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        Err(Error::BoundExceeded { what, value, limit })
    } else {
        Ok(())
    }
}
