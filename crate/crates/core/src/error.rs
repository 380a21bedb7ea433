use thiserror::Error;

use crate::expr::ParseError;

/// Errors raised by the checker and the oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("constant polynomial (positive degree required)")]
    ConstantPolynomial,
    #[error("both inputs are zero")]
    BothZero,
    #[error("polynomial is not quasi-convenient")]
    NotQuasiConvenient,
    #[error("resultant undefined for Y-constant input")]
    YConstantResultant,
    #[error("polynomials are not coprime")]
    NotCoprime,
    #[error("support is not collinear")]
    NotCollinear,
    #[error("weight vectors are not antipodal")]
    NotAntipodal,
    #[error("weight vector must be nonzero")]
    ZeroWeight,
    #[error("empty factor list")]
    EmptyFactorList,
    #[error("factor {0} is constant")]
    ConstantFactor(usize),
    #[error("product of the factors does not equal the polynomial")]
    InvalidFactorization,
    /// A computed value contradicts a theorem the implementation relies on.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
