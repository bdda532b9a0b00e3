use thiserror::Error;

/// Errors raised by the exact arithmetic, series and determinant routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("undefined gcd: both polynomials are zero")]
    UndefinedGcd,
    #[error("zero polynomial has no sign normalization")]
    ZeroPolynomial,
    #[error("numerator and denominator not coprime (common factor of degree {0})")]
    NotCoprime(usize),
    #[error("order zero: both factors constant")]
    OrderZero,
    #[error("associated function has a polynomial part of positive degree")]
    PolynomialPart,
    #[error("Φ undefined at leading order (t_1 = 0 for odd order)")]
    PhiUndefined,
    #[error("determinant order must be at least 1, got {0}")]
    InvalidOrder(usize),
    #[error("prefix too short: need s_{needed}, have {available} coefficients")]
    PrefixTooShort { needed: usize, available: usize },
    #[error("oracle size limit: {0}x{0} exceeds 10x10")]
    OracleSizeLimit(usize),
    #[error("matrix must be square and non-empty")]
    NotSquare,
    #[error("degree must be positive")]
    ConstantPolynomial,
    #[error("invalid rational literal {0:?}")]
    Parse(String),
    #[error("root specification has degree 0")]
    EmptyRootSpec,
    #[error("quadratic factor z^2 + ({linear})z + ({constant}) has real roots")]
    RealQuadratic { linear: String, constant: String },
    #[error("cannot tamper with a constant factor")]
    NothingToTamper,
    #[error("criteria disagree: {0}")]
    CriteriaDisagree(String),
}

pub type Result<T> = std::result::Result<T, Error>;
