use thiserror::Error;

/// Errors raised by the algebra toolkit.
///
/// Variants are grouped so a front end can map them onto a small, fixed set of
/// exit statuses (see [`Error::category`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("invalid variable list: {0}")]
    InvalidVariables(String),

    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),

    #[error("polynomials live over different variable sets")]
    VarSetMismatch,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("quotient algebra is infinite-dimensional")]
    InfiniteDimensional,

    #[error("quotient algebra is zero (the ideal contains 1)")]
    ZeroAlgebra,

    #[error("the ideal has irrational points: characteristic polynomial of multiplication by `{variable}` does not split over the rationals")]
    IrrationalPoints { variable: String },

    #[error("generator `{generator}` does not vanish at the point")]
    NotZeroAtPoint { generator: String },

    #[error("generator `{generator}` has a nonzero constant term")]
    ConstantTerm { generator: String },

    #[error(
        "ideal order is {order} but the criterion needs order >= 2; eliminate a variable with a linear relation first"
    )]
    OrderTooLow { order: u32 },

    #[error("algebra is not local")]
    NotLocal,

    #[error("singularity is not isolated: local dimension did not stabilize below truncation degree {cap}")]
    NotIsolated { cap: u32 },

    #[error("polynomial has a nonzero linear part")]
    LinearPart,

    #[error("truncation degree {degree} is too low; at least 3 is needed")]
    TruncationTooLow { degree: u32 },

    #[error("polynomial is zero")]
    ZeroPolynomial,

    #[error("operators do not span a Lie algebra: a commutator leaves their span")]
    NotClosed,

    #[error("algebra basis does not match the standard monomials of the Gröbner basis")]
    BasisMismatch,

    #[error("computation cancelled")]
    Cancelled,

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

/// Coarse classification of [`Error`] used for exit statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    Parse,
    InfiniteDimensional,
    IrrationalPoints,
    NotIsolated,
    Invariant,
    Other,
}

impl Error {
    pub fn category(&self) -> ErrorCategory {
        match self {
            Error::Syntax { .. } | Error::UnknownVariable(_) | Error::InvalidVariables(_) | Error::InvalidOrder(_) => {
                ErrorCategory::Parse
            }
            Error::InfiniteDimensional => ErrorCategory::InfiniteDimensional,
            Error::IrrationalPoints { .. } => ErrorCategory::IrrationalPoints,
            Error::NotIsolated { .. } => ErrorCategory::NotIsolated,
            Error::Invariant(_) => ErrorCategory::Invariant,
            _ => ErrorCategory::Other,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
