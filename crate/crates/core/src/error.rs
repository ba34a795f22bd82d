use alloc::string::String;

/// Errors raised by the algebra routines.
///
/// Variants fall in three groups: malformed input (shapes, preconditions),
/// mathematical negatives (a map is not Keller, has no polynomial inverse
/// within the bound, ...), and [`Error::TheoremContradiction`], which means a
/// proven identity or bound failed to hold and indicates a bug.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("polynomial is not univariate ({nvars} variables)")]
    NotUnivariate { nvars: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("map is not of the form x + H with ord(H) >= 2")]
    NotNormalized,
    #[error("higher-order part is not homogeneous")]
    NotHomogeneous,
    #[error("power-linear degree must be at least 2, got {0}")]
    DegreeTooSmall(u32),
    #[error("point must be nonzero")]
    ZeroPoint,
    #[error("matrix part is not nilpotent")]
    NotNilpotent,
    #[error("map is not Keller (Jacobian determinant is not 1)")]
    NotKeller,
    #[error("no polynomial inverse of degree <= {max_degree}")]
    NoPolynomialInverse { max_degree: u32 },
    #[error("theorem contradiction: {0}")]
    TheoremContradiction(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

impl Error {
    /// True for errors that report a mathematical negative rather than bad input.
    pub fn is_negative(&self) -> bool {
        matches!(
            self,
            Error::NotNilpotent
                | Error::NotKeller
                | Error::NoPolynomialInverse { .. }
                | Error::Singular
        )
    }

    pub fn is_contradiction(&self) -> bool {
        matches!(self, Error::TheoremContradiction(_))
    }
}
