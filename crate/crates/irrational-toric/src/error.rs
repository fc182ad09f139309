use thiserror::Error;

/// Everything that can go wrong across the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("mixed exact and float scalars")]
    ModeMismatch,

    #[error("operation requires exact rational input")]
    ExactRequired,

    #[error("division by zero")]
    DivisionByZero,

    #[error("functional is not in the dual cone")]
    NotInDual,

    #[error("intersection is not a common face of both cones")]
    NotCommonFace,

    #[error("not a face of the cone")]
    NotAFace,

    #[error("cones {0} and {1} do not meet in a common face")]
    FanViolation(usize, usize),

    #[error("image of source cone {0} lies in no target cone")]
    Unassignable(usize),

    #[error("index {0} out of range")]
    IndexOutOfRange(usize),

    #[error("target is not in the cone of the configuration")]
    NotInCone,

    #[error("direction lies in no cone of the fan")]
    NoLimit,

    #[error("support does not generate a face")]
    InvalidSupport,

    #[error("no chart contains the point")]
    ChartMismatch,

    #[error("invalid subdivision: {0}")]
    InvalidSubdivision(String),

    #[error("subdivision is not regular")]
    NotRegular,

    #[error("face is not a simplex")]
    NotSimplex,

    #[error("configuration has {0} points, bound is {1}")]
    SizeBound(usize, usize),

    #[error("path is not eventually inside the cone")]
    PathOutsideCone,

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("solver did not converge after {iterations} iterations (residual {residual:e})")]
    NonConvergence { iterations: usize, residual: f64 },

    #[error("unbounded linear program")]
    Unbounded,

    #[error("integer overflow")]
    Overflow,
}

impl Error {
    /// Process exit status used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Invalid(_) => 1,
            Error::NonConvergence { .. } => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
