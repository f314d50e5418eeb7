use thiserror::Error;

pub type Result<T> = std::result::Result<T, LinalgError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("expected {expected} entries for a {dim}x{dim} matrix, got {got}")]
    EntryCount {
        dim: usize,
        expected: usize,
        got: usize,
    },

    #[error("matrix dimension must be positive")]
    EmptyMatrix,

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("matrix is not self-adjoint: residual {residual:e} exceeds {bound:e}")]
    NotSelfAdjoint { residual: f64, bound: f64 },

    #[error("matrix is not positive semidefinite: eigenvalue {witness:e} below -{tol:e}")]
    NotPositive { witness: f64, tol: f64 },

    #[error(
        "eigensolver did not converge after {sweeps} sweeps (off-diagonal residual {residual:e})"
    )]
    EigenNoConvergence { sweeps: usize, residual: f64 },

    #[error(
        "square root iteration did not converge after {iterations} iterations (step {residual:e})"
    )]
    SqrtNoConvergence { iterations: usize, residual: f64 },

    #[error("numerically singular (condition estimate {condition:e})")]
    Singular { condition: f64 },

    #[error("exponent {0} outside [0, 1]")]
    ExponentOutOfRange(f64),

    #[error("invalid tolerance policy: rel={rel:e}, abs={abs:e}")]
    InvalidTolerance { rel: f64, abs: f64 },
}
