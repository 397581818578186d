use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph is not connected")]
    NotConnected,

    #[error("graph order {order} exceeds the supported maximum of {max} vertices")]
    TooLarge { order: usize, max: usize },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("invalid regular part: {0}")]
    InvalidRegularPart(String),

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error(
        "Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})"
    )]
    ConvergenceFailure { sweeps: usize, off_norm: f64 },

    #[error("cannot compare spectra of order {exact} and {numeric}")]
    InvalidComparison { exact: u64, numeric: usize },
}
