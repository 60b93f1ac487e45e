use thiserror::Error;

/// Errors surfaced by field operations and the stage driver.
#[derive(Error, Debug)]
pub enum Error {
    #[error("grid mismatch: {0}")]
    GridMismatch(String),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("input must have zero mean, got {got:.3e} (tol {tol:.1e})")]
    NonZeroMean { got: f64, tol: f64 },
    #[error("mollifier radius {radius:.3e} not resolvable: {reason}")]
    UnresolvableMollifier { radius: f64, reason: String },
    #[error("singular evaluation: {0}")]
    Singular(String),
    #[error("ODE step-size underflow at t = {t:.6e} (scale function near zero?)")]
    StepSizeUnderflow { t: f64 },
    #[error("root bracketing failed: {0}")]
    BracketingFailed(String),
    #[error("under-resolved quadrature: {0}")]
    UnderResolved(String),
    #[error("parameter check failed: {0}")]
    ParameterCheck(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed field container: {0}")]
    BadContainer(String),
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
