use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
    #[error("invalid grid: {0}")]
    Grid(String),
    #[error("invalid tolerance {0}")]
    Tolerance(f64),
}
