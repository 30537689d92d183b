use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("no convergence: {0}")]
    Convergence(String),
    #[error("inconsistent construction: {0}")]
    Consistency(String),
    #[error("integral diverges: {0}")]
    Divergence(String),
    #[error("duplicate interpolation node at {0}")]
    DuplicateNode(f64),
    #[error("evaluation at pole {0}")]
    EvaluationAtPole(f64),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
