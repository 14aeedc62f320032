use thiserror::Error;

/// Every failure the library reports. The CLI maps each variant to an exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("infeasible instance: {0}")]
    Infeasible(String),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("solver did not converge after {iterations} iterations (best value {best_value})")]
    Solver { iterations: usize, best_value: i64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn contract<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Contract(msg.into()))
}
