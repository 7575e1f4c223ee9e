use thiserror::Error;

/// Errors produced by the distribution and ensemble solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// The requested constraint cannot be satisfied by the given spectrum.
    #[error("infeasible: {0}")]
    Infeasible(String),
    /// An equation has no solution in the admissible range.
    #[error("no solution: {0}")]
    NoSolution(String),
    /// An iterative solver hit its iteration cap before reaching tolerance.
    #[error("did not converge: {0}")]
    NoConvergence(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
