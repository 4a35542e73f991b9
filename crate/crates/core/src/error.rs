use thiserror::Error;

/// Errors raised by the evaluators in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the function.
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation was requested at (or numerically too close to) a pole.
    #[error("pole: {0}")]
    Pole(String),

    /// A truncated series did not reach its tolerance within the term cap.
    #[error("series truncation failed after {terms} terms: {what}")]
    Truncation { what: &'static str, terms: usize },

    /// An iterative refinement (quadrature, extrapolation) stalled.
    #[error("no convergence: {0}")]
    NonConvergence(String),

    /// Richardson levels of a numerical derivative disagree.
    #[error("unstable numerical differentiation: {0}")]
    Instability(String),

    /// A documented precondition of the operation was violated.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Exact integer arithmetic requested beyond the supported cap.
    #[error("overflow: {0}")]
    Overflow(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
