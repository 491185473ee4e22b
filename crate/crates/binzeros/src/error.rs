//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid arguments to a constructor or operation (e.g. `r > n`).
    #[error("invalid parameters: {0}")]
    Domain(String),

    /// A check was asked to run outside the hypotheses it needs.
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    /// Root iteration failed to reach the stopping tolerance.  Carries the
    /// iteration count and the best iterate achieved (decimal re/im pairs).
    #[error("solver did not converge within {iterations} iterations (worst correction {worst_correction})")]
    NonConvergence {
        iterations: usize,
        worst_correction: String,
        best: Vec<(String, String)>,
    },

    /// A computed quantity violated its backward-error guarantee.
    #[error("residual check failed: {0}")]
    Residual(String),

    /// A curve sample is too sparse for the requested resolution.
    #[error("curve sample too sparse: need at least {required_m} points, have {have_m}")]
    InsufficientDensity { required_m: usize, have_m: usize },

    /// Overflow, NaN, or another numerical breakdown.
    #[error("numerical failure: {0}")]
    Numeric(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
