use thiserror::Error;

/// Errors raised by the chain model, solvers and experiment drivers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An input violates a documented precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// Two ions share a position, so the Coulomb energy diverges.
    #[error("coincident ions at index {0} and {1}")]
    Singular(usize, usize),

    /// Positions are not strictly increasing.
    #[error("positions not strictly increasing at index {0}")]
    Unordered(usize),

    /// The equilibrium map produced a non-positive effective momentum.
    #[error("map orbit escaped at step {step}: p = {p}")]
    OrbitEscape { step: usize, p: f64 },

    /// A spectrum was requested for a configuration that did not converge.
    #[error("configuration is not converged (|grad|_inf = {0:e})")]
    NotConverged(f64),

    /// The Hessian has a significantly negative eigenvalue.
    #[error("configuration is a saddle point: lowest eigenvalue {0:e}")]
    Saddle(f64),

    /// Every relaxation start failed to converge.
    #[error("none of the {0} relaxation starts converged")]
    NoConvergedStart(usize),

    /// Trap calibration could not bracket the target density.
    #[error("trap calibration failed: {0}")]
    Calibration(String),

    /// The transition criterion is never satisfied on the swept grid.
    #[error("no transition found on the swept grid")]
    NoTransition,

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
