use thiserror::Error;

/// Errors raised by the entropy pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input outside the supported parameter domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation requested on a critical line, where the closed forms degenerate.
    #[error("critical point: {0}")]
    CriticalPoint(String),

    /// A series or iteration failed to converge within its term budget.
    #[error("convergence failure: {0}")]
    Convergence(String),

    /// An asymptotic estimate was requested outside its validity guard.
    #[error("asymptotic guard violated: {0}")]
    Guard(String),

    /// The alpha-inversion map is singular at this order.
    #[error("singular inversion: {0}")]
    Singularity(String),
}

impl Error {
    /// Short machine-readable tag naming the guard that fired.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "Domain",
            Error::CriticalPoint(_) => "CriticalPoint",
            Error::Convergence(_) => "Convergence",
            Error::Guard(_) => "Guard",
            Error::Singularity(_) => "Singularity",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
