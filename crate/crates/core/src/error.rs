use num_complex::Complex64;

/// Failure modes shared by every module.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole: {0}")]
    Pole(String),

    /// Adaptive refinement hit its budget; `best` is the estimate at that point.
    #[error("no convergence after {evals} evaluations: best estimate {best} with error estimate {err:e}")]
    Convergence {
        best: Complex64,
        err: f64,
        evals: usize,
    },

    #[error("divergence: {0}")]
    Divergence(String),

    #[error("contour rotation invalid: {0}")]
    RotationInvalid(String),

    #[error("contour failure: {0}")]
    ContourFailure(String),

    #[error("ill-conditioned: {0}")]
    Conditioning(String),

    #[error("usage: {0}")]
    Usage(String),
}

impl Error {
    /// Prefixes the message with context, e.g. which series or inner integral failed.
    pub fn context(self, ctx: &str) -> Error {
        match self {
            Error::Domain(m) => Error::Domain(format!("{ctx}: {m}")),
            Error::Pole(m) => Error::Pole(format!("{ctx}: {m}")),
            Error::Divergence(m) => Error::Divergence(format!("{ctx}: {m}")),
            Error::RotationInvalid(m) => Error::RotationInvalid(format!("{ctx}: {m}")),
            Error::ContourFailure(m) => Error::ContourFailure(format!("{ctx}: {m}")),
            Error::Conditioning(m) => Error::Conditioning(format!("{ctx}: {m}")),
            Error::Usage(m) => Error::Usage(format!("{ctx}: {m}")),
            e @ Error::Convergence { .. } => e,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
