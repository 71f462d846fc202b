use thiserror::Error;

/// Crate-wide error type. The CLI maps these onto exit codes: input and
/// validation problems are exit 2, truncation/budget refusals are exit 3.
#[derive(Debug, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),

    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    #[error("containment violation: {0}")]
    Containment(String),

    #[error("truncation exceeded: {0}")]
    Truncation(String),

    #[error("size budget exceeded: needed {needed} coordinates, budget {budget}")]
    Budget { needed: usize, budget: usize },

    #[error("not finite-dimensional within truncation: {0}")]
    NotFinite(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Process exit status for this error (checks that fail report exit 1
    /// through the report layer, not through `Error`).
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Budget { .. } | Error::Truncation(_) => 3,
            _ => 2,
        }
    }
}
