use thiserror::Error;

/// Errors raised by gate characterization routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input violated a documented precondition (non-unitary matrix,
    /// unnormalized state, out-of-range parameter).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The shifted QR iteration did not deflate within its iteration budget.
    #[error("eigenvalue iteration did not converge after {iterations} iterations")]
    EigenNonConvergence { iterations: usize },

    /// No symmetry image of the extracted coordinates landed in the Weyl chamber
    /// while also reproducing the gate's local invariants.
    #[error("Weyl chamber canonicalization failed for eigenphases {phases:?}")]
    Canonicalization { phases: [f64; 4] },

    /// None of the optimizer restarts met its convergence criterion.
    #[error("optimizer did not converge in any restart (best objective {best})")]
    OptimizerNonConvergence { best: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
