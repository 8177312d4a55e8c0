//! Error types shared by every solver stage.

use thiserror::Error;

/// Failure modes of the radical pipeline and the iterative oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    /// All coefficients are zero; the polynomial cannot be normalized.
    #[error("zero polynomial has no roots to solve")]
    ZeroPolynomial,

    /// Input degree does not match the entry point.
    #[error("expected a degree-{expected} polynomial, got degree {got}")]
    DegreeMismatch { expected: usize, got: usize },

    /// `a3^2 - 2*a2` is too small for the transform denominator.
    #[error("degenerate quartic: a3^2 - 2*a2 vanishes; shift required")]
    DegenerateQuartic,

    /// The resolvent cubic lost its leading coefficient.
    #[error("degenerate resolvent cubic: leading coefficient vanishes")]
    DegenerateResolvent,

    /// The Cardano discriminant underflowed for every branch.
    #[error("degenerate cubic: discriminant vanishes for every branch")]
    DegenerateCubic,

    /// No candidate subset satisfied the residual and Vieta gates.
    #[error("selection failed: no candidate subset satisfies the residual gates")]
    SelectionFailed,

    /// The first-root provider produced nothing within tolerance.
    #[error("first-root provider failed to reach the requested tolerance")]
    ProviderFailed,

    /// The simultaneous iteration did not converge within its budget.
    #[error("iterative root finder did not converge within its iteration budget")]
    NoConvergence,
}

impl SolveError {
    /// True for the degeneracy family that callers escape by shifting.
    pub fn is_degenerate(&self) -> bool {
        matches!(
            self,
            SolveError::DegenerateQuartic
                | SolveError::DegenerateResolvent
                | SolveError::DegenerateCubic
        )
    }
}
