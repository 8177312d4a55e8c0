//! Solver configuration.

use crate::scalar::Real;

/// Tolerances and retry budgets shared by the quartic and quintic solvers.
#[derive(Debug, Clone, Copy)]
pub struct SolverConfig<T> {
    /// Relative-residual acceptance threshold for candidate roots.
    pub tol: T,
    /// Relative threshold on `|a3^2 - 2*a2|` below which the shift path runs.
    pub degeneracy_threshold: T,
    /// Newton steps applied to each selected root; never changes selection.
    pub polish_steps: usize,
    /// Highest cube-root branch index tried when selection fails (capped at 2).
    pub max_branch_retries: usize,
}

impl<T: Real> Default for SolverConfig<T> {
    /// Defaults are calibrated for `f64`; tighten or loosen `tol` for other
    /// scalar types.
    fn default() -> Self {
        SolverConfig {
            tol: T::of(1e-8),
            degeneracy_threshold: T::of(1e-6),
            polish_steps: 2,
            max_branch_retries: 2,
        }
    }
}

impl<T: Real> SolverConfig<T> {
    /// Default configuration with a caller-chosen residual tolerance.
    pub fn with_tol(tol: T) -> Self {
        SolverConfig {
            tol,
            ..Self::default()
        }
    }
}
