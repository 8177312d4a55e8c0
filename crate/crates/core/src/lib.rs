//! Closed-form quartic and quintic root solving in radicals.
//!
//! The quartic is solved through a cubic Tschirnhaus transform: a resolvent
//! cubic picks the transform constant, the transformed equation collapses to
//! a biquadratic, and back-substituting its four roots through the Cardano
//! formulas yields twelve candidate roots of which exactly four satisfy the
//! original equation. The quintic factors out a first root (pluggable
//! provider, iterative by default), solves the cofactor quartic, and accepts
//! candidates only when they satisfy both polynomials.
//!
//! Everything is generic over the float type through [`Real`]; the `*64`
//! aliases fix `f64`, which the default tolerances are calibrated for.

pub mod closed_form;
pub mod config;
pub mod error;
pub mod oracle;
pub mod poly;
pub mod quartic;
pub mod quintic;
pub mod scalar;

pub use closed_form::{
    biquadratic_roots, cardano_delta, cubic_roots, solve_cubic_monic, BiquadraticResolvent,
    CardanoDiscriminant,
};
pub use config::SolverConfig;
pub use error::SolveError;
pub use poly::{Polynomial, RootSet};
pub use quartic::{
    generate_candidates, select_quartic_roots, solve_quartic, solve_quartic_dual, CandidateRoot,
    CandidateTrace, QuarticCoeffs, ResolventCubicCoeffs, SolveReport, TschirnhausCubic,
};
pub use quintic::{
    deflated_quartic_coeffs, first_root, solve_quintic, FirstRootProvider, FixedFirstRoot,
    OracleFirstRoot, QuinticCoeffs, QuinticSolution,
};
pub use scalar::Real;


/// Complex scalar at double precision.
pub type C64 = num_complex::Complex<f64>;
/// Complex scalar at single precision.
pub type C32 = num_complex::Complex<f32>;
pub type Poly64 = Polynomial<f64>;
pub type Poly32 = Polynomial<f32>;
pub type Config64 = SolverConfig<f64>;
pub type Report64 = SolveReport<f64>;
pub type QuinticSolution64 = QuinticSolution<f64>;
