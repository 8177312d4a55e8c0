//! The quartic solver: cubic Tschirnhaus transform, biquadratic resolvent,
//! twelve-candidate generation and residual-filtered selection.
//!
//! The eliminant route (oracle module) is the authoritative source of the
//! transform and resolvent coefficients in the solve path; the closed-form
//! transcriptions in this module are retained as an independent cross-check
//! and as the verification surface of the `elimination` CLI mode.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::closed_form::{biquadratic_roots, cubic_roots, BiquadraticResolvent};
use crate::config::SolverConfig;
use crate::error::SolveError;
use crate::oracle;
use crate::poly::{Polynomial, RootSet};
use crate::scalar::{cplx, Real};

/// Monic quartic `x^4 + a3 x^3 + a2 x^2 + a1 x + a0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuarticCoeffs<T> {
    pub a0: Complex<T>,
    pub a1: Complex<T>,
    pub a2: Complex<T>,
    pub a3: Complex<T>,
}

impl<T: Real> QuarticCoeffs<T> {
    pub fn new(a0: Complex<T>, a1: Complex<T>, a2: Complex<T>, a3: Complex<T>) -> Self {
        QuarticCoeffs { a0, a1, a2, a3 }
    }

    /// The quartic `x^4`.
    pub fn zeroed() -> Self {
        let z = Complex::zero();
        QuarticCoeffs { a0: z, a1: z, a2: z, a3: z }
    }

    /// Extracts coefficients from a degree-4 polynomial, normalizing to monic.
    pub fn from_polynomial(p: &Polynomial<T>) -> Result<Self, SolveError> {
        if p.degree() != 4 {
            return Err(SolveError::DegreeMismatch { expected: 4, got: p.degree() });
        }
        let m = p.normalize_monic()?;
        Ok(QuarticCoeffs {
            a0: m.coeff(0),
            a1: m.coeff(1),
            a2: m.coeff(2),
            a3: m.coeff(3),
        })
    }

    pub fn to_polynomial(&self) -> Polynomial<T> {
        Polynomial::new(vec![self.a0, self.a1, self.a2, self.a3, Complex::one()])
    }

    /// `a3^2 - 2*a2`, the denominator of the transform coefficients.
    pub fn transform_margin(&self) -> Complex<T> {
        self.a3 * self.a3 - self.a2 * cplx::<T>(2.0, 0.0)
    }

    /// Root-magnitude scale of the quartic; zero exactly for `x^4`.
    pub fn root_scale(&self) -> T {
        self.to_polynomial().root_scale()
    }

    /// Degeneracy indicator for the formula path, relative to the root scale
    /// so uniformly tiny or huge quartics are judged at their own magnitude.
    pub fn is_degenerate(&self, threshold: T) -> bool {
        let scale = self.root_scale();
        if scale == T::zero() {
            return true;
        }
        self.transform_margin().norm() <= threshold * scale * scale
    }
}

/// Coefficients `(b0, b1, b2)` of the cubic transform
/// `x^3 + b2 x^2 + b1 x + b0 + y`; the solve path always takes `b1 = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TschirnhausCubic<T> {
    pub b0: Complex<T>,
    pub b1: Complex<T>,
    pub b2: Complex<T>,
}

/// The cubic `b03 t^3 + b02 t^2 + b01 t + b00` whose roots are the valid
/// transform constants `b0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResolventCubicCoeffs<T> {
    pub b00: Complex<T>,
    pub b01: Complex<T>,
    pub b02: Complex<T>,
    pub b03: Complex<T>,
}

/// One of the twelve back-substituted values `x_mn`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CandidateRoot<T> {
    pub value: Complex<T>,
    /// Cubic-root index in {1, 2, 3}.
    pub m: u8,
    /// Biquadratic-root index in {1, 2, 3, 4}.
    pub n: u8,
    /// Relative residual against the quartic the candidate was generated for.
    pub residual: T,
}

/// Candidate plus the filter verdicts recorded for the report trace.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CandidateTrace<T> {
    pub candidate: CandidateRoot<T>,
    /// Residual against the secondary polynomial of a dual-filter solve.
    pub residual_alt: Option<T>,
    /// Whether this candidate ended up among the four selected roots.
    pub accepted: bool,
}

/// Everything a solve produces: roots, the winning candidate trace, the
/// transform that generated it and the retry provenance (shift,
/// resolvent-root index, cube-root branch).
#[derive(Debug, Clone)]
pub struct SolveReport<T> {
    pub roots: RootSet<T>,
    pub vieta_defect: T,
    pub candidates: Vec<CandidateTrace<T>>,
    /// Transform coefficients of the winning attempt, in the shifted frame.
    pub transform: TschirnhausCubic<T>,
    /// Biquadratic coefficients of the winning attempt.
    pub resolvent: BiquadraticResolvent<T>,
    pub low_confidence: bool,
    pub shift: Complex<T>,
    pub b0_index: usize,
    pub branch: u8,
    pub tol: T,
}

/// Transform coefficient `b2 = (a3^3 + 3 a1 - 4 b0 + b1 a3 - 3 a3 a2) /
/// (a3^2 - 2 a2)`; with this `b2` the eliminant's `y^3` coefficient vanishes.
pub fn tschirnhaus_b2<T: Real>(
    a: &QuarticCoeffs<T>,
    b0: Complex<T>,
    b1: Complex<T>,
) -> Result<Complex<T>, SolveError> {
    if a.is_degenerate(T::of(1e-6)) {
        return Err(SolveError::DegenerateQuartic);
    }
    let r = |v: f64| cplx::<T>(v, 0.0);
    let numer = a.a3 * a.a3 * a.a3 + a.a1 * r(3.0) - b0 * r(4.0) + b1 * a.a3
        - a.a3 * a.a2 * r(3.0);
    Ok(numer / a.transform_margin())
}

/// Closed-form resolvent cubic coefficients, transcribed term by term.
///
/// The `+240 a3 a1^3 a2` term of the linear coefficient carries an operator
/// the printed source drops; its sign is fixed by matching the elimination
/// identity on rational inputs.
pub fn resolvent_cubic_coeffs<T: Real>(
    a: &QuarticCoeffs<T>,
) -> Result<ResolventCubicCoeffs<T>, SolveError> {
    if a.is_degenerate(T::of(1e-6)) {
        return Err(SolveError::DegenerateQuartic);
    }
    let margin = a.transform_margin();
    let d3 = margin * margin * margin;
    Ok(ResolventCubicCoeffs {
        b00: resolvent_b00(a) / d3,
        b01: resolvent_b01(a) / d3,
        b02: resolvent_b02(a) / d3,
        b03: resolvent_b03(a) / d3,
    })
}

fn resolvent_b00<T: Real>(a: &QuarticCoeffs<T>) -> Complex<T> {
    let r = |v: f64| cplx::<T>(v, 0.0);
    let (a0, a1, a2, a3) = (a.a0, a.a1, a.a2, a.a3);
    let a0_2 = a0 * a0;
    let a1_2 = a1 * a1;
    let a1_3 = a1_2 * a1;
    let a1_4 = a1_3 * a1;
    let a1_5 = a1_4 * a1;
    let a2_2 = a2 * a2;
    let a2_3 = a2_2 * a2;
    let a2_4 = a2_3 * a2;
    let a2_5 = a2_4 * a2;
    let a3_2 = a3 * a3;
    let a3_3 = a3_2 * a3;
    let a3_4 = a3_3 * a3;
    let a3_5 = a3_4 * a3;
    let a3_6 = a3_5 * a3;
    let a3_7 = a3_6 * a3;
    a0_2 * a1 * a2_2 * r(48.0) - a0_2 * a1 * a2 * a3_2 * r(48.0) + a0_2 * a1 * a3_4 * r(12.0)
        - a0_2 * a2_3 * a3 * r(24.0)
        + a0_2 * a2_2 * a3_3 * r(28.0)
        - a0_2 * a2 * a3_5 * r(10.0)
        + a0_2 * a3_7
        - a0 * a1_3 * a2 * r(72.0)
        + a0 * a1_3 * a3_2 * r(9.0)
        + a0 * a1_2 * a2_2 * a3 * r(150.0)
        - a0 * a1_2 * a2 * a3_3 * r(54.0)
        + a0 * a1_2 * a3_5 * r(3.0)
        - a0 * a1 * a2_4 * r(48.0)
        - a0 * a1 * a2_3 * a3_2 * r(36.0)
        + a0 * a1 * a2_2 * a3_4 * r(29.0)
        - a0 * a1 * a2 * a3_6 * r(4.0)
        + a0 * a2_5 * a3 * r(24.0)
        - a0 * a2_4 * a3_3 * r(14.0)
        + a0 * a2_3 * a3_5 * r(2.0)
        + a1_5 * r(27.0)
        - a1_4 * a2 * a3 * r(63.0)
        + a1_4 * a3_3 * r(18.0)
        + a1_3 * a2_3 * r(20.0)
        + a1_3 * a2_2 * a3_2 * r(21.0)
        - a1_3 * a2 * a3_4 * r(15.0)
        + a1_3 * a3_6 * r(2.0)
        - a1_2 * a2_4 * a3 * r(12.0)
        + a1_2 * a2_3 * a3_3 * r(7.0)
        - a1_2 * a2_2 * a3_5
}

fn resolvent_b01<T: Real>(a: &QuarticCoeffs<T>) -> Complex<T> {
    let r = |v: f64| cplx::<T>(v, 0.0);
    let (a0, a1, a2, a3) = (a.a0, a.a1, a.a2, a.a3);
    let a0_2 = a0 * a0;
    let a1_2 = a1 * a1;
    let a1_3 = a1_2 * a1;
    let a1_4 = a1_3 * a1;
    let a2_2 = a2 * a2;
    let a2_3 = a2_2 * a2;
    let a2_4 = a2_3 * a2;
    let a2_5 = a2_4 * a2;
    let a2_6 = a2_5 * a2;
    let a3_2 = a3 * a3;
    let a3_3 = a3_2 * a3;
    let a3_4 = a3_3 * a3;
    let a3_5 = a3_4 * a3;
    let a3_6 = a3_5 * a3;
    -a0_2 * a2_2 * r(64.0) + a0_2 * a2 * a3_2 * r(64.0) - a0_2 * a3_4 * r(16.0)
        + a0 * a1_2 * a2 * r(192.0)
        + a0 * a1_2 * a3_2 * r(12.0)
        - a0 * a1 * a2_2 * a3 * r(344.0)
        + a0 * a1 * a2 * a3_3 * r(120.0)
        - a0 * a1 * a3_5 * r(10.0)
        + a0 * a2_4 * r(80.0)
        + a0 * a2_3 * a3_2 * r(16.0)
        - a0 * a2_2 * a3_4 * r(24.0)
        + a0 * a2 * a3_6 * r(4.0)
        - a1_4 * r(108.0)
        // sign of the 240 term fixed against the elimination identity
        + a1_3 * a2 * a3 * r(240.0)
        - a1_3 * a3_3 * r(84.0)
        - a1_2 * a2_3 * r(76.0)
        - a1_2 * a2_2 * a3_2 * r(74.0)
        + a1_2 * a2 * a3_4 * r(70.0)
        - a1_2 * a3_6 * r(10.0)
        + a1 * a2_4 * a3 * r(72.0)
        - a1 * a2_3 * a3_3 * r(52.0)
        + a1 * a2_2 * a3_5 * r(8.0)
        - a2_6 * r(16.0)
        + a2_5 * a3_2 * r(12.0)
        - a2_4 * a3_4 * r(2.0)
}

fn resolvent_b02<T: Real>(a: &QuarticCoeffs<T>) -> Complex<T> {
    let r = |v: f64| cplx::<T>(v, 0.0);
    let (a0, a1, a2, a3) = (a.a0, a.a1, a.a2, a.a3);
    let a1_2 = a1 * a1;
    let a1_3 = a1_2 * a1;
    let a2_2 = a2 * a2;
    let a2_3 = a2_2 * a2;
    let a2_4 = a2_3 * a2;
    let a3_2 = a3 * a3;
    let a3_3 = a3_2 * a3;
    let a3_4 = a3_3 * a3;
    let a3_5 = a3_4 * a3;
    let a3_6 = a3_5 * a3;
    -a0 * a1 * a2 * r(128.0) - a0 * a1 * a3_2 * r(80.0) + a0 * a2_2 * a3 * r(192.0)
        - a0 * a2 * a3_3 * r(64.0)
        + a0 * a3_5 * r(8.0)
        + a1_3 * r(144.0)
        - a1_2 * a2 * a3 * r(304.0)
        + a1_2 * a3_3 * r(128.0)
        + a1 * a2_3 * r(64.0)
        + a1 * a2_2 * a3_2 * r(112.0)
        - a1 * a2 * a3_4 * r(104.0)
        + a1 * a3_6 * r(16.0)
        - a2_4 * a3 * r(64.0)
        + a2_3 * a3_3 * r(48.0)
        - a2_2 * a3_5 * r(8.0)
}

fn resolvent_b03<T: Real>(a: &QuarticCoeffs<T>) -> Complex<T> {
    let r = |v: f64| cplx::<T>(v, 0.0);
    let (a0, a1, a2, a3) = (a.a0, a.a1, a.a2, a.a3);
    let a1_2 = a1 * a1;
    let a2_2 = a2 * a2;
    let a3_2 = a3 * a3;
    let a3_3 = a3_2 * a3;
    let a3_4 = a3_3 * a3;
    let a3_5 = a3_4 * a3;
    let a3_6 = a3_5 * a3;
    a0 * a3_2 * r(64.0) - a1_2 * r(64.0) + a1 * a2 * a3 * r(128.0)
        - a1 * a3_3 * r(64.0)
        - a2_2 * a3_2 * r(64.0)
        + a2 * a3_4 * r(48.0)
        - a3_6 * r(8.0)
}

/// Biquadratic constant coefficient (the eliminant's `y^0` term), transcribed.
pub fn biquadratic_b0<T: Real>(a: &QuarticCoeffs<T>, t: &TschirnhausCubic<T>) -> Complex<T> {
    let r = |v: f64| cplx::<T>(v, 0.0);
    let (a0, a1, a2, a3) = (a.a0, a.a1, a.a2, a.a3);
    let (b0, b1, b2) = (t.b0, t.b1, t.b2);
    let a0_2 = a0 * a0;
    let a0_3 = a0_2 * a0;
    let a1_2 = a1 * a1;
    let a1_3 = a1_2 * a1;
    let a2_2 = a2 * a2;
    let a2_3 = a2_2 * a2;
    let a3_2 = a3 * a3;
    let a3_3 = a3_2 * a3;
    let b0_2 = b0 * b0;
    let b0_3 = b0_2 * b0;
    let b0_4 = b0_3 * b0;
    let b1_2 = b1 * b1;
    let b1_3 = b1_2 * b1;
    let b1_4 = b1_3 * b1;
    let b2_2 = b2 * b2;
    let b2_3 = b2_2 * b2;
    let b2_4 = b2_3 * b2;
    a0_3 - a0_2 * a1 * b2 - a0_2 * a2 * b1 * r(2.0) + a0_2 * a2 * b2_2
        - a0_2 * a3 * b0 * r(3.0)
        + a0_2 * a3 * b1 * b2 * r(3.0)
        - a0_2 * a3 * b2_3
        + a0_2 * b0 * b2 * r(4.0)
        + a0_2 * b1_2 * r(2.0)
        - a0_2 * b1 * b2_2 * r(4.0)
        + a0_2 * b2_4
        + a0 * a1_2 * b1
        + a0 * a1 * a2 * b0 * r(3.0)
        - a0 * a1 * a2 * b1 * b2
        - a0 * a1 * a3 * b0 * b2
        - a0 * a1 * a3 * b1_2 * r(2.0)
        + a0 * a1 * a3 * b1 * b2_2
        - a0 * a1 * b0 * b1 * r(5.0)
        + a0 * a1 * b0 * b2_2
        + a0 * a1 * b1_2 * b2 * r(3.0)
        - a0 * a1 * b1 * b2_3
        - a0 * a2_2 * b0 * b2 * r(2.0)
        + a0 * a2_2 * b1_2
        + a0 * a2 * a3 * b0 * b1
        + a0 * a2 * a3 * b0 * b2_2 * r(2.0)
        - a0 * a2 * a3 * b1_2 * b2
        - a0 * a2 * b0_2 * r(3.0)
        + a0 * a2 * b0 * b1 * b2 * r(4.0)
        - a0 * a2 * b0 * b2_3 * r(2.0)
        - a0 * a2 * b1_3 * r(2.0)
        + a0 * a2 * b1_2 * b2_2
        + a0 * a3_2 * b0_2 * r(3.0)
        - a0 * a3_2 * b0 * b1 * b2 * r(3.0)
        + a0 * a3_2 * b1_3
        - a0 * a3 * b0_2 * b2 * r(5.0)
        + a0 * a3 * b0 * b1_2
        + a0 * a3 * b0 * b1 * b2_2 * r(3.0)
        - a0 * a3 * b1_3 * b2
        + a0 * b0_2 * b1 * r(4.0)
        + a0 * b0_2 * b2_2 * r(2.0)
        - a0 * b0 * b1_2 * b2 * r(4.0)
        + a0 * b1_4
        - a1_3 * b0
        + a1_2 * a2 * b0 * b2
        + a1_2 * a3 * b0 * b1 * r(2.0)
        - a1_2 * a3 * b0 * b2_2
        + a1_2 * b0_2 * r(3.0)
        - a1_2 * b0 * b1 * b2 * r(3.0)
        + a1_2 * b0 * b2_3
        - a1 * a2_2 * b0 * b1
        - a1 * a2 * a3 * b0_2 * r(3.0)
        + a1 * a2 * a3 * b0 * b1 * b2
        + a1 * a2 * b0_2 * b2
        + a1 * a2 * b0 * b1_2 * r(2.0)
        - a1 * a2 * b0 * b1 * b2_2
        + a1 * a3_2 * b0_2 * b2 * r(2.0)
        - a1 * a3_2 * b0 * b1_2
        - a1 * a3 * b0_2 * b1
        - a1 * a3 * b0_2 * b2_2 * r(2.0)
        + a1 * a3 * b0 * b1_2 * b2
        - a1 * b0_3 * r(3.0)
        + a1 * b0_2 * b1 * b2 * r(3.0)
        - a1 * b0 * b1_3
        + a2_3 * b0_2
        - a2_2 * a3 * b0_2 * b2
        - a2_2 * b0_2 * b1 * r(2.0)
        + a2_2 * b0_2 * b2_2
        + a2 * a3_2 * b0_2 * b1
        + a2 * a3 * b0_3 * r(3.0)
        - a2 * a3 * b0_2 * b1 * b2
        - a2 * b0_3 * b2 * r(2.0)
        + a2 * b0_2 * b1_2
        - a3_3 * b0_3
        + a3_2 * b0_3 * b2
        - a3 * b0_3 * b1
        + b0_4
}

/// Biquadratic quadratic coefficient (the eliminant's `y^2` term), transcribed.
pub fn biquadratic_b2<T: Real>(a: &QuarticCoeffs<T>, t: &TschirnhausCubic<T>) -> Complex<T> {
    let r = |v: f64| cplx::<T>(v, 0.0);
    let (a0, a1, a2, a3) = (a.a0, a.a1, a.a2, a.a3);
    let (b0, b1, b2) = (t.b0, t.b1, t.b2);
    let a1_2 = a1 * a1;
    let a2_2 = a2 * a2;
    let a2_3 = a2_2 * a2;
    let a3_2 = a3 * a3;
    let a3_3 = a3_2 * a3;
    let b0_2 = b0 * b0;
    let b1_2 = b1 * b1;
    let b2_2 = b2 * b2;
    -a0 * a2 * r(3.0) + a0 * a3_2 * r(3.0) - a0 * a3 * b2 * r(5.0)
        + a0 * b1 * r(4.0)
        + a0 * b2_2 * r(2.0)
        + a1_2 * r(3.0)
        - a1 * a2 * a3 * r(3.0)
        + a1 * a2 * b2
        + a1 * a3_2 * b2 * r(2.0)
        - a1 * a3 * b1
        - a1 * a3 * b2_2 * r(2.0)
        - a1 * b0 * r(9.0)
        + a1 * b1 * b2 * r(3.0)
        + a2_3
        - a2_2 * a3 * b2
        - a2_2 * b1 * r(2.0)
        + a2_2 * b2_2
        + a2 * a3_2 * b1
        + a2 * a3 * b0 * r(9.0)
        - a2 * a3 * b1 * b2
        - a2 * b0 * b2 * r(6.0)
        + a2 * b1_2
        - a3_3 * b0 * r(3.0)
        + a3_2 * b0 * b2 * r(3.0)
        - a3 * b0 * b1 * r(3.0)
        + b0_2 * r(6.0)
}

/// All three roots of the resolvent cubic, principal Cardano root first.
pub fn resolvent_b0_roots<T: Real>(
    rc: &ResolventCubicCoeffs<T>,
) -> Result<[Complex<T>; 3], SolveError> {
    let scale = rc
        .b03
        .norm()
        .max(rc.b02.norm())
        .max(rc.b01.norm())
        .max(rc.b00.norm());
    if scale == T::zero() || rc.b03.norm() <= T::of(1e-12) * scale {
        return Err(SolveError::DegenerateResolvent);
    }
    let b2 = rc.b02 / rc.b03;
    let b1 = rc.b01 / rc.b03;
    let b0 = rc.b00 / rc.b03;
    cubic_roots(b0, b1, b2, Complex::zero(), 0).map_err(|_| SolveError::DegenerateResolvent)
}

/// The transform constant `b0`: the principal Cardano root of the resolvent.
pub fn transform_b0<T: Real>(rc: &ResolventCubicCoeffs<T>) -> Result<Complex<T>, SolveError> {
    Ok(resolvent_b0_roots(rc)?[0])
}

/// Twelve candidates under the principal resolvent root and the given
/// cube-root branch, residuals populated against the quartic.
pub fn generate_candidates<T: Real>(
    a: &QuarticCoeffs<T>,
    branch: u8,
) -> Result<Vec<CandidateRoot<T>>, SolveError> {
    if a.is_degenerate(T::of(1e-6)) {
        return Err(SolveError::DegenerateQuartic);
    }
    let roots = oracle::aberth_all_roots(
        &a.to_polynomial(),
        oracle::oracle_tol::<T>(),
        oracle::ORACLE_MAX_ITER,
    )?;
    let rc = oracle::resolvent_from_roots(a, &roots.roots, a.transform_margin());
    let b0 = transform_b0(&rc)?;
    candidates_for(a, &roots.roots, b0, branch).map(|(c, _, _)| c)
}

/// Candidate generation for a fixed transform constant, reusing the oracle
/// roots of the quartic.
fn candidates_for<T: Real>(
    a: &QuarticCoeffs<T>,
    oracle_roots: &[Complex<T>],
    b0: Complex<T>,
    branch: u8,
) -> Result<(Vec<CandidateRoot<T>>, TschirnhausCubic<T>, BiquadraticResolvent<T>), SolveError> {
    let b1 = Complex::zero();
    let b2 = tschirnhaus_b2(a, b0, b1)?;
    let t = TschirnhausCubic { b0, b1, b2 };
    let el = oracle::eliminant_from_roots(oracle_roots, &t);
    let res = BiquadraticResolvent { b2: el.c[2], b0: el.c[0] };
    let p = a.to_polynomial();
    let ys = biquadratic_roots(&res);
    let mut candidates = Vec::with_capacity(12);
    for (n, y) in ys.iter().enumerate() {
        let xs = cubic_roots(t.b0, t.b1, t.b2, *y, branch)?;
        for (m, x) in xs.iter().enumerate() {
            candidates.push(CandidateRoot {
                value: *x,
                m: m as u8 + 1,
                n: n as u8 + 1,
                residual: p.relative_residual(*x),
            });
        }
    }
    Ok((candidates, t, res))
}

/// Outcome of subset selection over the candidate pool.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Selection<T> {
    pub indices: [usize; 4],
    pub vieta_defect: T,
    pub low_confidence: bool,
}

/// Picks the four candidates minimizing the Vieta defect among all 4-subsets
/// whose members pass the residual gate; falls back to the full pool (flagged
/// low-confidence) when fewer than four candidates pass.
pub fn select_quartic_roots<T: Real>(
    p: &Polynomial<T>,
    candidates: &[CandidateRoot<T>],
    tol: T,
) -> Result<Selection<T>, SolveError> {
    let passing: Vec<bool> = candidates.iter().map(|c| c.residual <= tol).collect();
    select_with_mask(p, candidates, &passing, tol)
}

fn select_with_mask<T: Real>(
    p: &Polynomial<T>,
    candidates: &[CandidateRoot<T>],
    passing: &[bool],
    tol: T,
) -> Result<Selection<T>, SolveError> {
    if candidates.len() < 4 {
        return Err(SolveError::SelectionFailed);
    }
    let pool: Vec<usize> = (0..candidates.len()).filter(|&i| passing[i]).collect();
    let (pool, low_confidence) = if pool.len() >= 4 {
        (pool, false)
    } else {
        ((0..candidates.len()).collect(), true)
    };

    let mut best: Option<([usize; 4], T)> = None;
    let k = pool.len();
    for i in 0..k {
        for j in (i + 1)..k {
            for l in (j + 1)..k {
                for q in (l + 1)..k {
                    let subset = [pool[i], pool[j], pool[l], pool[q]];
                    let values: Vec<Complex<T>> =
                        subset.iter().map(|&ix| candidates[ix].value).collect();
                    let defect = p.vieta_defect(&values);
                    if best.map_or(true, |(_, d)| defect < d) {
                        best = Some((subset, defect));
                    }
                }
            }
        }
    }
    let (indices, vieta_defect) = best.ok_or(SolveError::SelectionFailed)?;
    if !(vieta_defect <= tol.sqrt()) {
        return Err(SolveError::SelectionFailed);
    }
    Ok(Selection { indices, vieta_defect, low_confidence })
}

/// Solves a quartic through the transform pipeline with shift, resolvent-root
/// and cube-root-branch retries.
pub fn solve_quartic<T: Real>(
    p: &Polynomial<T>,
    cfg: &SolverConfig<T>,
) -> Result<SolveReport<T>, SolveError> {
    solve_quartic_inner(p, cfg, None)
}

/// Quartic solve whose candidate filter additionally requires each accepted
/// candidate to satisfy `second` (mapped back through any shift).
pub fn solve_quartic_dual<T: Real>(
    p: &Polynomial<T>,
    cfg: &SolverConfig<T>,
    second: &Polynomial<T>,
) -> Result<SolveReport<T>, SolveError> {
    solve_quartic_inner(p, cfg, Some(second))
}

pub(crate) fn solve_quartic_inner<T: Real>(
    p: &Polynomial<T>,
    cfg: &SolverConfig<T>,
    second: Option<&Polynomial<T>>,
) -> Result<SolveReport<T>, SolveError> {
    let pm = p.normalize_monic()?;
    if pm.degree() != 4 {
        return Err(SolveError::DegreeMismatch { expected: 4, got: pm.degree() });
    }
    let a = QuarticCoeffs::from_polynomial(&pm)?;
    let scale = a.root_scale();
    if scale == T::zero() {
        // x^4 exactly: quadruple root at the origin
        let roots = RootSet::new(&pm, vec![Complex::zero(); 4]);
        let zero = Complex::zero();
        return Ok(SolveReport {
            vieta_defect: pm.vieta_defect(&roots.roots),
            roots,
            candidates: Vec::new(),
            transform: TschirnhausCubic { b0: zero, b1: zero, b2: zero },
            resolvent: BiquadraticResolvent { b2: zero, b0: zero },
            low_confidence: false,
            shift: zero,
            b0_index: 0,
            branch: 0,
            tol: cfg.tol,
        });
    }

    // deterministic shift schedule, scaled to the quartic's own magnitude
    let shifts: [Complex<T>; 4] = [
        Complex::zero(),
        cplx::<T>(1.0, 0.0) * scale,
        cplx::<T>(0.0, 1.0) * scale,
        cplx::<T>(1.0, 1.0) * scale,
    ];

    let mut attempted_selection = false;
    for s in shifts {
        let q = if s.is_zero() { pm.clone() } else { pm.shift(s) };
        let aq = QuarticCoeffs::from_polynomial(&q)?;
        if aq.is_degenerate(cfg.degeneracy_threshold) {
            continue;
        }
        let oracle_roots = match oracle::aberth_all_roots(
            &q,
            oracle::oracle_tol::<T>(),
            oracle::ORACLE_MAX_ITER,
        ) {
            Ok(rs) => rs.roots,
            Err(SolveError::NoConvergence) => continue,
            Err(e) => return Err(e),
        };
        let rc = oracle::resolvent_from_roots(&aq, &oracle_roots, aq.transform_margin());
        let b0_roots = match resolvent_b0_roots(&rc) {
            Ok(roots) => roots,
            Err(_) => continue,
        };

        for branch in 0..=cfg.max_branch_retries.min(2) as u8 {
            for (b0_index, b0) in b0_roots.iter().enumerate() {
                let (candidates, transform, resolvent) =
                    match candidates_for(&aq, &oracle_roots, *b0, branch) {
                        Ok(parts) => parts,
                        Err(SolveError::DegenerateCubic) => continue,
                        Err(e) if e.is_degenerate() => break,
                        Err(e) => return Err(e),
                    };

                let alt_residuals: Vec<Option<T>> = candidates
                    .iter()
                    .map(|c| second.map(|sp| sp.relative_residual(c.value + s)))
                    .collect();
                let passing: Vec<bool> = candidates
                    .iter()
                    .zip(&alt_residuals)
                    .map(|(c, alt)| {
                        c.residual <= cfg.tol && alt.map_or(true, |ra| ra <= cfg.tol)
                    })
                    .collect();

                attempted_selection = true;
                let selection = match select_with_mask(&q, &candidates, &passing, cfg.tol) {
                    Ok(sel) => sel,
                    Err(SolveError::SelectionFailed) => continue,
                    Err(e) => return Err(e),
                };

                let polished: Vec<Complex<T>> = selection
                    .indices
                    .iter()
                    .map(|&i| pm.newton_polish(candidates[i].value + s, cfg.polish_steps))
                    .collect();
                let roots = RootSet::new(&pm, polished);
                let vieta_defect = pm.vieta_defect(&roots.roots);
                let trace = candidates
                    .iter()
                    .zip(&alt_residuals)
                    .enumerate()
                    .map(|(i, (c, alt))| CandidateTrace {
                        candidate: *c,
                        residual_alt: *alt,
                        accepted: selection.indices.contains(&i),
                    })
                    .collect();
                return Ok(SolveReport {
                    roots,
                    vieta_defect,
                    candidates: trace,
                    transform,
                    resolvent,
                    low_confidence: selection.low_confidence,
                    shift: s,
                    b0_index,
                    branch,
                    tol: cfg.tol,
                });
            }
        }
    }

    Err(if attempted_selection {
        SolveError::SelectionFailed
    } else {
        SolveError::DegenerateQuartic
    })
}
