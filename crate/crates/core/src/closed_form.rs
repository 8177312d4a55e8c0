//! Radical formulas with explicit branch control: the biquadratic quartic in
//! `y`, and the Cardano cubic used both for the resolvent and for the cubic
//! transform back-substitution.
//!
//! All radicals take principal branches; the cube-root branch of the Cardano
//! discriminant is exposed so callers can enumerate the alternatives.

use num_complex::Complex;

use crate::error::SolveError;
use crate::scalar::{clean_zero, cplx, Real};

/// Coefficients of the biquadratic `y^4 + b2*y^2 + b0 = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BiquadraticResolvent<T> {
    pub b2: Complex<T>,
    pub b0: Complex<T>,
}

/// The four roots `(y1, -y1, y3, -y3)` of `y^4 + b2*y^2 + b0 = 0`.
///
/// `y1 = sqrt(-2*b2 + 2*sqrt(b2^2 - 4*b0)) / 2` with principal square roots;
/// `y3` takes the conjugate inner sign. The `y2 = -y1`, `y4 = -y3` pairing is
/// exact by construction.
pub fn biquadratic_roots<T: Real>(res: &BiquadraticResolvent<T>) -> [Complex<T>; 4] {
    let two = cplx::<T>(2.0, 0.0);
    let four = cplx::<T>(4.0, 0.0);
    let half = cplx::<T>(0.5, 0.0);
    // scrub signed zeros so values on the branch cut take the principal side
    let inner = clean_zero(res.b2 * res.b2 - four * res.b0).sqrt();
    let y1 = clean_zero(-two * res.b2 + two * inner).sqrt() * half;
    let y3 = clean_zero(-two * res.b2 - two * inner).sqrt() * half;
    [y1, -y1, y3, -y3]
}

/// Cube root of the Cardano radicand for `x^3 + b2*x^2 + b1*x + (b0 + y) = 0`,
/// rotated onto the requested branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CardanoDiscriminant<T> {
    pub delta: Complex<T>,
    /// Cube-root branch in {0, 1, 2}; branch k multiplies the principal root
    /// by exp(2*pi*i*k/3).
    pub branch: u8,
}

fn branch_rotation<T: Real>(branch: u8) -> Complex<T> {
    let half_sqrt3 = 3f64.sqrt() / 2.0;
    match branch % 3 {
        0 => cplx(1.0, 0.0),
        1 => cplx(-0.5, half_sqrt3),
        _ => cplx(-0.5, -half_sqrt3),
    }
}

/// Branch-selected cube root of
/// `36*b1*b2 - 108*y - 108*b0 - 8*b2^3 + 12*sqrt(R)` where
/// `R = 12*b1^3 - 3*b1^2*b2^2 - 54*b1*b2*y - 54*b1*b2*b0 + 81*y^2 + 162*y*b0
///  + 12*y*b2^3 + 81*b0^2 + 12*b0*b2^3`, principal square root inside.
pub fn cardano_delta<T: Real>(
    b0: Complex<T>,
    b1: Complex<T>,
    b2: Complex<T>,
    y: Complex<T>,
    branch: u8,
) -> CardanoDiscriminant<T> {
    let r = |v: f64| cplx::<T>(v, 0.0);
    let b1_2 = b1 * b1;
    let b1_3 = b1_2 * b1;
    let b2_2 = b2 * b2;
    let b2_3 = b2_2 * b2;
    let inner = b1_3 * r(12.0) - b1_2 * b2_2 * r(3.0) - b1 * b2 * y * r(54.0)
        - b1 * b2 * b0 * r(54.0)
        + y * y * r(81.0)
        + y * b0 * r(162.0)
        + y * b2_3 * r(12.0)
        + b0 * b0 * r(81.0)
        + b0 * b2_3 * r(12.0);
    let radicand = b1 * b2 * r(36.0) - y * r(108.0) - b0 * r(108.0) - b2_3 * r(8.0)
        + clean_zero(inner).sqrt() * r(12.0);
    let delta = clean_zero(radicand).cbrt() * branch_rotation::<T>(branch);
    CardanoDiscriminant { delta, branch: branch % 3 }
}

/// The three roots of `x^3 + b2*x^2 + b1*x + (b0 + y) = 0` under the given
/// cube-root branch.
///
/// With `D` the branch-selected discriminant and `t = (b1 - b2^2/3)/D`:
/// `x1 = D/6 - 2t - b2/3`, `x2/x3 = -D/12 + t - b2/3 ± i*sqrt(3)*(D/12 + t)`.
/// The three branches permute the same root multiset.
pub fn cubic_roots<T: Real>(
    b0: Complex<T>,
    b1: Complex<T>,
    b2: Complex<T>,
    y: Complex<T>,
    branch: u8,
) -> Result<[Complex<T>; 3], SolveError> {
    let d = cardano_delta(b0, b1, b2, y, branch).delta;
    // underflow guard only; genuinely repeated roots are for callers to
    // escape by perturbation or shift
    if !d.re.is_finite() || !d.im.is_finite() || d.norm() <= T::of(1e-300) {
        return Err(SolveError::DegenerateCubic);
    }
    let r = |v: f64| cplx::<T>(v, 0.0);
    let third = r(1.0 / 3.0);
    let t = (b1 - b2 * b2 * third) / d;
    let b2_3 = b2 * third;
    let i_sqrt3 = cplx::<T>(0.0, 3f64.sqrt());
    let d6 = d / r(6.0);
    let d12 = d / r(12.0);
    let x1 = d6 - t * r(2.0) - b2_3;
    let x2 = -d12 + t - b2_3 + i_sqrt3 * (d12 + t);
    let x3 = -d12 + t - b2_3 - i_sqrt3 * (d12 + t);
    Ok([x1, x2, x3])
}

/// Total cubic solver for a monic `x^3 + b2*x^2 + b1*x + b0`.
///
/// Uses the branch-0 radical formula and, when the discriminant degenerates
/// (which forces the depressed linear coefficient to vanish), falls back to
/// the direct cube roots of the depressed constant.
pub fn solve_cubic_monic<T: Real>(
    b0: Complex<T>,
    b1: Complex<T>,
    b2: Complex<T>,
) -> [Complex<T>; 3] {
    let zero = Complex::new(T::zero(), T::zero());
    match cubic_roots(b0, b1, b2, zero, 0) {
        Ok(roots) => roots,
        Err(_) => {
            let r = |v: f64| cplx::<T>(v, 0.0);
            let third = r(1.0 / 3.0);
            // depressed form x = z - b2/3: z^3 + p*z + q with p ~ 0 here
            let q = b2 * b2 * b2 * r(2.0 / 27.0) - b2 * b1 * third + b0;
            let c = clean_zero(-q).cbrt();
            let shift = b2 * third;
            [
                c - shift,
                c * branch_rotation::<T>(1) - shift,
                c * branch_rotation::<T>(2) - shift,
            ]
        }
    }
}
