//! Scalar abstraction: every solver is generic over the underlying float.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, NumAssign, NumCast};

/// Floating-point scalar the solvers operate on.
///
/// Blanket-implemented for `f32` and `f64`; the default tolerances are
/// calibrated for `f64`.
pub trait Real:
    Float + FloatConst + NumAssign + NumCast + Debug + Display + Send + Sync + 'static
{
    /// Converts an `f64` constant, saturating through `NumCast`.
    #[inline]
    fn of(v: f64) -> Self {
        NumCast::from(v).expect("constant not representable in scalar type")
    }
}

impl<T> Real for T where
    T: Float + FloatConst + NumAssign + NumCast + Debug + Display + Send + Sync + 'static
{
}

/// Complex value from real parts given as `f64` constants.
#[inline]
pub fn cplx<T: Real>(re: f64, im: f64) -> Complex<T> {
    Complex::new(T::of(re), T::of(im))
}

/// Lexicographic (re, im) ordering used for all root output.
///
/// Non-finite values sort last so selection never promotes them; negative
/// zeros compare equal to positive zeros.
pub fn lex_cmp<T: Real>(a: &Complex<T>, b: &Complex<T>) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    let key = |x: T| if x.is_nan() { T::infinity() } else { x + T::zero() };
    match key(a.re).partial_cmp(&key(b.re)) {
        Some(Ordering::Equal) | None => key(a.im).partial_cmp(&key(b.im)).unwrap_or(Ordering::Equal),
        Some(ord) => ord,
    }
}

/// Scrubs `-0.0` components so formatted output is stable.
#[inline]
pub fn clean_zero<T: Real>(z: Complex<T>) -> Complex<T> {
    let fix = |x: T| if x == T::zero() { T::zero() } else { x };
    Complex::new(fix(z.re), fix(z.im))
}
