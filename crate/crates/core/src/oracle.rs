//! Independent ground-truth engines: a simultaneous-iteration all-roots
//! solver, and a numeric eliminant that recomputes the resolvent coefficients
//! without trusting any transcribed formula.
//!
//! The eliminant of the quartic `p` and the cubic transform
//! `x^3 + b2 x^2 + b1 x + b0 + y` is the degree-4 polynomial in `y`
//!
//! ```text
//! R(y) = prod_i (y + x_i^3 + b2 x_i^2 + b1 x_i + b0)
//! ```
//!
//! over the quartic roots `x_i`, which this module computes through the
//! iterative solver rather than through a symbolic Sylvester determinant.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::SolveError;
use crate::poly::{Polynomial, RootSet};
use crate::quartic::{QuarticCoeffs, ResolventCubicCoeffs, TschirnhausCubic};
use crate::scalar::{cplx, Real};

/// Iteration budget used when the oracle runs as an internal subroutine.
pub(crate) const ORACLE_MAX_ITER: usize = 400;

/// Residual gate used for internal oracle calls.
pub(crate) fn oracle_tol<T: Real>() -> T {
    T::epsilon().sqrt()
}

/// All roots of `p` by simultaneous Ehrlich-Aberth iteration.
///
/// Deterministic: initial guesses sit on a circle at the root-magnitude
/// bound (twice the root scale, so uniformly tiny or huge polynomials start
/// at their own magnitude) at fixed, pairwise-distinct angles, and sweeps
/// update in index order. Iteration continues until every correction
/// stagnates at rounding level relative to the root scale, so clustered tiny
/// roots converge to full relative accuracy; every root must then pass the
/// `tol` residual gate.
pub fn aberth_all_roots<T: Real>(
    p: &Polynomial<T>,
    tol: T,
    max_iter: usize,
) -> Result<RootSet<T>, SolveError> {
    let pm = p.normalize_monic()?;
    let d = pm.degree();
    if d == 0 {
        return Err(SolveError::DegreeMismatch { expected: 1, got: 0 });
    }
    if d == 1 {
        return Ok(RootSet::new(&pm, vec![-pm.coeff(0)]));
    }
    let scale = pm.root_scale();
    if scale == T::zero() {
        // monomial x^d: all roots exactly zero
        return Ok(RootSet::new(&pm, vec![Complex::zero(); d]));
    }

    let radius = scale * T::of(2.0);
    let step_floor = T::epsilon() * T::of(64.0);
    let tau = std::f64::consts::TAU;

    let mut z: Vec<Complex<T>> = (0..d)
        .map(|i| {
            // distinct angle perturbations break coefficient symmetries
            let angle = tau * (i as f64) / (d as f64) + 0.45 + 0.13 * i as f64;
            Complex::from_polar(radius, T::of(angle))
        })
        .collect();

    for _ in 0..max_iter {
        // keep iterates pairwise distinct so the repulsion terms stay finite
        for i in 0..d {
            for j in 0..i {
                if z[i] == z[j] {
                    z[i] = z[i] + cplx::<T>(1e-9, 2e-9) * (radius + z[i].norm());
                }
            }
        }
        let mut converged = true;
        for i in 0..d {
            let (pv, dv) = pm.eval_with_derivative(z[i]);
            if pv.is_zero() {
                continue;
            }
            let newton = pv / dv;
            let mut repulsion = Complex::zero();
            for j in 0..d {
                if j != i {
                    repulsion = repulsion + (z[i] - z[j]).inv();
                }
            }
            let denom = Complex::<T>::one() - newton * repulsion;
            let mut w: Complex<T> = newton / denom;
            if !w.re.is_finite() || !w.im.is_finite() {
                w = newton;
            }
            if !w.re.is_finite() || !w.im.is_finite() {
                // derivative collapsed; nudge deterministically and retry
                z[i] = z[i] + cplx::<T>(1e-3, 2e-3) * (T::one() + z[i].norm());
                converged = false;
                continue;
            }
            z[i] = z[i] - w;
            if w.norm() > step_floor * (scale + z[i].norm()) {
                converged = false;
            }
        }
        if converged {
            break;
        }
    }

    let roots = RootSet::new(&pm, z);
    if roots.residuals.iter().any(|r| !(*r <= tol)) {
        return Err(SolveError::NoConvergence);
    }
    Ok(roots)
}

/// Coefficients `c0..c4` (ascending) of the eliminant in `y`; `c4 = 1` for a
/// monic quartic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EliminantCoeffs<T> {
    pub c: [Complex<T>; 5],
}

/// Eliminant of the quartic and the cubic transform, through oracle roots.
pub fn eliminant_coeffs<T: Real>(
    a: &QuarticCoeffs<T>,
    t: &TschirnhausCubic<T>,
) -> Result<EliminantCoeffs<T>, SolveError> {
    let roots = aberth_all_roots(&a.to_polynomial(), oracle_tol::<T>(), ORACLE_MAX_ITER)?;
    Ok(eliminant_from_roots(&roots.roots, t))
}

/// Expands `prod_i (y + u_i)` with `u_i` the transform values at the given
/// quartic roots.
pub(crate) fn eliminant_from_roots<T: Real>(
    roots: &[Complex<T>],
    t: &TschirnhausCubic<T>,
) -> EliminantCoeffs<T> {
    debug_assert_eq!(roots.len(), 4);
    let mut c = [Complex::<T>::zero(); 5];
    c[0] = Complex::one();
    let mut deg = 0usize;
    for x in roots {
        let u = ((*x + t.b2) * *x + t.b1) * *x + t.b0;
        // multiply the accumulator by (y + u)
        c[deg + 1] = c[deg];
        for k in (1..=deg).rev() {
            c[k] = c[k - 1] + u * c[k];
        }
        c[0] = u * c[0];
        deg += 1;
    }
    EliminantCoeffs { c }
}

/// Resolvent cubic for `b0` recovered numerically from the eliminant.
///
/// With `b1 = 0` and `b2` the linear function of `b0` that cancels the
/// eliminant's `y^3` coefficient, the `y^1` coefficient is a cubic in `b0`.
/// Its coefficients are expanded exactly from the oracle roots (each factor
/// of the root product is affine in `b0`), which already lands them on the
/// `(a3^2 - 2*a2)^-3` normalization of the closed-form transcription.
pub fn resolvent_cubic_by_elimination<T: Real>(
    a: &QuarticCoeffs<T>,
) -> Result<ResolventCubicCoeffs<T>, SolveError> {
    let margin = a.transform_margin();
    if a.is_degenerate(T::of(1e-6)) {
        return Err(SolveError::DegenerateQuartic);
    }
    let roots = aberth_all_roots(&a.to_polynomial(), oracle_tol::<T>(), ORACLE_MAX_ITER)?;
    Ok(resolvent_from_roots(a, &roots.roots, margin))
}

pub(crate) fn resolvent_from_roots<T: Real>(
    a: &QuarticCoeffs<T>,
    roots: &[Complex<T>],
    margin: Complex<T>,
) -> ResolventCubicCoeffs<T> {
    let r = |v: f64| cplx::<T>(v, 0.0);
    // b2(b0) = alpha + gamma*b0 cancels the y^3 coefficient
    let alpha = (a.a3 * a.a3 * a.a3 + a.a1 * r(3.0) - a.a3 * a.a2 * r(3.0)) / margin;
    let gamma = r(-4.0) / margin;

    // u_i(b0) = p_i + b0*q_i with p_i = x^3 + alpha*x^2, q_i = 1 + gamma*x^2
    let pq: Vec<(Complex<T>, Complex<T>)> = roots
        .iter()
        .map(|x| {
            let x2 = *x * *x;
            (x2 * (*x + alpha), Complex::<T>::one() + gamma * x2)
        })
        .collect();

    // c1(b0) = sum_i prod_{j != i} u_j(b0), a cubic in b0
    let mut cubic = [Complex::<T>::zero(); 4];
    for i in 0..pq.len() {
        let mut acc = [Complex::<T>::zero(); 4];
        acc[0] = Complex::one();
        let mut deg = 0usize;
        for (j, (p, q)) in pq.iter().enumerate() {
            if j == i {
                continue;
            }
            acc[deg + 1] = *q * acc[deg];
            for k in (1..=deg).rev() {
                acc[k] = *p * acc[k] + *q * acc[k - 1];
            }
            acc[0] = *p * acc[0];
            deg += 1;
        }
        for k in 0..4 {
            cubic[k] = cubic[k] + acc[k];
        }
    }

    ResolventCubicCoeffs {
        b00: cubic[0],
        b01: cubic[1],
        b02: cubic[2],
        b03: cubic[3],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;
    use crate::testutil::assert_multiset_close;

    type C = Complex<f64>;

    fn poly(descending: &[f64]) -> Polynomial<f64> {
        let c: Vec<C> = descending.iter().map(|&v| C::new(v, 0.0)).collect();
        Polynomial::from_descending(&c)
    }

    #[test]
    fn aberth_quadratic_and_quintic() {
        let rs = aberth_all_roots(&poly(&[1.0, 0.0, 1.0]), 1e-12, 200).unwrap();
        assert!((rs.roots[0] - C::new(0.0, -1.0)).norm() < 1e-12);
        assert!((rs.roots[1] - C::new(0.0, 1.0)).norm() < 1e-12);

        let rs = aberth_all_roots(&poly(&[1.0, 0.0, 0.0, 0.0, 0.0, -1.0]), 1e-12, 400).unwrap();
        let tau = std::f64::consts::TAU;
        let expected: Vec<C> = (0..5).map(|k| C::from_polar(1.0, tau * k as f64 / 5.0)).collect();
        assert_multiset_close(&rs.roots, &expected, 1e-12);
    }

    #[test]
    fn aberth_factorial_quartic() {
        // prod (x - k), k = 1..4
        let rs = aberth_all_roots(&poly(&[1.0, -10.0, 35.0, -50.0, 24.0]), 1e-10, 400).unwrap();
        for (got, want) in rs.roots.iter().zip([1.0, 2.0, 3.0, 4.0]) {
            assert!((got - C::new(want, 0.0)).norm() < 1e-10);
        }
    }

    #[test]
    fn aberth_zero_budget_diverges() {
        let err = aberth_all_roots(&poly(&[1.0, 0.0, 0.0, 0.0, 0.0, -1.0]), 1e-12, 0);
        assert!(matches!(err, Err(SolveError::NoConvergence)));
    }

    #[test]
    fn aberth_monomial_roots_are_exact() {
        let rs = aberth_all_roots(&poly(&[1.0, 0.0, 0.0, 0.0, 0.0, 0.0]), 1e-10, 400).unwrap();
        for root in &rs.roots {
            assert_eq!(*root, C::new(0.0, 0.0));
        }
    }

    #[test]
    fn aberth_multiple_root_accuracy() {
        // quintuple root at 2^-10: a residual stop alone would quit around
        // |z - t| ~ tol^(1/5); the stagnation rule keeps contracting
        let t = C::new(2f64.powi(-10), 0.0);
        let p = Polynomial::from_roots(&[t; 5]);
        let rs = aberth_all_roots(&p, 1e-10, 400).unwrap();
        for root in &rs.roots {
            assert!((root - t).norm() < 1e-5, "|root - t| = {}", (root - t).norm());
        }
    }

    #[test]
    fn eliminant_binomial_example() {
        // quartic x^4 (all roots 0) with t = (b0, b1, b2) = (1, 0, 0):
        // R(y) = (y + 1)^4
        let t = TschirnhausCubic {
            b0: C::new(1.0, 0.0),
            b1: C::new(0.0, 0.0),
            b2: C::new(0.0, 0.0),
        };
        let el = eliminant_from_roots(&[C::new(0.0, 0.0); 4], &t);
        let want = [1.0, 4.0, 6.0, 4.0, 1.0];
        for (c, w) in el.c.iter().zip(want) {
            assert!((c - C::new(w, 0.0)).norm() < 1e-15);
        }
        // zero transform gives R(y) = y^4
        let t0 = TschirnhausCubic {
            b0: C::new(0.0, 0.0),
            b1: C::new(0.0, 0.0),
            b2: C::new(0.0, 0.0),
        };
        let el0 = eliminant_from_roots(&[C::new(0.0, 0.0); 4], &t0);
        assert_eq!(el0.c[4], C::new(1.0, 0.0));
        for c in &el0.c[..4] {
            assert!(c.norm() < 1e-15);
        }
    }
}
