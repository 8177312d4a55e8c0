//! Complex polynomials: evaluation, residuals, deflation, shifts and the
//! Vieta consistency check shared by every solver stage.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::SolveError;
use crate::scalar::{clean_zero, lex_cmp, Real};

/// Dense univariate polynomial over complex scalars, ascending by power.
///
/// Trailing zero coefficients are trimmed on construction, so `degree` is
/// always the index of the highest structurally nonzero coefficient. The zero
/// polynomial is kept as a single zero coefficient.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<T> {
    coeffs: Vec<Complex<T>>,
}

impl<T: Real> Polynomial<T> {
    /// Builds from ascending coefficients, trimming trailing exact zeros.
    pub fn new(mut coeffs: Vec<Complex<T>>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Complex::zero());
        }
        Polynomial { coeffs }
    }

    /// Builds from descending coefficients (leading term first).
    pub fn from_descending(coeffs: &[Complex<T>]) -> Self {
        let mut c: Vec<_> = coeffs.to_vec();
        c.reverse();
        Self::new(c)
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[Complex<T>]) -> Self {
        let mut coeffs = vec![Complex::one()];
        for r in roots {
            // multiply by (x - r), ascending order maintained in place
            coeffs.push(Complex::zero());
            for k in (0..coeffs.len() - 1).rev() {
                let lower = coeffs[k] * -*r;
                coeffs[k + 1] = coeffs[k + 1] + coeffs[k];
                coeffs[k] = lower;
            }
        }
        Self::new(coeffs)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex<T>] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Complex<T> {
        self.coeffs.get(k).copied().unwrap_or_else(Complex::zero)
    }

    pub fn leading(&self) -> Complex<T> {
        *self.coeffs.last().expect("coeffs never empty")
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// Scales so the leading coefficient is exactly one; roots unchanged.
    pub fn normalize_monic(&self) -> Result<Self, SolveError> {
        if self.is_zero() {
            return Err(SolveError::ZeroPolynomial);
        }
        let lead = self.leading();
        if lead == Complex::one() {
            return Ok(self.clone());
        }
        let mut coeffs: Vec<_> = self.coeffs.iter().map(|c| *c / lead).collect();
        *coeffs.last_mut().unwrap() = Complex::one();
        Ok(Polynomial { coeffs })
    }

    /// Horner evaluation of `p(x)`.
    pub fn eval(&self, x: Complex<T>) -> Complex<T> {
        let mut acc = Complex::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `p(x)` and `p'(x)` in one Horner pass.
    pub fn eval_with_derivative(&self, x: Complex<T>) -> (Complex<T>, Complex<T>) {
        let mut p = Complex::zero();
        let mut dp = Complex::zero();
        for c in self.coeffs.iter().rev() {
            dp = dp * x + p;
            p = p * x + c;
        }
        (p, dp)
    }

    pub fn derivative(&self) -> Self {
        if self.degree() == 0 {
            return Polynomial {
                coeffs: vec![Complex::zero()],
            };
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| *c * Complex::new(T::of(k as f64), T::zero()))
            .collect();
        Polynomial::new(coeffs)
    }

    /// Residual `|p(x)| / max(1, sum_k |a_k| |x|^k)`.
    ///
    /// Zero exactly when `p(x)` evaluates to zero; the denominator guard keeps
    /// the measure meaningful for both tiny and huge root magnitudes.
    pub fn relative_residual(&self, x: Complex<T>) -> T {
        let ax = x.norm();
        let mut denom = T::zero();
        let mut pw = T::one();
        for c in &self.coeffs {
            denom = denom + c.norm() * pw;
            pw = pw * ax;
        }
        self.eval(x).norm() / denom.max(T::one())
    }

    /// Synthetic division by `(x - r)`; the remainder `p(r)` is dropped.
    ///
    /// Valid even when `r` is not a root; the quotient then simply absorbs
    /// the truncation.
    pub fn deflate(&self, r: Complex<T>) -> Self {
        let d = self.degree();
        if d == 0 {
            return Polynomial {
                coeffs: vec![Complex::zero()],
            };
        }
        let mut q = vec![Complex::zero(); d];
        q[d - 1] = self.coeffs[d];
        for k in (1..d).rev() {
            q[k - 1] = self.coeffs[k] + r * q[k];
        }
        Polynomial::new(q)
    }

    /// Taylor shift: returns `q` with `q(z) = p(z + s)`.
    ///
    /// Roots of `q` are the roots of `p` minus `s`.
    pub fn shift(&self, s: Complex<T>) -> Self {
        let d = self.degree();
        let mut a = self.coeffs.clone();
        for k in 0..d {
            for j in (k..d).rev() {
                let carry = s * a[j + 1];
                a[j] = a[j] + carry;
            }
        }
        Polynomial::new(a)
    }

    /// Two Horner Newton steps per unit of `steps`; skips when `p'` collapses.
    pub fn newton_polish(&self, mut x: Complex<T>, steps: usize) -> Complex<T> {
        for _ in 0..steps {
            let (p, dp) = self.eval_with_derivative(x);
            if dp.norm() <= T::of(1e-300) {
                break;
            }
            let next = x - p / dp;
            if !next.re.is_finite() || !next.im.is_finite() {
                break;
            }
            x = next;
        }
        x
    }

    /// Natural root-magnitude scale `max_k |a_k / a_d|^(1/(d-k))`.
    ///
    /// Every root lies within a small constant multiple of this value; zero
    /// exactly for the monomial `a_d x^d`.
    pub fn root_scale(&self) -> T {
        let d = self.degree();
        if d == 0 {
            return T::zero();
        }
        let lead = self.leading().norm();
        let mut scale = T::zero();
        for k in 0..d {
            let mag = self.coeffs[k].norm() / lead;
            if mag > T::zero() {
                let root = mag.powf(T::one() / T::of((d - k) as f64));
                scale = scale.max(root);
            }
        }
        scale
    }

    /// Maximum coefficient defect between `p` and the monic expansion of the
    /// proposed root multiset; zero iff the multiset is exact.
    ///
    /// Requires `p` monic and `|roots| = degree(p)`.
    pub fn vieta_defect(&self, roots: &[Complex<T>]) -> T {
        debug_assert_eq!(roots.len(), self.degree());
        let expanded = Polynomial::from_roots(roots);
        let mut worst = T::zero();
        for k in 0..self.degree() {
            let d = (expanded.coeff(k) - self.coeff(k)).norm();
            if d.is_nan() {
                return T::infinity();
            }
            worst = worst.max(d);
        }
        worst
    }
}

impl<T: Real> std::fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && self.degree() > 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({} + {}i)", c.re, c.im)?;
            if k > 0 {
                write!(f, "*x^{}", k)?;
            }
            first = false;
        }
        Ok(())
    }
}

/// Roots of one polynomial paired with their relative residuals, sorted
/// lexicographically by (re, im) so output is deterministic.
#[derive(Debug, Clone)]
pub struct RootSet<T> {
    pub roots: Vec<Complex<T>>,
    pub residuals: Vec<T>,
}

impl<T: Real> RootSet<T> {
    /// Sorts the roots, scrubs negative zeros and records residuals vs `p`.
    pub fn new(p: &Polynomial<T>, mut roots: Vec<Complex<T>>) -> Self {
        for r in roots.iter_mut() {
            *r = clean_zero(*r);
        }
        roots.sort_by(lex_cmp);
        let residuals = roots.iter().map(|r| p.relative_residual(*r)).collect();
        RootSet { roots, residuals }
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn max_residual(&self) -> T {
        self.residuals
            .iter()
            .fold(T::zero(), |acc, r| acc.max(*r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cplx;

    type C = Complex<f64>;

    fn poly(descending: &[f64]) -> Polynomial<f64> {
        let c: Vec<C> = descending.iter().map(|&v| cplx(v, 0.0)).collect();
        Polynomial::from_descending(&c)
    }

    #[test]
    fn normalize_scales_to_monic() {
        let p = poly(&[2.0, 0.0, -2.0]).normalize_monic().unwrap();
        assert_eq!(p.coeffs(), &[cplx::<f64>(-1.0, 0.0), cplx(0.0, 0.0), cplx(1.0, 0.0)]);

        let already = poly(&[1.0, 0.0, 0.0, 1.0, 0.0]);
        assert_eq!(already.normalize_monic().unwrap(), already);

        let p5 = poly(&[3.0, 0.0, 0.0, 0.0, 0.0, -3.0]).normalize_monic().unwrap();
        assert_eq!(p5.coeff(0), cplx(-1.0, 0.0));
        assert_eq!(p5.coeff(5), cplx(1.0, 0.0));
    }

    #[test]
    fn normalize_rejects_zero_polynomial() {
        let z = Polynomial::new(vec![C::new(0.0, 0.0)]);
        assert_eq!(z.normalize_monic(), Err(SolveError::ZeroPolynomial));
    }

    #[test]
    fn horner_matches_known_values() {
        let p = poly(&[1.0, 0.0, 1.0]); // x^2 + 1
        assert!(p.eval(cplx(0.0, 1.0)).norm() < 1e-15);

        // product oracle: expand prod_{k=1..5} (x - k) and evaluate at a root
        let roots: Vec<C> = (1..=5).map(|k| cplx(k as f64, 0.0)).collect();
        let w = Polynomial::from_roots(&roots);
        assert_eq!(w.coeff(4), cplx(-15.0, 0.0));
        assert_eq!(w.coeff(0), cplx(-120.0, 0.0));
        assert!(w.eval(cplx(3.0, 0.0)).norm() < 1e-12);

        let q = poly(&[1.0, 0.0, 0.0, 0.0, 0.0]); // x^4
        assert_eq!(q.eval(cplx(2.0, 0.0)), cplx(16.0, 0.0));
    }

    #[test]
    fn residual_examples() {
        let p = poly(&[1.0, 0.0, -1.0]); // x^2 - 1
        assert_eq!(p.relative_residual(cplx(1.0, 0.0)), 0.0);
        // |p(0)| / max(1, |a0|) = 1
        assert_eq!(p.relative_residual(cplx(0.0, 0.0)), 1.0);
        let q = poly(&[1.0, 0.0, 0.0, 0.0, 0.0]); // x^4
        assert_eq!(q.relative_residual(cplx(0.0, 0.0)), 0.0);
    }

    #[test]
    fn residual_zero_iff_eval_zero() {
        let p = poly(&[1.0, -3.0, 2.0]);
        let x = cplx(1.0, 0.0);
        assert_eq!(p.eval(x), cplx(0.0, 0.0));
        assert_eq!(p.relative_residual(x), 0.0);
        let y = cplx(1.5, 0.0);
        assert!(p.eval(y).norm() > 0.0);
        assert!(p.relative_residual(y) > 0.0);
    }

    #[test]
    fn deflate_examples() {
        let p = poly(&[1.0, 0.0, 0.0, 0.0, 0.0, -1.0]); // x^5 - 1
        let q = p.deflate(cplx(1.0, 0.0));
        assert_eq!(
            q.coeffs(),
            &[cplx::<f64>(1.0, 0.0), cplx(1.0, 0.0), cplx(1.0, 0.0), cplx(1.0, 0.0), cplx(1.0, 0.0)]
        );

        let p = poly(&[1.0, 0.0, 0.0, 0.0, 0.0, -32.0]); // x^5 - 32
        let q = p.deflate(cplx(2.0, 0.0));
        assert_eq!(
            q.coeffs(),
            &[cplx::<f64>(16.0, 0.0), cplx(8.0, 0.0), cplx(4.0, 0.0), cplx(2.0, 0.0), cplx(1.0, 0.0)]
        );

        // deflating at 0 drops the constant term and shifts the rest down
        let p = poly(&[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        let q = p.deflate(cplx(0.0, 0.0));
        assert_eq!(
            q.coeffs(),
            &[cplx::<f64>(5.0, 0.0), cplx(4.0, 0.0), cplx(3.0, 0.0), cplx(2.0, 0.0), cplx(1.0, 0.0)]
        );
    }

    #[test]
    fn shift_examples() {
        let p = poly(&[1.0, 0.0, -1.0]); // x^2 - 1
        let q = p.shift(cplx(1.0, 0.0)); // (z+1)^2 - 1 = z^2 + 2z
        assert_eq!(q.coeff(0), cplx(0.0, 0.0));
        assert_eq!(q.coeff(1), cplx(2.0, 0.0));
        assert_eq!(q.coeff(2), cplx(1.0, 0.0));

        let p = poly(&[1.0, 0.0, 0.0, 0.0, -1.0]); // x^4 - 1
        let q = p.shift(cplx(1.0, 0.0)); // z^4 + 4z^3 + 6z^2 + 4z
        assert_eq!(q.coeff(0), cplx(0.0, 0.0));
        assert_eq!(q.coeff(1), cplx(4.0, 0.0));
        assert_eq!(q.coeff(2), cplx(6.0, 0.0));
        assert_eq!(q.coeff(3), cplx(4.0, 0.0));

        let p = poly(&[1.0, 2.0, 3.0]);
        assert_eq!(p.shift(cplx(0.0, 0.0)), p);
    }

    #[test]
    fn vieta_defect_examples() {
        let p = poly(&[1.0, -3.0, 2.0]);
        assert_eq!(p.vieta_defect(&[cplx(1.0, 0.0), cplx(2.0, 0.0)]), 0.0);
        assert!((p.vieta_defect(&[cplx(1.0, 0.0), cplx(1.0, 0.0)]) - 1.0).abs() < 1e-15);

        let p5 = poly(&[1.0, 0.0, 0.0, 0.0, 0.0, -1.0]);
        let tau = std::f64::consts::TAU;
        let roots: Vec<C> = (0..5)
            .map(|k| C::from_polar(1.0, tau * k as f64 / 5.0))
            .collect();
        assert!(p5.vieta_defect(&roots) < 1e-14);
    }

    #[test]
    fn rootset_sorts_lexicographically() {
        let p = poly(&[1.0, 0.0, 1.0]);
        let rs = RootSet::new(&p, vec![cplx(0.0, 1.0), cplx(0.0, -1.0)]);
        assert_eq!(rs.roots, vec![cplx::<f64>(0.0, -1.0), cplx(0.0, 1.0)]);
        assert!(rs.max_residual() < 1e-15);
    }
}
