//! Quintic pipeline: obtain a first root, deflate, solve the cofactor
//! quartic, and accept candidates only when they satisfy both the cofactor
//! and the original quintic.

use num_complex::Complex;
use num_traits::One;

use crate::config::SolverConfig;
use crate::error::SolveError;
use crate::oracle::aberth_all_roots;
use crate::poly::{Polynomial, RootSet};
use crate::quartic::{solve_quartic_inner, QuarticCoeffs, SolveReport};
use crate::scalar::{lex_cmp, Real};

/// Monic quintic `x^5 + m x^4 + n x^3 + p x^2 + q x + r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuinticCoeffs<T> {
    pub m: Complex<T>,
    pub n: Complex<T>,
    pub p: Complex<T>,
    pub q: Complex<T>,
    pub r: Complex<T>,
}

impl<T: Real> QuinticCoeffs<T> {
    pub fn from_polynomial(p: &Polynomial<T>) -> Result<Self, SolveError> {
        if p.degree() != 5 {
            return Err(SolveError::DegreeMismatch { expected: 5, got: p.degree() });
        }
        let m = p.normalize_monic()?;
        Ok(QuinticCoeffs {
            m: m.coeff(4),
            n: m.coeff(3),
            p: m.coeff(2),
            q: m.coeff(1),
            r: m.coeff(0),
        })
    }

    pub fn to_polynomial(&self) -> Polynomial<T> {
        Polynomial::new(vec![self.r, self.q, self.p, self.n, self.m, Complex::one()])
    }
}

/// Five roots plus the quartic-stage report.
#[derive(Debug, Clone)]
pub struct QuinticSolution<T> {
    /// All five roots, sorted lexicographically, residuals vs the quintic.
    pub roots: RootSet<T>,
    /// The deflation root the pipeline started from.
    pub r1: Complex<T>,
    pub vieta_defect: T,
    /// Report of the cofactor-quartic stage (candidate trace included).
    pub report: SolveReport<T>,
}

/// Source of the first quintic root.
///
/// The default is the iterative oracle; any other strategy can be plugged in
/// as long as it is reentrant.
pub trait FirstRootProvider<T: Real> {
    fn first_root(
        &self,
        p: &Polynomial<T>,
        cfg: &SolverConfig<T>,
    ) -> Result<Complex<T>, SolveError>;
}

/// Default provider: the converged oracle root with the smallest residual,
/// ties broken lexicographically by (re, im).
#[derive(Debug, Clone, Copy)]
pub struct OracleFirstRoot {
    pub max_iter: usize,
}

impl Default for OracleFirstRoot {
    fn default() -> Self {
        OracleFirstRoot { max_iter: 400 }
    }
}

impl<T: Real> FirstRootProvider<T> for OracleFirstRoot {
    fn first_root(
        &self,
        p: &Polynomial<T>,
        cfg: &SolverConfig<T>,
    ) -> Result<Complex<T>, SolveError> {
        let roots = aberth_all_roots(p, cfg.tol, self.max_iter)?;
        // roots are lex-sorted, so a strict minimum scan resolves ties
        let mut best = 0;
        for i in 1..roots.len() {
            if roots.residuals[i] < roots.residuals[best] {
                best = i;
            }
        }
        Ok(roots.roots[best])
    }
}

/// Fixed provider, mainly for tests and provider-independence checks.
#[derive(Debug, Clone, Copy)]
pub struct FixedFirstRoot<T>(pub Complex<T>);

impl<T: Real> FirstRootProvider<T> for FixedFirstRoot<T> {
    fn first_root(
        &self,
        _p: &Polynomial<T>,
        _cfg: &SolverConfig<T>,
    ) -> Result<Complex<T>, SolveError> {
        Ok(self.0)
    }
}

/// First root of a monic quintic through the provider, gated on `cfg.tol`.
pub fn first_root<T: Real>(
    p: &Polynomial<T>,
    provider: &dyn FirstRootProvider<T>,
    cfg: &SolverConfig<T>,
) -> Result<Complex<T>, SolveError> {
    let r1 = provider
        .first_root(p, cfg)
        .map_err(|_| SolveError::ProviderFailed)?;
    if !(p.relative_residual(r1) <= cfg.tol) {
        return Err(SolveError::ProviderFailed);
    }
    Ok(r1)
}

/// Cofactor quartic coefficients after factoring `r1` out of the quintic:
/// `a3 = m + r1`, `a2 = n + m r1 + r1^2`, `a1 = p + n r1 + m r1^2 + r1^3`,
/// `a0 = q + p r1 + n r1^2 + m r1^3 + r1^4` (synthetic division, remainder
/// dropped).
pub fn deflated_quartic_coeffs<T: Real>(
    p: &Polynomial<T>,
    r1: Complex<T>,
) -> Result<QuarticCoeffs<T>, SolveError> {
    if p.degree() != 5 {
        return Err(SolveError::DegreeMismatch { expected: 5, got: p.degree() });
    }
    QuarticCoeffs::from_polynomial(&p.normalize_monic()?.deflate(r1))
}

/// Full pipeline: first root, deflation, quartic solve with the dual filter
/// (candidates must satisfy both the cofactor and the quintic), final polish.
pub fn solve_quintic<T: Real>(
    p: &Polynomial<T>,
    provider: &dyn FirstRootProvider<T>,
    cfg: &SolverConfig<T>,
) -> Result<QuinticSolution<T>, SolveError> {
    let pm = p.normalize_monic()?;
    if pm.degree() != 5 {
        return Err(SolveError::DegreeMismatch { expected: 5, got: pm.degree() });
    }
    let r1 = first_root(&pm, provider, cfg)?;
    // deflation error is proportional to the residual of r1, so polish first
    let r1 = pm.newton_polish(r1, cfg.polish_steps);
    let cofactor = pm.deflate(r1);
    let report = solve_quartic_inner(&cofactor, cfg, Some(&pm))?;

    let mut roots: Vec<Complex<T>> = report.roots.roots.clone();
    roots.push(r1);
    // final polish against the quintic itself; selection is already fixed
    let polished: Vec<Complex<T>> = roots
        .into_iter()
        .map(|r| pm.newton_polish(r, cfg.polish_steps))
        .collect();
    let roots = RootSet::new(&pm, polished);
    let vieta_defect = pm.vieta_defect(&roots.roots);
    Ok(QuinticSolution { roots, r1, vieta_defect, report })
}
