//! Shared helpers for the integration suites.

use num_complex::Complex;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tschirnhaus::{Polynomial, QuarticCoeffs};

pub type C = Complex<f64>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform point in the complex disc of the given radius.
pub fn random_in_disc(rng: &mut ChaCha8Rng, radius: f64) -> C {
    loop {
        let re = rng.gen_range(-radius..radius);
        let im = rng.gen_range(-radius..radius);
        if re * re + im * im <= radius * radius {
            return C::new(re, im);
        }
    }
}

/// Random monic polynomial of the given degree, coefficients in a disc.
pub fn random_monic(rng: &mut ChaCha8Rng, degree: usize, radius: f64) -> Polynomial<f64> {
    let mut coeffs: Vec<C> = (0..degree).map(|_| random_in_disc(rng, radius)).collect();
    coeffs.push(C::new(1.0, 0.0));
    Polynomial::new(coeffs)
}

/// Random monic quartic with `|a3^2 - 2 a2|` bounded away from zero.
pub fn random_nondegenerate_quartic(rng: &mut ChaCha8Rng, radius: f64) -> QuarticCoeffs<f64> {
    loop {
        let a = QuarticCoeffs::new(
            random_in_disc(rng, radius),
            random_in_disc(rng, radius),
            random_in_disc(rng, radius),
            random_in_disc(rng, radius),
        );
        if a.transform_margin().norm() > 1e-3 {
            return a;
        }
    }
}

/// Random complex number with rational components, |num|, den <= 10.
pub fn random_rational(rng: &mut ChaCha8Rng) -> C {
    let part = |rng: &mut ChaCha8Rng| {
        let num: i32 = rng.gen_range(-10..=10);
        let den: i32 = rng.gen_range(1..=10);
        f64::from(num) / f64::from(den)
    };
    C::new(part(rng), part(rng))
}

/// Greatest distance from any `want` value to its nearest `got` value, where
/// each `got` may be used once (greedy nearest matching).
pub fn multiset_distance(got: &[C], want: &[C]) -> f64 {
    assert_eq!(got.len(), want.len());
    let mut left: Vec<C> = got.to_vec();
    let mut worst = 0.0f64;
    for w in want {
        let (idx, dist) = left
            .iter()
            .enumerate()
            .map(|(i, g)| (i, (g - w).norm()))
            .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
            .expect("pool exhausted");
        worst = worst.max(dist);
        left.swap_remove(idx);
    }
    worst
}

/// Max relative pairwise error between matched multisets.
pub fn multiset_relative_error(got: &[C], want: &[C]) -> f64 {
    assert_eq!(got.len(), want.len());
    let mut left: Vec<C> = got.to_vec();
    let mut worst = 0.0f64;
    for w in want {
        let (idx, dist) = left
            .iter()
            .enumerate()
            .map(|(i, g)| (i, (g - w).norm()))
            .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
            .expect("pool exhausted");
        worst = worst.max(dist / (1.0 + w.norm()));
        left.swap_remove(idx);
    }
    worst
}
