//! Seeded random polynomial families for benchmark sweeps.
//!
//! Every draw goes through a counter-mode generator keyed by (seed, index),
//! so item `index` of a run is the same polynomial no matter how many threads
//! the sweep uses or in which order items are processed.

use crate::genfib::FibParams;
use crate::poly::Polynomial;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Independent coefficients: modulus uniform in [0, 10) (leading
    /// coefficient in [0.5, 10) so the degree is honest), angle uniform.
    Uniform,
    /// Monic product of roots on the unit circle; with probability 1/4 a
    /// root lands 1e-3 away from the previous one, forming a near-cluster.
    UnitCircleRoots,
    /// Uniform coefficients with the constant term shrunk to modulus
    /// 10^u, u uniform in [-12, -3): stresses the inner radius.
    SmallConstant,
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "uniform" => Ok(Family::Uniform),
            "unit-circle-roots" => Ok(Family::UnitCircleRoots),
            "small-a0" => Ok(Family::SmallConstant),
            other => Err(format!(
                "unknown family {other:?}; expected uniform, unit-circle-roots, or small-a0"
            )),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Family::Uniform => "uniform",
            Family::UnitCircleRoots => "unit-circle-roots",
            Family::SmallConstant => "small-a0",
        };
        f.write_str(name)
    }
}

/// Generator for item `index` of a run keyed by `seed`. Distinct indexes get
/// independent streams of the same keyed cipher.
pub fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Draws one polynomial of exactly `degree` from the family.
pub fn sample_polynomial(family: Family, degree: usize, rng: &mut ChaCha8Rng) -> Polynomial {
    assert!(degree >= 1, "families produce non-constant polynomials");
    match family {
        Family::Uniform => uniform(degree, rng),
        Family::UnitCircleRoots => unit_circle_roots(degree, rng),
        Family::SmallConstant => {
            let p = uniform(degree, rng);
            let mut coeffs = p.coeffs().to_vec();
            let magnitude = 10f64.powf(rng.gen_range(-12.0..-3.0));
            coeffs[0] = Complex64::from_polar(magnitude, rng.gen_range(0.0..std::f64::consts::TAU));
            Polynomial::new(coeffs).expect("leading coefficient unchanged")
        }
    }
}

fn uniform(degree: usize, rng: &mut ChaCha8Rng) -> Polynomial {
    let mut coeffs: Vec<Complex64> = (0..degree)
        .map(|_| {
            Complex64::from_polar(
                rng.gen_range(0.0..10.0),
                rng.gen_range(0.0..std::f64::consts::TAU),
            )
        })
        .collect();
    coeffs.push(Complex64::from_polar(
        rng.gen_range(0.5..10.0),
        rng.gen_range(0.0..std::f64::consts::TAU),
    ));
    Polynomial::new(coeffs).expect("leading modulus is at least 0.5")
}

fn unit_circle_roots(degree: usize, rng: &mut ChaCha8Rng) -> Polynomial {
    let mut roots: Vec<Complex64> = Vec::with_capacity(degree);
    for i in 0..degree {
        let root = if i > 0 && rng.gen_bool(0.25) {
            let angle = rng.gen_range(0.0..std::f64::consts::TAU);
            roots[i - 1] + Complex64::from_polar(1e-3, angle)
        } else {
            Complex64::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU))
        };
        roots.push(root);
    }
    let mut coeffs = vec![Complex64::new(1.0, 0.0)];
    for &root in &roots {
        let mut next = vec![Complex64::new(0.0, 0.0); coeffs.len() + 1];
        for (j, &c) in coeffs.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= root * c;
        }
        coeffs = next;
    }
    Polynomial::new(coeffs).expect("monic by construction")
}

/// Log-uniform parameter triple in [lo, hi]^3.
pub fn random_fib_params(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> FibParams {
    assert!(lo > 0.0 && hi > lo);
    let mut draw = || rng.gen_range(lo.ln()..hi.ln()).exp();
    FibParams::new(draw(), draw(), draw()).expect("range is positive")
}
