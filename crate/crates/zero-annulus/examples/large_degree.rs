//! The radii are assembled in log space, so degree does not threaten the
//! computation: binomial coefficients near C(2000, 1000) and Fibonacci
//! numbers with thousands of digits never materialize as floats. This
//! example bounds the zeros of a degree-2000 polynomial.
//!
//! The parameter triple matters at this scale. With (1, 1, 100) the
//! intermediate F_8000 has log-magnitude about 18800 — some 25x past what a
//! double can hold — yet the final radii land comfortably inside f64 range.
//! With (1, 1, 1) the outer radius itself is around e^2456, so the returned
//! float honestly saturates to infinity.

use std::time::Instant;
use zero_annulus::bounds::{cauchy_radius, general_annulus};
use zero_annulus::families::{rng_for, sample_polynomial, Family};
use zero_annulus::{FibParams, RadiusForm};

fn main() {
    let mut rng = rng_for(99, 0);
    let poly = sample_polynomial(Family::Uniform, 2000, &mut rng);

    let params = FibParams::new(1.0, 1.0, 100.0).unwrap();
    let started = Instant::now();
    let report = general_annulus(&poly, &params, &params, RadiusForm::Factored).unwrap();
    let elapsed = started.elapsed();
    println!(
        "degree {}: {:.3e} <= |z| <= {:.3e} in {:.2?}",
        poly.degree(),
        report.annulus.r1,
        report.annulus.r2,
        elapsed
    );
    println!(
        "outer argmax k = {}, inner argmin k = {}",
        report.k_outer, report.k_inner
    );
    assert!(report.annulus.r1 > 0.0 && report.annulus.r2.is_finite());

    let classical = FibParams::new(1.0, 1.0, 1.0).unwrap();
    let saturated = general_annulus(&poly, &classical, &classical, RadiusForm::Factored).unwrap();
    println!(
        "with (1, 1, 1) the true radii leave f64 range: r1 = {}, r2 = {}",
        saturated.annulus.r1, saturated.annulus.r2
    );

    let started = Instant::now();
    let disk = cauchy_radius(&poly).unwrap();
    println!(
        "cauchy disk radius {:.6} in {:.2?} ({} iterations)",
        disk.radius,
        started.elapsed(),
        disk.iterations
    );
}
