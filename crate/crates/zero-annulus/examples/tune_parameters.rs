//! The free parameter triples change the annulus a lot. This example tunes
//! them for one polynomial and compares against the (1, 1, 1) baseline and
//! the true extreme root moduli.

use zero_annulus::oracle::find_roots;
use zero_annulus::tuner::tune_annulus;
use zero_annulus::{Polynomial, TuneConfig};

fn main() {
    let poly = Polynomial::from_real(&[0.7, 0.3, 0.1, 1.0]).unwrap();

    let config = TuneConfig::default();
    let (outer, inner, annulus) = tune_annulus(&poly, &config).unwrap();

    println!(
        "baseline annulus: {:.6} <= |z| <= {:.6}",
        inner.baseline_radius, outer.baseline_radius
    );
    println!("tuned annulus:    {:.6} <= |z| <= {:.6}", annulus.r1, annulus.r2);
    println!(
        "outer params (a, b, c) = {:?} after {} evaluations",
        outer.best_params.as_array(),
        outer.evaluations
    );
    println!(
        "inner params (u, v, w) = {:?} after {} evaluations",
        inner.best_params.as_array(),
        inner.evaluations
    );

    let roots = find_roots(&poly, 1e-12, 500).unwrap();
    let moduli: Vec<f64> = roots.roots.iter().map(|z| z.norm()).collect();
    let lo = moduli.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = moduli.iter().cloned().fold(0.0f64, f64::max);
    println!("true root moduli span [{lo:.6}, {hi:.6}]");
    println!(
        "tightness: inner {:.3}, outer {:.3}",
        annulus.r1 / lo,
        hi / annulus.r2
    );

    // The improvement trace is strictly monotone, handy for plotting.
    println!("outer improvement trace:");
    for (params, radius) in &outer.trace {
        println!("  r2 = {radius:.9} at {:?}", params.as_array());
    }
}
