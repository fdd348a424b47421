//! Compute zero-localization bounds for one polynomial with every method.
//!
//! Run with `cargo run --example localize`.

use zero_annulus::bounds::{cauchy_radius, diaz_barrero_annulus, general_annulus, t_fib_annulus};
use zero_annulus::{FibParams, Polynomial, RadiusForm};

fn main() {
    // p(z) = 0.7 + 0.3 z + 0.1 z^2 + z^3
    let poly = Polynomial::from_real(&[0.7, 0.3, 0.1, 1.0]).unwrap();

    let disk = cauchy_radius(&poly).unwrap();
    println!(
        "cauchy   |z| <= {:.6}   (residual {:.2e}, {} bisections)",
        disk.radius, disk.residual, disk.iterations
    );

    let db = diaz_barrero_annulus(&poly).unwrap();
    println!(
        "db       {:.6} <= |z| <= {:.6}   (outer argmax k = {})",
        db.annulus.r1, db.annulus.r2, db.k_outer
    );

    for t in [0.5, 2.0] {
        let report = t_fib_annulus(&poly, t).unwrap();
        println!(
            "tfib t={t} {:.6} <= |z| <= {:.6}",
            report.annulus.r1, report.annulus.r2
        );
    }

    // Different triples for the two radii: the outer bound likes small c,
    // the inner bound is a separate optimization problem entirely.
    let outer = FibParams::new(0.5, 1.0, 0.375).unwrap();
    let inner = FibParams::new(1.0, 1.0, 1.0).unwrap();
    let general = general_annulus(&poly, &outer, &inner, RadiusForm::Factored).unwrap();
    println!(
        "general  {:.6} <= |z| <= {:.6}   outer=(0.5, 1, 0.375)",
        general.annulus.r1, general.annulus.r2
    );
}
