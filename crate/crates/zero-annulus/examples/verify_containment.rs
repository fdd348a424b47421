//! Find all roots with the simultaneous-iteration oracle and check that they
//! actually live inside the computed annulus.

use num_complex::Complex64;
use zero_annulus::bounds::diaz_barrero_annulus;
use zero_annulus::oracle::{find_roots, verify_containment};
use zero_annulus::Polynomial;

fn main() {
    let poly = Polynomial::new(vec![
        Complex64::new(0.7, 0.2),
        Complex64::new(-0.3, 0.0),
        Complex64::new(0.0, 1.1),
        Complex64::new(0.4, -0.5),
        Complex64::new(1.0, 0.0),
    ])
    .unwrap();

    let report = diaz_barrero_annulus(&poly).unwrap();
    let annulus = report.annulus;
    println!("annulus: {:.6} <= |z| <= {:.6}", annulus.r1, annulus.r2);

    let roots = find_roots(&poly, 1e-12, 500).unwrap();
    assert!(roots.converged, "oracle failed to converge");
    println!("oracle converged in {} sweeps", roots.iterations);
    for (z, res) in roots.roots.iter().zip(&roots.residuals) {
        println!("  z = {z:+.6}   |z| = {:.6}   scaled residual {res:.2e}", z.norm());
    }

    let check = verify_containment(&roots, &annulus, 1e-10).unwrap();
    println!("all roots inside: {}", check.all_inside);
    for v in &check.violations {
        println!("  violation: |z| = {:.6} on the {:?} side", v.modulus, v.side);
    }
}
