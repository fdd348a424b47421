//! Cross-module invariants under randomized inputs: things that must hold
//! for every polynomial and every positive parameter triple, not just the
//! frozen examples.

use num_complex::Complex64;
use proptest::prelude::*;
use zero_annulus::bounds::{diaz_barrero_annulus, general_annulus, t_fib_annulus, RadiusForm};
use zero_annulus::oracle::{find_roots, verify_containment};
use zero_annulus::{FibParams, Polynomial};

fn rel_diff(x: f64, y: f64) -> f64 {
    if x == y {
        return 0.0;
    }
    (x - y).abs() / x.abs().max(y.abs())
}

/// Coefficients bounded away from zero at both ends, so that degree and
/// reversal are stable and ratios stay well in f64 range.
fn poly_strategy() -> impl Strategy<Value = Polynomial> {
    let coeff = (-8.0f64..8.0, -8.0f64..8.0).prop_map(|(re, im)| Complex64::new(re, im));
    let edge = (0.2f64..8.0, 0.0f64..std::f64::consts::TAU)
        .prop_map(|(m, th)| Complex64::from_polar(m, th));
    (proptest::collection::vec(coeff, 0..14), edge.clone(), edge).prop_map(
        |(mut coeffs, first, last)| {
            coeffs.insert(0, first);
            coeffs.push(last);
            Polynomial::new(coeffs).expect("leading coefficient is nonzero")
        },
    )
}

fn params_strategy() -> impl Strategy<Value = FibParams> {
    (0.1f64..10.0, 0.1f64..10.0, 0.1f64..10.0)
        .prop_map(|(a, b, c)| FibParams::new(a, b, c).expect("positive"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Theorem-level guarantee: every root modulus lies inside the annulus,
    /// whatever the parameters.
    #[test]
    fn all_roots_inside_every_annulus(poly in poly_strategy(), outer in params_strategy(), inner in params_strategy()) {
        let annulus = general_annulus(&poly, &outer, &inner, RadiusForm::Factored)
            .unwrap()
            .annulus;
        let roots = find_roots(&poly, 1e-12, 500).unwrap();
        prop_assume!(roots.converged);
        let check = verify_containment(&roots, &annulus, 1e-8).unwrap();
        prop_assert!(check.all_inside, "violations: {:?}", check.violations);
    }

    /// The classic annulus is exactly the general one at (1, 1, 1), and the
    /// single-parameter family is exactly (t, t, 1).
    #[test]
    fn special_cases_are_pure_restrictions(poly in poly_strategy(), t in 0.1f64..10.0) {
        let one = FibParams::new(1.0, 1.0, 1.0).unwrap();
        let db = diaz_barrero_annulus(&poly).unwrap().annulus;
        let general = general_annulus(&poly, &one, &one, RadiusForm::Factored).unwrap().annulus;
        prop_assert_eq!(db.r1, general.r1);
        prop_assert_eq!(db.r2, general.r2);

        let tp = FibParams::new(t, t, 1.0).unwrap();
        let tf = t_fib_annulus(&poly, t).unwrap().annulus;
        let general_t = general_annulus(&poly, &tp, &tp, RadiusForm::Factored).unwrap().annulus;
        prop_assert_eq!(tf.r1, general_t.r1);
        prop_assert_eq!(tf.r2, general_t.r2);
    }

    /// Keeping the prefactor outside the k-th root or folding it into every
    /// candidate is pure algebra; floats may move only in the last bits.
    #[test]
    fn prefactor_forms_agree(poly in poly_strategy(), outer in params_strategy(), inner in params_strategy()) {
        let factored = general_annulus(&poly, &outer, &inner, RadiusForm::Factored).unwrap().annulus;
        let expanded = general_annulus(&poly, &outer, &inner, RadiusForm::Expanded).unwrap().annulus;
        prop_assert!(rel_diff(factored.r1, expanded.r1) <= 1e-12);
        prop_assert!(rel_diff(factored.r2, expanded.r2) <= 1e-12);
    }

    /// Radii depend on coefficient ratios only, so normalizing to a monic
    /// polynomial changes nothing.
    #[test]
    fn monic_normalization_preserves_radii(poly in poly_strategy(), params in params_strategy()) {
        let monic = poly.monic();
        let original = general_annulus(&poly, &params, &params, RadiusForm::Factored).unwrap().annulus;
        let normalized = general_annulus(&monic, &params, &params, RadiusForm::Factored).unwrap().annulus;
        prop_assert!(rel_diff(original.r1, normalized.r1) <= 1e-12);
        prop_assert!(rel_diff(original.r2, normalized.r2) <= 1e-12);
    }

    /// The inner bound is the outer bound applied to the reversed
    /// polynomial: with one triple on both sides, r1(p) · r2(reverse p) = 1.
    #[test]
    fn reversal_duality_links_the_radii(poly in poly_strategy(), params in params_strategy()) {
        let reversed = poly.reversed();
        prop_assume!(reversed.degree() == poly.degree());
        let forward = general_annulus(&poly, &params, &params, RadiusForm::Factored).unwrap().annulus;
        let backward = general_annulus(&reversed, &params, &params, RadiusForm::Factored).unwrap().annulus;
        prop_assert!((forward.r1 * backward.r2 - 1.0).abs() <= 1e-12,
            "r1 = {}, reversed r2 = {}", forward.r1, backward.r2);
        prop_assert!((forward.r2 * backward.r1 - 1.0).abs() <= 1e-12);
    }

    /// Scaling the argument scales every radius inversely.
    #[test]
    fn radii_scale_with_the_argument(poly in poly_strategy(), params in params_strategy(), lambda in 0.1f64..10.0) {
        let scaled_coeffs: Vec<Complex64> = poly
            .coeffs()
            .iter()
            .enumerate()
            .map(|(j, c)| c * lambda.powi(j as i32))
            .collect();
        let scaled = Polynomial::new(scaled_coeffs).unwrap();
        let original = general_annulus(&poly, &params, &params, RadiusForm::Factored).unwrap().annulus;
        let rescaled = general_annulus(&scaled, &params, &params, RadiusForm::Factored).unwrap().annulus;
        prop_assert!(rel_diff(original.r1 / lambda, rescaled.r1) <= 1e-10);
        prop_assert!(rel_diff(original.r2 / lambda, rescaled.r2) <= 1e-10);
    }

    /// Root moduli of the reversed polynomial are the inverses of the
    /// original ones, tying the oracle to the same duality as the bounds.
    #[test]
    fn oracle_respects_reversal(poly in poly_strategy()) {
        let roots = find_roots(&poly, 1e-12, 500).unwrap();
        let reversed_roots = find_roots(&poly.reversed(), 1e-12, 500).unwrap();
        prop_assume!(roots.converged && reversed_roots.converged);
        let mut forward: Vec<f64> = roots.roots.iter().map(|z| z.norm()).collect();
        let mut backward: Vec<f64> = reversed_roots.roots.iter().map(|z| 1.0 / z.norm()).collect();
        forward.sort_by(|a, b| a.partial_cmp(b).unwrap());
        backward.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (f, b) in forward.iter().zip(&backward) {
            prop_assert!(rel_diff(*f, *b) <= 1e-6, "{f} vs {b}");
        }
    }
}
