//! Zero-inclusion regions: the Cauchy disk and a family of annuli whose radii
//! combine binomial coefficients with generalized Fibonacci weights.
//!
//! For a polynomial P(z) = sum a_j z^j of degree n >= 1 and positive triples
//! (a, b, c) for the outer radius and (u, v, w) for the inner one, every zero
//! lies in the closed annulus r1 <= |z| <= r2 where
//!
//! r2 = (abc + c^2)/(ab + 2c) *
//!      max_k [ F_{4n} / ((abc+c^2)^n a^{xi(k)} (ab)^{k/2} F_k C(n,k))
//!              * |a_{n-k}/a_n| ]^{1/k},
//!
//! and r1 is the mirror image built from minima, |a_0/a_k| and the (u, v, w)
//! sequence. The classic Fibonacci and t-Fibonacci annuli are the
//! specializations (1, 1, 1) and (t, t, 1). All per-k work happens in log
//! space so degrees in the thousands stay finite.

use crate::genfib::{self, FibParams};
use crate::oracle::RootSet;
use crate::poly::Polynomial;
use serde::Serialize;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum BoundsError {
    #[error("bounds require a polynomial of degree >= 1")]
    ConstantPolynomial,
    #[error("t must be a positive finite number, got {0}")]
    NonPositiveT(f64),
    #[error("tightness metrics require a nonempty root set")]
    EmptyRootSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    #[serde(rename = "cauchy")]
    CauchyDisk,
    #[serde(rename = "db")]
    DiazBarrero,
    #[serde(rename = "tfib")]
    TFib,
    #[serde(rename = "general")]
    General,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Method::CauchyDisk => "cauchy",
            Method::DiazBarrero => "db",
            Method::TFib => "tfib",
            Method::General => "general",
        };
        f.write_str(name)
    }
}

/// Algebraic arrangement of the radius formulas. `Factored` keeps the
/// parameter-only prefactor outside the k-th root; `Expanded` folds it into
/// every per-k candidate before the root is taken. The two agree up to
/// floating-point rounding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RadiusForm {
    #[default]
    Factored,
    Expanded,
}

/// Closed annulus r1 <= |z| <= r2 containing every zero.
#[derive(Debug, Clone, Serialize)]
pub struct Annulus {
    pub r1: f64,
    pub r2: f64,
    pub method: Method,
    pub outer_params: Option<FibParams>,
    pub inner_params: Option<FibParams>,
}

/// Annulus plus the per-k evidence it was assembled from.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub annulus: Annulus,
    /// Outer candidates already raised to the power 1/k, index k - 1.
    pub outer_terms: Vec<f64>,
    /// Inner candidates; +inf marks k with a_k = 0, which cannot bind.
    pub inner_terms: Vec<f64>,
    /// 1-based index attaining the outer max (smallest on ties).
    pub k_outer: usize,
    /// 1-based index attaining the inner min (smallest on ties).
    pub k_inner: usize,
    /// (outer, inner) multipliers applied outside the k-th root; both are 1
    /// under [`RadiusForm::Expanded`].
    pub prefactors: (f64, f64),
}

#[derive(Debug, Clone, Copy)]
pub struct CauchyResult {
    pub radius: f64,
    /// Raw value of Q(x) = x^n - sum |a_j/a_n| x^j at the returned radius.
    pub residual: f64,
    pub iterations: usize,
}

/// How tight an annulus is against the true root moduli.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct TightnessMetrics {
    /// r1 / min |root|, in [0, 1] for a sound bound; 0 when r1 = 0.
    pub inner_ratio: f64,
    /// max |root| / r2, in [0, 1] for a sound bound; 1 when r2 = 0.
    pub outer_ratio: f64,
    /// ln(r2 / r1); +inf when r1 = 0.
    pub log_width: f64,
}

/// ln C(n, k) for k = 0..n via the incremental row formula.
fn ln_binomial_row(n: usize) -> Vec<f64> {
    let mut row = Vec::with_capacity(n + 1);
    row.push(0.0);
    for k in 1..=n {
        let prev = row[k - 1];
        row.push(prev + ((n - k + 1) as f64).ln() - (k as f64).ln());
    }
    row
}

/// Annulus from independent outer and inner parameter triples.
pub fn general_annulus(
    poly: &Polynomial,
    outer: &FibParams,
    inner: &FibParams,
    form: RadiusForm,
) -> Result<BoundReport, BoundsError> {
    let n = poly.degree();
    if n == 0 {
        return Err(BoundsError::ConstantPolynomial);
    }
    let ln_choose = ln_binomial_row(n);
    let ln_mag: Vec<f64> = poly.coeffs().iter().map(|c| c.norm().ln()).collect();

    // Outer radius: the log of each bracketed candidate, then the 1/k root.
    let (a, b, c) = (outer.a(), outer.b(), outer.c());
    let ab = a * b;
    let scale_out = ab * c + c * c;
    let pf_out = scale_out / (ab + 2.0 * c);
    let ln_f4n_out = genfib::fib_log_magnitude(outer, 4 * n);
    let mut outer_terms = Vec::with_capacity(n);
    for k in 1..=n {
        let mut ln_x = ln_f4n_out
            - n as f64 * scale_out.ln()
            - genfib::parity(k) as f64 * a.ln()
            - (k / 2) as f64 * ab.ln()
            - genfib::fib_log_magnitude(outer, k)
            - ln_choose[k]
            + ln_mag[n - k]
            - ln_mag[n];
        if form == RadiusForm::Expanded {
            ln_x += k as f64 * pf_out.ln();
        }
        outer_terms.push((ln_x / k as f64).exp());
    }
    let applied_out = match form {
        RadiusForm::Factored => pf_out,
        RadiusForm::Expanded => 1.0,
    };
    let (mut k_outer, mut max_term) = (1usize, outer_terms[0]);
    for (i, &t) in outer_terms.iter().enumerate().skip(1) {
        if t > max_term {
            max_term = t;
            k_outer = i + 1;
        }
    }
    let r2 = applied_out * max_term;

    // Inner radius: mirror image with minima and |a_0 / a_k|.
    let (u, v, w) = (inner.a(), inner.b(), inner.c());
    let uv = u * v;
    let scale_in = uv * w + w * w;
    let pf_in = (uv + 2.0 * w) / scale_in;
    let ln_f4n_in = genfib::fib_log_magnitude(inner, 4 * n);
    let mut inner_terms = Vec::with_capacity(n);
    for k in 1..=n {
        if ln_mag[k] == f64::NEG_INFINITY {
            inner_terms.push(f64::INFINITY);
            continue;
        }
        let mut ln_w = n as f64 * scale_in.ln()
            + genfib::parity(k) as f64 * u.ln()
            + (k / 2) as f64 * uv.ln()
            + genfib::fib_log_magnitude(inner, k)
            + ln_choose[k]
            - ln_f4n_in
            + ln_mag[0]
            - ln_mag[k];
        if form == RadiusForm::Expanded {
            ln_w += k as f64 * pf_in.ln();
        }
        inner_terms.push((ln_w / k as f64).exp());
    }
    let applied_in = match form {
        RadiusForm::Factored => pf_in,
        RadiusForm::Expanded => 1.0,
    };
    let (mut k_inner, mut min_term) = (1usize, inner_terms[0]);
    for (i, &t) in inner_terms.iter().enumerate().skip(1) {
        if t < min_term {
            min_term = t;
            k_inner = i + 1;
        }
    }
    let r1 = applied_in * min_term;

    Ok(BoundReport {
        annulus: Annulus {
            r1,
            r2,
            method: Method::General,
            outer_params: Some(*outer),
            inner_params: Some(*inner),
        },
        outer_terms,
        inner_terms,
        k_outer,
        k_inner,
        prefactors: (applied_out, applied_in),
    })
}

/// Classic Fibonacci-weighted annulus: the (1, 1, 1) specialization.
pub fn diaz_barrero_annulus(poly: &Polynomial) -> Result<BoundReport, BoundsError> {
    let ones = FibParams::new(1.0, 1.0, 1.0).expect("constants are positive");
    let mut report = general_annulus(poly, &ones, &ones, RadiusForm::Factored)?;
    report.annulus.method = Method::DiazBarrero;
    Ok(report)
}

/// t-Fibonacci annulus: the (t, t, 1) specialization.
pub fn t_fib_annulus(poly: &Polynomial, t: f64) -> Result<BoundReport, BoundsError> {
    let strictly_positive = t.is_finite() && t > 0.0;
    if !strictly_positive {
        return Err(BoundsError::NonPositiveT(t));
    }
    let params = FibParams::new(t, t, 1.0).expect("t was checked positive");
    let mut report = general_annulus(poly, &params, &params, RadiusForm::Factored)?;
    report.annulus.method = Method::TFib;
    Ok(report)
}

/// Cauchy bound: the unique positive root of Q(x) = x^n - sum |a_j/a_n| x^j,
/// bracketed by bisection and polished by guarded Newton steps.
///
/// The iteration works on g(x) = Q(x)/x^n, which has the same positive root,
/// is strictly increasing and concave on (0, inf), and never overflows no
/// matter how large the degree or the bracket gets.
pub fn cauchy_radius(poly: &Polynomial) -> Result<CauchyResult, BoundsError> {
    let n = poly.degree();
    if n == 0 {
        return Err(BoundsError::ConstantPolynomial);
    }
    let lead = poly.leading();
    let mags: Vec<f64> = poly.coeffs()[..n].iter().map(|c| (c / lead).norm()).collect();
    let max_mag = mags.iter().fold(0.0f64, |m, &x| m.max(x));
    if max_mag == 0.0 {
        // Pure monomial: the only root is 0.
        return Ok(CauchyResult {
            radius: 0.0,
            residual: 0.0,
            iterations: 0,
        });
    }

    // g(x) = 1 - sum mags[j] x^{j-n}, via Horner in 1/x.
    let g = |x: f64| -> f64 {
        let inv = 1.0 / x;
        let mut s = 0.0;
        for &m in mags.iter() {
            s = (s + m) * inv;
        }
        1.0 - s
    };
    // g'(x) = (1/x) * sum mags[j] (n - j) x^{j-n}.
    let g_prime = |x: f64| -> f64 {
        let inv = 1.0 / x;
        let mut s = 0.0;
        for (j, &m) in mags.iter().enumerate() {
            s = (s + m * (n - j) as f64) * inv;
        }
        s * inv
    };

    let mut lo = 0.0f64;
    let mut hi = 1.0 + max_mag;
    let mut iterations = 0usize;
    for _ in 0..120 {
        if hi - lo < 1e-15 * (1.0 + hi) {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        iterations += 1;
        if g(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }

    let mut x = 0.5 * (lo + hi);
    for _ in 0..8 {
        let gx = g(x);
        let slope = g_prime(x);
        if !gx.is_finite() || !slope.is_finite() || slope == 0.0 {
            break;
        }
        if gx > 0.0 {
            hi = x;
        } else {
            lo = x;
        }
        iterations += 1;
        let mut next = x - gx / slope;
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        if (next - x).abs() <= f64::EPSILON * x.abs() {
            x = next;
            break;
        }
        x = next;
    }

    let residual = {
        let mut acc = 1.0f64;
        for &m in mags.iter().rev() {
            acc = acc * x - m;
        }
        acc
    };
    Ok(CauchyResult {
        radius: x,
        residual,
        iterations,
    })
}

/// Tightness of an annulus against a computed root set.
pub fn annulus_width_metrics(
    annulus: &Annulus,
    roots: &RootSet,
) -> Result<TightnessMetrics, BoundsError> {
    if roots.roots.is_empty() {
        return Err(BoundsError::EmptyRootSet);
    }
    let mut min_m = f64::INFINITY;
    let mut max_m: f64 = 0.0;
    for z in &roots.roots {
        let m = z.norm();
        min_m = min_m.min(m);
        max_m = max_m.max(m);
    }
    let r1 = annulus.r1;
    let r2 = annulus.r2;
    let inner_ratio = if r1 == 0.0 { 0.0 } else { r1 / min_m };
    let outer_ratio = if r2 == 0.0 { 1.0 } else { max_m / r2 };
    let log_width = if r1 == 0.0 {
        f64::INFINITY
    } else {
        (r2 / r1).ln()
    };
    Ok(TightnessMetrics {
        inner_ratio,
        outer_ratio,
        log_width,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    /// z^3 + 0.1 z^2 + 0.3 z + 0.7, the running example.
    fn cubic() -> Polynomial {
        Polynomial::from_real(&[0.7, 0.3, 0.1, 1.0]).unwrap()
    }

    fn assert_close(actual: f64, frozen: f64, what: &str) {
        let tol = 1e-12 * (1.0 + frozen.abs());
        assert!(
            (actual - frozen).abs() <= tol,
            "{what}: {actual:.17e} vs frozen {frozen:.17e}"
        );
    }

    #[test]
    fn classic_annulus_matches_frozen_values() {
        let report = diaz_barrero_annulus(&cubic()).unwrap();
        assert_eq!(report.annulus.method, Method::DiazBarrero);
        // Outer: prefactor 2/3, candidates for k = 1..3, max at k = 3.
        assert_close(report.prefactors.0, 2.0 / 3.0, "outer prefactor");
        let frozen_outer = [0.6, 1.341_640_786_499_873_8, 1.846_914_750_447_833_4];
        for (i, want) in frozen_outer.iter().enumerate() {
            assert_close(report.outer_terms[i], *want, "outer term");
        }
        assert_eq!(report.k_outer, 3);
        assert_close(report.annulus.r2, 1.231_276_500_298_555_6, "r2");
        // Inner: prefactor 3/2, min at k = 1, r1 = 7/12 exactly in algebra.
        assert_close(report.prefactors.1, 1.5, "inner prefactor");
        let frozen_inner = [
            0.388_888_888_888_888_9,
            1.080_123_449_734_643_4,
            0.426_859_721_662_498_1,
        ];
        for (i, want) in frozen_inner.iter().enumerate() {
            assert_close(report.inner_terms[i], *want, "inner term");
        }
        assert_eq!(report.k_inner, 1);
        assert_close(report.annulus.r1, 7.0 / 12.0, "r1");
    }

    #[test]
    fn t_fib_annulus_matches_frozen_values() {
        let report = t_fib_annulus(&cubic(), 2.0).unwrap();
        assert_eq!(report.annulus.method, Method::TFib);
        assert_close(report.prefactors.0, 5.0 / 6.0, "outer prefactor");
        let frozen_outer = [1.848, 1.177_285_012_220_914_9, 1.247_279_416_368_907_2];
        for (i, want) in frozen_outer.iter().enumerate() {
            assert_close(report.outer_terms[i], *want, "outer term");
        }
        assert_eq!(report.k_outer, 1);
        assert_close(report.annulus.r2, 1.54, "r2");
        let frozen_inner = [
            0.126_262_626_262_626_27,
            1.230_914_909_793_327_4,
            0.632_074_502_284_055_5,
        ];
        for (i, want) in frozen_inner.iter().enumerate() {
            assert_close(report.inner_terms[i], *want, "inner term");
        }
        assert_close(report.annulus.r1, 5.0 / 33.0, "r1");
    }

    #[test]
    fn t_fib_rejects_bad_t() {
        assert_eq!(
            t_fib_annulus(&cubic(), 0.0).unwrap_err(),
            BoundsError::NonPositiveT(0.0)
        );
        assert!(t_fib_annulus(&cubic(), -1.0).is_err());
        assert!(t_fib_annulus(&cubic(), f64::INFINITY).is_err());
    }

    #[test]
    #[allow(clippy::excessive_precision)]
    fn general_annulus_matches_frozen_values() {
        // Outer and inner both at (1/2, 1, 3/8).
        let p = FibParams::new(0.5, 1.0, 0.375).unwrap();
        let report = general_annulus(&cubic(), &p, &p, RadiusForm::Factored).unwrap();
        assert_close(report.prefactors.0, 21.0 / 80.0, "outer prefactor");
        let frozen_outer = [
            1.912_824_389_014_865_2,
            3.387_764_208_750_247_6,
            4.511_338_823_612_524_3,
        ];
        for (i, want) in frozen_outer.iter().enumerate() {
            assert_close(report.outer_terms[i], *want, "outer term");
        }
        assert_eq!(report.k_outer, 3);
        assert_close(report.annulus.r2, 1.184_226_441_198_287_6, "r2");
        assert_close(report.prefactors.1, 80.0 / 21.0, "inner prefactor");
        let frozen_inner = [
            0.121_983_667_017_913_59,
            0.427_756_356_500_836_1,
            0.174_753_780_891_859_97,
        ];
        for (i, want) in frozen_inner.iter().enumerate() {
            assert_close(report.inner_terms[i], *want, "inner term");
        }
        assert_eq!(report.k_inner, 1);
        assert_close(report.annulus.r1, 0.464_699_683_877_766_06, "r1");
    }

    #[test]
    fn factored_and_expanded_forms_agree() {
        let outer = FibParams::new(0.5, 1.0, 0.375).unwrap();
        let inner = FibParams::new(2.0, 0.7, 1.3).unwrap();
        let f = general_annulus(&cubic(), &outer, &inner, RadiusForm::Factored).unwrap();
        let e = general_annulus(&cubic(), &outer, &inner, RadiusForm::Expanded).unwrap();
        assert!((f.annulus.r2 - e.annulus.r2).abs() <= 1e-12 * f.annulus.r2);
        assert!((f.annulus.r1 - e.annulus.r1).abs() <= 1e-12 * f.annulus.r1);
        assert_eq!(e.prefactors, (1.0, 1.0));
        assert_eq!(f.k_outer, e.k_outer);
        assert_eq!(f.k_inner, e.k_inner);
    }

    #[test]
    fn classic_annulus_is_the_unit_specialization() {
        let ones = FibParams::new(1.0, 1.0, 1.0).unwrap();
        let via_general = general_annulus(&cubic(), &ones, &ones, RadiusForm::Factored).unwrap();
        let direct = diaz_barrero_annulus(&cubic()).unwrap();
        assert_eq!(via_general.annulus.r1.to_bits(), direct.annulus.r1.to_bits());
        assert_eq!(via_general.annulus.r2.to_bits(), direct.annulus.r2.to_bits());
        assert_eq!(via_general.outer_terms, direct.outer_terms);
        assert_eq!(via_general.inner_terms, direct.inner_terms);
    }

    #[test]
    fn radii_reconstruct_from_report_terms() {
        let outer = FibParams::new(3.0, 0.2, 1.1).unwrap();
        let inner = FibParams::new(0.9, 4.0, 0.3).unwrap();
        let p = Polynomial::from_real(&[2.0, -1.0, 0.0, 4.0, 0.5]).unwrap();
        let report = general_annulus(&p, &outer, &inner, RadiusForm::Factored).unwrap();
        let max = report
            .outer_terms
            .iter()
            .cloned()
            .fold(f64::NEG_INFINITY, f64::max);
        let min = report.inner_terms.iter().cloned().fold(f64::INFINITY, f64::min);
        assert_eq!(report.annulus.r2.to_bits(), (report.prefactors.0 * max).to_bits());
        assert_eq!(report.annulus.r1.to_bits(), (report.prefactors.1 * min).to_bits());
        assert_eq!(report.outer_terms[report.k_outer - 1], max);
        assert_eq!(report.inner_terms[report.k_inner - 1], min);
        // a_2 = 0 never binds the inner minimum.
        assert_eq!(report.inner_terms[1], f64::INFINITY);
    }

    #[test]
    fn linear_polynomial_pins_both_radii_to_the_root() {
        // For z + c both radii collapse to |c| regardless of parameters.
        let p = Polynomial::new(vec![Complex64::new(3.0, -4.0), Complex64::new(1.0, 0.0)])
            .unwrap();
        for (a, b, c) in [(1.0, 1.0, 1.0), (0.5, 1.0, 0.375), (7.0, 0.01, 2.5)] {
            let params = FibParams::new(a, b, c).unwrap();
            let report = general_annulus(&p, &params, &params, RadiusForm::Factored).unwrap();
            assert_close(report.annulus.r1, 5.0, "r1 equals |root|");
            assert_close(report.annulus.r2, 5.0, "r2 equals |root|");
        }
    }

    #[test]
    fn zero_constant_term_gives_zero_inner_radius() {
        let p = Polynomial::from_real(&[0.0, 2.0, 1.0]).unwrap();
        let report = diaz_barrero_annulus(&p).unwrap();
        assert_eq!(report.annulus.r1, 0.0);
        assert!(report.annulus.r2.is_finite() && report.annulus.r2 > 0.0);
    }

    #[test]
    fn constant_polynomial_is_rejected() {
        let p = Polynomial::from_real(&[4.0]).unwrap();
        assert_eq!(
            diaz_barrero_annulus(&p).unwrap_err(),
            BoundsError::ConstantPolynomial
        );
        assert_eq!(cauchy_radius(&p).unwrap_err(), BoundsError::ConstantPolynomial);
    }

    #[test]
    fn cauchy_radius_matches_frozen_value() {
        let result = cauchy_radius(&cubic()).unwrap();
        assert_close(result.radius, 1.038_277_933_813_474_3, "radius");
        // Q(1.05) = 0.032375 > 0, so the radius must sit below 1.05.
        assert!(result.radius < 1.05);
        let scale = 1.0 + 0.7 + 0.3 + 0.1;
        assert!(result.residual.abs() <= 1e-12 * scale);
        assert!(result.iterations > 0 && result.iterations <= 128);
    }

    #[test]
    fn cauchy_radius_of_pure_monomial_is_zero() {
        let p = Polynomial::from_real(&[0.0, 0.0, 0.0, 2.0]).unwrap();
        let result = cauchy_radius(&p).unwrap();
        assert_eq!(result.radius, 0.0);
        assert_eq!(result.residual, 0.0);
    }

    #[test]
    fn cauchy_radius_scales_with_the_argument() {
        // Radius of P(lambda z) is radius(P) / lambda, exactly in algebra.
        let base = cauchy_radius(&cubic()).unwrap().radius;
        for lambda in [0.125f64, 3.0, 64.0, 1e3] {
            let scaled: Vec<f64> = [0.7, 0.3, 0.1, 1.0]
                .iter()
                .enumerate()
                .map(|(j, &aj)| aj * lambda.powi(j as i32))
                .collect();
            let p = Polynomial::from_real(&scaled).unwrap();
            let r = cauchy_radius(&p).unwrap().radius;
            assert!(
                (r - base / lambda).abs() <= 1e-10 * (base / lambda),
                "lambda = {lambda}: {r} vs {}",
                base / lambda
            );
        }
    }

    #[test]
    fn cauchy_radius_survives_extreme_degree() {
        // Degree 3000 with coefficients of modulus 1: g-form evaluation keeps
        // every intermediate finite.
        let mut coeffs = vec![1.0; 3001];
        coeffs[0] = 0.5;
        let p = Polynomial::from_real(&coeffs).unwrap();
        let r = cauchy_radius(&p).unwrap();
        assert!(r.radius.is_finite() && r.radius > 1.0 && r.radius < 2.0);
    }

    #[test]
    fn cauchy_radius_handles_huge_coefficients() {
        let p = Polynomial::from_real(&[1e10, -3e9, 2.0]).unwrap();
        let r = cauchy_radius(&p).unwrap();
        // Q(x) = x^2 - 1.5e9 x - 5e9: the positive root sits a hair above
        // 1.5e9 because the linear term dominates the constant one.
        assert!(r.radius > 1.5e9 && r.radius < 1.500001e9);
        let g_residual = r.residual / r.radius.powi(2);
        assert!(g_residual.abs() < 1e-12);
    }

    #[test]
    fn tightness_metrics_follow_definitions() {
        let report = diaz_barrero_annulus(&cubic()).unwrap();
        let roots = RootSet {
            roots: vec![
                Complex64::new(0.7, 0.0),
                Complex64::new(0.0, -1.1),
                Complex64::new(0.6, 0.6),
            ],
            residuals: vec![0.0; 3],
            converged: true,
            iterations: 1,
        };
        let m = annulus_width_metrics(&report.annulus, &roots).unwrap();
        let r1 = report.annulus.r1;
        let r2 = report.annulus.r2;
        assert_close(m.inner_ratio, r1 / 0.7, "inner ratio");
        assert_close(m.outer_ratio, 1.1 / r2, "outer ratio");
        assert_close(m.log_width, (r2 / r1).ln(), "log width");

        let empty = RootSet {
            roots: vec![],
            residuals: vec![],
            converged: true,
            iterations: 0,
        };
        assert_eq!(
            annulus_width_metrics(&report.annulus, &empty).unwrap_err(),
            BoundsError::EmptyRootSet
        );
    }

    #[test]
    fn degenerate_inner_radius_reports_infinite_log_width() {
        let p = Polynomial::from_real(&[0.0, 2.0, 1.0]).unwrap();
        let report = diaz_barrero_annulus(&p).unwrap();
        let roots = RootSet {
            roots: vec![Complex64::new(0.0, 0.0), Complex64::new(-2.0, 0.0)],
            residuals: vec![0.0; 2],
            converged: true,
            iterations: 1,
        };
        let m = annulus_width_metrics(&report.annulus, &roots).unwrap();
        assert_eq!(m.inner_ratio, 0.0);
        assert_eq!(m.log_width, f64::INFINITY);
    }
}
