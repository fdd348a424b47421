//! Ground-truth root finding by simultaneous (Aberth-Ehrlich) iteration,
//! plus containment checks of computed annuli against those roots.
//!
//! The iteration updates every approximation with a Newton step damped by the
//! pairwise repulsion sum, so the approximations converge to all roots at
//! once. Exact zero roots are deflated up front by stripping zero low-order
//! coefficients, which keeps the iteration away from the origin singularity
//! of the inner annulus bound.

use crate::bounds::{self, Annulus};
use crate::poly::Polynomial;
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum OracleError {
    #[error("root finding requires a polynomial of degree >= 1")]
    ConstantPolynomial,
    #[error("tolerance {0} is below the supported floor of 1e-14")]
    ToleranceTooSmall(f64),
    #[error("containment checks require a converged root set")]
    Unconverged,
}

/// Scaled residual every root of a converged set satisfies.
pub const RESIDUAL_BOUND: f64 = 1e-10;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

#[derive(Debug, Clone)]
pub struct RootSet {
    /// Degree-many approximations; multiple roots appear as tight clusters.
    pub roots: Vec<Complex64>,
    /// |P(z_i)| scaled by sum_j |a_j| |z_i|^j; 0/0 counts as converged.
    pub residuals: Vec<f64>,
    /// Updates fell below tolerance and every residual is within
    /// [`RESIDUAL_BOUND`].
    pub converged: bool,
    /// Simultaneous-iteration sweeps performed.
    pub iterations: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundSide {
    Inner,
    Outer,
}

#[derive(Debug, Clone)]
pub struct Violation {
    pub root: Complex64,
    pub modulus: f64,
    pub side: BoundSide,
    /// (r1 - |z|)/r1 for inner violations, (|z| - r2)/r2 for outer ones.
    pub relative_excess: f64,
}

#[derive(Debug, Clone)]
pub struct ContainmentReport {
    pub all_inside: bool,
    pub violations: Vec<Violation>,
}

/// Finds all roots of `poly`, zero roots exactly and the rest by
/// simultaneous iteration. Non-convergence within `max_iter` sweeps is
/// reported through the `converged` flag, not as an error.
pub fn find_roots(poly: &Polynomial, tol: f64, max_iter: usize) -> Result<RootSet, OracleError> {
    if poly.degree() == 0 {
        return Err(OracleError::ConstantPolynomial);
    }
    if tol < 1e-14 {
        return Err(OracleError::ToleranceTooSmall(tol));
    }
    let coeffs = poly.coeffs();
    let zero_roots = coeffs
        .iter()
        .position(|&c| c != ZERO)
        .expect("leading coefficient is nonzero");
    let mut roots = vec![ZERO; zero_roots];
    let mut settled = true;
    let mut iterations = 0;
    if coeffs.len() - zero_roots > 1 {
        let reduced =
            Polynomial::new(coeffs[zero_roots..].to_vec()).expect("nonzero leading coefficient");
        let (mut found, ok, sweeps) = aberth(&reduced, tol, max_iter);
        polish(&reduced, &mut found);
        roots.extend(found);
        settled = ok;
        iterations = sweeps;
    }
    let residuals: Vec<f64> = roots.iter().map(|&z| scaled_residual(poly, z)).collect();
    let converged = settled && residuals.iter().all(|&r| r <= RESIDUAL_BOUND);
    Ok(RootSet {
        roots,
        residuals,
        converged,
        iterations,
    })
}

/// One Gauss-Seidel styled sweep structure: each point is updated in place so
/// later points in the same sweep already see the move.
fn aberth(poly: &Polynomial, tol: f64, max_iter: usize) -> (Vec<Complex64>, bool, usize) {
    let n = poly.degree();
    let coeffs = poly.coeffs();
    let deriv: Vec<Complex64> = (1..=n).map(|j| coeffs[j] * j as f64).collect();

    // Initial guesses on a circle strictly inside the Cauchy disk, rotated by
    // a fixed offset so no guess starts on the real axis or on a conjugate
    // mirror of another.
    let radius = 0.9
        * bounds::cauchy_radius(poly)
            .expect("degree checked by caller")
            .radius;
    const ANGLE_OFFSET: f64 = 0.4;
    let mut z: Vec<Complex64> = (0..n)
        .map(|i| {
            let theta = ANGLE_OFFSET + std::f64::consts::TAU * i as f64 / n as f64;
            Complex64::from_polar(radius, theta)
        })
        .collect();

    // Below this scaled residual the Newton numerator is dominated by
    // evaluation rounding noise; moving the point further is meaningless and
    // clustered roots would otherwise orbit forever on that noise.
    const NOISE_FLOOR: f64 = 1e-14;

    for sweep in 1..=max_iter {
        let mut all_small = true;
        for i in 0..n {
            let zi = z[i];
            let p = horner(coeffs, zi);
            if p == ZERO {
                continue;
            }
            let zm = zi.norm();
            let mut eval_scale = 0.0;
            let mut zp = 1.0;
            for c in coeffs {
                eval_scale += c.norm() * zp;
                zp *= zm;
            }
            if p.norm() <= NOISE_FLOOR * eval_scale {
                continue;
            }
            let dp = horner(&deriv, zi);
            if dp == ZERO {
                // Exactly at a critical point: nudge off and retry next sweep.
                z[i] = zi + Complex64::new(1e-8 * (1.0 + zi.norm()), 1e-8);
                all_small = false;
                continue;
            }
            let newton = p / dp;
            let mut repulsion = ZERO;
            for (j, &zj) in z.iter().enumerate() {
                if j == i {
                    continue;
                }
                let mut diff = zi - zj;
                if diff == ZERO {
                    diff = Complex64::new(1e-12 * (1.0 + zi.norm()), 0.0);
                }
                repulsion += diff.inv();
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let delta = if denom == ZERO { newton } else { newton / denom };
            z[i] = zi - delta;
            if delta.norm() > tol * (1.0 + z[i].norm()) {
                all_small = false;
            }
        }
        if all_small {
            return (z, true, sweep);
        }
    }
    (z, false, max_iter)
}

/// Up to two Newton steps per root, each kept only if it shrinks |P|.
fn polish(poly: &Polynomial, roots: &mut [Complex64]) {
    let coeffs = poly.coeffs();
    let deriv: Vec<Complex64> = (1..coeffs.len())
        .map(|j| coeffs[j] * j as f64)
        .collect();
    for z in roots.iter_mut() {
        for _ in 0..2 {
            let p = horner(coeffs, *z);
            if p == ZERO {
                break;
            }
            let dp = horner(&deriv, *z);
            if dp == ZERO {
                break;
            }
            let candidate = *z - p / dp;
            if horner(coeffs, candidate).norm() < p.norm() {
                *z = candidate;
            } else {
                break;
            }
        }
    }
}

fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    let mut acc = ZERO;
    for &c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

fn scaled_residual(poly: &Polynomial, z: Complex64) -> f64 {
    let pv = poly.evaluate(z).norm();
    if pv == 0.0 {
        return 0.0;
    }
    let zm = z.norm();
    let mut scale = 0.0;
    let mut zp = 1.0;
    for c in poly.coeffs() {
        scale += c.norm() * zp;
        zp *= zm;
    }
    pv / scale
}

/// Checks every root modulus against a closed annulus, with relative slack
/// `eps` to absorb rounding on both sides.
pub fn verify_containment(
    roots: &RootSet,
    annulus: &Annulus,
    eps: f64,
) -> Result<ContainmentReport, OracleError> {
    if !roots.converged {
        return Err(OracleError::Unconverged);
    }
    let mut violations = Vec::new();
    for &z in &roots.roots {
        let m = z.norm();
        if m < annulus.r1 * (1.0 - eps) {
            violations.push(Violation {
                root: z,
                modulus: m,
                side: BoundSide::Inner,
                relative_excess: (annulus.r1 - m) / annulus.r1,
            });
        } else if m > annulus.r2 * (1.0 + eps) {
            violations.push(Violation {
                root: z,
                modulus: m,
                side: BoundSide::Outer,
                relative_excess: (m - annulus.r2) / annulus.r2,
            });
        }
    }
    Ok(ContainmentReport {
        all_inside: violations.is_empty(),
        violations,
    })
}
