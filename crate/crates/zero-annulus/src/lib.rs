//! Zero localization for complex polynomials.
//!
//! Every zero of a non-constant polynomial lies inside a computable annulus
//! whose radii combine binomial coefficients with a three-parameter
//! generalization of the Fibonacci numbers. This crate computes those annuli
//! (together with the classic Cauchy disk), verifies the combinatorial
//! identity behind them in exact rational arithmetic, cross-checks every
//! bound against a simultaneous-iteration root finder, and can tune the free
//! parameters per polynomial to tighten the annulus.
//!
//! ```
//! use zero_annulus::{bounds, oracle, Polynomial};
//!
//! // P(z) = z^3 + 0.1 z^2 + 0.3 z + 0.7
//! let poly = Polynomial::from_real(&[0.7, 0.3, 0.1, 1.0]).unwrap();
//! let report = bounds::diaz_barrero_annulus(&poly).unwrap();
//! let roots = oracle::find_roots(&poly, 1e-12, 500).unwrap();
//! let check = oracle::verify_containment(&roots, &report.annulus, 1e-8).unwrap();
//! assert!(check.all_inside);
//! ```

pub mod bounds;
pub mod cli;
pub mod families;
pub mod genfib;
pub mod oracle;
pub mod poly;
pub mod tuner;

pub use bounds::{Annulus, BoundReport, CauchyResult, Method, RadiusForm, TightnessMetrics};
pub use genfib::{ExactFibParams, FibParams};
pub use oracle::{ContainmentReport, RootSet};
pub use poly::Polynomial;
pub use tuner::{TuneConfig, TuneResult};

