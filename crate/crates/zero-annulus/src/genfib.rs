//! Generalized Fibonacci sequences driven by a positive parameter triple
//! (a, b, c): starting from F_0 = 0, F_1 = 1, even-index terms advance by
//! `a F_{n-1} + c F_{n-2}` and odd-index terms by `b F_{n-1} + c F_{n-2}`.
//!
//! The module provides the forward recurrence in both f64 and exact rational
//! arithmetic, a Binet-style closed form, an overflow-safe log magnitude for
//! huge indices, exact binomial coefficients, and the binomial-sum identity
//! that collapses a weighted sum of F_1..F_n to F_{4n}.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum GenFibError {
    #[error("parameter {name} must be a positive finite number, got {value}")]
    NonPositive { name: &'static str, value: f64 },
    #[error("parameter {name} must be positive")]
    NonPositiveExact { name: &'static str },
    #[error("float evaluation of the identity overflows at n = {n}; use the exact form")]
    FloatOverflow { n: usize },
}

/// Exact scalar used wherever rounding is not acceptable.
pub type ExactScalar = BigRational;

/// Positive parameter triple (a, b, c) for a generalized Fibonacci sequence.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FibParams {
    a: f64,
    b: f64,
    c: f64,
}

impl FibParams {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self, GenFibError> {
        for (name, value) in [("a", a), ("b", b), ("c", c)] {
            let strictly_positive = value.is_finite() && value > 0.0;
            if !strictly_positive {
                return Err(GenFibError::NonPositive { name, value });
            }
        }
        Ok(Self { a, b, c })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.a, self.b, self.c]
    }

    /// Roots of the characteristic quadratic x^2 - ab x - abc. The
    /// discriminant (ab)^2 + 4abc is positive for any valid triple, so
    /// alpha > 0 > beta, alpha + beta = ab and alpha * beta = -abc.
    pub fn characteristic_roots(&self) -> ClosedFormRoots {
        let ab = self.a * self.b;
        let disc = (ab * ab + 4.0 * ab * self.c).sqrt();
        ClosedFormRoots {
            alpha: 0.5 * (ab + disc),
            beta: 0.5 * (ab - disc),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormRoots {
    pub alpha: f64,
    pub beta: f64,
}

/// Exact-rational counterpart of [`FibParams`].
#[derive(Debug, Clone, PartialEq)]
pub struct ExactFibParams {
    a: ExactScalar,
    b: ExactScalar,
    c: ExactScalar,
}

impl ExactFibParams {
    pub fn new(a: ExactScalar, b: ExactScalar, c: ExactScalar) -> Result<Self, GenFibError> {
        for (name, value) in [("a", &a), ("b", &b), ("c", &c)] {
            if !value.is_positive() {
                return Err(GenFibError::NonPositiveExact { name });
            }
        }
        Ok(Self { a, b, c })
    }

    pub fn from_integers(a: i64, b: i64, c: i64) -> Result<Self, GenFibError> {
        Self::new(
            BigRational::from_integer(a.into()),
            BigRational::from_integer(b.into()),
            BigRational::from_integer(c.into()),
        )
    }

    pub fn a(&self) -> &ExactScalar {
        &self.a
    }

    pub fn b(&self) -> &ExactScalar {
        &self.b
    }

    pub fn c(&self) -> &ExactScalar {
        &self.c
    }

    /// Rounds each parameter to the nearest f64.
    pub fn to_float(&self) -> Result<FibParams, GenFibError> {
        FibParams::new(
            self.a.to_f64().unwrap_or(f64::NAN),
            self.b.to_f64().unwrap_or(f64::NAN),
            self.c.to_f64().unwrap_or(f64::NAN),
        )
    }
}

/// Parity indicator k mod 2, kept in integer arithmetic.
pub fn parity(k: usize) -> usize {
    k & 1
}

/// F_n by the forward recurrence.
pub fn fib_recurrence(params: &FibParams, n: usize) -> f64 {
    let (mut prev, mut cur) = (0.0f64, 1.0f64);
    if n == 0 {
        return prev;
    }
    for i in 2..=n {
        let step = if parity(i) == 0 { params.a } else { params.b };
        let next = step * cur + params.c * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// F_n by the forward recurrence in exact rational arithmetic.
pub fn fib_recurrence_exact(params: &ExactFibParams, n: usize) -> ExactScalar {
    let (mut prev, mut cur) = (ExactScalar::zero(), ExactScalar::one());
    if n == 0 {
        return prev;
    }
    for i in 2..=n {
        let step = if parity(i) == 0 { &params.a } else { &params.b };
        let next = step * &cur + &params.c * &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Binet-style closed form
/// F_k = a^{1-xi(k)} / (ab)^{floor(k/2)} * (alpha^k - beta^k) / (alpha - beta).
pub fn fib_closed_form(params: &FibParams, k: usize) -> f64 {
    let ClosedFormRoots { alpha, beta } = params.characteristic_roots();
    let k_i32 = i32::try_from(k).expect("index fits in i32");
    let binet = (alpha.powi(k_i32) - beta.powi(k_i32)) / (alpha - beta);
    let scale = params.a.powi((1 - parity(k)) as i32) / (params.a * params.b).powi((k / 2) as i32);
    scale * binet
}

/// ln F_n without overflow, valid far beyond the range where F_n itself is
/// representable:
///
/// ln F_n = (1 - xi(n)) ln a - floor(n/2) ln(ab) + (n - 1) ln alpha
///          + ln1p(-q^n) - ln1p(-q),       q = beta / alpha in (-1, 0).
///
/// Both ln1p corrections are well conditioned because |q| < 1.
pub fn fib_log_magnitude(params: &FibParams, n: usize) -> f64 {
    assert!(n >= 1, "F_0 = 0 has no log magnitude");
    let ClosedFormRoots { alpha, beta } = params.characteristic_roots();
    let q = beta / alpha;
    let qn = q.powi(i32::try_from(n).expect("index fits in i32"));
    (1 - parity(n)) as f64 * params.a.ln() - (n / 2) as f64 * (params.a * params.b).ln()
        + (n as f64 - 1.0) * alpha.ln()
        + (-qn).ln_1p()
        - (-q).ln_1p()
}

/// Exact binomial coefficient by the multiplicative formula; every partial
/// product is an exact integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    assert!(k <= n, "binomial requires k <= n");
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Both sides of the identity
///
/// sum_{k=1}^{n} (ab+c)^{n-k} (ab+2c)^k a^{xi(k)} (ab)^{floor(k/2)} c^{n-k}
///               F_k C(n,k)  =  F_{4n},
///
/// evaluated in exact rational arithmetic. Equality holds for every positive
/// triple and every n >= 1.
pub fn identity_sides_exact(params: &ExactFibParams, n: usize) -> (ExactScalar, ExactScalar) {
    assert!(n >= 1, "the identity starts at n = 1");
    let ab = &params.a * &params.b;
    let t1 = &ab + &params.c;
    let t2 = &ab + &params.c + &params.c;

    let pow = |base: &ExactScalar, top: usize| -> Vec<ExactScalar> {
        let mut v = Vec::with_capacity(top + 1);
        v.push(ExactScalar::one());
        for i in 1..=top {
            let next = &v[i - 1] * base;
            v.push(next);
        }
        v
    };
    let pow_t1 = pow(&t1, n);
    let pow_t2 = pow(&t2, n);
    let pow_c = pow(&params.c, n);
    let pow_ab = pow(&ab, n / 2);

    let mut fibs = Vec::with_capacity(n + 1);
    fibs.push(ExactScalar::zero());
    fibs.push(ExactScalar::one());
    for i in 2..=n.max(1) {
        let step = if parity(i) == 0 { &params.a } else { &params.b };
        let next = step * &fibs[i - 1] + &params.c * &fibs[i - 2];
        fibs.push(next);
    }

    let mut lhs = ExactScalar::zero();
    for k in 1..=n {
        let mut term = &pow_t1[n - k] * &pow_t2[k];
        if parity(k) == 1 {
            term *= &params.a;
        }
        term *= &pow_ab[k / 2];
        term *= &pow_c[n - k];
        term *= &fibs[k];
        term *= BigRational::from_integer(binomial(n, k));
        lhs += term;
    }
    let rhs = fib_recurrence_exact(params, 4 * n);
    (lhs, rhs)
}

/// Exact residual LHS - RHS of the identity; zero for every valid input.
pub fn identity_residual_exact(params: &ExactFibParams, n: usize) -> ExactScalar {
    let (lhs, rhs) = identity_sides_exact(params, n);
    lhs - rhs
}

/// Relative float residual (LHS - RHS) / RHS of the identity. Fails once the
/// terms overflow f64; the exact form has no such limit.
pub fn identity_residual(params: &FibParams, n: usize) -> Result<f64, GenFibError> {
    assert!(n >= 1, "the identity starts at n = 1");
    let ab = params.a * params.b;
    let t1 = ab + params.c;
    let t2 = ab + 2.0 * params.c;

    let mut fibs = Vec::with_capacity(n + 1);
    fibs.push(0.0f64);
    fibs.push(1.0f64);
    for i in 2..=n.max(1) {
        let step = if parity(i) == 0 { params.a } else { params.b };
        fibs.push(step * fibs[i - 1] + params.c * fibs[i - 2]);
    }

    let mut lhs = 0.0f64;
    let mut choose = 1.0f64;
    for (k, fib) in fibs.iter().enumerate().skip(1) {
        choose *= (n - k + 1) as f64 / k as f64;
        let term = t1.powi((n - k) as i32)
            * t2.powi(k as i32)
            * params.a.powi(parity(k) as i32)
            * ab.powi((k / 2) as i32)
            * params.c.powi((n - k) as i32)
            * fib
            * choose;
        lhs += term;
    }
    let rhs = fib_recurrence(params, 4 * n);
    if !lhs.is_finite() || !rhs.is_finite() {
        return Err(GenFibError::FloatOverflow { n });
    }
    Ok((lhs - rhs) / rhs)
}

/// Overflow-safe natural log of a positive rational, accurate to a few ulp
/// even when numerator and denominator have thousands of bits.
pub fn rational_ln(x: &ExactScalar) -> f64 {
    assert!(x.is_positive(), "rational_ln requires a positive argument");
    big_ln(x.numer()) - big_ln(x.denom())
}

/// ln of a positive big integer via its top 53 bits plus a power-of-two
/// correction.
fn big_ln(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 53 {
        return x.to_f64().unwrap().ln();
    }
    let shift = bits - 53;
    let top = (x >> shift).to_f64().unwrap();
    top.ln() + shift as f64 * std::f64::consts::LN_2
}
