//! Polynomial representation: parsing, evaluation, reversal, normalization.

use num_complex::Complex64;
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum PolyError {
    #[error("coefficient list is empty")]
    Empty,
    #[error("all coefficients are zero")]
    AllZero,
    #[error("coefficient {index} is not a number or [re, im] pair")]
    NotNumeric { index: usize },
    #[error("malformed polynomial document: {0}")]
    Malformed(String),
}

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Complex polynomial with coefficients stored in ascending degree order:
/// `coeffs()[j]` multiplies `z^j`. Trailing zeros are stripped on
/// construction, so the leading coefficient is always nonzero and the stored
/// length is exactly `degree() + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Complex64>) -> Result<Self, PolyError> {
        if coeffs.is_empty() {
            return Err(PolyError::Empty);
        }
        while coeffs.len() > 1 && *coeffs.last().unwrap() == ZERO {
            coeffs.pop();
        }
        if coeffs.len() == 1 && coeffs[0] == ZERO {
            return Err(PolyError::AllZero);
        }
        Ok(Self { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self, PolyError> {
        Self::new(coeffs.iter().map(|&re| Complex64::new(re, 0.0)).collect())
    }

    /// Parses a JSON array of coefficients in ascending degree order. Each
    /// entry is either a `[re, im]` pair or a bare number (imaginary part
    /// zero); the two styles can be mixed.
    pub fn parse(text: &str) -> Result<Self, PolyError> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| PolyError::Malformed(e.to_string()))?;
        let entries = value
            .as_array()
            .ok_or_else(|| PolyError::Malformed("expected a JSON array".into()))?;
        if entries.is_empty() {
            return Err(PolyError::Empty);
        }
        let mut coeffs = Vec::with_capacity(entries.len());
        for (index, entry) in entries.iter().enumerate() {
            let c = match entry {
                Value::Number(x) => {
                    let re = x.as_f64().ok_or(PolyError::NotNumeric { index })?;
                    Complex64::new(re, 0.0)
                }
                Value::Array(pair) if pair.len() == 2 => {
                    let re = pair[0].as_f64().ok_or(PolyError::NotNumeric { index })?;
                    let im = pair[1].as_f64().ok_or(PolyError::NotNumeric { index })?;
                    Complex64::new(re, im)
                }
                _ => return Err(PolyError::NotNumeric { index }),
            };
            coeffs.push(c);
        }
        Self::new(coeffs)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^j`; zero above the degree.
    pub fn coeff(&self, j: usize) -> Complex64 {
        self.coeffs.get(j).copied().unwrap_or(ZERO)
    }

    pub fn constant_term(&self) -> Complex64 {
        self.coeffs[0]
    }

    pub fn leading(&self) -> Complex64 {
        *self.coeffs.last().unwrap()
    }

    /// Horner evaluation.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        let mut acc = ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Coefficient reversal `z^n P(1/z)`. Nonzero roots map to their
    /// reciprocals; when the constant term is zero the reversal loses degree
    /// because trailing zeros are stripped.
    pub fn reversed(&self) -> Polynomial {
        let rev: Vec<Complex64> = self.coeffs.iter().rev().copied().collect();
        Polynomial::new(rev).expect("reversal keeps at least one nonzero coefficient")
    }

    /// Scales so the leading coefficient is exactly 1; the roots are
    /// unchanged.
    pub fn monic(&self) -> Polynomial {
        let lead = self.leading();
        let mut coeffs: Vec<Complex64> = self.coeffs.iter().map(|&c| c / lead).collect();
        *coeffs.last_mut().unwrap() = Complex64::new(1.0, 0.0);
        Polynomial { coeffs }
    }
}
