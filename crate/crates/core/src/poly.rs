//! Polynomials with complex coefficients, ascending order.

use crate::logcx::LogComplex;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Poly {
    coeffs: Vec<Complex64>,
}

impl Poly {
    /// Build from ascending coefficients; trailing zero coefficients are trimmed.
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        let mut coeffs = coeffs;
        while let Some(c) = coeffs.last() {
            if *c == Complex64::new(0.0, 0.0) {
                coeffs.pop();
            } else {
                break;
            }
        }
        Poly { coeffs }
    }

    pub fn from_reals(coeffs: &[f64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Degree of the trimmed polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<Complex64> {
        self.coeffs.last().copied()
    }

    /// Horner evaluation in plain complex arithmetic.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Log-scale evaluation: a complex log-sum-exp over the monomials, safe
    /// for |z| far past the plain-arithmetic overflow point.
    pub fn eval_log(&self, z: Complex64) -> LogComplex {
        monomial_sum_log(self.coeffs.iter().enumerate().map(|(k, &c)| (k as f64, c)), z)
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as f64)
                .collect(),
        )
    }
}

/// Log-sum-exp over terms c * z^k for (k, c) pairs with real exponent k >= 0.
pub fn monomial_sum_log(
    terms: impl Iterator<Item = (f64, Complex64)>,
    z: Complex64,
) -> LogComplex {
    let zero = Complex64::new(0.0, 0.0);
    let (lnr, th) = if z == zero { (f64::NEG_INFINITY, 0.0) } else { (z.norm().ln(), z.arg()) };
    let mut parts = Vec::new();
    for (k, c) in terms {
        if c == zero {
            continue;
        }
        let base = LogComplex::from_complex(c);
        if k == 0.0 {
            parts.push(base);
        } else if lnr > f64::NEG_INFINITY {
            parts.push(LogComplex::new(base.logmod + k * lnr, base.arg + k * th));
        }
        // k > 0 with z = 0 contributes nothing
    }
    LogComplex::sum(&parts)
}
