//! Zero sequences for canonical products, including the tower-growing Baker
//! construction. Zeros are held in log scale because the Baker sequence
//! leaves the f64 range after six terms while its log-moduli stay tiny.

use crate::error::EvalError;
use crate::logcx::{ln_1p_exp, LogComplex};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum ZeroKind {
    Explicit,
    /// a_1 = 2, a_{n+1} = 0.75 * A_n(a_n) with A_n(z) = C z^2 prod_{k<=n} (1 + z/a_k).
    Baker { c: f64, requested: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroSequence {
    kind: ZeroKind,
    zeros: Vec<LogComplex>,
    truncated: bool,
}

impl ZeroSequence {
    pub fn explicit(values: Vec<Complex64>) -> Result<Self, EvalError> {
        if values.iter().any(|v| *v == Complex64::new(0.0, 0.0) || !v.is_finite()) {
            return Err(EvalError::InvalidInput(
                "explicit zeros must be finite and nonzero".into(),
            ));
        }
        Ok(ZeroSequence {
            kind: ZeroKind::Explicit,
            zeros: values.into_iter().map(LogComplex::from_complex).collect(),
            truncated: false,
        })
    }

    pub fn from_logs(values: Vec<LogComplex>, kind: ZeroKind) -> Self {
        ZeroSequence { kind, zeros: values, truncated: false }
    }

    pub fn kind(&self) -> &ZeroKind {
        &self.kind
    }

    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    pub fn logs(&self) -> &[LogComplex] {
        &self.zeros
    }

    /// True when the Baker recursion stopped early because even the
    /// log-modulus left the f64 range.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    /// Materialized complex values; `None` when any modulus overflows f64.
    pub fn as_complex(&self) -> Option<Vec<Complex64>> {
        if self.zeros.iter().any(|l| l.logmod > 709.0) {
            return None;
        }
        Some(self.zeros.iter().map(|l| l.to_complex()).collect())
    }

    /// Zeros negated (arg shifted by pi), e.g. products in the form (1 + z/a_n).
    pub fn negated(&self) -> ZeroSequence {
        ZeroSequence {
            kind: self.kind.clone(),
            zeros: self.zeros.iter().map(|l| l.neg()).collect(),
            truncated: self.truncated,
        }
    }
}

/// First `n` terms of the Baker zero sequence for prefactor `c`, computed in
/// log scale. The interval constraint a_{n+1} in (A_n(a_n)/2, A_n(a_n)) and
/// strict monotonicity a_{n+1} > 2 a_n are re-checked as log inequalities.
pub fn baker_zeros(c: f64, n: usize) -> Result<ZeroSequence, EvalError> {
    if !(c > 0.0) || !c.is_finite() {
        return Err(EvalError::InvalidInput("baker prefactor C must be positive".into()));
    }
    if n == 0 {
        return Err(EvalError::InvalidInput("baker zero count must be >= 1".into()));
    }
    let ln_c = c.ln();
    let ln_three_quarters = 0.75f64.ln();
    let mut la: Vec<f64> = Vec::with_capacity(n);
    la.push(std::f64::consts::LN_2);
    let mut truncated = false;
    while la.len() < n {
        let cur = *la.last().unwrap();
        // log A_m(a_m) = log C + 2 log a_m + sum_{k<=m} log(1 + a_m/a_k)
        let mut log_big_a = ln_c + 2.0 * cur;
        for &lk in &la {
            log_big_a += ln_1p_exp(cur - lk);
        }
        let next = ln_three_quarters + log_big_a;
        if !next.is_finite() || next > 1e300 {
            truncated = true;
            break;
        }
        debug_assert!(next - log_big_a > -std::f64::consts::LN_2 && next < log_big_a);
        if next <= cur + std::f64::consts::LN_2 {
            return Err(EvalError::InvalidInput(format!(
                "baker recursion lost monotonicity at term {}",
                la.len() + 1
            )));
        }
        la.push(next);
    }
    Ok(ZeroSequence {
        kind: ZeroKind::Baker { c, requested: n },
        zeros: la.into_iter().map(|lm| LogComplex { logmod: lm, arg: 0.0 }).collect(),
        truncated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_terms_for_unit_prefactor() {
        // a_1 = 2, a_2 = 0.75 * (1*4*(1+1)) = 6, a_3 = 0.75 * (36*4*2) = 216
        let seq = baker_zeros(1.0, 3).unwrap();
        let vals = seq.as_complex().unwrap();
        assert!((vals[0].re - 2.0).abs() < 1e-12);
        assert!((vals[1].re - 6.0).abs() < 1e-11);
        assert!((vals[2].re - 216.0).abs() < 1e-9);
    }

    #[test]
    fn first_term_is_two_for_any_prefactor() {
        for &c in &[0.1, 1.0, 5.0] {
            let seq = baker_zeros(c, 1).unwrap();
            assert!((seq.logs()[0].logmod - std::f64::consts::LN_2).abs() < 1e-15);
        }
    }

    #[test]
    fn deep_terms_stay_in_log_range() {
        let seq = baker_zeros(1.0, 12).unwrap();
        assert_eq!(seq.len(), 12);
        assert!(!seq.truncated());
        // growth is at least geometric with ratio 2
        for w in seq.logs().windows(2) {
            assert!(w[1].logmod > w[0].logmod + std::f64::consts::LN_2 - 1e-12);
        }
        // a_7 is far beyond f64 but its log is fine
        assert!(seq.logs()[6].logmod > 1000.0);
        assert!(seq.as_complex().is_none());
    }

    #[test]
    fn explicit_rejects_zero_modulus() {
        assert!(ZeroSequence::explicit(vec![Complex64::new(0.0, 0.0)]).is_err());
    }
}
