//! Log-scale complex arithmetic.
//!
//! Every modulus in this crate is carried as a natural log so that values on
//! the scale of exp(exp(r)) never leave the representable range. A value is
//! a pair (logmod, arg); the number zero is encoded as logmod = -inf.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Normalize an angle into (-pi, pi].
pub fn normalize_angle(a: f64) -> f64 {
    if !a.is_finite() {
        return f64::NAN;
    }
    let t = a.rem_euclid(2.0 * PI);
    if t > PI {
        t - 2.0 * PI
    } else {
        t
    }
}

/// ln(1 + e^d), stable for any d.
pub fn ln_1p_exp(d: f64) -> f64 {
    if d > 0.0 {
        d + (-d).exp().ln_1p()
    } else {
        d.exp().ln_1p()
    }
}

/// A complex value stored as (log of modulus, argument).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LogComplex {
    /// Natural log of the modulus; `NEG_INFINITY` encodes the value 0.
    pub logmod: f64,
    /// Argument, normalized into (-pi, pi]. Zero carries arg = 0.
    pub arg: f64,
}

impl LogComplex {
    pub const ZERO: LogComplex = LogComplex { logmod: f64::NEG_INFINITY, arg: 0.0 };
    pub const ONE: LogComplex = LogComplex { logmod: 0.0, arg: 0.0 };

    pub fn new(logmod: f64, arg: f64) -> Self {
        if logmod == f64::NEG_INFINITY {
            return Self::ZERO;
        }
        LogComplex { logmod, arg: normalize_angle(arg) }
    }

    pub fn from_complex(z: Complex64) -> Self {
        if z == Complex64::new(0.0, 0.0) {
            return Self::ZERO;
        }
        LogComplex { logmod: z.norm().ln(), arg: normalize_angle(z.arg()) }
    }

    pub fn from_real(x: f64) -> Self {
        if x == 0.0 {
            Self::ZERO
        } else if x > 0.0 {
            LogComplex { logmod: x.ln(), arg: 0.0 }
        } else {
            LogComplex { logmod: (-x).ln(), arg: PI }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.logmod == f64::NEG_INFINITY
    }

    /// Back to a plain complex number. Overflows to infinity past logmod ~ 709.
    pub fn to_complex(&self) -> Complex64 {
        if self.is_zero() {
            return Complex64::new(0.0, 0.0);
        }
        Complex64::from_polar(self.logmod.exp(), self.arg)
    }

    pub fn mul(&self, other: &LogComplex) -> LogComplex {
        if self.is_zero() || other.is_zero() {
            return Self::ZERO;
        }
        LogComplex::new(self.logmod + other.logmod, self.arg + other.arg)
    }

    pub fn div(&self, other: &LogComplex) -> LogComplex {
        if self.is_zero() {
            return Self::ZERO;
        }
        LogComplex::new(self.logmod - other.logmod, self.arg - other.arg)
    }

    pub fn neg(&self) -> LogComplex {
        if self.is_zero() {
            return Self::ZERO;
        }
        LogComplex::new(self.logmod, self.arg + PI)
    }

    pub fn scale(&self, c: Complex64) -> LogComplex {
        self.mul(&LogComplex::from_complex(c))
    }

    /// The ratio self/other as a plain complex number.
    pub fn ratio_to_complex(&self, other: &LogComplex) -> Complex64 {
        self.div(other).to_complex()
    }

    /// Sum of log-scale values via a complex log-sum-exp: the largest
    /// log-modulus is factored out and the residual sum is accumulated in
    /// ordinary complex arithmetic, so relative accuracy is kept even when
    /// the summands individually overflow a plain f64.
    pub fn sum(terms: &[LogComplex]) -> LogComplex {
        let m = terms
            .iter()
            .filter(|t| !t.is_zero())
            .map(|t| t.logmod)
            .fold(f64::NEG_INFINITY, f64::max);
        if m == f64::NEG_INFINITY {
            return Self::ZERO;
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for t in terms {
            if !t.is_zero() {
                acc += Complex64::from_polar((t.logmod - m).exp(), t.arg);
            }
        }
        if acc == Complex64::new(0.0, 0.0) {
            return Self::ZERO;
        }
        LogComplex::new(m + acc.norm().ln(), acc.arg())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn from_complex_basics() {
        let a = LogComplex::from_complex(Complex64::new(0.0, 2.0));
        assert!(close(a.logmod, 2.0f64.ln(), 1e-15));
        assert!(close(a.arg, PI / 2.0, 1e-15));

        let z = LogComplex::from_complex(Complex64::new(0.0, 0.0));
        assert!(z.is_zero());
        assert_eq!(z.arg, 0.0);
    }

    #[test]
    fn angle_normalization_boundary() {
        assert!(close(normalize_angle(PI), PI, 1e-15));
        assert!(close(normalize_angle(-PI), PI, 1e-15));
        assert!(close(normalize_angle(3.0 * PI), PI, 1e-12));
        assert!(close(normalize_angle(-2.5 * PI), -0.5 * PI, 1e-12));
    }

    #[test]
    fn product_of_huge_values_stays_in_log_scale() {
        let a = LogComplex::new(1.0e8, 0.3);
        let b = LogComplex::new(2.0e8, -0.1);
        let p = a.mul(&b);
        assert!(close(p.logmod, 3.0e8, 1.0));
        assert!(close(p.arg, 0.2, 1e-9));
    }

    #[test]
    fn sum_factors_out_the_max() {
        // e^100 + e^98 = e^100 (1 + e^-2)
        let s = LogComplex::sum(&[LogComplex::new(100.0, 0.0), LogComplex::new(98.0, 0.0)]);
        assert!(close(s.logmod, 100.0 + (-2.0f64).exp().ln_1p(), 1e-12));
        assert!(close(s.arg, 0.0, 1e-15));
    }

    #[test]
    fn cancellation_collapses_to_zero_or_noise_floor() {
        let a = LogComplex::new(50.0, 0.25);
        let s = LogComplex::sum(&[a, a.neg()]);
        // exact float cancellation here
        assert!(s.is_zero() || s.logmod < 50.0 - 25.0);
    }

    #[test]
    fn ln_1p_exp_matches_naive_in_safe_range() {
        for &d in &[-30.0, -2.0, 0.0, 1.5, 20.0] {
            let naive = (1.0 + (d as f64).exp()).ln();
            assert!(close(ln_1p_exp(d), naive, 1e-12));
        }
        assert!(close(ln_1p_exp(1000.0), 1000.0, 1e-12));
    }
}
