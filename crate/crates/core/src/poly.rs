//! Dense univariate polynomials in the power basis.
//!
//! Index `d` of the coefficient vector holds the coefficient of `x^d`. The
//! same container serves plain binary64 coefficients ([`RealPolynomial`]) and
//! rigorous enclosures ([`IntervalPolynomial`]).

use num_complex::Complex64;
use serde::Serialize;

use crate::interval::{Interval, Scalar};

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Polynomial<S> {
    coeffs: Vec<S>,
}

pub type RealPolynomial = Polynomial<f64>;
pub type IntervalPolynomial = Polynomial<Interval>;

impl<S: Scalar> Polynomial<S> {
    /// Builds a polynomial, trimming exactly-zero leading coefficients.
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_exact_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    /// Degree; `-1` for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^d` (zero beyond the degree).
    pub fn coeff(&self, d: usize) -> S {
        self.coeffs.get(d).copied().unwrap_or_else(S::zero)
    }

    pub fn leading(&self) -> Option<S> {
        self.coeffs.last().copied()
    }

    pub fn eval(&self, x: S) -> S {
        self.coeffs.iter().rev().fold(S::zero(), |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(d, &c)| S::lift(d as f64) * c)
            .collect();
        Self::new(coeffs)
    }

    pub fn scale(&self, k: S) -> Self {
        Self::new(self.coeffs.iter().map(|&c| c * k).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|d| self.coeff(d) + other.coeff(d)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|d| self.coeff(d) - other.coeff(d)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j] + a * b;
            }
        }
        Self::new(out)
    }

    /// Returns `q` with `q(u) = p(center + u)`, by repeated synthetic division.
    pub fn taylor_shift(&self, center: S) -> Self {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for k in 0..n.saturating_sub(1) {
            for j in (k..n - 1).rev() {
                c[j] = c[j] + center * c[j + 1];
            }
        }
        Self::new(c)
    }

    /// Converts `sum_d series[d] T_d(x)` to the power basis, building the
    /// rows of `T_d` with `T_{d+1} = 2x T_d - T_{d-1}`. Fine for the degrees
    /// used here (below ~60); the rows grow like `2^d` beyond that.
    pub fn from_chebyshev_t(series: &[S]) -> Self {
        let n = series.len();
        if n == 0 {
            return Self::zero();
        }
        let mut out = vec![S::zero(); n];
        let mut prev = vec![S::zero(); n];
        let mut cur = vec![S::zero(); n];
        prev[0] = S::one();
        out[0] = series[0];
        if n > 1 {
            cur[1] = S::one();
            out[1] = out[1] + series[1];
        }
        let two = S::lift(2.0);
        for &s in series.iter().skip(2) {
            let mut next = vec![S::zero(); n];
            for i in 0..n {
                let shifted = if i > 0 { two * cur[i - 1] } else { S::zero() };
                next[i] = shifted - prev[i];
            }
            for i in 0..n {
                out[i] = out[i] + s * next[i];
            }
            prev = cur;
            cur = next;
        }
        Self::new(out)
    }
}

impl RealPolynomial {
    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Exact enclosure of this polynomial's (representable) coefficients.
    pub fn to_interval(&self) -> IntervalPolynomial {
        Polynomial::new(self.coeffs.iter().map(|&c| Interval::point(c)).collect())
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }
}

impl IntervalPolynomial {
    /// Midpoint polynomial.
    pub fn mid(&self) -> RealPolynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c.mid()).collect())
    }

    pub fn contains(&self, p: &RealPolynomial) -> bool {
        let n = self.coeffs.len().max(p.coeffs().len());
        (0..n).all(|d| self.coeff(d).contains(p.coeff(d)))
    }
}

/// Evaluation of `p` at `z` by Horner's scheme.
pub fn eval_complex(p: &RealPolynomial, z: Complex64) -> Complex64 {
    p.eval_complex(z)
}

/// `q(u) = p(center + u)`.
pub fn taylor_shift(p: &RealPolynomial, center: f64) -> RealPolynomial {
    p.taylor_shift(center)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cheb::cheb_t;
    use proptest::prelude::*;

    #[test]
    fn trims_and_reports_degree() {
        assert_eq!(RealPolynomial::new(vec![1.0, 0.0, 0.0]).degree(), 0);
        assert_eq!(RealPolynomial::new(vec![0.0]).degree(), -1);
        assert!(RealPolynomial::zero().is_zero());
        assert_eq!(RealPolynomial::new(vec![0.0, 2.0]).degree(), 1);
    }

    #[test]
    fn shift_of_square() {
        let p = RealPolynomial::new(vec![0.0, 0.0, 1.0]);
        assert_eq!(p.taylor_shift(-1.0).coeffs(), &[1.0, -2.0, 1.0]);
    }

    #[test]
    fn derivative_of_constant_is_zero() {
        assert!(RealPolynomial::constant(3.0).derivative().is_zero());
        assert!(RealPolynomial::zero().derivative().is_zero());
    }

    #[test]
    fn chebyshev_conversion_matches_recurrence() {
        let series = [0.5, -1.0, 0.25, 2.0, 0.0, -0.75];
        let p = RealPolynomial::from_chebyshev_t(&series);
        for i in 0..=20 {
            let x = -1.0 + 0.1 * i as f64;
            let want: f64 = series.iter().enumerate().map(|(d, s)| s * cheb_t(d, x)).sum();
            assert!((p.eval(x) - want).abs() < 1e-13);
        }
    }

    #[test]
    fn complex_evaluation_of_linear() {
        let p = RealPolynomial::new(vec![0.0, 1.0, 0.5]);
        let v = p.eval_complex(Complex64::new(0.0, 1.0));
        assert!((v - Complex64::new(-0.5, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn interval_shift_contains_plain_shift() {
        let p = RealPolynomial::new(vec![0.3, -1.7, 2.2, 0.9, -0.4]);
        let q = p.taylor_shift(-1.0);
        assert!(p.to_interval().taylor_shift(Interval::point(-1.0)).contains(&q));
    }

    proptest! {
        #[test]
        fn shift_there_and_back(coeffs in prop::collection::vec(-5.0f64..5.0, 1..8), c in -1.5f64..1.5) {
            let p = RealPolynomial::new(coeffs);
            let back = p.taylor_shift(c).taylor_shift(-c);
            let scale = 1.0 + p.max_abs_coeff();
            for d in 0..p.coeffs().len() {
                prop_assert!((back.coeff(d) - p.coeff(d)).abs() < 1e-12 * scale * 64.0);
            }
        }

        #[test]
        fn shift_preserves_values(coeffs in prop::collection::vec(-5.0f64..5.0, 1..8), c in -1.5f64..1.5, u in -1.0f64..1.0) {
            let p = RealPolynomial::new(coeffs);
            let q = p.taylor_shift(c);
            prop_assert!((q.eval(u) - p.eval(c + u)).abs() < 1e-10 * (1.0 + p.max_abs_coeff()));
            prop_assert!((q.eval(0.0) - p.eval(c)).abs() < 1e-13 * (1.0 + p.max_abs_coeff()) * 16.0);
        }

        #[test]
        fn conjugate_symmetry(coeffs in prop::collection::vec(-3.0f64..3.0, 1..10), re in -1.5f64..1.5, im in -1.5f64..1.5) {
            let p = RealPolynomial::new(coeffs);
            let z = Complex64::new(re, im);
            let a = p.eval_complex(z.conj());
            let b = p.eval_complex(z).conj();
            prop_assert!((a - b).norm() <= 1e-12 * (1.0 + a.norm()));
        }
    }
}
