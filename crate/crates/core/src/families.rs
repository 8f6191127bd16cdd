//! Coefficient generators for the two extremal families.

use std::f64::consts::PI;
use std::fmt;

use serde::Serialize;
use twofloat::TwoFloat;

use crate::interval::{cos_pi_ratio, sin_pi_ratio, Interval};
use crate::poly::{IntervalPolynomial, Polynomial, RealPolynomial};
use crate::{Error, Result};

/// A member of one of the two families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilySpec {
    /// `P_N`, degree `n`.
    Dss { n: usize },
    /// Suffridge polynomial `S_{n,j}`.
    Suffridge { n: usize, j: usize },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Dss { n: 0 } => Err(Error::ZeroDegree),
            FamilySpec::Suffridge { n, j } if n == 0 || j == 0 || j > n => {
                Err(Error::SuffridgeIndex { n, j })
            }
            _ => Ok(()),
        }
    }

    pub fn degree(&self) -> usize {
        match *self {
            FamilySpec::Dss { n } | FamilySpec::Suffridge { n, .. } => n,
        }
    }

    pub fn coeffs(&self) -> Result<RealPolynomial> {
        match *self {
            FamilySpec::Dss { n } => dss_coeffs(n),
            FamilySpec::Suffridge { n, j } => suffridge_coeffs(n, j),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Dss { n } => write!(f, "P_{n}"),
            FamilySpec::Suffridge { n, j } => write!(f, "S_{{{n},{j}}}"),
        }
    }
}

/// `a_k = U'_{N-k+1}(c) U_{k-1}(c) / U'_N(c)` with `U_k`, `U_k'` tabulated by
/// the joint recurrence.
fn recurrence_coeffs(n: usize, c: f64) -> Vec<f64> {
    let mut u = vec![1.0, 2.0 * c];
    let mut d = vec![0.0, 2.0];
    for k in 1..n {
        u.push(2.0 * c * u[k] - u[k - 1]);
        d.push(2.0 * u[k] + 2.0 * c * d[k] - d[k - 1]);
    }
    let mut coeffs = vec![0.0; n + 1];
    coeffs[1] = 1.0;
    for k in 2..=n {
        coeffs[k] = d[n - k + 1] * u[k - 1] / d[n];
    }
    coeffs
}

/// `U_k(x)` and `U_k'(x)` in double-double arithmetic, all orders `0..=k`.
fn u_table_dd(k: usize, x: TwoFloat) -> (Vec<TwoFloat>, Vec<TwoFloat>) {
    let two = TwoFloat::from(2.0);
    let mut u = vec![TwoFloat::from(1.0), two * x];
    let mut d = vec![TwoFloat::from(0.0), two];
    for i in 1..k {
        u.push(two * x * u[i] - u[i - 1]);
        d.push(two * u[i] + two * x * d[i] - d[i - 1]);
    }
    u.truncate(k + 1);
    d.truncate(k + 1);
    (u, d)
}

/// `num / den` with one residual correction; the crate's own quotient is
/// only accurate to about binary64 precision.
fn div_dd(num: TwoFloat, den: TwoFloat) -> TwoFloat {
    let q = TwoFloat::from(num.hi() / den.hi());
    let r = num - q * den;
    q + TwoFloat::from(r.hi() / den.hi())
}

/// `num / den` rounded to the nearest binary64.
pub(crate) fn quotient_dd(num: TwoFloat, den: TwoFloat) -> f64 {
    div_dd(num, den).hi()
}

/// `cos(pi/m)` to double-double accuracy.
pub(crate) fn cos_pi_over_dd(m: usize) -> TwoFloat {
    cos_pi_ratio_dd(1, m)
}

/// `cos(j pi/m)`, `0 < j < m`, to double-double accuracy: Newton steps on
/// `U_{m-1}`, which has it as a simple root, starting from the binary64
/// cosine.
pub(crate) fn cos_pi_ratio_dd(j: usize, m: usize) -> TwoFloat {
    let mut c = TwoFloat::from((PI * j as f64 / m as f64).cos());
    for _ in 0..2 {
        let (u, d) = u_table_dd(m - 1, c);
        c -= div_dd(u[m - 1], d[m - 1]);
    }
    c
}

/// Coefficients of `P_N`:
/// `a_k = U'_{N-k+1}(c) U_{k-1}(c) / U'_N(c)`, `c = cos(pi/(N+2))`,
/// with `a_0 = 0` and `a_1 = 1` exactly.
///
/// Evaluated in double-double arithmetic and rounded once, so every
/// coefficient is the binary64 number nearest to the exact value (e.g.
/// `7/6` for `N = 4`).
pub fn dss_coeffs(n: usize) -> Result<RealPolynomial> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let c = cos_pi_over_dd(n + 2);
    let (u, d) = u_table_dd(n, c);
    let mut coeffs = vec![0.0; n + 1];
    coeffs[1] = 1.0;
    for k in 2..=n {
        coeffs[k] = div_dd(d[n - k + 1] * u[k - 1], d[n]).hi();
    }
    Ok(Polynomial::new(coeffs))
}

/// Binary64 variant of [`dss_coeffs`]: the same recurrence in plain
/// floating point, accurate to a few ulp.
pub fn dss_coeffs_f64(n: usize) -> Result<RealPolynomial> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let c = (PI / (n + 2) as f64).cos();
    Ok(Polynomial::new(recurrence_coeffs(n, c)))
}

/// Rigorous enclosures of the `P_N` coefficients.
///
/// With `theta = pi/(N+2)` and `c = cos(theta)`, `U_k(c) = sin((k+1)theta) / sin(theta)`
/// and `U_k'(c) = ((k+1) T_{k+1}(c) - c U_k(c)) / (c^2 - 1)` where
/// `T_{k+1}(c) = cos((k+1)theta)`. Every sine and cosine enters as a tight
/// enclosure, which keeps the widths at a few ulp even for large `N` (the
/// interval recurrence would grow them geometrically).
pub fn dss_coeffs_iv(n: usize) -> Result<IntervalPolynomial> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let den = n as u64 + 2;
    let c = cos_pi_ratio(1, den);
    let s = sin_pi_ratio(1, den);
    let u = |k: usize| sin_pi_ratio(k as u64 + 1, den) / s;
    let du = |k: usize| {
        let t_next = cos_pi_ratio(k as u64 + 1, den);
        ((k as f64 + 1.0) * t_next - c * u(k)) / (-s.sqr())
    };
    let norm = du(n);
    let mut coeffs = vec![Interval::ZERO; n + 1];
    coeffs[1] = Interval::ONE;
    for (k, c) in coeffs.iter_mut().enumerate().skip(2) {
        *c = du(n - k + 1) * u(k - 1) / norm;
    }
    Ok(Polynomial::new(coeffs))
}

/// Term `k` of the trigonometric coefficient formula, before normalization:
/// `[(N-k+3) sin((k+1)pi/(N+2)) - (N-k+1) sin((k-1)pi/(N+2))] sin(k pi/(N+2))
///  / ((N+2) sin(2 pi/(N+2)))`.
///
/// Defined for `1 <= k <= N+1`; the `k = N+1` term vanishes.
pub fn dss_trig_term(n: usize, k: usize) -> f64 {
    let m = (n + 2) as f64;
    let (nf, kf) = (n as f64, k as f64);
    let s = |j: f64| (j * PI / m).sin();
    let bracket = (nf - kf + 3.0) * s(kf + 1.0) - (nf - kf + 1.0) * s(kf - 1.0);
    bracket * s(kf) / (m * s(2.0))
}

/// Coefficients of `P_N` from the trigonometric formula. Each raw term
/// equals `sin(pi/(N+2))` times the coefficient, so it is divided out to give
/// `a_1 = 1`.
pub fn dss_coeffs_trig(n: usize) -> Result<RealPolynomial> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let s1 = (PI / (n + 2) as f64).sin();
    let mut coeffs = vec![0.0; n + 1];
    for (k, a) in coeffs.iter_mut().enumerate().skip(1) {
        *a = dss_trig_term(n, k) / s1;
    }
    Ok(Polynomial::new(coeffs))
}

/// Suffridge polynomial
/// `S_{n,j}(z) = sum_{k=1}^n (1 - (k-1)/n) sin(pi j k/(n+1)) / sin(pi j/(n+1)) z^k`.
///
/// The sine quotient is `U_{k-1}(cos(pi j/(n+1)))`, evaluated in
/// double-double and rounded once.
pub fn suffridge_coeffs(n: usize, j: usize) -> Result<RealPolynomial> {
    FamilySpec::Suffridge { n, j }.validate()?;
    let c = cos_pi_ratio_dd(j, n + 1);
    let (u, _) = u_table_dd(n, c);
    let mut coeffs = vec![0.0; n + 1];
    coeffs[1] = 1.0;
    for k in 2..=n {
        let weight = TwoFloat::from((n + 1 - k) as f64);
        coeffs[k] = quotient_dd(weight * u[k - 1], TwoFloat::from(n as f64));
    }
    Ok(Polynomial::new(coeffs))
}

/// Binary64 sine-quotient form of [`suffridge_coeffs`].
pub fn suffridge_coeffs_f64(n: usize, j: usize) -> Result<RealPolynomial> {
    FamilySpec::Suffridge { n, j }.validate()?;
    let m = (n + 1) as f64;
    let base = (PI * j as f64 / m).sin();
    let mut coeffs = vec![0.0; n + 1];
    coeffs[1] = 1.0;
    for (k, c) in coeffs.iter_mut().enumerate().skip(2) {
        let weight = 1.0 - (k as f64 - 1.0) / n as f64;
        *c = weight * (PI * (j * k) as f64 / m).sin() / base;
    }
    Ok(Polynomial::new(coeffs))
}
