//! Boundary behaviour of `P_N` on the unit circle.
//!
//! `R_N(x) = |P_N(e^{it})|^2` with `x = cos t` is a polynomial of degree
//! `N - 1`. It is built here from the coefficient autocorrelation; the
//! closed-form boundary expressions are kept as independent cross-checks.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::families::{dss_coeffs, dss_coeffs_iv};
use crate::interval::Scalar;
use crate::poly::{IntervalPolynomial, Polynomial, RealPolynomial};
use crate::{cheb, Error, Result};

/// Inside this distance from the removable singularity `t = 2 pi/(N+2)` the
/// closed forms delegate to Horner evaluation of `P_N`. Their rounding error
/// grows like `eps / |t - 2 pi/(N+2)|`, about 1e-10 at this radius.
pub const SINGULARITY_RADIUS: f64 = 1e-5;

/// Interpolation nodes closer than this to `b = cos(2 pi/(N+2))` are moved
/// away from it before sampling the rational expression for `4 R_N`.
pub const NODE_CLEARANCE: f64 = 0.05;

/// Largest tolerated residual of the interpolated `R_N` at check nodes.
pub const INTERPOLATION_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundaryPoint {
    pub t: f64,
    pub re: f64,
    pub im: f64,
    pub sq_modulus: f64,
}

impl BoundaryPoint {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// Shared pieces of both closed forms at angle `t`.
struct ClosedFormTerms {
    /// `cos t - b`
    gap: f64,
    /// `(1 - b) sin t sin((N+2)t/2) / ((N+2)(1 - cos t)(cos t - b)^2)`
    amplitude: f64,
    /// `(N+2) t / 2`, as `(cos, sin)`
    phase: (f64, f64),
}

/// Evaluates the closed-form ingredients in cancellation-free form: with
/// `t0 = 2 pi/(N+2)` and `b = cos t0`,
/// `cos t - b = -2 sin((t + t0)/2) sin((t - t0)/2)`, `1 - cos t = 2 sin^2(t/2)`
/// and the phase `(N+2)t/2 = pi + (N+2)(t - t0)/2`.
fn closed_form_terms(n: usize, t: f64) -> ClosedFormTerms {
    let m = (n + 2) as f64;
    let t0 = 2.0 * PI / m;
    let d = t - t0;
    let gap = -2.0 * (0.5 * (t + t0)).sin() * (0.5 * d).sin();
    let one_minus_cos = 2.0 * (0.5 * t).sin().powi(2);
    let one_minus_b = 2.0 * (0.5 * t0).sin().powi(2);
    let rel = 0.5 * m * d;
    let (sin_phase, cos_phase) = (-rel.sin(), -rel.cos());
    let amplitude = one_minus_b * t.sin() * sin_phase / (m * one_minus_cos * gap * gap);
    ClosedFormTerms { gap, amplitude, phase: (cos_phase, sin_phase) }
}

fn check_angle(t: f64) -> Result<()> {
    if t > 0.0 && t < PI {
        Ok(())
    } else {
        Err(Error::AngleOutOfRange(t))
    }
}

fn near_singularity(n: usize, t: f64) -> bool {
    (t - 2.0 * PI / (n + 2) as f64).abs() < SINGULARITY_RADIUS
}

fn horner_on_circle(n: usize, t: f64) -> Result<Complex64> {
    Ok(dss_coeffs(n)?.eval_complex(Complex64::from_polar(1.0, t)))
}

/// `P_N(e^{it})` from the closed form
/// `1/(2(cos t - b)) + (1-b)/((N+2)(1-cos t)) * sin t sin((N+2)t/2)/(cos t - b)^2 * e^{i(N+2)t/2}`,
/// `b = cos(2 pi/(N+2))`, valid for `t` in `(0, pi)`.
pub fn closed_form_value(n: usize, t: f64) -> Result<Complex64> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    check_angle(t)?;
    if near_singularity(n, t) {
        return horner_on_circle(n, t);
    }
    let ct = closed_form_terms(n, t);
    let (cos_p, sin_p) = ct.phase;
    Ok(Complex64::new(
        0.5 / ct.gap + ct.amplitude * cos_p,
        ct.amplitude * sin_p,
    ))
}

/// `|P_N(e^{it})|^2` from the two-square closed form
/// `4|P_N|^2 = (cos((N+2)t/2)/(cos t - b) + 2 amplitude)^2 + (sin((N+2)t/2)/(cos t - b))^2`.
pub fn closed_form_sq_modulus(n: usize, t: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    check_angle(t)?;
    if near_singularity(n, t) {
        return Ok(horner_on_circle(n, t)?.norm_sqr());
    }
    let ct = closed_form_terms(n, t);
    let (cos_p, sin_p) = ct.phase;
    let first = cos_p / ct.gap + 2.0 * ct.amplitude;
    let second = sin_p / ct.gap;
    Ok(0.25 * (first * first + second * second))
}

pub fn boundary_point(n: usize, t: f64) -> Result<BoundaryPoint> {
    let v = closed_form_value(n, t)?;
    Ok(BoundaryPoint { t, re: v.re, im: v.im, sq_modulus: closed_form_sq_modulus(n, t)? })
}

/// `|p(e^{it})|^2 = c_0 + sum_{d>=1} 2 c_d cos(dt)` with `c_d = sum_k a_k a_{k+d}`,
/// rewritten in `x = cos t` through `cos(dt) = T_d(x)`.
pub fn sq_modulus_poly<S: Scalar>(p: &Polynomial<S>) -> Polynomial<S> {
    let a = p.coeffs();
    if a.is_empty() {
        return Polynomial::zero();
    }
    let two = S::lift(2.0);
    let series: Vec<S> = (0..a.len())
        .map(|d| {
            let c = a.iter().zip(&a[d..]).fold(S::zero(), |acc, (&x, &y)| acc + x * y);
            if d == 0 {
                c
            } else {
                two * c
            }
        })
        .collect();
    Polynomial::from_chebyshev_t(&series)
}

/// `R_N(x)` in the power basis, degree `N - 1`.
pub fn r_poly(n: usize) -> Result<RealPolynomial> {
    Ok(sq_modulus_poly(&dss_coeffs(n)?))
}

/// Enclosure of `R_N` built from enclosures of the `P_N` coefficients.
pub fn r_poly_iv(n: usize) -> Result<IntervalPolynomial> {
    Ok(sq_modulus_poly(&dss_coeffs_iv(n)?))
}

/// `R_N'(x)`, degree `N - 2` (zero for `N = 1`).
pub fn r_prime_poly(n: usize) -> Result<RealPolynomial> {
    Ok(r_poly(n)?.derivative())
}

pub fn r_prime_poly_iv(n: usize) -> Result<IntervalPolynomial> {
    Ok(r_poly_iv(n)?.derivative())
}

/// The rational Chebyshev expression
/// `4 R_N(x) = 1/(x-b)^2 + 2(1-b)(1+x) U_{N+1}(x)/((N+2)(x-b)^3)
///            + 2(1-b)^2 (1+x)(1 - T_{N+2}(x))/((N+2)^2 (x-b)^4 (1-x))`,
/// singular (removably) at `x = b` and `x = 1`.
pub fn four_r_rational(n: usize, x: f64) -> f64 {
    let m = (n + 2) as f64;
    let b = (2.0 * PI / m).cos();
    let g = x - b;
    let one_minus_b = 1.0 - b;
    let u = cheb::cheb_u(n + 1, x);
    let t = cheb::cheb_t(n + 2, x);
    1.0 / (g * g)
        + 2.0 * one_minus_b * (1.0 + x) * u / (m * g * g * g)
        + 2.0 * one_minus_b * one_minus_b * (1.0 + x) * (1.0 - t) / (m * m * g.powi(4) * (1.0 - x))
}

/// Chebyshev nodes of the first kind, each pushed to distance
/// [`NODE_CLEARANCE`] from `avoid` when it falls closer.
fn sampling_nodes(count: usize, avoid: f64) -> Vec<f64> {
    let mut nodes: Vec<f64> = (0..count)
        .map(|m| ((2 * m + 1) as f64 * PI / (2 * count) as f64).cos())
        .collect();
    for x in nodes.iter_mut() {
        if (*x - avoid).abs() < NODE_CLEARANCE {
            let below = avoid - NODE_CLEARANCE;
            let above = avoid + NODE_CLEARANCE;
            *x = if *x >= avoid && above < 1.0 { above } else { below };
        }
    }
    nodes.sort_by(f64::total_cmp);
    nodes.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
    // Nudging can merge two nodes; refill from the midpoints of the widest gaps.
    while nodes.len() < count {
        let (i, _) = nodes
            .windows(2)
            .enumerate()
            .map(|(i, w)| (i, w[1] - w[0]))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .expect("at least two nodes");
        let mid = 0.5 * (nodes[i] + nodes[i + 1]);
        nodes.insert(i + 1, mid);
    }
    nodes
}

/// Newton divided-difference interpolation, returned in the power basis.
fn interpolate(xs: &[f64], ys: &[f64]) -> RealPolynomial {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    let mut p = RealPolynomial::constant(dd[n - 1]);
    for i in (0..n - 1).rev() {
        let factor = RealPolynomial::new(vec![-xs[i], 1.0]);
        p = p.mul(&factor).add(&RealPolynomial::constant(dd[i]));
    }
    p
}

/// `R_N` reconstructed by sampling [`four_r_rational`] at `N` nodes and
/// interpolating. Independent of [`r_poly`]; fails if the interpolant misses
/// the rational expression at a second set of nodes by more than
/// [`INTERPOLATION_TOLERANCE`].
pub fn r_poly_via_closed_form(n: usize) -> Result<RealPolynomial> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let b = (2.0 * PI / (n + 2) as f64).cos();
    let xs = sampling_nodes(n, b);
    let ys: Vec<f64> = xs.iter().map(|&x| 0.25 * four_r_rational(n, x)).collect();
    let p = interpolate(&xs, &ys);

    let residual = sampling_nodes(n + 1, b)
        .into_iter()
        .map(|x| (p.eval(x) - 0.25 * four_r_rational(n, x)).abs())
        .fold(0.0, f64::max);
    if residual > INTERPOLATION_TOLERANCE {
        return Err(Error::InterpolationResidual(residual));
    }
    Ok(p)
}

/// Re-expansion of `p` around `center`: `q(u) = p(center + u)`.
pub fn taylor_shift(p: &RealPolynomial, center: f64) -> RealPolynomial {
    p.taylor_shift(center)
}
