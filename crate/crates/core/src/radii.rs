//! Koebe radii: closed forms for `P_N`, circle minima for arbitrary real
//! polynomials, and the `P_N` versus Suffridge comparison.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use twofloat::TwoFloat;

use crate::families::{cos_pi_over_dd, quotient_dd, suffridge_coeffs, FamilySpec};
use crate::poly::RealPolynomial;
use crate::{Error, Result};

pub const DEFAULT_GRID: usize = 4096;
pub const MIN_GRID: usize = 64;
/// Circle-minimum refinement stops once the bracket is narrower than this.
pub const ANGLE_TOLERANCE: f64 = 1e-12;
/// `argmin_t` within this distance of `pi` counts as a minimum at `z = -1`.
pub const AT_MINUS_ONE_TOLERANCE: f64 = 1e-6;
const CROSSING_GRID: usize = 4096;
const CLASSIFY_OFFSET: f64 = 1e-4;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadiusReport {
    pub family: Option<FamilySpec>,
    /// `min |p(e^{it})|` over `t` in `[0, pi]`.
    pub radius: f64,
    pub argmin_t: f64,
    pub at_minus_one: bool,
    /// `|p(-1)|`
    pub value_at_minus_one: f64,
    /// `1/4 sec^2(pi/(N+2))` when the family is `P_N`.
    pub formula_value: Option<f64>,
}

/// Koebe radius `sqrt(R_N(-1)) = 1/4 sec^2(pi/(N+2))` of `P_N`.
pub fn koebe_radius_formula(n: usize) -> f64 {
    let c = cos_pi_over_dd(n + 2);
    quotient_dd(TwoFloat::from(0.25), c * c)
}

/// `|S_{n,1}(-1)| = 1/4 (n+1)/n sec^2(pi/(2(n+1)))`, the Koebe radius of
/// `S_{n,1}` for even `n`.
pub fn suffridge_value_at_minus_one(n: usize) -> f64 {
    let c = cos_pi_over_dd(2 * (n + 1));
    quotient_dd(TwoFloat::from(0.25 * (n + 1) as f64), TwoFloat::from(n as f64) * c * c)
}

fn sq_modulus_at(p: &RealPolynomial, t: f64) -> f64 {
    p.eval_complex(Complex64::from_polar(1.0, t)).norm_sqr()
}

/// Golden-section search for a minimum of `f` on `[a, b]`.
fn golden_section(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while (b - a).abs() > tol {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        // the bracket stops shrinking once it is a couple of ulp wide
        if c >= d {
            break;
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

/// Minimum of `|p(e^{it})|` over the unit circle. By conjugate symmetry only
/// `t` in `[0, pi]` is scanned: a coarse grid of `grid` steps, then
/// golden-section refinement of the best bracket.
pub fn min_modulus_on_circle(p: &RealPolynomial, grid: usize) -> RadiusReport {
    let grid = grid.max(MIN_GRID);
    let step = PI / grid as f64;
    let samples: Vec<f64> = (0..=grid).map(|i| sq_modulus_at(p, i as f64 * step)).collect();
    let (best, _) = samples
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .expect("grid is non-empty");
    let lo = best.saturating_sub(1) as f64 * step;
    let hi = ((best + 1).min(grid)) as f64 * step;
    let (mut t, mut v) = golden_section(|t| sq_modulus_at(p, t), lo, hi, ANGLE_TOLERANCE);
    // golden-section never evaluates the bracket ends; the minimum may sit on one
    for end in [lo, hi] {
        let e = sq_modulus_at(p, end);
        if e < v {
            t = end;
            v = e;
        }
    }
    let at_minus_one_value = p.eval(-1.0).abs();
    RadiusReport {
        family: None,
        radius: v.sqrt(),
        argmin_t: t,
        at_minus_one: (PI - t).abs() < AT_MINUS_ONE_TOLERANCE,
        value_at_minus_one: at_minus_one_value,
        formula_value: None,
    }
}

/// Circle minimum of a family member, with the closed-form value attached
/// for `P_N`.
pub fn family_radius(spec: FamilySpec, grid: usize) -> Result<RadiusReport> {
    let p = spec.coeffs()?;
    let mut report = min_modulus_on_circle(&p, grid);
    report.family = Some(spec);
    if let FamilySpec::Dss { n } = spec {
        report.formula_value = Some(koebe_radius_formula(n));
    }
    Ok(report)
}

fn imag_on_circle(p: &RealPolynomial, t: f64) -> f64 {
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(k, &a)| a * (k as f64 * t).sin())
        .sum()
}

fn bisect_root(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let mut fa = f(a);
    while b - a > ANGLE_TOLERANCE {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if (fm < 0.0) == (fa < 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// A zero of `Im p(e^{it})` on `[0, pi]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Crossing {
    pub t: f64,
    /// `Re p(e^{it})`
    pub re: f64,
    /// The curve passes from one half-plane to the other; `false` for a
    /// tangential touch of the real axis.
    pub transversal: bool,
}

/// Zeros of `Im p(e^{it})` inside `(0, pi)`: sign changes on the grid,
/// refined by bisection, plus local minima of `|Im|` that refine to within
/// rounding noise of zero (even-order zeros never change sign).
fn imaginary_zeros(p: &RealPolynomial, grid: usize) -> Vec<f64> {
    let step = PI / grid as f64;
    let noise = 1e-10 * p.coeffs().iter().map(|c| c.abs()).sum::<f64>();
    let f = |t: f64| imag_on_circle(p, t);
    let ts: Vec<f64> = (1..grid).map(|i| i as f64 * step).collect();
    let vals: Vec<f64> = ts.iter().map(|&t| f(t)).collect();
    let mut zeros = Vec::new();
    for i in 0..vals.len() {
        if vals[i] == 0.0 {
            zeros.push(ts[i]);
            continue;
        }
        if i + 1 < vals.len() && vals[i + 1] != 0.0 && (vals[i] < 0.0) != (vals[i + 1] < 0.0) {
            zeros.push(bisect_root(f, ts[i], ts[i + 1]));
        }
        let left = if i == 0 { f(0.5 * step) } else { vals[i - 1] };
        let right = if i + 1 == vals.len() { f(PI - 0.5 * step) } else { vals[i + 1] };
        let same_sign = (left < 0.0) == (vals[i] < 0.0) && (right < 0.0) == (vals[i] < 0.0);
        if same_sign && vals[i].abs() <= left.abs() && vals[i].abs() <= right.abs() {
            let lo = ts[i] - step;
            let hi = ts[i] + step;
            let (t, v) = golden_section(|t| f(t).abs(), lo, hi, ANGLE_TOLERANCE);
            if v <= noise {
                zeros.push(t);
            }
        }
    }
    zeros.sort_by(f64::total_cmp);
    // a double zero is only located to about sqrt(eps)
    zeros.dedup_by(|a, b| (*a - *b).abs() < 1e-6);
    zeros
}

/// Points of `[0, pi]` where `p(e^{it})` is real. `t = 0` and `t = pi` are
/// always included (transversal for real coefficients, by symmetry). Each
/// interior zero is classified by the signs of `Im` at `t -+ 1e-4`.
pub fn real_axis_crossings(p: &RealPolynomial) -> Vec<Crossing> {
    let delta = CLASSIFY_OFFSET.min(0.25 * PI / CROSSING_GRID as f64);
    let mut out = vec![Crossing { t: 0.0, re: p.eval(1.0), transversal: true }];
    for t in imaginary_zeros(p, CROSSING_GRID) {
        let (a, b) = (imag_on_circle(p, t - delta), imag_on_circle(p, t + delta));
        out.push(Crossing {
            t,
            re: p.eval_complex(Complex64::from_polar(1.0, t)).re,
            transversal: a != 0.0 && b != 0.0 && (a < 0.0) != (b < 0.0),
        });
    }
    out.push(Crossing { t: PI, re: p.eval(-1.0), transversal: true });
    out
}

/// `min { Re p(e^{it}) : the curve crosses the real axis at t }`.
/// Tangential touches are excluded.
pub fn real_axis_min(p: &RealPolynomial) -> f64 {
    real_axis_crossings(p)
        .into_iter()
        .filter(|c| c.transversal)
        .map(|c| c.re)
        .fold(f64::INFINITY, f64::min)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Winner {
    Dss,
    Suffridge,
    Tie,
}

impl Winner {
    pub fn as_str(self) -> &'static str {
        match self {
            Winner::Dss => "dss",
            Winner::Suffridge => "suffridge",
            Winner::Tie => "tie",
        }
    }
}

/// Radii at or within this distance are reported as a tie.
pub const TIE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonRow {
    pub n: usize,
    pub dss_radius: f64,
    pub suffridge_at_minus_one: f64,
    pub suffridge_circle_min: f64,
    /// Family with the larger minimum modulus on the circle.
    pub dimitrov_winner: Winner,
    /// Degree beyond the range where univalence of `P_N` is established.
    pub exploratory: bool,
}

pub fn comparison_row(n: usize, grid: usize) -> Result<ComparisonRow> {
    let s = suffridge_coeffs(n, 1)?;
    let dss_radius = koebe_radius_formula(n);
    let suffridge_circle_min = min_modulus_on_circle(&s, grid).radius;
    let dimitrov_winner = if (suffridge_circle_min - dss_radius).abs() <= TIE_TOLERANCE {
        Winner::Tie
    } else if suffridge_circle_min > dss_radius {
        Winner::Suffridge
    } else {
        Winner::Dss
    };
    Ok(ComparisonRow {
        n,
        dss_radius,
        suffridge_at_minus_one: s.eval(-1.0).abs(),
        suffridge_circle_min,
        dimitrov_winner,
        exploratory: n > 6,
    })
}

/// One row per degree `2..=n_max`, ordered by degree.
pub fn comparison_table(n_max: usize, grid: usize) -> Result<Vec<ComparisonRow>> {
    if n_max < 2 {
        return Err(Error::Usage(format!("comparison needs N_max >= 2, got {n_max}")));
    }
    (2..=n_max).into_par_iter().map(|n| comparison_row(n, grid)).collect()
}
