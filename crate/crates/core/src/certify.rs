//! Positivity certificates for `R_N'` on `(-1, 1)`.
//!
//! If `R_N'(x) > 0` on `(-1, 1)` then `P_N` is univalent in the unit disc and
//! its Koebe radius is `sqrt(R_N(-1))`. Four independent routes establish
//! that hypothesis:
//!
//! * Sturm-sequence root counting (floating point, with a noise band that
//!   turns into `Inconclusive` instead of a wrong count),
//! * adaptive bisection with interval enclosures (rigorous),
//! * for cubics, the shifted form `A_0 + u(A_1 + A_2 u + A_3 u^2)`, `u = x + 1`,
//!   with `A_0 >= 0`, `A_1, A_3 > 0` and `A_2^2 - 4 A_1 A_3 < 0`,
//! * for quartics, the square completion
//!   `B_0 + B_1 u + ... = (sqrt(B_0) + B_1/(2 sqrt(B_0)) u)^2 + u^2 q(u)` with
//!   `q > 0` on `[0, 2]`.
//!
//! The last two run in interval arithmetic on coefficient enclosures.

use serde::Serialize;

use crate::boundary::{r_prime_poly, r_prime_poly_iv};
use crate::interval::Interval;
use crate::poly::{IntervalPolynomial, RealPolynomial};
use crate::radii::koebe_radius_formula;
use crate::{Error, Result};

/// Remainder coefficients below this fraction of the chain scale are dropped.
pub const STURM_PRUNE: f64 = 1e-12;
/// A remainder whose largest coefficient lies between [`STURM_PRUNE`] and this
/// value cannot be told apart from a vanishing one.
pub const STURM_NOISE_BAND: f64 = 1e-9;
/// Open endpoints are replaced by `a + eps`, `b - eps`.
pub const OPEN_ENDPOINT_EPS: f64 = 1e-9;
pub const DEFAULT_MAX_DEPTH: u32 = 40;
const ENDPOINT_NUDGE: f64 = 1e-12;
const MARGIN_GRID: usize = 1001;
const MAX_LEAVES: usize = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Certified,
    Refuted,
    Degenerate,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Certified => "certified",
            Verdict::Refuted => "refuted",
            Verdict::Degenerate => "degenerate",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Sturm,
    IntervalBisection,
    DiscriminantShift,
    SquareCompletion,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Sturm => "sturm",
            Method::IntervalBisection => "interval_bisection",
            Method::DiscriminantShift => "discriminant_shift",
            Method::SquareCompletion => "square_completion",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Detail {
    Sturm {
        root_count: Option<usize>,
        chain_length: usize,
    },
    Bisection {
        leaves: usize,
        deepest: u32,
        lower_endpoint: Interval,
        upper_endpoint: Interval,
        /// Point where `p <= 0` was established.
        witness: Option<f64>,
    },
    Shift {
        /// `A_0..A_3`
        coefficients: Vec<Interval>,
        discriminant: Interval,
    },
    SquareCompletion {
        /// `B_0..B_4`
        shifted: Vec<Interval>,
        /// all `B_i >= 0`, no decomposition needed
        trivial: bool,
        /// `(sqrt(B_0), B_1/(2 sqrt(B_0)))`
        square: Option<[Interval; 2]>,
        /// `q(u) = Q_0 + Q_1 u + Q_2 u^2`
        remainder: Option<[Interval; 3]>,
    },
    None,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CertificationReport {
    pub verdict: Verdict,
    pub method: Method,
    /// Lower bound of the polynomial on the interval when the method gives
    /// one; for Sturm it is the minimum over a 1001-point sample and only
    /// informational.
    pub margin: Option<f64>,
    pub detail: Detail,
    pub note: Option<String>,
}

impl CertificationReport {
    fn new(verdict: Verdict, method: Method, detail: Detail) -> Self {
        CertificationReport { verdict, method, margin: None, detail, note: None }
    }

    fn with_margin(mut self, margin: f64) -> Self {
        self.margin = Some(margin);
        self
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

// ---------------------------------------------------------------------------
// Sturm sequences

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SturmError {
    #[error("the zero polynomial has no Sturm sequence")]
    ZeroPolynomial,
    #[error("ambiguous remainder: {0}")]
    Ambiguous(String),
}

fn normalized(p: &RealPolynomial) -> RealPolynomial {
    let m = p.max_abs_coeff();
    if m == 0.0 {
        p.clone()
    } else {
        p.scale(1.0 / m)
    }
}

/// Remainder of `num` divided by `den` (`den` nonzero).
fn poly_rem(num: &RealPolynomial, den: &RealPolynomial) -> Vec<f64> {
    let mut r = num.coeffs().to_vec();
    let dd = den.degree() as usize;
    let lead = den.leading().expect("nonzero divisor");
    while r.len() > dd && !r.is_empty() {
        let shift = r.len() - 1 - dd;
        let q = r[r.len() - 1] / lead;
        for (i, &c) in den.coeffs().iter().enumerate() {
            r[shift + i] -= q * c;
        }
        r.pop();
    }
    r
}

/// Signed remainder chain `p, p', -rem(p, p'), ...`, each element scaled to
/// unit max-norm.
pub fn sturm_chain(p: &RealPolynomial) -> std::result::Result<Vec<RealPolynomial>, SturmError> {
    if p.is_zero() {
        return Err(SturmError::ZeroPolynomial);
    }
    let mut chain = vec![normalized(p)];
    let d = normalized(&p.derivative());
    if d.is_zero() {
        return Ok(chain);
    }
    chain.push(d);
    loop {
        let n = chain.len();
        let mut r = poly_rem(&chain[n - 2], &chain[n - 1]);
        for c in r.iter_mut() {
            if c.abs() <= STURM_PRUNE {
                *c = 0.0;
            }
        }
        let r = RealPolynomial::new(r);
        let size = r.max_abs_coeff();
        if r.is_zero() {
            break;
        }
        if size <= STURM_NOISE_BAND {
            return Err(SturmError::Ambiguous(format!(
                "remainder {} has max coefficient {size:e}",
                n
            )));
        }
        chain.push(r.scale(-1.0 / size));
        if r.degree() == 0 {
            break;
        }
    }
    Ok(chain)
}

/// Sign of `p(x)`, with values inside the rounding noise of Horner's scheme
/// reported as zero.
fn noisy_sign(p: &RealPolynomial, x: f64) -> i8 {
    let v = p.eval(x);
    let bound: f64 = p.coeffs().iter().rev().fold(0.0, |acc, c| acc * x.abs() + c.abs());
    if v.abs() <= 1e-14 * bound {
        0
    } else if v > 0.0 {
        1
    } else {
        -1
    }
}

fn sign_variations(chain: &[RealPolynomial], x: f64) -> usize {
    let signs: Vec<i8> = chain.iter().map(|q| noisy_sign(q, x)).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of `p` in `(a, b]`. Endpoints where `p`
/// vanishes are moved inward by `1e-12`.
pub fn sturm_count(p: &RealPolynomial, a: f64, b: f64) -> std::result::Result<usize, SturmError> {
    assert!(a < b, "empty interval ({a}, {b}]");
    let chain = sturm_chain(p)?;
    let (mut a, mut b) = (a, b);
    if noisy_sign(&chain[0], a) == 0 {
        a += ENDPOINT_NUDGE;
    }
    if noisy_sign(&chain[0], b) == 0 {
        b -= ENDPOINT_NUDGE;
    }
    let (va, vb) = (sign_variations(&chain, a), sign_variations(&chain, b));
    Ok(va.saturating_sub(vb))
}

/// Absolute rounding noise of `p` on `[-1, 1]` scale: `2 (deg + 1) eps sum |c_i|`.
fn coefficient_noise(p: &RealPolynomial) -> f64 {
    let l1: f64 = p.coeffs().iter().map(|c| c.abs()).sum();
    2.0 * p.coeffs().len() as f64 * f64::EPSILON * l1
}

/// Certified iff `p` has no root in `(a, b]` and is positive at the midpoint.
///
/// The chain runs in floating point, so its answer is only accepted when it
/// is robust against coefficient noise: either the noise is negligible
/// against the size of `p` on the interval, or the sampled values clear it
/// (positive beyond the noise for a certificate, negative beyond it for a
/// refutation). Otherwise the verdict is `Inconclusive`.
pub fn certify_positive_sturm(p: &RealPolynomial, a: f64, b: f64) -> CertificationReport {
    assert!(a < b, "empty interval ({a}, {b})");
    let detail = |root_count, chain_length| Detail::Sturm { root_count, chain_length };
    if p.is_zero() {
        return CertificationReport::new(Verdict::Degenerate, Method::Sturm, detail(None, 0))
            .with_note("identically zero");
    }
    let chain_length = sturm_chain(p).map(|c| c.len()).unwrap_or(0);
    let mid = p.eval(0.5 * (a + b));
    let samples: Vec<f64> = (0..MARGIN_GRID)
        .map(|i| p.eval(a + (b - a) * i as f64 / (MARGIN_GRID - 1) as f64))
        .collect();
    let lowest = samples.iter().copied().fold(f64::INFINITY, f64::min);
    let largest = samples.iter().map(|v| v.abs()).fold(0.0, f64::max);
    let noise = coefficient_noise(p);
    let well_conditioned = noise <= STURM_PRUNE * largest;
    let report = |v, count| {
        CertificationReport::new(v, Method::Sturm, detail(count, chain_length)).with_margin(lowest)
    };
    match sturm_count(p, a, b) {
        Ok(0) if mid > 0.0 => {
            if well_conditioned || lowest > noise {
                report(Verdict::Certified, Some(0))
            } else {
                report(Verdict::Inconclusive, Some(0))
                    .with_note(format!("sampled minimum {lowest:e} within coefficient noise {noise:e}"))
            }
        }
        Ok(count) => {
            if well_conditioned || lowest < -noise {
                report(Verdict::Refuted, Some(count)).with_note(if count > 0 {
                    format!("{count} root(s) in the interval")
                } else {
                    "negative throughout the interval".to_string()
                })
            } else {
                report(Verdict::Inconclusive, Some(count)).with_note(format!(
                    "{count} root(s) counted, but no sample below the coefficient noise {noise:e}"
                ))
            }
        }
        Err(e) => report(Verdict::Inconclusive, None).with_note(e.to_string()),
    }
}

// ---------------------------------------------------------------------------
// Interval bisection

/// Enclosure of `p` over `[lo, hi]`: the intersection of plain interval
/// Horner and the mean-value form around the midpoint.
pub fn enclose(p: &IntervalPolynomial, lo: f64, hi: f64) -> Interval {
    let x = Interval::new(lo, hi);
    let naive = p.eval(x);
    let mid = 0.5 * lo + 0.5 * hi;
    let radius = Interval::new(lo - mid, hi - mid).abs().hi.next_up();
    let centered = p.taylor_shift(Interval::point(mid));
    let mut acc = Interval::ZERO;
    // |sum_{k>=1} q_k u^k| <= sum |q_k| r^k
    for q in centered.coeffs().iter().skip(1).rev() {
        acc = (acc + Interval::point(q.abs().hi)) * Interval::point(radius);
    }
    let spread = acc.hi;
    let c0 = centered.coeff(0);
    let mv = Interval::new((c0 - Interval::point(spread)).lo, (c0 + Interval::point(spread)).hi);
    Interval::new(naive.lo.max(mv.lo), naive.hi.min(mv.hi).max(naive.lo.max(mv.lo)))
}

/// Adaptive bisection of `[a + eps, b - eps]`: certified when every leaf
/// enclosure is strictly positive, with the smallest leaf lower bound as the
/// margin; refuted when `p <= 0` is proven at a
/// dyadic point; inconclusive when `max_depth` runs out first.
pub fn certify_positive_bisection_iv(
    p: &IntervalPolynomial,
    a: f64,
    b: f64,
    max_depth: u32,
) -> CertificationReport {
    assert!(a < b, "empty interval ({a}, {b})");
    let lower_endpoint = p.eval(Interval::point(a));
    let upper_endpoint = p.eval(Interval::point(b));
    let detail = |leaves, deepest, witness| Detail::Bisection {
        leaves,
        deepest,
        lower_endpoint,
        upper_endpoint,
        witness,
    };
    if p.is_zero() {
        return CertificationReport::new(
            Verdict::Degenerate,
            Method::IntervalBisection,
            detail(0, 0, None),
        )
        .with_note("identically zero");
    }
    let lo = a + OPEN_ENDPOINT_EPS;
    let hi = b - OPEN_ENDPOINT_EPS;
    let mut stack = vec![(lo, hi, 0u32)];
    let mut leaves = 0usize;
    let mut deepest = 0u32;
    let mut margin = f64::INFINITY;
    while let Some((l, h, depth)) = stack.pop() {
        deepest = deepest.max(depth);
        let e = enclose(p, l, h);
        if e.is_positive() {
            leaves += 1;
            margin = margin.min(e.lo);
            continue;
        }
        let m = 0.5 * l + 0.5 * h;
        let at_mid = p.eval(Interval::point(m));
        if at_mid.hi <= 0.0 {
            return CertificationReport::new(
                Verdict::Refuted,
                Method::IntervalBisection,
                detail(leaves, deepest, Some(m)),
            )
            .with_note(format!("p({m}) <= 0"));
        }
        if depth >= max_depth || leaves + stack.len() >= MAX_LEAVES {
            return CertificationReport::new(
                Verdict::Inconclusive,
                Method::IntervalBisection,
                detail(leaves, deepest, None),
            )
            .with_note(format!("no positive enclosure on [{l}, {h}] at depth {depth}"));
        }
        stack.push((m, h, depth + 1));
        stack.push((l, m, depth + 1));
    }
    CertificationReport::new(
        Verdict::Certified,
        Method::IntervalBisection,
        detail(leaves, deepest, None),
    )
    .with_margin(margin)
}

pub fn certify_positive_bisection(
    p: &RealPolynomial,
    a: f64,
    b: f64,
    max_depth: u32,
) -> CertificationReport {
    certify_positive_bisection_iv(&p.to_interval(), a, b, max_depth)
}

// ---------------------------------------------------------------------------
// Hand certificates on (x + 1)-shifted coefficients

fn shift_to_minus_one(p: &IntervalPolynomial, expected: usize) -> Result<Vec<Interval>> {
    if p.degree() != expected as isize {
        return Err(Error::WrongDegree { expected, actual: p.degree() });
    }
    let q = p.taylor_shift(Interval::point(-1.0));
    Ok((0..=expected).map(|d| q.coeff(d)).collect())
}

/// Cubic certificate: with `u = x + 1`,
/// `p = A_0 + u (A_1 + A_2 u + A_3 u^2)`. If `A_0 >= 0`, `A_1 > 0`,
/// `A_3 > 0` and `A_2^2 - 4 A_1 A_3 < 0`, the quadratic factor is positive
/// for every `u`, hence `p > 0` on `(-1, 1]`.
pub fn certify_shift_discriminant_iv(p: &IntervalPolynomial) -> Result<CertificationReport> {
    let a = shift_to_minus_one(p, 3)?;
    let disc = a[2].sqr() - Interval::point(4.0) * a[1] * a[3];
    let detail = Detail::Shift { coefficients: a.clone(), discriminant: disc };
    let report = |v| CertificationReport::new(v, Method::DiscriminantShift, detail.clone());

    if a[0].is_negative() {
        return Ok(report(Verdict::Refuted).with_note("p(-1) < 0"));
    }
    let failed: Vec<&str> = [
        (a[0].hi < 0.0, "A_0 < 0"),
        (a[1].hi <= 0.0, "A_1 <= 0"),
        (a[3].hi <= 0.0, "A_3 <= 0"),
        (disc.lo >= 0.0, "A_2^2 - 4 A_1 A_3 >= 0"),
    ]
    .into_iter()
    .filter_map(|(bad, label)| bad.then_some(label))
    .collect();
    if !failed.is_empty() {
        return Ok(report(Verdict::Inconclusive)
            .with_note(format!("certificate hypotheses fail: {}", failed.join(", "))));
    }
    if a[0].is_nonnegative() && a[1].is_positive() && a[3].is_positive() && disc.is_negative() {
        return Ok(report(Verdict::Certified).with_margin(a[0].lo));
    }
    Ok(report(Verdict::Inconclusive).with_note("an enclosure straddles zero"))
}

pub fn certify_shift_discriminant(p: &RealPolynomial) -> Result<CertificationReport> {
    certify_shift_discriminant_iv(&p.to_interval())
}

/// `q > 0` on `[0, 2]` for `q(u) = q0 + q1 u + q2 u^2`. `Some(false)` when
/// the test fails outright, `None` when an enclosure straddles zero.
fn quadratic_positive_on_0_2(q0: Interval, q1: Interval, q2: Interval) -> Option<bool> {
    let at_two = q0 + Interval::point(2.0) * q1 + Interval::point(4.0) * q2;
    for end in [q0, at_two] {
        if end.hi <= 0.0 {
            return Some(false);
        }
        if !end.is_positive() {
            return None;
        }
    }
    if q2.hi <= 0.0 {
        // concave or linear: minimum at an endpoint
        return Some(true);
    }
    if !q2.is_positive() {
        return None;
    }
    let vertex = -q1 / (Interval::point(2.0) * q2);
    if vertex.hi <= 0.0 || vertex.lo >= 2.0 {
        return Some(true);
    }
    let disc = q1.sqr() - Interval::point(4.0) * q0 * q2;
    if disc.is_negative() {
        Some(true)
    } else if disc.lo >= 0.0 && vertex.lo > 0.0 && vertex.hi < 2.0 {
        Some(false)
    } else {
        None
    }
}

/// Quartic certificate: with `u = x + 1` and shifted coefficients
/// `B_0..B_4`, `B_0 > 0`,
/// `p = (sqrt(B_0) + B_1/(2 sqrt(B_0)) u)^2 + u^2 q(u)`,
/// `q(u) = (B_2 - B_1^2/(4 B_0)) + B_3 u + B_4 u^2`. Positivity of `q` on
/// `[0, 2]` gives `p > 0` on `(-1, 1]`; if every `B_i >= 0` nothing needs
/// decomposing.
pub fn certify_square_completion_iv(p: &IntervalPolynomial) -> Result<CertificationReport> {
    let b = shift_to_minus_one(p, 4)?;
    let mut detail = Detail::SquareCompletion {
        shifted: b.clone(),
        trivial: false,
        square: None,
        remainder: None,
    };
    let make = |v, d: &Detail| CertificationReport::new(v, Method::SquareCompletion, d.clone());

    if b[0].is_negative() {
        return Ok(make(Verdict::Refuted, &detail).with_note("p(-1) < 0"));
    }
    if !b[0].is_positive() {
        return Ok(make(Verdict::Inconclusive, &detail).with_note("B_0 is not certified positive"));
    }
    if b.iter().all(|c| c.is_nonnegative()) {
        if let Detail::SquareCompletion { trivial, .. } = &mut detail {
            *trivial = true;
        }
        return Ok(make(Verdict::Certified, &detail).with_margin(b[0].lo));
    }
    let root = b[0].sqrt();
    let lin = b[1] / (Interval::point(2.0) * root);
    let q0 = b[2] - b[1].sqr() / (Interval::point(4.0) * b[0]);
    let (q1, q2) = (b[3], b[4]);
    detail = Detail::SquareCompletion {
        shifted: b.clone(),
        trivial: false,
        square: Some([root, lin]),
        remainder: Some([q0, q1, q2]),
    };
    Ok(match quadratic_positive_on_0_2(q0, q1, q2) {
        Some(true) => make(Verdict::Certified, &detail),
        Some(false) => make(Verdict::Inconclusive, &detail)
            .with_note("remainder quadratic is not positive on [0, 2]"),
        None => make(Verdict::Inconclusive, &detail).with_note("an enclosure straddles zero"),
    })
}

pub fn certify_square_completion(p: &RealPolynomial) -> Result<CertificationReport> {
    certify_square_completion_iv(&p.to_interval())
}

// ---------------------------------------------------------------------------
// Univalence of P_N

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UnivalenceReport {
    pub n: usize,
    pub verdict: Verdict,
    /// `N > 6`: outside the range where univalence is established; the
    /// verdict is computational evidence only.
    pub exploratory: bool,
    /// `sqrt(R_N(-1))`, the Koebe radius when the verdict is certified.
    pub koebe_radius: f64,
    pub note: Option<String>,
    pub methods: Vec<CertificationReport>,
}

/// Combined verdict: certified only when every method certifies; any
/// certified/refuted disagreement is inconclusive.
pub fn combine(reports: &[CertificationReport]) -> Verdict {
    let has = |v| reports.iter().any(|r| r.verdict == v);
    if reports.is_empty() {
        Verdict::Inconclusive
    } else if reports.iter().all(|r| r.verdict == Verdict::Degenerate) {
        Verdict::Degenerate
    } else if reports.iter().all(|r| r.verdict == Verdict::Certified) {
        Verdict::Certified
    } else if has(Verdict::Refuted) && !has(Verdict::Certified) {
        Verdict::Refuted
    } else {
        Verdict::Inconclusive
    }
}

/// Runs every applicable certificate on `R_N'` over `(-1, 1)`: Sturm and
/// interval bisection always, the cubic shift certificate for `N = 5` and the
/// square completion for `N = 6` (both on `4 R_N'`).
pub fn certify_univalence(n: usize, max_depth: u32) -> Result<UnivalenceReport> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let plain = r_prime_poly(n)?;
    let enclosed = r_prime_poly_iv(n)?;
    let mut methods = vec![
        certify_positive_sturm(&plain, -1.0, 1.0),
        certify_positive_bisection_iv(&enclosed, -1.0, 1.0, max_depth),
    ];
    let four = Interval::point(4.0);
    match n {
        5 => methods.push(certify_shift_discriminant_iv(&enclosed.scale(four))?),
        6 => methods.push(certify_square_completion_iv(&enclosed.scale(four))?),
        _ => {}
    }
    let verdict = combine(&methods);
    let note = match (n, verdict) {
        (1, _) => Some("R_1 is constant, so R_1' vanishes identically; P_1(z) = z is trivially univalent".into()),
        (_, Verdict::Inconclusive) if methods.iter().any(|m| m.verdict == Verdict::Certified)
            && methods.iter().any(|m| m.verdict == Verdict::Refuted) =>
        {
            Some("methods disagree".into())
        }
        (7.., _) => Some("exploratory: beyond the established range N <= 6".into()),
        _ => None,
    };
    Ok(UnivalenceReport {
        n,
        verdict,
        exploratory: n > 6,
        koebe_radius: koebe_radius_formula(n),
        note,
        methods,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::taylor_shift;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn poly(c: &[f64]) -> RealPolynomial {
        RealPolynomial::new(c.to_vec())
    }

    fn from_roots(roots: &[f64], lead: f64) -> RealPolynomial {
        roots.iter().fold(RealPolynomial::constant(lead), |acc, &r| acc.mul(&poly(&[-r, 1.0])))
    }

    #[test]
    fn sturm_counts_simple_roots() {
        assert_eq!(sturm_count(&poly(&[-0.25, 0.0, 1.0]), -1.0, 1.0), Ok(2));
        assert_eq!(sturm_count(&poly(&[1.0, 0.0, 1.0]), -5.0, 5.0), Ok(0));
        assert_eq!(sturm_count(&poly(&[-0.25, 0.0, 1.0]), 0.0, 1.0), Ok(1));
        // double root counted once
        assert_eq!(sturm_count(&from_roots(&[0.3, 0.3, -0.5], 1.0), -1.0, 1.0), Ok(2));
        assert_eq!(sturm_count(&RealPolynomial::zero(), -1.0, 1.0), Err(SturmError::ZeroPolynomial));
    }

    #[test]
    fn sturm_nudges_vanishing_endpoints() {
        // x^2 - 1 vanishes at both endpoints of [-1, 1]
        assert_eq!(sturm_count(&poly(&[-1.0, 0.0, 1.0]), -1.0, 1.0), Ok(0));
    }

    #[test]
    fn r_prime_four_and_five_have_no_roots_inside() {
        let p4 = r_prime_poly(4).unwrap().scale(4.0);
        assert_eq!(sturm_count(&p4, -1.0, 1.0), Ok(0));
        let p5 = r_prime_poly(5).unwrap().scale(4.0);
        assert_eq!(sturm_count(&p5, -1.0, 1.0), Ok(0));
        // the single real root sits just left of -1
        assert_eq!(sturm_count(&p5, -1.1, 1.0), Ok(1));
    }

    #[test]
    fn sturm_matches_constructed_roots() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for case in 0..500 {
            let quartic = case % 2 == 1;
            let real_roots = if quartic { rng.gen_range(0..=4) } else { [1, 3][rng.gen_range(0..2)] };
            let mut roots: Vec<f64> = Vec::new();
            while roots.len() < real_roots {
                let r: f64 = rng.gen_range(-2.0..2.0);
                if (r.abs() - 1.0).abs() > 1e-2 && roots.iter().all(|q| (q - r).abs() > 2e-2) {
                    roots.push(r);
                }
            }
            let lead = rng.gen_range(0.5..3.0) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
            let mut p = from_roots(&roots, lead);
            let degree = if quartic { 4 } else { 3 };
            let mut missing = degree - real_roots;
            while missing >= 2 {
                let re: f64 = rng.gen_range(-1.5..1.5);
                let im: f64 = rng.gen_range(0.05..1.0);
                p = p.mul(&poly(&[re * re + im * im, -2.0 * re, 1.0]));
                missing -= 2;
            }
            let expected = roots.iter().filter(|r| r.abs() < 1.0).count();
            assert_eq!(sturm_count(&p, -1.0, 1.0), Ok(expected), "case {case}: roots {roots:?}");
        }
    }

    #[test]
    fn sturm_certificate_examples() {
        let r = certify_positive_sturm(&RealPolynomial::constant(1.0), -1.0, 1.0);
        assert_eq!(r.verdict, Verdict::Certified);
        assert_eq!(r.margin, Some(1.0));
        let r = certify_positive_sturm(&r_prime_poly(3).unwrap(), -1.0, 1.0);
        assert_eq!(r.verdict, Verdict::Certified);
        let r = certify_positive_sturm(&r_prime_poly(1).unwrap(), -1.0, 1.0);
        assert_eq!(r.verdict, Verdict::Degenerate);
        let r = certify_positive_sturm(&poly(&[-0.25, 0.0, 1.0]), -1.0, 1.0);
        assert_eq!(r.verdict, Verdict::Refuted);
        let r = certify_positive_sturm(&poly(&[-1.0]), -1.0, 1.0);
        assert_eq!(r.verdict, Verdict::Refuted);
    }

    #[test]
    fn bisection_examples() {
        let r = certify_positive_bisection(&poly(&[1.0, 1.0]), -0.5, 1.0, DEFAULT_MAX_DEPTH);
        assert_eq!(r.verdict, Verdict::Certified);
        assert!(r.margin.unwrap() >= 0.5);
        let r = certify_positive_bisection(&r_prime_poly(6).unwrap(), -1.0, 1.0, DEFAULT_MAX_DEPTH);
        assert_eq!(r.verdict, Verdict::Certified);
        let r = certify_positive_bisection(&poly(&[0.0, 0.0, 1.0]), -1.0, 1.0, DEFAULT_MAX_DEPTH);
        assert_ne!(r.verdict, Verdict::Certified);
        let r = certify_positive_bisection(&poly(&[0.09 + 1e-6, -0.6, 1.0]), -1.0, 1.0, 3);
        assert_eq!(r.verdict, Verdict::Inconclusive);
        let r = certify_positive_bisection(&RealPolynomial::zero(), -1.0, 1.0, 10);
        assert_eq!(r.verdict, Verdict::Degenerate);
    }

    #[test]
    fn bisection_margin_is_a_lower_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut checked = 0;
        for _ in 0..60 {
            let c: Vec<f64> = (0..5).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let p = poly(&c).add(&RealPolynomial::constant(2.5));
            let r = certify_positive_bisection(&p, -1.0, 1.0, DEFAULT_MAX_DEPTH);
            if r.verdict != Verdict::Certified {
                continue;
            }
            checked += 1;
            let m = r.margin.unwrap();
            let lo = -1.0 + OPEN_ENDPOINT_EPS;
            let hi = 1.0 - OPEN_ENDPOINT_EPS;
            for i in 0..10_000 {
                let x = lo + (hi - lo) * i as f64 / 9_999.0;
                assert!(p.eval(x) >= m - 1e-9);
            }
        }
        assert!(checked > 10);
        for n in 2..=6 {
            let p = r_prime_poly(n).unwrap();
            let r = certify_positive_bisection(&p, -1.0, 1.0, DEFAULT_MAX_DEPTH);
            let m = r.margin.unwrap();
            let lo = -1.0 + OPEN_ENDPOINT_EPS;
            let step = 2.0 * (1.0 - OPEN_ENDPOINT_EPS) / 9_999.0;
            assert!((0..10_000).all(|i| p.eval(lo + step * i as f64) >= m - 1e-9), "N={n}");
        }
    }

    #[test]
    fn enclosure_contains_samples() {
        let p = poly(&[0.3, -2.0, 1.5, 4.0, -3.0]);
        let iv = p.to_interval();
        for (lo, hi) in [(-1.0, 1.0), (-0.3, -0.1), (0.5, 0.500001)] {
            let e = enclose(&iv, lo, hi);
            for i in 0..=100 {
                let x = lo + (hi - lo) * i as f64 / 100.0;
                assert!(e.contains(p.eval(x)) || (p.eval(x) - e.mid()).abs() <= e.width() + 1e-14);
            }
        }
    }

    #[test]
    fn shift_discriminant_on_n5() {
        let p = r_prime_poly(5).unwrap().scale(4.0);
        let r = certify_shift_discriminant_iv(&r_prime_poly_iv(5).unwrap().scale(Interval::point(4.0)))
            .unwrap();
        assert_eq!(r.verdict, Verdict::Certified);
        let Detail::Shift { coefficients, discriminant } = &r.detail else { panic!() };
        assert!(discriminant.is_negative());
        let plain = taylor_shift(&p, -1.0);
        for (d, a) in coefficients.iter().enumerate() {
            assert!(a.contains(plain.coeff(d)) || (a.mid() - plain.coeff(d)).abs() < 1e-12);
            assert!(a.width() < 1e-9);
        }
        assert!(coefficients[0].is_positive() && coefficients[1].is_positive());
    }

    #[test]
    fn shift_discriminant_rejects_bad_shapes() {
        // (x+1)^3 - (x+1): A_1 = -1
        let p = poly(&[0.0, -1.0, 0.0, 1.0]).taylor_shift(1.0);
        let r = certify_shift_discriminant(&p).unwrap();
        assert_ne!(r.verdict, Verdict::Certified);
        assert!(r.note.unwrap().contains("A_1"));
        assert!(matches!(
            certify_shift_discriminant(&poly(&[1.0, 1.0])),
            Err(Error::WrongDegree { expected: 3, actual: 1 })
        ));
    }

    #[test]
    fn square_completion_on_n6() {
        let p = r_prime_poly_iv(6).unwrap().scale(Interval::point(4.0));
        let r = certify_square_completion_iv(&p).unwrap();
        assert_eq!(r.verdict, Verdict::Certified, "{r:?}");
        let Detail::SquareCompletion { shifted, square: Some(sq), remainder: Some(q), .. } = &r.detail
        else {
            panic!("{r:?}")
        };
        let s = 2f64.sqrt();
        let want = [108.0 - 76.0 * s, 464.0 * s - 660.0, 1068.0 - 732.0 * s, 432.0 * s - 680.0, 160.0 - 80.0 * s];
        for (b, w) in shifted.iter().zip(want) {
            assert!((b.mid() - w).abs() < 1e-10);
        }
        // expand (s0 + s1 u)^2 + u^2 (q0 + q1 u + q2 u^2) and shift back to x
        let (s0, s1) = (sq[0].mid(), sq[1].mid());
        let u_form = poly(&[s0 * s0, 2.0 * s0 * s1, s1 * s1 + q[0].mid(), q[1].mid(), q[2].mid()]);
        let back = u_form.taylor_shift(1.0);
        let orig = r_prime_poly(6).unwrap().scale(4.0);
        for d in 0..=4 {
            assert!((back.coeff(d) - orig.coeff(d)).abs() < 1e-9, "x^{d}");
        }
    }

    #[test]
    fn square_completion_trivial_and_wrong_degree() {
        // u^4 + 1 in u = x + 1
        let p = poly(&[1.0, 0.0, 0.0, 0.0, 1.0]).taylor_shift(1.0);
        let r = certify_square_completion(&p).unwrap();
        assert_eq!(r.verdict, Verdict::Certified);
        assert!(matches!(r.detail, Detail::SquareCompletion { trivial: true, .. }));
        assert!(certify_square_completion(&poly(&[1.0, 2.0, 3.0])).is_err());
        // p(-1) < 0
        let neg = poly(&[-1.0, 0.0, 0.0, 0.0, 1.0]).taylor_shift(1.0);
        assert_eq!(certify_square_completion(&neg).unwrap().verdict, Verdict::Refuted);
    }

    #[test]
    fn quadratic_test_cases() {
        let p = |x: f64| Interval::point(x);
        assert_eq!(quadratic_positive_on_0_2(p(1.0), p(-1.0), p(1.0)), Some(true));
        assert_eq!(quadratic_positive_on_0_2(p(1.0), p(-4.0), p(2.0)), Some(false));
        assert_eq!(quadratic_positive_on_0_2(p(1.0), p(1.0), p(-0.1)), Some(true));
        // vertex outside [0, 2]
        assert_eq!(quadratic_positive_on_0_2(p(1.0), p(4.0), p(1.0)), Some(true));
        assert_eq!(quadratic_positive_on_0_2(p(-1.0), p(4.0), p(1.0)), Some(false));
    }

    #[test]
    fn univalence_for_small_degrees() {
        let r1 = certify_univalence(1, DEFAULT_MAX_DEPTH).unwrap();
        assert_eq!(r1.verdict, Verdict::Degenerate);
        assert!(r1.note.is_some());
        for n in 2..=6 {
            let r = certify_univalence(n, DEFAULT_MAX_DEPTH).unwrap();
            assert_eq!(r.verdict, Verdict::Certified, "N={n}: {r:?}");
            assert!(!r.exploratory);
        }
        let r5 = certify_univalence(5, DEFAULT_MAX_DEPTH).unwrap();
        assert!(r5.methods.iter().any(|m| m.method == Method::DiscriminantShift));
        assert_eq!(r5.methods.len(), 3);
        let r6 = certify_univalence(6, DEFAULT_MAX_DEPTH).unwrap();
        assert!(r6.methods.iter().any(|m| m.method == Method::SquareCompletion));
        let r7 = certify_univalence(7, DEFAULT_MAX_DEPTH).unwrap();
        assert!(r7.exploratory);
        assert!(certify_univalence(0, DEFAULT_MAX_DEPTH).is_err());
    }

    #[test]
    fn methods_agree_up_to_twelve() {
        for n in 2..=12 {
            let r = certify_univalence(n, DEFAULT_MAX_DEPTH).unwrap();
            let decided: Vec<Verdict> = r
                .methods
                .iter()
                .map(|m| m.verdict)
                .filter(|v| matches!(v, Verdict::Certified | Verdict::Refuted))
                .collect();
            assert!(decided.windows(2).all(|w| w[0] == w[1]), "N={n}: {r:?}");
        }
    }

    #[test]
    fn combine_rules() {
        let rep = |v| CertificationReport::new(v, Method::Sturm, Detail::None);
        assert_eq!(combine(&[rep(Verdict::Certified), rep(Verdict::Certified)]), Verdict::Certified);
        assert_eq!(combine(&[rep(Verdict::Certified), rep(Verdict::Refuted)]), Verdict::Inconclusive);
        assert_eq!(combine(&[rep(Verdict::Inconclusive), rep(Verdict::Refuted)]), Verdict::Refuted);
        assert_eq!(combine(&[rep(Verdict::Certified), rep(Verdict::Inconclusive)]), Verdict::Inconclusive);
        assert_eq!(combine(&[rep(Verdict::Degenerate), rep(Verdict::Degenerate)]), Verdict::Degenerate);
    }
}
