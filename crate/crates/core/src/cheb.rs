//! Chebyshev polynomials `T_k`, `U_k` and `U_k'` by three-term recurrence.

use crate::interval::{Interval, Scalar};

fn t_generic<S: Scalar>(k: usize, x: S) -> S {
    let two = S::lift(2.0);
    let (mut prev, mut cur) = (S::one(), x);
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = two * x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Returns `(U_k(x), U_k'(x))` from the joint recurrence
/// `U_{k+1} = 2x U_k - U_{k-1}`, `U'_{k+1} = 2 U_k + 2x U'_k - U'_{k-1}`.
fn u_pair_generic<S: Scalar>(k: usize, x: S) -> (S, S) {
    let two = S::lift(2.0);
    let (mut u_prev, mut u) = (S::one(), two * x);
    let (mut d_prev, mut d) = (S::zero(), two);
    if k == 0 {
        return (u_prev, d_prev);
    }
    for _ in 1..k {
        let u_next = two * x * u - u_prev;
        let d_next = two * u + two * x * d - d_prev;
        u_prev = u;
        u = u_next;
        d_prev = d;
        d = d_next;
    }
    (u, d)
}

/// First-kind Chebyshev polynomial `T_k(x)`.
pub fn cheb_t(k: usize, x: f64) -> f64 {
    t_generic(k, x)
}

/// Second-kind Chebyshev polynomial `U_k(x)`.
pub fn cheb_u(k: usize, x: f64) -> f64 {
    u_pair_generic(k, x).0
}

/// Derivative `U_k'(x)`.
pub fn cheb_u_prime(k: usize, x: f64) -> f64 {
    u_pair_generic(k, x).1
}

pub fn cheb_t_iv(k: usize, x: Interval) -> Interval {
    t_generic(k, x)
}

pub fn cheb_u_iv(k: usize, x: Interval) -> Interval {
    u_pair_generic(k, x).0
}

pub fn cheb_u_prime_iv(k: usize, x: Interval) -> Interval {
    u_pair_generic(k, x).1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::cos_pi_ratio;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    #[test]
    fn low_order_values() {
        assert_eq!(cheb_t(0, 0.7), 1.0);
        assert_eq!(cheb_t(2, 0.5), -0.5);
        assert_eq!(cheb_u(1, 0.25), 0.5);
        assert_eq!(cheb_u(2, 0.5), 0.0);
        assert_eq!(cheb_u_prime(0, 0.9), 0.0);
        assert!((cheb_u_prime(2, 0.3) - 2.4).abs() < 1e-15);
    }

    #[test]
    fn t_matches_cosine() {
        let x = 0.3f64.cos();
        assert!((cheb_t(9, x) - 2.7f64.cos()).abs() < 1e-13);
    }

    #[test]
    fn u_matches_sine_quotient() {
        let th = PI / 7.0;
        let want = (5.0 * th).sin() / th.sin();
        assert!((cheb_u(4, th.cos()) - want).abs() < 1e-13);
    }

    #[test]
    fn u_prime_matches_central_difference() {
        let h = 1e-6;
        let fd = (cheb_u(6, 0.41 + h) - cheb_u(6, 0.41 - h)) / (2.0 * h);
        assert!((cheb_u_prime(6, 0.41) - fd).abs() < 1e-7);
    }

    #[test]
    fn pell_identity_and_t_derivative() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let x: f64 = rng.gen_range(-1.0..=1.0);
            let k = rng.gen_range(1..=30usize);
            let t = cheb_t(k, x);
            let u = cheb_u(k - 1, x);
            assert!((t * t - (x * x - 1.0) * u * u - 1.0).abs() < 1e-12, "k={k} x={x}");
            // T_k' = k U_{k-1}; differentiate T through the U-pair recurrence
            // via T_k = (U_k - U_{k-2}) / 2, so T_k' = (U_k' - U_{k-2}') / 2.
            let tp = if k == 1 {
                1.0
            } else {
                0.5 * (cheb_u_prime(k, x) - cheb_u_prime(k - 2, x))
            };
            let scale = 1.0 + (k as f64) * u.abs();
            assert!((tp - k as f64 * u).abs() < 1e-12 * scale * k as f64, "k={k} x={x}");
        }
    }

    #[test]
    fn u_prime_relative_error_vs_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let x: f64 = rng.gen_range(-0.95..0.95);
            let k = rng.gen_range(1..=30usize);
            let h = 1e-5;
            // fourth-order central difference
            let fd = (-cheb_u(k, x + 2.0 * h) + 8.0 * cheb_u(k, x + h) - 8.0 * cheb_u(k, x - h)
                + cheb_u(k, x - 2.0 * h))
                / (12.0 * h);
            let d = cheb_u_prime(k, x);
            let scale = d.abs().max(k as f64);
            assert!((d - fd).abs() / scale < 1e-6, "k={k} x={x} d={d} fd={fd}");
        }
    }

    #[test]
    fn interval_soundness_on_degenerate_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..1000 {
            let x: f64 = rng.gen_range(-1.2..1.2);
            let k = rng.gen_range(0..=30usize);
            let xi = Interval::point(x);
            assert!(cheb_t_iv(k, xi).contains(cheb_t(k, x)));
            assert!(cheb_u_iv(k, xi).contains(cheb_u(k, x)));
            assert!(cheb_u_prime_iv(k, xi).contains(cheb_u_prime(k, x)));
        }
    }

    #[test]
    fn interval_examples() {
        assert!(cheb_t_iv(2, Interval::point(0.5)).contains(-0.5));
        let e = cheb_u_iv(2, Interval::new(0.49, 0.51));
        assert!(e.contains(0.0));
        assert!(e.contains_interval(Interval::new(4.0 * 0.49 * 0.49 - 1.0, 4.0 * 0.51 * 0.51 - 1.0)));
        let c = cos_pi_ratio(1, 7);
        assert!(cheb_u_iv(5, c).contains(cheb_u(5, (PI / 7.0).cos())));
    }

    #[test]
    fn interval_width_grows_at_most_geometrically() {
        let x = Interval::new(0.3, 0.3 + 1e-12);
        let mut prev = cheb_u_iv(1, x).width();
        for k in 2..30 {
            let w = cheb_u_iv(k, x).width();
            assert!(w <= 4.0 * prev + 1e-14, "k={k} w={w} prev={prev}");
            prev = w.max(prev);
        }
    }
}
