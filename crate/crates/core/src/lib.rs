//! Extremal univalent polynomials on the unit disc.
//!
//! Two coefficient families are provided: the Chebyshev-weighted family
//! `P_N` (built from `U'_{N-k+1}` and `U_{k-1}` at `cos(pi/(N+2))`) and the
//! Suffridge polynomials `S_{n,j}`. On top of them the crate offers
//!
//! * closed-form boundary values and the squared boundary modulus
//!   `R_N(x) = |P_N(e^{it})|^2`, `x = cos t`, as a power-basis polynomial,
//! * rigorous certification that `R_N'` is positive on `(-1, 1)`, which makes
//!   `P_N` univalent with Koebe radius `sqrt(R_N(-1))`,
//! * Koebe-radius computations and the family comparison table.

pub mod boundary;
pub mod certify;
pub mod cheb;
pub mod cli;
pub mod families;
pub mod interval;
pub mod poly;
pub mod radii;

pub use families::FamilySpec;
pub use interval::Interval;
pub use poly::{IntervalPolynomial, RealPolynomial};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("degree N must be at least 1")]
    ZeroDegree,
    #[error("Suffridge index j = {j} must satisfy 1 <= j <= n = {n}")]
    SuffridgeIndex { n: usize, j: usize },
    #[error("angle t = {0} lies outside the open interval (0, pi)")]
    AngleOutOfRange(f64),
    #[error("interpolation residual {0:e} exceeds tolerance")]
    InterpolationResidual(f64),
    #[error("expected a polynomial of degree {expected}, got degree {actual}")]
    WrongDegree { expected: usize, actual: isize },
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
