//! The quadratic map family f_c(x) = x^2 + c: evaluation, iteration,
//! derivatives, fixed points, and the Schwarzian derivative of f.

use crate::error::{Error, Result};

/// Below this magnitude, x counts as the Schwarzian singularity at 0.
pub const SCHWARZIAN_GUARD: f64 = 1e-9;

/// The real parameter c of the map f_c(x) = x^2 + c.
///
/// Construction rejects NaN and infinities; every finite real is admissible.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Parameter(f64);

impl Parameter {
    /// Wraps a finite parameter value.
    pub fn new(c: f64) -> Result<Self> {
        if c.is_finite() {
            Ok(Self(c))
        } else {
            Err(Error::NonFiniteParameter { value: c })
        }
    }

    /// The raw parameter value.
    pub fn value(self) -> f64 {
        self.0
    }
}

/// The fixed points of f_c, the roots of x^2 - x + c = 0, with p1 <= p2.
///
/// Viete: p1 + p2 = 1 and p1 * p2 = c. They exist iff c <= 1/4 and
/// collide at p1 = p2 = 1/2 when c = 1/4.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedPoints {
    pub p1: f64,
    pub p2: f64,
}

/// Evaluates f_c(x) = x^2 + c.
pub fn eval_f(c: Parameter, x: f64) -> f64 {
    x * x + c.0
}

/// The derivative f'(x) = 2x (independent of c).
pub fn deriv_f(x: f64) -> f64 {
    2.0 * x
}

/// The fixed points (1 -+ sqrt(1 - 4c))/2, or `None` when c > 1/4.
pub fn fixed_points(c: Parameter) -> Option<FixedPoints> {
    let disc = 1.0 - 4.0 * c.0;
    if disc < 0.0 {
        return None;
    }
    let root = disc.sqrt();
    Some(FixedPoints {
        p1: (1.0 - root) / 2.0,
        p2: (1.0 + root) / 2.0,
    })
}

/// The Schwarzian derivative Sf(x) = -3 / (2x^2), strictly negative.
///
/// Errors when |x| < [`SCHWARZIAN_GUARD`] rather than returning -inf.
pub fn schwarzian_f(x: f64) -> Result<f64> {
    if x.abs() < SCHWARZIAN_GUARD {
        return Err(Error::SchwarzianSingular { abs_x: x.abs() });
    }
    Ok(-1.5 / (x * x))
}

/// The n-th iterate f_c^n(x0); n = 0 returns x0.
///
/// Divergence to infinity propagates through floating-point semantics and
/// is a reportable outcome, not an error.
pub fn iterate(c: Parameter, x0: f64, n: u32) -> f64 {
    let mut x = x0;
    for _ in 0..n {
        x = x * x + c.0;
    }
    x
}
