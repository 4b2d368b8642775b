//! Transfer between the quadratic map f_c(x) = x^2 + c and the logistic
//! map g_r(y) = r y (1 - y) through the affine conjugacy h(y) = -ry + r/2
//! with c = -r(r-2)/4, so that f_c(h(y)) = h(g_r(y)). All logistic results
//! are pulled back from the quadratic side; nothing is re-derived for g.

use crate::cycle3::{cycles_for, Branch};
use crate::error::{Error, Result};
use crate::quadmap::{eval_f, Parameter};
use crate::stability::{classify, StabilityReport};

/// The logistic growth parameter r; any finite real is admissible.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct LogisticParameter(f64);

impl LogisticParameter {
    /// Wraps a finite parameter value.
    pub fn new(r: f64) -> Result<Self> {
        if r.is_finite() {
            Ok(Self(r))
        } else {
            Err(Error::NonFiniteParameter { value: r })
        }
    }

    /// The raw parameter value.
    pub fn value(self) -> f64 {
        self.0
    }
}

/// The conjugacy h(y) = -ry + r/2 from logistic to quadratic coordinates,
/// with inverse h^-1(x) = 1/2 - x/r (defined for r != 0).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConjugacyMap {
    r: f64,
}

impl ConjugacyMap {
    pub fn new(r: LogisticParameter) -> Self {
        ConjugacyMap { r: r.value() }
    }

    /// Maps a logistic-space point into quadratic coordinates.
    pub fn h(&self, y: f64) -> f64 {
        -self.r * y + self.r / 2.0
    }

    /// Maps a quadratic-space point into logistic coordinates; errors at
    /// r = 0 where h is constant.
    pub fn h_inv(&self, x: f64) -> Result<f64> {
        if self.r == 0.0 {
            return Err(Error::DegenerateConjugacy);
        }
        Ok(0.5 - x / self.r)
    }
}

/// The quadratic parameter conjugate to r: c = -r(r-2)/4.
pub fn c_of_r(r: LogisticParameter) -> Parameter {
    Parameter::new(-r.value() * (r.value() - 2.0) / 4.0)
        .expect("finite r gives finite c")
}

/// The two logistic parameters conjugate to c, ascending: r = 1 -+
/// sqrt(1 - 4c); `None` when c > 1/4 (the solutions are complex).
pub fn r_of_c(c: Parameter) -> Option<(f64, f64)> {
    let disc = 1.0 - 4.0 * c.value();
    if disc < 0.0 {
        return None;
    }
    let root = disc.sqrt();
    Some((1.0 - root, 1.0 + root))
}

/// Evaluates g_r(y) = r y (1 - y).
pub fn eval_g(r: LogisticParameter, y: f64) -> f64 {
    r.value() * y * (1.0 - y)
}

/// Pointwise conjugacy residual |f_{c(r)}(h(y)) - h(g_r(y))|.
///
/// Algebraically zero; contract: at most 1e-10 * (1 + y^2 r^2) in floating
/// point.
pub fn verify_conjugacy(r: LogisticParameter, y: f64) -> f64 {
    let map = ConjugacyMap::new(r);
    (eval_f(c_of_r(r), map.h(y)) - map.h(eval_g(r, y))).abs()
}

/// A period-3 orbit of the logistic map, pulled back from the quadratic
/// side, with the quadratic-side stability report attached unchanged (the
/// conjugacy preserves multipliers).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogisticCycle3 {
    pub y1: f64,
    pub y2: f64,
    pub y3: f64,
    pub branch: Branch,
    pub report: StabilityReport,
}

impl LogisticCycle3 {
    /// Components in orbit order: y2 = g(y1), y3 = g(y2), y1 = g(y3).
    pub fn components(&self) -> [f64; 3] {
        [self.y1, self.y2, self.y3]
    }
}

/// All 3-cycles of g_r with stability, via pullback of `cycles_for` at
/// c(r); empty when c(r) > -7/4. Errors at r = 0 (degenerate conjugacy).
pub fn logistic_cycles(r: LogisticParameter) -> Result<Vec<LogisticCycle3>> {
    if r.value() == 0.0 {
        return Err(Error::DegenerateConjugacy);
    }
    let c = c_of_r(r);
    let map = ConjugacyMap::new(r);
    cycles_for(c)
        .into_iter()
        .map(|cycle| {
            let report = classify(c, &cycle)?;
            Ok(LogisticCycle3 {
                y1: map.h_inv(cycle.x1)?,
                y2: map.h_inv(cycle.x2)?,
                y3: map.h_inv(cycle.x3)?,
                branch: cycle.branch,
                report,
            })
        })
        .collect()
}

/// Existence thresholds and stable-window endpoints on the r axis.
///
/// 3-cycles exist for r <= 1 - 2 sqrt(2) or r >= 1 + 2 sqrt(2), and the
/// attracting window (c~, -7/4) pulls back to (r_min, 1 - 2 sqrt(2)) and
/// (1 + 2 sqrt(2), r_max).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogisticWindow {
    pub r_min: f64,
    /// Lower existence threshold 1 - 2 sqrt(2) ~ -1.828427.
    pub lower_existence: f64,
    /// Upper existence threshold 1 + 2 sqrt(2) ~ 3.828427.
    pub upper_existence: f64,
    pub r_max: f64,
}

impl LogisticWindow {
    /// The negative-r stable interval (r_min, 1 - 2 sqrt(2)).
    pub fn lower_interval(&self) -> (f64, f64) {
        (self.r_min, self.lower_existence)
    }

    /// The positive-r stable interval (1 + 2 sqrt(2), r_max).
    pub fn upper_interval(&self) -> (f64, f64) {
        (self.upper_existence, self.r_max)
    }
}

/// The stable window endpoints in radical form:
/// r_max = 1 + sqrt(132 + 6A + 6B)/6 with A = (7660 + 540 sqrt(201))^(1/3)
/// and B = (7660 - 540 sqrt(201))^(1/3), and r_min = 2 - r_max by the
/// symmetry r <-> 2 - r; c_of_r maps both interval endpoints onto the
/// quadratic window (c~, -7/4).
pub fn logistic_stable_window() -> LogisticWindow {
    let s = 201.0_f64.sqrt();
    let a = (7660.0 + 540.0 * s).cbrt();
    let b = (7660.0 - 540.0 * s).cbrt();
    let half_width = (132.0 + 6.0 * a + 6.0 * b).sqrt() / 6.0;
    let spread = 2.0 * 2.0_f64.sqrt();
    LogisticWindow {
        r_min: 1.0 - half_width,
        lower_existence: 1.0 - spread,
        upper_existence: 1.0 + spread,
        r_max: 1.0 + half_width,
    }
}
