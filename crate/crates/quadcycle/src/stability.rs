//! Stability classification of 3-cycles: the first-derivative multiplier
//! test for hyperbolic cycles, the second-derivative test at multiplier
//! +1, the Schwarzian-derivative test at multiplier -1, and the exact
//! stability window (c~, -7/4) of the DoubleTilde branch.

use crate::cycle3::{Cycle3, EXISTENCE_THRESHOLD};
use crate::error::{Error, Result};
use crate::quadmap::{deriv_f, schwarzian_f, Parameter};

/// |multiplier -+ 1| at most this triggers the non-hyperbolic tests; the
/// boundary parameters themselves are only approximately representable.
pub const HYPERBOLICITY_TOL: f64 = 1e-9;

/// Orbit-relation residual beyond which a (c, cycle) pair is rejected as
/// mismatched input.
pub const CYCLE_MATCH_TOL: f64 = 1e-6;

/// Linear-stability verdict for a cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabilityClass {
    /// |multiplier| < 1: nearby orbits converge to the cycle.
    AsymptoticallyStable,
    /// |multiplier| > 1.
    Unstable,
    /// Multiplier -1 with negative Schwarzian at every component.
    NonHyperbolicStable,
    /// Multiplier +1 with non-vanishing second derivative of f^3.
    NonHyperbolicUnstable,
}

impl StabilityClass {
    /// Stable-side verdicts (orbits near the cycle converge to it).
    pub fn is_stable(self) -> bool {
        matches!(
            self,
            StabilityClass::AsymptoticallyStable | StabilityClass::NonHyperbolicStable
        )
    }

    /// Name used by the CLI and reports.
    pub fn name(self) -> &'static str {
        match self {
            StabilityClass::AsymptoticallyStable => "asymptotically-stable",
            StabilityClass::Unstable => "unstable",
            StabilityClass::NonHyperbolicStable => "non-hyperbolic-stable",
            StabilityClass::NonHyperbolicUnstable => "non-hyperbolic-unstable",
        }
    }
}

/// Higher-order test values backing a non-hyperbolic verdict, in orbit
/// order (x1, x2, x3).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Diagnostics {
    /// (f^3)'' at each component (multiplier +1 case).
    SecondDerivative([f64; 3]),
    /// Schwarzian derivative of f^3 at each component (multiplier -1 case).
    Schwarzian([f64; 3]),
}

/// Outcome of [`classify`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StabilityReport {
    /// The cycle multiplier 8 x1 x2 x3.
    pub multiplier: f64,
    pub class: StabilityClass,
    /// Present only for non-hyperbolic verdicts.
    pub diagnostics: Option<Diagnostics>,
}

/// The left endpoint of the stability window: the unique real root of
/// 64c^3 + 128c^2 + 72c + 81, approximately -1.768529.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CTilde {
    value: f64,
}

impl CTilde {
    pub fn value(self) -> f64 {
        self.value
    }

    /// Residual of the defining cubic 64c^3 + 128c^2 + 72c + 81 at the
    /// stored value; a transcription guard, expected ~1e-13.
    pub fn residual(self) -> f64 {
        let c = self.value;
        ((64.0 * c + 128.0) * c + 72.0) * c + 81.0
    }
}

/// Evaluates the exact radical form of c~:
/// -(7660 + 540 sqrt(201))^(1/3)/24 - (7660 - 540 sqrt(201))^(1/3)/24 - 2/3.
pub fn c_tilde() -> CTilde {
    let s = 201.0_f64.sqrt();
    let value = -(7660.0 + 540.0 * s).cbrt() / 24.0 - (7660.0 - 540.0 * s).cbrt() / 24.0
        - 2.0 / 3.0;
    debug_assert!(value.is_finite());
    CTilde { value }
}

/// The cycle multiplier f'(x1) f'(x2) f'(x3) = 8 x1 x2 x3 = 8 s3.
pub fn multiplier(cycle: &Cycle3) -> f64 {
    8.0 * cycle.x1 * cycle.x2 * cycle.x3
}

/// Second derivative of F = f^3 at each cycle component via the chain
/// rule: (f^3)''(x1) = 32 x1^2 x2^2 + 16 x1^2 x3 + 8 x2 x3, and circular
/// permutations for x2, x3.
pub fn second_derivative_f3(cycle: &Cycle3) -> [f64; 3] {
    let [x1, x2, x3] = cycle.components();
    let at = |a: f64, b: f64, c: f64| 32.0 * a * a * b * b + 16.0 * a * a * c + 8.0 * b * c;
    [at(x1, x2, x3), at(x2, x3, x1), at(x3, x1, x2)]
}

/// Schwarzian derivative of F = f^3 at each cycle component via the
/// composition rule:
/// SF(x1) = Sf(x3) (f'(x1) f'(x2))^2 + Sf(x2) (f'(x1))^2 + Sf(x1),
/// and circular permutations. Negative at every admissible point; errors
/// when a component sits on the Schwarzian singularity x = 0.
pub fn schwarzian_f3(cycle: &Cycle3) -> Result<[f64; 3]> {
    let [x1, x2, x3] = cycle.components();
    let (s1, s2, s3) = (schwarzian_f(x1)?, schwarzian_f(x2)?, schwarzian_f(x3)?);
    let (d1, d2, d3) = (deriv_f(x1), deriv_f(x2), deriv_f(x3));
    let at = |s_far: f64, s_mid: f64, s_here: f64, d_here: f64, d_mid: f64| {
        s_far * (d_here * d_mid).powi(2) + s_mid * d_here * d_here + s_here
    };
    Ok([
        at(s3, s2, s1, d1, d2),
        at(s1, s3, s2, d2, d3),
        at(s2, s1, s3, d3, d1),
    ])
}

/// Classifies a cycle of f_c: the first-derivative test away from
/// |multiplier| = 1, the second-derivative test at +1 (a non-vanishing
/// (f^3)'' leaves the cycle attracting on one side only, hence unstable),
/// and the Schwarzian test at -1 (all-negative SF means attracting).
///
/// Errors when the cycle does not close up under f_c.
pub fn classify(c: Parameter, cycle: &Cycle3) -> Result<StabilityReport> {
    if cycle.closure_residual(c) > CYCLE_MATCH_TOL {
        return Err(Error::MismatchedCycle {
            c: c.value(),
            branch: cycle.branch,
            x1: cycle.x1,
            x2: cycle.x2,
            x3: cycle.x3,
        });
    }
    let lambda = multiplier(cycle);
    if (lambda - 1.0).abs() <= HYPERBOLICITY_TOL {
        let fpp = second_derivative_f3(cycle);
        return Ok(StabilityReport {
            multiplier: lambda,
            class: StabilityClass::NonHyperbolicUnstable,
            diagnostics: Some(Diagnostics::SecondDerivative(fpp)),
        });
    }
    if (lambda + 1.0).abs() <= HYPERBOLICITY_TOL {
        let sf = schwarzian_f3(cycle)?;
        let class = if sf.iter().all(|&v| v < 0.0) {
            StabilityClass::NonHyperbolicStable
        } else {
            StabilityClass::NonHyperbolicUnstable
        };
        return Ok(StabilityReport {
            multiplier: lambda,
            class,
            diagnostics: Some(Diagnostics::Schwarzian(sf)),
        });
    }
    let class = if lambda.abs() < 1.0 {
        StabilityClass::AsymptoticallyStable
    } else {
        StabilityClass::Unstable
    };
    Ok(StabilityReport {
        multiplier: lambda,
        class,
        diagnostics: None,
    })
}

/// The open parameter interval (c~, -7/4) on which the DoubleTilde cycle
/// is asymptotically stable by the first-derivative test. The closed left
/// endpoint (the Schwarzian case) is reported by [`classify`], not here.
pub fn stability_window() -> (f64, f64) {
    (c_tilde().value(), EXISTENCE_THRESHOLD)
}
