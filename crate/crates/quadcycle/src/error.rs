//! Error type shared across the library.

use crate::cycle3::Branch;

/// Errors produced by domain-checked operations.
///
/// Regimes that are legitimate outcomes (no fixed points, no cycles, a
/// diverged orbit) are modeled as values, not errors; only genuine
/// precondition violations land here.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A map parameter was NaN or infinite.
    #[error("parameter must be finite, got {value}")]
    NonFiniteParameter { value: f64 },

    /// A 3-cycle operation was invoked where no 3-cycle exists.
    #[error("no 3-cycle for c = {c}: existence requires c <= -7/4")]
    NoCycle { c: f64 },

    /// The Schwarzian derivative of x^2 + c is singular at x = 0.
    #[error("Schwarzian derivative undefined near x = 0 (|x| = {abs_x:e})")]
    SchwarzianSingular { abs_x: f64 },

    /// A cubic with complex roots was passed to the all-real solver.
    #[error("cubic discriminant is negative ({discriminant:e}): roots are not all real")]
    ComplexRoots { discriminant: f64 },

    /// Polynomial division by the zero polynomial.
    #[error("division by the zero polynomial")]
    ZeroPolynomialDivisor,

    /// Period detection requires a bounded orbit.
    #[error("orbit diverged; period detection needs a bounded tail")]
    DivergedOrbit,

    /// The conjugacy h(x) = -rx + r/2 is not invertible at r = 0.
    #[error("conjugacy is degenerate at r = 0: h is not invertible")]
    DegenerateConjugacy,

    /// A bifurcation sweep was configured with an empty range or too few
    /// samples.
    #[error("invalid sweep configuration: {reason}")]
    InvalidSweep { reason: String },

    /// A cycle handed to `classify` does not close up under the given c.
    #[error("cycle ({x1}, {x2}, {x3}) does not satisfy the orbit relation for c = {c} (branch {branch:?})")]
    MismatchedCycle {
        c: f64,
        branch: Branch,
        x1: f64,
        x2: f64,
        x3: f64,
    },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
