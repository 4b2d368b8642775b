//! Closed-form analysis of period-3 orbits of the real quadratic family
//! `f_c(x) = x^2 + c`.
//!
//! Period-3 orbits exist exactly for `c <= -7/4` and come in two branches,
//! each the root set of a monic cubic whose coefficients are elementary
//! symmetric functions with closed-form expressions in `c`. This crate
//! computes those orbits without iteration, classifies their stability
//! (including the non-hyperbolic boundary cases via second-derivative and
//! Schwarzian tests), and transfers every result to the logistic map
//! `r y (1 - y)` through an explicit affine conjugacy.
//!
//! The closed forms are backed by independent numeric machinery in
//! [`oracle`] — polynomial composition/division and bisection-based root
//! isolation — and by the randomized cross-check suites in [`verify`].
//!
//! # Modules
//!
//! - [`quadmap`]: the map itself, fixed points, derivatives, iteration
//! - [`cycle3`]: symmetric triples, branch cubics, discriminants, solved cycles
//! - [`stability`]: multipliers, non-hyperbolic tests, the stability window
//! - [`logistic`]: conjugacy to the logistic map and pulled-back cycles
//! - [`oracle`]: iteration-free cross-checks (polynomials, root isolation)
//! - [`bifurcation`]: deterministic parameter sweeps and CSV output
//! - [`report`]: JSON-serializable analysis summaries
//! - [`verify`]: seeded randomized self-verification suites

pub mod bifurcation;
pub mod cycle3;
pub mod error;
pub mod logistic;
pub mod oracle;
pub mod quadmap;
pub mod report;
pub mod stability;
pub mod verify;

pub use error::{Error, Result};

pub use bifurcation::{cluster_count, csv_string, format_g12, sweep, write_csv, SweepConfig};
pub use cycle3::{
    cubic_discriminant_closed_form, cubic_discriminant_general, cycle_cubic, cycles_for,
    existence_condition, solve_cubic_three_real, symmetric_triple, verify_factorization_identity,
    Branch, Cubic, Cycle3, SymmetricTriple, EXISTENCE_THRESHOLD,
};
pub use logistic::{
    c_of_r, eval_g, logistic_cycles, logistic_stable_window, r_of_c, verify_conjugacy,
    ConjugacyMap, LogisticCycle3, LogisticParameter, LogisticWindow,
};
pub use oracle::{
    compose_f3_minus_x, detect_period, isolate_real_roots, orbit_tail, poly_divide, poly_multiply,
    OrbitTail, Polynomial,
};
pub use quadmap::{
    deriv_f, eval_f, fixed_points, iterate, schwarzian_f, FixedPoints, Parameter,
};
pub use report::{analyze, regime_for, AnalysisReport, Regime, SCHEMA_VERSION};
pub use stability::{
    c_tilde, classify, multiplier, schwarzian_f3, second_derivative_f3, stability_window, CTilde,
    Diagnostics, StabilityClass, StabilityReport,
};
pub use verify::{run_all, suite_names, SuiteResult};
