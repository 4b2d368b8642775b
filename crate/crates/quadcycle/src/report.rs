//! Per-parameter analysis reports: regime label, fixed points, all
//! 3-cycles with stability, and the conjugate logistic data, with a
//! versioned JSON rendering.

use serde::{Deserialize, Serialize};

use crate::cycle3::{
    cubic_discriminant_general, cycle_cubic, cycles_for, symmetric_triple,
};
use crate::logistic::{logistic_stable_window, r_of_c};
use crate::quadmap::{fixed_points, Parameter};
use crate::stability::{c_tilde, classify};

/// JSON schema version emitted in every report.
pub const SCHEMA_VERSION: u32 = 1;

/// Half-width of the exact-boundary detection band around c = -7/4.
pub const BOUNDARY_DETECTION_TOL: f64 = 1e-12;

/// Parameter regime:
/// A: c > -7/4, no 3-cycles; B: c = -7/4 (within 1e-12), one non-hyperbolic
/// cycle; C: c in [c~, -7/4), one attracting and one repelling cycle;
/// D: c < c~, two repelling cycles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Regime {
    A,
    B,
    C,
    D,
}

/// Monic cubic coefficients of x^3 + b x^2 + c2 x + d.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CubicCoefficients {
    pub b: f64,
    pub c2: f64,
    pub d: f64,
}

/// One cycle entry of an [`AnalysisReport`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CycleReport {
    pub branch: String,
    pub s1: f64,
    pub s2: f64,
    pub s3: f64,
    pub cubic: CubicCoefficients,
    /// Components in orbit order (x2 = f(x1), x3 = f(x2), x1 = f(x3)).
    pub roots: [f64; 3],
    pub multiplier: f64,
    pub stability: String,
    pub discriminant: f64,
}

/// Conjugate logistic data, present when c <= 1/4.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LogisticSection {
    /// The two logistic parameters with c(r) = c, ascending.
    pub r_values: (f64, f64),
    /// The stable r-intervals (r_min, 1 - 2 sqrt 2) and (1 + 2 sqrt 2, r_max).
    pub stable_windows: [(f64, f64); 2],
}

/// Full analysis of one parameter value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub c: f64,
    pub regime: Regime,
    pub fixed_points: Option<(f64, f64)>,
    pub cycles: Vec<CycleReport>,
    pub logistic: Option<LogisticSection>,
}

impl AnalysisReport {
    /// Pretty JSON rendering; parsing it back and re-rendering is
    /// byte-identical.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Parses a rendering produced by [`AnalysisReport::to_json`].
    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

/// The regime label for a parameter. The boundary regime B uses a 1e-12
/// detection band around the exactly representable -1.75; everything else
/// is decided by exact comparison against -7/4 and c~.
pub fn regime_for(c: Parameter) -> Regime {
    let v = c.value();
    if (v + 1.75).abs() <= BOUNDARY_DETECTION_TOL {
        Regime::B
    } else if v > -1.75 {
        Regime::A
    } else if v >= c_tilde().value() {
        Regime::C
    } else {
        Regime::D
    }
}

/// Analyzes one parameter: regime, fixed points, every 3-cycle with its
/// symmetric functions, cubic, discriminant, and stability verdict, plus
/// the conjugate logistic parameters and stable windows.
pub fn analyze(c: Parameter) -> AnalysisReport {
    let cycles = cycles_for(c)
        .into_iter()
        .map(|cycle| {
            let triple = symmetric_triple(c, cycle.branch)
                .expect("cycle exists, so the triple does too");
            let cubic = cycle_cubic(c, cycle.branch).expect("cycle exists");
            let report = classify(c, &cycle).expect("cycle closes by construction");
            CycleReport {
                branch: cycle.branch.name().to_owned(),
                s1: triple.s1,
                s2: triple.s2,
                s3: triple.s3,
                cubic: CubicCoefficients {
                    b: cubic.b,
                    c2: cubic.c2,
                    d: cubic.d,
                },
                roots: cycle.components(),
                multiplier: report.multiplier,
                stability: report.class.name().to_owned(),
                discriminant: cubic_discriminant_general(&cubic),
            }
        })
        .collect();

    let logistic = r_of_c(c).map(|r_values| {
        let w = logistic_stable_window();
        LogisticSection {
            r_values,
            stable_windows: [w.lower_interval(), w.upper_interval()],
        }
    });

    AnalysisReport {
        schema: SCHEMA_VERSION,
        c: c.value(),
        regime: regime_for(c),
        fixed_points: fixed_points(c).map(|fp| (fp.p1, fp.p2)),
        cycles,
        logistic,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(c: f64) -> AnalysisReport {
        analyze(Parameter::new(c).unwrap())
    }

    #[test]
    fn regime_labels() {
        assert_eq!(report(-1.0).regime, Regime::A);
        assert_eq!(report(-1.7499).regime, Regime::A);
        assert_eq!(report(-1.75).regime, Regime::B);
        assert_eq!(report(-1.75 + 5e-13).regime, Regime::B);
        assert_eq!(report(-1.76).regime, Regime::C);
        assert_eq!(report(-1.8).regime, Regime::D);
        assert_eq!(report(-2.0).regime, Regime::D);
    }

    #[test]
    fn regime_boundaries_match_existence_and_c_tilde() {
        let ct = c_tilde().value();
        assert_eq!(report(ct).regime, Regime::C);
        assert_eq!(report(ct - 1e-9).regime, Regime::D);
        assert_eq!(report(-1.75 - 1e-9).regime, Regime::C);
    }

    #[test]
    fn cycle_counts_per_regime() {
        assert!(report(-1.0).cycles.is_empty());
        assert_eq!(report(-1.75).cycles.len(), 1);
        assert_eq!(report(-1.75).cycles[0].stability, "non-hyperbolic-unstable");
        let two = report(-2.0);
        assert_eq!(two.cycles.len(), 2);
        assert!(two.cycles.iter().all(|k| k.stability == "unstable"));
        let mut mults: Vec<f64> = two.cycles.iter().map(|k| k.multiplier).collect();
        mults.sort_by(f64::total_cmp);
        assert!((mults[0] + 8.0).abs() < 1e-12);
        assert!((mults[1] - 8.0).abs() < 1e-12);
    }

    #[test]
    fn logistic_section_presence() {
        assert!(report(0.3).logistic.is_none());
        assert!(report(0.3).fixed_points.is_none());
        let r = report(-2.0);
        let logistic = r.logistic.unwrap();
        assert_eq!(logistic.r_values, (-2.0, 4.0));
        assert_eq!(r.fixed_points, Some((-1.0, 2.0)));
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        for c in [-2.0, -1.76, -1.75, -1.0, 0.0, 0.3, -1.7685291524676843] {
            let first = report(c).to_json();
            let reparsed = AnalysisReport::from_json(&first).unwrap();
            assert_eq!(reparsed.to_json(), first);
        }
    }

    #[test]
    fn schema_version_is_emitted() {
        let json = report(-2.0).to_json();
        assert!(json.contains("\"schema\": 1"));
    }
}
