//! Randomized self-verification: each suite draws parameters from a seeded
//! ChaCha8 stream and cross-checks closed-form results against independent
//! computations (polynomial oracles, direct iteration, conjugacy pullbacks).
//!
//! Suites are independent — suite `i` seeds its own generator with
//! `seed + i` — so adding a suite never perturbs the others, and a given
//! `(seed, trials)` pair is fully reproducible.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cycle3::{
    cubic_discriminant_closed_form, cubic_discriminant_general, cycle_cubic, cycles_for,
    solve_cubic_three_real, symmetric_triple, Branch,
};
use crate::logistic::{c_of_r, eval_g, logistic_cycles, verify_conjugacy, ConjugacyMap, LogisticParameter};
use crate::oracle::{compose_f3_minus_x, isolate_real_roots, orbit_tail, detect_period, poly_divide, poly_multiply, Polynomial};
use crate::quadmap::{deriv_f, eval_f, fixed_points, Parameter};
use crate::report::analyze;
use crate::stability::{c_tilde, classify, multiplier, StabilityClass};

/// Outcome of one suite: how many trials ran, how many failed, and the
/// first failure message (if any) for diagnosis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub trials: u32,
    pub failures: u32,
    pub first_failure: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// One-line human-readable summary, used by the CLI.
    pub fn summary_line(&self) -> String {
        match &self.first_failure {
            None => format!("ok   {} ({} trials)", self.name, self.trials),
            Some(msg) => format!(
                "FAIL {} ({}/{} trials failed; first: {})",
                self.name, self.failures, self.trials, msg
            ),
        }
    }
}

type Check = fn(&mut ChaCha8Rng) -> std::result::Result<(), String>;

const SUITES: &[(&str, Check)] = &[
    ("quadmap-fixed-points", check_fixed_points),
    ("cycle3-symmetric-identities", check_symmetric_identities),
    ("cycle3-discriminants", check_discriminants),
    ("cycle3-closure", check_cycle_closure),
    ("stability-multipliers", check_stability),
    ("logistic-conjugacy", check_logistic_conjugacy),
    ("oracle-root-isolation", check_root_isolation),
    ("oracle-division", check_division),
    ("oracle-period-detection", check_period_detection),
    ("report-json-round-trip", check_json_round_trip),
];

/// Names of all suites, in execution order.
pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(name, _)| *name).collect()
}

/// Runs every suite for `trials` iterations each and collects the results.
pub fn run_all(seed: u64, trials: u32) -> Vec<SuiteResult> {
    SUITES
        .iter()
        .enumerate()
        .map(|(index, (name, check))| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(index as u64));
            let mut failures = 0;
            let mut first_failure = None;
            for trial in 0..trials {
                if let Err(msg) = check(&mut rng) {
                    failures += 1;
                    if first_failure.is_none() {
                        first_failure = Some(format!("trial {trial}: {msg}"));
                    }
                }
            }
            SuiteResult { name, trials, failures, first_failure }
        })
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn param(c: f64) -> Parameter {
    Parameter::new(c).expect("sampled parameters are finite")
}

/// Fixed points satisfy f(p) = p and Viète's relations p1 + p2 = 1,
/// p1 * p2 = c.
fn check_fixed_points(rng: &mut ChaCha8Rng) -> std::result::Result<(), String> {
    let c = rng.gen_range(-3.0..0.25);
    let p = param(c);
    let fixed = fixed_points(p).ok_or_else(|| format!("no fixed points at c = {c}"))?;
    for x in [fixed.p1, fixed.p2] {
        let residual = (eval_f(p, x) - x).abs();
        ensure(residual <= 1e-9 * (1.0 + x * x), || {
            format!("fixed-point residual {residual:e} at c = {c}, x = {x}")
        })?;
    }
    ensure((fixed.p1 + fixed.p2 - 1.0).abs() <= 1e-12, || {
        format!("p1 + p2 != 1 at c = {c}")
    })?;
    ensure((fixed.p1 * fixed.p2 - c).abs() <= 1e-9 * (1.0 + c.abs()), || {
        format!("p1 * p2 != c at c = {c}")
    })
}

/// The symmetric triple satisfies its defining quadratic, matches the
/// elementary symmetric functions of the solved roots, and orders the two
/// branches by 8*s3 - 1 (positive for tilde, negative for doubletilde).
fn check_symmetric_identities(rng: &mut ChaCha8Rng) -> std::result::Result<(), String> {
    let c = rng.gen_range(-3.0..-1.75);
    let p = param(c);
    for branch in Branch::ALL {
        let t = symmetric_triple(p, branch).map_err(|e| e.to_string())?;
        let quad = t.s1 * t.s1 + t.s1 + (c + 2.0);
        ensure(quad.abs() <= 1e-9 * (1.0 + t.s1 * t.s1), || {
            format!("s1 quadratic residual {quad:e} at c = {c}, {}", branch.name())
        })?;

        let roots = solve_cubic_three_real(&cycle_cubic(p, branch).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let e1 = roots[0] + roots[1] + roots[2];
        let e2 = roots[0] * roots[1] + roots[1] * roots[2] + roots[2] * roots[0];
        let e3 = roots[0] * roots[1] * roots[2];
        for (observed, expected, label) in [(e1, t.s1, "s1"), (e2, t.s2, "s2"), (e3, t.s3, "s3")] {
            ensure((observed - expected).abs() <= 1e-8 * (1.0 + expected.abs()), || {
                format!(
                    "{label} mismatch at c = {c}, {}: roots give {observed}, formula {expected}",
                    branch.name()
                )
            })?;
        }

        // strict ordering holds away from the existence boundary, where
        // both sides collapse to 8*s3 = 1
        if c < -1.7501 {
            let gap = 8.0 * t.s3 - 1.0;
            let ok = match branch {
                Branch::Tilde => gap > 0.0,
                Branch::DoubleTilde => gap < 0.0,
            };
            ensure(ok, || {
                format!("8*s3 - 1 = {gap:e} has wrong sign at c = {c}, {}", branch.name())
            })?;
        }
    }
    Ok(())
}

/// Closed-form cubic discriminants agree with the general degree-3
/// discriminant, are positive, and multiply to (16c^2 + 4c + 7)^2.
fn check_discriminants(rng: &mut ChaCha8Rng) -> std::result::Result<(), String> {
    let c = rng.gen_range(-3.0..-1.75);
    let p = param(c);
    let mut closed = [0.0; 2];
    for (slot, branch) in closed.iter_mut().zip(Branch::ALL) {
        let from_formula = cubic_discriminant_closed_form(p, branch).map_err(|e| e.to_string())?;
        let from_coeffs =
            cubic_discriminant_general(&cycle_cubic(p, branch).map_err(|e| e.to_string())?);
        ensure(
            (from_formula - from_coeffs).abs() <= 1e-9 * (1.0 + from_formula.abs()),
            || {
                format!(
                    "discriminant mismatch at c = {c}, {}: closed {from_formula}, general {from_coeffs}",
                    branch.name()
                )
            },
        )?;
        ensure(from_formula > 0.0, || {
            format!("non-positive discriminant {from_formula} at c = {c}, {}", branch.name())
        })?;
        *slot = from_formula;
    }
    let invariant = 16.0 * c * c + 4.0 * c + 7.0;
    let product = invariant * invariant;
    ensure((closed[0] * closed[1] - product).abs() <= 1e-9 * product, || {
        format!("discriminant product {} != {product} at c = {c}", closed[0] * closed[1])
    })
}

/// Every returned cycle closes under f, has pairwise-distinct points, and
/// its points are roots of the branch cubic.
fn check_cycle_closure(rng: &mut ChaCha8Rng) -> std::result::Result<(), String> {
    let c = rng.gen_range(-3.0..-1.7501);
    let p = param(c);
    let cycles = cycles_for(p);
    ensure(cycles.len() == 2, || format!("expected 2 cycles at c = {c}, got {}", cycles.len()))?;
    for cycle in &cycles {
        let xs = cycle.components();
        let scale = 1.0 + xs.iter().fold(0.0f64, |m, x| m.max(x * x));
        let residual = cycle.closure_residual(p);
        ensure(residual <= 1e-8 * scale, || {
            format!("closure residual {residual:e} at c = {c}, {}", cycle.branch.name())
        })?;
        for (i, j) in [(0, 1), (1, 2), (0, 2)] {
            ensure((xs[i] - xs[j]).abs() > 1e-7, || {
                format!("coincident cycle points at c = {c}, {}", cycle.branch.name())
            })?;
        }
        let cubic = cycle_cubic(p, cycle.branch).map_err(|e| e.to_string())?;
        for x in xs {
            let value = cubic.eval(x).abs();
            ensure(value <= 1e-8 * scale, || {
                format!("cubic residual {value:e} at root {x}, c = {c}, {}", cycle.branch.name())
            })?;
        }
    }
    Ok(())
}

/// The multiplier 8*s3 equals the product of f' along the orbit; the tilde
/// cycle is always unstable and the doubletilde cycle changes stability
/// exactly at the flip point.
fn check_stability(rng: &mut ChaCha8Rng) -> std::result::Result<(), String> {
    let c = rng.gen_range(-3.0..-1.7501);
    let p = param(c);
    let flip = c_tilde().value();
    for cycle in cycles_for(p) {
        let lambda = multiplier(&cycle);
        let chain: f64 = cycle.components().iter().map(|&x| deriv_f(x)).product();
        ensure((lambda - chain).abs() <= 1e-9 * (1.0 + lambda.abs()), || {
            format!("multiplier mismatch at c = {c}: 8*s3 = {lambda}, chain = {chain}")
        })?;
        let report = classify(p, &cycle).map_err(|e| e.to_string())?;
        match cycle.branch {
            Branch::Tilde => {
                ensure(lambda > 1.0 && report.class == StabilityClass::Unstable, || {
                    format!("tilde cycle not unstable at c = {c}: lambda = {lambda}")
                })?;
            }
            Branch::DoubleTilde => {
                if (c - flip).abs() > 1e-6 {
                    let expect_stable = c > flip;
                    ensure(report.class.is_stable() == expect_stable, || {
                        format!(
                            "doubletilde stability wrong at c = {c} (flip {flip}): lambda = {lambda}, class {:?}",
                            report.class
                        )
                    })?;
                }
            }
        }
    }
    Ok(())
}

/// Logistic cycles pulled back through the conjugacy close under g, the
/// pointwise conjugacy residual vanishes, and multipliers transfer.
fn check_logistic_conjugacy(rng: &mut ChaCha8Rng) -> std::result::Result<(), String> {
    let r = rng.gen_range(3.8285..4.0);
    let lp = LogisticParameter::new(r).map_err(|e| e.to_string())?;
    for y in [rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0)] {
        let residual = verify_conjugacy(lp, y);
        ensure(residual <= 1e-9 * (1.0 + r * r), || {
            format!("conjugacy residual {residual:e} at r = {r}, y = {y}")
        })?;
    }

    let cycles = logistic_cycles(lp).map_err(|e| e.to_string())?;
    ensure(cycles.len() == 2, || format!("expected 2 logistic cycles at r = {r}"))?;
    ensure(c_of_r(lp).value() <= -1.75, || format!("c(r) above existence bound at r = {r}"))?;
    let map = ConjugacyMap::new(lp);
    for cycle in &cycles {
        let ys = cycle.components();
        for i in 0..3 {
            let step = (eval_g(lp, ys[i]) - ys[(i + 1) % 3]).abs();
            ensure(step <= 1e-8 * (1.0 + r * r), || {
                format!("logistic orbit does not close at r = {r}: step residual {step:e}")
            })?;
        }
        let chain: f64 = ys.iter().map(|&y| deriv_f(map.h(y))).product();
        let lambda = cycle.report.multiplier;
        ensure((chain - lambda).abs() <= 1e-8 * (1.0 + lambda.abs()), || {
            format!("multiplier did not transfer at r = {r}: chain {chain}, lambda {lambda}")
        })?;
    }
    Ok(())
}

/// Root isolation on the degree-8 polynomial f(f(f(x))) - x finds exactly
/// the two fixed points plus both 3-cycles.
fn check_root_isolation(rng: &mut ChaCha8Rng) -> std::result::Result<(), String> {
    let c = rng.gen_range(-3.0..-1.751);
    let p = param(c);
    let roots = isolate_real_roots(&compose_f3_minus_x(p), -3.0, 3.0);
    ensure(roots.len() == 8, || format!("expected 8 roots at c = {c}, found {}", roots.len()))?;

    let fixed = fixed_points(p).ok_or_else(|| format!("missing fixed points at c = {c}"))?;
    let mut expected = vec![fixed.p1, fixed.p2];
    for cycle in cycles_for(p) {
        expected.extend(cycle.components());
    }
    for value in expected {
        let matched = roots.iter().any(|r| (r - value).abs() <= 1e-7 * (1.0 + value.abs()));
        ensure(matched, || {
            format!("isolated roots at c = {c} miss the closed-form value {value}")
        })?;
    }
    Ok(())
}

/// Synthetic division: dividing f(f(f(x))) - x by x^2 - x + c leaves no
/// remainder, and a random multiply/divide round trip is exact to scale.
fn check_division(rng: &mut ChaCha8Rng) -> std::result::Result<(), String> {
    let c = rng.gen_range(-3.0..0.25);
    let p = param(c);
    let composed = compose_f3_minus_x(p);
    let fixed_factor = Polynomial::new(vec![c, -1.0, 1.0]);
    let (quotient, remainder) =
        poly_divide(&composed, &fixed_factor).map_err(|e| e.to_string())?;
    let scale = composed.max_coefficient();
    ensure(remainder.is_zero() || remainder.max_coefficient() <= 1e-8 * scale, || {
        format!("fixed-point factor leaves remainder {:?} at c = {c}", remainder.coefficients())
    })?;
    let rebuilt = poly_multiply(&quotient, &fixed_factor);
    for i in 0..composed.coefficients().len() {
        let delta = (rebuilt.coefficient(i) - composed.coefficient(i)).abs();
        ensure(delta <= 1e-8 * scale, || {
            format!("quotient * divisor deviates by {delta:e} in x^{i} at c = {c}")
        })?;
    }

    // round trip with a well-conditioned divisor: leading coefficient
    // bounded away from zero so deflation stays stable
    let a = random_poly(rng, 4, 0.5);
    let b = random_poly(rng, 4, 2.0);
    let product = poly_multiply(&a, &b);
    let (q, rem) = poly_divide(&product, &b).map_err(|e| e.to_string())?;
    let scale = 1.0 + product.max_coefficient();
    ensure(rem.is_zero() || rem.max_coefficient() <= 1e-10 * scale, || {
        format!("round-trip remainder {:e} too large", rem.max_coefficient())
    })?;
    for i in 0..a.coefficients().len() {
        let delta = (q.coefficient(i) - a.coefficient(i)).abs();
        ensure(delta <= 1e-10 * scale, || {
            format!("round-trip quotient deviates by {delta:e} in x^{i}")
        })?;
    }
    Ok(())
}

fn random_poly(rng: &mut ChaCha8Rng, max_degree: usize, min_lead: f64) -> Polynomial {
    let degree = rng.gen_range(1..=max_degree);
    let mut coeffs: Vec<f64> = (0..=degree).map(|_| rng.gen_range(-4.0..4.0)).collect();
    let magnitude = rng.gen_range(min_lead..4.0);
    *coeffs.last_mut().expect("degree >= 1") =
        if rng.gen_bool(0.5) { magnitude } else { -magnitude };
    Polynomial::new(coeffs)
}

/// Inside the stable window the critical orbit settles onto the attracting
/// 3-cycle, and the period detector reports exactly 3.
fn check_period_detection(rng: &mut ChaCha8Rng) -> std::result::Result<(), String> {
    let lo = c_tilde().value() + 1e-4;
    let c = rng.gen_range(lo..(-1.75 - 1e-4));
    let tail = orbit_tail(param(c), 0.0, 5000, 30);
    let period = detect_period(&tail, 6, 1e-6).map_err(|e| e.to_string())?;
    ensure(period == Some(3), || {
        format!("expected period 3 at c = {c}, detected {period:?}")
    })
}

/// Analysis reports survive a JSON round trip byte-for-byte.
fn check_json_round_trip(rng: &mut ChaCha8Rng) -> std::result::Result<(), String> {
    let c = rng.gen_range(-3.0..0.3);
    let report = analyze(param(c));
    let json = report.to_json();
    let reparsed = crate::report::AnalysisReport::from_json(&json).map_err(|e| e.to_string())?;
    ensure(reparsed.to_json() == json, || {
        format!("JSON round trip not byte-identical at c = {c}")
    })
}
