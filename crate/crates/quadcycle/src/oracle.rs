//! Independent numerical verification layer: coefficient-level polynomial
//! arithmetic, real-root isolation on f^3(x) - x, orbit simulation, and
//! period detection. Everything here avoids the closed forms so it can
//! serve as a cross-check against them.

use crate::error::{Error, Result};
use crate::quadmap::Parameter;

/// Coefficients with magnitude at most this are treated as zero when
/// normalizing a polynomial's leading terms.
pub const POLY_TRAILING_TOL: f64 = 1e-14;

/// Roots closer than this are merged into one reported root.
pub const ROOT_CLUSTER_TOL: f64 = 1e-7;

/// Orbits are flagged as diverged once |x| exceeds this bound (bounded
/// orbits of x^2 + c stay within [-2, 2.5] for c in [-2, 1/4]).
pub const ESCAPE_BOUND: f64 = 10.0;

/// Number of uniform grid intervals used for sign-change bracketing.
const GRID_INTERVALS: usize = 4096;

/// Dense real polynomial, coefficients in ascending degree order.
///
/// Construction strips leading coefficients with |a| <= 1e-14, so the
/// stored leading coefficient is non-zero; the zero polynomial has an
/// empty coefficient vector.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    /// Builds a polynomial from ascending-degree coefficients, normalizing
    /// away (near-)zero leading terms.
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last().is_some_and(|a| a.abs() <= POLY_TRAILING_TOL) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of x^i (zero beyond the stored degree).
    pub fn coefficient(&self, i: usize) -> f64 {
        self.coeffs.get(i).copied().unwrap_or(0.0)
    }

    /// Ascending-degree coefficient slice.
    pub fn coefficients(&self) -> &[f64] {
        &self.coeffs
    }

    /// Largest coefficient magnitude (zero polynomial gives 0).
    pub fn max_coefficient(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, a| m.max(a.abs()))
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, a| acc * x + a)
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| (i as f64) * a)
            .collect();
        Polynomial::new(coeffs)
    }
}

/// Coefficient-level product of two polynomials.
pub fn poly_multiply(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() || b.is_zero() {
        return Polynomial::zero();
    }
    let mut coeffs = vec![0.0; a.coeffs.len() + b.coeffs.len() - 1];
    for (i, &ai) in a.coeffs.iter().enumerate() {
        for (j, &bj) in b.coeffs.iter().enumerate() {
            coeffs[i + j] += ai * bj;
        }
    }
    Polynomial::new(coeffs)
}

/// Euclidean division: returns (quotient, remainder) with
/// num = quotient * den + remainder and deg(remainder) < deg(den).
pub fn poly_divide(num: &Polynomial, den: &Polynomial) -> Result<(Polynomial, Polynomial)> {
    let dn = den.degree().ok_or(Error::ZeroPolynomialDivisor)?;
    let Some(nn) = num.degree() else {
        return Ok((Polynomial::zero(), Polynomial::zero()));
    };
    if nn < dn {
        return Ok((Polynomial::zero(), num.clone()));
    }
    let lead = den.coeffs[dn];
    let mut rem = num.coeffs.clone();
    let mut quot = vec![0.0; nn - dn + 1];
    for k in (0..=nn - dn).rev() {
        let q = rem[k + dn] / lead;
        quot[k] = q;
        for j in 0..dn {
            rem[k + j] -= q * den.coeffs[j];
        }
        rem[k + dn] = 0.0;
    }
    rem.truncate(dn);
    Ok((Polynomial::new(quot), Polynomial::new(rem)))
}

/// The degree-8 polynomial f^3(x) - x = ((x^2+c)^2+c)^2 + c - x, built by
/// coefficient-level composition (square twice, then subtract x).
pub fn compose_f3_minus_x(c: Parameter) -> Polynomial {
    let f1 = Polynomial::new(vec![c.value(), 0.0, 1.0]);
    let mut p = f1.clone();
    for _ in 0..2 {
        let mut sq = poly_multiply(&p, &p).coeffs;
        sq[0] += c.value();
        p = Polynomial { coeffs: sq };
    }
    let mut coeffs = p.coeffs;
    coeffs[1] -= 1.0;
    Polynomial::new(coeffs)
}

fn bisect_refine(p: &Polynomial, mut a: f64, mut b: f64) -> f64 {
    let mut fa = p.eval(a);
    for _ in 0..100 {
        if (b - a).abs() <= 1e-15 * (1.0 + a.abs() + b.abs()) {
            break;
        }
        let mid = 0.5 * (a + b);
        let fm = p.eval(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fa < 0.0) == (fm < 0.0) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    // a couple of guarded Newton steps sharpen the last bits
    let dp = p.derivative();
    let mut x = 0.5 * (a + b);
    for _ in 0..2 {
        let d = dp.eval(x);
        if d == 0.0 {
            break;
        }
        let step = p.eval(x) / d;
        let next = x - step;
        if next < a.min(b) || next > a.max(b) {
            break;
        }
        x = next;
    }
    x
}

/// All real roots of p in [lo, hi], ascending.
///
/// Brackets sign changes over the union of a 4096-interval uniform grid
/// and the critical points of p (isolated recursively through the
/// derivative chain), refines each bracket by bisection plus Newton, and
/// finally detects tangential ("touch") roots at critical points where p
/// vanishes without a sign change. Roots within 1e-7 are merged.
pub fn isolate_real_roots(p: &Polynomial, lo: f64, hi: f64) -> Vec<f64> {
    debug_assert!(lo < hi);
    let Some(degree) = p.degree() else {
        return Vec::new();
    };
    match degree {
        0 => return Vec::new(),
        1 => {
            let root = -p.coeffs[0] / p.coeffs[1];
            return if (lo..=hi).contains(&root) {
                vec![root]
            } else {
                Vec::new()
            };
        }
        _ => {}
    }

    let critical = isolate_real_roots(&p.derivative(), lo, hi);

    let mut breakpoints: Vec<f64> = (0..=GRID_INTERVALS)
        .map(|i| lo + (hi - lo) * (i as f64) / (GRID_INTERVALS as f64))
        .chain(critical.iter().copied())
        .collect();
    breakpoints.sort_by(f64::total_cmp);
    breakpoints.dedup();

    let mut roots: Vec<f64> = Vec::new();
    for win in breakpoints.windows(2) {
        let (a, b) = (win[0], win[1]);
        let (fa, fb) = (p.eval(a), p.eval(b));
        if fa == 0.0 {
            roots.push(a);
        }
        if (fa < 0.0) != (fb < 0.0) && fa != 0.0 && fb != 0.0 {
            roots.push(bisect_refine(p, a, b));
        }
    }
    if p.eval(hi) == 0.0 {
        roots.push(hi);
    }

    // tangential roots: p touches zero at a critical point without a sign
    // change (e.g. squared factors); skipped near an already-bracketed
    // root, where a tiny critical value means a close root pair instead
    let touch_tol = 1e-8 * (1.0 + p.max_coefficient());
    for &t in &critical {
        if p.eval(t).abs() <= touch_tol
            && !roots.iter().any(|r| (r - t).abs() < 1e-3)
        {
            roots.push(t);
        }
    }

    roots.sort_by(f64::total_cmp);
    let mut merged: Vec<f64> = Vec::with_capacity(roots.len());
    for r in roots {
        match merged.last() {
            Some(&last) if (r - last).abs() <= ROOT_CLUSTER_TOL => {
                let n = merged.len();
                merged[n - 1] = 0.5 * (last + r);
            }
            _ => merged.push(r),
        }
    }
    merged
}

/// Post-transient orbit samples of f_c from x0.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbitTail {
    /// The `keep` iterates recorded after the transient (fewer if the
    /// orbit escaped first).
    pub samples: Vec<f64>,
    /// True iff some iterate exceeded [`ESCAPE_BOUND`] in magnitude.
    pub diverged: bool,
}

/// Iterates f_c from x0 for `transient` steps, then records `keep`
/// iterates, flagging divergence past [`ESCAPE_BOUND`].
pub fn orbit_tail(c: Parameter, x0: f64, transient: u32, keep: usize) -> OrbitTail {
    let mut x = x0;
    for _ in 0..transient {
        if x.abs() > ESCAPE_BOUND {
            return OrbitTail { samples: Vec::new(), diverged: true };
        }
        x = x * x + c.value();
    }
    let mut samples = Vec::with_capacity(keep);
    for _ in 0..keep {
        if x.abs() > ESCAPE_BOUND {
            return OrbitTail { samples, diverged: true };
        }
        samples.push(x);
        x = x * x + c.value();
    }
    OrbitTail { samples, diverged: false }
}

/// Smallest period p <= max_period with |x_{n+p} - x_n| <= tol for every
/// recorded n (requiring at least one comparison), or `None`.
pub fn detect_period(tail: &OrbitTail, max_period: usize, tol: f64) -> Result<Option<usize>> {
    if tail.diverged {
        return Err(Error::DivergedOrbit);
    }
    let s = &tail.samples;
    for period in 1..=max_period {
        if s.len() <= period {
            break;
        }
        if (0..s.len() - period).all(|n| (s[n + period] - s[n]).abs() <= tol) {
            return Ok(Some(period));
        }
    }
    Ok(None)
}
