//! Closed-form period-3 cycles of f_c(x) = x^2 + c.
//!
//! Writing s1, s2, s3 for the elementary symmetric functions of a 3-cycle,
//! the cycle equations reduce to s1^2 + s1 + c + 2 = 0 together with
//! s2 = -s1 + c - 1 and s3 = c*s1 + c + 1, so cycles exist iff c <= -7/4
//! and come in two branches (the two roots for s1). Each branch yields a
//! monic cubic x^3 - s1 x^2 + s2 x - s3 whose roots are the cycle.

use crate::error::{Error, Result};
use crate::oracle::{compose_f3_minus_x, poly_multiply, Polynomial};
use crate::quadmap::{eval_f, Parameter};

/// Largest parameter admitting a 3-cycle: cycles exist iff c <= -7/4.
pub const EXISTENCE_THRESHOLD: f64 = -1.75;

/// Componentwise tolerance below which the two branch triples are
/// considered coincident (they collide exactly at c = -7/4).
pub const BRANCH_COINCIDENCE_TOL: f64 = 1e-9;

/// Residual bound |q(root)| required of polished cubic roots.
pub const ROOT_RESIDUAL_TOL: f64 = 1e-9;

/// Which root of s1^2 + s1 + c + 2 = 0 a cycle derives from.
///
/// `Tilde` takes s1 = (-1 - sqrt(-4c-7))/2, `DoubleTilde` takes
/// s1 = (-1 + sqrt(-4c-7))/2. The DoubleTilde branch is the one with a
/// stability window; the Tilde branch is unstable wherever it exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Tilde,
    DoubleTilde,
}

impl Branch {
    /// Both branches, in the fixed order used by [`cycles_for`].
    pub const ALL: [Branch; 2] = [Branch::Tilde, Branch::DoubleTilde];

    /// Lower-case name used by the CLI and reports.
    pub fn name(self) -> &'static str {
        match self {
            Branch::Tilde => "tilde",
            Branch::DoubleTilde => "doubletilde",
        }
    }

    /// Parses the lower-case names accepted by [`Branch::name`].
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "tilde" => Some(Branch::Tilde),
            "doubletilde" => Some(Branch::DoubleTilde),
            _ => None,
        }
    }
}

/// Elementary symmetric functions (s1, s2, s3) of one cycle branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetricTriple {
    pub s1: f64,
    pub s2: f64,
    pub s3: f64,
}

/// Monic cubic x^3 + b x^2 + c2 x + d.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cubic {
    pub b: f64,
    pub c2: f64,
    pub d: f64,
}

impl Cubic {
    /// The cubic with roots summing per a symmetric triple (Viete):
    /// x^3 - s1 x^2 + s2 x - s3.
    pub fn from_triple(t: SymmetricTriple) -> Self {
        Cubic {
            b: -t.s1,
            c2: t.s2,
            d: -t.s3,
        }
    }

    /// Evaluates the cubic at x (Horner).
    pub fn eval(&self, x: f64) -> f64 {
        ((x + self.b) * x + self.c2) * x + self.d
    }

    /// Evaluates the derivative 3x^2 + 2bx + c2.
    pub fn deriv(&self, x: f64) -> f64 {
        (3.0 * x + 2.0 * self.b) * x + self.c2
    }

    /// Ascending-degree coefficient vector [d, c2, b, 1].
    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::new(vec![self.d, self.c2, self.b, 1.0])
    }
}

/// One period-3 orbit: x2 = f(x1), x3 = f(x2), x1 = f(x3).
///
/// Canonical ordering starts at the component of smallest absolute value
/// and follows the map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cycle3 {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
    pub branch: Branch,
}

impl Cycle3 {
    /// Components in orbit order.
    pub fn components(&self) -> [f64; 3] {
        [self.x1, self.x2, self.x3]
    }

    /// Worst orbit-relation residual max_i |f(x_i) - x_{i+1}|.
    pub fn closure_residual(&self, c: Parameter) -> f64 {
        let [x1, x2, x3] = self.components();
        (eval_f(c, x1) - x2)
            .abs()
            .max((eval_f(c, x2) - x3).abs())
            .max((eval_f(c, x3) - x1).abs())
    }
}

/// True iff f_c has period-3 orbits, i.e. c <= -7/4 (exact comparison).
pub fn existence_condition(c: Parameter) -> bool {
    c.value() <= EXISTENCE_THRESHOLD
}

fn require_cycles(c: Parameter) -> Result<f64> {
    if existence_condition(c) {
        Ok(c.value())
    } else {
        Err(Error::NoCycle { c: c.value() })
    }
}

/// The branch's (s1, s2, s3).
///
/// s1 is the branch root of s1^2 + s1 + c + 2 = 0; s2 and s3 follow from
/// the degree-reduced forms s2 = -s1 + c - 1 and s3 = c*s1 + c + 1.
pub fn symmetric_triple(c: Parameter, branch: Branch) -> Result<SymmetricTriple> {
    let c = require_cycles(c)?;
    let root = (-4.0 * c - 7.0).sqrt();
    let s1 = match branch {
        Branch::Tilde => (-1.0 - root) / 2.0,
        Branch::DoubleTilde => (-1.0 + root) / 2.0,
    };
    Ok(SymmetricTriple {
        s1,
        s2: -s1 + c - 1.0,
        s3: c * s1 + c + 1.0,
    })
}

/// The monic cubic whose roots are the branch's 3-cycle.
pub fn cycle_cubic(c: Parameter, branch: Branch) -> Result<Cubic> {
    Ok(Cubic::from_triple(symmetric_triple(c, branch)?))
}

/// Closed-form discriminant of the branch cubic:
/// 16c^2 - 4c - 7 + 8c*sqrt(-4c-7) for Tilde and
/// 16c^2 - 4c - 7 - 8c*sqrt(-4c-7) for DoubleTilde; positive for c <= -7/4.
///
/// The pairing is fixed by cross-checking against
/// [`cubic_discriminant_general`] on the branch cubics (e.g. at c = -2 the
/// Tilde cubic x^3 + x^2 - 2x - 1 has discriminant 49 and the DoubleTilde
/// cubic x^3 - 3x + 1 has 81). The product of the two forms is the perfect
/// square (16c^2 + 4c + 7)^2.
pub fn cubic_discriminant_closed_form(c: Parameter, branch: Branch) -> Result<f64> {
    let c = require_cycles(c)?;
    let base = 16.0 * c * c - 4.0 * c - 7.0;
    let cross = 8.0 * c * (-4.0 * c - 7.0).sqrt();
    Ok(match branch {
        Branch::Tilde => base + cross,
        Branch::DoubleTilde => base - cross,
    })
}

/// Discriminant of a monic cubic by the general formula
/// B^2 C^2 - 4AC^3 - 4B^3 D - 27 A^2 D^2 + 18 ABCD with A = 1.
pub fn cubic_discriminant_general(q: &Cubic) -> f64 {
    let (b, c, d) = (q.b, q.c2, q.d);
    b * b * c * c - 4.0 * c * c * c - 4.0 * b * b * b * d - 27.0 * d * d + 18.0 * b * c * d
}

/// Solves a cubic known to have three real roots (discriminant >= 0),
/// returned ascending; repeated roots appear with multiplicity.
///
/// Uses the trigonometric form on the depressed cubic — numerically stable
/// in the all-real-roots regime where Cardano's formula cancels — then one
/// guarded Newton step per root.
pub fn solve_cubic_three_real(q: &Cubic) -> Result<[f64; 3]> {
    let disc = cubic_discriminant_general(q);
    let scale = 1.0 + q.b.abs().max(q.c2.abs()).max(q.d.abs());
    if disc < -1e-10 * scale.powi(4) {
        return Err(Error::ComplexRoots { discriminant: disc });
    }

    // depress: x = t - b/3 turns q into t^3 + p t + r
    let shift = q.b / 3.0;
    let p = q.c2 - q.b * shift;
    let r = q.eval(-shift);

    let mut roots = if p >= -1e-13 * scale * scale {
        // p ~ 0 with disc >= 0 forces r ~ 0: (near-)triple root
        let t = -r.cbrt();
        [t - shift; 3]
    } else {
        let m = 2.0 * (-p / 3.0).sqrt();
        let cos3t = (3.0 * r / (p * m)).clamp(-1.0, 1.0);
        let theta = cos3t.acos() / 3.0;
        let mut out = [0.0; 3];
        for (k, slot) in out.iter_mut().enumerate() {
            let angle = theta - 2.0 * std::f64::consts::PI * (k as f64) / 3.0;
            *slot = m * angle.cos() - shift;
        }
        out
    };

    for x in &mut roots {
        let dq = q.deriv(*x);
        if dq.abs() > 1e-8 * scale * scale {
            *x -= q.eval(*x) / dq;
        }
    }
    roots.sort_by(f64::total_cmp);
    Ok(roots)
}

/// Orders a branch cubic's roots into orbit form: x1 is the root of
/// smallest |x|, x2 the root nearest f(x1), x3 the remaining one.
fn orbit_order(c: Parameter, roots: [f64; 3], branch: Branch) -> Cycle3 {
    let mut rs = roots;
    rs.sort_by(|a, b| a.abs().total_cmp(&b.abs()));
    let x1 = rs[0];
    let fx1 = eval_f(c, x1);
    let (x2, x3) = if (rs[1] - fx1).abs() <= (rs[2] - fx1).abs() {
        (rs[1], rs[2])
    } else {
        (rs[2], rs[1])
    };
    Cycle3 { x1, x2, x3, branch }
}

/// All 3-cycles at parameter c in canonical orbit order: empty for
/// c > -7/4, the single boundary cycle at c = -7/4 (where the branches
/// coincide), and one cycle per branch for c < -7/4.
pub fn cycles_for(c: Parameter) -> Vec<Cycle3> {
    if !existence_condition(c) {
        return Vec::new();
    }
    let mut cycles: Vec<Cycle3> = Vec::with_capacity(2);
    let mut triples: Vec<SymmetricTriple> = Vec::with_capacity(2);
    for branch in Branch::ALL {
        let triple = symmetric_triple(c, branch).expect("existence checked above");
        let coincident = triples.iter().any(|t| {
            (t.s1 - triple.s1).abs() < BRANCH_COINCIDENCE_TOL
                && (t.s2 - triple.s2).abs() < BRANCH_COINCIDENCE_TOL
                && (t.s3 - triple.s3).abs() < BRANCH_COINCIDENCE_TOL
        });
        if coincident {
            continue;
        }
        let roots = solve_cubic_three_real(&Cubic::from_triple(triple))
            .expect("branch cubics have positive discriminant for c <= -7/4");
        cycles.push(orbit_order(c, roots, branch));
        triples.push(triple);
    }
    cycles
}

/// Checks the degree-8 identity f^3(x) - x = (x^2 - x + c) * C~(x) * C~~(x)
/// coefficient by coefficient, returning the maximum absolute deviation.
///
/// The quadratic factor carries the fixed points (the s1^2 - 3s1 + 9c = 0
/// branch of the factorization, which yields no 3-cycles); the two cubics
/// are the branch cycle cubics. Contract: deviation <= 1e-6 * (1 + max
/// absolute coefficient).
pub fn verify_factorization_identity(c: Parameter) -> Result<f64> {
    require_cycles(c)?;
    let lhs = compose_f3_minus_x(c);
    let fixed_factor = Polynomial::new(vec![c.value(), -1.0, 1.0]);
    let tilde = cycle_cubic(c, Branch::Tilde)?.to_polynomial();
    let doubletilde = cycle_cubic(c, Branch::DoubleTilde)?.to_polynomial();
    let rhs = poly_multiply(&poly_multiply(&fixed_factor, &tilde), &doubletilde);

    let deviation = (0..=8)
        .map(|i| (lhs.coefficient(i) - rhs.coefficient(i)).abs())
        .fold(0.0, f64::max);
    Ok(deviation)
}
