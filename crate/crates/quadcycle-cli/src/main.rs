//! `quadcycle` — period-3 analysis of the quadratic map x^2 + c from the
//! command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 argument parse error
//! (clap's default), 3 domain/precondition error, 4 I/O error.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use quadcycle::{
    analyze, c_of_r, cycle_cubic, cycles_for, classify, logistic_cycles, logistic_stable_window,
    multiplier, sweep, write_csv, Branch, Cubic, Error, LogisticParameter, Parameter, SweepConfig,
};

#[derive(Parser)]
#[command(
    name = "quadcycle",
    version,
    about = "Closed-form period-3 cycles of x^2 + c: analysis, stability, logistic transfer"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one parameter: regime, fixed points, cycles, stability
    Analyze {
        /// Map parameter c (finite real)
        #[arg(allow_hyphen_values = true, value_parser = finite_real)]
        c: f64,
        /// Emit the report as JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Solve one cycle branch: cubic, orbit-ordered roots, multiplier
    Cycle {
        /// Map parameter c; 3-cycles require c <= -7/4
        #[arg(allow_hyphen_values = true, value_parser = finite_real)]
        c: f64,
        /// Cycle branch: "tilde" or "doubletilde"
        #[arg(value_parser = parse_branch)]
        branch: Branch,
    },
    /// Transfer the analysis to the logistic map r*y*(1 - y)
    Logistic {
        /// Logistic parameter r (finite real, nonzero)
        #[arg(allow_hyphen_values = true, value_parser = finite_real)]
        r: f64,
    },
    /// Sweep a parameter range and emit bifurcation samples as CSV
    Bifurcation {
        /// Lower end of the parameter range
        #[arg(long, allow_hyphen_values = true, value_parser = finite_real, default_value_t = -2.0)]
        c_min: f64,
        /// Upper end of the parameter range
        #[arg(long, allow_hyphen_values = true, value_parser = finite_real, default_value_t = 0.0)]
        c_max: f64,
        /// Number of grid points (>= 2)
        #[arg(long, default_value_t = 2000)]
        samples: usize,
        /// Iterations discarded before sampling
        #[arg(long, default_value_t = 1000)]
        transient: u32,
        /// Samples kept per parameter
        #[arg(long, default_value_t = 200)]
        keep: usize,
        /// Initial point for every orbit
        #[arg(long, allow_hyphen_values = true, value_parser = finite_real, default_value_t = 0.0)]
        x0: f64,
        /// Output file (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the seeded randomized self-verification suites
    Verify {
        /// RNG seed (positional form)
        #[arg(value_name = "SEED", conflicts_with = "seed")]
        seed_pos: Option<u64>,
        /// Trials per suite (positional form)
        #[arg(value_name = "TRIALS", conflicts_with = "trials")]
        trials_pos: Option<u32>,
        /// RNG seed
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Trials per suite (>= 1)
        #[arg(long, default_value_t = 100)]
        trials: u32,
    },
}

/// Rejects NaN and infinities at the parser so they surface as argument
/// errors (exit 2) rather than domain errors.
fn finite_real(s: &str) -> Result<f64, String> {
    let value: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if value.is_finite() {
        Ok(value)
    } else {
        Err(format!("{value} is not a finite real"))
    }
}

fn parse_branch(s: &str) -> Result<Branch, String> {
    Branch::parse(s).ok_or_else(|| format!("unknown branch {s:?}: expected \"tilde\" or \"doubletilde\""))
}

enum Failure {
    Domain(Error),
    Io(io::Error),
}

impl Failure {
    fn exit_code(&self) -> ExitCode {
        match self {
            Failure::Domain(_) => ExitCode::from(3),
            Failure::Io(_) => ExitCode::from(4),
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Domain(e) => e.to_string(),
            Failure::Io(e) => e.to_string(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze { c, json } => cmd_analyze(c, json),
        Command::Cycle { c, branch } => cmd_cycle(c, branch),
        Command::Logistic { r } => cmd_logistic(r),
        Command::Bifurcation { c_min, c_max, samples, transient, keep, x0, out } => {
            let config = SweepConfig { c_min, c_max, samples, transient, keep, x0 };
            cmd_bifurcation(&config, out.as_deref())
        }
        Command::Verify { seed_pos, trials_pos, seed, trials } => {
            return cmd_verify(seed_pos.unwrap_or(seed), trials_pos.unwrap_or(trials));
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            failure.exit_code()
        }
    }
}

/// `%.12g` with negative zero normalized away (display only).
fn fmt(value: f64) -> String {
    quadcycle::format_g12(value + 0.0)
}

fn fmt_cubic(cubic: &Cubic) -> String {
    format!(
        "x^3 + ({})x^2 + ({})x + ({})",
        fmt(cubic.b),
        fmt(cubic.c2),
        fmt(cubic.d)
    )
}

fn cmd_analyze(c: f64, json: bool) -> Result<(), Failure> {
    let parameter = Parameter::new(c)?;
    let report = analyze(parameter);
    if json {
        println!("{}", report.to_json());
        return Ok(());
    }

    println!("c = {}  (regime {:?})", fmt(report.c), report.regime);
    match report.fixed_points {
        Some((p1, p2)) => println!("fixed points: {}, {}", fmt(p1), fmt(p2)),
        None => println!("fixed points: none (c > 1/4)"),
    }
    if report.cycles.is_empty() {
        println!("3-cycles: none (c > -7/4)");
    } else {
        println!("3-cycles: {}", report.cycles.len());
        for cycle in &report.cycles {
            println!("  branch {}", cycle.branch);
            println!("    s1 = {}, s2 = {}, s3 = {}", fmt(cycle.s1), fmt(cycle.s2), fmt(cycle.s3));
            println!(
                "    cubic: x^3 + ({})x^2 + ({})x + ({})",
                fmt(cycle.cubic.b),
                fmt(cycle.cubic.c2),
                fmt(cycle.cubic.d)
            );
            println!(
                "    roots (orbit order): {}, {}, {}",
                fmt(cycle.roots[0]),
                fmt(cycle.roots[1]),
                fmt(cycle.roots[2])
            );
            println!("    multiplier: {}", fmt(cycle.multiplier));
            println!("    stability: {}", cycle.stability);
            println!("    discriminant: {}", fmt(cycle.discriminant));
        }
    }
    if let Some(logistic) = &report.logistic {
        println!(
            "logistic parameters: r = {} or {}",
            fmt(logistic.r_values.0),
            fmt(logistic.r_values.1)
        );
        println!(
            "logistic stable windows: ({}, {}) and ({}, {})",
            fmt(logistic.stable_windows[0].0),
            fmt(logistic.stable_windows[0].1),
            fmt(logistic.stable_windows[1].0),
            fmt(logistic.stable_windows[1].1)
        );
    }
    Ok(())
}

fn cmd_cycle(c: f64, branch: Branch) -> Result<(), Failure> {
    let parameter = Parameter::new(c)?;
    let cubic = cycle_cubic(parameter, branch)?;
    let cycle = cycles_for(parameter)
        .into_iter()
        .find(|cycle| cycle.branch == branch)
        .ok_or(Error::NoCycle { c })?;
    let report = classify(parameter, &cycle)?;

    println!("c = {}, branch {}", fmt(c), branch.name());
    println!("cubic: {}", fmt_cubic(&cubic));
    let [x1, x2, x3] = cycle.components();
    println!("roots (orbit order): {}, {}, {}", fmt(x1), fmt(x2), fmt(x3));
    println!("multiplier: {}", fmt(multiplier(&cycle)));
    println!("stability: {}", report.class.name());
    Ok(())
}

fn cmd_logistic(r: f64) -> Result<(), Failure> {
    let parameter = LogisticParameter::new(r)?;
    if r == 0.0 {
        return Err(Error::DegenerateConjugacy.into());
    }
    let c = c_of_r(parameter);
    println!("r = {}  (conjugate c = {})", fmt(r), fmt(c.value()));

    let window = logistic_stable_window();
    println!(
        "stable 3-cycle windows: ({}, {}) and ({}, {})",
        fmt(window.lower_interval().0),
        fmt(window.lower_interval().1),
        fmt(window.upper_interval().0),
        fmt(window.upper_interval().1)
    );
    println!("window endpoints: r_min = {}, r_max = {}", fmt(window.r_min), fmt(window.r_max));

    let cycles = logistic_cycles(parameter)?;
    if cycles.is_empty() {
        println!("3-cycles: none (c = {} > -7/4)", fmt(c.value()));
        return Ok(());
    }
    println!("3-cycles: {}", cycles.len());
    for cycle in &cycles {
        let [y1, y2, y3] = cycle.components();
        println!("  branch {}", cycle.branch.name());
        println!("    orbit: {}, {}, {}", fmt(y1), fmt(y2), fmt(y3));
        println!("    multiplier: {}", fmt(cycle.report.multiplier));
        println!("    stability: {}", cycle.report.class.name());
    }
    Ok(())
}

fn cmd_bifurcation(config: &SweepConfig, out: Option<&std::path::Path>) -> Result<(), Failure> {
    let rows = sweep(config)?;
    match out {
        Some(path) => {
            let file = File::create(path)?;
            let mut writer = BufWriter::new(file);
            write_csv(&rows, &mut writer)?;
            writer.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            write_csv(&rows, &mut lock)?;
            lock.flush()?;
        }
    }
    Ok(())
}

fn cmd_verify(seed: u64, trials: u32) -> ExitCode {
    let trials = trials.max(1);
    let mut results = quadcycle::run_all(seed, trials);
    // test-only hook: lets the integration suite confirm the failure path
    // without breaking a real invariant
    if std::env::var_os("QUADCYCLE_VERIFY_FAULT").is_some_and(|v| !v.is_empty()) {
        results.push(quadcycle::SuiteResult {
            name: "fault-injection",
            trials,
            failures: trials,
            first_failure: Some("trial 0: injected fault (test hook)".to_owned()),
        });
    }

    for result in &results {
        println!("{}", result.summary_line());
    }
    let failed = results.iter().filter(|r| !r.passed()).count();
    if failed == 0 {
        println!("all {} suites passed ({} trials each, seed {})", results.len(), trials, seed);
        ExitCode::SUCCESS
    } else {
        println!("{failed} of {} suites FAILED (seed {seed})", results.len());
        ExitCode::from(1)
    }
}
