//! Deterministic bifurcation-diagram sweeps: post-transient orbit samples
//! over an ascending parameter grid, emitted as `c,x` CSV rows with
//! `%.12g`-style formatting.

use std::io::{self, Write};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::oracle::orbit_tail;
use crate::quadmap::Parameter;

/// Sweep configuration; the defaults reproduce a desk-scale diagram over
/// c in [-2, 0].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    pub c_min: f64,
    pub c_max: f64,
    pub samples: usize,
    pub transient: u32,
    pub keep: usize,
    pub x0: f64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            c_min: -2.0,
            c_max: 0.0,
            samples: 2000,
            transient: 1000,
            keep: 200,
            x0: 0.0,
        }
    }
}

impl SweepConfig {
    fn validate(&self) -> Result<()> {
        if !(self.c_min.is_finite() && self.c_max.is_finite() && self.x0.is_finite()) {
            return Err(Error::InvalidSweep {
                reason: "c_min, c_max, and x0 must be finite".to_owned(),
            });
        }
        if self.c_min >= self.c_max {
            return Err(Error::InvalidSweep {
                reason: format!("c_min = {} must be below c_max = {}", self.c_min, self.c_max),
            });
        }
        if self.samples < 2 {
            return Err(Error::InvalidSweep {
                reason: format!("need at least 2 samples, got {}", self.samples),
            });
        }
        Ok(())
    }
}

/// Kept orbit samples per grid parameter, ascending in c; diverged orbits
/// contribute an empty sample list.
pub type SweepRows = Vec<(f64, Vec<f64>)>;

/// Runs the sweep. Parameters are processed in parallel but rows are
/// returned (and therefore written) in ascending grid order, so output is
/// byte-identical regardless of the degree of concurrency.
pub fn sweep(config: &SweepConfig) -> Result<SweepRows> {
    config.validate()?;
    let n = config.samples;
    let grid: Vec<f64> = (0..n)
        .map(|i| config.c_min + (config.c_max - config.c_min) * (i as f64) / ((n - 1) as f64))
        .collect();
    Ok(grid
        .into_par_iter()
        .map(|c| {
            let parameter = Parameter::new(c).expect("grid points are finite");
            let tail = orbit_tail(parameter, config.x0, config.transient, config.keep);
            (c, if tail.diverged { Vec::new() } else { tail.samples })
        })
        .collect())
}

/// Writes rows as CSV: header `c,x`, one record per kept sample, LF line
/// endings, `%.12g` formatting.
pub fn write_csv<W: Write>(rows: &SweepRows, mut out: W) -> io::Result<()> {
    out.write_all(b"c,x\n")?;
    for (c, samples) in rows {
        let c_str = format_g12(*c);
        for x in samples {
            out.write_all(c_str.as_bytes())?;
            out.write_all(b",")?;
            out.write_all(format_g12(*x).as_bytes())?;
            out.write_all(b"\n")?;
        }
    }
    Ok(())
}

/// Convenience: the full CSV as a string.
pub fn csv_string(rows: &SweepRows) -> String {
    let mut buf = Vec::new();
    write_csv(rows, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("CSV output is ASCII")
}

/// Number of value clusters when points within `radius` of each other
/// (transitively, after sorting) are grouped together.
pub fn cluster_count(values: &[f64], radius: f64) -> usize {
    if values.is_empty() {
        return 0;
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    1 + sorted.windows(2).filter(|w| w[1] - w[0] > radius).count()
}

/// Formats like C's `printf("%.12g", x)`: 12 significant digits, fixed
/// notation for decimal exponents in [-4, 11], scientific otherwise,
/// trailing zeros trimmed, scientific exponents signed and at least two
/// digits wide.
pub fn format_g12(x: f64) -> String {
    if x.is_nan() {
        return "nan".to_owned();
    }
    if x.is_infinite() {
        return if x < 0.0 { "-inf".to_owned() } else { "inf".to_owned() };
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".to_owned() } else { "0".to_owned() };
    }

    // round to 12 significant digits first; the exponent of the *rounded*
    // value decides the notation (e.g. 999999999999.5 prints as 1e+12)
    let sci = format!("{:.11e}", x);
    let (mantissa, exp) = sci
        .split_once('e')
        .map(|(m, e)| (m, e.parse::<i32>().expect("exponent is an integer")))
        .expect("{:e} always contains an exponent");

    if !(-4..12).contains(&exp) {
        let trimmed = mantissa.trim_end_matches('0').trim_end_matches('.');
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{trimmed}e{sign}{:02}", exp.abs())
    } else {
        let fixed = format!("{:.*}", (11 - exp) as usize, x);
        if fixed.contains('.') {
            fixed.trim_end_matches('0').trim_end_matches('.').to_owned()
        } else {
            fixed
        }
    }
}
