//! Command-line driver for `ptent`: parameter sweeps written as CSV (and
//! optionally SVG), plus a self-test that reruns the invariant suite.

use std::fmt;
use std::fs;
use std::path::PathBuf;

use ptent::experiments::{run_point, Scenario, SweepOutcome};
use rayon::prelude::*;
use thiserror::Error;

pub mod config;
pub mod output;
pub mod selftest;

pub use config::{Args, Grid, RunConfig, Tolerances};
pub use output::Row;

/// `(α, Et)`.
pub type GridPoint = (f64, f64);

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid config: {field}: {reason}")]
    Config { field: String, reason: String },
    #[error("I/O error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("internal invariant violated: {0}")]
    Internal(#[from] ptent::Error),
    #[error("invariant violated: {check} (deviation {deviation:.3e}, tolerance {tolerance:.1e})")]
    Tolerance {
        check: String,
        deviation: f64,
        tolerance: f64,
    },
    #[error("selftest failed: first failing check: {0}")]
    SelftestFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config { .. } => 2,
            CliError::Io { .. } => 3,
            CliError::Internal(_) | CliError::Tolerance { .. } | CliError::SelftestFailed(_) => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunSummary {
    pub scenario: Scenario,
    pub points: usize,
    pub skipped: Vec<GridPoint>,
    pub entropy_min: f64,
    pub entropy_max: f64,
    pub csv_path: PathBuf,
    pub svg_path: Option<PathBuf>,
}

impl fmt::Display for RunSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "scenario={} points={} skipped={} entropy_min={} entropy_max={} csv={}",
            self.scenario,
            self.points,
            self.skipped.len(),
            output::format_number(self.entropy_min),
            output::format_number(self.entropy_max),
            self.csv_path.display()
        )?;
        if let Some(svg) = &self.svg_path {
            write!(f, " svg={}", svg.display())?;
        }
        Ok(())
    }
}

/// Evaluates the grid in parallel and returns rows sorted by `(α, Et)`.
pub fn compute(config: &RunConfig) -> Result<(Vec<Row>, Vec<GridPoint>), CliError> {
    config.validate()?;
    let spec = config.sweep_spec();
    let evaluated: Vec<_> = spec
        .points()
        .into_par_iter()
        .map(|(a, e)| ((a, e), run_point(spec.scenario, a, e)))
        .collect();
    let outcome = SweepOutcome::collect(evaluated)?;

    let tol = config.tolerances().oracle;
    for r in &outcome.results {
        if let (Some(closed), Some(numeric)) = (r.k_closed_form, r.k_numeric) {
            let deviation = (closed.abs() - numeric).abs();
            if !(deviation <= tol) {
                return Err(CliError::Tolerance {
                    check: format!("closed-form K equals the numeric half gap at α={}, Et={}", r.alpha, r.et),
                    deviation,
                    tolerance: tol,
                });
            }
        }
    }
    let rows = outcome
        .results
        .iter()
        .map(|r| Row::from_result(r, config.log_base))
        .collect();
    Ok((rows, outcome.skipped))
}

/// Runs a sweep and writes `<scenario>.csv` (and `<scenario>.svg`) into the
/// output directory.
pub fn run(config: &RunConfig) -> Result<RunSummary, CliError> {
    let (rows, skipped) = compute(config)?;
    let dir = &config.output_dir;
    let io = |path: &PathBuf| {
        let path = path.clone();
        move |source| CliError::Io { path, source }
    };
    fs::create_dir_all(dir).map_err(io(dir))?;

    let csv_path = dir.join(format!("{}.csv", config.scenario));
    fs::write(&csv_path, output::render_csv(&rows)).map_err(io(&csv_path))?;

    let svg_path = if config.emit_svg {
        let path = dir.join(format!("{}.svg", config.scenario));
        let svg = output::render_svg(config.scenario, &rows, &entropy_unit(config.log_base));
        fs::write(&path, svg).map_err(io(&path))?;
        Some(path)
    } else {
        None
    };

    let (entropy_min, entropy_max) = rows
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| (lo.min(r.entropy), hi.max(r.entropy)));
    Ok(RunSummary {
        scenario: config.scenario,
        points: rows.len(),
        skipped,
        entropy_min,
        entropy_max,
        csv_path,
        svg_path,
    })
}

fn entropy_unit(log_base: f64) -> String {
    if log_base == 2.0 {
        "bits".into()
    } else if log_base == std::f64::consts::E {
        "nats".into()
    } else {
        format!("log base {log_base}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        let cfg = CliError::Config { field: "et_steps".into(), reason: "empty".into() };
        assert_eq!(cfg.exit_code(), 2);
        assert!(cfg.to_string().contains("et_steps"));
        let io = CliError::Io { path: "x".into(), source: std::io::Error::other("boom") };
        assert_eq!(io.exit_code(), 3);
        assert_eq!(CliError::Internal(ptent::Error::SingularBasis).exit_code(), 1);
    }

    #[test]
    fn compute_is_order_independent() {
        let config = RunConfig {
            alpha_grid: Grid { min: 0.0, max: 1.2, count: 6 },
            et_grid: Grid { min: 0.0, max: 6.0, count: 9 },
            ..RunConfig::default()
        };
        let (rows, skipped) = compute(&config).unwrap();
        assert_eq!(rows.len(), 54);
        assert!(skipped.is_empty());
        assert!(rows.windows(2).all(|w| (w[0].alpha, w[0].et) < (w[1].alpha, w[1].et)));
        assert_eq!(compute(&config).unwrap().0, rows);
    }

    #[test]
    fn oracle_override_is_enforced() {
        let mut config = RunConfig {
            alpha_grid: Grid { min: 0.3, max: 1.2, count: 8 },
            et_grid: Grid { min: 0.1, max: 6.0, count: 8 },
            ..RunConfig::default()
        };
        config.tolerance_overrides.insert("oracle".into(), 1e-300);
        assert!(matches!(compute(&config), Err(CliError::Tolerance { .. })));
    }
}
