//! Run configuration: defaults, a flat `key = value` file, then flags.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, PI};
use std::fs;
use std::path::{Path, PathBuf};

use clap::Parser;
use ptent::experiments::{linspace, Scenario, SweepSpec};
use ptent::{EXACT_TOL, ORACLE_TOL, PRECONDITION_TOL};

use crate::CliError;

/// Output directory when neither flags, file nor `PTENT_OUT` give one.
pub const DEFAULT_OUT: &str = "ptent-out";

#[derive(Debug, Clone, Default, Parser)]
#[command(
    name = "ptent",
    version,
    about = "Entanglement of a Bell pair under a local PT-symmetric unitary: sweeps and self-test",
    allow_negative_numbers = true
)]
pub struct Args {
    /// Scenario to sweep: bell, pihalf, singlet or signal
    #[arg(long)]
    pub scenario: Option<String>,

    #[arg(long)]
    pub alpha_min: Option<f64>,
    #[arg(long)]
    pub alpha_max: Option<f64>,
    /// Number of α grid points (inclusive of both ends)
    #[arg(long)]
    pub alpha_steps: Option<usize>,

    #[arg(long)]
    pub et_min: Option<f64>,
    #[arg(long)]
    pub et_max: Option<f64>,
    /// Number of Et grid points (inclusive of both ends)
    #[arg(long)]
    pub et_steps: Option<usize>,

    /// Output directory (default: $PTENT_OUT, else ./ptent-out)
    #[arg(long = "out", value_name = "DIR")]
    pub out: Option<PathBuf>,

    /// Also write an SVG plot
    #[arg(long)]
    pub svg: bool,

    /// Flat key = value file with the same keys as the flags
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,

    /// Run the invariant suite and acceptance grid instead of a sweep
    #[arg(long)]
    pub selftest: bool,

    /// Override a tolerance: precondition, oracle, exact or all
    #[arg(long = "tolerance", value_name = "KEY=VALUE")]
    pub tolerance: Vec<String>,

    /// Logarithm base for the entropy column
    #[arg(long)]
    pub log_base: Option<f64>,
}

/// Inclusive evenly spaced grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl Grid {
    pub fn values(&self) -> Vec<f64> {
        linspace(self.min, self.max, self.count)
    }

    fn validate(&self, prefix: &str) -> Result<(), CliError> {
        if !self.min.is_finite() {
            return Err(invalid(format!("{prefix}_min"), "must be finite"));
        }
        if !self.max.is_finite() {
            return Err(invalid(format!("{prefix}_max"), "must be finite"));
        }
        if self.count == 0 {
            return Err(invalid(format!("{prefix}_steps"), "must be at least 1, the grid is empty"));
        }
        if self.max < self.min {
            return Err(invalid(format!("{prefix}_max"), format!("{} is below {prefix}_min {}", self.max, self.min)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub precondition: f64,
    pub oracle: f64,
    pub exact: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            precondition: PRECONDITION_TOL,
            oracle: ORACLE_TOL,
            exact: EXACT_TOL,
        }
    }
}

impl Tolerances {
    pub fn with_overrides(overrides: &BTreeMap<String, f64>) -> Self {
        let mut tol = Self::default();
        // "all" first so specific keys win.
        if let Some(&v) = overrides.get("all") {
            tol = Self { precondition: v, oracle: v, exact: v };
        }
        for (key, &v) in overrides {
            match key.as_str() {
                "precondition" => tol.precondition = v,
                "oracle" => tol.oracle = v,
                "exact" => tol.exact = v,
                _ => {}
            }
        }
        tol
    }
}

const TOLERANCE_KEYS: [&str; 4] = ["precondition", "oracle", "exact", "all"];

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub scenario: Scenario,
    pub alpha_grid: Grid,
    pub et_grid: Grid,
    pub output_dir: PathBuf,
    pub emit_svg: bool,
    pub log_base: f64,
    pub tolerance_overrides: BTreeMap<String, f64>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            scenario: Scenario::BellEvolution,
            alpha_grid: Grid { min: 0.0, max: 1.4, count: 15 },
            et_grid: Grid { min: 0.0, max: 2.0 * PI, count: 25 },
            output_dir: PathBuf::from(DEFAULT_OUT),
            emit_svg: false,
            log_base: 2.0,
            tolerance_overrides: BTreeMap::new(),
        }
    }
}

impl RunConfig {
    /// Defaults, then `env_out`, then the config file, then flags.
    pub fn resolve(args: &Args, env_out: Option<PathBuf>) -> Result<Self, CliError> {
        let mut config = RunConfig::default();
        if let Some(dir) = env_out {
            config.output_dir = dir;
        }
        if let Some(path) = &args.config {
            let text = fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            config.apply_file(&text, path)?;
        }
        config.apply_args(args)?;
        config.validate()?;
        Ok(config)
    }

    fn apply_file(&mut self, text: &str, path: &Path) -> Result<(), CliError> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(invalid(
                    "config",
                    format!("{}:{}: expected key = value", path.display(), lineno + 1),
                ));
            };
            self.set(&key.trim().replace('-', "_"), value.trim())?;
        }
        Ok(())
    }

    fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        match key {
            "scenario" => self.scenario = parse_scenario(value)?,
            "alpha_min" => self.alpha_grid.min = parse_num(key, value)?,
            "alpha_max" => self.alpha_grid.max = parse_num(key, value)?,
            "alpha_steps" => self.alpha_grid.count = parse_num(key, value)?,
            "et_min" => self.et_grid.min = parse_num(key, value)?,
            "et_max" => self.et_grid.max = parse_num(key, value)?,
            "et_steps" => self.et_grid.count = parse_num(key, value)?,
            "out" | "output_dir" => self.output_dir = PathBuf::from(value),
            "svg" | "emit_svg" => self.emit_svg = parse_num(key, value)?,
            "log_base" => self.log_base = parse_num(key, value)?,
            _ => match key.strip_prefix("tolerance.") {
                Some(tol_key) => self.set_tolerance(tol_key, value)?,
                None => return Err(invalid(key, "unknown configuration key")),
            },
        }
        Ok(())
    }

    fn set_tolerance(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        let field = format!("tolerance.{key}");
        if !TOLERANCE_KEYS.contains(&key) {
            return Err(invalid(field, "expected one of precondition, oracle, exact, all"));
        }
        let v: f64 = parse_num(&field, value)?;
        self.tolerance_overrides.insert(key.to_string(), v);
        Ok(())
    }

    fn apply_args(&mut self, args: &Args) -> Result<(), CliError> {
        if let Some(s) = &args.scenario {
            self.scenario = parse_scenario(s)?;
        }
        let grid_flags = [
            (&mut self.alpha_grid, args.alpha_min, args.alpha_max, args.alpha_steps),
            (&mut self.et_grid, args.et_min, args.et_max, args.et_steps),
        ];
        for (grid, min, max, steps) in grid_flags {
            grid.min = min.unwrap_or(grid.min);
            grid.max = max.unwrap_or(grid.max);
            grid.count = steps.unwrap_or(grid.count);
        }
        if let Some(out) = &args.out {
            self.output_dir = out.clone();
        }
        self.emit_svg |= args.svg;
        if let Some(b) = args.log_base {
            self.log_base = b;
        }
        for entry in &args.tolerance {
            let Some((key, value)) = entry.split_once('=') else {
                return Err(invalid("tolerance", format!("'{entry}' is not KEY=VALUE")));
            };
            self.set_tolerance(key.trim(), value.trim())?;
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), CliError> {
        self.alpha_grid.validate("alpha")?;
        self.et_grid.validate("et")?;
        let limit = FRAC_PI_2 - 1e-6;
        if !(self.alpha_grid.min.abs() < limit) {
            return Err(invalid("alpha_min", format!("|α| must be below π/2 − 1e-6, got {}", self.alpha_grid.min)));
        }
        if !(self.alpha_grid.max.abs() < limit) {
            return Err(invalid("alpha_max", format!("|α| must be below π/2 − 1e-6, got {}", self.alpha_grid.max)));
        }
        if !(self.log_base.is_finite() && self.log_base > 0.0 && self.log_base != 1.0) {
            return Err(invalid("log_base", format!("must be positive and not 1, got {}", self.log_base)));
        }
        for (key, v) in &self.tolerance_overrides {
            if !(v.is_finite() && *v > 0.0) {
                return Err(invalid(format!("tolerance.{key}"), format!("must be positive, got {v}")));
            }
        }
        self.sweep_spec()
            .validate()
            .map_err(|e| invalid("grid", e.to_string()))
    }

    pub fn tolerances(&self) -> Tolerances {
        Tolerances::with_overrides(&self.tolerance_overrides)
    }

    pub fn sweep_spec(&self) -> SweepSpec {
        SweepSpec {
            alpha_values: self.alpha_grid.values(),
            et_values: self.et_grid.values(),
            scenario: self.scenario,
        }
    }
}

fn invalid(field: impl Into<String>, reason: impl Into<String>) -> CliError {
    CliError::Config {
        field: field.into(),
        reason: reason.into(),
    }
}

fn parse_scenario(value: &str) -> Result<Scenario, CliError> {
    value
        .parse()
        .map_err(|_| invalid("scenario", format!("'{value}' is not one of bell, pihalf, singlet, signal")))
}

fn parse_num<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, CliError> {
    value
        .parse()
        .map_err(|_| invalid(key, format!("cannot parse '{value}'")))
}
