use std::process::ExitCode;

use clap::Parser;
use ptent_cli::{run, selftest, Args, CliError, RunConfig};

fn main() -> ExitCode {
    let args = Args::parse();
    let env_out = std::env::var_os("PTENT_OUT").map(Into::into);
    match execute(&args, env_out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("ptent: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn execute(args: &Args, env_out: Option<std::path::PathBuf>) -> Result<(), CliError> {
    let config = RunConfig::resolve(args, env_out)?;
    if args.selftest {
        let report = selftest::run(&config.tolerances());
        for c in &report.checks {
            println!("{} {} ({})", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
        }
        println!(
            "selftest: {}/{} checks passed in {:.2}s",
            report.checks.iter().filter(|c| c.passed).count(),
            report.checks.len(),
            report.seconds
        );
        return match report.first_failure() {
            Some(c) => Err(CliError::SelftestFailed(c.name.to_string())),
            None => Ok(()),
        };
    }
    let summary = run(&config)?;
    for (alpha, et) in &summary.skipped {
        eprintln!("ptent: skipped α={alpha}, Et={et}: K denominator vanishes");
    }
    println!("{summary}");
    Ok(())
}
