use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use kspectra_cli::{render, run, RunConfig, EXIT_INPUT};

fn main() -> ExitCode {
    let cfg = match RunConfig::try_parse() {
        Ok(cfg) => cfg,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT as u8 } else { 0 });
        }
    };
    match run(&cfg) {
        Ok(report) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(render(&report, cfg.output).as_bytes()).is_err() {
                return ExitCode::FAILURE;
            }
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
