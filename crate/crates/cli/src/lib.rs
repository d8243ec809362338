//! Library half of the `kspectra` command: argument types, analysis
//! drivers and report encoders. `main.rs` only parses, runs and prints.

pub mod commands;
pub mod config;
pub mod report;
pub mod selfcheck;

use thiserror::Error;

pub use commands::run;
pub use config::{Command, OutputFormat, RunConfig};
pub use report::{render, AnalysisReport};

/// Exit status for bad input: unreadable files, parse and format errors,
/// unknown datasets, and usage errors.
pub const EXIT_INPUT: i32 = 2;
/// Exit status for analysis failures and failed self-checks.
pub const EXIT_ANALYSIS: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(kspectra::Error),
    #[error("{0}")]
    Analysis(kspectra::Error),
}

impl From<kspectra::Error> for CliError {
    fn from(e: kspectra::Error) -> Self {
        use kspectra::Error as E;
        match e {
            E::Parse { .. } | E::Format(_) | E::Io(_) | E::UnknownDataset(_) => CliError::Input(e),
            E::Contract(_) | E::ResourceLimit(_) | E::UndefinedCorrelation(_) => CliError::Analysis(e),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Analysis(_) => EXIT_ANALYSIS,
        }
    }
}

impl AnalysisReport {
    /// 0 unless this is a failed self-check.
    pub fn exit_code(&self) -> i32 {
        match &self.result {
            report::Payload::SelfCheck(p) if !p.passed => EXIT_ANALYSIS,
            _ => 0,
        }
    }
}
