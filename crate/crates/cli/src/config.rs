use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kspectra::{Indexing, Norm, SpectralConfig, SpectralMode};
use serde::Serialize;

/// Spectral k-core analysis of simple undirected graphs.
#[derive(Debug, Clone, Parser)]
#[command(name = "kspectra", version, about)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Report encoding.
    #[arg(long = "out", value_enum, default_value_t = OutputFormat::Table, global = true)]
    pub output: OutputFormat,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Peel to the k-core and report waves and membership.
    Core {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
    },
    /// Spectral radius and Perron vector of the k-adjacency tensor.
    Spectral {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[command(flatten)]
        spectral: SpectralArgs,
    },
    /// Degree, coreness, eigenvector and k-th order eigenvector centrality.
    Centrality {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[command(flatten)]
        spectral: SpectralArgs,
    },
    /// Per-vertex counts of cycles of length 3 up to --max-len.
    Cycles {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(3..=5))]
        max_len: u32,
    },
    /// Spearman correlations between per-vertex measures.
    Compare {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        /// Comma-separated list from dc, cc, ec, kec, kec<k>, c3, c4, c5.
        #[arg(long, default_value = "dc,cc,ec,kec")]
        measures: String,
        #[command(flatten)]
        spectral: SpectralArgs,
    },
    /// Run the built-in oracle suite on random graphs.
    #[command(hide = true)]
    SelfCheck {
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        /// Random graphs per check.
        #[arg(long, default_value_t = 100)]
        graphs: usize,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Core { .. } => "core",
            Command::Spectral { .. } => "spectral",
            Command::Centrality { .. } => "centrality",
            Command::Cycles { .. } => "cycles",
            Command::Compare { .. } => "compare",
            Command::SelfCheck { .. } => "self-check",
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// Graph file, or the name of a bundled dataset (`karate`).
    #[arg(long, required_unless_present = "dataset")]
    pub input: Option<PathBuf>,

    /// Bundled dataset to analyse instead of a file.
    #[arg(long, conflicts_with = "input")]
    pub dataset: Option<String>,

    #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
    pub format: FormatArg,

    /// Index base of edge-list ids.
    #[arg(long, value_enum, default_value_t = IndexingArg::Auto)]
    pub indexing: IndexingArg,
}

#[derive(Debug, Clone, Args)]
pub struct SpectralArgs {
    #[arg(long, value_enum, default_value_t = ModeArg::PerComponent)]
    pub mode: ModeArg,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long, default_value_t = 10_000)]
    pub max_iters: usize,
    #[arg(long, value_enum, default_value_t = NormArg::L2)]
    pub norm: NormArg,
}

impl SpectralArgs {
    pub fn config(&self, k: usize) -> SpectralConfig {
        SpectralConfig::new(k)
            .with_tol(self.tol)
            .with_max_iters(self.max_iters)
            .with_norm(self.norm.into())
            .with_mode(self.mode.into())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FormatArg {
    Auto,
    Edgelist,
    Mtx,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IndexingArg {
    Auto,
    Zero,
    One,
}

impl From<IndexingArg> for Indexing {
    fn from(v: IndexingArg) -> Self {
        match v {
            IndexingArg::Auto => Indexing::Auto,
            IndexingArg::Zero => Indexing::Zero,
            IndexingArg::One => Indexing::One,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    PerComponent,
    Naive,
}

impl From<ModeArg> for SpectralMode {
    fn from(v: ModeArg) -> Self {
        match v {
            ModeArg::PerComponent => SpectralMode::PerComponent,
            ModeArg::Naive => SpectralMode::NaiveWholeGraph,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NormArg {
    L1,
    L2,
    Linf,
}

impl From<NormArg> for Norm {
    fn from(v: NormArg) -> Self {
        match v {
            NormArg::L1 => Norm::L1,
            NormArg::L2 => Norm::L2,
            NormArg::Linf => Norm::Linf,
        }
    }
}
