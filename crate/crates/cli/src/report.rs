//! Report types and their CSV, JSON and plain-text encodings.
//!
//! JSON field order follows struct declaration order, so identical inputs
//! give byte-identical reports. CSV outputs start with `# warning:` comment
//! lines when there are warnings.

use std::fmt::Write as _;

use kspectra::metrics::CorrelationPair;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::config::OutputFormat;

pub const SCHEMA_VERSION: u32 = 1;
pub const NO_CORE_MESSAGE: &str = "No k-core exists";

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub config: ConfigEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphSummary>,
    pub warnings: Vec<String>,
    pub result: Payload,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ConfigEcho {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub format: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<kspectra::SpectralMode>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_iters: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub norm: Option<kspectra::Norm>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_len: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub measures: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphSummary {
    pub source: String,
    pub n: usize,
    pub m: usize,
    pub components: usize,
    pub dropped_self_loops: usize,
    pub dropped_duplicates: usize,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Payload {
    Core(CorePayload),
    Spectral(SpectralPayload),
    Centrality(CentralityPayload),
    Cycles(CyclesPayload),
    Compare(ComparePayload),
    SelfCheck(SelfCheckPayload),
}

#[derive(Debug, Clone, Serialize)]
pub struct CorePayload {
    pub k: usize,
    pub core_exists: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<&'static str>,
    pub core_size: usize,
    pub core_is_connected: bool,
    pub wave_sizes: Vec<usize>,
    pub core: Vec<u64>,
    pub waves: Vec<Vec<u64>>,
    /// Per vertex: label, wave index (`None` for core vertices).
    #[serde(skip)]
    pub membership: Vec<(u64, Option<usize>)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentReport {
    pub vertices: Vec<u64>,
    pub rho: f64,
    pub lower: f64,
    pub upper: f64,
    pub iterations: usize,
    pub converged: bool,
    /// Carries the global Perron vector.
    pub winner: bool,
    /// Within-component Perron vector keyed by vertex label.
    pub vector: Map<String, Value>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectralPayload {
    pub k: usize,
    pub rho: f64,
    pub core_exists: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<&'static str>,
    pub converged: bool,
    pub iterations: usize,
    pub lower: f64,
    pub upper: f64,
    pub support: Vec<u64>,
    pub components: Vec<ComponentReport>,
    pub vector: Map<String, Value>,
    #[serde(skip)]
    pub rows: Vec<(u64, f64)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CentralityRow {
    pub vertex: u64,
    pub dc: usize,
    pub cc: usize,
    pub ec: f64,
    pub kec: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CentralityPayload {
    pub k: usize,
    pub rho: f64,
    pub no_core: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<&'static str>,
    pub rows: Vec<CentralityRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CyclesPayload {
    pub max_len: usize,
    /// Distinct cycles of each exact length, keyed `c3`, `c4`, ...
    pub totals: Map<String, Value>,
    pub columns: Vec<String>,
    /// Cumulative counts `C_3..C_max_len` per vertex.
    pub rows: Vec<(u64, Vec<u64>)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComparePayload {
    pub k: usize,
    pub measures: Vec<String>,
    pub pairs: Vec<CorrelationPair>,
    /// Square matrix in `measures` order; `null` where undefined.
    pub matrix: Vec<Vec<Option<f64>>>,
    pub vertices: Vec<u64>,
    /// Raw score columns in vertex order, for plotting.
    pub scores: Map<String, Value>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SelfCheckPayload {
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<CheckOutcome>,
}

/// Expands unordered pairs into a symmetric matrix with a unit diagonal.
pub fn correlation_matrix(measures: &[String], pairs: &[CorrelationPair]) -> Vec<Vec<Option<f64>>> {
    let index = |name: &str| measures.iter().position(|m| m == name).expect("pair names a listed measure");
    let mut m = vec![vec![None; measures.len()]; measures.len()];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Some(1.0);
    }
    for pair in pairs {
        let (a, b) = (index(&pair.a), index(&pair.b));
        m[a][b] = pair.r_s;
        m[b][a] = pair.r_s;
    }
    m
}

/// Score map keyed by vertex label, in vertex order.
pub fn label_map(labels: impl IntoIterator<Item = u64>, scores: impl IntoIterator<Item = f64>) -> Map<String, Value> {
    labels
        .into_iter()
        .zip(scores)
        .map(|(l, s)| (l.to_string(), Value::from(s)))
        .collect()
}

pub fn render(report: &AnalysisReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        OutputFormat::Csv => render_csv(report),
        OutputFormat::Table => render_table(report),
    }
}

fn fmt_opt(r: Option<f64>) -> String {
    r.map_or_else(String::new, |v| v.to_string())
}

fn render_csv(report: &AnalysisReport) -> String {
    let mut out = String::new();
    for w in &report.warnings {
        let _ = writeln!(out, "# warning: {w}");
    }
    match &report.result {
        Payload::Core(p) => {
            out.push_str("vertex,in_core,wave\n");
            for (label, wave) in &p.membership {
                let wave = wave.map_or_else(String::new, |w| w.to_string());
                let _ = writeln!(out, "{label},{},{wave}", u8::from(wave.is_empty()));
            }
        }
        Payload::Spectral(p) => {
            out.push_str("vertex,score\n");
            for (label, score) in &p.rows {
                let _ = writeln!(out, "{label},{score}");
            }
        }
        Payload::Centrality(p) => {
            let _ = writeln!(out, "vertex,dc,cc,ec,kec{}", p.k);
            for r in &p.rows {
                let _ = writeln!(out, "{},{},{},{},{}", r.vertex, r.dc, r.cc, r.ec, r.kec);
            }
        }
        Payload::Cycles(p) => {
            let _ = writeln!(out, "vertex,{}", p.columns.join(","));
            for (label, counts) in &p.rows {
                let cells: Vec<String> = counts.iter().map(u64::to_string).collect();
                let _ = writeln!(out, "{label},{}", cells.join(","));
            }
        }
        Payload::Compare(p) => {
            let _ = writeln!(out, "measure,{}", p.measures.join(","));
            for (name, row) in p.measures.iter().zip(&p.matrix) {
                let cells: Vec<String> = row.iter().map(|&r| fmt_opt(r)).collect();
                let _ = writeln!(out, "{name},{}", cells.join(","));
            }
        }
        Payload::SelfCheck(p) => {
            out.push_str("check,passed,detail\n");
            for c in &p.checks {
                let _ = writeln!(out, "{},{},\"{}\"", c.name, c.passed, c.detail.replace('"', "'"));
            }
        }
    }
    out
}

fn render_table(report: &AnalysisReport) -> String {
    let mut out = String::new();
    if let Some(g) = &report.graph {
        let _ = writeln!(
            out,
            "graph {}: n = {}, m = {}, {} component(s)",
            g.source, g.n, g.m, g.components
        );
    }
    match &report.result {
        Payload::Core(p) => {
            let _ = writeln!(out, "{}-core: {} vertices{}", p.k, p.core_size, if p.core_is_connected { ", connected" } else { "" });
            if let Some(msg) = p.message {
                let _ = writeln!(out, "{msg}");
            }
            let _ = writeln!(out, "waves: {:?}", p.wave_sizes);
            let _ = writeln!(out, "members: {:?}", p.core);
        }
        Payload::Spectral(p) => {
            let _ = writeln!(out, "rho_{} = {:.10} (bracket [{:.10}, {:.10}])", p.k, p.rho, p.lower - 1.0, p.upper - 1.0);
            let _ = writeln!(out, "converged: {} after {} iteration(s)", p.converged, p.iterations);
            if let Some(msg) = p.message {
                let _ = writeln!(out, "{msg}");
            }
            for c in &p.components {
                let _ = writeln!(out, "component of {} vertices: rho = {:.10}{}", c.vertices.len(), c.rho, if c.winner { " *" } else { "" });
            }
            let _ = writeln!(out, "{:>8}  score", "vertex");
            for (label, score) in &p.rows {
                let _ = writeln!(out, "{label:>8}  {score:.6}");
            }
        }
        Payload::Centrality(p) => {
            if let Some(msg) = p.message {
                let _ = writeln!(out, "{msg}");
            }
            let kec = format!("kec{}", p.k);
            let _ = writeln!(out, "{:>8} {:>5} {:>4} {:>10} {:>10}", "vertex", "dc", "cc", "ec", kec);
            for r in &p.rows {
                let _ = writeln!(out, "{:>8} {:>5} {:>4} {:>10.6} {:>10.6}", r.vertex, r.dc, r.cc, r.ec, r.kec);
            }
        }
        Payload::Cycles(p) => {
            let _ = write!(out, "{:>8}", "vertex");
            for c in &p.columns {
                let _ = write!(out, " {c:>10}");
            }
            out.push('\n');
            for (label, counts) in &p.rows {
                let _ = write!(out, "{label:>8}");
                for c in counts {
                    let _ = write!(out, " {c:>10}");
                }
                out.push('\n');
            }
        }
        Payload::Compare(p) => {
            for pair in &p.pairs {
                let r = pair.r_s.map_or_else(|| "undefined".to_string(), |r| format!("{r:.4}"));
                let _ = writeln!(out, "r_s({}, {}) = {r}", pair.a, pair.b);
            }
        }
        Payload::SelfCheck(p) => {
            for c in &p.checks {
                let _ = writeln!(out, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
            }
        }
    }
    for w in &report.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    out
}
