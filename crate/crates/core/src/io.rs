//! Reading graphs from edge lists and Matrix Market coordinate files.

use std::collections::HashSet;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DropCounts, Graph};

/// How vertex ids in an edge list map to internal ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Indexing {
    Zero,
    One,
    /// One-based iff no token equals 0.
    #[default]
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphFormat {
    EdgeList,
    MatrixMarket,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" | "edges" | "txt" => Ok(GraphFormat::EdgeList),
            "mtx" | "matrixmarket" => Ok(GraphFormat::MatrixMarket),
            other => Err(Error::Format(format!("unknown graph format `{other}`"))),
        }
    }
}

impl GraphFormat {
    /// `.mtx` files and anything starting with a Matrix Market banner are
    /// Matrix Market; everything else is an edge list.
    pub fn detect(path: &Path, text: &str) -> GraphFormat {
        let by_ext = path
            .extension()
            .and_then(|e| e.to_str())
            .is_some_and(|e| e.eq_ignore_ascii_case("mtx"));
        if by_ext || text.trim_start().starts_with("%%MatrixMarket") {
            GraphFormat::MatrixMarket
        } else {
            GraphFormat::EdgeList
        }
    }
}

/// A graph plus what the parser had to discard to make it simple.
#[derive(Debug, Clone)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub drops: DropCounts,
}

fn is_comment(line: &str) -> bool {
    line.starts_with('#') || line.starts_with('%')
}

fn parse_id(token: &str, line: usize) -> Result<u64> {
    let value: i64 = token
        .parse()
        .map_err(|_| Error::parse(line, format!("`{token}` is not an integer vertex id")))?;
    u64::try_from(value).map_err(|_| Error::parse(line, format!("negative vertex id {value}")))
}

/// Parses whitespace-separated `u v` pairs, one per line.
///
/// Lines starting with `#` or `%` and blank lines are skipped. The vertex
/// count is the largest id plus one, after removing the index base.
pub fn parse_edge_list(text: &str, indexing: Indexing) -> Result<ParsedGraph> {
    let mut raw = Vec::new();
    let mut saw_zero = false;
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.trim();
        if line.is_empty() || is_comment(line) {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::parse(
                lineno,
                format!("expected 2 vertex ids, found {} tokens", tokens.len()),
            ));
        }
        let u = parse_id(tokens[0], lineno)?;
        let v = parse_id(tokens[1], lineno)?;
        saw_zero |= u == 0 || v == 0;
        raw.push((u, v, lineno));
    }

    let base = match indexing {
        Indexing::Zero => 0,
        Indexing::One => 1,
        Indexing::Auto if saw_zero => 0,
        Indexing::Auto => 1,
    };
    let mut edges = Vec::with_capacity(raw.len());
    let mut max_id = None;
    for (u, v, lineno) in raw {
        if u < base || v < base {
            return Err(Error::parse(lineno, "vertex id 0 in one-based input"));
        }
        let (u, v) = ((u - base) as usize, (v - base) as usize);
        max_id = max_id.max(Some(u.max(v)));
        edges.push((u, v));
    }
    let n = max_id.map_or(0, |m| m + 1);
    let (graph, drops) = Graph::from_edges(n, edges)?;
    let graph = graph.with_labels((0..n as u64).map(|i| i + base).collect())?;
    Ok(ParsedGraph { graph, drops })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum MtxField {
    Pattern,
    Real,
    Integer,
}

/// Parses a `coordinate` Matrix Market file as an unweighted graph.
///
/// Values are ignored, `general` matrices are symmetrized and diagonal
/// entries are dropped as self-loops. The declared dimension fixes `n`, so
/// isolated vertices survive.
pub fn parse_matrix_market(text: &str) -> Result<ParsedGraph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));

    let (_, banner) = lines
        .next()
        .ok_or_else(|| Error::Format("empty Matrix Market input".into()))?;
    let banner: Vec<String> = banner.split_whitespace().map(str::to_ascii_lowercase).collect();
    if banner.len() != 5 || banner[0] != "%%matrixmarket" || banner[1] != "matrix" {
        return Err(Error::Format(format!(
            "expected `%%MatrixMarket matrix coordinate <field> <symmetry>`, got `{}`",
            banner.join(" ")
        )));
    }
    if banner[2] != "coordinate" {
        return Err(Error::Format(format!("`{}` storage is not supported", banner[2])));
    }
    let field = match banner[3].as_str() {
        "pattern" => MtxField::Pattern,
        "real" => MtxField::Real,
        "integer" => MtxField::Integer,
        other => return Err(Error::Format(format!("`{other}` field is not supported"))),
    };
    let symmetric = match banner[4].as_str() {
        "symmetric" => true,
        "general" => false,
        other => return Err(Error::Format(format!("`{other}` symmetry is not supported"))),
    };

    let mut body = lines.filter(|(_, l)| !l.is_empty() && !l.starts_with('%'));
    let (size_line, size) = body
        .next()
        .ok_or_else(|| Error::Format("missing size line".into()))?;
    let dims: Vec<usize> = size
        .split_whitespace()
        .map(|t| t.parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::parse(size_line, "size line must hold three nonnegative integers"))?;
    let [rows, cols, nnz] = dims[..] else {
        return Err(Error::parse(size_line, "size line must hold three nonnegative integers"));
    };
    if rows != cols {
        return Err(Error::Format(format!(
            "adjacency matrix must be square, got {rows}x{cols}"
        )));
    }
    let n = rows;

    let arity = if field == MtxField::Pattern { 2 } else { 3 };
    let mut edges = Vec::with_capacity(nnz);
    let mut seen_ordered = HashSet::new();
    let mut general_dups = 0usize;
    let mut count = 0usize;
    for (lineno, line) in body {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != arity {
            return Err(Error::parse(
                lineno,
                format!("expected {arity} tokens, found {}", tokens.len()),
            ));
        }
        let i = parse_id(tokens[0], lineno)? as usize;
        let j = parse_id(tokens[1], lineno)? as usize;
        if i == 0 || j == 0 || i > n || j > n {
            return Err(Error::parse(
                lineno,
                format!("entry ({i}, {j}) outside declared {n}x{n} bounds"),
            ));
        }
        match field {
            MtxField::Pattern => {}
            MtxField::Real => {
                tokens[2]
                    .parse::<f64>()
                    .map_err(|_| Error::parse(lineno, format!("`{}` is not a real value", tokens[2])))?;
            }
            MtxField::Integer => {
                tokens[2]
                    .parse::<i64>()
                    .map_err(|_| Error::parse(lineno, format!("`{}` is not an integer value", tokens[2])))?;
            }
        }
        if !symmetric && i != j && !seen_ordered.insert((i, j)) {
            general_dups += 1;
            continue;
        }
        edges.push((i - 1, j - 1));
        count += 1;
    }
    if count + general_dups != nnz {
        return Err(Error::Format(format!(
            "size line declares {nnz} entries but {} were found",
            count + general_dups
        )));
    }

    let (graph, mut drops) = Graph::from_edges(n, edges)?;
    if !symmetric {
        // (i, j) and (j, i) both present is the expected encoding of one
        // undirected edge, not a duplicate.
        drops.duplicates = general_dups;
    }
    let graph = graph.with_labels((1..=n as u64).collect())?;
    Ok(ParsedGraph { graph, drops })
}

/// Reads a graph file, choosing the parser from `format` or auto-detecting.
pub fn read_graph(path: &Path, format: Option<GraphFormat>, indexing: Indexing) -> Result<ParsedGraph> {
    let text = fs::read_to_string(path)?;
    match format.unwrap_or_else(|| GraphFormat::detect(path, &text)) {
        GraphFormat::EdgeList => parse_edge_list(&text, indexing),
        GraphFormat::MatrixMarket => parse_matrix_market(&text),
    }
}
