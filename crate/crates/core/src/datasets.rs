//! Datasets bundled with the crate.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{parse_edge_list, Indexing};

const KARATE: &str = include_str!("../data/karate.edges");

pub const NAMES: &[&str] = &["karate"];

/// Looks up a bundled graph by name.
pub fn bundled_dataset(name: &str) -> Result<Graph> {
    match name.to_ascii_lowercase().as_str() {
        "karate" | "zachary" => Ok(karate()),
        _ => Err(Error::UnknownDataset(name.to_string())),
    }
}

/// Zachary's karate club, 34 vertices and 78 edges, labelled 1..=34.
pub fn karate() -> Graph {
    parse_edge_list(KARATE, Indexing::One)
        .expect("bundled karate data parses")
        .graph
}
