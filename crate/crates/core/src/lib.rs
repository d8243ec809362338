//! Spectral k-core analysis.
//!
//! A graph has a nonempty k-core exactly when the spectral radius of its
//! k-adjacency tensor is at least 1, and the tensor's Perron vector is
//! supported on that core. This crate computes both without ever building
//! the tensor, checks them against classical peeling, and provides the
//! centrality, cycle-count and rank-correlation tools used to study the
//! resulting k-th order eigenvector centrality.

pub mod datasets;
pub mod dense;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod peel;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::{connected_components, induced_subgraph, DropCounts, Graph, VertexSet};
pub use io::{parse_edge_list, parse_matrix_market, read_graph, GraphFormat, Indexing, ParsedGraph};
pub use peel::{coreness, peel, CorenessTable, PeelResult};
pub use spectra::{
    apply_k, core_exists_spectral, eigen_residual, nqz_iterate, shifted_apply, spectral_radius_k,
    spectral_support, Bounds, ComponentSpectrum, CoreExistence, Norm, SpectralConfig, SpectralMode,
    SpectralResult,
};
