//! Vertex centralities, short-cycle counts and rank correlation.

mod centrality;
mod correlation;
mod cycles;

pub use centrality::{
    coreness_centrality, degree_centrality, eigenvector_centrality, k_order_eigenvector_centrality,
    CentralityTable, Measure,
};
pub use correlation::{average_ranks, correlation_report, spearman, CorrelationPair, CorrelationReport};
pub use cycles::{cycle_counts, triangle_oracle, CycleCounts, MAX_ENUMERATED_CYCLES};
