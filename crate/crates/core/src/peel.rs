//! Combinatorial k-core machinery: synchronous peeling and coreness.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{components_within, Graph, VertexSet};

/// Outcome of peeling a graph down to its k-core.
///
/// `waves[i]` holds the vertices removed together in round `i`: every
/// vertex whose degree in the graph left after rounds `0..i` is below `k`.
/// Only nonempty waves are recorded, so a graph that is already its own
/// k-core has no waves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeelResult {
    pub k: usize,
    pub waves: Vec<VertexSet>,
    pub core: VertexSet,
    pub core_is_connected: bool,
}

impl PeelResult {
    pub fn core_exists(&self) -> bool {
        !self.core.is_empty()
    }

    /// Wave index of each removed vertex, `None` for core vertices.
    pub fn wave_of(&self, n: usize) -> Vec<Option<usize>> {
        let mut out = vec![None; n];
        for (i, wave) in self.waves.iter().enumerate() {
            for v in wave.iter() {
                out[v] = Some(i);
            }
        }
        out
    }
}

/// Peels `g` to its k-core in rounds. Runs in `O(n + m)`.
pub fn peel(g: &Graph, k: usize) -> Result<PeelResult> {
    if k < 1 {
        return Err(Error::contract("peeling order k must be at least 1"));
    }
    let n = g.n();
    let mut degree = g.degrees();
    let mut removed = vec![false; n];
    let mut waves = Vec::new();

    let mut current: Vec<usize> = (0..n).filter(|&v| degree[v] < k).collect();
    while !current.is_empty() {
        for &v in &current {
            removed[v] = true;
        }
        let mut next = Vec::new();
        for &v in &current {
            for &u in g.neighbors(v) {
                if !removed[u] {
                    degree[u] -= 1;
                    // Each vertex crosses below k exactly once.
                    if degree[u] == k - 1 {
                        next.push(u);
                    }
                }
            }
        }
        current.sort_unstable();
        waves.push(VertexSet::from_sorted(current));
        current = next;
    }

    let core = VertexSet::from_sorted((0..n).filter(|&v| !removed[v]).collect());
    let core_is_connected = components_within(g, |v| !removed[v]).len() == 1;
    Ok(PeelResult {
        k,
        waves,
        core,
        core_is_connected,
    })
}

/// Per-vertex core numbers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CorenessTable(Vec<usize>);

impl CorenessTable {
    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn get(&self, v: usize) -> usize {
        self.0[v]
    }

    /// Largest core number, 0 for an empty graph.
    pub fn degeneracy(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Vertices with core number at least `k`.
    pub fn core(&self, k: usize) -> VertexSet {
        VertexSet::from_sorted((0..self.0.len()).filter(|&v| self.0[v] >= k).collect())
    }
}

/// Core numbers via the bucket-queue degeneracy ordering: repeatedly
/// remove a vertex of minimum remaining degree.
pub fn coreness(g: &Graph) -> CorenessTable {
    let n = g.n();
    let mut degree = g.degrees();
    let max_deg = degree.iter().copied().max().unwrap_or(0);

    // bin[d] is the first slot of degree-d vertices in `order`.
    let mut bin = vec![0usize; max_deg + 1];
    for &d in &degree {
        bin[d] += 1;
    }
    let mut start = 0;
    for b in bin.iter_mut() {
        let count = *b;
        *b = start;
        start += count;
    }
    let mut order = vec![0usize; n];
    let mut pos = vec![0usize; n];
    {
        let mut next = bin.clone();
        for v in 0..n {
            pos[v] = next[degree[v]];
            order[pos[v]] = v;
            next[degree[v]] += 1;
        }
    }

    for i in 0..n {
        let v = order[i];
        for &u in g.neighbors(v) {
            if degree[u] > degree[v] {
                let du = degree[u];
                let pu = pos[u];
                let pw = bin[du];
                let w = order[pw];
                if u != w {
                    order.swap(pu, pw);
                    pos[u] = pw;
                    pos[w] = pu;
                }
                bin[du] += 1;
                degree[u] -= 1;
            }
        }
    }
    CorenessTable(degree)
}
