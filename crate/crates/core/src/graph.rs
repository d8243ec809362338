//! Immutable simple undirected graphs and basic structural queries.
//!
//! Vertices are dense `0..n` ids. Adjacency is stored in compressed sparse
//! row form with every neighbor list strictly sorted, which is what the
//! tensor kernel walks on every iteration.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};

/// A simple undirected graph: no self-loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
    labels: Vec<u64>,
}

/// Number of input edges discarded while building a [`Graph`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct DropCounts {
    pub self_loops: usize,
    pub duplicates: usize,
}

impl DropCounts {
    pub fn is_clean(&self) -> bool {
        self.self_loops == 0 && self.duplicates == 0
    }
}

impl Graph {
    /// Builds a graph on `n` vertices from an unordered edge list.
    ///
    /// Self-loops and repeated edges (in either orientation) are dropped and
    /// counted. Endpoints must be `< n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<(Graph, DropCounts)>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut drops = DropCounts::default();
        let mut pairs = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::contract(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                drops.self_loops += 1;
                continue;
            }
            pairs.push((u.min(v), u.max(v)));
        }
        pairs.sort_unstable();
        let before = pairs.len();
        pairs.dedup();
        drops.duplicates = before - pairs.len();
        Ok((Graph::from_unique_pairs(n, &pairs), drops))
    }

    /// `pairs` must be sorted, deduplicated, with `u < v < n`.
    fn from_unique_pairs(n: usize, pairs: &[(usize, usize)]) -> Graph {
        let mut degree = vec![0usize; n];
        for &(u, v) in pairs {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut cursor = offsets[..n].to_vec();
        let mut targets = vec![0usize; offsets[n]];
        for &(u, v) in pairs {
            targets[cursor[u]] = v;
            cursor[u] += 1;
            targets[cursor[v]] = u;
            cursor[v] += 1;
        }
        for i in 0..n {
            targets[offsets[i]..offsets[i + 1]].sort_unstable();
        }
        Graph {
            offsets,
            targets,
            labels: (0..n as u64).collect(),
        }
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Graph {
        Graph {
            offsets: vec![0; n + 1],
            targets: Vec::new(),
            labels: (0..n as u64).collect(),
        }
    }

    /// Replaces the reporting labels. Length must equal `n`.
    pub fn with_labels(mut self, labels: Vec<u64>) -> Result<Graph> {
        if labels.len() != self.n() {
            return Err(Error::contract(format!(
                "{} labels supplied for {} vertices",
                labels.len(),
                self.n()
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n() == 0
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n()).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n()).map(|v| self.degree(v)).max()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Original vertex labels from the input, one per internal id.
    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> u64 {
        self.labels[v]
    }

    /// Zero-based edge-list text, one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::with_capacity(self.m() * 8);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Relabels vertex `v` to `perm[v]`. Labels follow their vertices.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::contract("permutation is not a bijection on 0..n"));
        }
        let (g, _) = Graph::from_edges(n, self.edges().map(|(u, v)| (perm[u], perm[v])))?;
        let mut labels = vec![0; n];
        for v in 0..n {
            labels[perm[v]] = self.labels[v];
        }
        g.with_labels(labels)
    }
}

/// A sorted set of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    /// Validates that every id is `< n`; duplicates are collapsed.
    pub fn new(mut ids: Vec<usize>, n: usize) -> Result<VertexSet> {
        if let Some(&bad) = ids.iter().find(|&&v| v >= n) {
            return Err(Error::contract(format!(
                "vertex {bad} out of range for {n} vertices"
            )));
        }
        ids.sort_unstable();
        ids.dedup();
        Ok(VertexSet(ids))
    }

    pub fn all(n: usize) -> VertexSet {
        VertexSet((0..n).collect())
    }

    pub(crate) fn from_sorted(ids: Vec<usize>) -> VertexSet {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        VertexSet(ids)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut ids: Vec<usize> = iter.into_iter().collect();
        ids.sort_unstable();
        ids.dedup();
        VertexSet(ids)
    }
}

/// Maximal connected vertex sets, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    components_within(g, |_| true)
}

/// Connected components of the subgraph induced by vertices where `keep`
/// is true. Vertices outside are not reported.
pub(crate) fn components_within(g: &Graph, keep: impl Fn(usize) -> bool) -> Vec<VertexSet> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] || !keep(start) {
            continue;
        }
        seen[start] = true;
        queue.push_back(start);
        let mut members = Vec::new();
        while let Some(v) = queue.pop_front() {
            members.push(v);
            for &u in g.neighbors(v) {
                if !seen[u] && keep(u) {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        members.sort_unstable();
        out.push(VertexSet::from_sorted(members));
    }
    out
}

/// Subgraph induced by `s`, relabelled to `0..|s|` in increasing id order.
///
/// Returns the subgraph and the map from new ids back to ids of `g`.
pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
    let n = g.n();
    if let Some(bad) = s.iter().find(|&v| v >= n) {
        return Err(Error::contract(format!(
            "vertex {bad} out of range for {n} vertices"
        )));
    }
    let mapping: Vec<usize> = s.iter().collect();
    let mut local = vec![usize::MAX; n];
    for (new, &old) in mapping.iter().enumerate() {
        local[old] = new;
    }
    let mut pairs = Vec::new();
    for (new_u, &old_u) in mapping.iter().enumerate() {
        for &old_v in g.neighbors(old_u) {
            let new_v = local[old_v];
            if new_v != usize::MAX && new_u < new_v {
                pairs.push((new_u, new_v));
            }
        }
    }
    pairs.sort_unstable();
    let mut sub = Graph::from_unique_pairs(mapping.len(), &pairs);
    sub.labels = mapping.iter().map(|&v| g.labels[v]).collect();
    Ok((sub, mapping))
}
