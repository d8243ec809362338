use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Enumeration stops with a resource error past this many cycles.
pub const MAX_ENUMERATED_CYCLES: u64 = 1_000_000_000;

/// Per-vertex counts of simple cycles of each length `3..=max_len`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleCounts {
    pub max_len: usize,
    /// `exact[l - 3][v]` is the number of cycles of length exactly `l`
    /// through `v`.
    pub exact: Vec<Vec<u64>>,
}

impl CycleCounts {
    /// Cycles of length at most `len` through each vertex.
    pub fn cumulative(&self, len: usize) -> Vec<u64> {
        assert!((3..=self.max_len).contains(&len), "length {len} not counted");
        let n = self.exact[0].len();
        (0..n)
            .map(|v| self.exact[..=len - 3].iter().map(|row| row[v]).sum())
            .collect()
    }

    /// `C_L` for `L = max_len`.
    pub fn counts(&self) -> Vec<u64> {
        self.cumulative(self.max_len)
    }

    /// Number of distinct cycles of length exactly `len` in the graph.
    pub fn total(&self, len: usize) -> u64 {
        self.exact[len - 3].iter().sum::<u64>() / len as u64
    }
}

struct Search<'a> {
    g: &'a Graph,
    anchor: usize,
    max_len: usize,
    path: Vec<usize>,
    on_path: Vec<bool>,
    counts: &'a mut [Vec<u64>],
    found: u64,
}

impl Search<'_> {
    fn extend(&mut self, v: usize) {
        for &u in self.g.neighbors(v) {
            if u == self.anchor {
                let len = self.path.len();
                // Each cycle is seen twice, once per direction; keep the
                // walk whose second vertex is smaller than its last.
                if len >= 3 && self.path[1] < self.path[len - 1] {
                    for &w in &self.path {
                        self.counts[len - 3][w] += 1;
                    }
                    self.found += 1;
                }
            } else if u > self.anchor && !self.on_path[u] && self.path.len() < self.max_len {
                self.on_path[u] = true;
                self.path.push(u);
                self.extend(u);
                self.path.pop();
                self.on_path[u] = false;
            }
        }
    }
}

/// Counts simple cycles of length 3 to `max_len` through every vertex.
///
/// Every cycle is enumerated once from its smallest vertex by a depth-bounded
/// search that only visits larger vertices.
pub fn cycle_counts(g: &Graph, max_len: usize) -> Result<CycleCounts> {
    if !(3..=5).contains(&max_len) {
        return Err(Error::contract(format!("cycle length bound must be 3, 4 or 5, got {max_len}")));
    }
    let n = g.n();
    let rows = max_len - 2;
    let total = AtomicU64::new(0);
    let exact = (0..n)
        .into_par_iter()
        .try_fold(
            || (vec![vec![0u64; n]; rows], vec![false; n]),
            |(mut counts, mut on_path), anchor| {
                on_path[anchor] = true;
                let mut search = Search {
                    g,
                    anchor,
                    max_len,
                    path: vec![anchor],
                    on_path,
                    counts: &mut counts,
                    found: 0,
                };
                search.extend(anchor);
                let found = search.found;
                let mut on_path = std::mem::take(&mut search.on_path);
                on_path[anchor] = false;
                if total.fetch_add(found, Ordering::Relaxed) + found > MAX_ENUMERATED_CYCLES {
                    return Err(Error::ResourceLimit(format!(
                        "more than {MAX_ENUMERATED_CYCLES} cycles of length <= {max_len}"
                    )));
                }
                Ok((counts, on_path))
            },
        )
        .map(|r| r.map(|(counts, _)| counts))
        .try_reduce(
            || vec![vec![0u64; n]; rows],
            |mut a, b| {
                for (ra, rb) in a.iter_mut().zip(b) {
                    ra.iter_mut().zip(rb).for_each(|(x, y)| *x += y);
                }
                Ok(a)
            },
        )?;
    Ok(CycleCounts { max_len, exact })
}

/// Triangles through each vertex, by intersecting sorted neighbor lists.
pub fn triangle_oracle(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|i| {
            let ni = g.neighbors(i);
            let mut closed = 0u64;
            for &j in ni {
                let nj = g.neighbors(j);
                let (mut a, mut b) = (0, 0);
                while a < ni.len() && b < nj.len() {
                    match ni[a].cmp(&nj[b]) {
                        std::cmp::Ordering::Less => a += 1,
                        std::cmp::Ordering::Greater => b += 1,
                        std::cmp::Ordering::Equal => {
                            closed += 1;
                            a += 1;
                            b += 1;
                        }
                    }
                }
            }
            closed / 2
        })
        .collect()
}
