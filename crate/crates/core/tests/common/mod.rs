#![allow(dead_code)]

use kspectra::Graph;
use proptest::prelude::*;

/// Random simple graph with `1..=max_n` vertices and edge density drawn
/// from `[lo, hi]`.
pub fn graph_strategy(max_n: usize, lo: f64, hi: f64) -> impl Strategy<Value = Graph> {
    (1..=max_n, lo..=hi).prop_flat_map(|(n, p)| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(proptest::bool::weighted(p), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap().0
        })
    })
}

/// Nonnegative vector with entries in `[0, 1]`.
pub fn unit_vector(n: usize) -> impl Strategy<Value = Vec<f64>> {
    proptest::collection::vec(0.0..=1.0f64, n)
}

/// Per-vertex counts of simple cycles with length exactly `len`, found by
/// trying every cyclic ordering of every vertex subset.
pub fn brute_force_cycles(g: &Graph, len: usize) -> Vec<u64> {
    let n = g.n();
    let mut counts = vec![0u64; n];
    let mut subset = Vec::with_capacity(len);
    fn choose(g: &Graph, start: usize, len: usize, subset: &mut Vec<usize>, counts: &mut [u64]) {
        if subset.len() == len {
            count_orderings(g, subset, counts);
            return;
        }
        for v in start..g.n() {
            subset.push(v);
            choose(g, v + 1, len, subset, counts);
            subset.pop();
        }
    }
    fn count_orderings(g: &Graph, subset: &[usize], counts: &mut [u64]) {
        // Fix the smallest vertex first and permute the rest.
        let first = subset[0];
        let mut rest = subset[1..].to_vec();
        let mut found = 0u64;
        permute(&mut rest, 0, &mut |perm| {
            if perm[0] > perm[perm.len() - 1] {
                return;
            }
            let mut prev = first;
            for &v in perm.iter() {
                if !g.has_edge(prev, v) {
                    return;
                }
                prev = v;
            }
            if g.has_edge(prev, first) {
                found += 1;
            }
        });
        for &v in subset {
            counts[v] += found;
        }
    }
    fn permute(items: &mut Vec<usize>, at: usize, visit: &mut dyn FnMut(&[usize])) {
        if at == items.len() {
            visit(items);
            return;
        }
        for i in at..items.len() {
            items.swap(at, i);
            permute(items, at + 1, visit);
            items.swap(at, i);
        }
    }
    choose(g, 0, len, &mut subset, &mut counts);
    counts
}
