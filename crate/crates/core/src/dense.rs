//! Brute-force k-adjacency tensors for tiny graphs.
//!
//! Everything here materializes the full `n^(k+1)` array and contracts it
//! with nested loops. It exists to check [`crate::spectra`] and is kept
//! deliberately literal.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest number of entries [`build_dense`] will allocate.
pub const MAX_DENSE_ENTRIES: usize = 10_000_000;

/// Order `k + 1`, dimension `n`, stored row-major with the first index
/// slowest.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseTensor {
    k: usize,
    dim: usize,
    entries: Vec<f64>,
}

impl DenseTensor {
    pub fn order(&self) -> usize {
        self.k + 1
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    fn offset(&self, index: &[usize]) -> usize {
        index.iter().fold(0, |acc, &i| acc * self.dim + i)
    }

    /// Entry at a full `(k + 1)`-index.
    pub fn get(&self, index: &[usize]) -> f64 {
        assert_eq!(index.len(), self.order());
        self.entries[self.offset(index)]
    }
}

/// Advances `idx` as an odometer over `0..dim`; false once it wraps.
fn next_index(idx: &mut [usize], dim: usize) -> bool {
    for slot in idx.iter_mut().rev() {
        *slot += 1;
        if *slot < dim {
            return true;
        }
        *slot = 0;
    }
    false
}

fn factorial(k: usize) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

/// Builds the k-adjacency tensor entry by entry from its definition.
pub fn build_dense(g: &Graph, k: usize) -> Result<DenseTensor> {
    if k < 1 {
        return Err(Error::contract("tensor order requires k >= 1"));
    }
    let n = g.n();
    let size = (n as u128).checked_pow(k as u32 + 1).unwrap_or(u128::MAX);
    if size > MAX_DENSE_ENTRIES as u128 {
        return Err(Error::contract(format!(
            "dense tensor with {n}^{} entries exceeds the {MAX_DENSE_ENTRIES} entry guard",
            k + 1
        )));
    }
    let mut tensor = DenseTensor {
        k,
        dim: n,
        entries: vec![0.0; size as usize],
    };
    if n == 0 {
        return Ok(tensor);
    }
    let value = 1.0 / factorial(k);
    let mut idx = vec![0usize; k + 1];
    loop {
        let head = idx[0];
        let tail = &idx[1..];
        let all_neighbors = tail.iter().all(|&j| g.has_edge(head, j));
        let distinct = (0..idx.len()).all(|a| (a + 1..idx.len()).all(|b| idx[a] != idx[b]));
        if all_neighbors && distinct {
            let at = tensor.offset(&idx);
            tensor.entries[at] = value;
        }
        if !next_index(&mut idx, n) {
            break;
        }
    }
    Ok(tensor)
}

/// `A x^k` by summing `a[i, i2, ..] * x[i2] * ..` over every index.
pub fn dense_apply(t: &DenseTensor, x: &[f64]) -> Result<Vec<f64>> {
    if x.len() != t.dim {
        return Err(Error::contract(format!(
            "vector has length {} but tensor dimension is {}",
            x.len(),
            t.dim
        )));
    }
    let mut out = vec![0.0; t.dim];
    if t.dim == 0 {
        return Ok(out);
    }
    let mut idx = vec![0usize; t.k + 1];
    loop {
        let mut term = t.entries[t.offset(&idx)];
        for &j in &idx[1..] {
            term *= x[j];
        }
        out[idx[0]] += term;
        if !next_index(&mut idx, t.dim) {
            break;
        }
    }
    Ok(out)
}

/// Whether `A x^k = lambda x^[k]` holds to `tol` in every coordinate.
pub fn verify_eigenpair(t: &DenseTensor, lambda: f64, x: &[f64], tol: f64) -> Result<bool> {
    if x.iter().all(|&v| v == 0.0) {
        return Err(Error::contract("eigenvector must be nonzero"));
    }
    let ax = dense_apply(t, x)?;
    Ok(ax
        .iter()
        .zip(x)
        .all(|(&a, &xi)| (a - lambda * xi.powi(t.k as i32)).abs() <= tol))
}
