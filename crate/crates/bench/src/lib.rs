//! Seeded fixtures shared by the benchmarks.

use kspectra::generators::gnp;
use kspectra::Graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x6b73_7065;

/// `G(n, p)` with expected average degree `avg_degree`.
pub fn sparse_gnp(n: usize, avg_degree: f64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ n as u64);
    gnp(n, (avg_degree / (n as f64 - 1.0)).min(1.0), &mut rng)
}

/// Positive test vector that is not constant.
pub fn probe_vector(n: usize) -> Vec<f64> {
    (0..n).map(|i| 0.5 + ((i * 7919) % 1000) as f64 / 1000.0).collect()
}
