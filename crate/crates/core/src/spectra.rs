//! Spectra of the k-adjacency tensor.
//!
//! The k-adjacency tensor of a graph has order `k + 1` and entry `1/k!` at
//! `(i, j_1, ..., j_k)` whenever the `j`s are distinct neighbors of `i`.
//! Contracting it with `x` in its last `k` modes sums the `k!` orderings of
//! every k-subset of `N(i)`, which cancels the `1/k!`:
//!
//! ```text
//! (A x^k)_i = e_k(x_j : j in N(i))
//! ```
//!
//! where `e_k` is the degree-k elementary symmetric polynomial. The tensor is
//! therefore never built; [`apply_k`] evaluates `e_k` per adjacency list with
//! the usual `O(deg * k)` recurrence.
//!
//! The spectral radius `rho_k` is at least 1 exactly when the k-core is
//! nonempty, and the Perron vector is supported on the k-core (on all of it
//! when the core is connected). [`spectral_radius_k`] computes both with a
//! shifted power iteration on `B = A + I`, bracketing `rho + 1` between the
//! smallest and largest ratio `(B x^k)_i / x_i^k`.

use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{components_within, induced_subgraph, Graph, VertexSet};
use crate::peel::peel;

/// Vertex count above which the tensor kernel runs on the rayon pool.
const PARALLEL_MIN_VERTICES: usize = 1 << 14;

/// Slack below 1 accepted by [`core_exists_spectral`]; cycles and
/// `K_{k+1}` sit exactly on the boundary.
pub const EXISTENCE_EPS: f64 = 1e-6;

/// Default relative threshold for [`spectral_support`].
pub const SUPPORT_THRESHOLD: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Norm {
    L1,
    #[default]
    L2,
    Linf,
}

impl Norm {
    pub fn of(self, x: &[f64]) -> f64 {
        match self {
            Norm::L1 => x.iter().map(|v| v.abs()).sum(),
            Norm::L2 => x.iter().map(|v| v * v).sum::<f64>().sqrt(),
            Norm::Linf => x.iter().fold(0.0, |m, v| m.max(v.abs())),
        }
    }

    /// Scales `x` to unit norm. The zero vector is left alone.
    pub fn normalize(self, x: &mut [f64]) {
        let s = self.of(x);
        if s > 0.0 {
            x.iter_mut().for_each(|v| *v /= s);
        }
    }
}

impl FromStr for Norm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "l1" => Ok(Norm::L1),
            "l2" => Ok(Norm::L2),
            "linf" | "max" => Ok(Norm::Linf),
            other => Err(Error::contract(format!("unknown norm `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpectralMode {
    /// Peel to the k-core and iterate on each connected component, where
    /// the tensor is weakly irreducible.
    #[default]
    PerComponent,
    /// Iterate on the whole graph, exactly as the textbook algorithm does.
    NaiveWholeGraph,
}

impl FromStr for SpectralMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "per-component" | "per_component" => Ok(SpectralMode::PerComponent),
            "naive" | "naive-whole-graph" | "naive_whole_graph" => Ok(SpectralMode::NaiveWholeGraph),
            other => Err(Error::contract(format!("unknown spectral mode `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralConfig {
    pub k: usize,
    /// Relative gap between the eigenvalue bounds at which iteration stops.
    pub tol: f64,
    pub max_iters: usize,
    /// Normalization of the reported vector. The iteration itself always
    /// scales to max entry 1.
    pub norm: Norm,
    pub mode: SpectralMode,
}

impl SpectralConfig {
    pub fn new(k: usize) -> Self {
        SpectralConfig {
            k,
            tol: 1e-10,
            max_iters: 10_000,
            norm: Norm::L2,
            mode: SpectralMode::PerComponent,
        }
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn with_max_iters(mut self, max_iters: usize) -> Self {
        self.max_iters = max_iters;
        self
    }

    pub fn with_norm(mut self, norm: Norm) -> Self {
        self.norm = norm;
        self
    }

    pub fn with_mode(mut self, mode: SpectralMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.k < 1 {
            return Err(Error::contract("tensor order requires k >= 1"));
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::contract(format!("tolerance must be positive, got {}", self.tol)));
        }
        if self.max_iters < 1 {
            return Err(Error::contract("max_iters must be at least 1"));
        }
        Ok(())
    }
}

/// Eigenvalue bounds of the shifted tensor after one iteration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Bounds {
    pub lower: f64,
    pub upper: f64,
}

/// Spectral data for one connected piece of the k-core (or for the whole
/// graph in naive mode).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComponentSpectrum {
    /// Vertices in ids of the analysed graph.
    pub vertices: VertexSet,
    pub rho: f64,
    pub lower: f64,
    pub upper: f64,
    pub iterations: usize,
    pub converged: bool,
    /// Perron vector over `vertices`, in the same order, normalized per
    /// the configured norm.
    pub vector: Vec<f64>,
    #[serde(skip)]
    pub history: Vec<Bounds>,
}

impl ComponentSpectrum {
    /// `[lower - 1, upper - 1]`, the bracket on `rho`.
    pub fn rho_bracket(&self) -> (f64, f64) {
        (self.lower - 1.0, self.upper - 1.0)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralResult {
    pub k: usize,
    pub mode: SpectralMode,
    pub norm: Norm,
    /// Estimate of `rho_k`, taken as the lower bound minus the shift.
    pub rho: f64,
    /// Perron vector over all vertices; zero off the winning components.
    pub vector: Vec<f64>,
    /// Final bounds on `rho + 1` for the first winning component.
    pub lower: f64,
    pub upper: f64,
    /// Largest iteration count over all components.
    pub iterations: usize,
    /// Every component met the tolerance.
    pub converged: bool,
    pub components: Vec<ComponentSpectrum>,
    /// Indices into `components` whose `rho` attains the maximum.
    pub winners: Vec<usize>,
}

impl SpectralResult {
    fn without_core(k: usize, n: usize, cfg: &SpectralConfig) -> Self {
        SpectralResult {
            k,
            mode: cfg.mode,
            norm: cfg.norm,
            rho: 0.0,
            vector: vec![0.0; n],
            lower: 1.0,
            upper: 1.0,
            iterations: 0,
            converged: true,
            components: Vec::new(),
            winners: Vec::new(),
        }
    }

    pub fn rho_bracket(&self) -> (f64, f64) {
        (self.lower - 1.0, self.upper - 1.0)
    }

    pub fn has_core(&self) -> bool {
        !self.winners.is_empty()
    }

    /// Bound history of the first winning component.
    pub fn history(&self) -> &[Bounds] {
        self.winners
            .first()
            .map_or(&[], |&w| self.components[w].history.as_slice())
    }
}

/// Evaluates `e_k` of `values` by expanding `prod (1 + v t)` up to `t^k`.
///
/// `scratch` must have length at least `k + 1`.
#[inline]
fn elementary_symmetric(values: impl Iterator<Item = f64>, k: usize, scratch: &mut [f64]) -> f64 {
    let e = &mut scratch[..=k];
    e.fill(0.0);
    e[0] = 1.0;
    let mut seen = 0usize;
    for v in values {
        seen += 1;
        let top = seen.min(k);
        for j in (1..=top).rev() {
            e[j] += e[j - 1] * v;
        }
    }
    e[k]
}

fn check_input(g: &Graph, k: usize, x: &[f64]) -> Result<()> {
    if k < 1 {
        return Err(Error::contract("tensor order requires k >= 1"));
    }
    if x.len() != g.n() {
        return Err(Error::contract(format!(
            "vector has length {} but graph has {} vertices",
            x.len(),
            g.n()
        )));
    }
    if let Some(i) = x.iter().position(|&v| v.is_nan() || v < 0.0) {
        return Err(Error::contract(format!(
            "entry {i} is {}; the kernel needs nonnegative input",
            x[i]
        )));
    }
    Ok(())
}

/// Writes `(A x^k)_i` (plus `x_i^k` when `shift` is set) into `out`.
/// Inputs are assumed valid.
fn apply_into(g: &Graph, k: usize, x: &[f64], shift: bool, out: &mut [f64]) {
    let vertex = |i: usize, scratch: &mut [f64]| {
        let base = if g.degree(i) < k {
            0.0
        } else {
            elementary_symmetric(g.neighbors(i).iter().map(|&j| x[j]), k, scratch)
        };
        if shift {
            base + x[i].powi(k as i32)
        } else {
            base
        }
    };
    if g.n() >= PARALLEL_MIN_VERTICES {
        out.par_chunks_mut(1024).enumerate().for_each(|(c, chunk)| {
            let mut scratch = vec![0.0; k + 1];
            for (off, slot) in chunk.iter_mut().enumerate() {
                *slot = vertex(c * 1024 + off, &mut scratch);
            }
        });
    } else {
        let mut scratch = vec![0.0; k + 1];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = vertex(i, &mut scratch);
        }
    }
}

/// `A x^k` for the k-adjacency tensor of `g`.
pub fn apply_k(g: &Graph, k: usize, x: &[f64]) -> Result<Vec<f64>> {
    check_input(g, k, x)?;
    let mut out = vec![0.0; g.n()];
    apply_into(g, k, x, false, &mut out);
    Ok(out)
}

/// `(A + I) x^k`: [`apply_k`] plus the entrywise k-th power of `x`.
pub fn shifted_apply(g: &Graph, k: usize, x: &[f64]) -> Result<Vec<f64>> {
    check_input(g, k, x)?;
    let mut out = vec![0.0; g.n()];
    apply_into(g, k, x, true, &mut out);
    Ok(out)
}

#[inline]
fn kth_root(v: f64, k: usize) -> f64 {
    match k {
        1 => v,
        2 => v.sqrt(),
        3 => v.cbrt(),
        _ => v.powf(1.0 / k as f64),
    }
}

/// Shifted power iteration for the Perron pair of the k-adjacency tensor.
///
/// Starts from the all-ones vector and repeats
///
/// ```text
/// x <- y^[1/k] / max(y^[1/k]),   y <- (A + I) x^k
/// ```
///
/// tracking `lower = min y_i / x_i^k` and `upper = max y_i / x_i^k` over
/// coordinates with `x_i^k > 0`. Stops once
/// `upper - lower <= tol * max(1, upper)`; otherwise returns after
/// `max_iters` with `converged = false` and the bracket intact. `rho` is
/// reported as `lower - 1`.
///
/// Convergence to the unique positive eigenvector is guaranteed when `g` is
/// connected with minimum degree at least `k`. On other graphs this is the
/// verbatim algorithm with no such guarantee.
pub fn nqz_iterate(g: &Graph, cfg: &SpectralConfig) -> Result<SpectralResult> {
    cfg.validate()?;
    if g.is_empty() {
        return Err(Error::contract("power iteration needs at least one vertex"));
    }
    let comp = iterate_component(g, cfg, VertexSet::all(g.n()));
    let vector = comp.vector.clone();
    Ok(SpectralResult {
        k: cfg.k,
        mode: cfg.mode,
        norm: cfg.norm,
        rho: comp.rho,
        vector,
        lower: comp.lower,
        upper: comp.upper,
        iterations: comp.iterations,
        converged: comp.converged,
        components: vec![comp],
        winners: vec![0],
    })
}

/// Runs the iteration on `g` and labels the result with `vertices`, the
/// ids of `g`'s vertices in the caller's graph.
fn iterate_component(g: &Graph, cfg: &SpectralConfig, vertices: VertexSet) -> ComponentSpectrum {
    let k = cfg.k;
    let n = g.n();
    let mut x = vec![1.0; n];
    let mut y = vec![0.0; n];
    apply_into(g, k, &x, true, &mut y);

    let mut history = Vec::new();
    let mut bounds = Bounds { lower: f64::NAN, upper: f64::NAN };
    let mut converged = false;
    let mut iterations = 0;
    while iterations < cfg.max_iters {
        iterations += 1;
        let mut peak = 0.0f64;
        for (xi, &yi) in x.iter_mut().zip(&y) {
            *xi = kth_root(yi, k);
            peak = peak.max(*xi);
        }
        x.iter_mut().for_each(|v| *v /= peak);
        apply_into(g, k, &x, true, &mut y);

        let mut lower = f64::INFINITY;
        let mut upper = f64::NEG_INFINITY;
        for (&xi, &yi) in x.iter().zip(&y) {
            let xk = xi.powi(k as i32);
            if xk > 0.0 {
                let ratio = yi / xk;
                lower = lower.min(ratio);
                upper = upper.max(ratio);
            }
        }
        bounds = Bounds { lower, upper };
        history.push(bounds);
        if upper - lower <= cfg.tol * upper.max(1.0) {
            converged = true;
            break;
        }
    }

    cfg.norm.normalize(&mut x);
    ComponentSpectrum {
        vertices,
        rho: bounds.lower - 1.0,
        lower: bounds.lower,
        upper: bounds.upper,
        iterations,
        converged,
        vector: x,
        history,
    }
}

/// Spectral radius and Perron vector of the k-adjacency tensor of `g`.
///
/// In [`SpectralMode::PerComponent`] the graph is first peeled to its
/// k-core; the spectral radius is unchanged by this. An empty core gives
/// `rho = 0` and the zero vector. Otherwise each connected component of the
/// core is iterated separately and `rho` is the largest component value.
/// The reported vector carries the Perron vectors of every component whose
/// bracket reaches the maximum, each scaled to unit norm, and is then
/// renormalized as a whole.
pub fn spectral_radius_k(g: &Graph, cfg: &SpectralConfig) -> Result<SpectralResult> {
    cfg.validate()?;
    let k = cfg.k;
    let n = g.n();
    if cfg.mode == SpectralMode::NaiveWholeGraph {
        if n == 0 {
            return Ok(SpectralResult::without_core(k, n, cfg));
        }
        return nqz_iterate(g, cfg);
    }

    let peeled = peel(g, k)?;
    if peeled.core.is_empty() {
        return Ok(SpectralResult::without_core(k, n, cfg));
    }
    let in_core = {
        let mut mask = vec![false; n];
        peeled.core.iter().for_each(|v| mask[v] = true);
        mask
    };
    let mut components = Vec::new();
    for piece in components_within(g, |v| in_core[v]) {
        let (sub, _) = induced_subgraph(g, &piece)?;
        components.push(iterate_component(&sub, cfg, piece));
    }

    let best = (0..components.len())
        .max_by(|&a, &b| components[a].rho.total_cmp(&components[b].rho).then(b.cmp(&a)))
        .expect("nonempty core has a component");
    // A component ties with the best when its bracket reaches the best
    // lower bound.
    let winners: Vec<usize> = (0..components.len())
        .filter(|&c| c == best || components[c].upper >= components[best].lower)
        .collect();

    let mut vector = vec![0.0; n];
    for &w in &winners {
        let comp = &components[w];
        for (v, &score) in comp.vertices.iter().zip(&comp.vector) {
            vector[v] = score;
        }
    }
    cfg.norm.normalize(&mut vector);

    let head = &components[best];
    Ok(SpectralResult {
        k,
        mode: cfg.mode,
        norm: cfg.norm,
        rho: head.rho,
        vector,
        lower: head.lower,
        upper: head.upper,
        iterations: components.iter().map(|c| c.iterations).max().unwrap_or(0),
        converged: components.iter().all(|c| c.converged),
        winners: {
            let mut w = winners;
            // Keep the best first so `history()` and `lower/upper` agree.
            w.sort_by_key(|&c| (c != best, c));
            w
        },
        components,
    })
}

/// Spectral verdict on k-core existence.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoreExistence {
    pub exists: bool,
    pub rho: f64,
    pub peeled_core_size: usize,
    /// `exists` matches the combinatorial answer from peeling.
    pub agrees_with_peeling: bool,
    #[serde(skip)]
    pub spectral: SpectralResult,
}

/// `g` has a nonempty k-core iff `rho_k(g) >= 1`. Tested as
/// `rho >= 1 - EXISTENCE_EPS` and cross-checked against peeling.
pub fn core_exists_spectral(g: &Graph, k: usize, cfg: &SpectralConfig) -> Result<CoreExistence> {
    let cfg = SpectralConfig { k, ..cfg.clone() };
    let spectral = spectral_radius_k(g, &cfg)?;
    let exists = spectral.rho >= 1.0 - EXISTENCE_EPS;
    let peeled_core_size = peel(g, k)?.core.len();
    Ok(CoreExistence {
        exists,
        rho: spectral.rho,
        peeled_core_size,
        agrees_with_peeling: exists == (peeled_core_size > 0),
        spectral,
    })
}

/// Vertices whose score exceeds `threshold` times the largest score.
pub fn spectral_support(res: &SpectralResult, threshold: f64) -> Result<VertexSet> {
    if threshold.is_nan() || threshold < 0.0 {
        return Err(Error::contract(format!("support threshold must be >= 0, got {threshold}")));
    }
    let peak = res.vector.iter().fold(0.0f64, |m, &v| m.max(v));
    if peak <= 0.0 {
        return Ok(VertexSet::default());
    }
    let cut = threshold * peak;
    Ok(res
        .vector
        .iter()
        .enumerate()
        .filter(|&(_, &v)| v > cut)
        .map(|(i, _)| i)
        .collect())
}

/// `max_i |(A x^k)_i - rho x_i^k|`.
pub fn eigen_residual(g: &Graph, k: usize, rho: f64, x: &[f64]) -> Result<f64> {
    let ax = apply_k(g, k, x)?;
    Ok(ax
        .iter()
        .zip(x)
        .map(|(&a, &xi)| (a - rho * xi.powi(k as i32)).abs())
        .fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, star};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn all_ones_gives_binomial_counts() {
        let mut scratch = [0.0; 3];
        assert_eq!(elementary_symmetric([1.0, 1.0, 1.0].into_iter(), 2, &mut scratch), 3.0);
    }

    #[test]
    fn mixed_values_match_subset_enumeration() {
        let vals = [0.5, 2.0, 1.0];
        let mut brute = 0.0;
        for a in 0..3 {
            for b in a + 1..3 {
                brute += vals[a] * vals[b];
            }
        }
        assert_eq!(brute, 3.5);
        let mut scratch = [0.0; 3];
        assert!(close(elementary_symmetric(vals.into_iter(), 2, &mut scratch), brute, 1e-15));
    }

    #[test]
    fn star_center_counts_leaf_pairs() {
        let g = star(5);
        let out = apply_k(&g, 2, &[1.0; 6]).unwrap();
        assert_eq!(out[0], 10.0);
        assert!(out[1..].iter().all(|&v| v == 0.0));
    }

    #[test]
    fn shifted_apply_examples() {
        let k3 = complete(3);
        assert_eq!(shifted_apply(&k3, 2, &[0.0; 3]).unwrap(), vec![0.0; 3]);
        assert_eq!(shifted_apply(&k3, 2, &[1.0; 3]).unwrap(), vec![2.0; 3]);
        let lone = Graph::empty(1);
        assert_eq!(shifted_apply(&lone, 4, &[0.5]).unwrap(), vec![0.0625]);
    }

    #[test]
    fn kernel_rejects_bad_input() {
        let g = path(3);
        assert!(apply_k(&g, 2, &[1.0; 2]).is_err());
        assert!(apply_k(&g, 2, &[1.0, -0.1, 1.0]).is_err());
        assert!(apply_k(&g, 2, &[1.0, f64::NAN, 1.0]).is_err());
        assert!(apply_k(&g, 0, &[1.0; 3]).is_err());
    }

    #[test]
    fn clique_on_k_plus_one_vertices_has_unit_radius() {
        for k in 1..=5 {
            let r = nqz_iterate(&complete(k + 1), &SpectralConfig::new(k)).unwrap();
            assert!(r.converged);
            assert!(close(r.rho, 1.0, 1e-12), "k={k}: {}", r.rho);
            let u = r.vector[0];
            assert!(r.vector.iter().all(|&v| close(v, u, 1e-12)));
        }
    }

    #[test]
    fn k4_second_order_radius_is_three() {
        let r = nqz_iterate(&complete(4), &SpectralConfig::new(2)).unwrap();
        assert!(close(r.rho, 3.0, 1e-12));
        assert!(r.vector.iter().all(|&v| close(v, 0.5, 1e-12)));
    }

    #[test]
    fn cycles_have_unit_second_order_radius() {
        for n in [3, 4, 7, 20] {
            let r = nqz_iterate(&cycle(n), &SpectralConfig::new(2)).unwrap();
            assert!(close(r.rho, 1.0, 1e-12), "C{n}: {}", r.rho);
        }
    }

    #[test]
    fn no_core_means_zero_radius() {
        let cfg = SpectralConfig::new(2);
        let r = spectral_radius_k(&star(6), &cfg).unwrap();
        assert_eq!(r.rho, 0.0);
        assert!(r.vector.iter().all(|&v| v == 0.0));
        assert!(!r.has_core());
        assert!(spectral_support(&r, SUPPORT_THRESHOLD).unwrap().is_empty());
        assert_eq!(spectral_radius_k(&path(5), &cfg).unwrap().rho, 0.0);
    }

    #[test]
    fn disjoint_union_keeps_only_the_larger_radius() {
        let edges = complete(4)
            .edges()
            .chain(complete(3).edges().map(|(u, v)| (u + 4, v + 4)))
            .collect::<Vec<_>>();
        let (g, _) = Graph::from_edges(7, edges).unwrap();
        let r = spectral_radius_k(&g, &SpectralConfig::new(2)).unwrap();
        assert!(close(r.rho, 3.0, 1e-10));
        assert_eq!(r.components.len(), 2);
        assert!(close(r.components[1].rho, 1.0, 1e-10));
        assert_eq!(spectral_support(&r, SUPPORT_THRESHOLD).unwrap().as_slice(), &[0, 1, 2, 3]);
    }

    #[test]
    fn tied_components_share_the_vector() {
        let edges = complete(4)
            .edges()
            .chain(complete(4).edges().map(|(u, v)| (u + 4, v + 4)))
            .collect::<Vec<_>>();
        let (g, _) = Graph::from_edges(8, edges).unwrap();
        let r = spectral_radius_k(&g, &SpectralConfig::new(2)).unwrap();
        assert_eq!(r.winners, vec![0, 1]);
        let expected = 1.0 / 8f64.sqrt();
        assert!(r.vector.iter().all(|&v| close(v, expected, 1e-12)));
    }

    #[test]
    fn pendants_do_not_lift_the_clique() {
        let edges = complete(4).edges().chain((0..4).map(|v| (v, v + 4))).collect::<Vec<_>>();
        let (g, _) = Graph::from_edges(8, edges).unwrap();
        let r3 = spectral_radius_k(&g, &SpectralConfig::new(3)).unwrap();
        assert!(close(r3.rho, 1.0, 1e-10));
        assert_eq!(spectral_support(&r3, SUPPORT_THRESHOLD).unwrap().as_slice(), &[0, 1, 2, 3]);
        assert!(r3.vector[4..].iter().all(|&v| v == 0.0));
        let r4 = spectral_radius_k(&g, &SpectralConfig::new(4)).unwrap();
        assert_eq!(r4.rho, 0.0);
        assert!(!r4.has_core());
    }

    #[test]
    fn existence_on_boundary_and_negative_cases() {
        let cfg = SpectralConfig::new(2);
        let c5 = core_exists_spectral(&cycle(5), 2, &cfg).unwrap();
        assert!(c5.exists && c5.agrees_with_peeling);
        assert!(close(c5.rho, 1.0, 1e-9));
        let p3 = core_exists_spectral(&path(3), 2, &cfg).unwrap();
        assert!(!p3.exists && p3.agrees_with_peeling);
        assert_eq!(p3.rho, 0.0);
    }

    #[test]
    fn first_order_path_radius_is_sqrt_two() {
        let r = spectral_radius_k(&path(3), &SpectralConfig::new(1).with_tol(1e-14)).unwrap();
        assert!(close(r.rho, 2f64.sqrt(), 1e-9), "{}", r.rho);
        let s = 0.5;
        assert!(close(r.vector[0], s, 1e-7) && close(r.vector[1], 2f64.sqrt() * s, 1e-7));
    }

    #[test]
    fn naive_mode_on_k4_matches_per_component() {
        let g = complete(4);
        let naive = spectral_radius_k(&g, &SpectralConfig::new(2).with_mode(SpectralMode::NaiveWholeGraph)).unwrap();
        assert!(close(naive.rho, 3.0, 1e-12));
    }

    #[test]
    fn norms() {
        let x = [3.0, -4.0];
        assert_eq!(Norm::L1.of(&x), 7.0);
        assert_eq!(Norm::L2.of(&x), 5.0);
        assert_eq!(Norm::Linf.of(&x), 4.0);
        assert_eq!("linf".parse::<Norm>().unwrap(), Norm::Linf);
        assert!("l3".parse::<Norm>().is_err());
    }

    #[test]
    fn config_validation() {
        assert!(SpectralConfig::new(0).validate().is_err());
        assert!(SpectralConfig::new(2).with_tol(0.0).validate().is_err());
        assert!(SpectralConfig::new(2).with_max_iters(0).validate().is_err());
        assert!(nqz_iterate(&Graph::empty(0), &SpectralConfig::new(1)).is_err());
    }

    #[test]
    fn non_convergence_is_reported_not_raised() {
        let g = crate::datasets::karate();
        let r = spectral_radius_k(&g, &SpectralConfig::new(2).with_max_iters(2)).unwrap();
        assert!(!r.converged);
        assert_eq!(r.iterations, 2);
        let (lo, hi) = r.rho_bracket();
        assert!(lo <= hi);
    }
}
