mod common;

use common::{graph_strategy, unit_vector};
use kspectra::dense::{build_dense, dense_apply};
use kspectra::{
    apply_k, eigen_residual, peel, spectral_radius_k, spectral_support, Graph, SpectralConfig,
    SpectralMode,
};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn graph_and_vector(max_n: usize) -> impl Strategy<Value = (Graph, Vec<f64>)> {
    graph_strategy(max_n, 0.1, 0.8).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), unit_vector(n))
    })
}

proptest! {
    #[test]
    fn kernel_matches_dense_contraction((g, x) in graph_and_vector(10), k in 1usize..=3) {
        let dense = dense_apply(&build_dense(&g, k).unwrap(), &x).unwrap();
        let fast = apply_k(&g, k, &x).unwrap();
        for (a, b) in dense.iter().zip(&fast) {
            prop_assert!((a - b).abs() <= 1e-12, "{} vs {}", a, b);
        }
    }

    #[test]
    fn kernel_is_homogeneous_of_degree_k((g, x) in graph_and_vector(30), k in 1usize..=4, c in 0.0..4.0f64) {
        let scaled: Vec<f64> = x.iter().map(|v| c * v).collect();
        let lhs = apply_k(&g, k, &scaled).unwrap();
        let rhs = apply_k(&g, k, &x).unwrap();
        let ck = c.powi(k as i32);
        for (a, b) in lhs.iter().zip(&rhs) {
            prop_assert!((a - ck * b).abs() <= 1e-10 * (1.0 + a.abs()));
        }
    }

    #[test]
    fn relabelling_permutes_everything(
        g in graph_strategy(20, 0.15, 0.6),
        k in 1usize..=3,
        seed in any::<u64>(),
    ) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = g.permute(&perm).unwrap();

        let x: Vec<f64> = (0..g.n()).map(|i| 0.1 + i as f64 / g.n() as f64).collect();
        let mut px = vec![0.0; g.n()];
        for v in 0..g.n() { px[perm[v]] = x[v]; }
        let gx = apply_k(&g, k, &x).unwrap();
        let hx = apply_k(&h, k, &px).unwrap();
        for v in 0..g.n() {
            prop_assert!((gx[v] - hx[perm[v]]).abs() <= 1e-12 * (1.0 + gx[v]));
        }

        let cfg = SpectralConfig::new(k);
        let rg = spectral_radius_k(&g, &cfg).unwrap();
        let rh = spectral_radius_k(&h, &cfg).unwrap();
        prop_assert!((rg.rho - rh.rho).abs() <= 1e-8 * rg.rho.max(1.0));
        if rg.converged && rg.winners.len() == 1 {
            for v in 0..g.n() {
                prop_assert!((rg.vector[v] - rh.vector[perm[v]]).abs() <= 1e-6);
            }
        }
    }

    #[test]
    fn subgraphs_never_have_larger_radius(
        (g, keep) in graph_strategy(30, 0.1, 0.5).prop_flat_map(|g| {
            let edges: Vec<_> = g.edges().collect();
            let m = edges.len();
            (Just(g), subsequence(edges, 0..=m))
        }),
        k in 1usize..=3,
    ) {
        let (h, _) = Graph::from_edges(g.n(), keep).unwrap();
        let cfg = SpectralConfig::new(k);
        let rg = spectral_radius_k(&g, &cfg).unwrap();
        let rh = spectral_radius_k(&h, &cfg).unwrap();
        prop_assert!(rh.rho <= rg.rho + 1e-8, "rho(H) = {} > rho(G) = {}", rh.rho, rg.rho);
    }

    #[test]
    fn bounds_bracket_the_final_radius(g in graph_strategy(30, 0.1, 0.6), k in 1usize..=4) {
        let res = spectral_radius_k(&g, &SpectralConfig::new(k)).unwrap();
        for comp in &res.components {
            let lam = comp.lower;
            let slack = 1e-12 * lam.max(1.0);
            let mut prev: Option<kspectra::Bounds> = None;
            for b in &comp.history {
                prop_assert!(b.lower <= lam + slack);
                prop_assert!(b.upper >= lam - slack);
                if let Some(p) = prev {
                    prop_assert!(b.lower >= p.lower - slack, "lower fell: {} -> {}", p.lower, b.lower);
                    prop_assert!(b.upper <= p.upper + slack, "upper rose: {} -> {}", p.upper, b.upper);
                }
                prev = Some(*b);
            }
        }
    }

    #[test]
    fn converged_vectors_are_eigenvectors(g in graph_strategy(30, 0.1, 0.6), k in 1usize..=4) {
        let cfg = SpectralConfig::new(k);
        let res = spectral_radius_k(&g, &cfg).unwrap();
        prop_assert!(res.vector.iter().all(|&v| v >= 0.0));
        if res.has_core() && res.converged {
            let norm = res.vector.iter().map(|v| v * v).sum::<f64>().sqrt();
            prop_assert!((norm - 1.0).abs() < 1e-12);
            let r = eigen_residual(&g, k, res.rho, &res.vector).unwrap();
            prop_assert!(r <= 10.0 * cfg.tol * res.rho.max(1.0), "residual {}", r);
        }
    }

    #[test]
    fn support_is_the_core(g in graph_strategy(40, 0.05, 0.5), k in 1usize..=4) {
        let res = spectral_radius_k(&g, &SpectralConfig::new(k)).unwrap();
        let support = spectral_support(&res, 1e-12).unwrap();
        let peeled = peel(&g, k).unwrap();
        prop_assert!(support.is_subset(&peeled.core));
        if peeled.core_is_connected {
            prop_assert_eq!(support, peeled.core);
        }
    }

    #[test]
    fn naive_mode_agrees_when_it_converges(g in graph_strategy(25, 0.2, 0.7), k in 1usize..=3) {
        let peeled = peel(&g, k).unwrap();
        prop_assume!(peeled.core_is_connected);
        let naive = spectral_radius_k(&g, &SpectralConfig::new(k).with_mode(SpectralMode::NaiveWholeGraph)).unwrap();
        prop_assume!(naive.converged);
        let per = spectral_radius_k(&g, &SpectralConfig::new(k)).unwrap();
        prop_assert!((naive.rho - per.rho).abs() <= 1e-6 * per.rho.max(1.0), "{} vs {}", naive.rho, per.rho);
    }
}

#[test]
fn peel_invariance_on_graphs_that_are_their_own_core() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 40 {
        let g = kspectra::generators::gnp(20, 0.4, &mut rng);
        let k = 2 + checked % 2;
        let peeled = peel(&g, k).unwrap();
        if !(peeled.waves.is_empty() && peeled.core_is_connected) {
            continue;
        }
        let naive = spectral_radius_k(&g, &SpectralConfig::new(k).with_mode(SpectralMode::NaiveWholeGraph)).unwrap();
        let per = spectral_radius_k(&g, &SpectralConfig::new(k)).unwrap();
        assert!(naive.converged);
        assert!((naive.rho - per.rho).abs() <= 1e-6 * per.rho);
        checked += 1;
    }
}
