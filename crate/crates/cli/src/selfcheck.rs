//! Oracle checks on seeded random graphs, runnable from the installed binary.

use kspectra::datasets::karate;
use kspectra::dense::{build_dense, dense_apply};
use kspectra::generators::gnp;
use kspectra::metrics::{cycle_counts, triangle_oracle};
use kspectra::spectra::{EXISTENCE_EPS, SUPPORT_THRESHOLD};
use kspectra::{apply_k, coreness, eigen_residual, peel, spectral_radius_k, spectral_support, Graph, SpectralConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::{CheckOutcome, SelfCheckPayload};
use crate::CliError;

struct Case {
    graph: Graph,
    k: usize,
}

fn corpus(seed: u64, count: usize, max_n: usize) -> Vec<Case> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=max_n);
            let p = rng.gen_range(0.05..=0.5);
            let k = rng.gen_range(2..=4);
            Case {
                graph: gnp(n, p, &mut rng),
                k,
            }
        })
        .collect()
}

fn tally(name: &str, cases: &[Case], mut check: impl FnMut(&Case) -> Result<bool, CliError>) -> Result<CheckOutcome, CliError> {
    let mut failed = 0;
    for case in cases {
        if !check(case)? {
            failed += 1;
        }
    }
    Ok(CheckOutcome {
        name: name.to_string(),
        passed: failed == 0,
        detail: format!("{} of {} graphs agree", cases.len() - failed, cases.len()),
    })
}

pub fn run_checks(seed: u64, graphs: usize) -> Result<SelfCheckPayload, CliError> {
    let cases = corpus(seed, graphs, 40);
    let tiny = corpus(seed.wrapping_add(1), graphs, 7);
    let mut checks = Vec::new();

    checks.push(tally("peel-vs-coreness", &cases, |c| {
        Ok(peel(&c.graph, c.k)?.core == coreness(&c.graph).core(c.k))
    })?);

    checks.push(tally("spectral-existence", &cases, |c| {
        let res = spectral_radius_k(&c.graph, &SpectralConfig::new(c.k))?;
        let exists = res.rho >= 1.0 - EXISTENCE_EPS;
        Ok(exists == peel(&c.graph, c.k)?.core_exists())
    })?);

    checks.push(tally("support-within-core", &cases, |c| {
        let res = spectral_radius_k(&c.graph, &SpectralConfig::new(c.k))?;
        let support = spectral_support(&res, SUPPORT_THRESHOLD)?;
        let core = peel(&c.graph, c.k)?;
        let inside = support.is_subset(&core.core);
        Ok(if core.core_is_connected { inside && support == core.core } else { inside })
    })?);

    checks.push(tally("eigen-residual", &cases, |c| {
        let cfg = SpectralConfig::new(c.k);
        let res = spectral_radius_k(&c.graph, &cfg)?;
        if !res.has_core() {
            return Ok(true);
        }
        let r = eigen_residual(&c.graph, c.k, res.rho, &res.vector)?;
        Ok(res.converged && r <= 10.0 * cfg.tol * res.rho.max(1.0))
    })?);

    checks.push(tally("tensor-vs-dense", &tiny, |c| {
        let n = c.graph.n();
        let x: Vec<f64> = (0..n).map(|i| 0.25 + (i as f64 * 0.37).fract()).collect();
        let fast = apply_k(&c.graph, c.k, &x)?;
        let slow = dense_apply(&build_dense(&c.graph, c.k)?, &x)?;
        Ok(fast.iter().zip(&slow).all(|(a, b)| (a - b).abs() <= 1e-12 * a.abs().max(1.0)))
    })?);

    checks.push(tally("triangles-vs-oracle", &cases, |c| {
        Ok(cycle_counts(&c.graph, 3)?.exact[0] == triangle_oracle(&c.graph))
    })?);

    let k = karate();
    let karate_ok = k.n() == 34 && k.m() == 78 && coreness(&k).degeneracy() == 4;
    checks.push(CheckOutcome {
        name: "bundled-karate".into(),
        passed: karate_ok,
        detail: format!("n = {}, m = {}, degeneracy = {}", k.n(), k.m(), coreness(&k).degeneracy()),
    });

    Ok(SelfCheckPayload {
        seed,
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}
