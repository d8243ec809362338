use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::peel::coreness;
use crate::spectra::{spectral_radius_k, Norm, SpectralConfig};

/// A per-vertex score that can be tabulated or correlated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Measure {
    Degree,
    Coreness,
    /// Classical eigenvector centrality of the adjacency matrix.
    Eigenvector,
    /// k-th order eigenvector centrality.
    KOrder(usize),
    /// Cycles of length at most `L` through the vertex.
    Cycles(usize),
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Measure::Degree => f.write_str("dc"),
            Measure::Coreness => f.write_str("cc"),
            Measure::Eigenvector => f.write_str("ec"),
            Measure::KOrder(k) => write!(f, "kec{k}"),
            Measure::Cycles(l) => write!(f, "c{l}"),
        }
    }
}

impl Serialize for Measure {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Measure {
    type Err = Error;

    /// Accepts `dc`, `cc`, `ec`, `kec<k>` and `c3`..`c5`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let bad = || Error::contract(format!("unknown measure `{s}`"));
        match s.as_str() {
            "dc" => Ok(Measure::Degree),
            "cc" => Ok(Measure::Coreness),
            "ec" => Ok(Measure::Eigenvector),
            _ => {
                if let Some(k) = s.strip_prefix("kec") {
                    let k: usize = k.parse().map_err(|_| bad())?;
                    if k < 1 {
                        return Err(bad());
                    }
                    Ok(Measure::KOrder(k))
                } else if let Some(l) = s.strip_prefix('c') {
                    match l.parse() {
                        Ok(l @ 3..=5) => Ok(Measure::Cycles(l)),
                        _ => Err(bad()),
                    }
                } else {
                    Err(bad())
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CentralityTable {
    pub measure: Measure,
    pub scores: Vec<f64>,
    /// Set for k-th order centrality when the k-core is empty.
    pub no_core: bool,
    pub converged: bool,
}

impl CentralityTable {
    fn exact(measure: Measure, scores: Vec<f64>) -> Self {
        CentralityTable {
            measure,
            scores,
            no_core: false,
            converged: true,
        }
    }
}

pub fn degree_centrality(g: &Graph) -> CentralityTable {
    CentralityTable::exact(
        Measure::Degree,
        (0..g.n()).map(|v| g.degree(v) as f64).collect(),
    )
}

pub fn coreness_centrality(g: &Graph) -> CentralityTable {
    CentralityTable::exact(
        Measure::Coreness,
        coreness(g).values().iter().map(|&c| c as f64).collect(),
    )
}

/// Classical eigenvector centrality by power iteration on `A + I`.
///
/// The shift keeps bipartite graphs from oscillating and does not move the
/// dominant eigenvector. Iterates until the largest coordinate change of
/// the unit-L2 iterate is at most `tol`.
pub fn eigenvector_centrality(g: &Graph, tol: f64, max_iters: usize, norm: Norm) -> Result<CentralityTable> {
    if tol.is_nan() || tol <= 0.0 || max_iters == 0 {
        return Err(Error::contract("eigenvector centrality needs tol > 0 and max_iters >= 1"));
    }
    let n = g.n();
    let mut x = vec![1.0; n];
    Norm::L2.normalize(&mut x);
    let mut next = vec![0.0; n];
    let mut converged = n == 0;
    for _ in 0..max_iters {
        for (i, slot) in next.iter_mut().enumerate() {
            *slot = x[i] + g.neighbors(i).iter().map(|&j| x[j]).sum::<f64>();
        }
        Norm::L2.normalize(&mut next);
        let delta = x
            .iter()
            .zip(&next)
            .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
        std::mem::swap(&mut x, &mut next);
        if delta <= tol {
            converged = true;
            break;
        }
    }
    norm.normalize(&mut x);
    Ok(CentralityTable {
        measure: Measure::Eigenvector,
        scores: x,
        no_core: false,
        converged,
    })
}

/// Scores from the Perron vector of the k-adjacency tensor: positive on
/// the k-core, zero everywhere else.
pub fn k_order_eigenvector_centrality(g: &Graph, k: usize, cfg: &SpectralConfig) -> Result<CentralityTable> {
    let cfg = SpectralConfig { k, ..cfg.clone() };
    let res = spectral_radius_k(g, &cfg)?;
    Ok(CentralityTable {
        measure: Measure::KOrder(k),
        no_core: !res.has_core(),
        converged: res.converged,
        scores: res.vector,
    })
}
