use serde::Serialize;

use crate::error::{Error, Result};

/// 1-based ranks with ties sharing the mean of the ranks they span.
pub fn average_ranks(values: &[f64]) -> Result<Vec<f64>> {
    if values.iter().any(|v| v.is_nan()) {
        return Err(Error::contract("cannot rank NaN"));
    }
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && values[order[end]] == values[order[start]] {
            end += 1;
        }
        // Positions start..end hold ranks start+1..=end.
        let rank = (start + 1 + end) as f64 / 2.0;
        for &i in &order[start..end] {
            ranks[i] = rank;
        }
        start = end;
    }
    Ok(ranks)
}

fn pearson(a: &[f64], b: &[f64]) -> Option<f64> {
    let n = a.len() as f64;
    let mean_a = a.iter().sum::<f64>() / n;
    let mean_b = b.iter().sum::<f64>() / n;
    let (mut cov, mut var_a, mut var_b) = (0.0, 0.0, 0.0);
    for (&x, &y) in a.iter().zip(b) {
        let (dx, dy) = (x - mean_a, y - mean_b);
        cov += dx * dy;
        var_a += dx * dx;
        var_b += dy * dy;
    }
    if var_a == 0.0 || var_b == 0.0 {
        return None;
    }
    // One square root of the product keeps r exactly 1 for equal ranks.
    Some((cov / (var_a * var_b).sqrt()).clamp(-1.0, 1.0))
}

/// Spearman's rank correlation: Pearson correlation of average ranks.
pub fn spearman(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::contract(format!(
            "score vectors differ in length ({} vs {})",
            a.len(),
            b.len()
        )));
    }
    if a.len() < 2 {
        return Err(Error::contract("rank correlation needs at least two observations"));
    }
    pearson(&average_ranks(a)?, &average_ranks(b)?).ok_or_else(|| {
        Error::UndefinedCorrelation("one of the score vectors is constant".into())
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorrelationPair {
    pub a: String,
    pub b: String,
    /// `None` when one side is constant.
    pub r_s: Option<f64>,
    pub n_vertices: usize,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct CorrelationReport {
    pub pairs: Vec<CorrelationPair>,
}

impl CorrelationReport {
    /// Looks up a pair in either order.
    pub fn get(&self, a: &str, b: &str) -> Option<&CorrelationPair> {
        self.pairs
            .iter()
            .find(|p| (p.a == a && p.b == b) || (p.a == b && p.b == a))
    }
}

/// Spearman correlation of every unordered pair of named score vectors,
/// in input order.
pub fn correlation_report(columns: &[(String, Vec<f64>)]) -> Result<CorrelationReport> {
    let mut pairs = Vec::new();
    for (i, (name_a, a)) in columns.iter().enumerate() {
        for (name_b, b) in &columns[i + 1..] {
            let r_s = match spearman(a, b) {
                Ok(r) => Some(r),
                Err(Error::UndefinedCorrelation(_)) => None,
                Err(e) => return Err(e),
            };
            pairs.push(CorrelationPair {
                a: name_a.clone(),
                b: name_b.clone(),
                r_s,
                n_vertices: a.len(),
            });
        }
    }
    Ok(CorrelationReport { pairs })
}
