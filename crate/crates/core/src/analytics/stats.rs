use std::collections::BTreeMap;

use super::AnalyticsError;
use crate::graph::{Graph, LabeledGraph};

/// Degree and label statistics of a labeled graph.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkStats {
    /// `P(k)`: fraction of nodes with degree `k`.
    pub degree_dist: BTreeMap<usize, f64>,
    /// `q(k)`: probability that a uniform edge end has degree `k`.
    pub neighbor_degree_dist: BTreeMap<usize, f64>,
    /// `e(k, k')`: joint degree law of the two ends of a uniform edge
    /// (both orientations counted).
    pub joint_neighbor_dist: BTreeMap<(usize, usize), f64>,
    pub sigma_q: f64,
    pub sigma_k: f64,
    pub sigma_f: f64,
    pub assortativity: f64,
    pub degree_label_corr: f64,
    /// `1 / E[1/d(X)]`.
    pub harmonic_mean_degree: f64,
    /// Per node, `d(v) / sum_{u in N(v)} 1/d(u)`.
    pub neighbor_harmonic_diag: Vec<f64>,
}

pub fn degree_distribution(g: &Graph) -> BTreeMap<usize, f64> {
    let mut counts = BTreeMap::new();
    for d in g.degrees() {
        *counts.entry(d).or_insert(0usize) += 1;
    }
    let n = g.node_count() as f64;
    counts.into_iter().map(|(k, c)| (k, c as f64 / n)).collect()
}

fn joint_neighbor_distribution(g: &Graph) -> BTreeMap<(usize, usize), f64> {
    let mut counts = BTreeMap::new();
    for &(u, v) in g.edges() {
        let (du, dv) = (g.degree(u), g.degree(v));
        *counts.entry((du, dv)).or_insert(0usize) += 1;
        *counts.entry((dv, du)).or_insert(0usize) += 1;
    }
    let ends = g.edge_end_count() as f64;
    counts
        .into_iter()
        .map(|(k, c)| (k, c as f64 / ends))
        .collect()
}

fn marginal(joint: &BTreeMap<(usize, usize), f64>) -> BTreeMap<usize, f64> {
    let mut q = BTreeMap::new();
    for (&(k, _), &p) in joint {
        *q.entry(k).or_insert(0.0) += p;
    }
    q
}

fn mean_and_sd(dist: &BTreeMap<usize, f64>) -> (f64, f64) {
    let mean: f64 = dist.iter().map(|(&k, &p)| k as f64 * p).sum();
    let var: f64 = dist
        .iter()
        .map(|(&k, &p)| (k as f64 - mean).powi(2) * p)
        .sum();
    (mean, var.sqrt())
}

/// Degree correlation across edges, computed edge by edge:
/// `(mean_{edges} d(u) d(v) - mu_q^2) / sigma_q^2`.
pub fn assortativity(g: &Graph) -> Result<f64, AnalyticsError> {
    let ends = g.edge_end_count() as f64;
    let (mut s1, mut s2) = (0.0, 0.0);
    for d in g.degrees() {
        let d = d as f64;
        s1 += d * d;
        s2 += d * d * d;
    }
    let mu = s1 / ends;
    let var = s2 / ends - mu * mu;
    if g.is_regular() || var <= 0.0 {
        return Err(AnalyticsError::AssortativityUndefined);
    }
    let cross: f64 = g
        .edges()
        .iter()
        .map(|&(u, v)| (g.degree(u) * g.degree(v)) as f64)
        .sum::<f64>()
        / g.edge_count() as f64;
    Ok((cross - mu * mu) / var)
}

/// Pearson correlation of `d(X)` and `f(X)` for a uniform node `X`.
pub fn degree_label_correlation(lg: &LabeledGraph) -> Result<f64, AnalyticsError> {
    let g = lg.graph();
    let n = g.node_count() as f64;
    if g.is_regular() || lg.ones() == 0 || lg.ones() == g.node_count() {
        return Err(AnalyticsError::DegreeLabelCorrUndefined);
    }
    let mean_d = g.edge_end_count() as f64 / n;
    let var_d = g
        .degrees()
        .map(|d| (d as f64 - mean_d).powi(2))
        .sum::<f64>()
        / n;
    let mean_f = lg.true_fraction();
    let var_f = mean_f * (1.0 - mean_f);
    let cov = super::label_degree_covariance(lg);
    Ok(cov / (var_d.sqrt() * var_f.sqrt()))
}

pub fn harmonic_mean_degree(g: &Graph) -> f64 {
    let n = g.node_count() as f64;
    n / g.degrees().map(|d| 1.0 / d as f64).sum::<f64>()
}

pub fn neighbor_harmonic_diag(g: &Graph) -> Vec<f64> {
    (0..g.node_count())
        .map(|v| {
            let inv: f64 = g
                .neighbors(v)
                .iter()
                .map(|&u| 1.0 / g.degree(u) as f64)
                .sum();
            g.degree(v) as f64 / inv
        })
        .collect()
}

/// All statistics at once. Fails when either correlation is undefined; use
/// [`assortativity`] and [`degree_label_correlation`] individually to get
/// partial results.
pub fn network_stats(lg: &LabeledGraph) -> Result<NetworkStats, AnalyticsError> {
    let g = lg.graph();
    let degree_dist = degree_distribution(g);
    let joint = joint_neighbor_distribution(g);
    let q = marginal(&joint);
    let (mu_q, sigma_q) = mean_and_sd(&q);
    let (_, sigma_k) = mean_and_sd(&degree_dist);
    let f = lg.true_fraction();
    let sigma_f = (f * (1.0 - f)).sqrt();

    if g.is_regular() {
        return Err(AnalyticsError::AssortativityUndefined);
    }
    let cross: f64 = joint.iter().map(|(&(k, l), &p)| (k * l) as f64 * p).sum();
    let assortativity = (cross - mu_q * mu_q) / (sigma_q * sigma_q);

    if sigma_f == 0.0 {
        return Err(AnalyticsError::DegreeLabelCorrUndefined);
    }
    // sum_k k (P(f=1, d=k) - P(f=1) P(k))
    let n = g.node_count() as f64;
    let mut joint_label = BTreeMap::new();
    for v in 0..g.node_count() {
        if lg.label(v) == 1 {
            *joint_label.entry(g.degree(v)).or_insert(0.0) += 1.0 / n;
        }
    }
    let cov: f64 = degree_dist
        .iter()
        .map(|(&k, &pk)| k as f64 * (joint_label.get(&k).copied().unwrap_or(0.0) - f * pk))
        .sum();
    let degree_label_corr = cov / (sigma_k * sigma_f);

    Ok(NetworkStats {
        degree_dist,
        neighbor_degree_dist: q,
        joint_neighbor_dist: joint,
        sigma_q,
        sigma_k,
        sigma_f,
        assortativity,
        degree_label_corr,
        harmonic_mean_degree: harmonic_mean_degree(g),
        neighbor_harmonic_diag: neighbor_harmonic_diag(g),
    })
}
