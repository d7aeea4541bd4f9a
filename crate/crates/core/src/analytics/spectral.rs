use faer::{Mat, Side};

use super::AnalyticsError;
use crate::graph::Graph;

/// Dense decompositions above this many nodes are refused by default.
pub const DEFAULT_SIZE_CAP: usize = 20_000;

/// Singular values of the normalized adjacency `D^{-1/2} A D^{-1/2}`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralSummary {
    /// Sorted descending.
    pub singular_values: Vec<f64>,
    /// Second largest singular value.
    pub lambda2: f64,
    /// Smallest singular value.
    pub lambda_n: f64,
}

impl SpectralSummary {
    /// Whether the second singular value is separated from 1, i.e. the walk
    /// mixes. `tol` absorbs rounding in the decomposition.
    pub fn has_gap(&self, tol: f64) -> bool {
        self.lambda2 < 1.0 - tol
    }
}

pub fn spectral_summary(g: &Graph) -> Result<SpectralSummary, AnalyticsError> {
    spectral_summary_capped(g, DEFAULT_SIZE_CAP)
}

/// The normalized adjacency is symmetric, so its singular values are the
/// absolute values of its eigenvalues.
pub fn spectral_summary_capped(g: &Graph, cap: usize) -> Result<SpectralSummary, AnalyticsError> {
    let n = g.node_count();
    if n > cap {
        return Err(AnalyticsError::SizeCapExceeded { node_count: n, cap });
    }
    let inv_sqrt: Vec<f64> = g.degrees().map(|d| 1.0 / (d as f64).sqrt()).collect();
    let mut m = Mat::<f64>::zeros(n, n);
    for &(u, v) in g.edges() {
        let w = inv_sqrt[u] * inv_sqrt[v];
        m[(u, v)] = w;
        m[(v, u)] = w;
    }
    let eigenvalues = m
        .self_adjoint_eigenvalues(Side::Lower)
        .map_err(|e| AnalyticsError::Decomposition(format!("{e:?}")))?;
    let mut singular_values: Vec<f64> = eigenvalues.iter().map(|e| e.abs().min(1.0)).collect();
    singular_values.sort_by(|a, b| b.total_cmp(a));
    Ok(SpectralSummary {
        lambda2: singular_values.get(1).copied().unwrap_or(0.0),
        lambda_n: *singular_values.last().unwrap(),
        singular_values,
    })
}
