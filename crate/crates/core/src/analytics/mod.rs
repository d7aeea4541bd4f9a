//! Exact (closed-form) error analysis and network statistics.
//!
//! Everything here is deterministic. Quadratic forms are evaluated with
//! sparse products over adjacency lists; only [`spectral_summary`] builds a
//! dense matrix, and it refuses graphs above a size cap.

mod exact;
mod oracle;
mod paradox;
mod spectral;
mod stats;

use thiserror::Error;

pub use exact::{
    budget_threshold, budget_threshold_with, exact_error, exact_error_fn, exact_error_ip,
    exact_error_rw, exact_error_un, fn_bias_quadratic_form, fn_moments, ip_moments,
    label_degree_covariance, mean_label_of_friend, rw_bias_from_covariance, rw_moments, un_moments,
    BudgetThreshold, ErrorReport, Moments,
};
pub use oracle::{brute_force_estimator_law, ResponseLaw};
pub use paradox::{fosd_check, friendship_paradox_check, FosdCheck, FosdRow, ParadoxCheck};
pub use spectral::{spectral_summary, spectral_summary_capped, SpectralSummary, DEFAULT_SIZE_CAP};
pub use stats::{
    assortativity, degree_distribution, degree_label_correlation, harmonic_mean_degree,
    neighbor_harmonic_diag, network_stats, NetworkStats,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalyticsError {
    #[error("assortativity undefined: neighbor-degree distribution has zero variance")]
    AssortativityUndefined,
    #[error("degree-label correlation undefined: degree or label has zero variance")]
    DegreeLabelCorrUndefined,
    #[error("dense spectral decomposition refused: {node_count} nodes exceeds cap {cap}")]
    SizeCapExceeded { node_count: usize, cap: usize },
    #[error("eigendecomposition did not converge: {0}")]
    Decomposition(String),
}

use crate::graph::Graph;

/// `y = A x`.
pub(crate) fn adjacency_times(g: &Graph, x: &[f64]) -> Vec<f64> {
    (0..g.node_count())
        .map(|v| g.neighbors(v).iter().map(|&u| x[u]).sum())
        .collect()
}

/// `y = D^{-1/2} A D^{-1/2} x`.
pub(crate) fn normalized_adjacency_times(g: &Graph, x: &[f64]) -> Vec<f64> {
    let scaled: Vec<f64> = x
        .iter()
        .enumerate()
        .map(|(v, xv)| xv / (g.degree(v) as f64).sqrt())
        .collect();
    adjacency_times(g, &scaled)
        .into_iter()
        .enumerate()
        .map(|(v, y)| y / (g.degree(v) as f64).sqrt())
        .collect()
}

pub(crate) fn mean_degree(g: &Graph) -> f64 {
    g.edge_end_count() as f64 / g.node_count() as f64
}
