use super::spectral::{spectral_summary, SpectralSummary};
use super::stats::{harmonic_mean_degree, neighbor_harmonic_diag};
use super::{adjacency_times, mean_degree, normalized_adjacency_times, AnalyticsError};
use crate::estimators::EstimatorKind;
use crate::graph::{GraphFlags, LabeledGraph};

/// Mean and variance of a single response.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Moments {
    pub mean: f64,
    pub variance: f64,
}

/// Exact bias, variance and MSE of one estimator at one budget.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorReport {
    pub kind: EstimatorKind,
    pub budget: usize,
    pub bias: f64,
    pub variance_single_sample: f64,
    pub variance_at_budget: f64,
    /// Upper bound on `variance_single_sample`, where one is known.
    pub variance_upper_bound: Option<f64>,
    /// Upper bound on `bias^2` (friend-of-node polling only).
    pub bias_sq_upper_bound: Option<f64>,
    pub mse_at_budget: f64,
    /// The walk-based formulas describe the stationary regime, which is the
    /// limit of the walk only on connected non-bipartite graphs.
    pub flags: GraphFlags,
}

impl ErrorReport {
    fn new(
        lg: &LabeledGraph,
        kind: EstimatorKind,
        budget: usize,
        bias: f64,
        variance: f64,
    ) -> Self {
        let variance_at_budget = variance / budget as f64;
        Self {
            kind,
            budget,
            bias,
            variance_single_sample: variance,
            variance_at_budget,
            variance_upper_bound: None,
            bias_sq_upper_bound: None,
            mse_at_budget: bias * bias + variance_at_budget,
            flags: lg.graph().flags(),
        }
    }
}

fn labels_f64(lg: &LabeledGraph) -> Vec<f64> {
    lg.labels().iter().map(|&l| l as f64).collect()
}

/// `cov{f(X), d(X)}` for a uniform node `X`, exact up to one rounding.
pub fn label_degree_covariance(lg: &LabeledGraph) -> f64 {
    let g = lg.graph();
    let n = g.node_count() as i128;
    let weighted: i128 = (0..g.node_count())
        .filter(|&v| lg.label(v) == 1)
        .map(|v| g.degree(v) as i128)
        .sum();
    let numerator = n * weighted - lg.ones() as i128 * g.edge_end_count() as i128;
    numerator as f64 / (n * n) as f64
}

/// `E[f(Y)] = sum_v d(v) f(v) / M`.
pub fn mean_label_of_friend(lg: &LabeledGraph) -> f64 {
    let g = lg.graph();
    let weighted: usize = (0..g.node_count())
        .filter(|&v| lg.label(v) == 1)
        .map(|v| g.degree(v))
        .sum();
    weighted as f64 / g.edge_end_count() as f64
}

/// Stationary walk bias as `cov{f(X), d(X)} / E[d(X)]`.
pub fn rw_bias_from_covariance(lg: &LabeledGraph) -> f64 {
    label_degree_covariance(lg) / mean_degree(lg.graph())
}

pub fn ip_moments(lg: &LabeledGraph) -> Moments {
    let p = lg.true_fraction();
    Moments {
        mean: p,
        variance: p * (1.0 - p),
    }
}

/// Response of a stationary walker `Y`:
/// `Var = (1/M) f' D^{1/2} (N^2 - D^{1/2} 1 1' D^{1/2} / M) D^{1/2} f`
/// with `N` the normalized adjacency.
pub fn rw_moments(lg: &LabeledGraph) -> Moments {
    let g = lg.graph();
    let m = g.edge_end_count() as f64;
    let f = labels_f64(lg);
    let x: Vec<f64> = f
        .iter()
        .enumerate()
        .map(|(v, fv)| fv * (g.degree(v) as f64).sqrt())
        .collect();
    let y = normalized_adjacency_times(g, &x);
    let quad: f64 = y.iter().map(|y| y * y).sum();
    let proj: f64 = x
        .iter()
        .enumerate()
        .map(|(v, xv)| xv * (g.degree(v) as f64).sqrt())
        .sum();
    Moments {
        mean: proj / m,
        variance: ((quad - proj * proj / m) / m).max(0.0),
    }
}

/// Response of a uniform node `X`:
/// `E = (1/n) 1' D^{-1} A f`, `Var = (1/n) w' (I - 1 1'/n) w` with
/// `w = D^{-1/2} N D^{1/2} f`.
pub fn un_moments(lg: &LabeledGraph) -> Moments {
    let g = lg.graph();
    let n = g.node_count() as f64;
    let f = labels_f64(lg);
    let af = adjacency_times(g, &f);
    let mean = af
        .iter()
        .enumerate()
        .map(|(v, a)| a / g.degree(v) as f64)
        .sum::<f64>()
        / n;

    let x: Vec<f64> = f
        .iter()
        .enumerate()
        .map(|(v, fv)| fv * (g.degree(v) as f64).sqrt())
        .collect();
    let w: Vec<f64> = normalized_adjacency_times(g, &x)
        .into_iter()
        .enumerate()
        .map(|(v, y)| y / (g.degree(v) as f64).sqrt())
        .collect();
    let norm_sq: f64 = w.iter().map(|w| w * w).sum();
    let total: f64 = w.iter().sum();
    Moments {
        mean,
        variance: ((norm_sq - total * total / n) / n).max(0.0),
    }
}

/// Response of a uniform neighbor `Z` of a uniform node:
/// `E = (1/n) 1' D^{-1} A D^{-1} A f`,
/// `E[q^2] = (1/n) f' A D_hm^{-1} D^{-1} A f`.
pub fn fn_moments(lg: &LabeledGraph) -> Moments {
    let g = lg.graph();
    let n = g.node_count() as f64;
    let f = labels_f64(lg);
    let af = adjacency_times(g, &f);
    let q: Vec<f64> = af
        .iter()
        .enumerate()
        .map(|(v, a)| a / g.degree(v) as f64)
        .collect();
    let aq = adjacency_times(g, &q);
    let mean = aq
        .iter()
        .enumerate()
        .map(|(v, a)| a / g.degree(v) as f64)
        .sum::<f64>()
        / n;
    let hm = neighbor_harmonic_diag(g);
    let second = af
        .iter()
        .enumerate()
        .map(|(v, a)| a * a / (hm[v] * g.degree(v) as f64))
        .sum::<f64>()
        / n;
    Moments {
        mean,
        variance: (second - mean * mean).max(0.0),
    }
}

/// Friend-of-node bias as the quadratic form
/// `(1/n) 1' D^{-1/2} (N^2 - I) D^{1/2} f`; cross-check for [`fn_moments`].
pub fn fn_bias_quadratic_form(lg: &LabeledGraph) -> f64 {
    let g = lg.graph();
    let x: Vec<f64> = (0..g.node_count())
        .map(|v| lg.label(v) as f64 * (g.degree(v) as f64).sqrt())
        .collect();
    let nx = normalized_adjacency_times(g, &x);
    let nnx = normalized_adjacency_times(g, &nx);
    nnx.iter()
        .zip(&x)
        .enumerate()
        .map(|(v, (a, b))| (a - b) / (g.degree(v) as f64).sqrt())
        .sum::<f64>()
        / g.node_count() as f64
}

pub fn exact_error_ip(lg: &LabeledGraph, budget: usize) -> ErrorReport {
    let m = ip_moments(lg);
    ErrorReport::new(lg, EstimatorKind::IntentPolling, budget, 0.0, m.variance)
}

/// Stationary-regime error of random-walk polling. The variance bound
/// `lambda2^2 E[f(Y)]` is filled in when a spectral summary is given.
fn rw_report(lg: &LabeledGraph, budget: usize, spectral: Option<&SpectralSummary>) -> ErrorReport {
    let m = rw_moments(lg);
    let mut report = ErrorReport::new(
        lg,
        EstimatorKind::RandomWalkNep,
        budget,
        rw_bias_from_covariance(lg),
        m.variance,
    );
    report.variance_upper_bound =
        spectral.map(|s| s.lambda2 * s.lambda2 * mean_label_of_friend(lg));
    report
}

fn un_report(lg: &LabeledGraph, budget: usize) -> ErrorReport {
    let g = lg.graph();
    let m = un_moments(lg);
    let mut report = ErrorReport::new(
        lg,
        EstimatorKind::NaiveNep,
        budget,
        m.mean - lg.true_fraction(),
        m.variance,
    );
    report.variance_upper_bound =
        Some(mean_label_of_friend(lg) * mean_degree(g) / g.min_degree() as f64);
    report
}

fn fn_report(lg: &LabeledGraph, budget: usize, spectral: Option<&SpectralSummary>) -> ErrorReport {
    let g = lg.graph();
    let m = fn_moments(lg);
    let mut report = ErrorReport::new(
        lg,
        EstimatorKind::FriendOfNodeNep,
        budget,
        m.mean - lg.true_fraction(),
        m.variance,
    );
    report.bias_sq_upper_bound = spectral.map(|s| {
        (s.lambda_n * s.lambda_n - 1.0).powi(2) * mean_label_of_friend(lg) * mean_degree(g)
            / harmonic_mean_degree(g)
    });
    report
}

/// Error report for any estimator. Spectral bounds are filled in only when
/// `spectral` is given.
pub fn exact_error(
    lg: &LabeledGraph,
    kind: EstimatorKind,
    budget: usize,
    spectral: Option<&SpectralSummary>,
) -> ErrorReport {
    match kind {
        EstimatorKind::IntentPolling => exact_error_ip(lg, budget),
        EstimatorKind::NaiveNep => un_report(lg, budget),
        EstimatorKind::RandomWalkNep => rw_report(lg, budget, spectral),
        EstimatorKind::FriendOfNodeNep => fn_report(lg, budget, spectral),
    }
}

/// Random-walk polling error; the spectral bound is computed when the graph
/// is under the dense size cap.
pub fn exact_error_rw(lg: &LabeledGraph, budget: usize) -> ErrorReport {
    let spectral = spectral_summary(lg.graph()).ok();
    rw_report(lg, budget, spectral.as_ref())
}

pub fn exact_error_un(lg: &LabeledGraph, budget: usize) -> ErrorReport {
    un_report(lg, budget)
}

pub fn exact_error_fn(lg: &LabeledGraph, budget: usize) -> ErrorReport {
    let spectral = spectral_summary(lg.graph()).ok();
    fn_report(lg, budget, spectral.as_ref())
}

/// Largest budget for which the random-walk MSE upper bound stays below the
/// intent-polling MSE.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BudgetThreshold {
    Finite(f64),
    /// Zero label-degree covariance with a non-negative numerator: every
    /// budget qualifies.
    Infinite,
    /// Negative numerator: no budget qualifies. Carries the raw value
    /// (`-inf` when the covariance is zero).
    NonPositive(f64),
}

impl BudgetThreshold {
    /// Whether budget `b` satisfies the sufficient condition.
    pub fn admits(&self, b: usize) -> bool {
        match *self {
            BudgetThreshold::Finite(t) => (b as f64) <= t,
            BudgetThreshold::Infinite => true,
            BudgetThreshold::NonPositive(_) => false,
        }
    }
}

impl std::fmt::Display for BudgetThreshold {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BudgetThreshold::Finite(t) => write!(f, "{t}"),
            BudgetThreshold::Infinite => f.write_str("inf"),
            BudgetThreshold::NonPositive(t) => write!(f, "nonpositive({t})"),
        }
    }
}

/// `(Var{f(X)} - lambda2^2 E[f(Y)]) E[d(X)]^2 / cov{f(X), d(X)}^2`.
pub fn budget_threshold_with(lg: &LabeledGraph, lambda2: f64) -> BudgetThreshold {
    let var_f = ip_moments(lg).variance;
    let numerator = var_f - lambda2 * lambda2 * mean_label_of_friend(lg);
    let cov = label_degree_covariance(lg);
    if cov == 0.0 {
        return if numerator >= 0.0 {
            BudgetThreshold::Infinite
        } else {
            BudgetThreshold::NonPositive(f64::NEG_INFINITY)
        };
    }
    let value = numerator * mean_degree(lg.graph()).powi(2) / (cov * cov);
    if value > 0.0 {
        BudgetThreshold::Finite(value)
    } else {
        BudgetThreshold::NonPositive(value)
    }
}

pub fn budget_threshold(lg: &LabeledGraph) -> Result<BudgetThreshold, AnalyticsError> {
    let s = spectral_summary(lg.graph())?;
    Ok(budget_threshold_with(lg, s.lambda2))
}
