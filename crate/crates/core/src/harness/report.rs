use std::fmt;

use crate::analytics::{
    assortativity, budget_threshold_with, degree_label_correlation, exact_error, fosd_check,
    friendship_paradox_check, spectral_summary_capped, BudgetThreshold, ErrorReport, ParadoxCheck,
    SpectralSummary,
};
use crate::estimators::EstimatorKind;
use crate::graph::{Graph, GraphFlags, LabeledGraph};

/// One-shot diagnostic of a dataset.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub node_count: usize,
    pub edge_count: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub paradox: ParadoxCheck,
    pub fosd_holds: bool,
    pub assortativity: Option<f64>,
    pub flags: GraphFlags,
    /// Missing when the graph exceeds the dense size cap.
    pub spectral: Option<SpectralSummary>,
    pub labels: Option<LabelReport>,
}

/// The label-dependent part of a [`Report`].
#[derive(Debug, Clone, PartialEq)]
pub struct LabelReport {
    pub true_fraction: f64,
    pub degree_label_corr: Option<f64>,
    pub threshold: Option<BudgetThreshold>,
    /// Single-sample exact errors; random-walk polling is left out when the
    /// walk does not converge on this graph.
    pub errors: Vec<ErrorReport>,
}

impl Report {
    /// Random walks converge to the degree-proportional law.
    pub fn rw_applicable(&self) -> bool {
        self.flags.walk_ergodic()
    }
}

/// Builds the report. `labels`, when given, must be on `graph`.
pub fn run_report(graph: &Graph, labels: Option<&LabeledGraph>, spectral_cap: usize) -> Report {
    let spectral = spectral_summary_capped(graph, spectral_cap).ok();
    let flags = graph.flags();
    let labels = labels.map(|lg| {
        let errors = EstimatorKind::ALL
            .iter()
            .filter(|&&k| k != EstimatorKind::RandomWalkNep || flags.walk_ergodic())
            .map(|&k| exact_error(lg, k, 1, spectral.as_ref()))
            .collect();
        LabelReport {
            true_fraction: lg.true_fraction(),
            degree_label_corr: degree_label_correlation(lg).ok(),
            threshold: spectral
                .as_ref()
                .map(|s| budget_threshold_with(lg, s.lambda2)),
            errors,
        }
    });
    Report {
        node_count: graph.node_count(),
        edge_count: graph.edge_count(),
        min_degree: graph.min_degree(),
        max_degree: graph.max_degree(),
        paradox: friendship_paradox_check(graph),
        fosd_holds: fosd_check(graph).holds,
        assortativity: assortativity(graph).ok(),
        flags,
        spectral,
        labels,
    }
}

fn opt(v: Option<f64>) -> String {
    v.map_or_else(|| "undefined".to_string(), |v| format!("{v:.6}"))
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "nodes: {}", self.node_count)?;
        writeln!(f, "edges: {}", self.edge_count)?;
        writeln!(f, "min_degree: {}", self.min_degree)?;
        writeln!(f, "max_degree: {}", self.max_degree)?;
        writeln!(f, "connected: {}", self.flags.connected)?;
        writeln!(f, "bipartite: {}", self.flags.bipartite)?;
        writeln!(f, "rw_applicable: {}", self.rw_applicable())?;
        writeln!(f, "mean_degree_node: {:.6}", self.paradox.mean_degree_node)?;
        writeln!(
            f,
            "mean_degree_friend: {:.6}",
            self.paradox.mean_degree_friend
        )?;
        writeln!(
            f,
            "mean_degree_friend_of_node: {:.6}",
            self.paradox.mean_degree_friend_of_node
        )?;
        writeln!(f, "friendship_paradox: {}", self.paradox.holds)?;
        writeln!(f, "fosd: {}", self.fosd_holds)?;
        writeln!(f, "r_kk: {}", opt(self.assortativity))?;
        match &self.spectral {
            Some(s) => {
                writeln!(f, "lambda2: {:.6}", s.lambda2)?;
                writeln!(f, "lambda_n: {:.6}", s.lambda_n)?;
            }
            None => {
                writeln!(f, "lambda2: skipped")?;
                writeln!(f, "lambda_n: skipped")?;
            }
        }
        if let Some(l) = &self.labels {
            writeln!(f, "true_fraction: {:.6}", l.true_fraction)?;
            writeln!(f, "rho_kf: {}", opt(l.degree_label_corr))?;
            match &l.threshold {
                Some(t) => writeln!(f, "budget_threshold: {t}")?,
                None => writeln!(f, "budget_threshold: skipped")?,
            }
            for e in &l.errors {
                write!(
                    f,
                    "{}: bias {:.6} var {:.6}",
                    e.kind, e.bias, e.variance_single_sample
                )?;
                if let Some(b) = e.variance_upper_bound {
                    write!(f, " var_bound {b:.6}")?;
                }
                if let Some(b) = e.bias_sq_upper_bound {
                    write!(f, " bias_sq_bound {b:.6}")?;
                }
                writeln!(f)?;
            }
        }
        Ok(())
    }
}
