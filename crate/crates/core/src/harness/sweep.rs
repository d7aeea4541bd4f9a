use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use super::config::{default_budgets, ExperimentConfig};
use super::prepare::prepare;
use super::{seed_tags, HarnessError};
use crate::analytics::exact_error;
use crate::estimators::{poll, EstimatorKind, PollConfig};
use crate::graph::LabeledGraph;
use crate::sampling::{derive_seed, derive_seed_path};

pub const CSV_HEADER: &str =
    "estimator,budget,emp_bias,emp_var,emp_mse,exact_bias,exact_var,exact_mse";

/// Empirical and exact error of one estimator at one budget.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub estimator: EstimatorKind,
    pub budget: usize,
    pub emp_bias: f64,
    pub emp_var: f64,
    pub emp_mse: f64,
    pub exact_bias: Option<f64>,
    pub exact_var: Option<f64>,
    pub exact_mse: Option<f64>,
}

/// Everything a sweep needs besides the labeled graph.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepPlan {
    pub budgets: Vec<usize>,
    pub replications: usize,
    pub estimators: Vec<EstimatorKind>,
    pub walk_length: Option<usize>,
    pub rw_exact_friend: bool,
    pub lazy_walk: bool,
    /// Replication `r` of estimator `k` at budget `b` uses seed
    /// `derive_seed_path(seed, [k, b, r])`.
    pub seed: u64,
}

/// Runs the sweep on the current rayon pool. Output does not depend on the
/// pool size: every replication owns its seed and the reduction runs in
/// replication order.
pub fn sweep_labeled(lg: &LabeledGraph, plan: &SweepPlan) -> Result<Vec<SweepRow>, HarnessError> {
    let flags = lg.graph().flags();
    if plan.estimators.contains(&EstimatorKind::RandomWalkNep) && !plan.rw_exact_friend {
        if !flags.connected {
            return Err(crate::estimators::EstimatorError::Disconnected.into());
        }
        if flags.bipartite && !plan.lazy_walk {
            log::warn!("graph is bipartite: plain random walks do not converge to the degree-proportional law");
        }
    }
    let truth = lg.true_fraction();
    let mut rows = Vec::with_capacity(plan.estimators.len() * plan.budgets.len());
    for &kind in &plan.estimators {
        for &budget in &plan.budgets {
            let estimates = (0..plan.replications)
                .into_par_iter()
                .map(|r| {
                    let cfg = PollConfig {
                        budget,
                        walk_length: plan.walk_length,
                        seed: derive_seed_path(plan.seed, &[kind.index(), budget as u64, r as u64]),
                        lazy: plan.lazy_walk,
                        exact_friend_mode: plan.rw_exact_friend,
                    };
                    poll(lg, kind, &cfg).map(|e| e.value)
                })
                .collect::<Result<Vec<f64>, _>>()?;

            let reps = plan.replications as f64;
            let mean = estimates.iter().sum::<f64>() / reps;
            let emp_var = estimates.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / reps;
            let emp_mse = estimates.iter().map(|x| (x - truth).powi(2)).sum::<f64>() / reps;

            let closed_form = kind != EstimatorKind::RandomWalkNep
                || plan.rw_exact_friend
                || (flags.walk_ergodic() && !plan.lazy_walk);
            let exact = closed_form.then(|| exact_error(lg, kind, budget, None));
            rows.push(SweepRow {
                estimator: kind,
                budget,
                emp_bias: mean - truth,
                emp_var,
                emp_mse,
                exact_bias: exact.as_ref().map(|e| e.bias),
                exact_var: exact.as_ref().map(|e| e.variance_at_budget),
                exact_mse: exact.as_ref().map(|e| e.mse_at_budget),
            });
        }
    }
    Ok(rows)
}

/// Prepares the graph and labels described by `cfg` and sweeps them.
pub fn run_sweep(cfg: &ExperimentConfig) -> Result<Vec<SweepRow>, HarnessError> {
    let prepared = prepare(cfg)?;
    let lg = &prepared.labeled;
    let plan = SweepPlan {
        budgets: cfg
            .budgets
            .clone()
            .unwrap_or_else(|| default_budgets(lg.graph().node_count())),
        replications: cfg.replications,
        estimators: cfg.estimators.clone(),
        walk_length: cfg.walk_length,
        rw_exact_friend: cfg.rw_exact_friend,
        lazy_walk: cfg.lazy_walk,
        seed: derive_seed(cfg.seed, seed_tags::SWEEP),
    };
    sweep_labeled(lg, &plan)
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<(), HarnessError> {
    let mut writer = csv::Writer::from_writer(out);
    for row in rows {
        writer.serialize(row)?;
    }
    writer.flush().map_err(csv::Error::from)?;
    Ok(())
}
