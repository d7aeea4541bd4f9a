//! Experiment driver: Monte-Carlo sweeps, dataset reports and invariant
//! checks. The `neppoll` binary is a thin layer over this module.

mod check;
mod config;
mod prepare;
mod report;
mod sweep;

use thiserror::Error;

pub use check::{run_checks, CheckResult};
pub use config::{
    default_budgets, ExperimentConfig, GeneratorModel, GeneratorSpec, GraphSource, LabelSource,
};
pub use prepare::{generate_graph, label_graph, prepare, Generated, Labeled, Prepared};
pub use report::{run_report, LabelReport, Report};
pub use sweep::{run_sweep, sweep_labeled, write_csv, SweepPlan, SweepRow, CSV_HEADER};

use crate::analytics::AnalyticsError;
use crate::estimators::EstimatorError;
use crate::graph::GraphError;
use crate::io::IoError;
use crate::netgen::NetgenError;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] IoError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Netgen(#[from] NetgenError),
    #[error(transparent)]
    Estimator(#[from] EstimatorError),
    #[error(transparent)]
    Analytics(#[from] AnalyticsError),
    #[error("largest-component assortativity {achieved:.4} misses target {target} after {rounds} rounds")]
    GiantTargetMissed {
        achieved: f64,
        target: f64,
        rounds: u64,
    },
    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),
}

impl HarnessError {
    /// `usage` for bad configuration, `data` for everything else.
    pub fn category(&self) -> &'static str {
        match self {
            HarnessError::Config(_) => "usage",
            _ => "data",
        }
    }
}

/// Seed-derivation tags under the master seed.
pub(crate) mod seed_tags {
    pub const GRAPH: u64 = 1;
    pub const REWIRE: u64 = 2;
    pub const LABELS: u64 = 3;
    pub const SWEEP: u64 = 4;
}
