//! Synthetic graphs and controlled changes of their correlations.
//!
//! * [`configuration_model`]: erased configuration model with a truncated
//!   power-law degree law.
//! * [`erdos_renyi`]: `G(n, p)`.
//! * [`rewire_to_assortativity`]: degree-preserving edge swaps that move the
//!   assortativity toward a target.
//! * [`assign_labels`]: Bernoulli labels followed by label swaps that move
//!   the degree-label correlation toward a target.

mod config_model;
mod erdos_renyi;
mod labels;
mod rewire;

use thiserror::Error;

pub use config_model::{configuration_model, ConfigModel, ConfigModelSpec};
pub use erdos_renyi::{erdos_renyi, ErdosRenyiSpec};
pub use labels::{assign_labels, LabelOutcome, LabelTarget};
pub use rewire::{rewire_to_assortativity, RewireOutcome, RewireTarget};

use crate::analytics::AnalyticsError;
use crate::graph::GraphError;

#[derive(Debug, Error)]
pub enum NetgenError {
    #[error("degenerate generator spec: {0}")]
    DegenerateSpec(String),
    #[error("no isolate-free G(n, p) sample after {attempts} attempts")]
    IsolatedNodeAfterRetries { attempts: usize },
    #[error("assortativity target unreachable: stopped at {:.4} after {} proposals", .0.achieved, .0.proposals)]
    RewireUnreachable(Box<RewireOutcome>),
    #[error("degree-label correlation target unreachable: stopped at {:.4} after {} proposals", .0.achieved, .0.proposals)]
    LabelsUnreachable(Box<LabelOutcome>),
    #[error(transparent)]
    Undefined(#[from] AnalyticsError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
