//! Polling estimators of the fraction of nodes labeled 1.
//!
//! Every estimator queries `budget` individuals, sampled with replacement,
//! and averages their answers:
//!
//! | kind | who is queried | answer |
//! |------|----------------|--------|
//! | `IP` | uniform node `X` | own label `f(X)` |
//! | `UN` | uniform node `X` | neighborhood response `q(X)` |
//! | `RW` | endpoint of an `N`-step walk from a uniform start | `q(endpoint)` |
//! | `FN` | uniform neighbor `Z` of a uniform node | `q(Z)` |

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::LabeledGraph;
use crate::sampling::{
    default_walk_length, random_walk_endpoint, sample_friend_of_random_node, sample_random_friend,
    sample_random_node, RandomStream, WalkConfig,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EstimatorKind {
    #[serde(rename = "IP")]
    IntentPolling,
    #[serde(rename = "UN")]
    NaiveNep,
    #[serde(rename = "RW")]
    RandomWalkNep,
    #[serde(rename = "FN")]
    FriendOfNodeNep,
}

impl EstimatorKind {
    pub const ALL: [EstimatorKind; 4] = [
        EstimatorKind::IntentPolling,
        EstimatorKind::NaiveNep,
        EstimatorKind::RandomWalkNep,
        EstimatorKind::FriendOfNodeNep,
    ];

    pub fn code(self) -> &'static str {
        match self {
            EstimatorKind::IntentPolling => "IP",
            EstimatorKind::NaiveNep => "UN",
            EstimatorKind::RandomWalkNep => "RW",
            EstimatorKind::FriendOfNodeNep => "FN",
        }
    }

    /// Stable index used for seed derivation.
    pub fn index(self) -> u64 {
        match self {
            EstimatorKind::IntentPolling => 0,
            EstimatorKind::NaiveNep => 1,
            EstimatorKind::RandomWalkNep => 2,
            EstimatorKind::FriendOfNodeNep => 3,
        }
    }
}

impl fmt::Display for EstimatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for EstimatorKind {
    type Err = EstimatorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "IP" => Ok(EstimatorKind::IntentPolling),
            "UN" => Ok(EstimatorKind::NaiveNep),
            "RW" => Ok(EstimatorKind::RandomWalkNep),
            "FN" => Ok(EstimatorKind::FriendOfNodeNep),
            _ => Err(EstimatorError::UnknownKind(s.to_owned())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EstimatorError {
    #[error("sampling budget must be at least 1")]
    ZeroBudget,
    #[error("random-walk polling needs a connected graph")]
    Disconnected,
    #[error("unknown estimator {0:?} (expected IP, UN, RW or FN)")]
    UnknownKind(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PollConfig {
    /// Number of queried individuals.
    pub budget: usize,
    /// Walk length for `RW`; `None` means `10 * ceil(log2 n)`.
    pub walk_length: Option<usize>,
    pub seed: u64,
    /// Lazy walk for `RW` (useful on bipartite graphs).
    pub lazy: bool,
    /// `RW` draws each respondent straight from the degree-proportional law
    /// instead of walking. Test hook that removes mixing error.
    pub exact_friend_mode: bool,
}

impl PollConfig {
    pub fn new(budget: usize, seed: u64) -> Self {
        Self {
            budget,
            walk_length: None,
            seed,
            lazy: false,
            exact_friend_mode: false,
        }
    }

    pub fn walk_length(mut self, n: usize) -> Self {
        self.walk_length = Some(n);
        self
    }

    pub fn exact_friend_mode(mut self, on: bool) -> Self {
        self.exact_friend_mode = on;
        self
    }

    pub fn lazy(mut self, on: bool) -> Self {
        self.lazy = on;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PollEstimate {
    pub value: f64,
    pub kind: EstimatorKind,
    pub config: PollConfig,
}

fn average<F>(
    cfg: &PollConfig,
    kind: EstimatorKind,
    mut draw: F,
) -> Result<PollEstimate, EstimatorError>
where
    F: FnMut(&mut RandomStream) -> f64,
{
    if cfg.budget == 0 {
        return Err(EstimatorError::ZeroBudget);
    }
    let mut rs = RandomStream::new(cfg.seed);
    let total: f64 = (0..cfg.budget).map(|_| draw(&mut rs)).sum();
    Ok(PollEstimate {
        value: total / cfg.budget as f64,
        kind,
        config: *cfg,
    })
}

pub fn intent_poll(lg: &LabeledGraph, cfg: &PollConfig) -> Result<PollEstimate, EstimatorError> {
    let g = lg.graph();
    average(cfg, EstimatorKind::IntentPolling, |rs| {
        lg.label(sample_random_node(g, rs)) as f64
    })
}

pub fn naive_nep(lg: &LabeledGraph, cfg: &PollConfig) -> Result<PollEstimate, EstimatorError> {
    let g = lg.graph();
    average(cfg, EstimatorKind::NaiveNep, |rs| {
        lg.nep_response(sample_random_node(g, rs))
    })
}

pub fn rw_nep(lg: &LabeledGraph, cfg: &PollConfig) -> Result<PollEstimate, EstimatorError> {
    let g = lg.graph();
    if cfg.exact_friend_mode {
        return average(cfg, EstimatorKind::RandomWalkNep, |rs| {
            lg.nep_response(sample_random_friend(g, rs))
        });
    }
    if !g.flags().connected {
        return Err(EstimatorError::Disconnected);
    }
    let walk = WalkConfig::new(
        cfg.walk_length
            .unwrap_or_else(|| default_walk_length(g.node_count())),
        1,
    )
    .lazy(cfg.lazy);
    average(cfg, EstimatorKind::RandomWalkNep, |rs| {
        let start = sample_random_node(g, rs);
        lg.nep_response(random_walk_endpoint(g, start, &walk, rs))
    })
}

pub fn fn_nep(lg: &LabeledGraph, cfg: &PollConfig) -> Result<PollEstimate, EstimatorError> {
    let g = lg.graph();
    average(cfg, EstimatorKind::FriendOfNodeNep, |rs| {
        lg.nep_response(sample_friend_of_random_node(g, rs))
    })
}

pub fn poll(
    lg: &LabeledGraph,
    kind: EstimatorKind,
    cfg: &PollConfig,
) -> Result<PollEstimate, EstimatorError> {
    match kind {
        EstimatorKind::IntentPolling => intent_poll(lg, cfg),
        EstimatorKind::NaiveNep => naive_nep(lg, cfg),
        EstimatorKind::RandomWalkNep => rw_nep(lg, cfg),
        EstimatorKind::FriendOfNodeNep => fn_nep(lg, cfg),
    }
}

/// Single response of one estimator, for callers that drive their own
/// stream (e.g. paired comparisons).
pub fn single_response<R: Rng + ?Sized>(
    lg: &LabeledGraph,
    kind: EstimatorKind,
    rng: &mut R,
) -> f64 {
    let g = lg.graph();
    match kind {
        EstimatorKind::IntentPolling => lg.label(sample_random_node(g, rng)) as f64,
        EstimatorKind::NaiveNep => lg.nep_response(sample_random_node(g, rng)),
        EstimatorKind::RandomWalkNep => lg.nep_response(sample_random_friend(g, rng)),
        EstimatorKind::FriendOfNodeNep => lg.nep_response(sample_friend_of_random_node(g, rng)),
    }
}
