use std::path::{Path, PathBuf};

use serde::Deserialize;

use super::HarnessError;
use crate::estimators::EstimatorKind;

#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorModel {
    Configuration {
        alpha: f64,
        k_min: usize,
        k_max: Option<usize>,
    },
    ErdosRenyi {
        p: f64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSpec {
    pub model: GeneratorModel,
    pub node_count: usize,
    /// Rewire toward this assortativity after generation.
    pub rkk: Option<f64>,
    /// Keep only the largest connected component (applied after rewiring).
    pub giant: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub enum GraphSource {
    File(PathBuf),
    Generated(GeneratorSpec),
}

#[derive(Debug, Clone, PartialEq)]
pub enum LabelSource {
    File(PathBuf),
    /// Bernoulli(`p`) labels, optionally swapped toward a degree-label
    /// correlation `rho`.
    Generated {
        p: f64,
        rho: Option<f64>,
    },
}

/// A parsed and validated sweep description.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub graph: GraphSource,
    pub labels: LabelSource,
    /// `None` means the default grid for the graph size.
    pub budgets: Option<Vec<usize>>,
    pub replications: usize,
    pub estimators: Vec<EstimatorKind>,
    pub walk_length: Option<usize>,
    pub rw_exact_friend: bool,
    pub lazy_walk: bool,
    pub seed: u64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGraph {
    path: Option<PathBuf>,
    model: Option<String>,
    n: Option<usize>,
    alpha: Option<f64>,
    k_min: Option<usize>,
    k_max: Option<usize>,
    p: Option<f64>,
    rkk: Option<f64>,
    giant: Option<bool>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLabels {
    path: Option<PathBuf>,
    p: Option<f64>,
    rho: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    graph: RawGraph,
    labels: RawLabels,
    budgets: Option<Vec<usize>>,
    replications: Option<usize>,
    estimators: Option<Vec<String>>,
    walk_length: Option<usize>,
    rw_exact_friend: Option<bool>,
    lazy_walk: Option<bool>,
    seed: u64,
}

fn bad(msg: impl Into<String>) -> HarnessError {
    HarnessError::Config(msg.into())
}

impl ExperimentConfig {
    /// Parses the key-value config text. Relative paths resolve against
    /// `base_dir`.
    pub fn parse(text: &str, base_dir: &Path) -> Result<Self, HarnessError> {
        let raw: RawConfig = toml::from_str(text).map_err(|e| bad(e.to_string()))?;
        let resolve = |p: PathBuf| if p.is_relative() { base_dir.join(p) } else { p };

        let g = raw.graph;
        let graph = match (g.path, g.model.as_deref()) {
            (Some(_), Some(_)) => return Err(bad("graph.path and graph.model are exclusive")),
            (Some(path), None) => GraphSource::File(resolve(path)),
            (None, Some(model)) => {
                let node_count =
                    g.n.ok_or_else(|| bad("graph.n is required for generated graphs"))?;
                let model = match model {
                    "config" | "configuration" => GeneratorModel::Configuration {
                        alpha: g
                            .alpha
                            .ok_or_else(|| bad("graph.alpha is required for model = config"))?,
                        k_min: g.k_min.unwrap_or(1),
                        k_max: g.k_max,
                    },
                    "er" | "erdos-renyi" => GeneratorModel::ErdosRenyi {
                        p: g.p
                            .ok_or_else(|| bad("graph.p is required for model = er"))?,
                    },
                    other => return Err(bad(format!("unknown graph.model {other:?}"))),
                };
                GraphSource::Generated(GeneratorSpec {
                    model,
                    node_count,
                    rkk: g.rkk,
                    giant: g.giant.unwrap_or(true),
                })
            }
            (None, None) => return Err(bad("graph needs either path or model")),
        };

        let l = raw.labels;
        let labels = match (l.path, l.p) {
            (Some(_), Some(_)) => return Err(bad("labels.path and labels.p are exclusive")),
            (Some(path), None) => {
                if l.rho.is_some() {
                    return Err(bad("labels.rho needs generated labels"));
                }
                LabelSource::File(resolve(path))
            }
            (None, Some(p)) => {
                if !(p > 0.0 && p < 1.0) {
                    return Err(bad("labels.p must lie in (0, 1)"));
                }
                LabelSource::Generated { p, rho: l.rho }
            }
            (None, None) => return Err(bad("labels need either path or p")),
        };

        if let Some(b) = &raw.budgets {
            if b.is_empty() || b.contains(&0) {
                return Err(bad("budgets must be a nonempty list of positive integers"));
            }
        }
        let replications = raw.replications.unwrap_or(600);
        if replications == 0 {
            return Err(bad("replications must be at least 1"));
        }
        let estimators = match raw.estimators {
            None => EstimatorKind::ALL.to_vec(),
            Some(names) => {
                let mut kinds = names
                    .iter()
                    .map(|s| s.parse::<EstimatorKind>().map_err(|e| bad(e.to_string())))
                    .collect::<Result<Vec<_>, _>>()?;
                if kinds.is_empty() {
                    return Err(bad("estimators must not be empty"));
                }
                kinds.dedup();
                kinds
            }
        };

        Ok(Self {
            graph,
            labels,
            budgets: raw.budgets,
            replications,
            estimators,
            walk_length: raw.walk_length,
            rw_exact_friend: raw.rw_exact_friend.unwrap_or(false),
            lazy_walk: raw.lazy_walk.unwrap_or(false),
            seed: raw.seed,
        })
    }

    pub fn load(path: &Path) -> Result<Self, HarnessError> {
        let text =
            std::fs::read_to_string(path).map_err(|e| bad(format!("{}: {e}", path.display())))?;
        Self::parse(&text, path.parent().unwrap_or(Path::new(".")))
    }
}

/// Every budget from 1 to `min(50, ceil(n / 100))`, then about ten
/// log-spaced points per decade up to `ceil(n / 100)`.
pub fn default_budgets(node_count: usize) -> Vec<usize> {
    let top = node_count.div_ceil(100).max(1);
    let mut budgets: Vec<usize> = (1..=top.min(50)).collect();
    let mut x = 50.0f64;
    while *budgets.last().unwrap() < top {
        x *= 10f64.powf(0.1);
        let b = (x.round() as usize).min(top);
        if b > *budgets.last().unwrap() {
            budgets.push(b);
        }
    }
    budgets
}
