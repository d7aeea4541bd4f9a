use std::sync::Arc;

use super::config::{ExperimentConfig, GeneratorModel, GeneratorSpec, GraphSource, LabelSource};
use super::{seed_tags, HarnessError};
use crate::analytics::assortativity;
use crate::graph::{Graph, LabeledGraph};
use crate::io::{read_edge_list, read_labels};
use crate::netgen::{
    assign_labels, configuration_model, erdos_renyi, rewire_to_assortativity, ConfigModelSpec,
    ErdosRenyiSpec, LabelTarget, RewireTarget,
};
use crate::sampling::{derive_seed, RandomStream};

/// Rewiring stops closer to the target than the library default so that
/// taking the giant component afterwards keeps the value near the target.
const REWIRE_TOLERANCE: f64 = 0.005;

/// Rewire and re-extract the giant component at most this many times.
const MAX_GIANT_ROUNDS: u64 = 16;

fn giant_component(graph: Graph, dropped_nodes: &mut usize) -> Graph {
    let giant = graph.largest_component();
    *dropped_nodes += graph.node_count() - giant.node_count();
    giant
}

#[derive(Debug, Clone)]
pub struct Generated {
    pub graph: Graph,
    /// Assortativity of the final graph, when a target was requested. With
    /// `giant`, the graph is restricted to its largest component before
    /// rewiring, and rewiring is repeated on the largest component until
    /// the value there is within tolerance.
    pub achieved_rkk: Option<f64>,
    pub erased_stubs: usize,
    /// Nodes lost to erasure or to component extraction.
    pub dropped_nodes: usize,
}

/// Builds a synthetic graph. All randomness derives from `seed`.
pub fn generate_graph(spec: &GeneratorSpec, seed: u64) -> Result<Generated, HarnessError> {
    let graph_seed = derive_seed(seed, seed_tags::GRAPH);
    let (graph, erased_stubs, mut dropped_nodes) = match spec.model {
        GeneratorModel::Configuration {
            alpha,
            k_min,
            k_max,
        } => {
            let mut cm = ConfigModelSpec::new(spec.node_count, alpha, graph_seed).k_min(k_min);
            if let Some(k) = k_max {
                cm = cm.k_max(k);
            }
            let out = configuration_model(&cm)?;
            (out.graph, out.erased_stubs, out.dropped_nodes)
        }
        GeneratorModel::ErdosRenyi { p } => {
            let g = erdos_renyi(&ErdosRenyiSpec {
                node_count: spec.node_count,
                edge_probability: p,
                seed: graph_seed,
            })?;
            (g, 0, 0)
        }
    };
    let mut graph = graph;
    if spec.giant {
        graph = giant_component(graph, &mut dropped_nodes);
    }
    if let Some(target) = spec.rkk {
        let rs = RandomStream::new(derive_seed(seed, seed_tags::REWIRE));
        let goal = RewireTarget {
            tolerance: REWIRE_TOLERANCE,
            ..RewireTarget::new(target)
        };
        let mut round = 0;
        loop {
            graph = rewire_to_assortativity(&graph, &goal, &mut rs.substream(round))?.graph;
            if !spec.giant || graph.flags().connected {
                break;
            }
            graph = giant_component(graph, &mut dropped_nodes);
            let achieved = assortativity(&graph)?;
            if (achieved - target).abs() <= RewireTarget::new(target).tolerance {
                break;
            }
            round += 1;
            if round == MAX_GIANT_ROUNDS {
                return Err(HarnessError::GiantTargetMissed {
                    achieved,
                    target,
                    rounds: MAX_GIANT_ROUNDS,
                });
            }
        }
    }
    let achieved_rkk = match spec.rkk {
        Some(_) => Some(assortativity(&graph)?),
        None => None,
    };
    Ok(Generated {
        graph,
        achieved_rkk,
        erased_stubs,
        dropped_nodes,
    })
}

#[derive(Debug, Clone)]
pub struct Labeled {
    pub labeled: LabeledGraph,
    pub achieved_rho: Option<f64>,
    /// Nodes that had no entry in a label file.
    pub missing: usize,
}

pub fn label_graph(
    graph: Arc<Graph>,
    source: &LabelSource,
    seed: u64,
) -> Result<Labeled, HarnessError> {
    match source {
        LabelSource::File(path) => {
            let file = read_labels(&graph, path)?;
            Ok(Labeled {
                labeled: LabeledGraph::new(graph, file.labels)?,
                achieved_rho: None,
                missing: file.missing,
            })
        }
        LabelSource::Generated { p, rho } => {
            let mut rs = RandomStream::new(derive_seed(seed, seed_tags::LABELS));
            match rho {
                Some(target) => {
                    let out = assign_labels(graph, &LabelTarget::new(*p, *target), &mut rs)?;
                    Ok(Labeled {
                        labeled: out.labeled,
                        achieved_rho: Some(out.achieved),
                        missing: 0,
                    })
                }
                None => {
                    use rand::Rng;
                    let labels = (0..graph.node_count())
                        .map(|_| rs.random_bool(*p) as u8)
                        .collect();
                    Ok(Labeled {
                        labeled: LabeledGraph::new(graph, labels)?,
                        achieved_rho: None,
                        missing: 0,
                    })
                }
            }
        }
    }
}

/// Graph and labels ready for a sweep.
#[derive(Debug, Clone)]
pub struct Prepared {
    pub labeled: LabeledGraph,
    pub achieved_rkk: Option<f64>,
    pub achieved_rho: Option<f64>,
}

pub fn prepare(cfg: &ExperimentConfig) -> Result<Prepared, HarnessError> {
    let (graph, achieved_rkk) = match &cfg.graph {
        GraphSource::File(path) => (read_edge_list(path)?, None),
        GraphSource::Generated(spec) => {
            let out = generate_graph(spec, cfg.seed)?;
            (out.graph, out.achieved_rkk)
        }
    };
    let labeled = label_graph(Arc::new(graph), &cfg.labels, cfg.seed)?;
    Ok(Prepared {
        labeled: labeled.labeled,
        achieved_rkk,
        achieved_rho: labeled.achieved_rho,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(rkk: Option<f64>, giant: bool) -> GeneratorSpec {
        GeneratorSpec {
            model: GeneratorModel::Configuration {
                alpha: 2.4,
                k_min: 1,
                k_max: None,
            },
            node_count: 1500,
            rkk,
            giant,
        }
    }

    #[test]
    fn same_seed_same_graph() {
        let a = generate_graph(&spec(Some(0.1), true), 5).unwrap();
        let b = generate_graph(&spec(Some(0.1), true), 5).unwrap();
        assert_eq!(a.graph, b.graph);
        assert_eq!(a.dropped_nodes, b.dropped_nodes);
        let c = generate_graph(&spec(Some(0.1), true), 6).unwrap();
        assert_ne!(a.graph, c.graph);
    }

    #[test]
    fn giant_component_keeps_the_target() {
        for target in [-0.2, 0.2] {
            let out = generate_graph(&spec(Some(target), true), 9).unwrap();
            assert!(out.graph.flags().connected);
            let r = out.achieved_rkk.unwrap();
            assert_eq!(r, assortativity(&out.graph).unwrap());
            assert!((r - target).abs() <= 0.02, "{r}");
            assert!(out.dropped_nodes > 0);
        }
    }

    #[test]
    fn labels_from_generator() {
        let g = Arc::new(generate_graph(&spec(None, true), 3).unwrap().graph);
        let plain = label_graph(
            Arc::clone(&g),
            &LabelSource::Generated { p: 0.4, rho: None },
            3,
        )
        .unwrap();
        assert_eq!(plain.achieved_rho, None);
        let tuned = label_graph(
            g,
            &LabelSource::Generated {
                p: 0.4,
                rho: Some(0.1),
            },
            3,
        )
        .unwrap();
        assert!((tuned.achieved_rho.unwrap() - 0.1).abs() <= 0.02);
        assert_eq!(plain.labeled.ones(), tuned.labeled.ones());
    }
}
