use std::sync::Arc;

use rand::Rng;

use super::NetgenError;
use crate::analytics::AnalyticsError;
use crate::graph::{Graph, LabeledGraph};
use crate::sampling::RandomStream;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LabelTarget {
    pub base_probability: f64,
    pub target: f64,
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl LabelTarget {
    pub fn new(base_probability: f64, target: f64) -> Self {
        Self {
            base_probability,
            target,
            tolerance: 0.02,
            max_iterations: 5_000_000,
        }
    }
}

#[derive(Debug, Clone)]
pub struct LabelOutcome {
    pub labeled: LabeledGraph,
    pub achieved: f64,
    pub swaps: usize,
    pub proposals: usize,
}

/// Draws iid Bernoulli labels, then swaps the labels of a random 0-node
/// `v0` and a random 1-node `v1` whenever that moves the degree-label
/// correlation toward the target. A swap raises the correlation exactly
/// when `d(v0) > d(v1)`. The number of 1-labels never changes.
pub fn assign_labels(
    g: impl Into<Arc<Graph>>,
    target: &LabelTarget,
    rs: &mut RandomStream,
) -> Result<LabelOutcome, NetgenError> {
    let g: Arc<Graph> = g.into();
    let p = target.base_probability;
    if !(p > 0.0 && p < 1.0) {
        return Err(NetgenError::DegenerateSpec(format!(
            "label probability {p} not in (0, 1)"
        )));
    }
    let n = g.node_count();
    let mut labels: Vec<u8> = (0..n).map(|_| rs.random_bool(p) as u8).collect();
    let mut zeros: Vec<usize> = (0..n).filter(|&v| labels[v] == 0).collect();
    let mut ones: Vec<usize> = (0..n).filter(|&v| labels[v] == 1).collect();
    if g.is_regular() || zeros.is_empty() || ones.is_empty() {
        return Err(AnalyticsError::DegreeLabelCorrUndefined.into());
    }

    let nf = n as f64;
    let mean_d = g.edge_end_count() as f64 / nf;
    let sd_d = (g
        .degrees()
        .map(|d| (d as f64 - mean_d).powi(2))
        .sum::<f64>()
        / nf)
        .sqrt();
    let frac = ones.len() as f64 / nf;
    let scale = sd_d * (frac * (1.0 - frac)).sqrt();
    // correlation as a function of the integer sum of degrees of 1-nodes
    let rho = |weighted: i64| (weighted as f64 / nf - frac * mean_d) / scale;
    let distance = |weighted: i64| (rho(weighted) - target.target).abs();
    let mut weighted: i64 = ones.iter().map(|&v| g.degree(v) as i64).sum();

    let mut swaps = 0;
    let mut proposals = 0;
    while distance(weighted) > target.tolerance && proposals < target.max_iterations {
        proposals += 1;
        let i = rs.random_range(0..zeros.len());
        let j = rs.random_range(0..ones.len());
        let (v0, v1) = (zeros[i], ones[j]);
        let next = weighted + g.degree(v0) as i64 - g.degree(v1) as i64;
        if distance(next) >= distance(weighted) {
            continue;
        }
        labels[v0] = 1;
        labels[v1] = 0;
        zeros[i] = v1;
        ones[j] = v0;
        weighted = next;
        swaps += 1;
    }

    let achieved = rho(weighted);
    let outcome = LabelOutcome {
        labeled: LabeledGraph::new(g, labels)?,
        achieved,
        swaps,
        proposals,
    };
    if (achieved - target.target).abs() > target.tolerance {
        return Err(NetgenError::LabelsUnreachable(Box::new(outcome)));
    }
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytics::degree_label_correlation;
    use crate::graph::build_graph;
    use crate::netgen::{configuration_model, ConfigModelSpec};

    #[test]
    fn hits_targets_and_keeps_label_count() {
        let g = Arc::new(
            configuration_model(&ConfigModelSpec::new(2000, 2.4, 8))
                .unwrap()
                .graph,
        );
        for target in [-0.1, 0.0, 0.1] {
            let t = LabelTarget::new(0.3, target);
            let out = assign_labels(Arc::clone(&g), &t, &mut RandomStream::new(21)).unwrap();
            // same stream prefix, so the Bernoulli draw is shared across targets
            let before = {
                let mut rs = RandomStream::new(21);
                (0..g.node_count()).filter(|_| rs.random_bool(0.3)).count()
            };
            assert_eq!(out.labeled.ones(), before);
            let rho = degree_label_correlation(&out.labeled).unwrap();
            assert!((rho - out.achieved).abs() < 1e-9);
            assert!((rho - target).abs() <= 0.02, "{rho} vs {target}");
        }
    }

    #[test]
    fn regular_graph_is_undefined() {
        let g = build_graph(&[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(
            assign_labels(g, &LabelTarget::new(0.5, 0.1), &mut RandomStream::new(1)),
            Err(NetgenError::Undefined(
                AnalyticsError::DegreeLabelCorrUndefined
            ))
        ));
    }

    #[test]
    fn unreachable_target_returns_best_effort() {
        // two degree classes only; perfect correlation needs every hub labeled 1
        let g = build_graph(&[(0, 1), (0, 2), (0, 3), (4, 5), (4, 6), (4, 7)]).unwrap();
        let t = LabelTarget {
            max_iterations: 500,
            ..LabelTarget::new(0.5, 0.999)
        };
        match assign_labels(g, &t, &mut RandomStream::new(4)) {
            Err(NetgenError::LabelsUnreachable(out)) => {
                assert!(out.achieved < 0.999);
                assert!(out.proposals <= 500);
            }
            Err(NetgenError::Undefined(_)) => {}
            other => panic!("{other:?}"),
        }
    }
}
