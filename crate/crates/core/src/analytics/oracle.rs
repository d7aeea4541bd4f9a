//! Enumeration of single-response laws, independent of the matrix routes.

use super::Moments;
use crate::graph::LabeledGraph;

/// Which respondent law to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResponseLaw {
    /// `f(v)`, `v` uniform.
    Intent,
    /// `q(v)`, `v` uniform.
    Naive,
    /// `q(v)` with `v` drawn with probability `d(v)/M`.
    RandomWalkStationary,
    /// `q(u)` over all pairs `(v, u in N(v))`, weight `1/(n d(v))`.
    FriendOfNode,
}

/// Exact mean and variance of one response under `law`, by enumeration.
///
/// Responses are recounted from the labels here rather than taken from
/// the cached values on [`LabeledGraph`].
pub fn brute_force_estimator_law(lg: &LabeledGraph, law: ResponseLaw) -> Moments {
    let g = lg.graph();
    let n = g.node_count() as f64;
    let m = g.edge_end_count() as f64;
    let response = |v: usize| {
        let ones = g
            .neighbors(v)
            .iter()
            .filter(|&&u| lg.labels()[u] == 1)
            .count();
        ones as f64 / g.degree(v) as f64
    };

    let mut outcomes: Vec<(f64, f64)> = Vec::new();
    match law {
        ResponseLaw::Intent => {
            for v in 0..g.node_count() {
                outcomes.push((1.0 / n, lg.labels()[v] as f64));
            }
        }
        ResponseLaw::Naive => {
            for v in 0..g.node_count() {
                outcomes.push((1.0 / n, response(v)));
            }
        }
        ResponseLaw::RandomWalkStationary => {
            // one outcome per edge end
            for &(u, v) in g.edges() {
                outcomes.push((1.0 / m, response(u)));
                outcomes.push((1.0 / m, response(v)));
            }
        }
        ResponseLaw::FriendOfNode => {
            for v in 0..g.node_count() {
                let w = 1.0 / (n * g.degree(v) as f64);
                for &u in g.neighbors(v) {
                    outcomes.push((w, response(u)));
                }
            }
        }
    }
    let mean: f64 = outcomes.iter().map(|(p, x)| p * x).sum();
    let variance: f64 = outcomes.iter().map(|(p, x)| p * (x - mean).powi(2)).sum();
    Moments { mean, variance }
}
