use std::collections::HashSet;

use rand::Rng;

use super::NetgenError;
use crate::analytics::AnalyticsError;
use crate::graph::{Graph, Node};
use crate::sampling::RandomStream;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RewireTarget {
    pub target: f64,
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl RewireTarget {
    pub fn new(target: f64) -> Self {
        Self {
            target,
            tolerance: 0.02,
            max_iterations: 5_000_000,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RewireOutcome {
    pub graph: Graph,
    pub achieved: f64,
    pub accepted: usize,
    pub proposals: usize,
}

/// Degree correlation tracked through the exact integer sum of
/// `d(u) d(v)` over edges; the degree sequence, and so every other term,
/// never changes.
struct Assortativity {
    cross: i128,
    edges: f64,
    mu_sq: f64,
    var: f64,
}

impl Assortativity {
    fn new(g: &Graph) -> Result<Self, AnalyticsError> {
        let ends = g.edge_end_count() as f64;
        let (mut s1, mut s2) = (0.0, 0.0);
        for d in g.degrees() {
            let d = d as f64;
            s1 += d * d;
            s2 += d * d * d;
        }
        let mu = s1 / ends;
        let var = s2 / ends - mu * mu;
        if g.is_regular() || var <= 0.0 {
            return Err(AnalyticsError::AssortativityUndefined);
        }
        let cross = g
            .edges()
            .iter()
            .map(|&(u, v)| (g.degree(u) * g.degree(v)) as i128)
            .sum();
        Ok(Self {
            cross,
            edges: g.edge_count() as f64,
            mu_sq: mu * mu,
            var,
        })
    }

    fn value_with(&self, cross: i128) -> f64 {
        (cross as f64 / self.edges - self.mu_sq) / self.var
    }

    fn value(&self) -> f64 {
        self.value_with(self.cross)
    }
}

fn key(u: Node, v: Node) -> (Node, Node) {
    (u.min(v), u.max(v))
}

/// Degree-preserving double-edge swaps: two uniform edges `(v1, v2)`,
/// `(u1, u2)` (each with a random orientation) become `(v1, u1)`, `(v2, u2)`
/// when that brings the assortativity closer to the target and creates no
/// self-loop or repeated edge.
///
/// Stops as soon as the target is within tolerance. Hitting
/// `max_iterations` first yields [`NetgenError::RewireUnreachable`] with the
/// best graph reached.
pub fn rewire_to_assortativity(
    g: &Graph,
    target: &RewireTarget,
    rs: &mut RandomStream,
) -> Result<RewireOutcome, NetgenError> {
    if g.edge_count() < 2 {
        return Err(NetgenError::DegenerateSpec(
            "rewiring needs at least 2 edges".into(),
        ));
    }
    let mut stats = Assortativity::new(g)?;
    let mut edges: Vec<(Node, Node)> = g.edges().to_vec();
    let mut present: HashSet<(Node, Node)> = edges.iter().copied().collect();
    let degree: Vec<i128> = g.degrees().map(|d| d as i128).collect();
    let distance = |r: f64| (r - target.target).abs();

    let mut accepted = 0;
    let mut proposals = 0;
    while distance(stats.value()) > target.tolerance && proposals < target.max_iterations {
        proposals += 1;
        let i = rs.random_range(0..edges.len());
        let j = rs.random_range(0..edges.len());
        if i == j {
            continue;
        }
        let (mut v1, mut v2) = edges[i];
        if rs.random::<bool>() {
            std::mem::swap(&mut v1, &mut v2);
        }
        let (mut u1, mut u2) = edges[j];
        if rs.random::<bool>() {
            std::mem::swap(&mut u1, &mut u2);
        }
        if v1 == u1 || v2 == u2 {
            continue;
        }
        let (a, b) = (key(v1, u1), key(v2, u2));
        if present.contains(&a) || present.contains(&b) {
            continue;
        }
        let delta = degree[v1] * degree[u1] + degree[v2] * degree[u2]
            - degree[v1] * degree[v2]
            - degree[u1] * degree[u2];
        if distance(stats.value_with(stats.cross + delta)) >= distance(stats.value()) {
            continue;
        }
        present.remove(&edges[i]);
        present.remove(&edges[j]);
        present.insert(a);
        present.insert(b);
        edges[i] = a;
        edges[j] = b;
        stats.cross += delta;
        accepted += 1;
    }

    let graph = Graph::from_edges(g.node_count(), &edges)?;
    let graph = relabel_like(g, graph);
    let outcome = RewireOutcome {
        graph,
        achieved: stats.value(),
        accepted,
        proposals,
    };
    if distance(outcome.achieved) > target.tolerance {
        return Err(NetgenError::RewireUnreachable(Box::new(outcome)));
    }
    Ok(outcome)
}

/// Carries the original ids of `template` over to `g` (same node count).
fn relabel_like(template: &Graph, g: Graph) -> Graph {
    if template
        .original_ids()
        .iter()
        .enumerate()
        .all(|(i, &id)| id == i as u64)
    {
        return g;
    }
    let pairs: Vec<(u64, u64)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (template.original_id(u), template.original_id(v)))
        .collect();
    crate::graph::build_graph(&pairs).expect("relabeling preserves validity")
}
