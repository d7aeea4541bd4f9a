use std::collections::HashSet;

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::seq::SliceRandom;
use rand::Rng;

use super::NetgenError;
use crate::graph::{build_graph, Graph};
use crate::sampling::RandomStream;

/// Configuration model with `P(k) ∝ k^{-alpha}` on `[k_min, k_max]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConfigModelSpec {
    pub node_count: usize,
    pub exponent: f64,
    pub k_min: usize,
    pub k_max: usize,
    pub seed: u64,
}

impl ConfigModelSpec {
    /// `k_min = 1`, `k_max = floor(sqrt(n))`.
    pub fn new(node_count: usize, exponent: f64, seed: u64) -> Self {
        Self {
            node_count,
            exponent,
            k_min: 1,
            k_max: ((node_count as f64).sqrt() as usize).max(1),
            seed,
        }
    }

    pub fn k_min(mut self, k: usize) -> Self {
        self.k_min = k;
        self
    }

    pub fn k_max(mut self, k: usize) -> Self {
        self.k_max = k;
        self
    }
}

/// Generated graph plus what the erasure step removed.
#[derive(Debug, Clone)]
pub struct ConfigModel {
    /// Node ids are the generator's indices; nodes left without edges are
    /// absent.
    pub graph: Graph,
    /// Stubs removed with self-loops and repeated edges.
    pub erased_stubs: usize,
    /// Nodes that lost every edge to erasure.
    pub dropped_nodes: usize,
}

pub fn configuration_model(spec: &ConfigModelSpec) -> Result<ConfigModel, NetgenError> {
    let n = spec.node_count;
    if n < 2 {
        return Err(NetgenError::DegenerateSpec("need at least 2 nodes".into()));
    }
    if spec.k_min == 0 {
        return Err(NetgenError::DegenerateSpec(
            "k_min must be at least 1".into(),
        ));
    }
    if spec.k_max < spec.k_min {
        return Err(NetgenError::DegenerateSpec(format!(
            "k_max {} < k_min {}",
            spec.k_max, spec.k_min
        )));
    }
    if spec.k_max > n - 1 {
        return Err(NetgenError::DegenerateSpec(format!(
            "k_max {} exceeds n - 1 = {}",
            spec.k_max,
            n - 1
        )));
    }
    if spec.exponent.is_nan() || spec.exponent <= 1.0 {
        return Err(NetgenError::DegenerateSpec("exponent must exceed 1".into()));
    }

    let mut rs = RandomStream::new(spec.seed);
    let weights: Vec<f64> = (spec.k_min..=spec.k_max)
        .map(|k| (k as f64).powf(-spec.exponent))
        .collect();
    let law = WeightedIndex::new(&weights).expect("positive weights");
    let mut degrees: Vec<usize> = (0..n).map(|_| spec.k_min + law.sample(&mut rs)).collect();
    if degrees.iter().sum::<usize>() % 2 == 1 {
        let v = rs.random_range(0..n);
        degrees[v] += 1;
    }

    let mut stubs: Vec<usize> = degrees
        .iter()
        .enumerate()
        .flat_map(|(v, &d)| std::iter::repeat_n(v, d))
        .collect();
    stubs.shuffle(&mut rs);

    let mut seen = HashSet::with_capacity(stubs.len() / 2);
    let mut pairs = Vec::with_capacity(stubs.len() / 2);
    let mut erased_stubs = 0;
    for pair in stubs.chunks_exact(2) {
        let (u, v) = (pair[0], pair[1]);
        if u == v || !seen.insert((u.min(v), u.max(v))) {
            erased_stubs += 2;
            continue;
        }
        pairs.push((u as u64, v as u64));
    }
    let graph = build_graph(&pairs)?;
    let dropped_nodes = n - graph.node_count();
    Ok(ConfigModel {
        graph,
        erased_stubs,
        dropped_nodes,
    })
}
