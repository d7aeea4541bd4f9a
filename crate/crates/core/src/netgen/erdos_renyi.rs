use rand::Rng;

use super::NetgenError;
use crate::graph::{Graph, GraphError};
use crate::sampling::RandomStream;

const MAX_ATTEMPTS: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErdosRenyiSpec {
    pub node_count: usize,
    pub edge_probability: f64,
    pub seed: u64,
}

/// `G(n, p)`. Samples containing an isolated node are redrawn from the next
/// substream, up to a fixed number of attempts.
pub fn erdos_renyi(spec: &ErdosRenyiSpec) -> Result<Graph, NetgenError> {
    let (n, p) = (spec.node_count, spec.edge_probability);
    if n < 2 {
        return Err(NetgenError::DegenerateSpec("need at least 2 nodes".into()));
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(NetgenError::DegenerateSpec(format!(
            "edge probability {p} not in (0, 1]"
        )));
    }
    let root = RandomStream::new(spec.seed);
    for attempt in 0..MAX_ATTEMPTS {
        let mut rs = root.substream(attempt as u64);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rs.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        match Graph::from_edges(n, &edges) {
            Ok(g) => return Ok(g),
            Err(GraphError::IsolatedNode(_) | GraphError::Empty) => continue,
            Err(e) => return Err(e.into()),
        }
    }
    Err(NetgenError::IsolatedNodeAfterRetries {
        attempts: MAX_ATTEMPTS,
    })
}
