//! Immutable undirected simple graphs and binary node labels.
//!
//! Nodes are dense indices `0..n`. Input ids (arbitrary non-negative
//! integers) are compacted by ascending id, so the canonical graph does not
//! depend on the order the edges were listed in. The original id of every
//! node is kept for output.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Arc, OnceLock};

use thiserror::Error;

/// Dense node index.
pub type Node = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no edges")]
    Empty,
    #[error("self-loop on node {0}")]
    SelfLoop(u64),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(u64, u64),
    #[error("node {0} has no neighbors")]
    IsolatedNode(u64),
    #[error("node index {node} out of range for {node_count} nodes")]
    NodeOutOfRange { node: usize, node_count: usize },
    #[error("label vector has length {got}, expected {expected}")]
    LabelLength { got: usize, expected: usize },
    #[error("label {label} at node {node} is not 0 or 1")]
    InvalidLabel { node: usize, label: u8 },
}

/// Connectivity and bipartiteness, both computed by full traversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphFlags {
    pub connected: bool,
    pub bipartite: bool,
}

impl GraphFlags {
    /// True when the random walk has the degree-proportional law as its
    /// unique limit.
    pub fn walk_ergodic(&self) -> bool {
        self.connected && !self.bipartite
    }
}

/// Undirected simple graph in compressed adjacency form.
///
/// Neighbor lists are sorted; every node has degree at least one.
#[derive(Debug)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<Node>,
    edges: Vec<(Node, Node)>,
    min_degree: usize,
    original_ids: Vec<u64>,
    flags: OnceLock<GraphFlags>,
}

impl Clone for Graph {
    fn clone(&self) -> Self {
        Self {
            offsets: self.offsets.clone(),
            neighbors: self.neighbors.clone(),
            edges: self.edges.clone(),
            min_degree: self.min_degree,
            original_ids: self.original_ids.clone(),
            flags: self.flags.clone(),
        }
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.offsets == other.offsets
            && self.neighbors == other.neighbors
            && self.original_ids == other.original_ids
    }
}

impl Eq for Graph {}

/// Builds a graph from pairs of arbitrary node ids.
///
/// Ids are compacted to `0..n` in ascending id order. Self-loops and repeated
/// edges (in either orientation) are rejected.
pub fn build_graph(edge_pairs: &[(u64, u64)]) -> Result<Graph, GraphError> {
    if edge_pairs.is_empty() {
        return Err(GraphError::Empty);
    }
    let mut ids: Vec<u64> = edge_pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
    ids.sort_unstable();
    ids.dedup();
    let index: HashMap<u64, Node> = ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();

    let mut seen = HashSet::with_capacity(edge_pairs.len());
    let mut edges = Vec::with_capacity(edge_pairs.len());
    for &(u, v) in edge_pairs {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let (a, b) = (index[&u], index[&v]);
        let key = (a.min(b), a.max(b));
        if !seen.insert(key) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        edges.push(key);
    }
    Graph::assemble(ids.len(), edges, ids)
}

impl Graph {
    /// Builds a graph on exactly `node_count` nodes whose ids are already
    /// dense. Every node must be touched by at least one edge.
    pub fn from_edges(node_count: usize, edges: &[(Node, Node)]) -> Result<Self, GraphError> {
        if edges.is_empty() {
            return Err(GraphError::Empty);
        }
        let mut seen = HashSet::with_capacity(edges.len());
        let mut canonical = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for node in [u, v] {
                if node >= node_count {
                    return Err(GraphError::NodeOutOfRange { node, node_count });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u as u64));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge(u as u64, v as u64));
            }
            canonical.push(key);
        }
        Self::assemble(node_count, canonical, (0..node_count as u64).collect())
    }

    fn assemble(
        node_count: usize,
        mut edges: Vec<(Node, Node)>,
        original_ids: Vec<u64>,
    ) -> Result<Self, GraphError> {
        edges.sort_unstable();
        let mut degree = vec![0usize; node_count];
        for &(u, v) in &edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        if let Some(isolated) = degree.iter().position(|&d| d == 0) {
            return Err(GraphError::IsolatedNode(original_ids[isolated]));
        }
        let mut offsets = Vec::with_capacity(node_count + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut cursor = offsets[..node_count].to_vec();
        let mut neighbors = vec![0; 2 * edges.len()];
        for &(u, v) in &edges {
            neighbors[cursor[u]] = v;
            cursor[u] += 1;
            neighbors[cursor[v]] = u;
            cursor[v] += 1;
        }
        for v in 0..node_count {
            neighbors[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        let min_degree = degree.iter().copied().min().unwrap_or(0);
        Ok(Self {
            offsets,
            neighbors,
            edges,
            min_degree,
            original_ids,
            flags: OnceLock::new(),
        })
    }

    pub fn node_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Number of edge ends, `2|E|`.
    pub fn edge_end_count(&self) -> usize {
        self.neighbors.len()
    }

    pub fn degree(&self, v: Node) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.offsets.windows(2).map(|w| w[1] - w[0])
    }

    pub fn min_degree(&self) -> usize {
        self.min_degree
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().max().unwrap_or(0)
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: Node) -> &[Node] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Canonical edge list: `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(Node, Node)] {
        &self.edges
    }

    pub fn original_id(&self, v: Node) -> u64 {
        self.original_ids[v]
    }

    pub fn original_ids(&self) -> &[u64] {
        &self.original_ids
    }

    /// Dense index of an input id, if the id is part of the graph.
    pub fn index_of(&self, id: u64) -> Option<Node> {
        self.original_ids.binary_search(&id).ok()
    }

    pub fn is_regular(&self) -> bool {
        self.min_degree == self.max_degree()
    }

    /// Connectivity and bipartiteness; computed once and cached.
    pub fn flags(&self) -> GraphFlags {
        *self.flags.get_or_init(|| graph_flags(self))
    }

    /// Component id of every node, numbered in order of first node.
    pub fn components(&self) -> Vec<usize> {
        let n = self.node_count();
        let mut component = vec![usize::MAX; n];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for root in 0..n {
            if component[root] != usize::MAX {
                continue;
            }
            component[root] = next;
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                for &u in self.neighbors(v) {
                    if component[u] == usize::MAX {
                        component[u] = next;
                        queue.push_back(u);
                    }
                }
            }
            next += 1;
        }
        component
    }

    /// Subgraph induced by the largest connected component (ties broken by
    /// lowest component id). Original ids are carried over.
    pub fn largest_component(&self) -> Graph {
        let component = self.components();
        let count = component.iter().max().map_or(0, |c| c + 1);
        let mut sizes = vec![0usize; count];
        for &c in &component {
            sizes[c] += 1;
        }
        let best = (0..count)
            .max_by_key(|&c| (sizes[c], std::cmp::Reverse(c)))
            .unwrap();
        if sizes[best] == self.node_count() {
            return self.clone();
        }
        let mut remap = vec![usize::MAX; self.node_count()];
        let mut ids = Vec::with_capacity(sizes[best]);
        for v in 0..self.node_count() {
            if component[v] == best {
                remap[v] = ids.len();
                ids.push(self.original_ids[v]);
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, _)| component[u] == best)
            .map(|&(u, v)| (remap[u], remap[v]))
            .collect();
        Graph::assemble(ids.len(), edges, ids).expect("component of a valid graph is valid")
    }
}

/// Connectivity from node 0 and exact 2-coloring over every component.
pub fn graph_flags(g: &Graph) -> GraphFlags {
    let n = g.node_count();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut bipartite = true;
    let mut reached_from_zero = 0;
    let mut queue = VecDeque::new();
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            if root == 0 {
                reached_from_zero += 1;
            }
            let side = color[v].unwrap();
            for &u in g.neighbors(v) {
                match color[u] {
                    None => {
                        color[u] = Some(!side);
                        queue.push_back(u);
                    }
                    Some(c) if c == side => bipartite = false,
                    Some(_) => {}
                }
            }
        }
    }
    GraphFlags {
        connected: reached_from_zero == n,
        bipartite,
    }
}

/// A graph together with a binary label per node.
///
/// The neighborhood response of every node is computed once at construction.
#[derive(Debug, Clone)]
pub struct LabeledGraph {
    graph: Arc<Graph>,
    labels: Vec<u8>,
    ones: usize,
    responses: Vec<f64>,
}

impl LabeledGraph {
    pub fn new(graph: impl Into<Arc<Graph>>, labels: Vec<u8>) -> Result<Self, GraphError> {
        let graph = graph.into();
        if labels.len() != graph.node_count() {
            return Err(GraphError::LabelLength {
                got: labels.len(),
                expected: graph.node_count(),
            });
        }
        if let Some(node) = labels.iter().position(|&l| l > 1) {
            return Err(GraphError::InvalidLabel {
                node,
                label: labels[node],
            });
        }
        let ones = labels.iter().filter(|&&l| l == 1).count();
        let responses = (0..graph.node_count())
            .map(|v| {
                let hits: usize = graph.neighbors(v).iter().map(|&u| labels[u] as usize).sum();
                hits as f64 / graph.degree(v) as f64
            })
            .collect();
        Ok(Self {
            graph,
            labels,
            ones,
            responses,
        })
    }

    pub fn from_bools(graph: impl Into<Arc<Graph>>, labels: &[bool]) -> Result<Self, GraphError> {
        Self::new(graph, labels.iter().map(|&b| b as u8).collect())
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn shared_graph(&self) -> Arc<Graph> {
        Arc::clone(&self.graph)
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn label(&self, v: Node) -> u8 {
        self.labels[v]
    }

    pub fn ones(&self) -> usize {
        self.ones
    }

    /// Fraction of nodes labeled 1.
    pub fn true_fraction(&self) -> f64 {
        self.ones as f64 / self.graph.node_count() as f64
    }

    /// Fraction of the neighbors of `v` labeled 1.
    pub fn nep_response(&self, v: Node) -> f64 {
        self.responses[v]
    }

    pub fn responses(&self) -> &[f64] {
        &self.responses
    }
}

/// Fraction of nodes labeled 1.
pub fn true_fraction(lg: &LabeledGraph) -> f64 {
    lg.true_fraction()
}

/// Fraction of the neighbors of `v` labeled 1.
pub fn nep_response(lg: &LabeledGraph, v: Node) -> f64 {
    lg.nep_response(v)
}
