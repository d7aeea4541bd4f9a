#![allow(dead_code)]

use rand::Rng;

use neppoll::graph::{build_graph, Graph, LabeledGraph};
use neppoll::netgen::{configuration_model, erdos_renyi, ConfigModelSpec, ErdosRenyiSpec};
use neppoll::sampling::{derive_seed, RandomStream};

pub fn star(leaves: u64) -> Graph {
    let edges: Vec<(u64, u64)> = (1..=leaves).map(|v| (0, v)).collect();
    build_graph(&edges).unwrap()
}

pub fn cycle(n: u64) -> Graph {
    let edges: Vec<(u64, u64)> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    build_graph(&edges).unwrap()
}

pub fn path(n: u64) -> Graph {
    let edges: Vec<(u64, u64)> = (0..n - 1).map(|v| (v, v + 1)).collect();
    build_graph(&edges).unwrap()
}

pub fn bernoulli_labels(g: Graph, p: f64, seed: u64) -> LabeledGraph {
    let mut rs = RandomStream::new(seed);
    let labels = (0..g.node_count())
        .map(|_| rs.random_bool(p) as u8)
        .collect();
    LabeledGraph::new(g, labels).unwrap()
}

/// 200 small labeled graphs (n <= 50): Erdos-Renyi with p in {0.2, 0.5},
/// configuration-model graphs, stars, cycles and paths, each with
/// Bernoulli labels of a random rate.
pub fn small_suite() -> Vec<(String, LabeledGraph)> {
    let mut rs = RandomStream::new(0x5eed);
    let mut out = Vec::new();
    let mut push = |name: String, g: Graph, rs: &mut RandomStream| {
        let p = rs.random_range(0.1..0.9);
        let seed = rs.random::<u64>();
        out.push((name, bernoulli_labels(g, p, seed)));
    };
    for i in 0..40 {
        let n = rs.random_range(15..=50);
        let g = erdos_renyi(&ErdosRenyiSpec {
            node_count: n,
            edge_probability: 0.2,
            seed: derive_seed(1, i),
        })
        .unwrap();
        push(format!("er(n={n}, p=0.2)"), g, &mut rs);
    }
    for i in 0..40 {
        let n = rs.random_range(5..=50);
        let g = erdos_renyi(&ErdosRenyiSpec {
            node_count: n,
            edge_probability: 0.5,
            seed: derive_seed(2, i),
        })
        .unwrap();
        push(format!("er(n={n}, p=0.5)"), g, &mut rs);
    }
    for i in 0..50 {
        let n = rs.random_range(10..=50);
        let alpha = [2.0, 2.4, 3.0][i as usize % 3];
        let g = configuration_model(&ConfigModelSpec::new(n, alpha, derive_seed(3, i)))
            .unwrap()
            .graph;
        push(format!("config(n={n}, alpha={alpha})"), g, &mut rs);
    }
    for _ in 0..25 {
        let k = rs.random_range(1..=49);
        push(format!("star(leaves={k})"), star(k), &mut rs);
    }
    for _ in 0..25 {
        let n = rs.random_range(3..=50);
        push(format!("cycle({n})"), cycle(n), &mut rs);
    }
    for _ in 0..20 {
        let n = rs.random_range(2..=50);
        push(format!("path({n})"), path(n), &mut rs);
    }
    out
}

/// `E[f(Y)]` summed over edge ends, independent of the library's
/// degree-weighted route.
pub fn friend_label_mean(lg: &LabeledGraph) -> f64 {
    let g = lg.graph();
    let ones: usize = (0..g.node_count())
        .map(|v| g.neighbors(v).iter().filter(|&&u| lg.label(u) == 1).count())
        .sum();
    ones as f64 / g.edge_end_count() as f64
}

pub fn sorted_degrees(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = g.degrees().collect();
    d.sort_unstable();
    d
}
