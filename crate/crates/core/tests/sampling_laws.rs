mod common;

use std::sync::Arc;

use rand::Rng;

use neppoll::analytics::{assortativity, fn_moments, rw_moments, un_moments};
use neppoll::estimators::{poll, EstimatorKind, PollConfig};
use neppoll::graph::{build_graph, Graph, LabeledGraph};
use neppoll::netgen::{configuration_model, erdos_renyi, ConfigModelSpec, ErdosRenyiSpec};
use neppoll::sampling::{
    random_walk_endpoint, sample_friend_of_random_node, sample_random_friend, sample_random_node,
    RandomStream, WalkConfig,
};

use common::{cycle, star};

const DRAWS: usize = 100_000;

fn frequencies(
    g: &Graph,
    seed: u64,
    mut draw: impl FnMut(&Graph, &mut RandomStream) -> usize,
) -> Vec<f64> {
    let mut rs = RandomStream::new(seed);
    let mut counts = vec![0usize; g.node_count()];
    for _ in 0..DRAWS {
        counts[draw(g, &mut rs)] += 1;
    }
    counts
        .into_iter()
        .map(|c| c as f64 / DRAWS as f64)
        .collect()
}

/// `|observed - p| <= 3` binomial standard errors.
fn within_3_sigma(observed: f64, p: f64) {
    let se = (p * (1.0 - p) / DRAWS as f64).sqrt();
    assert!(
        (observed - p).abs() <= 3.0 * se,
        "{observed} vs {p} (se {se})"
    );
}

fn mean_degree(g: &Graph, freq: &[f64]) -> f64 {
    freq.iter()
        .enumerate()
        .map(|(v, p)| p * g.degree(v) as f64)
        .sum()
}

#[test]
fn uniform_node_on_star() {
    let g = star(3);
    let freq = frequencies(&g, 1, sample_random_node);
    for p in freq {
        within_3_sigma(p, 0.25);
    }
}

#[test]
fn random_friend_on_star() {
    let g = star(3);
    let freq = frequencies(&g, 2, sample_random_friend);
    within_3_sigma(freq[0], 0.5);
    // d(Y) = 1 + 2 * [Y = center], so its sd is 1
    assert!((mean_degree(&g, &freq) - 2.0).abs() <= 3.0 / (DRAWS as f64).sqrt());
}

#[test]
fn friend_of_node_on_star() {
    let g = star(3);
    let freq = frequencies(&g, 3, sample_friend_of_random_node);
    within_3_sigma(freq[0], 0.75);
    // d(Z) = 1 + 2 * [Z = center], sd 2 * sqrt(0.75 * 0.25)
    let sd = 2.0 * (0.75f64 * 0.25).sqrt();
    assert!((mean_degree(&g, &freq) - 2.5).abs() <= 3.0 * sd / (DRAWS as f64).sqrt());
}

#[test]
fn triangle_laws_coincide() {
    let g = cycle(3);
    for freq in [
        frequencies(&g, 4, sample_random_node),
        frequencies(&g, 5, sample_random_friend),
        frequencies(&g, 6, sample_friend_of_random_node),
    ] {
        for p in freq {
            within_3_sigma(p, 1.0 / 3.0);
        }
    }
}

#[test]
fn walk_on_chorded_star_reaches_degree_law() {
    // star plus a chord between two leaves: connected and non-bipartite
    let g = build_graph(&[(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap();
    let cfg = WalkConfig::new(100, 1);
    let freq = frequencies(&g, 7, |g, rs| random_walk_endpoint(g, 0, &cfg, rs));
    let m = g.edge_end_count() as f64;
    for (v, p) in freq.into_iter().enumerate() {
        within_3_sigma(p, g.degree(v) as f64 / m);
    }
}

/// Least-squares slope of the log CCDF against log k on `lo..=hi`.
fn ccdf_slope(g: &Graph, lo: usize, hi: usize) -> f64 {
    let n = g.node_count() as f64;
    let points: Vec<(f64, f64)> = (lo..=hi)
        .map(|k| {
            let above = g.degrees().filter(|&d| d >= k).count() as f64 / n;
            ((k as f64).ln(), above.ln())
        })
        .collect();
    let mx = points.iter().map(|p| p.0).sum::<f64>() / points.len() as f64;
    let my = points.iter().map(|p| p.1).sum::<f64>() / points.len() as f64;
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

#[test]
fn power_law_ccdf_slope() {
    // Untruncated degree law. A single 5000-node draw has a slope standard
    // deviation near 0.12 over this range, so ten draws are averaged.
    let slopes: Vec<f64> = (0..10)
        .map(|seed| {
            let spec = ConfigModelSpec::new(5000, 2.4, 100 + seed).k_max(4999);
            ccdf_slope(&configuration_model(&spec).unwrap().graph, 4, 40)
        })
        .collect();
    let mean = slopes.iter().sum::<f64>() / slopes.len() as f64;
    assert!(
        (mean + 1.4).abs() <= 0.15,
        "mean slope {mean}, draws {slopes:?}"
    );
}

#[test]
fn default_cutoff_steepens_the_tail() {
    let capped = ConfigModelSpec::new(5000, 2.4, 11);
    assert_eq!(capped.k_max, 70);
    let g = configuration_model(&capped).unwrap().graph;
    assert!(g.max_degree() <= 71);
    assert!(ccdf_slope(&g, 4, 40) < -1.4);
}

#[test]
fn erdos_renyi_density_and_neutrality() {
    let n = 5000;
    let g = erdos_renyi(&ErdosRenyiSpec {
        node_count: n,
        edge_probability: 0.01,
        seed: 12,
    })
    .unwrap();
    let mean = g.edge_end_count() as f64 / n as f64;
    // edge count is Binomial(n(n-1)/2, p); the mean degree is 2 M / n
    let pairs = (n * (n - 1) / 2) as f64;
    let sd = 2.0 * (pairs * 0.01 * 0.99).sqrt() / n as f64;
    assert!((mean - 49.99).abs() <= 3.0 * sd, "{mean}");
    assert!(assortativity(&g).unwrap().abs() <= 0.03);
}

#[test]
fn estimator_means_converge_to_exact_laws() {
    let g = build_graph(&[(0, 1), (0, 2), (0, 3), (1, 2), (3, 4), (4, 5), (5, 3)]).unwrap();
    let lg = LabeledGraph::new(g, vec![1, 0, 1, 0, 0, 1]).unwrap();
    let budget = 100_000;
    for (kind, exact) in [
        (EstimatorKind::NaiveNep, un_moments(&lg)),
        (EstimatorKind::FriendOfNodeNep, fn_moments(&lg)),
        (EstimatorKind::RandomWalkNep, rw_moments(&lg)),
    ] {
        let cfg = PollConfig::new(budget, 13).exact_friend_mode(true);
        let value = poll(&lg, kind, &cfg).unwrap().value;
        let se = (exact.variance / budget as f64).sqrt();
        assert!(
            (value - exact.mean).abs() <= 4.0 * se,
            "{kind}: {value} vs {}",
            exact.mean
        );
    }
    // the walk itself, long enough to mix on this small graph
    let cfg = PollConfig::new(budget, 14).walk_length(60);
    let value = poll(&lg, EstimatorKind::RandomWalkNep, &cfg).unwrap().value;
    let exact = rw_moments(&lg);
    assert!((value - exact.mean).abs() <= 4.0 * (exact.variance / budget as f64).sqrt());
}

#[test]
fn variance_ordering_under_iid_labels() {
    let g = Arc::new(
        configuration_model(&ConfigModelSpec::new(300, 2.4, 15))
            .unwrap()
            .graph,
    );
    let mut rs = RandomStream::new(16);
    let (mut rw, mut fnv, mut un) = (0.0, 0.0, 0.0);
    for _ in 0..200 {
        let labels = (0..g.node_count())
            .map(|_| rs.random_bool(0.3) as u8)
            .collect();
        let lg = LabeledGraph::new(Arc::clone(&g), labels).unwrap();
        rw += rw_moments(&lg).variance;
        fnv += fn_moments(&lg).variance;
        un += un_moments(&lg).variance;
    }
    assert!(rw <= fnv && fnv <= un, "{rw} {fnv} {un}");
}

#[test]
fn estimates_stay_in_unit_interval() {
    let g = configuration_model(&ConfigModelSpec::new(200, 2.4, 17))
        .unwrap()
        .graph
        .largest_component();
    let mut rs = RandomStream::new(18);
    let labels = (0..g.node_count())
        .map(|_| rs.random_bool(0.5) as u8)
        .collect();
    let lg = LabeledGraph::new(g, labels).unwrap();
    for kind in EstimatorKind::ALL {
        for seed in 0..50 {
            let v = poll(&lg, kind, &PollConfig::new(1 + seed as usize % 7, seed))
                .unwrap()
                .value;
            assert!((0.0..=1.0).contains(&v));
        }
    }
}
