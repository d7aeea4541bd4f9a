use crate::analytics::{
    brute_force_estimator_law, fn_bias_quadratic_form, fn_moments, fosd_check,
    friendship_paradox_check, label_degree_covariance, mean_label_of_friend, rw_moments,
    spectral_summary_capped, un_moments, ResponseLaw,
};
use crate::graph::{Graph, LabeledGraph};

/// Outcome of one invariant.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: &'static str, passed: bool, detail: String) -> Self {
        Self {
            name,
            passed,
            detail,
        }
    }
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
}

fn at_most(a: f64, b: f64) -> bool {
    a <= b + 1e-12 * (1.0 + b.abs())
}

/// Runs every invariant that applies to the input. Spectral checks are
/// skipped above `spectral_cap` nodes.
pub fn run_checks(
    g: &Graph,
    labels: Option<&LabeledGraph>,
    spectral_cap: usize,
) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let degree_sum: usize = g.degrees().sum();
    out.push(CheckResult::new(
        "handshake",
        degree_sum == 2 * g.edge_count(),
        format!("sum of degrees {degree_sum}, edges {}", g.edge_count()),
    ));
    let p = friendship_paradox_check(g);
    out.push(CheckResult::new(
        "friendship_paradox",
        p.holds,
        format!(
            "E d(X) {:.6}, E d(Y) {:.6}, E d(Z) {:.6}",
            p.mean_degree_node, p.mean_degree_friend, p.mean_degree_friend_of_node
        ),
    ));
    let fosd = fosd_check(g);
    out.push(CheckResult::new(
        "fosd",
        fosd.holds,
        format!("{} degree levels", fosd.rows.len()),
    ));

    let spectral = spectral_summary_capped(g, spectral_cap).ok();
    if let Some(s) = &spectral {
        let top = s.singular_values[0];
        out.push(CheckResult::new(
            "top_singular_value",
            (top - 1.0).abs() <= 1e-9,
            format!("{top:.12}"),
        ));
        let ergodic = g.flags().walk_ergodic();
        out.push(CheckResult::new(
            "spectral_gap_matches_flags",
            s.has_gap(1e-9) == ergodic,
            format!(
                "lambda2 {:.12}, connected and non-bipartite: {ergodic}",
                s.lambda2
            ),
        ));
    }

    let Some(lg) = labels else {
        return out;
    };
    let n = g.node_count() as f64;
    let mean_d = g.edge_end_count() as f64 / n;
    let friend = mean_label_of_friend(lg);
    let fbar = lg.true_fraction();

    let lhs = label_degree_covariance(lg) / mean_d;
    out.push(CheckResult::new(
        "rw_bias_identity",
        (lhs - (friend - fbar)).abs() <= 1e-12,
        format!("cov/E d {lhs:.15}, E f(Y) - f {:.15}", friend - fbar),
    ));

    let pairs = [
        ("un_oracle", un_moments(lg), ResponseLaw::Naive),
        ("fn_oracle", fn_moments(lg), ResponseLaw::FriendOfNode),
        (
            "rw_oracle",
            rw_moments(lg),
            ResponseLaw::RandomWalkStationary,
        ),
    ];
    for (name, exact, law) in pairs {
        let brute = brute_force_estimator_law(lg, law);
        out.push(CheckResult::new(
            name,
            (exact.mean - brute.mean).abs() <= 1e-10
                && (exact.variance - brute.variance).abs() <= 1e-10,
            format!(
                "mean {:.12} vs {:.12}, var {:.12} vs {:.12}",
                exact.mean, brute.mean, exact.variance, brute.variance
            ),
        ));
    }

    let quad = fn_bias_quadratic_form(lg);
    let fn_bias = fn_moments(lg).mean - fbar;
    out.push(CheckResult::new(
        "fn_bias_cross_check",
        close(quad, fn_bias, 1e-10),
        format!("{fn_bias:.12} vs {quad:.12}"),
    ));

    let un_bound = friend * mean_d / g.min_degree() as f64;
    let un_var = un_moments(lg).variance;
    out.push(CheckResult::new(
        "un_variance_bound",
        at_most(un_var, un_bound),
        format!("{un_var:.12} <= {un_bound:.12}"),
    ));
    if let Some(s) = &spectral {
        let rw_bound = s.lambda2 * s.lambda2 * friend;
        let rw_var = rw_moments(lg).variance;
        out.push(CheckResult::new(
            "rw_variance_bound",
            at_most(rw_var, rw_bound),
            format!("{rw_var:.12} <= {rw_bound:.12}"),
        ));
        out.push(CheckResult::new(
            "bound_ordering",
            at_most(rw_bound, un_bound),
            format!("{rw_bound:.12} <= {un_bound:.12}"),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytics::DEFAULT_SIZE_CAP;
    use crate::graph::build_graph;
    use crate::graph::fixtures::*;

    #[test]
    fn everything_passes_on_small_graphs() {
        let g = build_graph(&[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (3, 4)]).unwrap();
        for lg in [
            labeled(star(), &[1, 0, 0, 0]),
            labeled(triangle(), &[1, 0, 0]),
            labeled(cycle(6), &[1, 1, 0, 0, 1, 0]),
            labeled(g, &[0, 1, 1, 0, 1]),
        ] {
            let results = run_checks(lg.graph(), Some(&lg), DEFAULT_SIZE_CAP);
            assert_eq!(results.len(), 13);
            for r in results {
                assert!(r.passed, "{}: {}", r.name, r.detail);
            }
        }
    }

    #[test]
    fn graph_only_and_capped() {
        let results = run_checks(&cycle(5), None, 4);
        let names: Vec<_> = results.iter().map(|r| r.name).collect();
        assert_eq!(names, ["handshake", "friendship_paradox", "fosd"]);
    }
}
