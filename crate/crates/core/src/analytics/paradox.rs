use std::collections::BTreeMap;

use crate::graph::Graph;

/// Mean degrees of a uniform node `X`, a random friend `Y` and a random
/// friend `Z` of a uniform node.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParadoxCheck {
    pub mean_degree_node: f64,
    pub mean_degree_friend: f64,
    pub mean_degree_friend_of_node: f64,
    pub holds: bool,
}

pub fn friendship_paradox_check(g: &Graph) -> ParadoxCheck {
    let n = g.node_count();
    let m = g.edge_end_count();
    let sum_sq: u128 = g.degrees().map(|d| (d * d) as u128).sum();
    let friend_of_node: f64 = (0..n)
        .map(|v| {
            let s: usize = g.neighbors(v).iter().map(|&u| g.degree(u)).sum();
            s as f64 / g.degree(v) as f64
        })
        .sum::<f64>()
        / n as f64;
    let node = m as f64 / n as f64;
    // sum d^2 / M >= M / n, compared in integers
    let y_holds = sum_sq * n as u128 >= (m as u128) * (m as u128);
    let z_holds = friend_of_node >= node * (1.0 - 1e-12);
    ParadoxCheck {
        mean_degree_node: node,
        mean_degree_friend: sum_sq as f64 / m as f64,
        mean_degree_friend_of_node: friend_of_node,
        holds: y_holds && z_holds,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FosdRow {
    pub degree: usize,
    pub cdf_node: f64,
    pub cdf_friend_of_node: f64,
}

/// Exact CDFs of `d(X)` and `d(Z)` at every degree present in the graph.
#[derive(Debug, Clone, PartialEq)]
pub struct FosdCheck {
    pub rows: Vec<FosdRow>,
    pub holds: bool,
}

pub fn fosd_check(g: &Graph) -> FosdCheck {
    let n = g.node_count() as f64;
    let mut mass_x: BTreeMap<usize, f64> = BTreeMap::new();
    let mut mass_z: BTreeMap<usize, f64> = BTreeMap::new();
    for v in 0..g.node_count() {
        let d = g.degree(v);
        *mass_x.entry(d).or_insert(0.0) += 1.0 / n;
        // P(Z = v) = (1/n) sum_{u in N(v)} 1/d(u)
        let pz: f64 = g
            .neighbors(v)
            .iter()
            .map(|&u| 1.0 / g.degree(u) as f64)
            .sum::<f64>()
            / n;
        *mass_z.entry(d).or_insert(0.0) += pz;
    }
    let (mut cx, mut cz) = (0.0, 0.0);
    let rows: Vec<FosdRow> = mass_x
        .iter()
        .map(|(&degree, &px)| {
            cx += px;
            cz += mass_z[&degree];
            FosdRow {
                degree,
                cdf_node: cx,
                cdf_friend_of_node: cz,
            }
        })
        .collect();
    let holds = rows
        .iter()
        .all(|r| r.cdf_friend_of_node <= r.cdf_node + 1e-12);
    FosdCheck { rows, holds }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn star_means() {
        let c = friendship_paradox_check(&star());
        assert_eq!(c.mean_degree_node, 1.5);
        assert_eq!(c.mean_degree_friend, 2.0);
        assert!((c.mean_degree_friend_of_node - 2.5).abs() < 1e-12);
        assert!(c.holds);
    }

    #[test]
    fn triangle_means_are_equal() {
        let c = friendship_paradox_check(&triangle());
        assert_eq!(
            (
                c.mean_degree_node,
                c.mean_degree_friend,
                c.mean_degree_friend_of_node
            ),
            (2.0, 2.0, 2.0)
        );
        assert!(c.holds);
    }

    #[test]
    fn path_means() {
        let c = friendship_paradox_check(&path3());
        assert!((c.mean_degree_node - 4.0 / 3.0).abs() < 1e-12);
        assert!((c.mean_degree_friend - 1.5).abs() < 1e-12);
        assert!((c.mean_degree_friend_of_node - 5.0 / 3.0).abs() < 1e-12);
        assert!(c.holds);
    }

    #[test]
    fn star_fosd_table() {
        let c = fosd_check(&star());
        assert!(c.holds);
        assert_eq!(c.rows[0].degree, 1);
        assert!((c.rows[0].cdf_node - 0.75).abs() < 1e-12);
        assert!((c.rows[0].cdf_friend_of_node - 0.25).abs() < 1e-12);
        assert!((c.rows[1].cdf_friend_of_node - 1.0).abs() < 1e-12);
    }

    #[test]
    fn regular_fosd_is_equality() {
        for g in [triangle(), cycle(8)] {
            let c = fosd_check(&g);
            assert!(c.holds);
            for r in &c.rows {
                assert!((r.cdf_node - r.cdf_friend_of_node).abs() < 1e-12);
            }
        }
    }
}
