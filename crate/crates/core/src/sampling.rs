//! Random node laws and the random-walk sampler.
//!
//! * [`sample_random_node`]: uniform node (`X`).
//! * [`sample_random_friend`]: uniform edge, then a fair coin over its ends
//!   (`Y`, law `d(v)/M`).
//! * [`sample_friend_of_random_node`]: uniform neighbor of a uniform node
//!   (`Z`).
//! * [`random_walk_endpoint`]: endpoint of an `N`-step simple random walk.
//!
//! All randomness comes from a [`RandomStream`], a seeded ChaCha generator
//! with deterministic substream derivation.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Node};

/// Seeded random stream. Substream `i` of a stream with seed `s` is a fresh
/// stream seeded with `derive_seed(s, i)`, independent of how much of the
/// parent has been consumed.
#[derive(Debug, Clone)]
pub struct RandomStream {
    seed: u64,
    rng: ChaCha8Rng,
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of substream `index` under `seed`.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    splitmix64(splitmix64(seed) ^ splitmix64(index.wrapping_add(0x632b_e59b_d9b4_e019)))
}

/// Folds a path of indices into one seed, e.g. `(estimator, budget, rep)`.
pub fn derive_seed_path(seed: u64, path: &[u64]) -> u64 {
    path.iter().fold(seed, |s, &i| derive_seed(s, i))
}

impl RandomStream {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn substream(&self, index: u64) -> Self {
        Self::new(derive_seed(self.seed, index))
    }
}

impl RngCore for RandomStream {
    fn next_u32(&mut self) -> u32 {
        self.rng.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    fn fill_bytes(&mut self, dst: &mut [u8]) {
        self.rng.fill_bytes(dst)
    }
}

/// Walk length `N` and number of independent walkers `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WalkConfig {
    pub length: usize,
    pub walker_count: usize,
    /// Stay in place with probability 1/2 at every step.
    pub lazy: bool,
}

impl WalkConfig {
    pub fn new(length: usize, walker_count: usize) -> Self {
        assert!(walker_count >= 1, "walker_count must be at least 1");
        Self {
            length,
            walker_count,
            lazy: false,
        }
    }

    pub fn lazy(mut self, lazy: bool) -> Self {
        self.lazy = lazy;
        self
    }
}

/// `10 * ceil(log2 n)`.
pub fn default_walk_length(node_count: usize) -> usize {
    let bits = if node_count <= 1 {
        0
    } else {
        usize::BITS - (node_count - 1).leading_zeros()
    };
    10 * bits as usize
}

pub fn sample_random_node<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Node {
    rng.random_range(0..g.node_count())
}

pub fn sample_random_friend<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Node {
    let (u, v) = g.edges()[rng.random_range(0..g.edge_count())];
    if rng.random::<bool>() {
        u
    } else {
        v
    }
}

pub fn sample_uniform_neighbor<R: Rng + ?Sized>(g: &Graph, v: Node, rng: &mut R) -> Node {
    let neighbors = g.neighbors(v);
    neighbors[rng.random_range(0..neighbors.len())]
}

pub fn sample_friend_of_random_node<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Node {
    let x = sample_random_node(g, rng);
    sample_uniform_neighbor(g, x, rng)
}

/// Runs `cfg.length` steps from `start` and returns the final node.
/// `cfg.walker_count` is ignored; a call drives exactly one walker.
pub fn random_walk_endpoint<R: Rng + ?Sized>(
    g: &Graph,
    start: Node,
    cfg: &WalkConfig,
    rng: &mut R,
) -> Node {
    let mut v = start;
    for _ in 0..cfg.length {
        if cfg.lazy && rng.random::<bool>() {
            continue;
        }
        v = sample_uniform_neighbor(g, v, rng);
    }
    v
}

/// Endpoints of `cfg.walker_count` independent walks from uniform starts.
pub fn random_walk_sample<R: Rng + ?Sized>(g: &Graph, cfg: &WalkConfig, rng: &mut R) -> Vec<Node> {
    (0..cfg.walker_count)
        .map(|_| {
            let start = sample_random_node(g, rng);
            random_walk_endpoint(g, start, cfg, rng)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn zero_length_walk_stays() {
        let g = star();
        let mut rs = RandomStream::new(1);
        for start in 0..4 {
            assert_eq!(
                random_walk_endpoint(&g, start, &WalkConfig::new(0, 1), &mut rs),
                start
            );
        }
    }

    #[test]
    fn one_step_on_triangle_leaves_start() {
        let g = triangle();
        let mut rs = RandomStream::new(2);
        let mut hits = [0usize; 3];
        for _ in 0..20_000 {
            let end = random_walk_endpoint(&g, 0, &WalkConfig::new(1, 1), &mut rs);
            hits[end] += 1;
        }
        assert_eq!(hits[0], 0);
        // Binomial(20000, 0.5): sd ~ 70.7
        assert!((hits[1] as f64 - 10_000.0).abs() < 3.0 * 70.8, "{hits:?}");
    }

    #[test]
    fn same_seed_same_sequence() {
        let g = cycle(7);
        let draw = |seed| {
            let mut rs = RandomStream::new(seed);
            (0..64)
                .map(|_| {
                    (
                        sample_random_node(&g, &mut rs),
                        sample_random_friend(&g, &mut rs),
                        sample_friend_of_random_node(&g, &mut rs),
                    )
                })
                .collect::<Vec<_>>()
        };
        assert_eq!(draw(9), draw(9));
        assert_ne!(draw(9), draw(10));
    }

    #[test]
    fn substreams_are_pure_functions_of_seed_and_index() {
        let mut parent = RandomStream::new(5);
        let a = parent.substream(3).next_u64();
        parent.next_u64();
        assert_eq!(parent.substream(3).next_u64(), a);
        assert_ne!(parent.substream(4).next_u64(), a);
        assert_eq!(derive_seed_path(5, &[3]), derive_seed(5, 3));
    }

    #[test]
    fn walk_length_default() {
        assert_eq!(default_walk_length(2), 10);
        assert_eq!(default_walk_length(500), 90);
        assert_eq!(default_walk_length(512), 90);
        assert_eq!(default_walk_length(513), 100);
        assert_eq!(default_walk_length(2000), 110);
    }

    #[test]
    fn lazy_walk_can_stay() {
        let g = star();
        let mut rs = RandomStream::new(3);
        let cfg = WalkConfig::new(1, 1).lazy(true);
        let stays = (0..1000)
            .filter(|_| random_walk_endpoint(&g, 0, &cfg, &mut rs) == 0)
            .count();
        assert!(stays > 400 && stays < 600, "{stays}");
    }
}
