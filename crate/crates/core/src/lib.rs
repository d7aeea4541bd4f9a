//! Neighborhood expectation polling on graphs.
//!
//! Respondents report the fraction of their neighbors holding a binary
//! label instead of their own label. This crate provides the samplers
//! behind the four polling schemes (intent polling, uniform-node,
//! random-walk and friend-of-node neighborhood polling), closed-form bias
//! and variance of each, synthetic network generators with tunable degree
//! assortativity and degree-label correlation, and a seeded Monte-Carlo
//! harness.
//!
//! ```
//! use neppoll::analytics::exact_error;
//! use neppoll::estimators::{poll, EstimatorKind, PollConfig};
//! use neppoll::graph::{build_graph, LabeledGraph};
//!
//! let g = build_graph(&[(0, 1), (0, 2), (0, 3)]).unwrap();
//! let lg = LabeledGraph::new(g, vec![1, 0, 0, 0]).unwrap();
//! let estimate = poll(&lg, EstimatorKind::FriendOfNodeNep, &PollConfig::new(10, 7)).unwrap();
//! assert!((0.0..=1.0).contains(&estimate.value));
//! let exact = exact_error(&lg, EstimatorKind::NaiveNep, 1, None);
//! assert!((exact.bias - 0.5).abs() < 1e-12);
//! ```

pub mod analytics;
pub mod estimators;
pub mod graph;
pub mod harness;
pub mod io;
pub mod netgen;
pub mod sampling;

pub use estimators::{poll, EstimatorKind, PollConfig, PollEstimate};
pub use graph::{build_graph, Graph, GraphError, LabeledGraph, Node};
pub use sampling::RandomStream;
