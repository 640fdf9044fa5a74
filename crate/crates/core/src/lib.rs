//! Directed graph burning.
//!
//! At every step all out-neighbours of burning nodes catch fire, then one
//! more node is lit. The crate covers the process itself
//! ([`burning`]), constructive upper bounds ([`bounds`]), exact solvers
//! behind a common [`solvers::Solver`] trait, reduction gadgets with
//! brute-force oracles ([`reductions`]) and seeded graph families
//! ([`generators`]).

pub mod bounds;
pub mod burning;
pub mod error;
pub mod generators;
pub mod graph;
pub mod reductions;
pub mod solvers;

pub use error::{Error, Result};
pub use graph::{parse_digraph, serialize_digraph, Classification, Digraph, NodeId, NodeSet};
