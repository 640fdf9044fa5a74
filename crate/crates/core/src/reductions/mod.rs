//! Reduction gadgets between burning and classic problems, with
//! brute-force oracles for the source problems so every gadget can be
//! checked on small instances.

mod dominating;
mod set_cover;
mod symmetrize;
mod three_partition;

pub use dominating::{brute_force_dominating_set, is_dominating_set};
pub use set_cover::{
    brute_force_set_cover, dag_to_set_cover, decode_dag_burning, set_cover_role, set_cover_to_dag,
    SetCoverInstance, SetCoverNode,
};
pub use symmetrize::{symmetrize, EdgeList};
pub use three_partition::{
    brute_force_3partition, partition_witness, three_partition_to_tree, Component, ComponentKind,
    StructureReport, ThreePartitionGadget, ThreePartitionInstance,
};

use crate::graph::{serialize_digraph, Digraph};

/// A constructed burning instance: burn all of `graph` within `budget`.
#[derive(Clone, Debug)]
pub struct Gadget {
    pub graph: Digraph,
    pub budget: usize,
}

impl Gadget {
    /// Graph text with a leading `# budget: B` comment.
    pub fn to_text(&self) -> String {
        format!(
            "# budget: {}\n{}",
            self.budget,
            serialize_digraph(&self.graph)
        )
    }
}

/// Key/value line of the instance formats: `key: rest`, comments stripped.
pub(crate) fn keyed_lines(text: &str) -> impl Iterator<Item = (usize, Option<(&str, &str)>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = crate::graph::strip_comment(raw).trim();
        if line.is_empty() {
            return None;
        }
        Some((
            i + 1,
            line.split_once(':').map(|(k, v)| (k.trim(), v.trim())),
        ))
    })
}
