use std::fmt;

use fixedbitset::FixedBitSet;

use super::NodeId;

/// A set of nodes of one graph, stored as a bitset over dense indices.
///
/// Iteration is always in ascending index order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NodeSet {
    bits: FixedBitSet,
}

impl NodeSet {
    pub fn empty(n: usize) -> Self {
        NodeSet {
            bits: FixedBitSet::with_capacity(n),
        }
    }

    pub fn full(n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert_range(..);
        NodeSet { bits }
    }

    pub fn from_nodes(n: usize, nodes: impl IntoIterator<Item = NodeId>) -> Self {
        let mut set = NodeSet::empty(n);
        for v in nodes {
            set.insert(v);
        }
        set
    }

    /// Size of the universe this set lives in.
    pub fn capacity(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, v: NodeId) -> bool {
        self.bits.contains(v.index())
    }

    /// Returns true if the node was newly inserted.
    pub fn insert(&mut self, v: NodeId) -> bool {
        !self.bits.put(v.index())
    }

    pub fn remove(&mut self, v: NodeId) {
        self.bits.set(v.index(), false);
    }

    pub fn union_with(&mut self, other: &NodeSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &NodeSet) {
        self.bits.difference_with(&other.bits);
    }

    pub fn is_subset(&self, other: &NodeSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn first(&self) -> Option<NodeId> {
        self.bits.ones().next().map(NodeId::new)
    }

    pub fn iter(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.bits.ones().map(NodeId::new)
    }

    pub fn to_vec(&self) -> Vec<NodeId> {
        self.iter().collect()
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.bits.ones()).finish()
    }
}
