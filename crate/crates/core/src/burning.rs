//! The burning process and its cover formulation.
//!
//! A sequence `(x_1, ..., x_b)` runs for `b` steps: in step `i` every
//! out-neighbour of a burning node ignites, then `x_i` is lit. The same
//! outcome is described by an assignment of ranges to nodes, where range
//! `r` at `v` burns `N+_{r-1}(v)`; the sequence `(x_1, ..., x_b)`
//! corresponds to `{b+1-i -> x_i}`.

use crate::error::{Error, Result};
use crate::graph::{Digraph, NodeId, NodeSet};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BurningSequence {
    steps: Vec<NodeId>,
}

impl BurningSequence {
    pub fn new(steps: Vec<NodeId>) -> Self {
        BurningSequence { steps }
    }

    pub fn steps(&self) -> &[NodeId] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Comma-separated labels, e.g. `v1,v3`.
    pub fn parse(text: &str, graph: &Digraph) -> Result<Self> {
        let steps = split_list(text)
            .map(|l| graph.require_node(l))
            .collect::<Result<_>>()?;
        Ok(BurningSequence { steps })
    }

    pub fn to_text(&self, graph: &Digraph) -> String {
        self.steps
            .iter()
            .map(|&v| graph.label(v))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Multiset-keyed map from burning ranges to nodes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BurningAssignment {
    pairs: Vec<(usize, NodeId)>,
}

impl BurningAssignment {
    pub fn new(pairs: Vec<(usize, NodeId)>) -> Result<Self> {
        if pairs.iter().any(|&(r, _)| r == 0) {
            return Err(Error::ZeroRange);
        }
        Ok(BurningAssignment { pairs })
    }

    /// The assignment `{b+1-i -> x_i}` of a sequence of length `b`.
    pub fn from_sequence(seq: &BurningSequence) -> Self {
        let b = seq.len();
        BurningAssignment {
            pairs: seq
                .steps()
                .iter()
                .enumerate()
                .map(|(i, &x)| (b - i, x))
                .collect(),
        }
    }

    pub fn pairs(&self) -> &[(usize, NodeId)] {
        &self.pairs
    }

    pub fn push(&mut self, range: usize, node: NodeId) -> Result<()> {
        if range == 0 {
            return Err(Error::ZeroRange);
        }
        self.pairs.push((range, node));
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Ranges in ascending order, duplicates kept.
    pub fn ranges(&self) -> Vec<usize> {
        let mut rs: Vec<usize> = self.pairs.iter().map(|&(r, _)| r).collect();
        rs.sort_unstable();
        rs
    }

    /// Pairs sorted by range descending, then node index.
    pub fn normalized(&self) -> Self {
        let mut pairs = self.pairs.clone();
        pairs.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        BurningAssignment { pairs }
    }

    /// Comma-separated `range:label` pairs, e.g. `3:v1,2:v4`. The range is
    /// everything before the first `:`.
    pub fn parse(text: &str, graph: &Digraph) -> Result<Self> {
        let mut pairs = Vec::new();
        for item in split_list(text) {
            let (r, label) = item
                .split_once(':')
                .ok_or_else(|| Error::parse(1, format!("expected `range:label`, got `{item}`")))?;
            let r: usize = r
                .trim()
                .parse()
                .map_err(|_| Error::parse(1, format!("bad range `{r}`")))?;
            pairs.push((r, graph.require_node(label.trim())?));
        }
        Self::new(pairs)
    }

    pub fn to_text(&self, graph: &Digraph) -> String {
        self.pairs
            .iter()
            .map(|&(r, v)| format!("{r}:{}", graph.label(v)))
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn split_list(text: &str) -> impl Iterator<Item = &str> {
    text.split(',').map(str::trim).filter(|s| !s.is_empty())
}

/// A partial-burning-with-ranges question: can `ranges` burn `target`?
#[derive(Clone, Debug)]
pub struct BurningInstance<'g> {
    graph: &'g Digraph,
    target: NodeSet,
    ranges: Vec<usize>,
}

impl<'g> BurningInstance<'g> {
    pub fn new(graph: &'g Digraph, target: NodeSet, mut ranges: Vec<usize>) -> Result<Self> {
        if target.capacity() != graph.node_count() {
            return Err(Error::InvalidInstance(
                "target set does not belong to this graph".into(),
            ));
        }
        if ranges.contains(&0) {
            return Err(Error::ZeroRange);
        }
        if ranges.is_empty() && !target.is_empty() {
            return Err(Error::InvalidInstance(
                "no burning ranges for a nonempty target".into(),
            ));
        }
        ranges.sort_unstable_by(|a, b| b.cmp(a));
        Ok(BurningInstance {
            graph,
            target,
            ranges,
        })
    }

    /// Burn the whole graph with ranges `1..=b`.
    pub fn full(graph: &'g Digraph, b: usize) -> Result<Self> {
        Self::new(graph, NodeSet::full(graph.node_count()), (1..=b).collect())
    }

    pub fn with_target(graph: &'g Digraph, target: NodeSet, b: usize) -> Result<Self> {
        Self::new(graph, target, (1..=b).collect())
    }

    pub fn graph(&self) -> &'g Digraph {
        self.graph
    }

    pub fn target(&self) -> &NodeSet {
        &self.target
    }

    /// Ranges in descending order.
    pub fn ranges(&self) -> &[usize] {
        &self.ranges
    }

    pub fn targets_everything(&self) -> bool {
        self.target.len() == self.graph.node_count()
    }

    /// `Some(b)` when the ranges are exactly `{1, ..., b}`.
    pub fn consecutive_budget(&self) -> Option<usize> {
        let b = self.ranges.len();
        self.ranges
            .iter()
            .enumerate()
            .all(|(i, &r)| r == b - i)
            .then_some(b)
    }
}

/// Burned sets after each step of replaying a sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurnTrace {
    pub burned_after_step: Vec<NodeSet>,
    pub chosen: BurningSequence,
    /// Step `i` (0-based) picked a node that was already burning while
    /// some node was still unburned.
    pub already_burning: Vec<bool>,
}

impl BurnTrace {
    pub fn final_burned(&self, n: usize) -> NodeSet {
        self.burned_after_step
            .last()
            .cloned()
            .unwrap_or_else(|| NodeSet::empty(n))
    }
}

/// One step of spread: `burned` plus all out-neighbours of `burned`.
pub(crate) fn spread(graph: &Digraph, burned: &NodeSet) -> NodeSet {
    let mut next = burned.clone();
    for u in burned.iter() {
        for &w in graph.out_neighbors(u) {
            next.insert(w);
        }
    }
    next
}

pub fn simulate_sequence(graph: &Digraph, seq: &BurningSequence) -> BurnTrace {
    let n = graph.node_count();
    let mut burned = NodeSet::empty(n);
    let mut burned_after_step = Vec::with_capacity(seq.len());
    let mut already_burning = Vec::with_capacity(seq.len());
    for &x in seq.steps() {
        burned = spread(graph, &burned);
        let saturated = burned.len() == n;
        already_burning.push(!burned.insert(x) && !saturated);
        burned_after_step.push(burned.clone());
    }
    BurnTrace {
        burned_after_step,
        chosen: seq.clone(),
        already_burning,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceCheck {
    Valid,
    /// 1-based step at which a burning node was chosen (strict mode only).
    AlreadyBurning {
        step: usize,
        node: NodeId,
    },
    Unburned(NodeSet),
}

impl SequenceCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, SequenceCheck::Valid)
    }
}

pub fn check_sequence(
    graph: &Digraph,
    seq: &BurningSequence,
    target: &NodeSet,
    strict: bool,
) -> SequenceCheck {
    let trace = simulate_sequence(graph, seq);
    if strict {
        if let Some(i) = trace.already_burning.iter().position(|&b| b) {
            return SequenceCheck::AlreadyBurning {
                step: i + 1,
                node: seq.steps()[i],
            };
        }
    }
    let mut missing = target.clone();
    missing.difference_with(&trace.final_burned(graph.node_count()));
    if missing.is_empty() {
        SequenceCheck::Valid
    } else {
        SequenceCheck::Unburned(missing)
    }
}

pub fn verify_sequence(
    graph: &Digraph,
    seq: &BurningSequence,
    target: &NodeSet,
    strict: bool,
) -> bool {
    check_sequence(graph, seq, target, strict).is_valid()
}

/// Union of `N+_{r-1}(v)` over the pairs of `phi`.
pub fn assignment_coverage(graph: &Digraph, phi: &BurningAssignment) -> NodeSet {
    let mut covered = NodeSet::empty(graph.node_count());
    for &(r, v) in phi.pairs() {
        covered.union_with(&graph.out_neighborhood(v, r - 1));
    }
    covered
}

pub fn verify_assignment(graph: &Digraph, phi: &BurningAssignment, target: &NodeSet) -> bool {
    target.is_subset(&assignment_coverage(graph, phi))
}

/// Replays `phi(b), ..., phi(1)` as a strict sequence. A node that is
/// already burning at its step is replaced by the smallest-index
/// non-burning node. Once everything burns there is nothing to replace it
/// with and the intended node is kept, so the sequence always has `b`
/// steps.
pub fn assignment_to_sequence(graph: &Digraph, phi: &BurningAssignment) -> Result<BurningSequence> {
    let ranges = phi.ranges();
    if ranges.iter().enumerate().any(|(i, &r)| r != i + 1) {
        return Err(Error::precondition("ranges must be exactly {1, ..., b}"));
    }
    let n = graph.node_count();
    if !verify_assignment(graph, phi, &NodeSet::full(n)) {
        return Err(Error::precondition("assignment does not burn every node"));
    }
    let b = ranges.len();
    let mut by_range = vec![NodeId::new(0); b + 1];
    for &(r, v) in phi.pairs() {
        by_range[r] = v;
    }
    let mut burned = NodeSet::empty(n);
    let mut steps = Vec::with_capacity(b);
    for r in (1..=b).rev() {
        burned = spread(graph, &burned);
        let intended = by_range[r];
        let pick = if burned.contains(intended) {
            graph
                .nodes()
                .find(|&v| !burned.contains(v))
                .unwrap_or(intended)
        } else {
            intended
        };
        burned.insert(pick);
        steps.push(pick);
    }
    Ok(BurningSequence::new(steps))
}
