//! Directed graphs with dense node indices.
//!
//! Nodes are identified by string labels in the text format and by a
//! [`NodeId`] internally; ids are handed out in first-declaration order,
//! so every tie-break further up the stack ("smallest index first") is
//! deterministic for a given input file.

mod format;
mod nodeset;

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

pub(crate) use format::strip_comment;
pub use format::{parse_budget_comment, parse_digraph, serialize_digraph};
pub use nodeset::NodeSet;

use crate::error::{Error, Result};

/// Dense index of a node, `0..n`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(usize);

impl NodeId {
    pub const fn new(index: usize) -> Self {
        NodeId(index)
    }

    pub const fn index(self) -> usize {
        self.0
    }
}

impl fmt::Debug for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Out,
    In,
}

/// Checks the label rules of the text format.
pub fn validate_label(label: &str) -> Result<()> {
    let bad = label.is_empty()
        || label == "->"
        || label
            .chars()
            .any(|c| c.is_whitespace() || c == '#' || c == ',');
    if bad {
        Err(Error::InvalidLabel(label.to_string()))
    } else {
        Ok(())
    }
}

/// Immutable simple digraph: no self-loops, no parallel arcs.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    labels: Vec<String>,
    index: HashMap<String, NodeId>,
    out_adj: Vec<Vec<NodeId>>,
    in_adj: Vec<Vec<NodeId>>,
    arc_count: usize,
}

#[derive(Clone, Debug, Default)]
pub struct DigraphBuilder {
    labels: Vec<String>,
    index: HashMap<String, NodeId>,
    arcs: BTreeSet<(usize, usize)>,
}

impl DigraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Declares a node; declaring an existing label returns its id.
    pub fn add_node(&mut self, label: &str) -> Result<NodeId> {
        if let Some(&id) = self.index.get(label) {
            return Ok(id);
        }
        validate_label(label)?;
        let id = NodeId(self.labels.len());
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), id);
        Ok(id)
    }

    /// Declares an arc and any missing endpoint.
    pub fn add_arc(&mut self, tail: &str, head: &str) -> Result<()> {
        let t = self.add_node(tail)?;
        let h = self.add_node(head)?;
        self.add_arc_ids(t, h)
    }

    pub fn add_arc_ids(&mut self, tail: NodeId, head: NodeId) -> Result<()> {
        if tail == head {
            return Err(Error::SelfLoop(self.labels[tail.0].clone()));
        }
        if !self.arcs.insert((tail.0, head.0)) {
            return Err(Error::DuplicateArc(
                self.labels[tail.0].clone(),
                self.labels[head.0].clone(),
            ));
        }
        Ok(())
    }

    pub fn has_arc(&self, tail: NodeId, head: NodeId) -> bool {
        self.arcs.contains(&(tail.0, head.0))
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn build(self) -> Digraph {
        let n = self.labels.len();
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        // BTreeSet order keeps both adjacency lists sorted.
        for &(t, h) in &self.arcs {
            out_adj[t].push(NodeId(h));
            in_adj[h].push(NodeId(t));
        }
        Digraph {
            labels: self.labels,
            index: self.index,
            out_adj,
            in_adj,
            arc_count: self.arcs.len(),
        }
    }
}

/// Structural flags used to pick bounds and solvers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub n: usize,
    pub m: usize,
    pub weakly_connected: bool,
    pub strongly_connected: bool,
    pub is_dag: bool,
    pub is_arborescence: bool,
    pub source_count: usize,
    pub single_source_dag: bool,
}

impl Digraph {
    pub fn builder() -> DigraphBuilder {
        DigraphBuilder::new()
    }

    /// Builds a graph from labels and index pairs.
    pub fn from_arcs<S: AsRef<str>>(labels: &[S], arcs: &[(usize, usize)]) -> Result<Self> {
        let mut b = DigraphBuilder::new();
        for l in labels {
            b.add_node(l.as_ref())?;
        }
        for &(t, h) in arcs {
            if t >= b.node_count() || h >= b.node_count() {
                return Err(Error::precondition(format!("arc ({t}, {h}) out of range")));
            }
            b.add_arc_ids(NodeId(t), NodeId(h))?;
        }
        Ok(b.build())
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn nodes(&self) -> impl ExactSizeIterator<Item = NodeId> {
        (0..self.labels.len()).map(NodeId)
    }

    pub fn label(&self, v: NodeId) -> &str {
        &self.labels[v.0]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn node(&self, label: &str) -> Option<NodeId> {
        self.index.get(label).copied()
    }

    pub fn require_node(&self, label: &str) -> Result<NodeId> {
        self.node(label)
            .ok_or_else(|| Error::UnknownNode(label.to_string()))
    }

    pub fn out_neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.out_adj[v.0]
    }

    pub fn in_neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.in_adj[v.0]
    }

    pub fn neighbors(&self, v: NodeId, dir: Direction) -> &[NodeId] {
        match dir {
            Direction::Out => &self.out_adj[v.0],
            Direction::In => &self.in_adj[v.0],
        }
    }

    pub fn out_degree(&self, v: NodeId) -> usize {
        self.out_adj[v.0].len()
    }

    pub fn in_degree(&self, v: NodeId) -> usize {
        self.in_adj[v.0].len()
    }

    pub fn has_arc(&self, tail: NodeId, head: NodeId) -> bool {
        self.out_adj[tail.0].binary_search(&head).is_ok()
    }

    /// Arcs ordered by tail index, then head index.
    pub fn arcs(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(t, hs)| hs.iter().map(move |&h| (NodeId(t), h)))
    }

    pub fn is_isolated(&self, v: NodeId) -> bool {
        self.out_adj[v.0].is_empty() && self.in_adj[v.0].is_empty()
    }

    /// Equality of label sets and labelled arc sets, ignoring index order.
    pub fn same_labeled_graph(&self, other: &Digraph) -> bool {
        if self.node_count() != other.node_count() || self.arc_count != other.arc_count {
            return false;
        }
        let arcs = |g: &Digraph| -> BTreeSet<(String, String)> {
            g.arcs()
                .map(|(t, h)| (g.label(t).to_string(), g.label(h).to_string()))
                .collect()
        };
        self.labels.iter().all(|l| other.index.contains_key(l)) && arcs(self) == arcs(other)
    }

    /// BFS distances from `start`, truncated at `cap` arcs and restricted
    /// to `alive` nodes when a mask is given. `None` means not reached.
    pub(crate) fn bfs_distances(
        &self,
        start: NodeId,
        dir: Direction,
        cap: Option<usize>,
        alive: Option<&NodeSet>,
    ) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.node_count()];
        dist[start.0] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u.0].unwrap();
            if cap.is_some_and(|c| d >= c) {
                continue;
            }
            for &w in self.neighbors(u, dir) {
                if dist[w.0].is_none() && alive.is_none_or(|a| a.contains(w)) {
                    dist[w.0] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub(crate) fn ball(
        &self,
        v: NodeId,
        k: usize,
        dir: Direction,
        alive: Option<&NodeSet>,
    ) -> NodeSet {
        let dist = self.bfs_distances(v, dir, Some(k), alive);
        NodeSet::from_nodes(
            self.node_count(),
            dist.iter()
                .enumerate()
                .filter(|(_, d)| d.is_some())
                .map(|(i, _)| NodeId(i)),
        )
    }

    /// Nodes reachable from `v` using at most `k` arcs.
    pub fn out_neighborhood(&self, v: NodeId, k: usize) -> NodeSet {
        self.ball(v, k, Direction::Out, None)
    }

    /// Nodes from which `v` is reachable using at most `k` arcs.
    pub fn in_neighborhood(&self, v: NodeId, k: usize) -> NodeSet {
        self.ball(v, k, Direction::In, None)
    }

    /// Shortest-path distances from `v`; `None` for unreachable nodes.
    pub fn distances_from(&self, v: NodeId) -> Vec<Option<usize>> {
        self.bfs_distances(v, Direction::Out, None, None)
    }

    pub(crate) fn eccentricity_within(&self, v: NodeId, alive: Option<&NodeSet>) -> usize {
        self.bfs_distances(v, Direction::Out, None, alive)
            .into_iter()
            .flatten()
            .max()
            .unwrap_or(0)
    }

    /// Largest distance from `v` to a node it can reach. Unreachable
    /// nodes are ignored, so sinks have eccentricity 0.
    pub fn eccentricity(&self, v: NodeId) -> usize {
        self.eccentricity_within(v, None)
    }

    /// Sum over nodes of `max(0, indegree - 1)`.
    pub fn reticulation_number(&self) -> usize {
        self.in_adj
            .iter()
            .map(|ins| ins.len().saturating_sub(1))
            .sum()
    }

    pub fn sources(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.nodes().filter(|&v| self.in_degree(v) == 0)
    }

    pub fn sinks(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.nodes().filter(|&v| self.out_degree(v) == 0)
    }

    fn reaches_all(&self, start: NodeId, dir: Direction) -> bool {
        self.bfs_distances(start, dir, None, None)
            .iter()
            .all(Option::is_some)
    }

    fn weakly_connected(&self) -> bool {
        let n = self.node_count();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![NodeId(0)];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in self.out_adj[u.0].iter().chain(&self.in_adj[u.0]) {
                if !seen[w.0] {
                    seen[w.0] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    fn acyclic(&self) -> bool {
        let mut indeg: Vec<usize> = self.in_adj.iter().map(Vec::len).collect();
        let mut ready: Vec<NodeId> = self.sources().collect();
        let mut removed = 0;
        while let Some(u) = ready.pop() {
            removed += 1;
            for &w in &self.out_adj[u.0] {
                indeg[w.0] -= 1;
                if indeg[w.0] == 0 {
                    ready.push(w);
                }
            }
        }
        removed == self.node_count()
    }

    pub fn classify(&self) -> Classification {
        let n = self.node_count();
        let source_count = self.sources().count();
        let weakly_connected = self.weakly_connected();
        let strongly_connected = n > 0
            && self.reaches_all(NodeId(0), Direction::Out)
            && self.reaches_all(NodeId(0), Direction::In);
        let is_dag = self.acyclic();
        let is_arborescence =
            weakly_connected && source_count == 1 && self.in_adj.iter().all(|ins| ins.len() <= 1);
        Classification {
            n,
            m: self.arc_count,
            weakly_connected,
            strongly_connected,
            is_dag,
            is_arborescence,
            source_count,
            single_source_dag: is_dag && source_count == 1,
        }
    }

    /// Unique source of an arborescence.
    pub fn arborescence_root(&self) -> Result<NodeId> {
        if !self.classify().is_arborescence {
            return Err(Error::NotArborescence);
        }
        Ok(self.sources().next().expect("arborescence has a source"))
    }

    /// Spanning arborescence of shortest paths from `root`. Each node keeps
    /// the smallest-index in-neighbour one step closer to the root.
    pub fn shortest_path_arborescence(&self, root: NodeId) -> Result<Digraph> {
        let dist = self.distances_from(root);
        let mut b = DigraphBuilder::new();
        for l in &self.labels {
            b.add_node(l)?;
        }
        for v in self.nodes() {
            let dv = dist[v.0].ok_or_else(|| Error::Unreachable(self.label(v).to_string()))?;
            if v == root {
                continue;
            }
            let parent = self.in_adj[v.0]
                .iter()
                .copied()
                .find(|u| dist[u.0] == Some(dv - 1))
                .expect("BFS parent exists");
            b.add_arc_ids(parent, v)?;
        }
        Ok(b.build())
    }

    /// A sink furthest from `root` in an arborescence; ties go to the
    /// smallest index.
    pub fn furthest_sink(&self, root: NodeId) -> Result<NodeId> {
        if self.arborescence_root()? != root {
            return Err(Error::precondition(format!(
                "`{}` is not the root of the arborescence",
                self.label(root)
            )));
        }
        let dist = self.distances_from(root);
        let best = self
            .sinks()
            .max_by_key(|s| (dist[s.0], std::cmp::Reverse(*s)))
            .expect("finite DAG has a sink");
        Ok(best)
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("nodes", &self.labels)
            .field(
                "arcs",
                &self
                    .arcs()
                    .map(|(t, h)| format!("{}->{}", self.label(t), self.label(h)))
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}
