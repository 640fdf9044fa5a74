//! Upper bounds on the burning number and the covers that achieve them.

use std::fmt;

use crate::burning::BurningAssignment;
use crate::error::{Error, Result};
use crate::graph::{Digraph, Direction, NodeId, NodeSet};

/// Smallest `b` with `n <= 1 + 2 + ... + b`, i.e. `ceil(sqrt(2n + 1/4) - 1/2)`.
pub fn b_n(n: usize) -> usize {
    let mut b = 0;
    while b * (b + 1) / 2 < n {
        b += 1;
    }
    b
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundRule {
    NoArcsExact,
    HasArcUpper,
    WeaklyConnectedUpper,
    SingleSourceDagUpper,
    StronglyConnectedUpper,
}

impl BoundRule {
    pub fn name(self) -> &'static str {
        match self {
            BoundRule::NoArcsExact => "no_arcs_exact",
            BoundRule::HasArcUpper => "has_arc_upper",
            BoundRule::WeaklyConnectedUpper => "weakly_connected_upper",
            BoundRule::SingleSourceDagUpper => "single_source_dag_upper",
            BoundRule::StronglyConnectedUpper => "strongly_connected_upper",
        }
    }
}

impl fmt::Display for BoundRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub value: usize,
    pub rule: BoundRule,
    /// Some graph of this class attains the bound.
    pub sharp: bool,
}

/// The most specific bound that applies to `graph`.
pub fn upper_bound(graph: &Digraph) -> BoundReport {
    let n = graph.node_count();
    let report = |value, rule| BoundReport {
        value,
        rule,
        sharp: true,
    };
    if graph.arc_count() == 0 || n <= 2 {
        return report(n, BoundRule::NoArcsExact);
    }
    let c = graph.classify();
    if c.strongly_connected {
        report(b_n(n), BoundRule::StronglyConnectedUpper)
    } else if c.single_source_dag {
        report(b_n(n), BoundRule::SingleSourceDagUpper)
    } else if c.weakly_connected {
        report(n - 1, BoundRule::WeaklyConnectedUpper)
    } else {
        report(n - 1, BoundRule::HasArcUpper)
    }
}

fn single_source_dag_root(graph: &Digraph, alive: &NodeSet) -> Option<NodeId> {
    let mut roots = alive
        .iter()
        .filter(|&v| !graph.in_neighbors(v).iter().any(|&u| alive.contains(u)));
    let root = roots.next()?;
    roots.next().is_none().then_some(root)
}

/// Walks down from `root` through children of maximal eccentricity and
/// returns the first node whose eccentricity is `target`. Eccentricity
/// drops by at most one per step along the walk and ends at 0 in a sink,
/// so every value below the root's is hit.
fn descend_to_eccentricity(
    graph: &Digraph,
    root: NodeId,
    target: usize,
    alive: Option<&NodeSet>,
) -> NodeId {
    let ecc = |v| graph.eccentricity_within(v, alive);
    let mut v = root;
    let mut e = ecc(v);
    while e != target {
        let (child, ce) = graph
            .out_neighbors(v)
            .iter()
            .filter(|&&c| alive.is_none_or(|a| a.contains(c)))
            .map(|&c| (c, ecc(c)))
            .fold(None, |best: Option<(NodeId, usize)>, (c, ce)| match best {
                Some((_, be)) if be >= ce => best,
                _ => Some((c, ce)),
            })
            .expect("walk stops before reaching a sink");
        debug_assert!(ce + 1 >= e);
        v = child;
        e = ce;
    }
    v
}

/// A node with eccentricity exactly `i` in a single-source DAG whose
/// source has eccentricity at least `i`.
pub fn find_node_with_eccentricity(graph: &Digraph, i: usize) -> Result<NodeId> {
    let c = graph.classify();
    if !c.single_source_dag {
        return Err(Error::precondition("graph is not a single-source DAG"));
    }
    let root = graph.sources().next().unwrap();
    let e = graph.eccentricity(root);
    if i == 0 || i > e {
        return Err(Error::precondition(format!(
            "eccentricity {i} not in 1..={e}"
        )));
    }
    Ok(descend_to_eccentricity(graph, root, i, None))
}

/// Cover of a single-source DAG with ranges exactly `{1, ..., b_n(n)}`.
///
/// Each round works on the remaining induced subgraph with `N` nodes and
/// `b = b_n(N)`: if the source reaches everything within `b - 1` arcs the
/// source takes every unused range; otherwise a node `v` of eccentricity
/// `b - 1` takes the largest unused range and `N+_{b-1}(v)` is removed.
pub fn cover_single_source_dag(graph: &Digraph) -> Result<BurningAssignment> {
    let n = graph.node_count();
    if n == 0 {
        return Ok(BurningAssignment::default());
    }
    if !graph.classify().single_source_dag {
        return Err(Error::precondition("graph is not a single-source DAG"));
    }
    let mut alive = NodeSet::full(n);
    let mut next_range = b_n(n);
    let mut pairs = Vec::with_capacity(next_range);
    loop {
        let root = single_source_dag_root(graph, &alive)
            .expect("remainder of a peel is a single-source DAG");
        let b = b_n(alive.len());
        assert!(b <= next_range, "range budget exceeded while peeling");
        if graph.eccentricity_within(root, Some(&alive)) < b {
            pairs.extend((1..=next_range).rev().map(|r| (r, root)));
            break;
        }
        let v = descend_to_eccentricity(graph, root, b - 1, Some(&alive));
        let peeled = graph.ball(v, b - 1, Direction::Out, Some(&alive));
        debug_assert!(peeled.len() >= b);
        pairs.push((next_range, v));
        next_range -= 1;
        alive.difference_with(&peeled);
    }
    BurningAssignment::new(pairs)
}

/// Cover of a strongly connected graph through the shortest-path
/// arborescence rooted at node 0.
pub fn cover_strongly_connected(graph: &Digraph) -> Result<BurningAssignment> {
    if !graph.classify().strongly_connected {
        return Err(Error::precondition("graph is not strongly connected"));
    }
    let tree = graph.shortest_path_arborescence(NodeId::new(0))?;
    cover_single_source_dag(&tree)
}
