use std::cell::{Cell, RefCell};
use std::collections::HashSet;
use std::time::Instant;

use super::{SolveOptions, SolveResult, Solver, Witness};
use crate::burning::{BurningAssignment, BurningInstance};
use crate::error::{Error, Result};
use crate::graph::{Digraph, Direction, NodeId, NodeSet};

/// Decides whether the ranges in `ranges` (a multiset) burn the whole
/// arborescence `tree`.
///
/// Let `s` be a furthest sink. If the root reaches `s` within
/// `max(R) - 1` arcs, the root takes every range. Otherwise some range `r`
/// can be moved to the ancestor `v` of `s` with `d(v, s) = r - 1`; that
/// range burns exactly the subtree of `v`, which is removed before
/// recursing on the rest of the ranges. Failed `(remaining tree, ranges)`
/// states are remembered, since different removal orders often leave the
/// same subproblem.
pub fn tree_burning(tree: &Digraph, ranges: &[usize]) -> Result<SolveResult> {
    let start = Instant::now();
    let root = tree.arborescence_root()?;
    if ranges.contains(&0) {
        return Err(Error::ZeroRange);
    }
    let n = tree.node_count();
    let mut parent = vec![None; n];
    for (t, h) in tree.arcs() {
        parent[h.index()] = Some(t);
    }
    let depth: Vec<usize> = tree
        .distances_from(root)
        .into_iter()
        .map(|d| d.expect("arborescence reaches every node"))
        .collect();
    let search = TreeSearch {
        tree,
        root,
        parent,
        depth,
        explored: Cell::new(0),
        failed: RefCell::new(HashSet::new()),
    };
    let mut sorted = ranges.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut pairs = Vec::with_capacity(sorted.len());
    let found = search.burn(&NodeSet::full(n), &sorted, &mut pairs);
    let witness = found.then(|| Witness::Assignment(BurningAssignment::new(pairs).unwrap()));
    Ok(SolveResult::new(
        witness,
        search.explored.get(),
        start.elapsed(),
    ))
}

struct TreeSearch<'a> {
    tree: &'a Digraph,
    root: NodeId,
    parent: Vec<Option<NodeId>>,
    depth: Vec<usize>,
    explored: Cell<u64>,
    failed: RefCell<HashSet<(NodeSet, Vec<usize>)>>,
}

impl TreeSearch<'_> {
    /// `alive` is closed under taking parents, so depths are unchanged.
    fn furthest_sink(&self, alive: &NodeSet) -> NodeId {
        alive
            .iter()
            .filter(|&v| {
                !self
                    .tree
                    .out_neighbors(v)
                    .iter()
                    .any(|&c| alive.contains(c))
            })
            .max_by_key(|&v| (self.depth[v.index()], std::cmp::Reverse(v)))
            .expect("root is always alive")
    }

    fn ancestor(&self, mut v: NodeId, up: usize) -> NodeId {
        for _ in 0..up {
            v = self.parent[v.index()].expect("ancestor within depth");
        }
        v
    }

    fn burn(&self, alive: &NodeSet, ranges: &[usize], pairs: &mut Vec<(usize, NodeId)>) -> bool {
        self.explored.set(self.explored.get() + 1);
        let Some(&max) = ranges.first() else {
            return false;
        };
        let key = (alive.clone(), ranges.to_vec());
        if self.failed.borrow().contains(&key) {
            return false;
        }
        let s = self.furthest_sink(alive);
        if self.depth[s.index()] < max {
            pairs.extend(ranges.iter().map(|&r| (r, self.root)));
            return true;
        }
        for (i, &r) in ranges.iter().enumerate() {
            if i > 0 && ranges[i - 1] == r {
                continue;
            }
            let v = self.ancestor(s, r - 1);
            let burned = self.tree.ball(v, r - 1, Direction::Out, Some(alive));
            debug_assert_eq!(
                burned,
                self.tree.ball(v, usize::MAX, Direction::Out, Some(alive)),
                "range must burn the whole remaining subtree"
            );
            let mut rest_alive = alive.clone();
            rest_alive.difference_with(&burned);
            let mut rest = ranges.to_vec();
            rest.remove(i);
            pairs.push((r, v));
            if self.burn(&rest_alive, &rest, pairs) {
                return true;
            }
            pairs.pop();
        }
        self.failed.borrow_mut().insert(key);
        false
    }
}

/// FPT solver for arborescences; always burns the whole tree.
#[derive(Clone, Copy, Debug, Default)]
pub struct TreeSolver;

impl Solver for TreeSolver {
    fn name(&self) -> &'static str {
        "tree"
    }

    fn check(&self, instance: &BurningInstance<'_>) -> Result<()> {
        if !instance.graph().classify().is_arborescence {
            return Err(Error::NotArborescence);
        }
        if !instance.targets_everything() {
            return Err(Error::Unsupported {
                solver: self.name().into(),
                reason: "the target must be every node".into(),
            });
        }
        Ok(())
    }

    /// Runs sequentially regardless of `options`.
    fn solve(&self, instance: &BurningInstance<'_>, _options: SolveOptions) -> Result<SolveResult> {
        self.check(instance)?;
        tree_burning(instance.graph(), instance.ranges())
    }
}
