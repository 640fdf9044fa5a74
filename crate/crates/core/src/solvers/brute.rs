use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use super::{SolveOptions, SolveResult, Solver, Witness};
use crate::burning::{spread, BurningInstance, BurningSequence};
use crate::error::{Error, Result};
use crate::graph::{Digraph, NodeId, NodeSet};

/// Exhaustive search over burning sequences of length at most `budget`.
///
/// Each step only branches on nodes that are not yet burning, so every
/// candidate is a strict sequence of distinct nodes. Nodes are tried in
/// index order and the search stops at the first prefix whose burned set
/// covers the target, which makes the witness the lexicographically first
/// such prefix.
pub fn brute_force_burn(graph: &Digraph, budget: usize, target: &NodeSet) -> SolveResult {
    brute_force_burn_with(graph, budget, target, false)
}

pub fn brute_force_burn_with(
    graph: &Digraph,
    budget: usize,
    target: &NodeSet,
    parallel: bool,
) -> SolveResult {
    let start = Instant::now();
    let search = Search {
        graph,
        target,
        budget,
        explored: AtomicU64::new(0),
    };
    let found = if target.is_empty() {
        Some(Vec::new())
    } else if budget == 0 {
        None
    } else if parallel {
        graph
            .nodes()
            .collect::<Vec<_>>()
            .into_par_iter()
            .find_map_first(|v| {
                let mut prefix = vec![v];
                search
                    .try_choice(&NodeSet::empty(graph.node_count()), v, &mut prefix)
                    .then_some(prefix)
            })
    } else {
        let mut prefix = Vec::with_capacity(budget);
        search
            .step(&NodeSet::empty(graph.node_count()), &mut prefix)
            .then_some(prefix)
    };
    SolveResult::new(
        found.map(|steps| Witness::Sequence(BurningSequence::new(steps))),
        search.explored.into_inner(),
        start.elapsed(),
    )
}

struct Search<'a> {
    graph: &'a Digraph,
    target: &'a NodeSet,
    budget: usize,
    explored: AtomicU64,
}

impl Search<'_> {
    /// Extends `prefix` by one step; `burned` is the state after it.
    fn step(&self, burned: &NodeSet, prefix: &mut Vec<NodeId>) -> bool {
        let spreaded = spread(self.graph, burned);
        if spreaded.len() == self.graph.node_count() {
            // nothing left to light; any choice finishes the job
            self.explored.fetch_add(1, Ordering::Relaxed);
            let pick = self
                .graph
                .nodes()
                .find(|v| !prefix.contains(v))
                .unwrap_or(NodeId::new(0));
            prefix.push(pick);
            return true;
        }
        for v in self.graph.nodes().filter(|&v| !spreaded.contains(v)) {
            prefix.push(v);
            if self.try_choice(&spreaded, v, prefix) {
                return true;
            }
            prefix.pop();
        }
        false
    }

    /// `prefix` already ends with `v`.
    fn try_choice(&self, spreaded: &NodeSet, v: NodeId, prefix: &mut Vec<NodeId>) -> bool {
        self.explored.fetch_add(1, Ordering::Relaxed);
        let mut after = spreaded.clone();
        after.insert(v);
        self.target.is_subset(&after) || (prefix.len() < self.budget && self.step(&after, prefix))
    }
}

/// Enumerates sequences; handles ranges `{1, ..., b}` only.
#[derive(Clone, Copy, Debug, Default)]
pub struct BruteForceSolver;

impl Solver for BruteForceSolver {
    fn name(&self) -> &'static str {
        "brute"
    }

    fn check(&self, instance: &BurningInstance<'_>) -> Result<()> {
        match instance.consecutive_budget() {
            Some(_) => Ok(()),
            None => Err(Error::Unsupported {
                solver: self.name().into(),
                reason: "ranges must be exactly {1, ..., b}".into(),
            }),
        }
    }

    fn solve(&self, instance: &BurningInstance<'_>, options: SolveOptions) -> Result<SolveResult> {
        self.check(instance)?;
        let b = instance.consecutive_budget().unwrap();
        Ok(brute_force_burn_with(
            instance.graph(),
            b,
            instance.target(),
            options.parallel,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burning::verify_sequence;
    use crate::graph::parse_digraph;

    fn seq_text(d: &Digraph, r: &SolveResult) -> Option<String> {
        match &r.witness {
            Some(Witness::Sequence(s)) => Some(s.to_text(d)),
            _ => None,
        }
    }

    /// All strict sequences of length exactly `b` over n nodes, checked
    /// one by one with the verifier.
    fn exhaustive(d: &Digraph, b: usize, target: &NodeSet) -> Option<Vec<NodeId>> {
        let n = d.node_count();
        let mut idx = vec![0usize; b];
        loop {
            let seq = BurningSequence::new(idx.iter().map(|&i| NodeId::new(i)).collect());
            if verify_sequence(d, &seq, target, true) {
                return Some(seq.steps().to_vec());
            }
            let mut pos = b;
            loop {
                if pos == 0 {
                    return None;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < n {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }

    #[test]
    fn path_of_three() {
        let d = parse_digraph("v1 -> v2\nv2 -> v3").unwrap();
        let all = NodeSet::full(3);
        let r = brute_force_burn(&d, 2, &all);
        assert_eq!(seq_text(&d, &r).as_deref(), Some("v1,v3"));
        assert_eq!(
            exhaustive(&d, 2, &all).unwrap(),
            vec![NodeId::new(0), NodeId::new(2)]
        );
        assert!(!brute_force_burn(&d, 1, &all).is_yes());
    }

    #[test]
    fn star_needs_every_source() {
        let d = parse_digraph("s1 -> t\ns2 -> t\ns3 -> t").unwrap();
        let all = NodeSet::full(4);
        assert!(!brute_force_burn(&d, 2, &all).is_yes());
        assert!(exhaustive(&d, 2, &all).is_none());
        assert!(brute_force_burn(&d, 3, &all).is_yes());
    }

    #[test]
    fn saturated_last_step() {
        let d = parse_digraph("v1 -> v2").unwrap();
        let r = brute_force_burn(&d, 2, &NodeSet::full(2));
        assert_eq!(seq_text(&d, &r).as_deref(), Some("v1,v2"));
    }

    #[test]
    fn parallel_matches_sequential() {
        let d = parse_digraph("a -> b\nb -> c\nc -> d\nd -> e\ne -> f\nx -> c").unwrap();
        let all = NodeSet::full(d.node_count());
        for b in 1..=4 {
            let s = brute_force_burn_with(&d, b, &all, false);
            let p = brute_force_burn_with(&d, b, &all, true);
            assert_eq!(s.witness, p.witness);
        }
    }

    #[test]
    fn rejects_non_consecutive_ranges() {
        let d = parse_digraph("a -> b").unwrap();
        let inst = BurningInstance::new(&d, NodeSet::full(2), vec![2, 2]).unwrap();
        assert!(BruteForceSolver.check(&inst).is_err());
    }
}
