use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use super::{SolveOptions, SolveResult, Solver, Witness};
use crate::burning::{BurningAssignment, BurningInstance};
use crate::error::Result;
use crate::graph::{Digraph, Direction, NodeId, NodeSet};

/// Branching algorithm for partial burning with ranges.
///
/// Some range must burn a chosen pivot `x` of the remaining target, so
/// the search tries every range `r` (distinct values, descending) at every
/// node of `N-_{r-1}(x)` (ascending), removes what that placement burns
/// and recurses on the other ranges. With `heuristic` the pivot minimises
/// `|N-_{max(R)-1}(x)|`; without it the smallest-index target is used.
pub fn digraph_burning(instance: &BurningInstance<'_>, heuristic: bool) -> SolveResult {
    digraph_burning_with(instance, heuristic, false)
}

pub fn digraph_burning_with(
    instance: &BurningInstance<'_>,
    heuristic: bool,
    parallel: bool,
) -> SolveResult {
    let start = Instant::now();
    let search = Branching {
        graph: instance.graph(),
        heuristic,
        explored: AtomicU64::new(0),
    };
    let ranges = instance.ranges();
    let target = instance.target();
    let found = if parallel {
        search.branch_parallel(target, ranges)
    } else {
        let mut pairs = Vec::with_capacity(ranges.len());
        search.branch(target, ranges, &mut pairs).then_some(pairs)
    };
    let witness = found.map(|pairs| Witness::Assignment(BurningAssignment::new(pairs).unwrap()));
    SolveResult::new(witness, search.explored.into_inner(), start.elapsed())
}

struct Branching<'a> {
    graph: &'a Digraph,
    heuristic: bool,
    explored: AtomicU64,
}

impl Branching<'_> {
    fn pivot(&self, remaining: &NodeSet, max_range: usize) -> NodeId {
        if !self.heuristic {
            return remaining.first().unwrap();
        }
        remaining
            .iter()
            .min_by_key(|&x| self.graph.ball(x, max_range - 1, Direction::In, None).len())
            .unwrap()
    }

    /// `(r, v, index of r)` in branching order.
    fn choices(&self, remaining: &NodeSet, ranges: &[usize]) -> Vec<(usize, NodeId, usize)> {
        let x = self.pivot(remaining, ranges[0]);
        let mut out = Vec::new();
        for (i, &r) in ranges.iter().enumerate() {
            if i > 0 && ranges[i - 1] == r {
                continue;
            }
            for v in self.graph.ball(x, r - 1, Direction::In, None).iter() {
                out.push((r, v, i));
            }
        }
        out
    }

    fn finish(&self, ranges: &[usize], pairs: &mut Vec<(usize, NodeId)>) {
        // leftover ranges go to node 0 so the map stays total on R
        if self.graph.node_count() > 0 {
            pairs.extend(ranges.iter().map(|&r| (r, NodeId::new(0))));
        }
    }

    fn apply(
        &self,
        remaining: &NodeSet,
        r: usize,
        v: NodeId,
        ranges: &[usize],
        i: usize,
    ) -> (NodeSet, Vec<usize>) {
        let mut rest_target = remaining.clone();
        rest_target.difference_with(&self.graph.out_neighborhood(v, r - 1));
        let mut rest = ranges.to_vec();
        rest.remove(i);
        (rest_target, rest)
    }

    fn branch(
        &self,
        remaining: &NodeSet,
        ranges: &[usize],
        pairs: &mut Vec<(usize, NodeId)>,
    ) -> bool {
        self.explored.fetch_add(1, Ordering::Relaxed);
        if remaining.is_empty() {
            self.finish(ranges, pairs);
            return true;
        }
        if ranges.is_empty() {
            return false;
        }
        for (r, v, i) in self.choices(remaining, ranges) {
            let (rest_target, rest) = self.apply(remaining, r, v, ranges, i);
            pairs.push((r, v));
            if self.branch(&rest_target, &rest, pairs) {
                return true;
            }
            pairs.pop();
        }
        false
    }

    fn branch_parallel(
        &self,
        remaining: &NodeSet,
        ranges: &[usize],
    ) -> Option<Vec<(usize, NodeId)>> {
        if remaining.is_empty() || ranges.is_empty() {
            let mut pairs = Vec::new();
            return self.branch(remaining, ranges, &mut pairs).then_some(pairs);
        }
        self.explored.fetch_add(1, Ordering::Relaxed);
        self.choices(remaining, ranges)
            .into_par_iter()
            .find_map_first(|(r, v, i)| {
                let (rest_target, rest) = self.apply(remaining, r, v, ranges, i);
                let mut pairs = vec![(r, v)];
                self.branch(&rest_target, &rest, &mut pairs)
                    .then_some(pairs)
            })
    }
}

/// Handles any instance; the pivot rule is chosen at registration.
#[derive(Clone, Copy, Debug)]
pub struct BranchingSolver {
    pub heuristic: bool,
}

impl Solver for BranchingSolver {
    fn name(&self) -> &'static str {
        if self.heuristic {
            "branching"
        } else {
            "branching-plain"
        }
    }

    fn check(&self, _instance: &BurningInstance<'_>) -> Result<()> {
        Ok(())
    }

    fn solve(&self, instance: &BurningInstance<'_>, options: SolveOptions) -> Result<SolveResult> {
        Ok(digraph_burning_with(
            instance,
            self.heuristic,
            options.parallel,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burning::verify_assignment;
    use crate::graph::parse_digraph;

    fn g(t: &str) -> Digraph {
        parse_digraph(t).unwrap()
    }

    fn solve(d: &Digraph, ranges: Vec<usize>, heuristic: bool) -> Option<BurningAssignment> {
        let inst = BurningInstance::new(d, NodeSet::full(d.node_count()), ranges).unwrap();
        let r = digraph_burning(&inst, heuristic);
        r.witness.map(|w| w.to_assignment())
    }

    #[test]
    fn single_range_covers_path() {
        let d = g("v1 -> v2\nv2 -> v3");
        for h in [false, true] {
            let phi = solve(&d, vec![3], h).unwrap();
            assert_eq!(phi.to_text(&d), "3:v1");
        }
    }

    #[test]
    fn star_with_three_ranges() {
        let d = g("s1 -> t\ns2 -> t\ns3 -> t");
        for h in [false, true] {
            let phi = solve(&d, vec![1, 2, 3], h).unwrap();
            assert!(verify_assignment(&d, &phi, &NodeSet::full(4)));
            assert!(solve(&d, vec![1, 2], h).is_none());
        }
    }

    #[test]
    fn two_twos_on_four_cycle() {
        let d = g("a -> b\nb -> c\nc -> d\nd -> a");
        for h in [false, true] {
            let phi = solve(&d, vec![2, 2], h).unwrap();
            let mut nodes: Vec<_> = phi.pairs().iter().map(|&(_, v)| d.label(v)).collect();
            nodes.sort();
            assert!(nodes == ["a", "c"] || nodes == ["b", "d"]);
            assert!(solve(&d, vec![2], h).is_none());
        }
    }

    #[test]
    fn partial_target_pads_leftover_ranges() {
        let d = g("a -> b\nc");
        let inst =
            BurningInstance::new(&d, NodeSet::from_nodes(3, [NodeId::new(1)]), vec![1, 2, 3])
                .unwrap();
        let r = digraph_burning(&inst, true);
        let phi = r.witness.unwrap().to_assignment();
        assert_eq!(phi.ranges(), [1, 2, 3]);
        assert!(verify_assignment(&d, &phi, inst.target()));
    }

    #[test]
    fn parallel_agrees() {
        let d = g("a -> b\nb -> c\nc -> a\nc -> d\nd -> e\nx -> e");
        for b in 1..=4 {
            let inst = BurningInstance::full(&d, b).unwrap();
            let s = digraph_burning_with(&inst, true, false);
            let p = digraph_burning_with(&inst, true, true);
            assert_eq!(s.answer, p.answer);
            assert_eq!(s.witness, p.witness);
        }
    }
}
