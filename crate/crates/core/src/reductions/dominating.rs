use itertools::Itertools;

use crate::graph::{Digraph, NodeId};

/// Every node is chosen or has an in-arc from a chosen node.
pub fn is_dominating_set(graph: &Digraph, set: &[NodeId]) -> bool {
    graph
        .nodes()
        .all(|v| set.contains(&v) || graph.in_neighbors(v).iter().any(|u| set.contains(u)))
}

/// Smallest directed dominating set of size at most `k`, first in
/// lexicographic order among those of that size.
pub fn brute_force_dominating_set(graph: &Digraph, k: usize) -> Option<Vec<NodeId>> {
    (0..=k.min(graph.node_count())).find_map(|size| {
        graph
            .nodes()
            .combinations(size)
            .find(|set| is_dominating_set(graph, set))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_digraph;

    #[test]
    fn cycle_and_star() {
        let c4 = parse_digraph("a -> b\nb -> c\nc -> d\nd -> a").unwrap();
        let ds = brute_force_dominating_set(&c4, 2).unwrap();
        assert_eq!(ds, [NodeId::new(0), NodeId::new(2)]);
        assert!(brute_force_dominating_set(&c4, 1).is_none());
        let star = parse_digraph("s1 -> t\ns2 -> t\ns3 -> t").unwrap();
        assert_eq!(brute_force_dominating_set(&star, 3).unwrap().len(), 3);
        assert!(brute_force_dominating_set(&star, 2).is_none());
    }
}
