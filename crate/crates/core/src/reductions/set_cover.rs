//! Set Cover to DAG burning and back.

use std::fmt::Write;

use itertools::Itertools;

use super::{keyed_lines, Gadget};
use crate::burning::{verify_assignment, BurningAssignment};
use crate::error::{Error, Result};
use crate::graph::{validate_label, Digraph, DigraphBuilder, NodeId, NodeSet};

/// Universe, family of subsets (as sorted element indices) and budget `k`.
///
/// File format:
///
/// ```text
/// universe: 1 2 3 4 5 6
/// set: 1 3 4
/// set: 1 4 5 6
/// set: 2
/// k: 2
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetCoverInstance {
    universe: Vec<String>,
    subsets: Vec<Vec<usize>>,
    k: usize,
}

impl SetCoverInstance {
    pub fn new<S: AsRef<str>>(universe: &[S], subsets: &[Vec<S>], k: usize) -> Result<Self> {
        let universe: Vec<String> = universe.iter().map(|u| u.as_ref().to_string()).collect();
        let find = |e: &str| {
            universe.iter().position(|u| u == e).ok_or_else(|| {
                Error::InvalidInstance(format!("element `{e}` is not in the universe"))
            })
        };
        let subsets = subsets
            .iter()
            .map(|s| {
                s.iter()
                    .map(|e| find(e.as_ref()))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_indices(universe, subsets, k)
    }

    pub fn from_indices(
        universe: Vec<String>,
        mut subsets: Vec<Vec<usize>>,
        k: usize,
    ) -> Result<Self> {
        for (i, u) in universe.iter().enumerate() {
            validate_label(u).map_err(|e| Error::InvalidInstance(e.to_string()))?;
            if universe[..i].contains(u) {
                return Err(Error::InvalidInstance(format!("duplicate element `{u}`")));
            }
        }
        for s in &mut subsets {
            s.sort_unstable();
            s.dedup();
            if s.last().is_some_and(|&e| e >= universe.len()) {
                return Err(Error::InvalidInstance("subset element out of range".into()));
            }
        }
        let sc = SetCoverInstance {
            universe,
            subsets,
            k,
        };
        let all: Vec<usize> = (0..sc.subsets.len()).collect();
        if !sc.is_cover(&all) {
            return Err(Error::InvalidInstance(
                "the subsets do not cover the universe".into(),
            ));
        }
        Ok(sc)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut universe = None;
        let mut subsets = Vec::new();
        let mut k = None;
        for (line, kv) in keyed_lines(text) {
            match kv {
                Some(("universe", rest)) => {
                    universe = Some(rest.split_whitespace().collect::<Vec<_>>())
                }
                Some(("set", rest)) => subsets.push(rest.split_whitespace().collect::<Vec<_>>()),
                Some(("k", rest)) => {
                    k = Some(
                        rest.parse()
                            .map_err(|_| Error::parse(line, format!("bad k `{rest}`")))?,
                    )
                }
                _ => return Err(Error::parse(line, "expected `universe:`, `set:` or `k:`")),
            }
        }
        let universe = universe.ok_or_else(|| Error::parse(0, "missing `universe:` line"))?;
        let k = k.ok_or_else(|| Error::parse(0, "missing `k:` line"))?;
        Self::new(&universe, &subsets, k)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("universe: {}\n", self.universe.join(" "));
        for s in &self.subsets {
            let elems: Vec<&str> = s.iter().map(|&e| self.universe[e].as_str()).collect();
            writeln!(out, "set: {}", elems.join(" ")).unwrap();
        }
        writeln!(out, "k: {}", self.k).unwrap();
        out
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The chosen subsets (by index) cover the universe.
    pub fn is_cover(&self, chosen: &[usize]) -> bool {
        let mut covered = vec![false; self.universe.len()];
        for &s in chosen {
            for &e in &self.subsets[s] {
                covered[e] = true;
            }
        }
        covered.into_iter().all(|c| c)
    }
}

/// Smallest cover of size at most `k`, lexicographically first among
/// covers of that size.
pub fn brute_force_set_cover(sc: &SetCoverInstance) -> Option<Vec<usize>> {
    (0..=sc.k.min(sc.subsets.len())).find_map(|size| {
        (0..sc.subsets.len())
            .combinations(size)
            .find(|c| sc.is_cover(c))
    })
}

/// What a node of the Set Cover gadget stands for, parsed from its label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SetCoverNode {
    /// `rho`
    Root,
    /// `chain:rho.{j}:{level}`; the extra node is level `k + 2` of chain 1.
    RootChain { chain: usize, level: usize },
    /// `chain:S{i}:{level}` with `i` 1-based in the file, 0-based here.
    SubsetChain { subset: usize, level: usize },
    /// `elem:{u}`
    Element(String),
}

pub fn set_cover_role(label: &str) -> Option<SetCoverNode> {
    if label == "rho" {
        return Some(SetCoverNode::Root);
    }
    if let Some(u) = label.strip_prefix("elem:") {
        return Some(SetCoverNode::Element(u.to_string()));
    }
    let (owner, level) = label.strip_prefix("chain:")?.rsplit_once(':')?;
    let level = level.parse().ok()?;
    if let Some(j) = owner.strip_prefix("rho.") {
        return Some(SetCoverNode::RootChain {
            chain: j.parse().ok()?,
            level,
        });
    }
    let i: usize = owner.strip_prefix('S')?.parse().ok()?;
    Some(SetCoverNode::SubsetChain {
        subset: i.checked_sub(1)?,
        level,
    })
}

fn chain_label(owner: &str, level: usize) -> String {
    format!("chain:{owner}:{level}")
}

/// DAG burning instance with budget `k + 2` that is burnable iff the Set
/// Cover instance has a cover of size at most `k`.
///
/// The root `rho` feeds one chain of `k + 1` nodes per `(rho, j)`,
/// `j = 1..=k+2`, and per subset `S`. The bottom node of the chain of `S`
/// points at every element of `S`, and one extra node hangs below chain
/// `(rho, 1)`.
pub fn set_cover_to_dag(sc: &SetCoverInstance) -> Gadget {
    let k = sc.k;
    let budget = k + 2;
    let mut b = DigraphBuilder::new();
    let root = b.add_node("rho").unwrap();
    let owners: Vec<String> = (1..=budget)
        .map(|j| format!("rho.{j}"))
        .chain((1..=sc.subsets.len()).map(|i| format!("S{i}")))
        .collect();
    let mut bottoms = Vec::with_capacity(owners.len());
    for owner in &owners {
        let mut prev = root;
        for level in 1..=k + 1 {
            let v = b.add_node(&chain_label(owner, level)).unwrap();
            b.add_arc_ids(prev, v).unwrap();
            prev = v;
        }
        bottoms.push(prev);
    }
    let extra = b.add_node(&chain_label("rho.1", k + 2)).unwrap();
    b.add_arc_ids(bottoms[0], extra).unwrap();
    let elems: Vec<NodeId> = sc
        .universe
        .iter()
        .map(|u| b.add_node(&format!("elem:{u}")).unwrap())
        .collect();
    for (i, s) in sc.subsets.iter().enumerate() {
        for &e in s {
            b.add_arc_ids(bottoms[budget + i], elems[e]).unwrap();
        }
    }
    Gadget {
        graph: b.build(),
        budget,
    }
}

/// Reads a cover off a burning of the Set Cover gadget. Chain nodes of a
/// subset select that subset; a range placed directly on an element
/// selects the first subset containing it.
pub fn decode_dag_burning(
    gadget: &Gadget,
    sc: &SetCoverInstance,
    witness: &BurningAssignment,
) -> Result<Vec<usize>> {
    let g = &gadget.graph;
    let ranges_ok = witness.ranges().iter().all(|&r| r <= gadget.budget)
        && witness
            .ranges()
            .iter()
            .dedup_with_count()
            .all(|(c, _)| c == 1);
    if !ranges_ok || !verify_assignment(g, witness, &NodeSet::full(g.node_count())) {
        return Err(Error::InvalidInstance(
            "witness does not burn the gadget within its budget".into(),
        ));
    }
    let mut chosen = Vec::new();
    for &(_, v) in witness.pairs() {
        match set_cover_role(g.label(v)) {
            Some(SetCoverNode::SubsetChain { subset, .. }) => chosen.push(subset),
            Some(SetCoverNode::Element(u)) => {
                let e = sc.universe.iter().position(|x| *x == u).ok_or_else(|| {
                    Error::InvalidInstance(format!("gadget element `{u}` not in the instance"))
                })?;
                let s = sc.subsets.iter().position(|s| s.contains(&e)).unwrap();
                chosen.push(s);
            }
            Some(_) => {}
            None => {
                return Err(Error::InvalidInstance(format!(
                    "`{}` is not a Set Cover gadget node",
                    g.label(v)
                )))
            }
        }
    }
    chosen.sort_unstable();
    chosen.dedup();
    if chosen.len() > sc.k || !sc.is_cover(&chosen) {
        return Err(Error::InvalidInstance(
            "decoded subsets are not a cover within the budget".into(),
        ));
    }
    Ok(chosen)
}

/// Set Cover instance with universe `V(D)` plus one marker per step and a
/// subset `N+_{i-1}(v) + {step:i}` for every node `v` and `i` in `1..=b`;
/// `k = b`. Universe labels are `node:{label}` and `step:{i}`.
pub fn dag_to_set_cover(graph: &Digraph, b: usize) -> SetCoverInstance {
    let n = graph.node_count();
    let universe: Vec<String> = graph
        .labels()
        .iter()
        .map(|l| format!("node:{l}"))
        .chain((1..=b).map(|i| format!("step:{i}")))
        .collect();
    let mut subsets = Vec::with_capacity(n * b);
    for v in graph.nodes() {
        for i in 1..=b {
            let mut s: Vec<usize> = graph
                .out_neighborhood(v, i - 1)
                .iter()
                .map(|u| u.index())
                .collect();
            s.push(n + i - 1);
            subsets.push(s);
        }
    }
    SetCoverInstance::from_indices(universe, subsets, b)
        .expect("every node lies in its own 0-neighbourhood")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burning::BurningAssignment;
    use crate::graph::parse_digraph;

    fn six_elements(k: usize) -> SetCoverInstance {
        let u: Vec<String> = (1..=6).map(|i| i.to_string()).collect();
        let s = |xs: &[u32]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        SetCoverInstance::new(&u, &[s(&[1, 3, 4]), s(&[1, 4, 5, 6]), s(&[2])], k).unwrap()
    }

    fn trivial() -> SetCoverInstance {
        SetCoverInstance::new(&["u"], &[vec!["u"]], 1).unwrap()
    }

    #[test]
    fn parse_round_trip_and_validation() {
        let sc = six_elements(2);
        assert_eq!(SetCoverInstance::parse(&sc.to_text()).unwrap(), sc);
        assert!(SetCoverInstance::parse("universe: a b\nset: a\nk: 1").is_err());
        assert!(SetCoverInstance::parse("universe: a\nset: b\nk: 1").is_err());
        assert!(SetCoverInstance::parse("universe: a\nset: a").is_err());
        assert!(matches!(
            SetCoverInstance::parse("universe: a\nwhat\nk: 1"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn oracle_on_six_element_instances() {
        assert_eq!(brute_force_set_cover(&six_elements(2)), None);
        assert_eq!(brute_force_set_cover(&six_elements(3)), Some(vec![0, 1, 2]));
        assert_eq!(brute_force_set_cover(&trivial()), Some(vec![0]));
    }

    #[test]
    fn gadget_sizes() {
        let g2 = set_cover_to_dag(&six_elements(2));
        assert_eq!((g2.budget, g2.graph.node_count()), (4, 29));
        let g3 = set_cover_to_dag(&six_elements(3));
        assert_eq!((g3.budget, g3.graph.node_count()), (5, 40));
        let t = set_cover_to_dag(&trivial());
        assert_eq!((t.budget, t.graph.node_count()), (3, 11));
        for g in [&g2, &g3, &t] {
            assert!(g.graph.classify().single_source_dag);
        }
    }

    #[test]
    fn labels_decode() {
        assert_eq!(set_cover_role("rho"), Some(SetCoverNode::Root));
        assert_eq!(
            set_cover_role("chain:rho.1:4"),
            Some(SetCoverNode::RootChain { chain: 1, level: 4 })
        );
        assert_eq!(
            set_cover_role("chain:S2:3"),
            Some(SetCoverNode::SubsetChain {
                subset: 1,
                level: 3
            })
        );
        assert_eq!(
            set_cover_role("elem:ab:c"),
            Some(SetCoverNode::Element("ab:c".into()))
        );
        assert_eq!(set_cover_role("chain:S0:1"), None);
        assert_eq!(set_cover_role("v1"), None);
    }

    #[test]
    fn decode_trivial_gadget() {
        let sc = trivial();
        let g = set_cover_to_dag(&sc);
        let phi = BurningAssignment::parse("3:rho,2:chain:S1:2,1:chain:rho.1:3", &g.graph).unwrap();
        assert_eq!(decode_dag_burning(&g, &sc, &phi).unwrap(), [0]);
        // range on the element itself decodes to a subset containing it
        let phi = BurningAssignment::parse("3:rho,2:chain:rho.1:2,1:elem:u", &g.graph).unwrap();
        assert_eq!(decode_dag_burning(&g, &sc, &phi).unwrap(), [0]);
        let bad = BurningAssignment::parse("3:rho", &g.graph).unwrap();
        assert!(decode_dag_burning(&g, &sc, &bad).is_err());
    }

    #[test]
    fn membership_direction_shape() {
        let p3 = parse_digraph("v1 -> v2\nv2 -> v3").unwrap();
        let sc = dag_to_set_cover(&p3, 2);
        assert_eq!((sc.universe().len(), sc.subsets().len(), sc.k()), (5, 6, 2));
        assert!(brute_force_set_cover(&sc).is_some());
        let sc1 = dag_to_set_cover(&p3, 1);
        assert_eq!(sc1.universe().len(), 4);
        assert!(brute_force_set_cover(&sc1).is_none());
        let c4 = parse_digraph("a -> b\nb -> c\nc -> d\nd -> a").unwrap();
        assert!(brute_force_set_cover(&dag_to_set_cover(&c4, 3)).is_some());
        assert!(brute_force_set_cover(&dag_to_set_cover(&c4, 2)).is_none());
    }
}
