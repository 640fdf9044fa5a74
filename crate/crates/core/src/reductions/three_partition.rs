//! Distinct 3-Partition to tree burning.

use super::{keyed_lines, Gadget};
use crate::burning::BurningAssignment;
use crate::error::{Error, Result};
use crate::graph::{DigraphBuilder, NodeId};

/// `3n` distinct positive integers with `n * B = sum` and
/// `B/4 < a < B/2` for every value. Values are kept sorted.
///
/// File format: one line `values: a1 a2 ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreePartitionInstance {
    values: Vec<u64>,
}

impl ThreePartitionInstance {
    pub fn new(values: &[u64]) -> Result<Self> {
        let invalid = |msg: String| Err(Error::InvalidInstance(msg));
        let mut values = values.to_vec();
        values.sort_unstable();
        if values.is_empty() || !values.len().is_multiple_of(3) {
            return invalid(format!("need 3n values, got {}", values.len()));
        }
        if values[0] == 0 {
            return invalid("values must be positive".into());
        }
        if values.windows(2).any(|w| w[0] == w[1]) {
            return invalid("values must be distinct".into());
        }
        let n = values.len() as u64 / 3;
        let sum: u64 = values.iter().sum();
        if !sum.is_multiple_of(n) {
            return invalid(format!("sum {sum} is not divisible by n = {n}"));
        }
        let b = sum / n;
        if let Some(a) = values.iter().find(|&&a| 4 * a <= b || 2 * a >= b) {
            return invalid(format!("value {a} is outside (B/4, B/2) for B = {b}"));
        }
        Ok(ThreePartitionInstance { values })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut values = None;
        for (line, kv) in keyed_lines(text) {
            match kv {
                Some(("values", rest)) => {
                    let parsed = rest
                        .split_whitespace()
                        .map(|t| {
                            t.parse()
                                .map_err(|_| Error::parse(line, format!("bad value `{t}`")))
                        })
                        .collect::<Result<Vec<u64>>>()?;
                    values = Some(parsed);
                }
                _ => return Err(Error::parse(line, "expected `values:`")),
            }
        }
        Self::new(&values.ok_or_else(|| Error::parse(0, "missing `values:` line"))?)
    }

    pub fn to_text(&self) -> String {
        let vals: Vec<String> = self.values.iter().map(u64::to_string).collect();
        format!("values: {}\n", vals.join(" "))
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// Number of triples.
    pub fn n(&self) -> usize {
        self.values.len() / 3
    }

    /// Target triple sum.
    pub fn bin_size(&self) -> u64 {
        self.values.iter().sum::<u64>() / self.n() as u64
    }

    pub fn max_value(&self) -> u64 {
        *self.values.last().unwrap()
    }

    /// `[m] \ A`, ascending.
    pub fn missing(&self) -> Vec<u64> {
        (1..=self.max_value())
            .filter(|v| self.values.binary_search(v).is_err())
            .collect()
    }

    /// `m + |Z| + n - 1`.
    pub fn budget(&self) -> usize {
        self.max_value() as usize + self.missing().len() + self.n() - 1
    }
}

/// First partition into triples of sum `B` in canonical order: the
/// smallest unused value is always the head of the next triple, partners
/// are tried in ascending order. Triples come out sorted.
pub fn brute_force_3partition(tp: &ThreePartitionInstance) -> Option<Vec<[u64; 3]>> {
    fn go(rest: &[u64], b: u64, acc: &mut Vec<[u64; 3]>) -> bool {
        let Some((&a, tail)) = rest.split_first() else {
            return true;
        };
        for i in 0..tail.len() {
            for j in i + 1..tail.len() {
                if a + tail[i] + tail[j] != b {
                    continue;
                }
                let next: Vec<u64> = tail
                    .iter()
                    .enumerate()
                    .filter(|&(x, _)| x != i && x != j)
                    .map(|(_, &v)| v)
                    .collect();
                acc.push([a, tail[i], tail[j]]);
                if go(&next, b, acc) {
                    return true;
                }
                acc.pop();
            }
        }
        false
    }
    let mut acc = Vec::new();
    go(&tp.values, tp.bin_size(), &mut acc).then_some(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentKind {
    /// Spider with legs of `z` nodes for a missing value `z`.
    Filler(u64),
    /// Spider with legs of `k > m` nodes.
    Long(u64),
    /// Path of `B` nodes for bin `j` (0-based).
    Bin(usize),
}

/// One component of the chain. `main_leg` runs from `top` to the node the
/// next component hangs from; `side_leg` excludes `top` and is empty for
/// bins.
#[derive(Clone, Debug)]
pub struct Component {
    pub kind: ComponentKind,
    pub top: NodeId,
    pub main_leg: Vec<NodeId>,
    pub side_leg: Vec<NodeId>,
}

#[derive(Clone, Debug)]
pub struct ThreePartitionGadget {
    pub gadget: Gadget,
    pub components: Vec<Component>,
}

/// Structural facts of the gadget against their required values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub node_count: usize,
    /// `b (b + 1)`; the node count must stay below it.
    pub node_limit: usize,
    /// Nodes on the longest root-to-sink path.
    pub main_path: usize,
    /// `b (b + 1) / 2`.
    pub main_path_expected: usize,
}

impl StructureReport {
    pub fn ok(&self) -> bool {
        self.node_count < self.node_limit && self.main_path == self.main_path_expected
    }
}

/// Builds the tree: spiders for every missing value and for every long range,
/// and one path per bin, chained so that each component's top hangs below
/// the last node of the previous component's main leg.
pub fn three_partition_to_tree(tp: &ThreePartitionInstance) -> ThreePartitionGadget {
    let m = tp.max_value();
    let z = tp.missing();
    let n = tp.n();
    let mut kinds = Vec::new();
    for (i, &zi) in z.iter().enumerate() {
        kinds.push(ComponentKind::Filler(zi));
        kinds.push(ComponentKind::Long(m + i as u64 + 1));
    }
    for j in 0..n {
        kinds.push(ComponentKind::Bin(j));
        if j + 1 < n {
            kinds.push(ComponentKind::Long(m + (z.len() + j) as u64 + 1));
        }
    }

    let mut b = DigraphBuilder::new();
    let mut components = Vec::with_capacity(kinds.len());
    let mut hook: Option<NodeId> = None;
    for (idx, kind) in kinds.into_iter().enumerate() {
        let top = b.add_node(&format!("c{idx}:top")).unwrap();
        if let Some(h) = hook {
            b.add_arc_ids(h, top).unwrap();
        }
        let (len, main_tag, side) = match kind {
            ComponentKind::Filler(k) | ComponentKind::Long(k) => (k as usize, "a", true),
            ComponentKind::Bin(_) => (tp.bin_size() as usize, "p", false),
        };
        let mut leg = |tag: &str| {
            let mut nodes = vec![top];
            for d in 1..len {
                let v = b.add_node(&format!("c{idx}:{tag}{d}")).unwrap();
                b.add_arc_ids(*nodes.last().unwrap(), v).unwrap();
                nodes.push(v);
            }
            nodes
        };
        let main_leg = leg(main_tag);
        let side_leg = if side {
            leg("b").split_off(1)
        } else {
            Vec::new()
        };
        hook = main_leg.last().copied();
        components.push(Component {
            kind,
            top,
            main_leg,
            side_leg,
        });
    }
    ThreePartitionGadget {
        gadget: Gadget {
            graph: b.build(),
            budget: tp.budget(),
        },
        components,
    }
}

impl ThreePartitionGadget {
    pub fn structure(&self) -> StructureReport {
        let g = &self.gadget.graph;
        let b = self.gadget.budget;
        let main_path = match self.components.first() {
            Some(c) => g.distances_from(c.top).into_iter().flatten().max().unwrap() + 1,
            None => 0,
        };
        StructureReport {
            node_count: g.node_count(),
            node_limit: b * (b + 1),
            main_path,
            main_path_expected: b * (b + 1) / 2,
        }
    }
}

/// Burning assignment read off a partition: each spider top takes the range
/// equal to its leg length, and each bin path is tiled by its triple.
pub fn partition_witness(
    gadget: &ThreePartitionGadget,
    partition: &[[u64; 3]],
) -> Result<BurningAssignment> {
    let mut phi = BurningAssignment::default();
    for c in &gadget.components {
        match c.kind {
            ComponentKind::Filler(k) | ComponentKind::Long(k) => phi.push(k as usize, c.top)?,
            ComponentKind::Bin(j) => {
                let mut t = *partition
                    .get(j)
                    .ok_or_else(|| Error::precondition(format!("no triple for bin {j}")))?;
                t.sort_unstable();
                let mut offset = 0;
                for a in t {
                    let a = a as usize;
                    let at = c.main_leg.get(offset).ok_or_else(|| {
                        Error::precondition(format!("triple {t:?} overruns bin {j}"))
                    })?;
                    phi.push(a, *at)?;
                    offset += a;
                }
            }
        }
    }
    Ok(phi)
}
