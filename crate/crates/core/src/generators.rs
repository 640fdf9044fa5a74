//! Graph families used by the bounds, the solvers and their tests.
//!
//! Random families draw from [`SplitMix64`], fully specified so the same
//! `(parameters, seed)` produce the same graph in any implementation:
//!
//! ```text
//! state  <- state + 0x9E3779B97F4A7C15            (wrapping)
//! z      <- state
//! z      <- (z xor (z >> 30)) * 0xBF58476D1CE4E5B9 (wrapping)
//! z      <- (z xor (z >> 27)) * 0x94D049BB133111EB (wrapping)
//! output <- z xor (z >> 31)
//! ```
//!
//! `below(k)` draws outputs until one is at least `(2^64 - k) mod k` and
//! returns it `mod k` (rejection sampling, no modulo bias).
//!
//! Random graphs label node `i` as `v{i}` (0-based) and declare nodes in
//! index order. Arc sampling, where needed, fills a candidate list in
//! lexicographic `(tail, head)` order and takes the first `m` entries of a
//! partial Fisher-Yates shuffle: for `t` in `0..m`, swap position `t` with
//! `t + below(len - t)`.

use crate::error::{Error, Result};
use crate::graph::{Digraph, DigraphBuilder, NodeId};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Seed(pub u64);

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: Seed) -> Self {
        SplitMix64 { state: seed.0 }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound`; `bound` must be positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "below(0)");
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let x = self.next_u64();
            if x >= threshold {
                return x % bound;
            }
        }
    }

    pub fn below_usize(&mut self, bound: usize) -> usize {
        self.below(bound as u64) as usize
    }
}

fn numbered(prefix: &str, range: impl Iterator<Item = usize>) -> Vec<String> {
    range.map(|i| format!("{prefix}{i}")).collect()
}

fn build(labels: &[String], arcs: &[(usize, usize)]) -> Digraph {
    Digraph::from_arcs(labels, arcs).expect("generator produces a simple digraph")
}

fn need(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::precondition(what.to_string()))
    }
}

/// `v1 -> v2 -> ... -> vn`.
pub fn path(n: usize) -> Digraph {
    let arcs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(&numbered("v", 1..=n), &arcs)
}

/// `v1 -> ... -> vn -> v1`, for `n >= 2`.
pub fn cycle(n: usize) -> Result<Digraph> {
    need(n >= 2, "a cycle needs at least 2 nodes")?;
    let arcs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(build(&numbered("v", 1..=n), &arcs))
}

/// Two copies of `P_n` sharing their source: top `r`, legs `a1..` and `b1..`.
pub fn spider(n: usize) -> Result<Digraph> {
    need(n >= 1, "a spider needs legs of at least 1 node")?;
    let mut labels = vec!["r".to_string()];
    labels.extend(numbered("a", 1..n));
    labels.extend(numbered("b", 1..n));
    let mut arcs = Vec::new();
    for leg in 0..2 {
        let first = 1 + leg * (n - 1);
        for j in 0..n.saturating_sub(1) {
            let tail = if j == 0 { 0 } else { first + j - 1 };
            arcs.push((tail, first + j));
        }
    }
    Ok(build(&labels, &arcs))
}

/// `n - 1` sources `s1..` each with an arc into the sink `t`.
pub fn source_star(n: usize) -> Result<Digraph> {
    need(n >= 2, "a source star needs at least 2 nodes")?;
    let mut labels = numbered("s", 1..n);
    labels.push("t".into());
    let arcs: Vec<_> = (0..n - 1).map(|i| (i, n - 1)).collect();
    Ok(build(&labels, &arcs))
}

/// `n - 2` isolated nodes plus one arc `v{n-1} -> v{n}`.
pub fn isolated_plus_arc(n: usize) -> Result<Digraph> {
    need(n >= 2, "need at least 2 nodes for the arc")?;
    Ok(build(&numbered("v", 1..=n), &[(n - 2, n - 1)]))
}

/// `n` isolated nodes.
pub fn empty_graph(n: usize) -> Digraph {
    build(&numbered("v", 1..=n), &[])
}

fn random_parents(n: usize, rng: &mut SplitMix64) -> Vec<(usize, usize)> {
    (1..n).map(|i| (rng.below_usize(i), i)).collect()
}

fn sample_arcs(
    candidates: &mut [(usize, usize)],
    m: usize,
    rng: &mut SplitMix64,
) -> Vec<(usize, usize)> {
    let len = candidates.len();
    for t in 0..m {
        let j = t + rng.below_usize(len - t);
        candidates.swap(t, j);
    }
    candidates[..m].to_vec()
}

/// Node `i >= 1` takes a parent drawn with `below(i)`, for `i = 1, 2, ...`.
pub fn random_arborescence(n: usize, seed: Seed) -> Result<Digraph> {
    need(n >= 1, "an arborescence needs a root")?;
    let mut rng = SplitMix64::new(seed);
    Ok(build(&numbered("v", 0..n), &random_parents(n, &mut rng)))
}

/// A random arborescence plus `extra_arcs` forward arcs `i -> j` (`i < j`)
/// sampled from the pairs not already in the tree, continuing the same
/// generator stream.
pub fn random_single_source_dag(n: usize, extra_arcs: usize, seed: Seed) -> Result<Digraph> {
    need(n >= 1, "a DAG needs a source")?;
    let mut rng = SplitMix64::new(seed);
    let tree = random_parents(n, &mut rng);
    let mut b = builder_with(n, &tree);
    let mut candidates: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !b.has_arc(NodeId::new(i), NodeId::new(j)))
        .collect();
    need(extra_arcs <= candidates.len(), "too many extra arcs")?;
    for (t, h) in sample_arcs(&mut candidates, extra_arcs, &mut rng) {
        b.add_arc_ids(NodeId::new(t), NodeId::new(h))?;
    }
    Ok(b.build())
}

/// `v0 -> v1 -> ... -> v{n-1} -> v0` plus `extra_arcs` chords sampled from
/// the remaining ordered pairs.
pub fn random_strongly_connected(n: usize, extra_arcs: usize, seed: Seed) -> Result<Digraph> {
    need(n >= 2, "a cycle needs at least 2 nodes")?;
    let mut rng = SplitMix64::new(seed);
    let ring: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let mut b = builder_with(n, &ring);
    let mut candidates: Vec<_> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j && !b.has_arc(NodeId::new(i), NodeId::new(j)))
        .collect();
    need(extra_arcs <= candidates.len(), "too many extra arcs")?;
    for (t, h) in sample_arcs(&mut candidates, extra_arcs, &mut rng) {
        b.add_arc_ids(NodeId::new(t), NodeId::new(h))?;
    }
    Ok(b.build())
}

/// `m` distinct arcs sampled from all `n(n-1)` ordered pairs.
pub fn random_digraph(n: usize, m: usize, seed: Seed) -> Result<Digraph> {
    let mut rng = SplitMix64::new(seed);
    let mut candidates: Vec<_> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j)
        .collect();
    need(m <= candidates.len(), "more arcs than ordered pairs")?;
    let arcs = sample_arcs(&mut candidates, m, &mut rng);
    Ok(build(&numbered("v", 0..n), &arcs))
}

fn builder_with(n: usize, arcs: &[(usize, usize)]) -> DigraphBuilder {
    let mut b = DigraphBuilder::new();
    for label in numbered("v", 0..n) {
        b.add_node(&label).unwrap();
    }
    for &(t, h) in arcs {
        b.add_arc_ids(NodeId::new(t), NodeId::new(h)).unwrap();
    }
    b
}
