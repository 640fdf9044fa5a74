//! Independent oracles over adjacency matrices. Nothing here calls the
//! crate's neighbourhood, spread or solver code.

#![allow(dead_code, clippy::needless_range_loop)]

use dirburn::Digraph;

/// Dense copy of the arc relation.
pub struct Matrix {
    pub n: usize,
    adj: Vec<Vec<bool>>,
}

impl Matrix {
    pub fn of(g: &Digraph) -> Self {
        let n = g.node_count();
        let mut adj = vec![vec![false; n]; n];
        for (u, v) in g.arcs() {
            adj[u.index()][v.index()] = true;
        }
        Matrix { n, adj }
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Self {
        let mut adj = vec![vec![false; n]; n];
        for &(u, v) in arcs {
            adj[u][v] = true;
        }
        Matrix { n, adj }
    }

    pub fn arc(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    /// Nodes reachable from `v` in at most `k` arcs, by repeated expansion.
    pub fn ball(&self, v: usize, k: usize) -> Vec<bool> {
        let mut reached = vec![false; self.n];
        reached[v] = true;
        for _ in 0..k {
            let mut next = reached.clone();
            for u in 0..self.n {
                if reached[u] {
                    for w in 0..self.n {
                        next[w] |= self.adj[u][w];
                    }
                }
            }
            reached = next;
        }
        reached
    }

    /// All-pairs distances by Floyd-Warshall.
    pub fn distances(&self) -> Vec<Vec<Option<usize>>> {
        let n = self.n;
        let mut d = vec![vec![None; n]; n];
        for u in 0..n {
            d[u][u] = Some(0);
            for v in 0..n {
                if self.adj[u][v] {
                    d[u][v] = Some(1);
                }
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                        if d[i][j].is_none_or(|c| a + b < c) {
                            d[i][j] = Some(a + b);
                        }
                    }
                }
            }
        }
        d
    }

    /// Every placement of the ranges onto nodes, repeats allowed; true if
    /// some placement covers `target`.
    pub fn coverable(&self, target: &[bool], ranges: &[usize]) -> bool {
        let balls: Vec<Vec<Vec<bool>>> = ranges
            .iter()
            .map(|&r| (0..self.n).map(|v| self.ball(v, r - 1)).collect())
            .collect();
        let mut choice = vec![0; ranges.len()];
        loop {
            let ok = (0..self.n)
                .all(|u| !target[u] || choice.iter().enumerate().any(|(i, &v)| balls[i][v][u]));
            if ok {
                return true;
            }
            let mut i = 0;
            while i < choice.len() {
                choice[i] += 1;
                if choice[i] < self.n {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
            if i == choice.len() {
                return false;
            }
        }
    }

    pub fn burnable(&self, b: usize) -> bool {
        let ranges: Vec<usize> = (1..=b).collect();
        self.coverable(&vec![true; self.n], &ranges)
    }

    pub fn burning_number(&self) -> usize {
        (1..=self.n).find(|&b| self.burnable(b)).unwrap_or(0)
    }

    /// Replays a sequence step by step.
    pub fn simulate(&self, seq: &[usize]) -> Vec<bool> {
        let mut burned = vec![false; self.n];
        for &x in seq {
            let mut next = burned.clone();
            for u in 0..self.n {
                if burned[u] {
                    for w in 0..self.n {
                        next[w] |= self.adj[u][w];
                    }
                }
            }
            next[x] = true;
            burned = next;
        }
        burned
    }
}

pub fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

/// Digraph on `v0..v{n-1}` keeping the arcs whose bit is set, over all
/// ordered pairs `u != v` in row-major order.
pub fn digraph_from_mask(n: usize, mask: &[bool]) -> Digraph {
    let pairs = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)));
    let arcs: Vec<(usize, usize)> = pairs
        .zip(mask.iter())
        .filter(|(_, &keep)| keep)
        .map(|(p, _)| p)
        .collect();
    Digraph::from_arcs(&labels(n), &arcs).unwrap()
}

pub fn to_bools(set: &dirburn::NodeSet, n: usize) -> Vec<bool> {
    (0..n)
        .map(|i| set.contains(dirburn::NodeId::new(i)))
        .collect()
}
