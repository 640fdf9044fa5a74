use crate::error::{Error, Result};
use crate::graph::{strip_comment, validate_label, Digraph, DigraphBuilder, NodeId};

/// Simple undirected graph read from an edge list.
///
/// Lines are `u v`, `u -- v` or a bare `u`; `#` starts a comment.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeList {
    nodes: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl EdgeList {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_node(&mut self, label: &str) -> Result<usize> {
        if let Some(i) = self.nodes.iter().position(|l| l == label) {
            return Ok(i);
        }
        validate_label(label)?;
        self.nodes.push(label.to_string());
        Ok(self.nodes.len() - 1)
    }

    pub fn add_edge(&mut self, u: &str, v: &str) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(u.to_string()));
        }
        let (a, b) = (self.add_node(u)?, self.add_node(v)?);
        if self.edges.iter().any(|&e| e == (a, b) || e == (b, a)) {
            return Err(Error::DuplicateArc(u.to_string(), v.to_string()));
        }
        self.edges.push((a, b));
        Ok(())
    }

    /// Undirected path `v1 - v2 - ... - vn`.
    pub fn path(n: usize) -> Self {
        let mut g = EdgeList::new();
        for i in 1..=n {
            g.add_node(&format!("v{i}")).unwrap();
        }
        g.edges = (1..n).map(|i| (i - 1, i)).collect();
        g
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut g = EdgeList::new();
        for (i, raw) in text.lines().enumerate() {
            let at = |e: Error| Error::parse(i + 1, e.to_string());
            let tokens: Vec<&str> = strip_comment(raw).split_whitespace().collect();
            match tokens.as_slice() {
                [] => {}
                [u] => {
                    g.add_node(u).map_err(at)?;
                }
                [u, v] | [u, "--", v] => g.add_edge(u, v).map_err(at)?,
                _ => {
                    return Err(Error::parse(
                        i + 1,
                        format!("expected `u v`, got `{}`", raw.trim()),
                    ))
                }
            }
        }
        Ok(g)
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
}

/// Replaces every undirected edge by two opposite arcs.
pub fn symmetrize(g: &EdgeList) -> Result<Digraph> {
    let mut b = DigraphBuilder::new();
    for l in &g.nodes {
        b.add_node(l)?;
    }
    for &(u, v) in &g.edges {
        let (u, v) = (NodeId::new(u), NodeId::new(v));
        b.add_arc_ids(u, v)?;
        b.add_arc_ids(v, u)?;
    }
    Ok(b.build())
}
