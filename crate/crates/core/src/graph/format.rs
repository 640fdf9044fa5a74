//! Line-oriented graph text format.
//!
//! ```text
//! # comment
//! a -> b
//! isolated
//! ```
//!
//! `#` starts a comment, blank lines are ignored. A line is either a bare
//! label (declares a node) or `TAIL -> HEAD` (declares an arc and both
//! endpoints).

use std::fmt::Write;

use super::{Digraph, DigraphBuilder, NodeId};
use crate::error::{Error, Result};

/// Strips a trailing `#` comment.
pub(crate) fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut b = DigraphBuilder::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let tokens: Vec<&str> = strip_comment(raw).split_whitespace().collect();
        let at = |e: Error| Error::parse(line_no, e.to_string());
        match tokens.as_slice() {
            [] => {}
            [label] if *label != "->" => {
                b.add_node(label).map_err(at)?;
            }
            [tail, "->", head] => b.add_arc(tail, head).map_err(at)?,
            _ => {
                return Err(Error::parse(
                    line_no,
                    format!("expected `LABEL` or `LABEL -> LABEL`, got `{}`", raw.trim()),
                ))
            }
        }
    }
    Ok(b.build())
}

/// Arcs in index order. A bare `LABEL` line is written only where a node
/// would otherwise first appear out of index order, so parsing the output
/// reproduces the same ids.
pub fn serialize_digraph(d: &Digraph) -> String {
    let mut out = String::new();
    let mut seen = 0;
    let declare = |out: &mut String, seen: &mut usize| {
        writeln!(out, "{}", d.label(NodeId::new(*seen))).unwrap();
        *seen += 1;
    };
    for (t, h) in d.arcs() {
        let (t, h) = (t.index(), h.index());
        // ids the parser would hand out for this line, given `seen`
        let in_order = |seen: usize| match (t < seen, h < seen) {
            (true, true) => true,
            (true, false) => h == seen,
            (false, true) => t == seen,
            (false, false) => t == seen && h == seen + 1,
        };
        while !in_order(seen) {
            declare(&mut out, &mut seen);
        }
        seen = seen.max(t.max(h) + 1);
        writeln!(
            out,
            "{} -> {}",
            d.label(NodeId::new(t)),
            d.label(NodeId::new(h))
        )
        .unwrap();
    }
    while seen < d.node_count() {
        declare(&mut out, &mut seen);
    }
    out
}

/// Reads a `# budget: <int>` sidecar comment, as written for gadgets.
pub fn parse_budget_comment(text: &str) -> Option<usize> {
    text.lines().find_map(|line| {
        let rest = line.trim().strip_prefix('#')?.trim();
        rest.strip_prefix("budget:")?.trim().parse().ok()
    })
}
