//! Plain edge-list text: a header line `n m`, then `m` lines `u v`.

use super::Graph;
use crate::error::{Error, Result};

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, header) = lines.next().ok_or_else(|| Error::EdgeList("missing header".into()))?;
    let (n, m) = pair(header).ok_or_else(|| Error::EdgeList(format!("bad header {header:?}")))?;
    let mut edges = Vec::with_capacity(m);
    for (idx, line) in lines {
        let e = pair(line).ok_or_else(|| Error::Line {
            line: idx + 1,
            message: format!("expected \"u v\", got {line:?}"),
        })?;
        edges.push(e);
    }
    if edges.len() != m {
        return Err(Error::EdgeList(format!("header promises {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, &edges)
}

fn pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}
