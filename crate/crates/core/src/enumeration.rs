//! Isomorph-free generation of trees, connected graphs, unicyclic graphs and
//! starlike trees, plus ingestion of external graph6 catalogs.

use std::collections::BTreeSet;
use std::fmt;
use std::io::BufRead;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::canon::canonical_certificate;
use crate::graph::graph6::decode_graph6;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphClass {
    Trees,
    ConnectedGraphs,
    Unicyclic,
    Starlike,
}

impl GraphClass {
    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Trees => "trees",
            GraphClass::ConnectedGraphs => "connected_graphs",
            GraphClass::Unicyclic => "unicyclic",
            GraphClass::Starlike => "starlike",
        }
    }

    /// Smallest order for which the class is non-empty.
    pub fn min_order(self) -> usize {
        match self {
            GraphClass::Trees | GraphClass::ConnectedGraphs => 1,
            GraphClass::Unicyclic => 3,
            GraphClass::Starlike => 4,
        }
    }

    pub fn contains(self, g: &Graph) -> bool {
        match self {
            GraphClass::Trees => g.is_tree(),
            GraphClass::ConnectedGraphs => g.is_connected(),
            GraphClass::Unicyclic => g.is_unicyclic(),
            GraphClass::Starlike => g.is_tree() && g.degrees().iter().filter(|&&d| d >= 3).count() == 1,
        }
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "trees" | "tree" => Ok(GraphClass::Trees),
            "connected_graphs" | "graphs" | "connected" => Ok(GraphClass::ConnectedGraphs),
            "unicyclic" => Ok(GraphClass::Unicyclic),
            "starlike" => Ok(GraphClass::Starlike),
            other => Err(Error::Infeasible(format!("unknown graph class {other:?}"))),
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Largest order each class may be enumerated at.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationCaps {
    pub trees: usize,
    pub connected_graphs: usize,
    pub unicyclic: usize,
    pub starlike: usize,
}

impl Default for EnumerationCaps {
    fn default() -> Self {
        EnumerationCaps { trees: 18, connected_graphs: 9, unicyclic: 11, starlike: 20 }
    }
}

impl EnumerationCaps {
    /// Trees up to 20 and graphs up to 10 vertices. Graphs at n = 10 take hours.
    pub fn extended() -> Self {
        EnumerationCaps { trees: 20, connected_graphs: 10, unicyclic: 11, starlike: 20 }
    }

    pub fn cap(&self, class: GraphClass) -> usize {
        match class {
            GraphClass::Trees => self.trees,
            GraphClass::ConnectedGraphs => self.connected_graphs,
            GraphClass::Unicyclic => self.unicyclic,
            GraphClass::Starlike => self.starlike,
        }
    }

    pub fn check(&self, class: GraphClass, n: usize) -> Result<()> {
        let cap = self.cap(class);
        if n > cap {
            return Err(Error::OverCap { class: class.name().into(), n, cap });
        }
        if n < class.min_order() {
            return Err(Error::Infeasible(format!("{class} need n >= {}", class.min_order())));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationQuery {
    pub class: GraphClass,
    pub n: usize,
    pub max_degree: Option<usize>,
    /// Keep only graphs with maximum degree at most 4.
    pub chemical: bool,
    pub caps: EnumerationCaps,
}

impl EnumerationQuery {
    pub fn new(class: GraphClass, n: usize) -> Self {
        EnumerationQuery { class, n, max_degree: None, chemical: false, caps: EnumerationCaps::default() }
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        let d = g.max_degree();
        self.max_degree.is_none_or(|b| d <= b) && (!self.chemical || d <= 4)
    }

    /// All graphs of the class at order `n` passing the filters, in the
    /// deterministic enumeration order.
    pub fn run(&self) -> Result<Vec<Graph>> {
        self.caps.check(self.class, self.n)?;
        let all = match self.class {
            GraphClass::Trees => enumerate_trees_capped(self.n, &self.caps)?.collect(),
            GraphClass::ConnectedGraphs => enumerate_connected_graphs_capped(self.n, &self.caps)?,
            GraphClass::Unicyclic => enumerate_unicyclic_capped(self.n, &self.caps)?,
            GraphClass::Starlike => (3..self.n)
                .flat_map(|k| starlike_partitions(self.n - 1, k))
                .map(|parts| starlike_tree(&parts))
                .collect(),
        };
        Ok(all.into_iter().filter(|g| self.accepts(g)).collect())
    }
}

/// Free trees on `n` vertices, one per isomorphism class, in level-sequence
/// order (path first).
pub fn enumerate_trees(n: usize) -> Result<TreeIter> {
    enumerate_trees_capped(n, &EnumerationCaps::default())
}

pub fn enumerate_trees_capped(n: usize, caps: &EnumerationCaps) -> Result<TreeIter> {
    caps.check(GraphClass::Trees, n)?;
    let layout = if n == 1 {
        None
    } else {
        Some((0..=n / 2).chain(1..n.div_ceil(2)).collect())
    };
    Ok(TreeIter { n, layout, single_pending: n == 1 })
}

/// Successor generation over canonical level sequences of free trees
/// (Wright, Richmond, Odlyzko and McKay).
pub struct TreeIter {
    n: usize,
    layout: Option<Vec<usize>>,
    single_pending: bool,
}

impl Iterator for TreeIter {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.single_pending {
            self.single_pending = false;
            return Graph::from_edges(self.n, &[]).ok();
        }
        let layout = next_free(self.layout.take()?);
        let g = layout_to_graph(&layout);
        self.layout = next_rooted(&layout, None);
        Some(g)
    }
}

fn next_rooted(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut result = pred.to_vec();
    for i in p..result.len() {
        result[i] = result[i - p + q];
    }
    Some(result)
}

fn split(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .filter(|&(_, &l)| l == 1)
        .nth(1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|&l| l - 1).collect();
    let rest = std::iter::once(0).chain(layout[m..].iter().copied()).collect();
    (left, rest)
}

fn next_free(candidate: Vec<usize>) -> Vec<usize> {
    let (left, rest) = split(&candidate);
    let lh = *left.iter().max().expect("left subtree non-empty");
    let rh = *rest.iter().max().expect("rest non-empty");
    let valid = rh > lh || (rh == lh && (left.len(), &left) <= (rest.len(), &rest));
    if valid {
        return candidate;
    }
    let p = left.len();
    let mut next = next_rooted(&candidate, Some(p)).expect("p > 0");
    if candidate[p] > 2 {
        let (new_left, _) = split(&next);
        let h = *new_left.iter().max().expect("non-empty");
        let len = next.len();
        for (slot, value) in next[len - (h + 1)..].iter_mut().zip(1..) {
            *slot = value;
        }
    }
    next
}

fn layout_to_graph(layout: &[usize]) -> Graph {
    let mut edges = Vec::with_capacity(layout.len() - 1);
    let mut stack: Vec<usize> = Vec::new();
    for (i, &level) in layout.iter().enumerate() {
        while let Some(&j) = stack.last() {
            if layout[j] >= level {
                stack.pop();
            } else {
                edges.push((j, i));
                break;
            }
        }
        stack.push(i);
    }
    Graph::from_edges(layout.len(), &edges).expect("level sequence is a tree")
}

/// Connected graphs on `n` vertices, one per isomorphism class, each in
/// canonical form, ordered by edge count then certificate.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    enumerate_connected_graphs_capped(n, &EnumerationCaps::default())
}

pub fn enumerate_connected_graphs_capped(n: usize, caps: &EnumerationCaps) -> Result<Vec<Graph>> {
    caps.check(GraphClass::ConnectedGraphs, n)?;
    let tree_caps = EnumerationCaps { trees: caps.trees.max(n), ..*caps };
    let mut level: BTreeSet<Vec<u8>> =
        enumerate_trees_capped(n, &tree_caps)?.map(|t| canonical_certificate(&t)).collect();
    let mut out = Vec::new();
    loop {
        out.extend(level.iter().map(|c| decode_certificate(c)));
        let next = augment(&level);
        if next.is_empty() {
            break;
        }
        level = next;
    }
    Ok(out)
}

fn decode_certificate(cert: &[u8]) -> Graph {
    decode_graph6(std::str::from_utf8(cert).expect("ascii")).expect("certificates are valid graph6")
}

/// Every graph obtained by adding one edge to a member of `level`, deduplicated.
fn augment(level: &BTreeSet<Vec<u8>>) -> BTreeSet<Vec<u8>> {
    let certs: Vec<&Vec<u8>> = level.iter().collect();
    certs
        .par_iter()
        .map(|cert| {
            let g = decode_certificate(cert);
            let mut found = BTreeSet::new();
            for j in 1..g.n() {
                for i in 0..j {
                    if !g.has_edge(i, j) {
                        found.insert(canonical_certificate(&g.with_edge(i, j).expect("valid")));
                    }
                }
            }
            found
        })
        .reduce(BTreeSet::new, |mut a, mut b| {
            if a.len() < b.len() {
                std::mem::swap(&mut a, &mut b);
            }
            a.extend(b);
            a
        })
}

/// Connected unicyclic graphs on `n` vertices, one per isomorphism class.
pub fn enumerate_unicyclic(n: usize) -> Result<Vec<Graph>> {
    enumerate_unicyclic_capped(n, &EnumerationCaps::default())
}

pub fn enumerate_unicyclic_capped(n: usize, caps: &EnumerationCaps) -> Result<Vec<Graph>> {
    caps.check(GraphClass::Unicyclic, n)?;
    let tree_caps = EnumerationCaps { trees: caps.trees.max(n), ..*caps };
    let trees: BTreeSet<Vec<u8>> =
        enumerate_trees_capped(n, &tree_caps)?.map(|t| canonical_certificate(&t)).collect();
    Ok(augment(&trees).iter().map(|c| decode_certificate(c)).collect())
}

/// Partitions of `total` into exactly `k` positive parts, each nonincreasing,
/// in decreasing lexicographic order.
pub fn starlike_partitions(total: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(total: usize, k: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            if total == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        if total < k {
            return;
        }
        let hi = max.min(total - (k - 1));
        let lo = total.div_ceil(k);
        for first in (lo..=hi).rev() {
            prefix.push(first);
            rec(total - first, k - 1, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k > 0 {
        rec(total, k, total, &mut Vec::new(), &mut out);
    }
    out
}

fn starlike_tree(parts: &[usize]) -> Graph {
    crate::families::make(&crate::families::FamilySpec::starlike(parts)).expect("valid parts")
}

/// `S(n₁,…,n_k)` for every partition of `n − 1` into exactly `k ≥ 3` parts.
pub fn enumerate_starlike(n: usize, k: usize) -> Result<Vec<Graph>> {
    if k < 3 {
        return Err(Error::Infeasible(format!("starlike trees need k >= 3 arms, got {k}")));
    }
    if n < k + 1 {
        return Err(Error::Infeasible(format!("n - 1 = {} cannot be split into {k} arms", n.saturating_sub(1))));
    }
    EnumerationCaps::default().check(GraphClass::Starlike, n)?;
    Ok(starlike_partitions(n - 1, k).iter().map(|p| starlike_tree(p)).collect())
}

/// Lazily decodes line-oriented graph6 text. Blank lines and an optional
/// `>>graph6<<` prefix are skipped; decode failures carry 1-based line numbers.
pub fn read_graph6_stream<R: BufRead>(source: R) -> impl Iterator<Item = Result<Graph>> {
    source.lines().enumerate().filter_map(|(i, line)| {
        let line = match line {
            Ok(l) => l,
            Err(e) => return Some(Err(Error::from(e))),
        };
        let text = line.trim_end_matches(['\r', '\n']);
        let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
        if text.trim().is_empty() {
            return None;
        }
        Some(decode_graph6(text.trim()).map_err(|e| Error::Line { line: i + 1, message: e.to_string() }))
    })
}
