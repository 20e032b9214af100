//! Immutable simple undirected graphs.

pub mod canon;
pub mod distance;
pub mod edgelist;
pub mod graph6;

use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are sorted and symmetric; no loops, no parallel edges.
/// Connectivity is computed once at construction.
#[derive(Clone, Debug)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
    connected: bool,
    duplicate_edges: usize,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adjacency == other.adjacency
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.adjacency.hash(state);
    }
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges (in either
    /// orientation) are collapsed and counted in [`Graph::duplicate_edges`].
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut duplicates = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            let before = list.len();
            list.dedup();
            duplicates += before - list.len();
        }
        let mut g = Graph::from_sorted_adjacency(adjacency);
        g.duplicate_edges = duplicates / 2;
        Ok(g)
    }

    /// Internal constructor; lists must already be sorted, deduplicated and symmetric.
    pub(crate) fn from_sorted_adjacency(adjacency: Vec<Vec<usize>>) -> Graph {
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        let connected = components(&adjacency) == 1;
        Graph {
            adjacency,
            edge_count,
            connected,
            duplicate_edges: 0,
        }
    }

    /// Builds from an `n × n` boolean adjacency predicate.
    pub(crate) fn from_predicate(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Graph {
        let mut adjacency = vec![Vec::new(); n];
        for j in 1..n {
            for i in 0..j {
                if adjacent(i, j) {
                    adjacency[i].push(j);
                    adjacency[j].push(i);
                }
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph::from_sorted_adjacency(adjacency)
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.edge_count
    }

    /// Number of repeated edges that were collapsed by [`Graph::from_edges`].
    pub fn duplicate_edges(&self) -> usize {
        self.duplicate_edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn is_tree(&self) -> bool {
        self.connected && self.m() + 1 == self.n()
    }

    pub fn is_unicyclic(&self) -> bool {
        self.connected && self.m() == self.n()
    }

    pub fn is_regular(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    /// Vertices of degree one.
    pub fn pendant_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Bridges as `(u, v)` with `u < v`, sorted. One iterative low-link pass.
    pub fn bridges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        const UNSEEN: usize = usize::MAX;
        let mut disc = vec![UNSEEN; n];
        let mut low = vec![0usize; n];
        let mut timer = 0;
        let mut out = Vec::new();
        // (vertex, parent, next neighbor index)
        let mut stack: Vec<(usize, usize, usize)> = Vec::new();
        for root in 0..n {
            if disc[root] != UNSEEN {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            stack.push((root, UNSEEN, 0));
            while let Some(frame) = stack.last_mut() {
                let (v, parent, idx) = *frame;
                if idx < self.adjacency[v].len() {
                    frame.2 += 1;
                    let w = self.adjacency[v][idx];
                    if w == parent {
                        continue;
                    }
                    if disc[w] == UNSEEN {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, v, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != UNSEEN {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] > disc[parent] {
                            out.push((parent.min(v), parent.max(v)));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let n = self.n();
        assert_eq!(perm.len(), n, "permutation length");
        let mut adjacency = vec![Vec::new(); n];
        for (v, list) in self.adjacency.iter().enumerate() {
            adjacency[perm[v]] = list.iter().map(|&w| perm[w]).collect();
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph::from_sorted_adjacency(adjacency)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut adjacency = vec![Vec::new(); n];
        for (v, slot) in adjacency.iter_mut().enumerate() {
            let mut it = self.adjacency[v].iter().peekable();
            for w in 0..n {
                if it.peek() == Some(&&w) {
                    it.next();
                } else if w != v {
                    slot.push(w);
                }
            }
        }
        Graph::from_sorted_adjacency(adjacency)
    }

    /// Adds edge `uv` (no-op if present).
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        let mut adjacency = self.adjacency.clone();
        if let Err(pos) = adjacency[u].binary_search(&v) {
            adjacency[u].insert(pos, v);
            let pos = adjacency[v].binary_search(&u).unwrap_err();
            adjacency[v].insert(pos, u);
        }
        Ok(Graph::from_sorted_adjacency(adjacency))
    }

    /// Removes edge `uv` (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        let mut adjacency = self.adjacency.clone();
        adjacency[u].retain(|&w| w != v);
        adjacency[v].retain(|&w| w != u);
        Ok(Graph::from_sorted_adjacency(adjacency))
    }

    /// Deletes vertex `v`; vertices above `v` shift down by one.
    pub fn without_vertex(&self, v: usize) -> Result<Graph> {
        let n = self.n();
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if n == 1 {
            return Err(Error::EmptyGraph);
        }
        let shift = |w: usize| if w > v { w - 1 } else { w };
        let adjacency = self
            .adjacency
            .iter()
            .enumerate()
            .filter(|&(u, _)| u != v)
            .map(|(_, list)| list.iter().filter(|&&w| w != v).map(|&w| shift(w)).collect())
            .collect();
        Ok(Graph::from_sorted_adjacency(adjacency))
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for vertex in [u, v] {
            if vertex >= n {
                return Err(Error::VertexOutOfRange { vertex, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }
}

fn components(adjacency: &[Vec<usize>]) -> usize {
    let n = adjacency.len();
    let mut seen = vec![false; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        stack.push(s);
        while let Some(v) = stack.pop() {
            for &w in &adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}
