//! Canonical labeling for isomorphism rejection.
//!
//! Colors are refined to an equitable ordered partition, then a search tree
//! individualizes vertices of the first non-singleton cell. Every leaf is a
//! discrete partition, i.e. a labeling, and the certificate is the smallest
//! graph6 string over all leaves. Automorphisms found when two leaves give the
//! same string prune children lying in an already explored orbit.

use super::graph6::encode_bytes;
use super::Graph;

/// Isomorphism certificate: the graph6 bytes of the canonical form.
pub fn canonical_certificate(g: &Graph) -> Vec<u8> {
    Canonizer::new(g).run().0
}

/// `labeling[v]` is the canonical index of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    Canonizer::new(g).run().1
}

pub fn canonical_form(g: &Graph) -> Graph {
    g.relabel(&canonical_labeling(g))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.m() == b.m() && canonical_certificate(a) == canonical_certificate(b)
}

struct Canonizer<'a> {
    g: &'a Graph,
    n: usize,
    matrix: Vec<bool>,
    best: Option<(Vec<u8>, Vec<usize>)>,
    generators: Vec<Vec<usize>>,
}

impl<'a> Canonizer<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        let mut matrix = vec![false; n * n];
        for (u, v) in g.edges() {
            matrix[u * n + v] = true;
            matrix[v * n + u] = true;
        }
        Canonizer { g, n, matrix, best: None, generators: Vec::new() }
    }

    fn run(mut self) -> (Vec<u8>, Vec<usize>) {
        let colors = refine(self.g, vec![0; self.n]);
        let mut path = Vec::new();
        self.search(colors, &mut path);
        self.best.expect("search reaches at least one leaf")
    }

    fn search(&mut self, colors: Vec<usize>, path: &mut Vec<usize>) {
        let cells = cell_count(&colors);
        if cells == self.n {
            self.leaf(colors);
            return;
        }
        let target = target_cell(&colors, cells);
        let members: Vec<usize> = (0..self.n).filter(|&v| colors[v] == target).collect();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &members {
            if !explored.is_empty() {
                let orbits = self.orbits_fixing(path);
                if explored.iter().any(|&e| orbits.same(e, v)) {
                    continue;
                }
            }
            explored.push(v);
            let child = refine(self.g, individualize(&colors, v));
            path.push(v);
            self.search(child, path);
            path.pop();
        }
    }

    fn leaf(&mut self, labeling: Vec<usize>) {
        let n = self.n;
        let mut inverse = vec![0; n];
        for (v, &l) in labeling.iter().enumerate() {
            inverse[l] = v;
        }
        let bytes = encode_bytes(n, |i, j| self.matrix[inverse[i] * n + inverse[j]]);
        match &self.best {
            None => self.best = Some((bytes, labeling)),
            Some((best_bytes, best_labeling)) => match bytes.cmp(best_bytes) {
                std::cmp::Ordering::Less => self.best = Some((bytes, labeling)),
                std::cmp::Ordering::Equal => {
                    let mut best_inverse = vec![0; n];
                    for (v, &l) in best_labeling.iter().enumerate() {
                        best_inverse[l] = v;
                    }
                    let gamma: Vec<usize> = labeling.iter().map(|&l| best_inverse[l]).collect();
                    if gamma.iter().enumerate().any(|(v, &w)| v != w) {
                        self.generators.push(gamma);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }

    /// Orbits of the group generated by the known automorphisms that fix `path` pointwise.
    fn orbits_fixing(&self, path: &[usize]) -> UnionFind {
        let mut uf = UnionFind::new(self.n);
        for gamma in &self.generators {
            if path.iter().all(|&p| gamma[p] == p) {
                for (v, &w) in gamma.iter().enumerate() {
                    uf.union(v, w);
                }
            }
        }
        uf
    }
}

fn cell_count(colors: &[usize]) -> usize {
    colors.iter().copied().max().map_or(0, |c| c + 1)
}

/// First non-singleton cell in color order.
fn target_cell(colors: &[usize], cells: usize) -> usize {
    let mut size = vec![0usize; cells];
    for &c in colors {
        size[c] += 1;
    }
    size.iter().position(|&s| s > 1).expect("partition is not discrete")
}

/// Splits the cell of `v` into `{v}` followed by the rest.
fn individualize(colors: &[usize], v: usize) -> Vec<usize> {
    let keys: Vec<(usize, usize)> = colors
        .iter()
        .enumerate()
        .map(|(u, &c)| (c, (u != v) as usize))
        .collect();
    rank(&keys)
}

/// Iterated color refinement to the coarsest equitable partition finer than
/// `colors`. Each round keys a vertex by its color and the number of
/// neighbors it has in every color class; the ranking of keys is
/// label-independent, so the result commutes with relabeling.
fn refine(g: &Graph, mut colors: Vec<usize>) -> Vec<usize> {
    let n = g.n();
    let mut cells = cell_count(&colors);
    loop {
        let keys: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                let mut key = vec![0usize; cells + 1];
                key[0] = colors[v];
                for &w in g.neighbors(v) {
                    key[colors[w] + 1] += 1;
                }
                key
            })
            .collect();
        let next = rank(&keys);
        let next_cells = cell_count(&next);
        colors = next;
        if next_cells == cells {
            return colors;
        }
        cells = next_cells;
    }
}

/// Dense ranks `0..k` of the distinct keys, in ascending key order.
fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).expect("key present"))
        .collect()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&self, mut v: usize) -> usize {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    fn same(&self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::graph6::decode_graph6;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn star(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn relabeled_path_same_certificate() {
        let p4 = path(4);
        let q = p4.relabel(&[2, 0, 3, 1]);
        assert_eq!(canonical_certificate(&p4), canonical_certificate(&q));
        assert_ne!(canonical_certificate(&p4), canonical_certificate(&star(4)));
    }

    #[test]
    fn certificate_decodes_to_isomorphic_graph() {
        let g = path(6).with_edge(0, 3).unwrap();
        let cert = canonical_certificate(&g);
        let h = decode_graph6(std::str::from_utf8(&cert).unwrap()).unwrap();
        assert_eq!(canonical_certificate(&h), cert);
        assert_eq!(canonical_form(&g), h);
    }

    #[test]
    fn symmetric_graphs_terminate() {
        let k12 = Graph::from_predicate(12, |_, _| true);
        assert_eq!(canonical_certificate(&k12), crate::encode_graph6(&k12).into_bytes());
        let empty = Graph::from_predicate(12, |_, _| false);
        assert_eq!(canonical_certificate(&empty).len(), 1 + 11);
        // Petersen graph: vertex-transitive, refinement does nothing.
        let outer: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let inner: Vec<_> = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5)).collect();
        let spokes: Vec<_> = (0..5).map(|i| (i, i + 5)).collect();
        let edges: Vec<_> = outer.into_iter().chain(inner).chain(spokes).collect();
        let petersen = Graph::from_edges(10, &edges).unwrap();
        let shuffled = petersen.relabel(&[3, 7, 1, 9, 0, 5, 2, 8, 6, 4]);
        assert!(is_isomorphic(&petersen, &shuffled));
    }

    #[test]
    fn distinguishes_cospectral_regular_pair() {
        // C6 versus two disjoint triangles: both 2-regular on six vertices.
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let tt = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!is_isomorphic(&c6, &tt));
    }
}
