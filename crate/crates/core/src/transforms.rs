//! Monotone transformations of average eccentricity, majorization of
//! integer partitions, and pendant vertices whose removal keeps every
//! eccentricity.

use crate::error::{Error, Result};
use crate::graph::distance::{bfs_distances, eccentricities};
use crate::graph::Graph;

/// A path `w - v₁ - … - v_p` hanging off `w`: every `vᵢ` except the last has
/// degree 2, the last has degree 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PendantPath {
    pub anchor: usize,
    /// From the neighbor of `anchor` out to the leaf.
    pub vertices: Vec<usize>,
}

impl PendantPath {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn leaf(&self) -> usize {
        *self.vertices.last().expect("pendant paths are non-empty")
    }
}

/// All maximal pendant paths anchored at `w`, longest first (ties by the
/// index of the first vertex).
pub fn pendant_paths_at(g: &Graph, w: usize) -> Vec<PendantPath> {
    let mut paths = Vec::new();
    if w >= g.n() {
        return paths;
    }
    for &start in g.neighbors(w) {
        let mut vertices = vec![start];
        let (mut prev, mut cur) = (w, start);
        let found = loop {
            match g.degree(cur) {
                1 => break true,
                2 => {
                    let next = g.neighbors(cur).iter().copied().find(|&x| x != prev).expect("degree 2");
                    if next == w {
                        break false;
                    }
                    vertices.push(next);
                    prev = cur;
                    cur = next;
                }
                _ => break false,
            }
        };
        if found {
            paths.push(PendantPath { anchor: w, vertices });
        }
    }
    paths.sort_by(|a, b| b.len().cmp(&a.len()).then(a.vertices[0].cmp(&b.vertices[0])));
    paths
}

/// Moves the leaf of `shorter` to the end of `longer`, turning `G(p, q)` into
/// `G(p + 1, q − 1)`.
pub fn pi_transform(g: &Graph, w: usize, longer: &PendantPath, shorter: &PendantPath) -> Result<Graph> {
    let fail = |msg: &str| Err(Error::Precondition(msg.to_string()));
    if w >= g.n() {
        return fail("anchor out of range");
    }
    if longer.anchor != w || shorter.anchor != w {
        return fail("both paths must be anchored at w");
    }
    let present = pendant_paths_at(g, w);
    if !present.contains(longer) || !present.contains(shorter) {
        return fail("paths must be maximal pendant paths at w");
    }
    if longer.vertices[0] == shorter.vertices[0] {
        return fail("paths must be disjoint");
    }
    if longer.len() < shorter.len() {
        return fail("longer path must have length p >= q");
    }
    let outside = g
        .neighbors(w)
        .iter()
        .any(|&x| x != longer.vertices[0] && x != shorter.vertices[0]);
    if !outside {
        return fail("residual graph at w is trivial (w has no neighbor outside the two paths)");
    }
    let moved = shorter.leaf();
    let parent = if shorter.len() == 1 { w } else { shorter.vertices[shorter.len() - 2] };
    g.without_edge(parent, moved)?.with_edge(longer.leaf(), moved)
}

/// Contracts the bridge `uv` into `u` and hangs `v` back on `u` as a pendant.
pub fn sigma_transform(g: &Graph, bridge: (usize, usize)) -> Result<Graph> {
    let (u, v) = bridge;
    if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
        return Err(Error::Precondition(format!("({u}, {v}) is not an edge")));
    }
    let key = (u.min(v), u.max(v));
    if !g.bridges().contains(&key) {
        return Err(Error::Precondition(format!("({u}, {v}) is not a bridge")));
    }
    let cut = g.without_edge(u, v)?;
    let side = bfs_distances(&cut, u)?;
    let u_side = side.iter().filter(|&&d| d != crate::UNREACHABLE).count();
    if u_side < 2 || g.n() - u_side < 2 {
        return Err(Error::Precondition("trivial component: both sides of the bridge need two vertices".into()));
    }
    let mut edges: Vec<(usize, usize)> = g.edges().filter(|&(a, b)| a != v && b != v).collect();
    edges.extend(g.neighbors(v).iter().filter(|&&x| x != u).map(|&x| (u, x)));
    edges.push((u, v));
    Graph::from_edges(g.n(), &edges)
}

/// Two nonincreasing positive integer arrays of equal length and sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerPartitionPair {
    x: Vec<usize>,
    y: Vec<usize>,
}

impl IntegerPartitionPair {
    pub fn new(x: Vec<usize>, y: Vec<usize>) -> Result<Self> {
        for (name, a) in [("x", &x), ("y", &y)] {
            if a.is_empty() || a.contains(&0) {
                return Err(Error::InvalidPartition(format!("{name} must be non-empty with positive parts")));
            }
            if a.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidPartition(format!("{name} must be nonincreasing")));
            }
        }
        if x.len() != y.len() {
            return Err(Error::InvalidPartition("x and y must have the same length".into()));
        }
        if x.iter().sum::<usize>() != y.iter().sum::<usize>() {
            return Err(Error::InvalidPartition("x and y must have the same sum".into()));
        }
        Ok(IntegerPartitionPair { x, y })
    }

    pub fn x(&self) -> &[usize] {
        &self.x
    }

    pub fn y(&self) -> &[usize] {
        &self.y
    }

    /// `x ≻ y`: every prefix sum of `x` is at least the matching prefix sum of `y`.
    pub fn majorizes(&self) -> bool {
        let (mut sx, mut sy) = (0, 0);
        self.x.iter().zip(&self.y).all(|(a, b)| {
            sx += a;
            sy += b;
            sx >= sy
        })
    }
}

/// A pendant vertex `v` of the tree `t` such that `T − v` keeps the
/// eccentricity of every other vertex.
///
/// Each pendant points at its farthest vertex when that vertex is unique; the
/// smallest pendant nobody points at is returned.
pub fn removable_pendant(t: &Graph) -> Result<usize> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let pendants = t.pendant_vertices();
    if t.n() <= 2 || t.max_degree() <= 2 {
        return Err(Error::PathExcluded);
    }
    let mut targeted = vec![false; t.n()];
    for &p in &pendants {
        let dist = bfs_distances(t, p)?;
        let far = *dist.iter().max().expect("non-empty");
        let mut farthest = (0..t.n()).filter(|&x| dist[x] == far);
        if let (Some(q), None) = (farthest.next(), farthest.next()) {
            targeted[q] = true;
        }
    }
    if let Some(&p) = pendants.iter().find(|&&p| !targeted[p]) {
        return Ok(p);
    }
    let before = eccentricities(t)?;
    pendants
        .into_iter()
        .find(|&p| preserves_eccentricities(t, &before, p))
        .ok_or_else(|| Error::Precondition("no pendant vertex preserves all eccentricities".into()))
}

/// Whether deleting `v` leaves every other eccentricity unchanged.
pub fn preserves_eccentricities(g: &Graph, before: &[u32], v: usize) -> bool {
    let Ok(smaller) = g.without_vertex(v) else { return false };
    let Ok(after) = eccentricities(&smaller) else { return false };
    let kept = before.iter().enumerate().filter(|&(u, _)| u != v).map(|(_, &e)| e);
    kept.eq(after.iter().copied())
}
