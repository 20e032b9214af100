//! Breadth-first distances and eccentricities.

use std::collections::VecDeque;

use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Distance reported for vertices not reachable from the source.
pub const UNREACHABLE: u32 = u32::MAX;

pub fn bfs_distances(g: &Graph, source: usize) -> Result<Vec<u32>> {
    if source >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: source, n: g.n() });
    }
    let mut dist = vec![UNREACHABLE; g.n()];
    let mut queue = VecDeque::with_capacity(g.n());
    bfs_into(g, source, &mut dist, &mut queue);
    Ok(dist)
}

/// BFS reusing caller buffers. `dist` is overwritten.
pub(crate) fn bfs_into(g: &Graph, source: usize, dist: &mut [u32], queue: &mut VecDeque<usize>) {
    dist.fill(UNREACHABLE);
    queue.clear();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        let next = dist[v] + 1;
        for &w in g.neighbors(v) {
            if dist[w] == UNREACHABLE {
                dist[w] = next;
                queue.push_back(w);
            }
        }
    }
}

/// All-pairs distance matrix, one BFS per vertex.
pub fn distance_matrix(g: &Graph) -> Result<Vec<Vec<u32>>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut queue = VecDeque::with_capacity(g.n());
    Ok((0..g.n())
        .map(|s| {
            let mut dist = vec![0; g.n()];
            bfs_into(g, s, &mut dist, &mut queue);
            dist
        })
        .collect())
}

/// Vertex eccentricities of a connected graph together with the summary
/// quantities derived from them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EccentricityProfile {
    pub eccentricities: Vec<u32>,
    pub radius: u32,
    pub diameter: u32,
    pub center: Vec<usize>,
    #[serde(with = "rational::serde_pq")]
    pub average: Rational,
}

impl EccentricityProfile {
    pub fn total(&self) -> u64 {
        self.eccentricities.iter().map(|&e| e as u64).sum()
    }
}

pub fn eccentricities(g: &Graph) -> Result<Vec<u32>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut dist = vec![0; g.n()];
    let mut queue = VecDeque::with_capacity(g.n());
    Ok((0..g.n())
        .map(|s| {
            bfs_into(g, s, &mut dist, &mut queue);
            dist.iter().copied().max().unwrap_or(0)
        })
        .collect())
}

pub fn eccentricity_profile(g: &Graph) -> Result<EccentricityProfile> {
    let eccentricities = eccentricities(g)?;
    let radius = *eccentricities.iter().min().expect("non-empty graph");
    let diameter = *eccentricities.iter().max().expect("non-empty graph");
    let center = (0..g.n()).filter(|&v| eccentricities[v] == radius).collect();
    let total: i64 = eccentricities.iter().map(|&e| e as i64).sum();
    Ok(EccentricityProfile {
        eccentricities,
        radius,
        diameter,
        center,
        average: Rational::new(total, g.n() as i64),
    })
}

/// Exact average eccentricity.
pub fn average_eccentricity(g: &Graph) -> Result<Rational> {
    let total: i64 = eccentricities(g)?.iter().map(|&e| e as i64).sum();
    Ok(Rational::new(total, g.n() as i64))
}
