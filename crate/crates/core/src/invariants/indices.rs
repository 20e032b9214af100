//! Degree and distance based topological indices.

use crate::error::{Error, Result};
use crate::graph::distance::{distance_matrix, eccentricities};
use crate::graph::Graph;

/// `ξ^c(G) = Σ deg(v)·ε(v)`.
pub fn eccentric_connectivity_index(g: &Graph) -> Result<u64> {
    let ecc = eccentricities(g)?;
    Ok((0..g.n()).map(|v| g.degree(v) as u64 * ecc[v] as u64).sum())
}

/// Sum of distances over unordered vertex pairs.
pub fn wiener_index(g: &Graph) -> Result<u64> {
    let d = distance_matrix(g)?;
    Ok((0..g.n())
        .flat_map(|u| ((u + 1)..g.n()).map(move |v| (u, v)))
        .map(|(u, v)| d[u][v] as u64)
        .sum())
}

pub const RANDIC_EXPONENT: f64 = -0.5;

/// General Randić index `Σ_{uv ∈ E} (deg u · deg v)^exponent`; the classical
/// index uses `exponent = -1/2`.
pub fn randic_index(g: &Graph, exponent: f64) -> Result<f64> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    let terms: Vec<f64> = g
        .edges()
        .map(|(u, v)| ((g.degree(u) * g.degree(v)) as f64).powf(exponent))
        .collect();
    Ok(pairwise_sum(&terms))
}

pub(crate) fn pairwise_sum(xs: &[f64]) -> f64 {
    if xs.len() <= 8 {
        xs.iter().sum()
    } else {
        let (a, b) = xs.split_at(xs.len() / 2);
        pairwise_sum(a) + pairwise_sum(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn star(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_predicate(n, |_, _| true)
    }

    #[test]
    fn eccentric_connectivity_examples() {
        assert_eq!(eccentric_connectivity_index(&complete(4)).unwrap(), 12);
        assert_eq!(eccentric_connectivity_index(&cycle(6)).unwrap(), 36);
        assert_eq!(eccentric_connectivity_index(&path(4)).unwrap(), 14);
    }

    #[test]
    fn wiener_examples() {
        for n in 2..8 {
            assert_eq!(wiener_index(&complete(n)).unwrap(), (n * (n - 1) / 2) as u64);
        }
        assert_eq!(wiener_index(&path(4)).unwrap(), 10);
        assert_eq!(wiener_index(&star(5)).unwrap(), 16);
    }

    #[test]
    fn randic_examples() {
        let p4 = randic_index(&path(4), RANDIC_EXPONENT).unwrap();
        assert!((p4 - (1.0 + 2.0 * 2f64.sqrt()) / 2.0).abs() < 1e-12);
        assert!((randic_index(&star(5), RANDIC_EXPONENT).unwrap() - 2.0).abs() < 1e-12);
        assert!((randic_index(&complete(6), RANDIC_EXPONENT).unwrap() - 3.0).abs() < 1e-12);
        // exponent 1 gives the second Zagreb index
        assert_eq!(randic_index(&path(4), 1.0).unwrap(), 2.0 + 4.0 + 2.0);
    }

    #[test]
    fn randic_isolated_vertex() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(randic_index(&g, RANDIC_EXPONENT), Err(Error::IsolatedVertex(2)));
    }

    #[test]
    fn disconnected_distance_indices() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(wiener_index(&g), Err(Error::Disconnected));
        assert_eq!(eccentric_connectivity_index(&g), Err(Error::Disconnected));
    }
}
