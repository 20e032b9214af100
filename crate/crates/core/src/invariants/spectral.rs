//! Largest adjacency eigenvalue by power iteration.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_TOLERANCE: f64 = 1e-10;
pub const MAX_ITERATIONS: usize = 1_000_000;

/// Spectral radius `λ(G)` of a connected graph.
///
/// Iterates `A + I` from the all-ones vector; the shift makes the Perron
/// eigenvalue strictly dominant in modulus, bipartite graphs included.
/// Stops once the residual `‖Ax − ρx‖` of the Rayleigh quotient `ρ` drops to
/// `tol`, which for a symmetric matrix puts an eigenvalue within `tol` of `ρ`.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<f64> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidTolerance(tol));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut ax = vec![0.0; n];
    for _ in 0..MAX_ITERATIONS {
        for (v, slot) in ax.iter_mut().enumerate() {
            *slot = g.neighbors(v).iter().map(|&w| x[w]).sum();
        }
        let rho: f64 = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
        let residual = x
            .iter()
            .zip(&ax)
            .map(|(xi, ai)| (ai - rho * xi).powi(2))
            .sum::<f64>()
            .sqrt();
        if residual <= tol {
            return Ok(rho);
        }
        let norm = x
            .iter()
            .zip(&ax)
            .map(|(xi, ai)| (ai + xi).powi(2))
            .sum::<f64>()
            .sqrt();
        for v in 0..n {
            x[v] = (ax[v] + x[v]) / norm;
        }
    }
    Err(Error::NoConvergence { tol, iterations: MAX_ITERATIONS })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn examples() {
        let tol = DEFAULT_TOLERANCE;
        let k4 = Graph::from_predicate(4, |_, _| true);
        assert!((spectral_radius(&k4, tol).unwrap() - 3.0).abs() <= tol);
        assert!((spectral_radius(&star(5), tol).unwrap() - 2.0).abs() <= tol);
        assert!((spectral_radius(&cycle(6), tol).unwrap() - 2.0).abs() <= tol);
    }

    #[test]
    fn path_matches_cosine_formula() {
        for n in 2..30 {
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            let exact = 2.0 * (std::f64::consts::PI / (n as f64 + 1.0)).cos();
            assert!((spectral_radius(&g, 1e-10).unwrap() - exact).abs() < 1e-9, "P_{n}");
        }
    }

    #[test]
    fn errors() {
        let k3 = Graph::from_predicate(3, |_, _| true);
        assert_eq!(spectral_radius(&k3, 0.0), Err(Error::InvalidTolerance(0.0)));
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(spectral_radius(&split, 1e-8), Err(Error::Disconnected));
        assert_eq!(spectral_radius(&Graph::from_edges(1, &[]).unwrap(), 1e-8), Ok(0.0));
    }
}
