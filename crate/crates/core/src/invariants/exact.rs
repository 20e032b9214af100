//! Exact solvers for the NP-hard invariants: independence, clique,
//! domination and chromatic numbers. All branch and bound, all exact.

use super::bits::Bits;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn neighborhoods(g: &Graph) -> Vec<Bits> {
    (0..g.n())
        .map(|v| {
            let mut b = Bits::empty(g.n());
            for &w in g.neighbors(v) {
                b.insert(w);
            }
            b
        })
        .collect()
}

/// Maximum size of an independent set.
///
/// Branches on the vertex of largest residual degree (take it or drop it);
/// vertices of residual degree at most one are taken without branching.
/// A greedy clique cover of the candidates bounds what remains.
pub fn independence_number(g: &Graph) -> usize {
    let adj = neighborhoods(g);
    let mut best = 0;
    mis(&adj, Bits::full(g.n()), 0, &mut best);
    best
}

fn mis(adj: &[Bits], mut cand: Bits, mut size: usize, best: &mut usize) {
    loop {
        if cand.is_empty() {
            *best = (*best).max(size);
            return;
        }
        let low = cand.iter().find(|&v| adj[v].intersection_len(&cand) <= 1);
        match low {
            Some(v) => {
                cand = cand.difference(&adj[v]);
                cand.remove(v);
                size += 1;
            }
            None => break,
        }
    }
    if size + clique_cover(adj, &cand) <= *best {
        return;
    }
    let v = cand
        .iter()
        .max_by_key(|&v| (adj[v].intersection_len(&cand), std::cmp::Reverse(v)))
        .expect("non-empty");
    let mut with = cand.difference(&adj[v]);
    with.remove(v);
    mis(adj, with, size + 1, best);
    let mut without = cand;
    without.remove(v);
    mis(adj, without, size, best);
}

/// Number of cliques in a first-fit clique cover of `cand`.
fn clique_cover(adj: &[Bits], cand: &Bits) -> usize {
    let mut cliques: Vec<Bits> = Vec::new();
    for v in cand.iter() {
        match cliques.iter_mut().find(|c| c.intersection_len(&adj[v]) == c.len()) {
            Some(c) => c.insert(v),
            None => {
                let mut c = Bits::empty(adj.len());
                c.insert(v);
                cliques.push(c);
            }
        }
    }
    cliques.len()
}

/// Size of a largest clique, as the independence number of the complement.
pub fn clique_number(g: &Graph) -> usize {
    independence_number(&g.complement())
}

/// Size of a smallest dominating set. Set cover over closed neighborhoods:
/// pick the undominated vertex with the fewest dominators and branch over them.
pub fn domination_number(g: &Graph) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let closed: Vec<Bits> = neighborhoods(g)
        .into_iter()
        .enumerate()
        .map(|(v, mut b)| {
            b.insert(v);
            b
        })
        .collect();
    let mut best = greedy_domination(&closed, n);
    dominate(&closed, Bits::full(n), 0, &mut best);
    Ok(best)
}

fn greedy_domination(closed: &[Bits], n: usize) -> usize {
    let mut undominated = Bits::full(n);
    let mut count = 0;
    while !undominated.is_empty() {
        let w = (0..n)
            .max_by_key(|&w| closed[w].intersection_len(&undominated))
            .expect("non-empty");
        undominated = undominated.difference(&closed[w]);
        count += 1;
    }
    count
}

fn dominate(closed: &[Bits], undominated: Bits, chosen: usize, best: &mut usize) {
    if undominated.is_empty() {
        *best = (*best).min(chosen);
        return;
    }
    let remaining = undominated.len();
    let widest = closed
        .iter()
        .map(|c| c.intersection_len(&undominated))
        .max()
        .unwrap_or(1)
        .max(1);
    if chosen + remaining.div_ceil(widest) >= *best {
        return;
    }
    let u = undominated
        .iter()
        .min_by_key(|&u| closed[u].len())
        .expect("non-empty");
    let mut options: Vec<usize> = closed[u].iter().collect();
    options.sort_by_key(|&w| std::cmp::Reverse(closed[w].intersection_len(&undominated)));
    for w in options {
        dominate(closed, undominated.difference(&closed[w]), chosen + 1, best);
    }
}

/// Chromatic number: smallest `k ≥ ω` for which saturation-ordered
/// backtracking finds a proper `k`-coloring.
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.n();
    if g.m() == 0 {
        return 1;
    }
    let upper = dsatur_greedy(g);
    let lower = clique_number(g).max(1);
    for k in lower..upper {
        let mut colors = vec![usize::MAX; n];
        if color_with(g, k, &mut colors, 0) {
            return k;
        }
    }
    upper
}

fn saturation(g: &Graph, colors: &[usize], v: usize) -> usize {
    let mut seen: Vec<usize> = g
        .neighbors(v)
        .iter()
        .map(|&w| colors[w])
        .filter(|&c| c != usize::MAX)
        .collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

fn next_vertex(g: &Graph, colors: &[usize]) -> Option<usize> {
    (0..g.n())
        .filter(|&v| colors[v] == usize::MAX)
        .max_by_key(|&v| (saturation(g, colors, v), g.degree(v), std::cmp::Reverse(v)))
}

fn dsatur_greedy(g: &Graph) -> usize {
    let mut colors = vec![usize::MAX; g.n()];
    while let Some(v) = next_vertex(g, &colors) {
        let c = (0..)
            .find(|&c| g.neighbors(v).iter().all(|&w| colors[w] != c))
            .expect("a free color exists");
        colors[v] = c;
    }
    colors.iter().max().map_or(0, |&c| c + 1)
}

fn color_with(g: &Graph, k: usize, colors: &mut [usize], used: usize) -> bool {
    let Some(v) = next_vertex(g, colors) else {
        return true;
    };
    // A fresh color is interchangeable with any other fresh color.
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).iter().all(|&w| colors[w] != c) {
            colors[v] = c;
            if color_with(g, k, colors, used.max(c + 1)) {
                return true;
            }
            colors[v] = usize::MAX;
        }
    }
    false
}
