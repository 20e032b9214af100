//! Named graph families, their constructors and closed forms.
//!
//! Vertex numbering per kind (fixed so graph6 output is reproducible):
//!
//! | kind | params | numbering |
//! |---|---|---|
//! | `path` | `n` | `0-1-…-(n-1)` |
//! | `cycle` | `n` | path plus `(n-1, 0)` |
//! | `star` | `n` | center `0`, leaves `1..n` |
//! | `complete` | `n` | all pairs |
//! | `complete_bipartite` | `a, b` | sides `0..a` and `a..a+b` |
//! | `hypercube` | `d` | bit strings `0..2^d`, edges flip one bit |
//! | `broom` | `n, Δ` | center `0`, star leaves `1..Δ`, path `0-Δ-(Δ+1)-…-(n-1)` |
//! | `starlike` | `n₁,…,n_k` | center `0`, then each arm outward in order |
//! | `balanced_starlike` | `n, k` | `starlike` with arms differing by at most one |
//! | `double_broom` | `d, a, b` | spine `0..=d`, `a` extra leaves on `1`, `b` on `d-1` |
//! | `lollipop` | `n, k` | clique `0..k`, path `0-k-(k+1)-…-(n-1)` |
//! | `star_plus_edge` | `n` | `star` plus edge `(1, 2)` |
//! | `dn_tree` | `n` | path `0..n-1`, pendant `n-1` on vertex `2` |
//! | `complete_minus_matching` | `n` | `K_n` minus `(0,1),(2,3),…`; odd `n` also minus `(n-1, 0)` |
//! | `pc_graph` | `k, δ` | block-major; block `i` starts with `v_i, u_i` |
//! | `dumbbell` | `n, k₁, k₂, ℓ` | clique `0..k₁`, path of `ℓ` vertices, clique; attached at `0` and at the first vertex of the second clique |

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{floor_div, int, ratio, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    Path,
    Cycle,
    Star,
    Complete,
    CompleteBipartite,
    Hypercube,
    Broom,
    Starlike,
    BalancedStarlike,
    DoubleBroom,
    Lollipop,
    StarPlusEdge,
    DnTree,
    CompleteMinusMatching,
    PcGraph,
    Dumbbell,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 16] = [
        FamilyKind::Path,
        FamilyKind::Cycle,
        FamilyKind::Star,
        FamilyKind::Complete,
        FamilyKind::CompleteBipartite,
        FamilyKind::Hypercube,
        FamilyKind::Broom,
        FamilyKind::Starlike,
        FamilyKind::BalancedStarlike,
        FamilyKind::DoubleBroom,
        FamilyKind::Lollipop,
        FamilyKind::StarPlusEdge,
        FamilyKind::DnTree,
        FamilyKind::CompleteMinusMatching,
        FamilyKind::PcGraph,
        FamilyKind::Dumbbell,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Star => "star",
            FamilyKind::Complete => "complete",
            FamilyKind::CompleteBipartite => "complete_bipartite",
            FamilyKind::Hypercube => "hypercube",
            FamilyKind::Broom => "broom",
            FamilyKind::Starlike => "starlike",
            FamilyKind::BalancedStarlike => "balanced_starlike",
            FamilyKind::DoubleBroom => "double_broom",
            FamilyKind::Lollipop => "lollipop",
            FamilyKind::StarPlusEdge => "star_plus_edge",
            FamilyKind::DnTree => "dn_tree",
            FamilyKind::CompleteMinusMatching => "complete_minus_matching",
            FamilyKind::PcGraph => "pc_graph",
            FamilyKind::Dumbbell => "dumbbell",
        }
    }

    /// Parameter names in positional order, as used by the text grammar.
    /// `starlike` takes a single comma-separated `parts` list.
    pub fn keys(self) -> &'static [&'static str] {
        match self {
            FamilyKind::Path
            | FamilyKind::Cycle
            | FamilyKind::Star
            | FamilyKind::Complete
            | FamilyKind::StarPlusEdge
            | FamilyKind::DnTree
            | FamilyKind::CompleteMinusMatching => &["n"],
            FamilyKind::CompleteBipartite => &["n", "m"],
            FamilyKind::Hypercube => &["d"],
            FamilyKind::Broom => &["n", "delta"],
            FamilyKind::Starlike => &["parts"],
            FamilyKind::BalancedStarlike => &["n", "k"],
            FamilyKind::DoubleBroom => &["d", "a", "b"],
            FamilyKind::Lollipop => &["n", "k"],
            FamilyKind::PcGraph => &["k", "delta"],
            FamilyKind::Dumbbell => &["n", "k1", "k2", "l"],
        }
    }

    pub fn has_closed_form(self) -> bool {
        matches!(
            self,
            FamilyKind::Path
                | FamilyKind::Cycle
                | FamilyKind::Star
                | FamilyKind::Complete
                | FamilyKind::CompleteBipartite
                | FamilyKind::Hypercube
                | FamilyKind::Broom
                | FamilyKind::Lollipop
                | FamilyKind::PcGraph
        )
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        let kind = match norm.as_str() {
            "pc" => FamilyKind::PcGraph,
            "kbip" | "bipartite" => FamilyKind::CompleteBipartite,
            "cube" | "q" => FamilyKind::Hypercube,
            "lp" => FamilyKind::Lollipop,
            "bs" => FamilyKind::BalancedStarlike,
            "dn" => FamilyKind::DnTree,
            other => *FamilyKind::ALL
                .iter()
                .find(|k| k.name() == other)
                .ok_or_else(|| Error::FamilyGrammar(format!("unknown family {s:?}")))?,
        };
        Ok(kind)
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One member of a named family: the kind plus its positional parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, params: Vec<usize>) -> Result<FamilySpec> {
        let spec = FamilySpec { kind, params };
        spec.validate()?;
        Ok(spec)
    }

    fn unchecked(kind: FamilyKind, params: Vec<usize>) -> FamilySpec {
        FamilySpec { kind, params }
    }

    pub fn path(n: usize) -> FamilySpec {
        Self::unchecked(FamilyKind::Path, vec![n])
    }
    pub fn cycle(n: usize) -> FamilySpec {
        Self::unchecked(FamilyKind::Cycle, vec![n])
    }
    pub fn star(n: usize) -> FamilySpec {
        Self::unchecked(FamilyKind::Star, vec![n])
    }
    pub fn complete(n: usize) -> FamilySpec {
        Self::unchecked(FamilyKind::Complete, vec![n])
    }
    pub fn complete_bipartite(a: usize, b: usize) -> FamilySpec {
        Self::unchecked(FamilyKind::CompleteBipartite, vec![a, b])
    }
    pub fn hypercube(d: usize) -> FamilySpec {
        Self::unchecked(FamilyKind::Hypercube, vec![d])
    }
    pub fn broom(n: usize, delta: usize) -> FamilySpec {
        Self::unchecked(FamilyKind::Broom, vec![n, delta])
    }
    pub fn starlike(parts: &[usize]) -> FamilySpec {
        Self::unchecked(FamilyKind::Starlike, parts.to_vec())
    }
    pub fn balanced_starlike(n: usize, k: usize) -> FamilySpec {
        Self::unchecked(FamilyKind::BalancedStarlike, vec![n, k])
    }
    pub fn double_broom(d: usize, a: usize, b: usize) -> FamilySpec {
        Self::unchecked(FamilyKind::DoubleBroom, vec![d, a, b])
    }
    pub fn lollipop(n: usize, k: usize) -> FamilySpec {
        Self::unchecked(FamilyKind::Lollipop, vec![n, k])
    }
    pub fn star_plus_edge(n: usize) -> FamilySpec {
        Self::unchecked(FamilyKind::StarPlusEdge, vec![n])
    }
    pub fn dn_tree(n: usize) -> FamilySpec {
        Self::unchecked(FamilyKind::DnTree, vec![n])
    }
    pub fn complete_minus_matching(n: usize) -> FamilySpec {
        Self::unchecked(FamilyKind::CompleteMinusMatching, vec![n])
    }
    pub fn pc_graph(k: usize, delta: usize) -> FamilySpec {
        Self::unchecked(FamilyKind::PcGraph, vec![k, delta])
    }
    pub fn dumbbell(n: usize, k1: usize, k2: usize, l: usize) -> FamilySpec {
        Self::unchecked(FamilyKind::Dumbbell, vec![n, k1, k2, l])
    }

    /// Number of vertices of the graph this spec describes.
    pub fn order(&self) -> Result<usize> {
        self.validate()?;
        let p = &self.params;
        Ok(match self.kind {
            FamilyKind::CompleteBipartite => p[0] + p[1],
            FamilyKind::Hypercube => 1 << p[0],
            FamilyKind::Starlike => p.iter().sum::<usize>() + 1,
            FamilyKind::DoubleBroom => p[0] + p[1] + p[2] + 1,
            FamilyKind::PcGraph => p[0] * (p[1] + 1) + 2,
            _ => p[0],
        })
    }

    pub fn validate(&self) -> Result<()> {
        let p = &self.params;
        let bad = |message: String| Error::InvalidFamily { kind: self.kind.name().into(), message };
        let arity = self.kind.keys().len();
        if self.kind != FamilyKind::Starlike && p.len() != arity {
            return Err(bad(format!("expected {arity} parameters, got {}", p.len())));
        }
        match self.kind {
            FamilyKind::Path | FamilyKind::Complete if p[0] < 1 => Err(bad("n >= 1 required".into())),
            FamilyKind::Cycle | FamilyKind::Star | FamilyKind::StarPlusEdge if p[0] < 3 => {
                Err(bad("n >= 3 required".into()))
            }
            FamilyKind::CompleteBipartite if p[0] < 1 || p[1] < 1 => {
                Err(bad("both sides need at least one vertex".into()))
            }
            FamilyKind::Hypercube if p[0] > 20 => Err(bad("dimension d <= 20 supported".into())),
            FamilyKind::Broom if p[0] < 3 || p[1] < 2 || p[1] > p[0] - 1 => {
                Err(bad(format!("need n >= 3 and 2 <= delta <= n-1, got n={} delta={}", p[0], p[1])))
            }
            FamilyKind::Starlike if p.len() < 2 || p.contains(&0) => {
                Err(bad("need at least two arms, each of length >= 1".into()))
            }
            FamilyKind::BalancedStarlike if p[1] < 2 || p[0] < p[1] + 1 => {
                Err(bad(format!("need k >= 2 and n >= k+1, got n={} k={}", p[0], p[1])))
            }
            FamilyKind::DoubleBroom if p[0] < 2 => Err(bad("diameter d >= 2 required".into())),
            FamilyKind::Lollipop if p[1] < 2 || p[1] > p[0] => {
                Err(bad(format!("need 2 <= k <= n, got n={} k={}", p[0], p[1])))
            }
            FamilyKind::DnTree if p[0] < 5 => Err(bad("n >= 5 required".into())),
            FamilyKind::CompleteMinusMatching if p[0] < 4 => Err(bad("n >= 4 required".into())),
            FamilyKind::PcGraph if p[0] < 2 || p[1] < 2 => {
                Err(bad(format!("need k >= 2 and delta >= 2, got k={} delta={}", p[0], p[1])))
            }
            FamilyKind::Dumbbell if p[1] < 1 || p[2] < 1 || p[0] != p[1] + p[2] + p[3] => Err(bad(
                format!("need k1, k2 >= 1 and n = k1 + k2 + l, got {p:?}"),
            )),
            _ => Ok(()),
        }
    }

    /// Parses the text grammar, e.g. `broom n=11 delta=6`, `pc k=5 delta=4`,
    /// `starlike parts=3,2,1`. Positional values are accepted too: `broom 11 6`.
    pub fn parse(text: &str) -> Result<FamilySpec> {
        let mut words = text.split_whitespace();
        let kind: FamilyKind = words
            .next()
            .ok_or_else(|| Error::FamilyGrammar("empty family description".into()))?
            .parse()?;
        let keys = kind.keys();
        let mut slots: Vec<Option<Vec<usize>>> = vec![None; keys.len()];
        let mut positional = 0;
        for word in words {
            let (slot, value) = match word.split_once('=') {
                Some((key, value)) => {
                    let key = key.to_ascii_lowercase();
                    let key = match key.as_str() {
                        "Δ" | "δ" | "d" if kind != FamilyKind::Hypercube && kind != FamilyKind::DoubleBroom => {
                            "delta".to_string()
                        }
                        "n" if kind == FamilyKind::Hypercube => "d".to_string(),
                        _ => key,
                    };
                    let slot = keys.iter().position(|k| *k == key).ok_or_else(|| {
                        Error::FamilyGrammar(format!("{kind} has no parameter {key:?} (expected {keys:?})"))
                    })?;
                    (slot, value)
                }
                None => {
                    positional += 1;
                    (positional - 1, word)
                }
            };
            if slot >= keys.len() {
                return Err(Error::FamilyGrammar(format!("too many values for {kind}")));
            }
            let values = value
                .split(',')
                .map(|v| v.trim().parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::FamilyGrammar(format!("bad value {value:?}")))?;
            slots[slot] = Some(values);
        }
        let mut params = Vec::new();
        for (key, slot) in keys.iter().zip(slots) {
            let values = slot.ok_or_else(|| Error::FamilyGrammar(format!("{kind} needs {key}=…")))?;
            if kind != FamilyKind::Starlike && values.len() != 1 {
                return Err(Error::FamilyGrammar(format!("{key} takes a single value")));
            }
            params.extend(values);
        }
        FamilySpec::new(kind, params)
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilySpec::parse(s)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        if self.kind == FamilyKind::Starlike {
            let parts: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
            return write!(f, " parts={}", parts.join(","));
        }
        for (key, value) in self.kind.keys().iter().zip(&self.params) {
            write!(f, " {key}={value}")?;
        }
        Ok(())
    }
}

fn path_edges(vertices: impl IntoIterator<Item = usize>) -> Vec<(usize, usize)> {
    let v: Vec<usize> = vertices.into_iter().collect();
    v.windows(2).map(|w| (w[0], w[1])).collect()
}

fn clique_edges(vertices: &[usize]) -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for (i, &a) in vertices.iter().enumerate() {
        for &b in &vertices[i + 1..] {
            e.push((a, b));
        }
    }
    e
}

fn starlike_edges(parts: &[usize]) -> (usize, Vec<(usize, usize)>) {
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in parts {
        edges.extend(path_edges(std::iter::once(0).chain(next..next + len)));
        next += len;
    }
    (next, edges)
}

/// Arm lengths of `BS(n, k)`, longest first.
pub fn balanced_parts(n: usize, k: usize) -> Vec<usize> {
    let total = n - 1;
    (0..k).map(|i| total / k + usize::from(i < total % k)).collect()
}

/// Builds the graph described by `spec`.
pub fn make(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let p = &spec.params;
    let (n, edges): (usize, Vec<(usize, usize)>) = match spec.kind {
        FamilyKind::Path => (p[0], path_edges(0..p[0])),
        FamilyKind::Cycle => {
            let mut e = path_edges(0..p[0]);
            e.push((p[0] - 1, 0));
            (p[0], e)
        }
        FamilyKind::Star => (p[0], (1..p[0]).map(|i| (0, i)).collect()),
        FamilyKind::Complete => (p[0], clique_edges(&(0..p[0]).collect::<Vec<_>>())),
        FamilyKind::CompleteBipartite => {
            let (a, b) = (p[0], p[1]);
            (a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect())
        }
        FamilyKind::Hypercube => {
            let size = 1usize << p[0];
            let e = (0..size)
                .flat_map(|v| (0..p[0]).map(move |bit| (v, v ^ (1 << bit))))
                .filter(|(u, v)| u < v)
                .collect();
            (size, e)
        }
        FamilyKind::Broom => {
            let (n, delta) = (p[0], p[1]);
            let mut e: Vec<_> = (1..delta).map(|i| (0, i)).collect();
            e.extend(path_edges(std::iter::once(0).chain(delta..n)));
            (n, e)
        }
        FamilyKind::Starlike => starlike_edges(p),
        FamilyKind::BalancedStarlike => starlike_edges(&balanced_parts(p[0], p[1])),
        FamilyKind::DoubleBroom => {
            let (d, a, b) = (p[0], p[1], p[2]);
            let mut e = path_edges(0..=d);
            let mut next = d + 1;
            for _ in 0..a {
                e.push((1, next));
                next += 1;
            }
            for _ in 0..b {
                e.push((d - 1, next));
                next += 1;
            }
            (next, e)
        }
        FamilyKind::Lollipop => {
            let (n, k) = (p[0], p[1]);
            let mut e = clique_edges(&(0..k).collect::<Vec<_>>());
            e.extend(path_edges(std::iter::once(0).chain(k..n)));
            (n, e)
        }
        FamilyKind::StarPlusEdge => {
            let mut e: Vec<_> = (1..p[0]).map(|i| (0, i)).collect();
            e.push((1, 2));
            (p[0], e)
        }
        FamilyKind::DnTree => {
            let n = p[0];
            let mut e = path_edges(0..n - 1);
            e.push((2, n - 1));
            (n, e)
        }
        FamilyKind::CompleteMinusMatching => {
            let n = p[0];
            let mut g = Graph::from_predicate(n, |i, j| !(j == i + 1 && i % 2 == 0));
            if n % 2 == 1 {
                g = g.without_edge(n - 1, 0)?;
            }
            return Ok(g);
        }
        FamilyKind::PcGraph => pc_edges(p[0], p[1]),
        FamilyKind::Dumbbell => {
            let (n, k1, l) = (p[0], p[1], p[3]);
            let first: Vec<usize> = (0..k1).collect();
            let second: Vec<usize> = (k1 + l..n).collect();
            let mut e = clique_edges(&first);
            e.extend(clique_edges(&second));
            e.extend(path_edges(std::iter::once(0).chain(k1..k1 + l).chain(std::iter::once(k1 + l))));
            (n, e)
        }
    };
    Graph::from_edges(n, &edges)
}

/// `PC(k, δ)`: `k` blocks in a row. End blocks are `K_{δ+2}` minus the edge
/// `v_i u_i`, interior blocks `K_{δ+1}` minus `v_i u_i`, and `u_i` is joined to
/// `v_{i+1}`.
fn pc_edges(k: usize, delta: usize) -> (usize, Vec<(usize, usize)>) {
    let mut edges = Vec::new();
    let mut blocks: Vec<(usize, usize)> = Vec::new();
    let mut next = 0;
    for i in 0..k {
        let size = if i == 0 || i == k - 1 { delta + 2 } else { delta + 1 };
        let members: Vec<usize> = (next..next + size).collect();
        let (v, u) = (members[0], members[1]);
        edges.extend(clique_edges(&members).into_iter().filter(|&e| e != (v, u)));
        blocks.push((v, u));
        next += size;
    }
    for i in 0..k - 1 {
        edges.push((blocks[i].1, blocks[i + 1].0));
    }
    (next, edges)
}

fn broom_numerator(n: i64, delta: i64) -> i64 {
    let spine = n - delta + 2;
    floor_div(spine * (3 * spine - 2), 4) + (n - delta + 1) * (delta - 2)
}

/// Exact average eccentricity of the spec's graph from its closed form.
pub fn closed_form_ecc(spec: &FamilySpec) -> Result<Rational> {
    spec.validate()?;
    let p: Vec<i64> = spec.params.iter().map(|&x| x as i64).collect();
    match spec.kind {
        FamilyKind::Path => Ok(ratio(floor_div(3 * p[0] * p[0] - 2 * p[0], 4), p[0])),
        FamilyKind::Cycle => Ok(int(p[0] / 2)),
        FamilyKind::Star => Ok(int(2) - ratio(1, p[0])),
        FamilyKind::Complete => Ok(int(if p[0] == 1 { 0 } else { 1 })),
        FamilyKind::CompleteBipartite => Ok(match (p[0], p[1]) {
            (1, 1) => int(1),
            (1, _) | (_, 1) => int(2) - ratio(1, p[0] + p[1]),
            _ => int(2),
        }),
        FamilyKind::Hypercube => Ok(int(p[0])),
        FamilyKind::Broom | FamilyKind::Lollipop => Ok(ratio(broom_numerator(p[0], p[1]), p[0])),
        FamilyKind::PcGraph => {
            let (k, delta) = (p[0], p[1]);
            if k % 2 != 0 {
                return Err(Error::NoClosedForm(format!("{spec} (closed form needs even k)")));
            }
            Ok(ratio(9 * k, 4) - ratio(1, 2) + ratio(3 * (k - 2), 2 * (k * delta + k + 2)))
        }
        _ => Err(Error::NoClosedForm(spec.to_string())),
    }
}

/// `ecc(B(n,Δ)) + α(B(n,Δ))` from the two-case simplification on the parity of `n − Δ`.
pub fn broom_alpha_plus_ecc(n: usize, delta: usize) -> Result<Rational> {
    if n < 3 || delta < 2 || delta > n - 1 {
        return Err(Error::OutOfRange(format!("need 2 <= delta <= n-1, got n={n} delta={delta}")));
    }
    let (n, d) = (n as i64, delta as i64);
    let base = ratio(5 * n, 4) - ratio(d * (d - 2), 4 * n);
    Ok(if (n - d) % 2 == 0 { base - ratio(1, 2) } else { base - ratio(1, 4 * n) })
}

/// `ecc(LP(n,k)) · ω(LP(n,k)) = (k/n)·⌊(−k² − 2k(n−1) + n(2+3n))/4⌋`.
pub fn lollipop_product(n: usize, k: usize) -> Result<Rational> {
    if n < 3 || k < 2 || k > n - 1 {
        return Err(Error::OutOfRange(format!("need 2 <= k <= n-1, got n={n} k={k}")));
    }
    let (n, k) = (n as i64, k as i64);
    Ok(ratio(k, n) * int(floor_div(-k * k - 2 * k * (n - 1) + n * (2 + 3 * n), 4)))
}

#[derive(Clone, Debug, PartialEq)]
pub struct KStar {
    /// Larger root of `−3x² − 4x(n−1) + n(3n+2) = 0`.
    pub root: f64,
    /// Every `k ∈ [2, n−1]` attaining the maximum of [`lollipop_product`].
    pub argmax: Vec<usize>,
    pub max_value: Rational,
}

pub fn lollipop_kstar(n: usize) -> Result<KStar> {
    if n < 4 {
        return Err(Error::OutOfRange(format!("need n >= 4, got {n}")));
    }
    let nf = n as f64;
    let root = (2.0 - 2.0 * nf + (4.0 - 2.0 * nf + 13.0 * nf * nf).sqrt()) / 3.0;
    let values: Vec<(usize, Rational)> = (2..n)
        .map(|k| lollipop_product(n, k).map(|v| (k, v)))
        .collect::<Result<_>>()?;
    let max_value = values.iter().map(|(_, v)| *v).max().expect("k range non-empty");
    let argmax = values.iter().filter(|(_, v)| *v == max_value).map(|(k, _)| *k).collect();
    Ok(KStar { root, argmax, max_value })
}

/// All members of `kind` on exactly `n` vertices, for family membership
/// tests. Supported for the families used as claimed extremal sets.
pub fn members_of_order(kind: FamilyKind, n: usize) -> Result<Vec<FamilySpec>> {
    let specs = match kind {
        FamilyKind::Lollipop => (2..=n).map(|k| FamilySpec::lollipop(n, k)).collect(),
        FamilyKind::Dumbbell => {
            let mut out = Vec::new();
            for k1 in 1..=n {
                for k2 in 1..=k1.min(n - k1) {
                    out.push(FamilySpec::dumbbell(n, k1, k2, n - k1 - k2));
                }
            }
            out
        }
        FamilyKind::Broom => (2..n).map(|d| FamilySpec::broom(n, d)).collect(),
        FamilyKind::Path => vec![FamilySpec::path(n)],
        FamilyKind::Star => vec![FamilySpec::star(n)],
        FamilyKind::Complete => vec![FamilySpec::complete(n)],
        FamilyKind::DnTree => vec![FamilySpec::dn_tree(n)],
        other => {
            return Err(Error::OutOfRange(format!("member listing not supported for {other}")))
        }
    };
    Ok(specs.into_iter().filter(|s: &FamilySpec| s.validate().is_ok()).collect())
}
