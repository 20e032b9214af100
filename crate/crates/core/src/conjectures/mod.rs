//! AutoGraphiX conjectures on the average eccentricity: a registry of
//! machine-readable bounds, evaluation on one graph, class-wide scans, and the
//! counterexample search for the minimum-degree bound.

mod refute;
mod scan;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::families::FamilyKind;
use crate::graph::canon::canonical_certificate;
use crate::graph::distance::average_eccentricity;
use crate::graph::graph6::encode_graph6;
use crate::graph::Graph;
use crate::invariants::{
    chromatic_number, clique_number, domination_number, independence_number, randic_index, spectral_radius,
    DEFAULT_TOLERANCE, RANDIC_EXPONENT,
};
use crate::rational::{self, floor_div, int, ratio, Rational};

pub use refute::{refute_a100, CounterexampleReport, CounterexampleRow};
pub use scan::{scan, OrderSummary, ScanReport, ScanRequest, Witness};

/// Comparison tolerance when either side is irrational.
pub const FLOAT_TOLERANCE: f64 = 1e-9;
/// Largest order for which evaluations carry a canonical certificate.
pub const CERTIFICATE_MAX_ORDER: usize = 24;
/// Slack band reported as near-equality for irrational comparisons.
pub const NEAR_BAND: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Combiner {
    Sum,
    Product,
    Ratio,
}

/// The invariant paired with the average eccentricity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Partner {
    Independence,
    Randic,
    SpectralRadius,
    Clique,
    Chromatic,
    MinDegree,
    Domination,
}

impl Partner {
    pub fn symbol(self) -> &'static str {
        match self {
            Partner::Independence => "α",
            Partner::Randic => "Ra",
            Partner::SpectralRadius => "λ",
            Partner::Clique => "ω",
            Partner::Chromatic => "χ",
            Partner::MinDegree => "δ",
            Partner::Domination => "γ",
        }
    }

    fn compute(self, g: &Graph) -> Result<Number> {
        Ok(match self {
            Partner::Independence => Number::Exact(int(independence_number(g) as i64)),
            Partner::Clique => Number::Exact(int(clique_number(g) as i64)),
            Partner::Chromatic => Number::Exact(int(chromatic_number(g) as i64)),
            Partner::MinDegree => Number::Exact(int(g.min_degree() as i64)),
            Partner::Domination => Number::Exact(int(domination_number(g)? as i64)),
            Partner::Randic => Number::Real(randic_index(g, RANDIC_EXPONENT)?),
            Partner::SpectralRadius => Number::Real(spectral_radius(g, DEFAULT_TOLERANCE)?),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    Upper,
    Lower,
    /// The maximum over a class is claimed to be attained inside a family.
    ExtremalFamily,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Checkable {
    ClosedBound,
    ExtremalFamilyOnly,
}

/// Standing of a conjecture after the analysis it comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Standing {
    Proved,
    Refuted,
    Open,
}

/// A value that is exact when both ingredients are rational.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Number {
    Exact(Rational),
    Real(f64),
}

impl Number {
    pub fn to_f64(self) -> f64 {
        match self {
            Number::Exact(r) => rational::to_f64(&r),
            Number::Real(x) => x,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Number::Exact(_))
    }

    fn combine(self, other: Number, combiner: Combiner) -> Number {
        match (self, other) {
            (Number::Exact(a), Number::Exact(b)) => Number::Exact(match combiner {
                Combiner::Sum => a + b,
                Combiner::Product => a * b,
                Combiner::Ratio => a / b,
            }),
            (a, b) => {
                let (a, b) = (a.to_f64(), b.to_f64());
                Number::Real(match combiner {
                    Combiner::Sum => a + b,
                    Combiner::Product => a * b,
                    Combiner::Ratio => a / b,
                })
            }
        }
    }

    fn minus(self, other: Number) -> Number {
        match (self, other) {
            (Number::Exact(a), Number::Exact(b)) => Number::Exact(a - b),
            (a, b) => Number::Real(a.to_f64() - b.to_f64()),
        }
    }

    /// Ordering used to find extremal graphs; exact values compare exactly.
    pub fn cmp_value(self, other: Number) -> std::cmp::Ordering {
        match (self, other) {
            (Number::Exact(a), Number::Exact(b)) => a.cmp(&b),
            (a, b) => a.to_f64().total_cmp(&b.to_f64()),
        }
    }

    /// Equal exactly, or within [`FLOAT_TOLERANCE`] when irrational.
    pub fn ties(self, other: Number) -> bool {
        match (self, other) {
            (Number::Exact(a), Number::Exact(b)) => a == b,
            (a, b) => (a.to_f64() - b.to_f64()).abs() <= FLOAT_TOLERANCE,
        }
    }
}

impl fmt::Display for Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Number::Exact(r) => f.write_str(&rational::to_pq(r)),
            Number::Real(x) => write!(f, "{x:.12}"),
        }
    }
}

impl Serialize for Number {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Number::Exact(r) => s.serialize_str(&rational::to_pq(r)),
            Number::Real(x) => s.serialize_f64(*x),
        }
    }
}

/// One conjecture: `ecc ⊕ partner` compared with a bound depending on `n`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConjectureSpec {
    pub id: &'static str,
    /// Published label, which is not unique.
    pub label: &'static str,
    pub combiner: Combiner,
    pub partner: Partner,
    pub direction: Direction,
    pub checkable: Checkable,
    pub claimed_extremal: &'static str,
    pub standing: Standing,
    #[serde(skip)]
    pub family: Option<FamilyKind>,
}

impl ConjectureSpec {
    /// `ecc ⊕ partner`, e.g. `ecc + α`.
    pub fn expression(&self) -> String {
        let p = self.partner.symbol();
        match self.combiner {
            Combiner::Sum => format!("{p} + ecc"),
            Combiner::Product => format!("{p} · ecc"),
            Combiner::Ratio => format!("ecc / {p}"),
        }
    }

    /// The combined invariant of `g`.
    pub fn value(&self, g: &Graph) -> Result<Number> {
        let ecc = Number::Exact(average_eccentricity(g)?);
        Ok(ecc.combine(self.partner.compute(g)?, self.combiner))
    }

    /// The conjectured bound at order `n`; `None` where the statement gives
    /// no usable value.
    pub fn bound(&self, n: usize) -> Result<Option<Number>> {
        if self.checkable == Checkable::ExtremalFamilyOnly {
            return Err(Error::ExtremalFamilyOnly(self.id.into()));
        }
        if n < 4 {
            return Err(Error::OrderTooSmall(n));
        }
        let ni = n as i64;
        let nf = n as f64;
        let odd = n % 2 == 1;
        let ra_path = (nf - 3.0 + 2.0 * 2f64.sqrt()) / 2.0;
        let ecc_star = 2.0 - 1.0 / nf;
        let ecc_path = ratio(floor_div(3 * ni * ni - 2 * ni, 4), ni);
        let exact = |r: Rational| Ok(Some(Number::Exact(r)));
        let real = |x: f64| Ok(Some(Number::Real(x)));
        match self.id {
            "A.478-U" if odd => exact(ratio(3 * ni * ni - 2 * ni - 1, 4 * ni) + ratio(ni + 1, 2)),
            "A.478-U" => exact(ratio(3 * ni * ni - 4 * ni - 4, 4 * ni) + ratio(ni + 2, 2)),
            "A.462-U" if odd => real(ra_path + (3.0 * nf + 1.0) / 4.0 * (nf - 1.0) / nf),
            "A.462-U" => real(ra_path + (3.0 * nf - 2.0) / 4.0),
            "A.464-U" if odd => real(ra_path * (3.0 * nf + 1.0) / 4.0 * (nf - 1.0) / nf),
            "A.464-U" => real(ra_path * (3.0 * nf - 2.0) / 4.0),
            "A.462-L" | "A.458-L" => real((nf - 1.0).sqrt() + ecc_star),
            "A.460-L" => real((nf - 1.0).sqrt() * ecc_star),
            "A.464-L-randic" if n <= 13 => exact(ratio(ni, 2)),
            "A.464-L-randic" => real((nf - 1.0).sqrt() * ecc_star),
            "A.100-U" if odd => Ok(None),
            "A.100-U" => exact(int(2 * ni - 2)),
            "A.464-L-domination-original" => {
                let third = int(floor_div(ni + 1, 3));
                exact(match (odd, n % 3 == 1) {
                    (true, false) => third + ratio((3 * ni + 1) * ni, 4 * (ni - 1)),
                    (false, false) => third + ratio(3 * ni - 2, 4),
                    (true, true) => ratio(13 * ni - 16, 12) - ratio(3, 4 * ni),
                    (false, true) => ratio(13 * ni - 16, 12) - ratio(1, ni),
                })
            }
            "A.464-L-domination-corrected" if !n.is_multiple_of(3) => exact(int(rational::ceil_div(ni, 3)) + ecc_path),
            "A.464-L-domination-corrected" => {
                let m = ni - 1;
                exact(ratio(ni, 3) + int(2) - ratio(3, ni) + ratio(floor_div(3 * m * m - 2 * m, 4), ni))
            }
            other => Err(Error::UnknownConjecture(other.into())),
        }
    }
}

macro_rules! spec {
    ($id:expr, $label:expr, $comb:ident, $partner:ident, $dir:ident, $check:ident, $standing:ident, $family:expr, $claim:expr) => {
        ConjectureSpec {
            id: $id,
            label: $label,
            combiner: Combiner::$comb,
            partner: Partner::$partner,
            direction: Direction::$dir,
            checkable: Checkable::$check,
            claimed_extremal: $claim,
            standing: Standing::$standing,
            family: $family,
        }
    };
}

/// All thirteen conjectures.
///
/// Both domination bounds are registered as upper bounds: the path maximizes
/// the sum, and read as lower bounds they fail on every star.
pub fn registry() -> Vec<ConjectureSpec> {
    use FamilyKind::*;
    vec![
        spec!("A.478-U", "A.478-U", Sum, Independence, Upper, ClosedBound, Proved, None,
              "P_n for odd n, B(n,3) for even n"),
        spec!("A.462-U", "A.462-U", Sum, Randic, Upper, ClosedBound, Proved, None, "P_n"),
        spec!("A.464-U", "A.464-U", Product, Randic, Upper, ClosedBound, Proved, None, "P_n"),
        spec!("A.462-L", "A.462-L", Sum, Randic, Lower, ClosedBound, Open, None, "S_n"),
        spec!("A.464-L-randic", "A.464-L", Product, Randic, Lower, ClosedBound, Open, None,
              "K_n for n <= 13, S_n for n > 13"),
        spec!("A.458-L", "A.458-L", Sum, SpectralRadius, Lower, ClosedBound, Open, None, "S_n"),
        spec!("A.460-L", "A.460-L", Product, SpectralRadius, Lower, ClosedBound, Open, None, "S_n"),
        spec!("A.488-U", "A.488-U", Product, Clique, ExtremalFamily, ExtremalFamilyOnly, Proved,
              Some(Lollipop), "some lollipop LP(n,k)"),
        spec!("A.479-U", "A.479-U", Ratio, Independence, ExtremalFamily, ExtremalFamilyOnly, Open,
              Some(Dumbbell), "two cliques linked by a path"),
        spec!("A.492-U", "A.492-U", Product, Chromatic, ExtremalFamily, ExtremalFamilyOnly, Open,
              Some(Lollipop), "some lollipop LP(n,k)"),
        spec!("A.100-U", "A.100-U", Product, MinDegree, Upper, ClosedBound, Refuted, None,
              "K_n minus a perfect matching"),
        spec!("A.464-L-domination-original", "A.464-L", Sum, Domination, Upper, ClosedBound, Refuted,
              None, "P_n for n ≢ 1 (mod 3)"),
        spec!("A.464-L-domination-corrected", "A.464-L", Sum, Domination, Upper, ClosedBound, Open,
              Some(DnTree), "P_n for n ≢ 0 (mod 3), D_n for n ≡ 0 (mod 3)"),
    ]
}

/// Looks up a conjecture by id, case-insensitively. `domination-original`
/// and `domination-corrected` are accepted as short forms.
pub fn lookup(id: &str) -> Result<ConjectureSpec> {
    let want = id.trim().to_ascii_uppercase();
    registry()
        .into_iter()
        .find(|s| {
            let full = s.id.to_ascii_uppercase();
            full == want || full.strip_prefix("A.464-L-").is_some_and(|short| short == want)
        })
        .ok_or_else(|| Error::UnknownConjecture(id.into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Satisfied,
    Equality,
    NearEquality,
    Violated,
    /// The statement gives no bound at this order.
    Indeterminate,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConjectureEvaluation {
    pub id: &'static str,
    pub graph6: String,
    /// Canonical graph6, only for `n ≤ CERTIFICATE_MAX_ORDER`.
    pub certificate: Option<String>,
    pub n: usize,
    pub value: Number,
    pub bound: Option<Number>,
    /// `bound − value` for upper bounds, `value − bound` for lower bounds.
    pub slack: Option<Number>,
    pub status: Status,
}

/// Evaluates a closed-bound conjecture on one connected graph with `n ≥ 4`.
pub fn evaluate(spec: &ConjectureSpec, g: &Graph) -> Result<ConjectureEvaluation> {
    if spec.checkable == Checkable::ExtremalFamilyOnly {
        return Err(Error::ExtremalFamilyOnly(spec.id.into()));
    }
    if g.n() < 4 {
        return Err(Error::OrderTooSmall(g.n()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let value = spec.value(g)?;
    let bound = spec.bound(g.n())?;
    let slack = bound.map(|b| match spec.direction {
        Direction::Lower => value.minus(b),
        _ => b.minus(value),
    });
    Ok(ConjectureEvaluation {
        id: spec.id,
        graph6: encode_graph6(g),
        certificate: (g.n() <= CERTIFICATE_MAX_ORDER)
            .then(|| String::from_utf8(canonical_certificate(g)).expect("graph6 is ascii")),
        n: g.n(),
        value,
        bound,
        slack,
        status: classify(slack),
    })
}

fn classify(slack: Option<Number>) -> Status {
    match slack {
        None => Status::Indeterminate,
        Some(Number::Exact(s)) if s < int(0) => Status::Violated,
        Some(Number::Exact(s)) if s == int(0) => Status::Equality,
        Some(Number::Exact(_)) => Status::Satisfied,
        Some(Number::Real(s)) if s < -FLOAT_TOLERANCE => Status::Violated,
        Some(Number::Real(s)) if s <= FLOAT_TOLERANCE => Status::Equality,
        Some(Number::Real(s)) if s <= NEAR_BAND => Status::NearEquality,
        Some(Number::Real(_)) => Status::Satisfied,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make, FamilySpec};

    fn fam(spec: FamilySpec) -> Graph {
        make(&spec).unwrap()
    }

    #[test]
    fn registry_shape() {
        let reg = registry();
        assert_eq!(reg.len(), 13);
        let ids: std::collections::BTreeSet<_> = reg.iter().map(|s| s.id).collect();
        assert_eq!(ids.len(), 13);
        assert_eq!(reg.iter().filter(|s| s.label == "A.464-L").count(), 3);
        let family_only: Vec<_> =
            reg.iter().filter(|s| s.checkable == Checkable::ExtremalFamilyOnly).map(|s| s.id).collect();
        assert_eq!(family_only, vec!["A.488-U", "A.479-U", "A.492-U"]);
        assert_eq!(lookup("domination-corrected").unwrap().id, "A.464-L-domination-corrected");
        assert_eq!(lookup("a.478-u").unwrap().id, "A.478-U");
        assert!(lookup("A.999").is_err());
    }

    #[test]
    fn bound_examples() {
        let a478 = lookup("A.478-U").unwrap();
        assert_eq!(a478.bound(7).unwrap(), Some(Number::Exact(ratio(3 * 49 - 14 - 1, 28) + int(4))));
        let randic = lookup("A.464-L-randic").unwrap();
        assert_eq!(randic.bound(10).unwrap(), Some(Number::Exact(int(5))));
        assert!(!randic.bound(14).unwrap().unwrap().is_exact());
        let dom = lookup("domination-corrected").unwrap();
        assert_eq!(
            dom.bound(9).unwrap(),
            Some(Number::Exact(int(3) + ratio(5, 3) + ratio(44, 9)))
        );
        assert_eq!(lookup("A.100-U").unwrap().bound(7).unwrap(), None);
        assert!(matches!(lookup("A.488-U").unwrap().bound(7), Err(Error::ExtremalFamilyOnly(_))));
        assert!(matches!(a478.bound(3), Err(Error::OrderTooSmall(3))));
    }

    #[test]
    fn a478_equality_cases() {
        let spec = lookup("A.478-U").unwrap();
        let e = evaluate(&spec, &fam(FamilySpec::path(5))).unwrap();
        assert_eq!(e.value, Number::Exact(ratio(31, 5)));
        assert_eq!(e.status, Status::Equality);
        let e = evaluate(&spec, &fam(FamilySpec::broom(6, 3))).unwrap();
        assert_eq!(e.status, Status::Equality);
        let e = evaluate(&spec, &fam(FamilySpec::star(6))).unwrap();
        assert_eq!(e.status, Status::Satisfied);
    }

    #[test]
    fn randic_upper_equality_at_path() {
        for id in ["A.462-U", "A.464-U"] {
            let e = evaluate(&lookup(id).unwrap(), &fam(FamilySpec::path(8))).unwrap();
            assert_eq!(e.status, Status::Equality, "{id}");
        }
    }

    #[test]
    fn a100_on_pc() {
        let spec = lookup("A.100-U").unwrap();
        let e = evaluate(&spec, &fam(FamilySpec::pc_graph(20, 20))).unwrap();
        assert_eq!(e.n, 422);
        assert_eq!(e.bound, Some(Number::Exact(int(842))));
        assert_eq!(e.status, Status::Violated);
        assert!((e.value.to_f64() - 891.28).abs() < 0.01, "{}", e.value);
        let e = evaluate(&spec, &fam(FamilySpec::complete_minus_matching(7))).unwrap();
        assert_eq!(e.status, Status::Indeterminate);
        // δ = 6 and every eccentricity is 2, so the named equality graph sits at 2n − 4.
        let e = evaluate(&spec, &fam(FamilySpec::complete_minus_matching(8))).unwrap();
        assert_eq!(e.value, Number::Exact(int(12)));
        assert_eq!(e.status, Status::Satisfied);
    }

    #[test]
    fn evaluate_guards() {
        let spec = lookup("A.478-U").unwrap();
        assert_eq!(evaluate(&spec, &fam(FamilySpec::path(3))), Err(Error::OrderTooSmall(3)));
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(evaluate(&spec, &split), Err(Error::Disconnected));
        assert!(evaluate(&lookup("A.492-U").unwrap(), &fam(FamilySpec::path(5))).is_err());
    }

    #[test]
    fn domination_directions() {
        let corrected = lookup("domination-corrected").unwrap();
        let d6 = fam(FamilySpec::dn_tree(6));
        assert_eq!(evaluate(&corrected, &d6).unwrap().status, Status::Equality);
        assert_eq!(evaluate(&corrected, &fam(FamilySpec::path(7))).unwrap().status, Status::Equality);
        let original = lookup("domination-original").unwrap();
        assert_eq!(evaluate(&original, &d6).unwrap().status, Status::Violated);
    }

    #[test]
    fn number_json() {
        let json = serde_json::to_string(&Number::Exact(ratio(31, 5))).unwrap();
        assert_eq!(json, "\"31/5\"");
        assert_eq!(serde_json::to_string(&Number::Real(0.5)).unwrap(), "0.5");
    }
}
