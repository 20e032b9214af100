use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{closed_form_ecc, make, FamilySpec};
use crate::graph::distance::average_eccentricity;
use crate::rational::{self, int, Rational};

/// `δ · ecc(PC(k, δ))` against the conjectured bound `2n − 2` for one `(k, δ)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CounterexampleRow {
    pub k: usize,
    pub delta: usize,
    pub n: usize,
    #[serde(with = "rational::serde_pq")]
    pub product: Rational,
    #[serde(with = "rational::serde_pq")]
    pub bound: Rational,
    /// `product − bound`; positive means the conjecture fails.
    #[serde(with = "rational::serde_pq")]
    pub margin: Rational,
    pub violated: bool,
    /// `k(δ − 8) − 2δ`; positive is sufficient for a violation.
    pub criterion: i64,
    pub criterion_positive: bool,
    /// Closed form and breadth-first search give the same average eccentricity.
    pub bfs_agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CounterexampleReport {
    pub rows: Vec<CounterexampleRow>,
    pub violations: usize,
}

impl CounterexampleReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn write_csv<W: std::io::Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for row in &self.rows {
            w.serialize(row).map_err(|e| Error::Io(e.to_string()))?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Evaluates the `PC(k, δ)` family on every pair of the grid. Odd `k` is
/// rejected since the closed form assumes an even number of blocks.
pub fn refute_a100(ks: &[usize], deltas: &[usize]) -> Result<CounterexampleReport> {
    if let Some(k) = ks.iter().find(|&&k| k % 2 == 1) {
        return Err(Error::OutOfRange(format!("k = {k} is odd; the closed form needs even k")));
    }
    let mut rows = Vec::new();
    for &k in ks {
        for &delta in deltas {
            let spec = FamilySpec::new(crate::families::FamilyKind::PcGraph, vec![k, delta])?;
            let n = spec.order()?;
            let ecc = closed_form_ecc(&spec)?;
            let bfs = average_eccentricity(&make(&spec)?)?;
            let product = ecc * int(delta as i64);
            let bound = int(2 * n as i64 - 2);
            let criterion = k as i64 * (delta as i64 - 8) - 2 * delta as i64;
            rows.push(CounterexampleRow {
                k,
                delta,
                n,
                product,
                bound,
                margin: product - bound,
                violated: product > bound,
                criterion,
                criterion_positive: criterion > 0,
                bfs_agrees: bfs == ecc,
            });
        }
    }
    let violations = rows.iter().filter(|r| r.violated).count();
    Ok(CounterexampleReport { rows, violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn twenty_twenty() {
        let report = refute_a100(&[20], &[20]).unwrap();
        let row = &report.rows[0];
        assert_eq!(row.n, 422);
        assert_eq!(row.product, int(20) * (ratio(9 * 20, 4) - ratio(1, 2) + ratio(27, 422)));
        assert_eq!(row.bound, int(842));
        assert!(row.violated && row.bfs_agrees && row.criterion_positive);
    }

    #[test]
    fn boundary_and_small() {
        let report = refute_a100(&[4, 10], &[3, 10]).unwrap();
        let small = report.rows.iter().find(|r| r.k == 4 && r.delta == 3).unwrap();
        assert!(!small.violated);
        let edge = report.rows.iter().find(|r| r.k == 10 && r.delta == 10).unwrap();
        assert_eq!(edge.criterion, 0);
        assert!(!edge.criterion_positive);
        assert!(report.rows.iter().all(|r| r.bfs_agrees));
        assert!(refute_a100(&[5], &[4]).is_err());
    }
}
