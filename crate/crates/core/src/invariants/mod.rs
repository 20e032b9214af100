//! Graph invariants combined with the average eccentricity.

mod bits;
pub mod exact;
pub mod indices;
pub mod spectral;

use serde::{Deserialize, Serialize};

pub use exact::{chromatic_number, clique_number, domination_number, independence_number};
pub use indices::{eccentric_connectivity_index, randic_index, wiener_index, RANDIC_EXPONENT};
pub use spectral::{spectral_radius, DEFAULT_TOLERANCE};

use crate::error::Result;
use crate::graph::distance::eccentricity_profile;
use crate::graph::graph6::encode_graph6;
use crate::graph::Graph;
use crate::rational::{self, Rational};

/// Every invariant of one connected graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    #[serde(with = "rational::serde_pq")]
    pub average_eccentricity: Rational,
    pub average_eccentricity_float: f64,
    pub radius: u32,
    pub diameter: u32,
    pub eccentric_connectivity: u64,
    pub wiener: u64,
    pub randic: f64,
    pub independence: usize,
    pub clique: usize,
    pub domination: usize,
    pub chromatic: usize,
    pub spectral_radius: f64,
}

impl InvariantReport {
    pub fn compute(g: &Graph) -> Result<InvariantReport> {
        let profile = eccentricity_profile(g)?;
        Ok(InvariantReport {
            graph6: encode_graph6(g),
            n: g.n(),
            m: g.m(),
            min_degree: g.min_degree(),
            max_degree: g.max_degree(),
            average_eccentricity_float: rational::to_f64(&profile.average),
            average_eccentricity: profile.average,
            radius: profile.radius,
            diameter: profile.diameter,
            eccentric_connectivity: eccentric_connectivity_index(g)?,
            wiener: wiener_index(g)?,
            randic: randic_index(g, RANDIC_EXPONENT)?,
            independence: independence_number(g),
            clique: clique_number(g),
            domination: domination_number(g)?,
            chromatic: chromatic_number(g),
            spectral_radius: spectral_radius(g, DEFAULT_TOLERANCE)?,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Writes a header row followed by one row per report.
    pub fn write_csv<W: std::io::Write>(reports: &[InvariantReport], out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for r in reports {
            w.serialize(r).map_err(|e| crate::Error::Io(e.to_string()))?;
        }
        if reports.is_empty() {
            w.write_record(CSV_HEADER).map_err(|e| crate::Error::Io(e.to_string()))?;
        }
        w.flush()?;
        Ok(())
    }
}

const CSV_HEADER: [&str; 17] = [
    "graph6",
    "n",
    "m",
    "min_degree",
    "max_degree",
    "average_eccentricity",
    "average_eccentricity_float",
    "radius",
    "diameter",
    "eccentric_connectivity",
    "wiener",
    "randic",
    "independence",
    "clique",
    "domination",
    "chromatic",
    "spectral_radius",
];
