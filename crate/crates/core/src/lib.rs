//! Average eccentricity workbench.
//!
//! Exact graph invariants built around the average eccentricity
//! `ecc(G) = (1/n) Σ ε(v)`, constructors and closed forms for the extremal
//! graph families that show up around it, the two monotone transformations
//! that move `ecc` up or down, isomorph-free enumeration of small graph
//! classes, and a registry of AutoGraphiX conjectures that can be evaluated
//! on single graphs or scanned over whole classes.

pub mod cli;
pub mod conjectures;
pub mod enumeration;
pub mod error;
pub mod families;
pub mod graph;
pub mod invariants;
pub mod rational;
pub mod transforms;

pub use error::{Error, Result};
pub use graph::canon::canonical_certificate;
pub use graph::distance::{bfs_distances, eccentricity_profile, EccentricityProfile, UNREACHABLE};
pub use graph::graph6::{decode_graph6, encode_graph6};
pub use graph::Graph;
pub use rational::Rational;
