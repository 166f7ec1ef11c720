//! Encapsulation metrics for partitioned software systems.
//!
//! A system is modelled as a set of program units (classes, say) grouped
//! into encapsulated regions (packages). Units see everything inside
//! their own region; across regions they see only the units flagged as
//! violational (publicly visible). The number of ordered potential
//! dependencies such a configuration permits is its potential structural
//! complexity (P.S.C.), and configuration efficiency measures how close a
//! configuration comes to the minimal P.S.C. achievable for its size and
//! visibility profile.
//!
//! The crate is organised as three layers:
//!
//! - [`uniform`] — exact closed forms over idealised systems with
//!   equal-sized regions and equal per-region violation counts.
//! - [`graph`] — concrete unit graphs, definitional P.S.C. for arbitrary
//!   partitions, and brute-force oracles that validate the closed forms.
//! - [`ingest`] — loading real systems from CSV manifests or by lexically
//!   scanning a Java source tree.

#![forbid(unsafe_code)]

pub mod error;
pub mod graph;
pub mod ingest;
pub mod uniform;

pub use error::Error;
pub use graph::{GraphMetrics, RegionSummary, Unit, UnitGraph};
pub use uniform::{Fraction, PscValue, UniformSystem, MAX_UNITS};
