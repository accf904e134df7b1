//! Random walks on finite electric networks.
//!
//! A [`Network`] is a connected simple graph with positive edge conductances.
//! It induces a reversible random walk that steps from `y` to a neighbour `z`
//! with probability `C_yz / C_y`. This crate computes the walk's exact
//! expectations (hitting, commute and return times) together with effective
//! resistances and the Kirchhoff index, analyses single-edge deletions, and
//! checks every exact value against a seeded Monte Carlo simulation.
//!
//! The crate is `no_std` and needs only `alloc`.
//!
//! ```
//! use elnet_core::{generators, perturbation, EdgeRef};
//!
//! let cube = generators::hypercube(3).unwrap();
//! let report = perturbation::analyze_edge_removal(&cube, EdgeRef::new(0, 1)).unwrap();
//! assert!((report.hitting_before - 7.0).abs() < 1e-12);
//! assert!((report.hitting_after_predicted.unwrap() - 15.4).abs() < 1e-9);
//! ```
#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;
pub mod generators;
pub mod linalg;
pub mod montecarlo;
mod network;
pub mod perturbation;
pub mod solver;
pub mod walk_regular;

pub use error::{Error, InvalidEdgeReason, Result};
pub use montecarlo::McEstimate;
pub use network::{EdgeRef, Network};
pub use perturbation::PerturbationReport;
pub use solver::{HittingReport, ResistanceReport};
pub use walk_regular::WalkRegularityReport;
