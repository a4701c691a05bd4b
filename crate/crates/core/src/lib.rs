//! Exact distance spectra of connected graphs.
//!
//! The crate computes distance characteristic polynomials with integer
//! arithmetic, decides where the second largest distance eigenvalue sits
//! relative to θ = (17 − √329)/2 without rounding, recognises the families of
//! complete graphs, pendant cliques `K_s^t` and cones over disjoint cliques, and
//! runs exhaustive cospectrality scans over all connected graphs of small order.

pub mod classifier;
pub mod cli;
pub mod error;
pub mod families;
pub mod graph;
pub mod lab;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::{apsp, DistanceMatrix, Graph};
