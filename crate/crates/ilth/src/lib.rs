//! Iterated local transitivity hypergraphs: generator, metrics, motif census,
//! clustering coefficients, random baselines, and 2-section embeddings.

pub mod cli;
pub mod clustering;
pub mod eigen;
pub mod error;
pub mod frac;
pub mod graph;
pub mod hgf;
pub mod hom;
pub mod hypergraph;
pub mod metrics;
pub mod motif;
pub mod random;
pub mod tables;

pub use error::{Error, Result};
pub use graph::Graph;
pub use hypergraph::{project_to_initial, Hypergraph, Lineage, DEFAULT_EDGE_CAP};
