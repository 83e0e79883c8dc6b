//! Cycle saturation toolkit.
//!
//! Builders for sparse `C_k`-saturated and `C_k`-semisaturated graph families,
//! certificate-producing verifiers built on an exact-length path search,
//! closed-form bound evaluation in exact rationals, and exhaustive
//! isomorph-free search for exact saturation numbers on small orders.

pub mod bounds;
pub mod constructions;
pub mod cycle;
pub mod graph;
pub mod oracle;
pub mod saturation;
pub mod suitability;

pub use cycle::{
    exists_path_of_length, has_cycle_of_length, shortest_cycle_through, CycleWitness,
    PathSearch, PathWitness, SearchError,
};
pub use graph::{canonical_code, CanonicalCode, Graph, GraphError, Vertex};
