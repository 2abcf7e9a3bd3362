//! Exact enumeration of graph compositions with a restricted number of
//! components.
//!
//! A composition of a graph is a partition of its vertex set in which
//! every block induces a connected subgraph. This crate computes the
//! per-component-count spectrum C^k(G) three independent ways: closed
//! formulas for the standard families, inclusion-exclusion over
//! bad-component tables for deletions from complete graphs, and a
//! brute-force set-partition oracle that the other two are validated
//! against. Generating-function expansions cross-check the coefficient
//! recurrences.
//!
//! All arithmetic is exact; counts are arbitrary-precision integers.

pub mod combinatorics;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod oracle;
pub mod series;
pub mod spectrum;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{build_family, compose_graphs, delete_from_complete, ComposeKind, FamilySpec, Graph};
pub use oracle::Oracle;
pub use spectrum::{CoefficientTable, CompositionVector};
