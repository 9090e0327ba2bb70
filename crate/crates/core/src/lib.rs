//! Extremal host graphs for tree embedding under minimum/maximum-degree
//! conditions, an exact tree-containment oracle, the decomposition-driven
//! embedding heuristic, and a harness for checking non-embedding claims.

pub mod connectivity;
pub mod constructions;
pub mod decomposition;
pub mod embedding;
pub mod error;
pub mod graph;
pub mod harness;
pub mod rational;
pub mod structure;

pub use error::{Error, Result};
pub use graph::{SimpleGraph, TreeGraph};
