//! Positive and negative square energies of graphs.
//!
//! `s⁺(G)` and `s⁻(G)` are the sums of squares of the positive and negative
//! adjacency eigenvalues. The crate bundles a dense symmetric eigensolver,
//! the spectral split `A = A⁺ − A⁻`, exact graph invariants, gluing and
//! vertex-removal lower bounds, analytic formulas for paths and cycles,
//! isomorph-free enumeration with graph6 I/O, and exhaustive checkers for
//! the inequalities that tie them together.

pub mod canon;
pub mod closed_forms;
pub mod conjecture;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod gluing;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod removal;
pub mod spectral;
pub mod sweep;

pub use error::{Error, Result};
pub use family::{FamilySpec, Figure};
pub use graph::Graph;
pub use spectral::{Sign, SymMatrix};
