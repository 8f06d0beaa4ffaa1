//! Combinatorial engine for regular directed complexes.
//!
//! The crate models shapes of higher-categorical pasting diagrams as oriented
//! graded posets, builds the inductive class of molecules and atoms, computes
//! maps with their collapse/inclusion factorisation, Gray products and joins,
//! horn inclusions, and the simplicial subdivision used for homological
//! checks. Everything is exact, finite, and deterministic.

pub mod error;
pub mod fixtures;
pub mod horns;
pub mod io;
pub mod iso;
pub mod maps;
pub mod nerve;
pub mod poset;
pub mod shapes;
pub mod snf;
pub mod subset;
pub mod suite;
pub mod tensor;

pub use error::Error;
pub use poset::{ElementId, OgPoset, Sign};
pub use subset::ClosedSubset;
