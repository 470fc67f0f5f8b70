//! Finite metric spaces with integer distances in `{1, ..., r}`.
//!
//! A metric coloring of the complete graph on `n` vertices assigns every pair a
//! color in `[1, r]` so that every triangle obeys the triangle inequality. The
//! crate counts, enumerates and samples such colorings, analyses their
//! structure relative to the extremal family `C_r(n)`, checks the color-set
//! lemmas behind the counting bounds exhaustively on small instances, and
//! implements the explicit constructions (amalgamation, the injection `f`,
//! matching families and extension axioms).
//!
//! Vertices are 0-based throughout the Rust API. Serialized output (JSON)
//! uses 1-based vertex labels.

pub mod bigfmt;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod exec;
pub mod model;
pub mod one_based;
pub mod partitions;
pub mod structure;
pub mod verdict;
pub mod weights;

pub use error::{Error, Result};
pub use exec::Exec;
pub use model::{ColorSet, ColorSetGraph, EditSet, MetricColoring, Params};
pub use verdict::{Counterexample, LemmaVerdict};
