//! Treewidth, edge-count bounds and edge colouring for small graphs.
//!
//! The crate computes exact and smooth tree decompositions, checks edge
//! bounds and overfullness, computes exact and fractional chromatic indices,
//! builds extremal graph families, and sweeps graph corpora against the
//! associated class-one statements.

pub mod analysis;
pub mod bounds;
pub mod coloring;
pub mod constructions;
pub mod decomposition;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod scalar;
pub mod sweep;

pub use error::{Error, Result};
pub use graph::{DegreeSequence, Edge, Graph};

/// Exact rational used for reported values.
pub type Rational = num_rational::Ratio<i64>;
/// Arbitrary precision rational used inside the exact LP solver.
pub type BigRational = num_rational::BigRational;

/// Simplex over exact rationals.
pub type ExactLp = coloring::lp::LinearProgram<BigRational>;
/// Simplex over `f64`, for quick estimates.
pub type FloatLp = coloring::lp::LinearProgram<f64>;
