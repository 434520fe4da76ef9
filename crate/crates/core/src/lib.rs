//! Andrásfai graphs, exact metric dimension, and mechanical checks of the
//! resolving-set constructions for Andrásfai graphs, their complements and
//! their Cartesian products with paths and cycles.
//!
//! - [`graph`]: graph construction (circulants, Andrásfai graphs, products,
//!   complements, line graphs) and graph6 / JSON I/O.
//! - [`metric`]: distances, codes and resolving-set certificates.
//! - [`solver`]: exact metric dimension by branch and bound, plus bounds.
//! - [`andrasfai`]: the explicit constructions and their verification.
//! - [`cli`]: the `metdim` command-line driver.

pub mod andrasfai;
pub mod cli;
pub mod error;
pub mod graph;
pub mod metric;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
pub use metric::{Code, DistanceMatrix, ResolvingCertificate};
pub use solver::{metric_dimension_exact, DimensionReport, SearchBudget};
