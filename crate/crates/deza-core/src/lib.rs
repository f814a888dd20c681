//! Toolkit for Deza graphs: recognition and classification, parameter
//! formulas, adjacency spectra, dual Seidel switching, cyclotomic scheme
//! constructions over small finite fields, and exhaustive enumeration of
//! circulant Deza graphs.
//!
//! A k-regular graph on n vertices is a Deza graph with parameters
//! (n, k, b, a) if the number of common neighbours of a pair of distinct
//! vertices takes exactly the two values b and a (b >= a), independent of
//! adjacency. When the value is determined by adjacency the graph is
//! strongly regular; the interesting ("strictly Deza") case is diameter 2
//! and not strongly regular.

pub mod analysis;
pub mod codec;
pub mod constructions;
pub mod cyclotomic;
pub mod enumeration;
pub mod error;
pub mod field;
pub mod graph;
pub mod iso;
pub mod spectra;

pub use analysis::{classify, DezaReport, GraphKind};
pub use error::Error;
pub use graph::{cayley_graph, Graph, VertexPermutation};
