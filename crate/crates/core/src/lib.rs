//! Exact machinery for path partitions of small digraphs: orthogonal
//! partitions, α- and BE-diperfection, forbidden induced odd cycles, and the
//! `D⃗_{2k+1}` family of super-orientations of complements of odd cycles
//! that have no path partition orthogonal to `{x_0, x_2k}`.

pub mod cert;
pub mod constructive;
pub mod digraph;
pub mod diperfection;
pub mod edgelist;
pub mod error;
pub mod explorer;
pub mod generators;
pub mod limits;
pub mod paths;
pub mod recognition;

pub use digraph::{Digraph, Induced, Vertex, VertexSet};
pub use error::{Error, Result};
