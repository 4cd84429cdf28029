//! Exact matching-theoretic toolkit for small graphs: maximum and maximal
//! matchings, equimatchability and factor-criticality, isolating matchings,
//! regular-graph census and structural decomposition audits.

pub mod canon;
pub mod census;
pub mod classify;
pub mod cli;
pub mod decomposition;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod independence;
pub mod matching;
pub mod vertex_set;

pub use canon::{canonicalize, isomorphic, CanonicalForm};
pub use families::{build_family, recognize_family, FamilySpec};
pub use graph::{Graph, GraphError};
pub use matching::{Matching, MatchingError};
pub use vertex_set::VertexSet;
