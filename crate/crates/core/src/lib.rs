//! Standard decompositions of labeled graphs and Connect Four decompositions
//! of finite staircases, with the transformations relating the two problems.

pub mod bridge;
pub mod counting;
pub mod decomposer;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod games;
pub mod graph;
pub mod staircase;
pub mod transform;

pub use error::{DecomposeError, FormatError, GamesError, GraphError, StaircaseError};
pub use graph::{Component, Decomposition, LabeledGraph, NodeId, NodeSet};
pub use staircase::{Point, StandardSet};

