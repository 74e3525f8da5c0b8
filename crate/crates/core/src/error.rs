use thiserror::Error;

use crate::graph::NodeId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid node id {0:?}")]
    InvalidId(String),
    #[error("duplicate node {0}")]
    DuplicateNode(NodeId),
    #[error("duplicate edge {0} -> {1}")]
    DuplicateEdge(NodeId, NodeId),
    #[error("loop at node {0}")]
    Loop(NodeId),
    #[error("unknown node {0}")]
    UnknownNode(NodeId),
    #[error("graph is not standard")]
    NotStandard,
    #[error("every label is zero")]
    AllZero,
    #[error("members do not share the host structure")]
    HostMismatch,
    #[error("support is not a standard component")]
    NotAComponent,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecomposeError {
    #[error("graph is not standard")]
    NotStandard,
    #[error("pivot {0} has label zero")]
    ZeroPivot(NodeId),
    #[error("pivot {0} does not carry the minimal positive label")]
    NotMinimalPivot(NodeId),
    #[error("unknown node {0}")]
    UnknownNode(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StaircaseError {
    #[error("dimension must be at least {0}")]
    DimensionTooSmall(usize),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("point {0} has the wrong number of coordinates")]
    BadPoint(String),
    #[error("cells are not downward closed: {0} is present but {1} is not")]
    NotDownwardClosed(String, String),
    #[error("set is infinite: no corner on axis {0}")]
    Infinite(usize),
    #[error("heights are not monotone at {0}")]
    NotMonotone(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("member is not a standard set: {0}")]
    NotAStandardSet(String),
    #[error("graph is not standard")]
    NotStandard,
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GamesError {
    #[error("partition depth {depth} does not match dimension {dim}")]
    DepthMismatch { depth: usize, dim: usize },
    #[error("size and dimension must be positive")]
    NonPositive,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Staircase(#[from] StaircaseError),
}
