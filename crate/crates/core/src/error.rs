use alloc::string::String;

/// Everything that can go wrong while building or analysing a network.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("graph is not connected")]
    DisconnectedGraph,
    #[error("invalid edge ({a}, {b}): {reason}")]
    InvalidEdge { a: usize, b: usize, reason: InvalidEdgeReason },
    #[error("vertex id {id} out of range for {vertex_count} vertices")]
    BadVertexId { id: usize, vertex_count: usize },
    #[error("({a}, {b}) is not an edge of the network")]
    NoSuchEdge { a: usize, b: usize },
    #[error("removing ({a}, {b}) would disconnect the network")]
    WouldDisconnect { a: usize, b: usize },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("numerical failure: {0}")]
    NumericalFailure(String),
    #[error("resistance {0} is at or above 1: the edge is numerically a cut-edge")]
    CutEdgeResistance(f64),
    #[error("network has non-unit conductances")]
    NonUnitConductance,
    #[error("random walk exceeded {0} steps")]
    WalkCapExceeded(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvalidEdgeReason {
    SelfLoop,
    Duplicate,
    NonPositiveConductance,
}

impl core::fmt::Display for InvalidEdgeReason {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            InvalidEdgeReason::SelfLoop => "self-loop",
            InvalidEdgeReason::Duplicate => "duplicate edge",
            InvalidEdgeReason::NonPositiveConductance => "conductance must be positive and finite",
        })
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
