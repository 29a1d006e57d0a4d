use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rotation system is not a planar embedding: {0}")]
    NonPlanarEmbedding(String),
    #[error("inconsistent rotation system: {0}")]
    InconsistentRotation(String),
    #[error("map is not 2-connected")]
    NotTwoConnected,
    #[error("not a bipartite quadrangulation: {0}")]
    NotQuadrangulation(String),
    #[error("{0} and {1} are not adjacent")]
    NotAnEdge(usize, usize),
    #[error("vertex {0} does not lie on a face containing the split edge")]
    VertexNotOnFace(usize),
    #[error("cursor does not match the hexagonal configuration: {0}")]
    InvalidCursor(String),
    #[error("invalid degree tuple: {0}")]
    InvalidTuple(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("map is not polyhedral")]
    NotPolyhedral,
    #[error("radial carries no vertex/face index labelling")]
    MissingLabels,
    #[error("high-degree vertex labels are unavailable")]
    LabelsUnavailable,
    #[error("order {order} exceeds the enumeration cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("degree sum is odd")]
    OddDegreeSum,
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
