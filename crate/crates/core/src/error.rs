use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid connection set: {0}")]
    InvalidConnectionSet(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph {0} is disconnected")]
    Disconnected(String),

    #[error("graph has no edges")]
    Edgeless,

    #[error("distance exceeds the 8-bit range (max 254)")]
    DistanceOverflow,

    #[error("code entry {0} outside {{0,1,2}}")]
    CodeOutOfRange(u8),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("invalid graph spec: {0}")]
    InvalidSpec(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
