use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph has {0} vertices; at most {max} are supported", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) is not in the graph")]
    MissingEdge(usize, usize),
    #[error("invalid vertex split: {0}")]
    InvalidSplit(String),
    #[error("graph6 parse error at byte {offset}: {msg}")]
    Graph6 { offset: usize, msg: String },
    #[error("unsupported pattern: {0}")]
    UnsupportedPattern(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("host has {n} vertices; this routine accepts at most {max}")]
    HostTooLarge { n: usize, max: usize },
    #[error("minor chain is not ascending: {lower} is not a minor of {upper}")]
    ChainNotAscending { lower: String, upper: String },
    #[error("graph lies below the chain: bottom element {0} is not a minor")]
    BelowChain(String),
    #[error("graph lies above the chain: top element {0} is a minor")]
    AboveChain(String),
    #[error("no higher-wheel candidate stored for i = {0}; run the identification scan first")]
    CandidateUnavailable(usize),
    #[error("candidate store: {0}")]
    Store(String),
}

impl Error {
    /// True for errors caused by inputs exceeding a size limit.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::TooManyVertices(_) | Error::HostTooLarge { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
