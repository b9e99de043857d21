use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph on {n} vertices exceeds the vertex cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("degree sequences have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),

    #[error("canonical form is only available for n <= {cap}, got n = {n}")]
    CanonCapExceeded { n: usize, cap: usize },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("invalid parameters: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("pattern is not a forest")]
    NotAForest,

    #[error("graph is not connected")]
    Disconnected,

    #[error("stale pendent site: {0}")]
    StaleSite(String),

    #[error("reference vertex {v} has degree {degree}, need maximum degree at least {required} (max degree is {max_degree})")]
    DegreeCondition {
        v: usize,
        degree: usize,
        max_degree: usize,
        required: usize,
    },

    #[error("oracle supports n <= {cap}{hint}, got n = {n}", hint = if *.cap < 9 { " (9 with the cap override)" } else { "" })]
    OracleCap { n: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
