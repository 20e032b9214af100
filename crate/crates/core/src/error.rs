use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),

    #[error("graph6: {0}")]
    Graph6(String),
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("edge list: {0}")]
    EdgeList(String),

    #[error("power iteration did not reach tolerance {tol:e} after {iterations} iterations")]
    NoConvergence { tol: f64, iterations: usize },
    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),

    #[error("invalid {kind} parameters: {message}")]
    InvalidFamily { kind: String, message: String },
    #[error("no closed form for {0}")]
    NoClosedForm(String),
    #[error("family grammar: {0}")]
    FamilyGrammar(String),

    #[error("transform precondition failed: {0}")]
    Precondition(String),
    #[error("invalid partition pair: {0}")]
    InvalidPartition(String),
    #[error("tree is a path; every pendant removal shortens it")]
    PathExcluded,
    #[error("graph is not a tree")]
    NotATree,

    #[error("order {n} exceeds the {class} enumeration cap of {cap}")]
    OverCap { class: String, n: usize, cap: usize },
    #[error("infeasible enumeration request: {0}")]
    Infeasible(String),

    #[error("unknown conjecture id {0:?}")]
    UnknownConjecture(String),
    #[error("{0} has no closed bound; it can only be checked by extremal-family scans")]
    ExtremalFamilyOnly(String),
    #[error("conjectures are stated for n >= 4, got n = {0}")]
    OrderTooSmall(usize),
    #[error("{0}")]
    OutOfRange(String),

    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
