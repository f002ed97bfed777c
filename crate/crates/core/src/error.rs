use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("malformed graph6 header")]
    MalformedHeader,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    InvalidByte { byte: u8, offset: usize },
    #[error("truncated bit block: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{found} trailing bytes after the bit block")]
    TrailingBytes { found: usize },
    #[error("vertex count {0} outside supported range 1..=64")]
    VertexCountOutOfRange(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error("vertex count {0} outside supported range 1..=64")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(usize, usize),
    #[error("no total dominating set: vertex {0} has in-degree 0")]
    InvalidOrientation(usize),
    #[error("arc list does not orient exactly the edges of the graph: {0}")]
    ArcMismatch(String),
    #[error("graph is not in class C: component containing vertex {0} is a tree")]
    NotClassC(usize),
    #[error("{what} limit exceeded: {actual} > {limit}")]
    Budget {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_budget(what: &'static str, limit: usize, actual: usize) -> Result<()> {
    if actual > limit {
        Err(Error::Budget {
            what,
            limit,
            actual,
        })
    } else {
        Ok(())
    }
}
