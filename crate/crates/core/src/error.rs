use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("multiple edges between {0} and {1}")]
    MultiEdge(usize, usize),

    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("not a cycle: {0}")]
    NotACycle(String),

    #[error("graph has no pendant vertex")]
    NoPendant,

    #[error("cycles share vertices; the cycle contraction is undefined")]
    CyclesNotDisjoint,

    #[error("graph is not a connected unicyclic graph")]
    NotUnicyclic,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("size guard exceeded: {0}")]
    TooLarge(String),

    #[error("graph6: {0}")]
    Graph6(String),
}
