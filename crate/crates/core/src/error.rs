use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("{u}-{v} is not an edge")]
    NotAnEdge { u: usize, v: usize },

    #[error("hyperedge {0} is empty")]
    EmptyHyperedge(usize),

    #[error("hyperedge index {index} out of range (m = {m})")]
    HyperedgeOutOfRange { index: usize, m: usize },

    #[error("vertex {0} lies in no hyperedge")]
    IsolatedVertex(usize),

    #[error("ordering is not a permutation of the vertex set")]
    NotAPermutation,

    #[error("ordering is not a perfect elimination ordering: {0:?}")]
    NotAPeo([usize; 3]),

    #[error("graph is not chordal")]
    NotChordal,

    #[error("graph is not dually chordal")]
    NotDuallyChordal,

    #[error("hypergraph is not alpha-acyclic")]
    NotAlphaAcyclic,

    #[error("graph has no edges")]
    Edgeless,

    #[error("method {method} is not applicable: {reason}")]
    MethodInapplicable {
        method: &'static str,
        reason: String,
    },

    #[error("instance exceeds the exhaustive-search gate: {what} = {value} > {limit}")]
    GateExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },
}
