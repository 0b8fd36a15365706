//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),

    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),

    #[error("endpoint {vertex} out of range for a graph on {n} vertices")]
    EndpointOutOfRange { vertex: usize, n: usize },

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("polynomial is not divisible by x^{0}")]
    NotDivisible(usize),

    #[error("odd-power coefficient present at x^{0}")]
    OddCoefficientPresent(usize),

    #[error("polynomial is not real-rooted: certified {found} real roots, degree {degree}")]
    NotRealRooted { found: usize, degree: usize },

    #[error("graph is not connected")]
    NotConnected,

    #[error("graph has no edges")]
    NoEdges,

    #[error("maximum degree {0} is smaller than 2")]
    MaxDegreeTooSmall(usize),

    #[error("minimum degree {0} is not 1")]
    MinDegreeNotOne(usize),

    #[error("root-list degree mismatch: {f} vs {g} (expected deg f = deg g - 1)")]
    DegreeMismatch { f: usize, g: usize },

    #[error("sequence length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("vertex {0} is not a member of the given subset")]
    VertexNotInH(usize),

    #[error("graph is neither a tree nor unicyclic")]
    NotTreeOrUnicyclic,

    #[error("not a TU-subgraph: a component has {edges} edges on {vertices} vertices")]
    NotTuSubgraph { edges: usize, vertices: usize },

    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),

    #[error("nonpositive weight on edge {{{0}, {1}}}")]
    NonpositiveWeight(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
