use thiserror::Error;

use crate::face::Face;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex label {0} exceeds the supported maximum of {max}", max = Face::MAX_LABEL)]
    LabelOutOfRange(u64),

    #[error("face {0} is not a face of the complex")]
    FaceNotInComplex(Face),

    #[error("deleting the empty face is not supported")]
    EmptyDeletion,

    #[error("requested dimension {requested} exceeds complex dimension {dim}")]
    DimensionOutOfRange { requested: isize, dim: isize },

    #[error("({free_face}, {maximal_face}) is not a free pair")]
    NotFree { free_face: Face, maximal_face: Face },

    #[error("join requires disjoint vertex sets; both contain {0}")]
    OverlappingJoin(Face),

    #[error("search budget of {budget} nodes exhausted")]
    BudgetExceeded { budget: u64 },

    #[error("complex is not pure")]
    NotPure,

    #[error("{vertices} vertices exceed the cap of {cap} for this computation")]
    TooManyVertices { vertices: usize, cap: usize },

    #[error("facet ordering is not a permutation of the complex's facets")]
    InvalidOrdering,

    #[error("hypergraph edge is empty")]
    EmptyEdge,

    #[error("vertex {vertex} is outside [1, {n}]")]
    VertexOutOfRange { vertex: u64, n: u32 },

    #[error("vertex {0} is isolated")]
    IsolatedVertex(u32),

    #[error("target set {0} cannot be dominated")]
    Undominatable(Face),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
