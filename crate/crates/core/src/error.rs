use thiserror::Error;

use crate::graph::VertexId;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is disconnected ({} components)", .0.len())]
    Disconnected(Vec<Vec<VertexId>>),
    #[error("edge ({0}, {1}) has non-positive conductance {2}")]
    NonPositiveConductance(VertexId, VertexId, f64),
    #[error("vertex {0} has negative mass {1}")]
    NegativeMass(VertexId, f64),
    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(VertexId, VertexId),
    #[error("vertex id {0} out of range for a graph of {1} vertices")]
    VertexOutOfRange(VertexId, usize),
    #[error("mass/conductance lengths mismatch: {masses} masses, {conductances} conductances")]
    LengthMismatch { masses: usize, conductances: usize },
    #[error("invalid range [{0}, {1}]")]
    BadRange(f64, f64),
    #[error("no edge between {0} and {1}")]
    NoSuchEdge(VertexId, VertexId),
    #[error("split fractions must be positive and sum to 1")]
    FractionsInvalid,
    #[error("vertex set is empty")]
    EmptySet,
    #[error("vertex sets overlap")]
    SetsOverlap,
    #[error("potential must take both strictly positive and strictly negative values")]
    SignCondition,
    #[error("vector has length {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("matrix is not positive definite (pivot {0})")]
    NotPositiveDefinite(usize),
    #[error("Jacobi iteration did not converge after {0} sweeps")]
    NoConvergence(usize),
    #[error("vertex {0} has zero mass")]
    ZeroMass(VertexId),
    #[error("boundary set must be a proper nonempty subset of the vertices")]
    BadBoundary,
    #[error("the Neumann problem needs at least two vertices")]
    TooFewVertices,
    #[error("no fixed vertices given")]
    EmptyFixedSet,
    #[error("vector vanishes on the active coordinates")]
    ZeroVector,
    #[error("vector is nonzero on boundary vertex {0}")]
    BoundaryViolated(VertexId),
    #[error("a and b must be distinct vertices")]
    SameVertex,
    #[error("graph is not a path v0 - v1 - ... - vN")]
    NotAPath,
    #[error("all interior masses are zero")]
    ZeroInteriorMass,
    #[error("enumeration over {0} vertices exceeds the limit of {1}")]
    TooLarge(usize, usize),
    #[error("vector takes both signs")]
    MixedSigns,
    #[error("vector is nonzero on the boundary")]
    BoundaryNotZero,
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("line {line}: unknown vertex `{name}`")]
    UnknownVertex { name: String, line: usize },
    #[error("line {line}: vertex `{name}` declared twice")]
    DuplicateVertex { name: String, line: usize },
    #[error("unknown vertex `{0}`")]
    UnknownLabel(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("line {line}: duplicate edge `{a}` - `{b}`")]
    DuplicateEdgeDecl { a: String, b: String, line: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
