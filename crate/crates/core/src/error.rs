use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: u32, n: usize },
    #[error("edge {0:?} repeats a vertex")]
    RepeatedVertex([u32; 3]),
    #[error("blow-up needs one size per vertex: got {got}, expected {expected}")]
    BlowUpArity { got: usize, expected: usize },
    #[error("blow-up class sizes must be positive")]
    ZeroClassSize,
    #[error("unknown graph name `{0}`")]
    UnknownGraph(String),
    #[error("malformed canonical key: {0}")]
    BadKey(String),
    #[error("enumeration on {0} vertices exceeds the size guard (use the unbounded variant)")]
    SizeGuard(usize),
    #[error("type graph is not family-free, so no flags exist over it")]
    TypeNotAdmissible,
    #[error("incompatible flag sizes: type {type_size}, flags {flag_size}, targets {target_size}")]
    IncompatibleSizes {
        type_size: usize,
        flag_size: usize,
        target_size: usize,
    },
    #[error("edge density needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("the family excludes every graph on {0} vertices")]
    NoAdmissibleGraphs(usize),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid construction: {0}")]
    InvalidConstruction(String),
    #[error("point is not on the simplex: {0}")]
    NotOnSimplex(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("non-finite solver value at position {0}")]
    NonFinite(usize),
}
