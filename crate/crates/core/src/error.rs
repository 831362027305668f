use thiserror::Error;

/// Errors raised by graph, complex and homology operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error("vertex set is not independent")]
    NotIndependent,
    #[error("{family} requires n >= {min}, got {n}")]
    FamilyTooSmall {
        family: &'static str,
        min: usize,
        n: usize,
    },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list: {0}")]
    EdgeList(String),
    #[error("facet list line {line}: {msg}")]
    FacetList { line: usize, msg: String },
    #[error("{0:?} is not a face of the complex")]
    NotAFace(Vec<u32>),
    #[error("vertex {0} is not in the ground set")]
    NotInGroundSet(u32),
    #[error("operation undefined on the void complex")]
    VoidComplex,
    #[error("boundary degree {degree} out of range for complex of dimension {dim}")]
    DegreeOutOfRange { degree: isize, dim: isize },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("prime field F_{0} is not supported (primes below 100 only)")]
    UnsupportedPrime(u64),
    #[error("unknown field {0:?}, expected q, f2, f3, f5 or fP")]
    UnknownField(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
