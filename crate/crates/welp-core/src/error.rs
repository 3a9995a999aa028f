use thiserror::Error;

/// Errors shared across the geometry stack.
///
/// Every operation with a nontrivial precondition reports violations through
/// this enum instead of panicking, so callers (and the CLI) can map them to
/// usage errors. Panics are reserved for broken internal invariants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polygon must have at least two vertices")]
    TooFewVertices,

    #[error("polygon is not closed (first and last vertex differ)")]
    NotClosed,

    #[error("polygon is not simple")]
    NotSimple,

    #[error("polygon is not positively oriented")]
    NotPositivelyOriented,

    #[error("polygon has zero signed area, orientation is undefined")]
    ZeroArea,

    #[error("polygon has a zero-length edge at index {edge}")]
    ZeroLengthEdge { edge: usize },

    #[error("vertex ({x}, {y}) lies outside the lattice box of radius {radius}")]
    OutOfBox { x: String, y: String, radius: i64 },

    #[error("edge endpoints share their first coordinate, cancellation rectangle is empty")]
    DegenerateEdge,

    #[error("vertex triple at index {index} is not pairwise distinct")]
    DegenerateTriple { index: usize },

    #[error("edges [p{i}, p{}] and [p{j}, p{}] intersect, identity precondition fails", i + 1, j + 1)]
    EdgesIntersect { i: usize, j: usize },

    #[error("index {index} out of range for polygon with {n} distinct vertices")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("polygon has non-integer vertices, lattice operations are undefined")]
    NonIntegerVertices,

    #[error("rectangle sides must be positive, got {a} x {b}")]
    NonPositiveSide { a: i64, b: i64 },

    #[error("parameter {name} must be at least {min}, got {value}")]
    ParameterTooSmall { name: &'static str, min: i64, value: i64 },

    #[error("generator gave up after {attempts} rejected draws")]
    ExhaustedRetries { attempts: u32 },

    #[error("cannot parse polygon document: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
