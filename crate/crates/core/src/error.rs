use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("repeated edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("orientation does not cover exactly the edge set")]
    OrientationMismatch,
    #[error("not a permutation of the vertex set")]
    BadPermutation,
    #[error("matrix is not a Hadamard matrix")]
    NotHadamard,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("edge list parse error at line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix order {0} exceeds the supported bound")]
    TooLarge(usize),
    #[error("index {index} out of range for order {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("operation on the zero polynomial")]
    ZeroPolynomial,
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("basis vectors are linearly dependent")]
    DependentBasis,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectralError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertices must be distinct")]
    SameVertex,
    #[error("eigenvalue support of vertex {0} is not all-integer")]
    NonIntegerSupport(usize),
    #[error("{0} is not a Laplacian eigenvalue")]
    NotAnEigenvalue(i64),
    #[error("not applicable: {0}")]
    NotApplicable(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RevivalError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error("fewer than three vertices; use the two-vertex closed form")]
    SpecialSmall,
    #[error("not applicable: {0}")]
    NotApplicable(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("matrix is not symmetric (deviation {0:e})")]
    Asymmetric(f64),
    #[error("matrix order {0} exceeds the supported bound")]
    TooLarge(usize),
    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
