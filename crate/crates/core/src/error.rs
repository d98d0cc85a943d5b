use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },

    #[error("index {index} out of range (valid: {min}..={max})")]
    IndexOutOfRange { index: usize, min: usize, max: usize },

    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },

    #[error("line {line}: edge ({i}, {j}) listed more than once")]
    DuplicateEdge { line: usize, i: usize, j: usize },

    #[error("line {line}: edge weight {weight} is not a positive finite number")]
    NonPositiveWeight { line: usize, weight: f64 },

    #[error("vertex count mismatch: header says {header}, caller says {given}")]
    VertexCountMismatch { header: usize, given: usize },

    #[error("vertex count must be positive")]
    EmptyGraph,

    #[error("eigensolver did not converge: {0}")]
    ConvergenceFailure(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("duplicate interpolation abscissa {0}")]
    DuplicateAbscissa(f64),

    #[error("kernel needs at least one coefficient or point")]
    EmptyKernel,

    #[error("scale {0} is not a positive finite real")]
    InvalidScale(f64),

    #[error("scale set is empty")]
    EmptyScaleSet,

    #[error("vector system is empty")]
    EmptySystem,

    #[error("generator set is empty")]
    EmptyGeneratorSet,

    #[error("generator count mismatch: {left} vs {right}")]
    GeneratorCountMismatch { left: usize, right: usize },

    #[error("frame operator is singular: |ghat({index})| = {magnitude:e}")]
    SingularFrameOperator { index: usize, magnitude: f64 },

    #[error("eigenvalues {a} and {b} do not belong to the same eigenspace")]
    NotAnEigenspace { a: usize, b: usize },
}
