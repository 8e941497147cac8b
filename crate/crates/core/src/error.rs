use alloc::string::String;

/// Errors produced by the analysis routines.
#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("a sidigraph needs at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("duplicate arc ({tail}, {head})")]
    DuplicateArc { tail: usize, head: usize },
    #[error("arc ({tail}, {head}) is not present")]
    MissingArc { tail: usize, head: usize },
    #[error("edge {{{u}, {v}}} is not a valid sigraph edge")]
    InvalidEdge { u: usize, v: usize },
    #[error("order {j} outside 1..={order}")]
    InvalidOrder { j: usize, order: usize },
    #[error("cycle enumeration exceeded the budget of {cap} items")]
    CycleBudgetExceeded { cap: usize },
    #[error("order {order} exceeds the bound {bound} of this method")]
    OracleBoundExceeded { order: usize, bound: usize },
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("root finder did not converge after {iterations} iterations")]
    ConvergenceFailure { iterations: usize },
    #[error("polynomial has degree 0; there are no roots")]
    ConstantPolynomial,
    #[error("quadrature failed: estimated error {error:e} above tolerance {tolerance:e} after {subdivisions} subdivisions")]
    QuadratureFailure {
        error: f64,
        tolerance: f64,
        subdivisions: usize,
    },
    #[error("invalid quadrature configuration: {0}")]
    InvalidQuadrature(&'static str),
    #[error("sidigraph is not in the first alternating class (every 4k-cycle negative, every (4k+2)-cycle positive, bipartite)")]
    NotInDelta1,
    #[error("sidigraph is not bipartite")]
    NotBipartite,
    #[error("invalid family specification: {0}")]
    InvalidFamilySpec(String),
    #[error("product order {order} exceeds the bound {bound}")]
    SizeOverflow { order: usize, bound: usize },
    #[error("search budget of {budget} candidates exceeded")]
    SearchBudgetExceeded { budget: u64 },
    #[error("fixture {name} failed validation: {reason}")]
    FixtureValidationFailure { name: String, reason: String },
    #[error("coefficient vector contains a negative entry at index {index}")]
    NegativeCoefficient { index: usize },
    #[error("polynomial is not a characteristic polynomial: {0}")]
    NotCharacteristic(&'static str),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
