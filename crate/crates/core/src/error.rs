use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("missing edge {{{0}, {1}}}")]
    MissingEdge(usize, usize),
    #[error("graphs have different vertex counts ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("colour {colour} outside 1..={r}")]
    ColourOutOfRange { colour: u8, r: u8 },
    #[error("colouring needs r >= 2, got {0}")]
    TooFewColours(u8),
    #[error("colour list has {got} entries, graph has {expected} edges")]
    ColouringLength { expected: usize, got: usize },
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("input size {n} exceeds the exact-check guard {guard}")]
    GuardExceeded { n: usize, guard: usize },
    #[error("requested {m} edges but only {max} pairs exist")]
    TooManyEdges { m: usize, max: usize },
    #[error("set {set} is not independent: edge {{{u}, {v}}}")]
    NotIndependent { set: &'static str, u: usize, v: usize },
    #[error("{n} is not divisible by 2r = {two_r}")]
    IndivisibleN { n: usize, two_r: usize },
    #[error("independent set has {got} vertices, need at least {need}")]
    SetTooSmall { got: usize, need: usize },
    #[error("{m} extra edges, must be fewer than n/r = {bound}")]
    TooManyExtraEdges { m: usize, bound: usize },
    #[error("no path of the requested length {0}")]
    TargetUnreachable(usize),
    #[error("no monochromatic path on {0} vertices")]
    NoPath(usize),
    #[error("path endpoints have no common neighbour outside the path")]
    NoClosingVertex,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("Hamilton cycle search exhausted its budget")]
    SearchExhausted,
    #[error("no connecting edge between the path windows")]
    NoConnectingEdge,
    #[error("absorber junction {0} could not be connected")]
    ConnectionFailed(usize),
    #[error("no absorbing edge available for vertex {0}")]
    AbsorptionFailed(usize),
    #[error("structure violation: {0}")]
    StructureViolation(String),
    #[error("pipeline failed after {attempts} attempts: {last}")]
    PipelineFailed { attempts: usize, last: String },
    #[error("graph has no Hamilton cycle")]
    NoHamiltonCycle,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid config: {0}")]
    ConfigInvalid(String),
}
