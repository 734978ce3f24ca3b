use thiserror::Error;

/// Everything that can go wrong in the library.
///
/// Parse failures, precondition violations, and verification failures are
/// kept apart so the CLI can map them onto distinct exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: vertex id {id} out of range for n = {n}")]
    IdOutOfRange { line: usize, id: usize, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: edge {u}-{v} closes a cycle")]
    CycleDetected { line: usize, u: usize, v: usize },
    #[error("input is disconnected: {components} components over {n} vertices")]
    Disconnected { n: usize, components: usize },

    #[error("vertex {vertex} out of range for a tree of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("operation requires order at least {required}, tree has {actual}")]
    OrderTooSmall { required: usize, actual: usize },
    #[error("root {root} has degree {degree}; at least {required} required")]
    RootDegree { root: usize, degree: usize, required: usize },
    #[error("invalid parameters: {0}")]
    InvalidSpec(String),
    #[error("tree would have {requested} vertices, above the cap of {cap}")]
    SizeCap { requested: String, cap: usize },
    #[error("no tree of order {n} has maximum degree {delta}")]
    EmptyClass { n: usize, delta: usize },

    #[error("counterexample: {0}")]
    Counterexample(String),
}

impl Error {
    /// True for failures that mean a verified statement turned out false.
    pub fn is_counterexample(&self) -> bool {
        matches!(self, Error::Counterexample(_))
    }

    /// True for failures of the edge-list reader.
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            Error::Malformed { .. }
                | Error::IdOutOfRange { .. }
                | Error::SelfLoop { .. }
                | Error::DuplicateEdge { .. }
                | Error::CycleDetected { .. }
                | Error::Disconnected { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
