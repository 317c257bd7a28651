use thiserror::Error;

/// Errors reported by validation, parsing and the exact algorithms.
///
/// Every variant that concerns a specific cell carries the offending id so
/// callers can point at the bad input directly.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("dangling {kind} reference: {id}")]
    DanglingRef { kind: &'static str, id: String },

    #[error("duplicate {kind} id: {id}")]
    DuplicateId { kind: &'static str, id: String },

    #[error("non-closed walk in face {0}")]
    NonClosedWalk(String),

    #[error("face {0} has an empty walk")]
    EmptyWalk(String),

    #[error("edge {0} is not incident with any face")]
    EdgeWithoutFace(String),

    #[error("unknown vertex id: {0}")]
    UnknownVertex(String),

    #[error("unknown edge id: {0}")]
    UnknownEdge(String),

    #[error("unknown element id: {0}")]
    UnknownElement(String),

    #[error("ground sets differ: {0}")]
    GroundMismatch(String),

    #[error("ground set of size {size} exceeds the desk-scale bound {bound}")]
    DeskScale { size: usize, bound: usize },

    #[error("loop edge {0} not allowed here")]
    LoopEdge(String),

    #[error("inconsistent edge identification: {0}")]
    BadIdentification(String),

    #[error("invalid split order entry: {0}")]
    BadSplitOrder(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}
