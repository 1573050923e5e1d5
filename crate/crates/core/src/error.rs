use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong across the toolkit.
///
/// Variants group into three families that callers (the CLI in particular)
/// map to distinct exit codes: malformed input, exhausted budgets, and
/// mathematical anomalies.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge #{index} {{{u},{v}}} is a loop")]
    LoopEdge { index: usize, u: usize, v: usize },
    #[error("edge #{index} {{{u},{v}}} duplicates edge #{first}")]
    DuplicateEdge {
        index: usize,
        first: usize,
        u: usize,
        v: usize,
    },
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("more than {cap} cycles; instance is beyond desk scale")]
    CycleBudgetExceeded { cap: usize },
    #[error("invalid family parameters: {0}")]
    InvalidFamilyParameters(String),
    #[error("edge polytope of a graph without edges is empty")]
    EmptyPolytope,
    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("lattice enumeration would visit {needed} candidates (cap {cap})")]
    EnumerationBudgetExceeded { needed: u128, cap: u128 },
    #[error("cycle of length {0} is odd")]
    OddCycle(usize),
    #[error("graph is not bipartite")]
    NonBipartite,
    #[error("{edges} edges exceed the subset cap of {cap}")]
    SubsetBudgetExceeded { edges: usize, cap: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is a forest; its toric ideal is zero")]
    Forest,
    #[error("no two even cycles of length {length} meet the witness conditions")]
    NoSecondCycle { length: usize },
    #[error("scan limit is {cap} vertices, requested {requested}")]
    ScanBudgetExceeded { requested: usize, cap: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("assertion failed: {0}")]
    Anomaly(String),
}

impl Error {
    /// True for errors raised because a configured cap was hit.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::CycleBudgetExceeded { .. }
                | Error::EnumerationBudgetExceeded { .. }
                | Error::SubsetBudgetExceeded { .. }
                | Error::ScanBudgetExceeded { .. }
        )
    }

    pub fn is_anomaly(&self) -> bool {
        matches!(self, Error::Anomaly(_))
    }
}
