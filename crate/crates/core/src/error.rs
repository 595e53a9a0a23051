use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range (graph has {vertex_count} vertices)")]
    Range { vertex: usize, vertex_count: usize },

    #[error("index {index} out of range ({len} available)")]
    Index { index: usize, len: usize },

    #[error("{0}")]
    Domain(String),

    #[error("subdivision error: {0}")]
    Subdivision(String),

    #[error("path insertion not applicable: {0}")]
    NotApplicable(String),

    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("chromatic search budget exceeded; bounds {lower}..={upper}")]
    ChromaticBudget { lower: usize, upper: usize },

    #[error("invalid certificate at {node}: {reason}")]
    Certificate { node: String, reason: String },

    #[error("json: {0}")]
    Json(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for the budget-exhaustion variants.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. } | Error::ChromaticBudget { .. })
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
