use thiserror::Error;

/// Everything that can go wrong while building or querying groups.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("malformed group: {0}")]
    MalformedGroup(String),

    #[error("group order {order} exceeds the configured cap of {cap}")]
    OrderCap { order: usize, cap: usize },

    #[error("enumeration cap exceeded: more than {cap} {what}")]
    EnumerationCap { what: &'static str, cap: usize },

    #[error("search budget of {budget} exhausted during {what}")]
    BudgetExceeded { what: &'static str, budget: u64 },

    #[error("element set is not {0}")]
    NotCertified(&'static str),

    #[error("element {element} is out of range for a group of order {order}")]
    ElementOutOfRange { element: usize, order: usize },

    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),

    #[error("G-structure mismatch: {0}")]
    GStructure(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{line}:{column}: {message}")]
    Syntax { line: usize, column: usize, message: String },

    #[error("input error: {0}")]
    Input(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
