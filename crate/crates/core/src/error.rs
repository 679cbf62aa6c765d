use std::path::PathBuf;

/// Errors raised anywhere in the engine.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group order {order} exceeds the configured cap {cap}")]
    OrderCap { order: u128, cap: usize },

    #[error("subgroup enumeration aborted: {count} subgroups found so far, limit is {limit}")]
    SubgroupLimit { count: usize, limit: usize },

    #[error("element set is not closed under products and inverses")]
    NotClosed,

    #[error("not a subgroup of the ambient group")]
    NotSubgroup,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("{path}:{line}: {message}")]
    GroupFile {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("group spec parse error at column {column}: {message}\n  {input}\n  {caret}")]
    SpecParse {
        input: String,
        column: usize,
        caret: String,
        message: String,
    },

    #[error("{r} irreducible characters exceed the supported limit of {limit}")]
    TooManyIrreducibles { r: usize, limit: usize },

    #[error("character table computation failed: {0}")]
    CharacterTable(String),

    #[error("class function mismatch: {0}")]
    ClassFunction(String),

    #[error("certificate error: {0}")]
    Certificate(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Whether the error is a size refusal (order cap, subgroup limit,
    /// irreducible count) rather than bad input.
    pub fn is_limit(&self) -> bool {
        matches!(
            self,
            Error::OrderCap { .. } | Error::SubgroupLimit { .. } | Error::TooManyIrreducibles { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
