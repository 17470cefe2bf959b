use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("closure exceeds cap: generated group has more than {cap} elements")]
    ClosureExceedsCap { cap: usize },
    #[error("enumeration exceeds cap: group order {order} > {cap}")]
    EnumerationExceedsCap { order: usize, cap: usize },
    #[error("order exceeds cap: group order {order} > {cap}")]
    OrderExceedsCap { order: usize, cap: usize },
    #[error("evaluation exceeds cap: {needed} table lookups > {cap}")]
    EvaluationExceedsCap { needed: u128, cap: u64 },
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("unknown group name `{0}`")]
    UnknownName(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("not a homomorphism: {0}")]
    InvalidHom(String),
    #[error("element set is not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("group is not simple")]
    NotSimple,
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("no prime support declared for factor {0}")]
    UnknownSupport(String),
    #[error("malformed input: {0}")]
    Input(String),
}

impl Error {
    /// Stable variant name, used in CLI error reports.
    pub fn name(&self) -> &'static str {
        match self {
            Error::ClosureExceedsCap { .. } => "ClosureExceedsCap",
            Error::EnumerationExceedsCap { .. } => "EnumerationExceedsCap",
            Error::OrderExceedsCap { .. } => "OrderExceedsCap",
            Error::EvaluationExceedsCap { .. } => "EvaluationExceedsCap",
            Error::CapExceeded(_) => "CapExceeded",
            Error::UnknownName(_) => "UnknownName",
            Error::InvalidParameter(_) => "InvalidParameter",
            Error::InvalidTable(_) => "InvalidTable",
            Error::InvalidPermutation(_) => "InvalidPermutation",
            Error::InvalidHom(_) => "InvalidHom",
            Error::NotSubgroup(_) => "NotSubgroup",
            Error::NotNormal => "NotNormal",
            Error::NotSimple => "NotSimple",
            Error::Syntax { .. } => "SyntaxError",
            Error::UnboundVariable(_) => "UnboundVariable",
            Error::UnknownSupport(_) => "UnknownSupport",
            Error::Input(_) => "InputError",
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Input(e.to_string())
    }
}
