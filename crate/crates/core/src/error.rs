use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parts must be positive integers, got {0}")]
    NonPositivePart(i64),

    #[error("cannot parse partition token `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("invalid parameter {name}: {constraint}")]
    InvalidParameter { name: &'static str, constraint: String },

    #[error("{partition} is not in the domain of {map}: {reason}")]
    OutsideDomain {
        map: &'static str,
        partition: String,
        reason: String,
    },

    #[error("rewriting of {partition} exceeded its budget of {budget} steps")]
    StepBudgetExceeded { partition: String, budget: usize },

    #[error("ill-formed product factor: {0}")]
    IllFormedProduct(String),

    #[error("specialization produces a negative q-exponent ({0})")]
    NegativeExponent(i64),

    #[error("unknown {kind} `{name}` (known: {known})")]
    UnknownName {
        kind: &'static str,
        name: String,
        known: String,
    },

    #[error("missing parameter --{0}")]
    MissingParameter(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(name: &'static str, constraint: impl Into<String>) -> Error {
    Error::InvalidParameter {
        name,
        constraint: constraint.into(),
    }
}
