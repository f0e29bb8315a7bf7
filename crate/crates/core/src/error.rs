use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("closure exceeded the cap of {0} elements; use element-level mode")]
    CapExceeded(usize),
    #[error("group is not transitive")]
    Intransitive,
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("group elements are not cached; close the group first")]
    NotClosed,
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("{formula}: condition violated: {condition}")]
    ConditionViolated { formula: String, condition: String },
    #[error("unknown formula id `{0}`")]
    UnknownFormula(String),
    #[error("infeasible element spec: {0}")]
    InfeasibleSpec(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("point budget exceeded: {0} points")]
    PointBudget(u128),
    #[error("image outside the point list: {0}")]
    PointOutside(String),
    #[error("form mismatch: {0}")]
    FormMismatch(String),
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error("unknown family: {0}")]
    UnknownFamily(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
