//! Error type shared by every module.

use thiserror::Error;

/// Failures raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("series is not a unit: constant term vanishes")]
    NonUnit,
    #[error("branch {branch} is not an n-th root of the constant term {constant}")]
    BranchMismatch { branch: String, constant: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("z-window overflow: exponent {needed} exceeds window top {hi}")]
    WindowOverflow { needed: i32, hi: i32 },
    #[error("insufficient negative z-depth: need {needed}, window starts at {lo}")]
    InsufficientDepth { needed: i32, lo: i32 },
    #[error("singular pivot at degree ({0}, {1})")]
    Singular(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown {kind}: {name}")]
    Unknown { kind: &'static str, name: String },
    #[error("ring fit has no solution")]
    NoSolution,
    #[error("ring fit is ambiguous: {0} free parameters")]
    Ambiguous(usize),
    #[error("fit validation failed at degree {0}")]
    ValidationFailed(usize),
    #[error("birkhoff factorization failed: {0}")]
    Birkhoff(String),
}

pub type Result<T> = std::result::Result<T, Error>;
