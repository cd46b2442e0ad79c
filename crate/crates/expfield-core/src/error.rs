use thiserror::Error;

/// Errors shared across the workbench. Input problems, resource limits
/// and mathematical preconditions are kept distinct so the CLI can map
/// them onto exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("S-pair budget exceeded ({budget} pairs); instance too large")]
    ResourceLimit { budget: usize },
    #[error("division by zero in the presented field")]
    DivisionByZero,
    #[error("the ideal is the unit ideal")]
    UnitIdeal,
    #[error("exp undefined at {value}: {reason}")]
    ExpUndefined { value: String, reason: String },
    #[error("element is not in the declared A(F): {0}")]
    NotInA(String),
    #[error("operation requires an exponential-graph-generated presentation")]
    EggRequired,
    #[error("derivation does not extend: constraint system is inconsistent")]
    NoExtension,
    #[error("coefficient outside the designated subring: {0}")]
    CoefficientScope(String),
    #[error("base enlargement failed: {0}")]
    BaseEnlargement(String),
    #[error("dimension minimization ({min}) disagrees with the Xi-rank dimension ({xi}); search bound too small")]
    DimMismatch { min: i64, xi: usize },
    #[error("invalid input: {0}")]
    Input(String),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
