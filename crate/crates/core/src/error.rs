use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("operation `{op}`: table shape does not match a total table of arity 0, 1 or 2")]
    ShapeMismatch { op: String },
    #[error("operation `{op}`: entry {value} out of range for carrier of size {size}")]
    OutOfRange { op: String, value: usize, size: usize },
    #[error("empty carrier")]
    EmptyCarrier,
    #[error("unknown operation `{0}`")]
    UnknownOperation(String),
    #[error("operation `{op}`: expected arity {expected}, got {given} arguments")]
    ArityMismatch { op: String, expected: usize, given: usize },
    #[error("unbound variable {0}")]
    UnboundVariable(String),
    #[error("signatures differ: `{0}` vs `{1}`")]
    SignatureMismatch(String, String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("class `{class}` requires operation `{op}` (arity {arity})")]
    MissingOperation { class: String, op: String, arity: usize },
    #[error("unknown class `{0}`")]
    UnknownClass(String),
    #[error("unknown matrix `{0}`")]
    UnknownMatrix(String),
    #[error("unknown twist kind `{0}`")]
    UnknownTwistKind(String),
    #[error("twist kind {kind}: factor {which} is not a {class}: {detail}")]
    FactorClass { kind: String, which: usize, class: String, detail: String },
    #[error("twist kind {kind}: {msg}")]
    BadTwistSpec { kind: String, msg: String },
    #[error("rho is not an embedding: {0}")]
    BadRho(String),
    #[error("wrong twist kind {got}, expected one of {want}")]
    WrongKind { got: String, want: String },
    #[error("representation for kind {kind} requires constant `{constant}`")]
    MissingConstant { kind: String, constant: String },
    #[error("parse error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },
    #[error("carrier of size {0} too large for subalgebra enumeration (limit 128)")]
    CarrierTooLarge(usize),
    #[error("formula has {0} distinct variables, at most 2 supported here")]
    TooManyVariables(usize),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
