//! Error type shared by all modules.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("backend mismatch: {0}")]
    BackendMismatch(String),

    #[error("invalid prime modulus {0}")]
    InvalidModulus(u64),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown variable `{name}` at byte {pos}")]
    UnknownVariable { name: String, pos: usize },

    #[error("exponent overflow at byte {pos}")]
    ExponentOverflow { pos: usize },

    #[error("invalid ring specification: {0}")]
    InvalidRingSpec(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("truncated model dimension {dim} exceeds the configured limit {limit}")]
    ModelTooLarge { dim: usize, limit: usize },

    #[error("computation did not stabilize below the truncation ceiling {ceiling}: {what}")]
    NonStabilizing { what: String, ceiling: usize },

    #[error("difference table did not stabilize up to n_max = {n_max}")]
    InsufficientRange { n_max: usize },

    #[error("not a system of parameters: {0}")]
    NotSystemOfParameters(String),

    #[error("restriction violated: {0}")]
    RestrictionViolated(String),

    #[error("negative Euler characteristic {chi} for {setup}")]
    NegativeChi { chi: i64, setup: String },

    #[error("defect mismatch: stabilized chi {chi} != e0(a) - c*e0(q) = {expected}")]
    DefectMismatch { chi: i64, expected: i64 },

    #[error("multiplication operators do not commute")]
    NonCommutingOperators,

    #[error("boundary maps do not square to zero at index {0}")]
    NotAComplex(usize),

    #[error("the given maps are not a chain morphism (degree {0})")]
    NotChainMap(usize),

    #[error("expected a homogeneous polynomial: {0}")]
    NotHomogeneous(String),

    #[error("zero input where a nonzero polynomial is required: {0}")]
    ZeroInput(String),

    #[error("curves share a component through the origin (gcd {gcd})")]
    CommonComponent { gcd: String },

    #[error("curve does not pass through the origin: {0}")]
    NotAtOrigin(String),

    #[error("initial degree scan reached its ceiling {ceiling}; element appears to lie in every tested power")]
    CeilingReached { ceiling: usize },

    #[error("colon length did not become constant over the window; trace: {trace:?}")]
    NonConstantColon { trace: Vec<(usize, u64)> },

    #[error("regularity hypothesis failed for {element}: {verdict}")]
    GregHypothesisFailed { element: String, verdict: String },

    #[error("property violated: {0}")]
    PropertyViolated(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("problem file error: {0}")]
    ProblemFile(String),
}

impl Error {
    /// Process exit code for the CLI: 2 input, 3 non-stabilizing, 4 property violation.
    pub fn exit_code(&self) -> i32 {
        use Error::*;
        match self {
            BackendMismatch(_) | InvalidModulus(_) | ShapeMismatch(_) | AmbientMismatch { .. }
            | Parse { .. } | UnknownVariable { .. } | ExponentOverflow { .. }
            | InvalidRingSpec(_) | InvalidInput(_) | ModelTooLarge { .. }
            | NotSystemOfParameters(_) | RestrictionViolated(_) | NonCommutingOperators
            | NotAComplex(_) | NotChainMap(_) | NotHomogeneous(_) | ZeroInput(_)
            | CommonComponent { .. } | NotAtOrigin(_) | GregHypothesisFailed { .. }
            | Io(_) | ProblemFile(_) => 2,
            NonStabilizing { .. } | InsufficientRange { .. } | CeilingReached { .. }
            | NonConstantColon { .. } => 3,
            NegativeChi { .. } | DefectMismatch { .. } | PropertyViolated(_) => 4,
        }
    }
}
