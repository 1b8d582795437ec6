use thiserror::Error;

/// Errors raised by constructors and decision procedures.
///
/// Negative verdicts (a category that is not cofibered, a square with no
/// lift) are values, not errors. Errors are reserved for malformed input,
/// exhausted enumeration budgets and inputs outside the decidable regime.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("enumeration bound exceeded: more than {limit} candidates")]
    EnumerationBound { limit: u64 },
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("unknown morphism `{0}`")]
    UnknownMorphism(String),
    #[error("unknown simplex `{name}` at level {level}")]
    UnknownSimplex { level: usize, name: String },
    #[error("invalid category: {0}")]
    InvalidCategory(String),
    #[error("invalid functor: {0}")]
    InvalidFunctor(String),
    #[error("invalid natural transformation: {0}")]
    InvalidNatTrans(String),
    #[error("invalid set-valued functor: {0}")]
    InvalidSetFunctor(String),
    #[error("invalid relative category: {0}")]
    InvalidRelativeCategory(String),
    #[error("invalid simplicial set: {0}")]
    InvalidSimplicial(String),
    #[error("invalid simplicial map: {0}")]
    InvalidSimplicialMap(String),
    #[error("invalid bisimplicial set: {0}")]
    InvalidBisimplicial(String),
    #[error("invalid lifting problem: {0}")]
    InvalidLiftProblem(String),
    #[error("index {index} out of range 0..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("truncation {got} too small, need at least {need}")]
    TruncationTooSmall { need: usize, got: usize },
    #[error("truncation mismatch: {0} vs {1}")]
    TruncationMismatch(usize, usize),
    #[error("Segal condition fails at level {level}")]
    SegalFailure { level: usize },
    #[error("no composition witness for ({f}, {g})")]
    NoWitness { f: String, g: String },
    #[error("outside the decidable regime: {0}")]
    Undecidable(String),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("{0}")]
    Precondition(String),
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
