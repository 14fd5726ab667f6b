use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field size {0} is not a prime in 2..=13")]
    InvalidField(u32),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("relation is not admissible: {0}")]
    NotAdmissible(String),
    #[error("unknown vertex or arrow: {0}")]
    UnknownVertexOrArrow(String),
    #[error("algebra is not finite dimensional: new basis paths still appear at length {0}")]
    NotFiniteDimensional(usize),
    #[error("search budget exceeded: {what} needs {needed} candidates, budget is {budget}")]
    SearchBudgetExceeded {
        what: &'static str,
        needed: u128,
        budget: u128,
    },
    #[error("global dimension exceeds two: {0}")]
    GlobalDimensionExceeded(String),
    #[error("representation is not projective")]
    NotProjective,
    #[error(
        "module of total dimension {dim} lies outside the enumerated universe (bound {bound})"
    )]
    BoundExceeded { dim: usize, bound: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Resource and validation failures, as opposed to mathematical ones.
    pub fn is_resource(&self) -> bool {
        !matches!(self, Error::Internal(_))
    }
}
