use thiserror::Error;

/// Errors raised by the algebra, complex and homology layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("number of variables must be between 1 and 63, got {0}")]
    InvalidRing(usize),
    #[error("variable index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("objects live in different rings (n = {0} vs n = {1})")]
    AmbientMismatch(usize, usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("degree {degree} out of range for n = {n}")]
    DegreeOutOfRange { degree: usize, n: usize },
    #[error("{0} is the lex-minimum of its degree and has no successor")]
    NoSuccessor(String),
    #[error("{0} is the lex-maximum of its degree and has no predecessor")]
    NoPredecessor(String),
    #[error("empty lexsegment: {0} is lex-smaller than {1}")]
    EmptySegment(String, String),
    #[error("set mixes monomials of different degrees")]
    MixedDegrees,
    #[error("empty input where a nonempty set is required")]
    EmptyInput,
    #[error("operation requires a proper nonzero ideal")]
    ZeroOrUnitIdeal,
    #[error("the unit ideal has no Stanley-Reisner complex")]
    UnitIdeal,
    #[error("generator order is not a permutation of the minimal generators")]
    NotAPermutation,
    #[error("complex has no faces of dimension {0}")]
    NoFacesOfThatDimension(isize),
    #[error("guard exceeded: {what} = {value} > {limit}")]
    GuardExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("input is not normalized: {0}")]
    NormalizationViolated(&'static str),
    #[error("segment is not completely lexsegment")]
    NotCompletelyLexsegment,
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(&'static str),
    #[error("critical recipe constraint violated: {0}")]
    RecipeConstraintViolated(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
}

impl Error {
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::GuardExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
