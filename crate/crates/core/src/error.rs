use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed monomial: {0}")]
    MalformedMonomial(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("not a Hilbert polynomial: {0}")]
    NotHilbertPolynomial(String),
    #[error("ideal is not strongly multistable")]
    NotStronglyMultistable,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no maximal growth found for {poly} with n = {n} in u = {from}..={cap}")]
    GrowthNotFound { poly: String, n: usize, from: i64, cap: i64 },
    #[error("Hilbert function is not polynomial on the grid at anchor {anchor:?}: value at {point:?} is {actual}, interpolant gives {expected}")]
    InconsistentAnchor { anchor: Vec<i64>, point: Vec<i64>, expected: String, actual: u64 },
    #[error("degree slices are not finite: no strictly positive combination of the grading rows found")]
    InfiniteSlice,
    #[error("invalid nef basis: {0}")]
    InvalidNefBasis(String),
    #[error("surjectivity assumption violated at {degree:?}: {images} images cover {target} monomials")]
    SurjectivityViolated { degree: Vec<i64>, images: usize, target: usize },
    #[error("arithmetic overflow: {0}")]
    Overflow(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors caused by a violated user-asserted hypothesis rather than bad input.
    pub fn is_assumption_violation(&self) -> bool {
        matches!(self, Error::SurjectivityViolated { .. })
    }
}
