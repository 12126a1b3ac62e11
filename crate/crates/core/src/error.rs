use crate::algebra::AlgebraError;
use crate::complex::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("invalid complex: {0}")]
    InvalidComplex(ValidationReport),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("entry U^{upower} from {from} to {to} would need a negative exponent after re-basing")]
    NegativeExponent { from: String, to: String, upower: i64 },
    #[error("arrow {source_label} -> {target} is not a horizontal boundary entry")]
    NotHorizontal { source_label: String, target: String },
    #[error("element {0} is absent")]
    MissingElement(String),
    #[error("truncation depth {depth} is too small: {detail}")]
    Unstable { depth: u32, detail: String },
    #[error("stable window too small: {0}")]
    WindowTooSmall(String),
    #[error("homology: {0}")]
    Homology(String),
    #[error("tower profile: {0}")]
    Tower(String),
    #[error("invalid staircase: {0}")]
    Staircase(String),
    #[error("not an L-space knot polynomial: {0}")]
    NotLSpacePolynomial(String),
    #[error("invalid parameters: {0}")]
    Parameters(String),
    #[error("d1 check failed: {0}")]
    D1Check(String),
    #[error("concordance check failed: {0}")]
    Concordance(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
