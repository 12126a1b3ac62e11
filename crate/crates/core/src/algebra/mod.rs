//! Exact arithmetic over F₂[U].

mod smith;
mod umatrix;
mod upoly;

pub use smith::{smith_pivots, smith_reduce, Pivot, SmithForm};
pub use umatrix::UMatrix;
pub use upoly::{UPoly, DEFAULT_EXPONENT_CAP};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("U-exponent {exponent} exceeds the cap {cap}")]
    ExponentOverflow { exponent: u64, cap: u32 },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("cannot multiply a {}x{} matrix by a {}x{} matrix", left.0, left.1, right.0, right.1)]
    ShapeMismatch { left: (usize, usize), right: (usize, usize) },
}
