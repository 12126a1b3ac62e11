//! Knot Floer complexes over F₂[U]: filtered reduction, connected sums,
//! L-space staircases, and the invariants τ and d₁.

pub mod algebra;
pub mod complex;
mod error;
pub mod f2;

pub use error::{Error, Result};
pub mod invariants;
pub mod reduction;
pub mod staircase;
pub mod tensor;
