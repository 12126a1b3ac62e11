//! Command-line front end: knot expressions, text and graph rendering,
//! published-example reproduction and the acceptance checks.

pub mod checks;
pub mod commands;
mod error;
pub mod examples;
pub mod expr;
pub mod formulas;
pub mod render;

pub use error::CliError;
