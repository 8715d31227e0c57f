//! Critical bases for ternary alphabets `{0, 1, m}`.

pub mod cli;
pub mod critical;
pub mod error;
pub mod expand;
pub mod numeric;
pub mod words;

pub use error::{Error, Result};
