pub mod algebra;
mod error;
pub mod classifier;
pub mod degeneracy;
pub mod document;
pub mod evaluator;
pub mod powersum;
pub mod recurrence;

pub use error::{Error, Result};
