//! Exact computations in the C₂-equivariant cohomology of BT².

pub mod classes;
pub mod error;
pub mod grading;
pub mod hcoeff;
pub mod laurent;
pub mod maps;
pub mod parse;
pub mod rewrite;
pub mod rings;
pub mod verify;

pub use error::{Error, Result};
