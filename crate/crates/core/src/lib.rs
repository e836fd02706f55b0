//! Rhombic alternative tableaux and the two-species PASEP.

pub mod algebra;
pub mod cli;
pub mod closed_forms;
pub mod diagram;
mod error;
pub mod limits;
pub mod markov;
pub mod mct;
pub mod tableau;
pub mod tiling;

pub use error::{Error, Result};
pub use limits::Limits;
