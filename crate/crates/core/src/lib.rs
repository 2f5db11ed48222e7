//! Exact enumeration of three (and two) directed walkers that may touch
//! but never cross, with the closed-form generating functions and
//! kernel-method functional equations that describe them.

pub mod closed_forms;
pub mod enumerator;
pub mod error;
pub mod kernel;
pub mod report;
pub mod run;
pub mod series;

pub use error::{Error, Result};
