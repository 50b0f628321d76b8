//! Strand diagrams for Thompson's group F, Stein's cube complex, and the
//! configuration space of points on the line that may split and merge.

pub mod config;
pub mod diagram;
pub mod error;
pub mod forest;
pub mod format;
pub mod generalized;
pub mod random;
pub mod render;
pub mod rational;
pub mod stein;
pub mod thompson;

pub use error::{Error, Result};
