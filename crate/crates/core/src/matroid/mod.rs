//! Simple matroids presented by their circuits.

mod binary;
pub mod builtin;
mod family;
mod graph;

pub use binary::{BinaryMatrix, MAX_ROWS};
pub use family::{BinaryCheck, CircuitFamily};
pub use graph::GraphInput;
