//! Decide whether the Orlik-Solomon algebra of a simple matroid is quadratic
//! or ℓ-adic, by two independent routes:
//!
//! * combinatorially, via chords of circuits ([`chordality`]) and the Δ / Δ′
//!   closures of the short circuits ([`closure`]);
//! * algebraically, via exact ideal membership in the exterior algebra
//!   ([`exterior`], [`ideal`]).
//!
//! Matroids are given by circuits, GF(2) matrices or graphs ([`matroid`]).

pub mod chordality;
pub mod closure;
mod error;
pub mod exterior;
pub mod graphs;
pub mod ideal;
pub mod io;
pub mod linalg;
pub mod matroid;
pub mod subset;
pub mod verify;

pub use error::{Error, Result};
pub use subset::{GroundSet, Subset};
