//! Knot diagram engine: PD codes, Reidemeister moves, exact polynomial
//! invariants, braid closures, unknotting search and hard-diagram
//! verification.

pub mod braid;
pub mod diagram;
pub mod error;
pub mod hardness;
pub mod invariants;
pub mod moves;
pub mod poly;
pub mod replay;
pub mod samples;
mod surgery;
pub mod unknotting;

pub use diagram::{BracketStyle, CanonicalCode, Crossing, Diagram, GaussCode, Pass};
pub use error::{KnotError, Result};
pub use poly::LaurentPoly;
