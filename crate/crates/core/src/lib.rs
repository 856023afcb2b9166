//! Exact pebbling on directed graphs.
//!
//! The crate is organised around five pieces:
//!
//! * [`digraph`]: bitset digraphs, distances, strong connectivity, canonical
//!   forms and enumeration up to isomorphism.
//! * [`pebbling`]: the game engine (solvability with replayable witnesses,
//!   maximum unsolvable configurations, pebbling numbers, classification).
//! * [`constructions`]: extremal graph generators and closed-form bounds.
//! * [`family_f`]: membership, intermediary sets and structural checks for the
//!   Class-1 family built around an oriented 6-cycle.
//! * [`census`]: exhaustive censuses with line-delimited records and
//!   theorem-level verification.

pub mod census;
pub mod constructions;
pub mod digraph;
mod error;
pub mod family_f;
pub mod pebbling;

pub use digraph::{CanonicalForm, Digraph, DistanceMatrix};
pub use error::{Error, Result};
pub use pebbling::{Configuration, Move, PebblingClass, SolveResult};
