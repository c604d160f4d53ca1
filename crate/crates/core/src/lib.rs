//! Maximal green sequences of quivers, with constructive minimal-length
//! sequences for type A and exhaustive checks against the polygon model.
//!
//! Vertices are 1-based throughout; sequences are stored in application
//! order (first mutation first).

pub mod census;
pub mod engine;
pub mod error;
pub mod export;
pub mod quiver;
pub mod text;
pub mod triangulation;
pub mod typea;

pub use engine::{
    apply_sequence, count_mgs, is_mgs, longest_mgs_length, mgs_length_spectrum, shortest_mgs, MutationSequence,
    SearchGraph, SearchOptions,
};
pub use error::{Error, Result};
pub use quiver::{Quiver, Seed, VertexColor};
pub use triangulation::{Chord, Triangulation};
