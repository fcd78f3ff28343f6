//! Star and fan Ramsey numbers: extremal constructions, matching theory
//! (blossom, Edmonds–Gallai, König), bigraphic sequences, fan detection and
//! exhaustive small-case search.

pub mod bigraphic;
pub mod constructions;
pub mod error;
pub mod fans;
pub mod gallai;
pub mod graph;
pub mod io;
pub mod matching;
pub mod ramsey;

pub use error::{Error, Result};
pub use fans::FanWitness;
pub use graph::{Color, Graph, MultipartiteSpec, TwoColoring};
pub use matching::Matching;
