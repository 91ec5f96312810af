//! Exact machinery for (alpha, beta)-shifts.
//!
//! The crate is organised bottom-up:
//!
//! * [`expansion`]: exact rational orbits and the boundary sequences `a`, `b`;
//! * [`language`]: admissibility, suffix statistics, enumeration and counting;
//! * [`graph`]: the follower-set graph and walks through it;
//! * [`surgery`]: the hat/tilde word edits, the extension letter and padding;
//! * [`criterion`]: obstruction lengths and the `zbar(n)/n` series;
//! * [`thermo`]: potentials, partition sums, pressure and cylinder estimates.

pub mod criterion;
pub mod error;
pub mod expansion;
pub mod graph;
pub mod language;
pub mod rational;
pub mod surgery;
pub mod thermo;
pub mod word;

pub use error::{Error, Result};
pub use expansion::{AbShift, Bounds, Params};
pub use graph::{LabeledGraph, Vertex};
pub use language::{SuffixDecomposition, SuffixTag};
pub use rational::Rational;
pub use word::{Digit, Word};
