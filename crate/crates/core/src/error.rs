use thiserror::Error;

use crate::word::Word;

/// Errors raised by the shift machinery.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("operation requires alpha = 1/beta with beta > 3 (alpha = {alpha}, beta = {beta})")]
    NotMainMode { alpha: String, beta: String },

    #[error("point {x} outside the domain {domain}")]
    Domain { x: String, domain: &'static str },

    #[error("word {0} is not admissible")]
    Inadmissible(Word),

    #[error("digit {digit} exceeds the largest letter {lambda}")]
    DigitOutOfRange { digit: u8, lambda: u8 },

    #[error("word {word} is not a prefix of the {which} boundary sequence")]
    NotAPrefix { word: Word, which: &'static str },

    #[error("word of length {len} exceeds graph depth {depth}")]
    DepthExceeded { len: usize, depth: usize },

    #[error("obstruction length of {0} is unbounded: continuation matches the boundary forever")]
    UnboundedObstruction(Word),

    #[error("scan limit {0} reached before the continuation left the boundary sequence")]
    ScanLimit(usize),

    #[error("completion of {word} has length {found}, above the bound {bound}")]
    CompletionBound {
        word: Word,
        found: usize,
        bound: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid potential: {0}")]
    Potential(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
