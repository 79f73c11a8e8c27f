use thiserror::Error;

use crate::square::SquareWitness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid character {ch:?} at position {position}; words use only 0, 1 and 2")]
    InvalidCharacter { ch: char, position: usize },

    #[error("deletion site (start {start}, length {length}) is not interior to a word of length {word_len}")]
    NotInterior {
        start: usize,
        length: usize,
        word_len: usize,
    },

    #[error("word is not square-free: square at start {}, half-length {}", .0.start, .0.half_length)]
    NotSquareFree(SquareWitness),

    #[error("word of length {len} is too short; at least {min} letters are required")]
    TooShort { len: usize, min: usize },

    #[error("morphism is not prolongable on {letter}")]
    NotProlongable { letter: u8 },

    #[error("image of {letter} has length {len}; every image must be longer than one letter")]
    ImageTooShort { letter: u8, len: usize },

    #[error("no irreducibly square-free word of length {0} exists")]
    NoSuchLength(usize),

    #[error("{what} = {value} is out of range [{min}, {max}]")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("constructed word of length {n} failed the irreducibility check")]
    VerificationFailed { n: usize },

    #[error("first letter of the word does not recur")]
    NoRecurrence,

    #[error("morphism spec, line {line}: {message}")]
    MorphismSpec { line: usize, message: String },

    #[error("empty image for letter {letter}")]
    EmptyImage { letter: u8 },
}
