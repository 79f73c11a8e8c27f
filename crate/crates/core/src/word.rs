//! Letters of the ternary alphabet and finite words over it.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A letter of the alphabet {0, 1, 2}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(transparent)]
pub struct Letter(u8);

impl Letter {
    pub const ZERO: Letter = Letter(0);
    pub const ONE: Letter = Letter(1);
    pub const TWO: Letter = Letter(2);

    /// All letters in increasing order.
    pub const ALL: [Letter; 3] = [Letter::ZERO, Letter::ONE, Letter::TWO];

    pub fn new(value: u8) -> Option<Letter> {
        (value < 3).then_some(Letter(value))
    }

    pub fn from_char(ch: char) -> Option<Letter> {
        match ch {
            '0' => Some(Letter::ZERO),
            '1' => Some(Letter::ONE),
            '2' => Some(Letter::TWO),
            _ => None,
        }
    }

    #[inline]
    pub fn value(self) -> u8 {
        self.0
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn to_char(self) -> char {
        (b'0' + self.0) as char
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite word over {0, 1, 2}.
///
/// Words order lexicographically with `0 < 1 < 2` (a proper prefix sorts
/// first). The text form is the bare digit string.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    /// Parses a digit string. The empty string is the empty word.
    pub fn parse(text: &str) -> Result<Word> {
        text.chars()
            .enumerate()
            .map(|(position, ch)| {
                Letter::from_char(ch).ok_or(Error::InvalidCharacter { ch, position })
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn push(&mut self, a: Letter) {
        self.0.push(a);
    }

    /// `self · other`.
    pub fn concat(&self, other: &[Letter]) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(other);
        Word(letters)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// Whether `factor` occurs anywhere in this word.
    pub fn contains_factor(&self, factor: &[Letter]) -> bool {
        factor.is_empty() || self.0.windows(factor.len()).any(|w| w == factor)
    }

    /// Number of (possibly overlapping) occurrences of `factor`.
    pub fn count_factor(&self, factor: &[Letter]) -> usize {
        if factor.is_empty() {
            return self.len() + 1;
        }
        self.0
            .windows(factor.len())
            .filter(|w| *w == factor)
            .count()
    }
}

/// Parses a word from its digit-string text form.
pub fn parse_word(text: &str) -> Result<Word> {
    Word::parse(text)
}

/// Shorthand for building words from known-good literals.
///
/// Panics on any character outside `0`, `1`, `2`.
pub fn word(text: &str) -> Word {
    Word::parse(text).unwrap_or_else(|e| panic!("bad word literal {text:?}: {e}"))
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl AsRef<[Letter]> for Word {
    fn as_ref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Word {
        Word(letters)
    }
}

impl From<&[Letter]> for Word {
    fn from(letters: &[Letter]) -> Word {
        Word(letters.to_vec())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Word {
        Word(iter.into_iter().collect())
    }
}

impl Extend<Letter> for Word {
    fn extend<I: IntoIterator<Item = Letter>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        Word::parse(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: String = self.0.iter().map(|a| a.to_char()).collect();
        f.write_str(&text)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Word, D::Error> {
        let text = String::deserialize(deserializer)?;
        Word::parse(&text).map_err(serde::de::Error::custom)
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_u8(self.0)
    }
}

impl<'de> Deserialize<'de> for Letter {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Letter, D::Error> {
        let value = u8::deserialize(deserializer)?;
        Letter::new(value).ok_or_else(|| serde::de::Error::custom("letter out of range"))
    }
}
