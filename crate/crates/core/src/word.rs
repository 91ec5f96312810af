use std::fmt;
use std::ops::{Deref, DerefMut};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Letter of the alphabet `{0, ..., lambda}`.
pub type Digit = u8;

/// Finite word over the digit alphabet. The empty word is allowed.
///
/// Text form is comma-separated digits (`3,3,0,1`); the empty word prints as
/// an empty string. Serde uses the same text form.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Digit>);

impl Word {
    pub fn new(digits: Vec<Digit>) -> Self {
        Word(digits)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn digits(&self) -> &[Digit] {
        &self.0
    }

    pub fn into_digits(self) -> Vec<Digit> {
        self.0
    }

    pub fn concat(&self, other: &[Digit]) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(other);
        Word(v)
    }
}

impl From<Vec<Digit>> for Word {
    fn from(v: Vec<Digit>) -> Self {
        Word(v)
    }
}

impl From<&[Digit]> for Word {
    fn from(v: &[Digit]) -> Self {
        Word(v.to_vec())
    }
}

impl<const N: usize> From<[Digit; N]> for Word {
    fn from(v: [Digit; N]) -> Self {
        Word(v.to_vec())
    }
}

impl Deref for Word {
    type Target = [Digit];
    fn deref(&self) -> &[Digit] {
        &self.0
    }
}

impl DerefMut for Word {
    fn deref_mut(&mut self) -> &mut [Digit] {
        &mut self.0
    }
}

impl AsRef<[Digit]> for Word {
    fn as_ref(&self) -> &[Digit] {
        &self.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty());
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<Digit>()
                    .map_err(|e| Error::Parse(format!("bad digit {t:?} in word {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Number of coordinates where two equal-length digit strings differ.
pub fn hamming(x: &[Digit], y: &[Digit]) -> usize {
    debug_assert_eq!(x.len(), y.len());
    x.iter().zip(y).filter(|(a, b)| a != b).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_form() {
        let w: Word = "3,3,0,1".parse().unwrap();
        assert_eq!(w.digits(), &[3, 3, 0, 1]);
        assert_eq!(w.to_string(), "3,3,0,1");
        assert_eq!("".parse::<Word>().unwrap(), Word::empty());
        assert_eq!(Word::empty().to_string(), "");
        assert!("3,,1".parse::<Word>().is_err());
        assert!("3,x".parse::<Word>().is_err());
    }

    #[test]
    fn serde_uses_text_form() {
        let w = Word::from([3, 0, 1]);
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#""3,0,1""#);
        assert_eq!(serde_json::from_str::<Word>(&s).unwrap(), w);
        assert!(serde_json::from_str::<Word>(r#""3;0""#).is_err());
    }

    #[test]
    fn hamming_counts_mismatches() {
        assert_eq!(hamming(&[3, 3, 0], &[3, 2, 2]), 2);
        assert_eq!(hamming(&[], &[]), 0);
    }
}
