//! Group elements as canonical reduced words.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

/// A group element stored as its ShortLex-least reduced word over generator
/// indices. Canonicity makes equality a word comparison; construction goes
/// through `CoxeterGroup::normalize_word` (or a group table), never directly
/// from user input.
///
/// Ordering is by (length, word), which is the deterministic iteration order
/// used by every basis table in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Element {
    word: Vec<u8>,
}

impl Element {
    pub fn identity() -> Self {
        Self { word: Vec::new() }
    }

    /// Wrap a word already known to be the canonical reduced form.
    pub(crate) fn from_canonical_word(word: Vec<u8>) -> Self {
        Self { word }
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// The reversed word; for involutive generators this spells the inverse.
    pub fn inverse_word(&self) -> Vec<u8> {
        self.word.iter().rev().copied().collect()
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.word.cmp(&other.word))
    }
}

impl fmt::Display for Element {
    /// 1-based letters joined with dots: `e`, `1.2.1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e");
        }
        let mut first = true;
        for &s in &self.word {
            if !first {
                write!(f, ".")?;
            }
            first = false;
            write!(f, "{}", s + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_by_length_then_word() {
        let e = Element::identity();
        let s = Element::from_canonical_word(vec![1]);
        let st = Element::from_canonical_word(vec![0, 1]);
        let ts = Element::from_canonical_word(vec![1, 0]);
        assert!(e < s);
        assert!(s < st);
        assert!(st < ts);
    }

    #[test]
    fn display() {
        assert_eq!(Element::identity().to_string(), "e");
        assert_eq!(Element::from_canonical_word(vec![0, 1, 0]).to_string(), "1.2.1");
    }
}
