//! Sign words: the objects of the oriented tangle category.

use alloc::vec::Vec;
use core::fmt;

/// Orientation of a strand where it crosses a horizontal level: `Plus` points
/// upward, `Minus` downward.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A finite sequence of signs. The empty word is the tensor unit; tensor
/// product of words is concatenation.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SignWord(Vec<Sign>);

impl SignWord {
    pub fn empty() -> Self {
        SignWord(Vec::new())
    }

    pub fn new(signs: Vec<Sign>) -> Self {
        SignWord(signs)
    }

    /// Parses a word like `++-`; the empty string is the empty word.
    /// On failure returns the 0-based offset of the offending character.
    pub fn parse(text: &str) -> Result<Self, usize> {
        let mut signs = Vec::with_capacity(text.len());
        for (i, c) in text.chars().enumerate() {
            signs.push(Sign::from_char(c).ok_or(i)?);
        }
        Ok(SignWord(signs))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<Sign> {
        self.0.get(i).copied()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = Sign> + '_ {
        self.0.iter().copied()
    }

    pub fn push(&mut self, s: Sign) {
        self.0.push(s)
    }

    /// Concatenation (the tensor product on objects).
    pub fn concat(&self, other: &SignWord) -> SignWord {
        let mut signs = self.0.clone();
        signs.extend_from_slice(&other.0);
        SignWord(signs)
    }

    /// Flips every sign; an involution.
    pub fn involute(&self) -> SignWord {
        SignWord(self.0.iter().map(|s| s.flip()).collect())
    }

    /// Reverses the order of the signs.
    pub fn reversed(&self) -> SignWord {
        let mut signs = self.0.clone();
        signs.reverse();
        SignWord(signs)
    }

    /// `n` copies of one sign.
    pub fn repeated(s: Sign, n: usize) -> SignWord {
        SignWord(alloc::vec![s; n])
    }
}

impl fmt::Display for SignWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", self)
    }
}

impl FromIterator<Sign> for SignWord {
    fn from_iter<T: IntoIterator<Item = Sign>>(iter: T) -> Self {
        SignWord(iter.into_iter().collect())
    }
}
