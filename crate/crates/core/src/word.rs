use std::cmp::Ordering;

use crate::matrix::{Generator, GeneratorSet};

/// A finite sequence of generators, not necessarily reduced.
///
/// Words are ordered shortlex: first by length, then lexicographically in
/// generator declaration order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn new(letters: Vec<Generator>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Generator> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Moves the first `shift` letters to the end.
    pub fn rotated(&self, shift: usize) -> Word {
        if self.0.is_empty() {
            return Word::empty();
        }
        let k = shift % self.0.len();
        let mut out = Vec::with_capacity(self.0.len());
        out.extend_from_slice(&self.0[k..]);
        out.extend_from_slice(&self.0[..k]);
        Word(out)
    }

    /// All cyclic rotations, by one letter, then two, and so on; the last
    /// entry is the word itself. The empty word has the single identity
    /// rotation.
    pub fn rotations(&self) -> Vec<Word> {
        if self.0.is_empty() {
            return vec![Word::empty()];
        }
        (1..=self.0.len()).map(|k| self.rotated(k)).collect()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        Word(out)
    }

    pub fn letter_set(&self) -> GeneratorSet {
        self.0.iter().copied().collect()
    }

    /// Position of the first pair of equal adjacent letters.
    pub fn first_repeat(&self) -> Option<usize> {
        first_repeat(&self.0)
    }
}

pub(crate) fn first_repeat(letters: &[Generator]) -> Option<usize> {
    letters.windows(2).position(|p| p[0] == p[1])
}

impl From<Vec<Generator>> for Word {
    fn from(v: Vec<Generator>) -> Self {
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A group element, held as its shortlex-least reduced word.
///
/// Elements are only produced by a [`crate::CoxeterSystem`], which keeps the
/// representation canonical; two elements are equal exactly when their
/// canonical words are.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(Word);

impl Element {
    pub(crate) fn from_canonical(word: Word) -> Self {
        Element(word)
    }

    pub fn identity() -> Self {
        Element(Word::empty())
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn letters(&self) -> &[Generator] {
        self.0.letters()
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }
}
