//! Coxeter matrices, generator sets and the textual word syntax.

use std::fmt;

use crate::error::{Error, Result};
use crate::word::Word;

/// Index of a generator in declaration order.
pub type Generator = u8;

/// Largest supported rank. Generator subsets are stored as 64-bit masks.
pub const MAX_RANK: usize = 64;

/// An entry `m(s,t)` of a Coxeter matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    pub fn finite(self) -> Option<u32> {
        match self {
            Order::Finite(m) => Some(m),
            Order::Infinite => None,
        }
    }

    /// True for the entries that join two generators in the Coxeter diagram.
    pub fn is_edge(self) -> bool {
        !matches!(self, Order::Finite(1) | Order::Finite(2))
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(m) => write!(f, "{m}"),
            Order::Infinite => f.write_str("inf"),
        }
    }
}

/// A validated Coxeter matrix together with its generator names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterMatrix {
    names: Vec<String>,
    entries: Vec<Order>,
    single_char: bool,
}

impl CoxeterMatrix {
    /// Builds a matrix from generator names and a full square table.
    pub fn new<S: Into<String>>(names: Vec<S>, entries: Vec<Vec<Order>>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let rank = names.len();
        if rank == 0 {
            return Err(Error::MalformedMatrix("no generators".into()));
        }
        if rank > MAX_RANK {
            return Err(Error::MalformedMatrix(format!(
                "rank {rank} exceeds the supported maximum of {MAX_RANK}"
            )));
        }
        for (i, name) in names.iter().enumerate() {
            validate_name(name)?;
            if names[..i].contains(name) {
                return Err(Error::MalformedMatrix(format!(
                    "duplicate generator `{name}`"
                )));
            }
        }
        if entries.len() != rank || entries.iter().any(|row| row.len() != rank) {
            return Err(Error::MalformedMatrix(format!(
                "table is not {rank}x{rank}"
            )));
        }
        for i in 0..rank {
            for j in 0..rank {
                let m = entries[i][j];
                if i == j {
                    if m != Order::Finite(1) {
                        return Err(Error::MalformedMatrix(format!(
                            "diagonal entry m({0},{0}) = {m}, expected 1",
                            names[i]
                        )));
                    }
                } else {
                    if matches!(m, Order::Finite(k) if k < 2) {
                        return Err(Error::MalformedMatrix(format!(
                            "off-diagonal entry m({},{}) = {m} is below 2",
                            names[i], names[j]
                        )));
                    }
                    if m != entries[j][i] {
                        return Err(Error::MalformedMatrix(format!(
                            "asymmetric entries m({0},{1}) = {2} and m({1},{0}) = {3}",
                            names[i], names[j], m, entries[j][i]
                        )));
                    }
                }
            }
        }
        let single_char = names.iter().all(|n| n.chars().count() == 1);
        Ok(Self {
            names,
            entries: entries.into_iter().flatten().collect(),
            single_char,
        })
    }

    /// Builds a matrix from the listed pairs; unlisted pairs commute.
    pub fn from_pairs(names: &[&str], pairs: &[(&str, &str, Order)]) -> Result<Self> {
        let rank = names.len();
        let mut entries = vec![vec![Order::Finite(2); rank]; rank];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = Order::Finite(1);
        }
        let lookup = |name: &str| {
            names
                .iter()
                .position(|n| *n == name)
                .ok_or_else(|| Error::MalformedMatrix(format!("undeclared generator `{name}`")))
        };
        for &(a, b, m) in pairs {
            let (i, j) = (lookup(a)?, lookup(b)?);
            if i == j {
                return Err(Error::MalformedMatrix(format!(
                    "diagonal pair ({a},{a}) listed"
                )));
            }
            entries[i][j] = m;
            entries[j][i] = m;
        }
        Self::new(names.to_vec(), entries)
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn m(&self, s: Generator, t: Generator) -> Order {
        self.entries[s as usize * self.names.len() + t as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, s: Generator) -> &str {
        &self.names[s as usize]
    }

    pub fn generator(&self, name: &str) -> Option<Generator> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| i as Generator)
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> {
        (0..self.rank()).map(|i| i as Generator)
    }

    pub fn all_generators(&self) -> GeneratorSet {
        GeneratorSet::full(self.rank())
    }

    /// Whether every generator name is a single character, which allows
    /// words to be written without separators.
    pub fn single_char_names(&self) -> bool {
        self.single_char
    }

    pub fn check_word(&self, word: &Word) -> Result<()> {
        let rank = self.rank();
        match word.letters().iter().find(|&&s| s as usize >= rank) {
            Some(&s) => Err(Error::InvalidGenerator {
                index: s as usize,
                rank,
            }),
            None => Ok(()),
        }
    }

    /// Parses a word.
    ///
    /// Tokens may be separated by whitespace, `,` or `.`; without separators
    /// each character is a token when all generator names are single
    /// characters. The empty string and a lone `1` (when no generator is
    /// named `1`) denote the identity.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let trimmed = text.trim();
        if trimmed.is_empty() || (trimmed == "1" && self.generator("1").is_none()) {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        let separated = trimmed.contains(|c: char| c.is_whitespace() || c == ',' || c == '.');
        if separated {
            let mut column = 0;
            for piece in text.split(|c: char| c.is_whitespace() || c == ',' || c == '.') {
                column += 1;
                if !piece.is_empty() {
                    letters.push(self.lookup_token(piece, column)?);
                }
                column += piece.chars().count();
            }
        } else if self.single_char {
            let offset = text.find(trimmed).unwrap_or(0);
            for (i, (_, c)) in trimmed.char_indices().enumerate() {
                let token = c.to_string();
                letters.push(self.lookup_token(&token, offset + i + 1)?);
            }
        } else {
            let offset = text.find(trimmed).unwrap_or(0);
            letters.push(self.lookup_token(trimmed, offset + 1)?);
        }
        Ok(Word::new(letters))
    }

    fn lookup_token(&self, token: &str, column: usize) -> Result<Generator> {
        self.generator(token)
            .ok_or_else(|| Error::UnknownGenerator {
                token: token.to_string(),
                column,
            })
    }

    /// Formats a word so that [`CoxeterMatrix::parse_word`] reads it back.
    pub fn format_word(&self, word: &Word) -> String {
        self.format_word_with(word, " ")
    }

    /// Like [`CoxeterMatrix::format_word`] but never emits whitespace.
    pub fn format_word_compact(&self, word: &Word) -> String {
        self.format_word_with(word, ".")
    }

    fn format_word_with(&self, word: &Word, separator: &str) -> String {
        if word.is_empty() {
            return if self.generator("1").is_none() {
                "1".into()
            } else {
                String::new()
            };
        }
        let tokens = word.letters().iter().map(|&s| self.name(s));
        if self.single_char {
            tokens.collect()
        } else {
            tokens.collect::<Vec<_>>().join(separator)
        }
    }

    pub fn parse_set(&self, text: &str) -> Result<GeneratorSet> {
        let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
        let word = self.parse_word(inner)?;
        Ok(word.letters().iter().copied().collect())
    }

    pub fn format_set(&self, set: GeneratorSet) -> String {
        let names: Vec<&str> = set.iter().map(|s| self.name(s)).collect();
        format!("{{{}}}", names.join(","))
    }
}

fn validate_name(name: &str) -> Result<()> {
    let bad = |c: char| c.is_whitespace() || matches!(c, ',' | '.' | '#' | '=' | '{' | '}');
    if name.is_empty() || name.contains(bad) {
        return Err(Error::MalformedMatrix(format!(
            "invalid generator name `{name}`"
        )));
    }
    Ok(())
}

/// A subset of the generators, stored as a bit mask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorSet(pub u64);

impl GeneratorSet {
    pub const EMPTY: GeneratorSet = GeneratorSet(0);

    pub fn full(rank: usize) -> Self {
        if rank >= 64 {
            GeneratorSet(u64::MAX)
        } else {
            GeneratorSet((1u64 << rank) - 1)
        }
    }

    pub fn singleton(s: Generator) -> Self {
        GeneratorSet(1 << s)
    }

    pub fn contains(self, s: Generator) -> bool {
        self.0 >> s & 1 == 1
    }

    pub fn insert(&mut self, s: Generator) {
        self.0 |= 1 << s;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: GeneratorSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: GeneratorSet) -> Self {
        GeneratorSet(self.0 | other.0)
    }

    pub fn intersection(self, other: GeneratorSet) -> Self {
        GeneratorSet(self.0 & other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = Generator> {
        (0..64u8).filter(move |&s| self.contains(s))
    }

    /// All subsets of `self`, ordered by size and then by mask value.
    pub fn subsets(self) -> Vec<GeneratorSet> {
        let mut out = Vec::with_capacity(1 << self.len().min(20));
        let mut sub = 0u64;
        loop {
            out.push(GeneratorSet(sub));
            if sub == self.0 {
                break;
            }
            sub = (sub.wrapping_sub(self.0)) & self.0;
        }
        out.sort_by_key(|s| (s.len(), s.0));
        out
    }
}

impl FromIterator<Generator> for GeneratorSet {
    fn from_iter<I: IntoIterator<Item = Generator>>(iter: I) -> Self {
        let mut set = GeneratorSet::EMPTY;
        for s in iter {
            set.insert(s);
        }
        set
    }
}
