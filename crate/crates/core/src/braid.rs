//! Braid moves and breadth-first search over braid classes.

use std::hash::BuildHasher;

use hashbrown::hash_table::{Entry, HashTable};
use rustc_hash::FxBuildHasher;

use crate::error::{Error, Result};
use crate::matrix::{CoxeterMatrix, Generator, Order};
use crate::word::Word;

/// Replaces the alternating factor `from to from ...` of length
/// `m(from, to)` starting at `position` by `to from to ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BraidMove {
    pub position: usize,
    pub from: Generator,
    pub to: Generator,
}

impl BraidMove {
    /// Applies the move in place after checking that the factor is there.
    pub fn apply(&self, matrix: &CoxeterMatrix, letters: &mut [Generator]) -> Result<()> {
        let invalid = |reason: String| Error::InvalidCertificate { step: 0, reason };
        let rank = matrix.rank();
        if self.from as usize >= rank || self.to as usize >= rank || self.from == self.to {
            return Err(invalid("braid move names an invalid pair".into()));
        }
        let m = match matrix.m(self.from, self.to) {
            Order::Finite(m) => m as usize,
            Order::Infinite => {
                return Err(invalid("no braid relation for an infinite pair".into()))
            }
        };
        let end = self.position + m;
        if end > letters.len() || !is_alternating(&letters[self.position..end], self.from, self.to)
        {
            return Err(invalid(format!(
                "no alternating factor of length {m} at position {}",
                self.position
            )));
        }
        flip(&mut letters[self.position..end]);
        Ok(())
    }
}

fn is_alternating(factor: &[Generator], s: Generator, t: Generator) -> bool {
    factor
        .iter()
        .enumerate()
        .all(|(i, &x)| x == if i % 2 == 0 { s } else { t })
}

fn flip(factor: &mut [Generator]) {
    let (s, t) = (factor[0], factor[1]);
    for (i, x) in factor.iter_mut().enumerate() {
        *x = if i % 2 == 0 { t } else { s };
    }
}

/// Which braid relations a search may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MoveSet {
    All,
    /// Only the relations with `m(s,t) = 2`.
    Commutations,
}

/// Calls `f` with every braid move applicable to `letters`.
pub fn for_each_move(
    matrix: &CoxeterMatrix,
    letters: &[Generator],
    moves: MoveSet,
    mut f: impl FnMut(BraidMove, usize),
) {
    let n = letters.len();
    for i in 0..n.saturating_sub(1) {
        let (s, t) = (letters[i], letters[i + 1]);
        if s == t {
            continue;
        }
        let m = match matrix.m(s, t) {
            Order::Finite(m) => m as usize,
            Order::Infinite => continue,
        };
        if moves == MoveSet::Commutations && m != 2 {
            continue;
        }
        if i + m <= n && is_alternating(&letters[i..i + m], s, t) {
            f(
                BraidMove {
                    position: i,
                    from: s,
                    to: t,
                },
                m,
            );
        }
    }
}

/// The list of braid moves applicable to a word.
pub fn braid_moves(matrix: &CoxeterMatrix, word: &Word) -> Vec<BraidMove> {
    let mut out = Vec::new();
    for_each_move(matrix, word.letters(), MoveSet::All, |mv, _| out.push(mv));
    out
}

/// Result of a breadth-first traversal of a braid-move graph.
///
/// Words are stored contiguously in discovery order; index 0 is the start.
pub(crate) struct Exploration {
    len: usize,
    count: usize,
    arena: Vec<Generator>,
    parents: Vec<Option<(u32, BraidMove)>>,
    pub hit: Option<usize>,
}

impl Exploration {
    pub fn word(&self, i: usize) -> &[Generator] {
        &self.arena[i * self.len..(i + 1) * self.len]
    }

    pub fn words(&self) -> impl Iterator<Item = &[Generator]> {
        (0..self.count).map(move |i| self.word(i))
    }

    /// Index of the lexicographically least word (shortlex-least, since all
    /// words in a braid class have the same length).
    pub fn least(&self) -> usize {
        (0..self.count).min_by_key(|&i| self.word(i)).unwrap_or(0)
    }

    /// Braid moves leading from the start word to word `i`.
    pub fn path_to(&self, mut i: usize) -> Vec<BraidMove> {
        let mut path = Vec::new();
        while let Some((parent, mv)) = self.parents[i] {
            path.push(mv);
            i = parent as usize;
        }
        path.reverse();
        path
    }
}

/// Explores the braid-move graph of `start` breadth-first, stopping at the
/// first word (the start included) for which `stop` returns true.
///
/// Exceeding `cap` distinct words is an error, never a truncated answer.
pub(crate) fn explore(
    matrix: &CoxeterMatrix,
    start: &[Generator],
    moves: MoveSet,
    cap: usize,
    mut stop: impl FnMut(&[Generator]) -> bool,
) -> Result<Exploration> {
    let len = start.len();
    let hasher = FxBuildHasher;
    let mut out = Exploration {
        len,
        count: 1,
        arena: start.to_vec(),
        parents: vec![None],
        hit: None,
    };
    if stop(start) {
        out.hit = Some(0);
        return Ok(out);
    }
    if len < 2 {
        return Ok(out);
    }

    let mut table: HashTable<u32> = HashTable::new();
    table.insert_unique(hasher.hash_one(start), 0, |_| unreachable!());

    let mut scratch = vec![0 as Generator; len];
    let mut head = 0;
    while head < out.count {
        let mut found = None;
        let mut overflow = false;
        {
            let current = out.arena[head * len..(head + 1) * len].to_vec();
            for_each_move(matrix, &current, moves, |mv, m| {
                if found.is_some() || overflow {
                    return;
                }
                scratch.copy_from_slice(&current);
                flip(&mut scratch[mv.position..mv.position + m]);
                let h = hasher.hash_one(&scratch[..]);
                let arena = &out.arena;
                let entry = table.entry(
                    h,
                    |&j| arena[j as usize * len..(j as usize + 1) * len] == scratch[..],
                    |&j| hasher.hash_one(&arena[j as usize * len..(j as usize + 1) * len]),
                );
                if let Entry::Vacant(slot) = entry {
                    let index = out.count;
                    if index >= cap {
                        overflow = true;
                        return;
                    }
                    slot.insert(index as u32);
                    out.arena.extend_from_slice(&scratch);
                    out.parents.push(Some((head as u32, mv)));
                    out.count += 1;
                    if stop(&scratch) {
                        found = Some(index);
                    }
                }
            });
        }
        if overflow {
            return Err(Error::CapExceeded { cap });
        }
        if found.is_some() {
            out.hit = found;
            return Ok(out);
        }
        head += 1;
    }
    Ok(out)
}
