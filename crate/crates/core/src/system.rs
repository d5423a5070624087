//! Reduction, canonical forms and group arithmetic.
//!
//! Everything here rests on the Tits solution to the word problem: two
//! reduced words represent the same element exactly when they are joined by
//! braid moves, and a word is reduced exactly when no word in its braid
//! closure contains a repeated adjacent letter.

use crate::braid::{self, BraidMove, Exploration, MoveSet};
use crate::certificate::Step;
use crate::error::{Error, Result};
use crate::matrix::{CoxeterMatrix, Generator, GeneratorSet};
use crate::word::{first_repeat, Element, Word};

/// Default bound on the number of distinct words or elements a single
/// closure search may visit.
pub const DEFAULT_NODE_CAP: usize = 1_000_000;

/// A Coxeter matrix together with the search limits used by every closure
/// computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterSystem {
    matrix: CoxeterMatrix,
    node_cap: usize,
}

impl CoxeterSystem {
    pub fn new(matrix: CoxeterMatrix) -> Self {
        CoxeterSystem {
            matrix,
            node_cap: DEFAULT_NODE_CAP,
        }
    }

    pub fn with_node_cap(mut self, cap: usize) -> Self {
        self.node_cap = cap.max(1);
        self
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn node_cap(&self) -> usize {
        self.node_cap
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        self.matrix.parse_word(text)
    }

    /// Parses and reduces a word.
    pub fn element(&self, text: &str) -> Result<Element> {
        self.reduce(&self.parse_word(text)?)
    }

    pub fn generator_element(&self, s: Generator) -> Element {
        Element::from_canonical(Word::new(vec![s]))
    }

    pub fn format(&self, element: &Element) -> String {
        self.matrix.format_word(element.word())
    }

    pub(crate) fn explore(
        &self,
        letters: &[Generator],
        moves: MoveSet,
        stop: impl FnMut(&[Generator]) -> bool,
    ) -> Result<Exploration> {
        braid::explore(&self.matrix, letters, moves, self.node_cap, stop)
    }

    /// All words reachable from the reduced word `word` by braid moves,
    /// sorted shortlex.
    pub fn braid_class(&self, word: &Word) -> Result<Vec<Word>> {
        self.matrix.check_word(word)?;
        let e = self.explore(word.letters(), MoveSet::All, |w| first_repeat(w).is_some())?;
        if e.hit.is_some() {
            return Err(Error::NotReduced);
        }
        let mut class: Vec<Word> = e.words().map(|w| Word::new(w.to_vec())).collect();
        class.sort();
        Ok(class)
    }

    pub fn is_reduced(&self, word: &Word) -> Result<bool> {
        self.matrix.check_word(word)?;
        let e = self.explore(word.letters(), MoveSet::All, |w| first_repeat(w).is_some())?;
        Ok(e.hit.is_none())
    }

    /// Right-multiplies the reduced word `letters` by `s` in place.
    fn push_letter(&self, letters: &mut Vec<Generator>, s: Generator) -> Result<()> {
        if letters.last() == Some(&s) {
            letters.pop();
            return Ok(());
        }
        if !letters.contains(&s) {
            letters.push(s);
            return Ok(());
        }
        let e = self.explore(letters, MoveSet::All, |w| w.last() == Some(&s))?;
        match e.hit {
            Some(i) => {
                let w = e.word(i);
                let keep = w.len() - 1;
                letters.clear();
                letters.extend_from_slice(&w[..keep]);
            }
            None => letters.push(s),
        }
        Ok(())
    }

    /// Reduces `prefix · rest` where `prefix` is already reduced; the
    /// result is some reduced word, not necessarily canonical.
    pub(crate) fn reduce_onto(
        &self,
        mut prefix: Vec<Generator>,
        rest: &[Generator],
    ) -> Result<Vec<Generator>> {
        for &s in rest {
            self.push_letter(&mut prefix, s)?;
        }
        Ok(prefix)
    }

    /// The canonical element of a reduced word.
    pub(crate) fn canonicalize(&self, reduced: &[Generator]) -> Result<Element> {
        let e = self.explore(reduced, MoveSet::All, |_| false)?;
        Ok(Element::from_canonical(Word::new(
            e.word(e.least()).to_vec(),
        )))
    }

    pub fn reduce(&self, word: &Word) -> Result<Element> {
        self.matrix.check_word(word)?;
        let reduced = self.reduce_onto(Vec::with_capacity(word.len()), word.letters())?;
        self.canonicalize(&reduced)
    }

    pub fn canonical(&self, word: &Word) -> Result<Word> {
        Ok(self.reduce(word)?.word().clone())
    }

    /// Length of the element represented by `word`.
    pub fn word_length(&self, word: &Word) -> Result<usize> {
        self.matrix.check_word(word)?;
        Ok(self.reduce_onto(Vec::new(), word.letters())?.len())
    }

    fn product_letters(&self, x: &[Generator], y: &[Generator]) -> Result<Vec<Generator>> {
        if y.len() <= x.len() {
            self.reduce_onto(x.to_vec(), y)
        } else {
            let rev_y: Vec<Generator> = y.iter().rev().copied().collect();
            let rev_x: Vec<Generator> = x.iter().rev().copied().collect();
            let mut out = self.reduce_onto(rev_y, &rev_x)?;
            out.reverse();
            Ok(out)
        }
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        let letters = self.product_letters(x.letters(), y.letters())?;
        self.canonicalize(&letters)
    }

    pub fn inverse(&self, x: &Element) -> Result<Element> {
        let rev: Vec<Generator> = x.letters().iter().rev().copied().collect();
        self.canonicalize(&rev)
    }

    /// `v · w · v⁻¹`.
    pub fn conjugate(&self, v: &Element, w: &Element) -> Result<Element> {
        let vw = self.product_letters(v.letters(), w.letters())?;
        let v_inv: Vec<Generator> = v.letters().iter().rev().copied().collect();
        let letters = self.product_letters(&vw, &v_inv)?;
        self.canonicalize(&letters)
    }

    pub fn power(&self, x: &Element, n: i64) -> Result<Element> {
        let base = if n < 0 { self.inverse(x)? } else { x.clone() };
        let mut acc = Vec::new();
        for _ in 0..n.unsigned_abs() {
            acc = self.reduce_onto(acc, base.letters())?;
        }
        self.canonicalize(&acc)
    }

    /// `ℓ(x), ℓ(x²), …, ℓ(x^count)`.
    pub fn power_lengths(&self, x: &Element, count: usize) -> Result<Vec<usize>> {
        let mut acc = Vec::new();
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            acc = self.reduce_onto(acc, x.letters())?;
            out.push(acc.len());
        }
        Ok(out)
    }

    /// Left and right descent sets, read off the first and last letters of
    /// the reduced words of `x`.
    pub fn descents(&self, x: &Element) -> Result<(GeneratorSet, GeneratorSet)> {
        if x.is_identity() {
            return Ok((GeneratorSet::EMPTY, GeneratorSet::EMPTY));
        }
        let e = self.explore(x.letters(), MoveSet::All, |_| false)?;
        let mut left = GeneratorSet::EMPTY;
        let mut right = GeneratorSet::EMPTY;
        for w in e.words() {
            left.insert(w[0]);
            right.insert(w[w.len() - 1]);
        }
        Ok((left, right))
    }

    pub fn left_descents(&self, x: &Element) -> Result<GeneratorSet> {
        Ok(self.descents(x)?.0)
    }

    pub fn right_descents(&self, x: &Element) -> Result<GeneratorSet> {
        Ok(self.descents(x)?.1)
    }

    /// The generators occurring in any (hence every) reduced word of `x`.
    pub fn support(&self, x: &Element) -> GeneratorSet {
        x.word().letter_set()
    }

    /// Braid moves turning the reduced word `from` into `to`.
    pub(crate) fn braid_path(
        &self,
        from: &[Generator],
        to: &[Generator],
    ) -> Result<Vec<BraidMove>> {
        let e = self.explore(from, MoveSet::All, |w| w == to)?;
        match e.hit {
            Some(i) => Ok(e.path_to(i)),
            None => Err(Error::InvariantViolation(format!(
                "`{}` and `{}` are not braid-equivalent",
                self.matrix.format_word(&Word::new(from.to_vec())),
                self.matrix.format_word(&Word::new(to.to_vec()))
            ))),
        }
    }

    /// Reduces `word` by alternating braid-closure searches and
    /// cancellations, recording every step, and finishes on the canonical
    /// word.
    pub(crate) fn certified_reduction(&self, word: &Word) -> Result<(Element, Vec<Step>)> {
        let mut current = word.letters().to_vec();
        let mut steps = Vec::new();
        loop {
            let e = self.explore(&current, MoveSet::All, |w| first_repeat(w).is_some())?;
            let target = match e.hit {
                Some(i) => i,
                None => e.least(),
            };
            steps.extend(e.path_to(target).into_iter().map(Step::Braid));
            let reached = e.word(target);
            match first_repeat(reached) {
                Some(position) if e.hit.is_some() => {
                    steps.push(Step::Cancel { position });
                    let mut next = reached.to_vec();
                    next.drain(position..position + 2);
                    current = next;
                }
                _ => {
                    let canonical = Element::from_canonical(Word::new(reached.to_vec()));
                    return Ok((canonical, steps));
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::replay;
    use crate::families;

    fn words(sys: &CoxeterSystem, class: &[Word]) -> Vec<String> {
        class.iter().map(|w| sys.matrix().format_word(w)).collect()
    }

    #[test]
    fn braid_classes() {
        let a2t = families::affine_a2();
        let w = |t: &str| a2t.parse_word(t).unwrap();
        assert_eq!(words(&a2t, &a2t.braid_class(&w("st")).unwrap()), vec!["st"]);
        assert_eq!(
            words(&a2t, &a2t.braid_class(&w("sts")).unwrap()),
            vec!["sts", "tst"]
        );
        assert_eq!(a2t.braid_class(&w("ss")), Err(Error::NotReduced));

        let b2 = families::dihedral(4);
        let stst = b2.parse_word("stst").unwrap();
        assert_eq!(
            words(&b2, &b2.braid_class(&stst).unwrap()),
            vec!["stst", "tsts"]
        );
    }

    #[test]
    fn reducedness() {
        let a2t = families::affine_a2();
        assert!(!a2t.is_reduced(&a2t.parse_word("tuss").unwrap()).unwrap());
        assert!(a2t.is_reduced(&a2t.parse_word("tustuts").unwrap()).unwrap());
        let a1a1 = families::dihedral(2);
        assert!(!a1a1.is_reduced(&a1a1.parse_word("stst").unwrap()).unwrap());
        assert!(a1a1.is_reduced(&Word::empty()).unwrap());
    }

    #[test]
    fn reduction_examples() {
        let a2t = families::affine_a2();
        assert!(a2t.element("ss").unwrap().is_identity());
        assert_eq!(a2t.element("sts").unwrap(), a2t.element("tst").unwrap());
        assert_eq!(
            a2t.canonical(&a2t.parse_word("tst").unwrap()).unwrap(),
            a2t.parse_word("sts").unwrap()
        );
        assert_eq!(a2t.canonical(&Word::empty()).unwrap(), Word::empty());
        assert_eq!(
            a2t.canonical(&a2t.parse_word("uss").unwrap()).unwrap(),
            a2t.parse_word("u").unwrap()
        );

        let w = a2t.element("tustuts").unwrap();
        let square = a2t.multiply(&w, &w).unwrap();
        assert_eq!(square, a2t.element("tustustustus").unwrap());
        assert_eq!(square.length(), 12);
        assert_eq!(a2t.power(&w, 2).unwrap(), square);
    }

    #[test]
    fn arithmetic() {
        let a2t = families::affine_a2();
        let s = a2t.element("s").unwrap();
        assert!(a2t.multiply(&s, &s).unwrap().is_identity());
        assert_eq!(
            a2t.inverse(&a2t.element("stu").unwrap()).unwrap(),
            a2t.element("uts").unwrap()
        );
        let x = a2t.element("stu").unwrap();
        let inv = a2t.power(&x, -2).unwrap();
        assert!(a2t
            .multiply(&inv, &a2t.power(&x, 2).unwrap())
            .unwrap()
            .is_identity());
        assert_eq!(a2t.power_lengths(&x, 4).unwrap(), vec![3, 6, 9, 12]);
    }

    #[test]
    fn descents_and_support() {
        let a2 = families::dihedral(3);
        let sts = a2.element("sts").unwrap();
        assert_eq!(a2.left_descents(&sts).unwrap(), GeneratorSet(0b11));
        let st = a2.element("st").unwrap();
        assert_eq!(a2.left_descents(&st).unwrap(), GeneratorSet::singleton(0));
        assert_eq!(a2.right_descents(&st).unwrap(), GeneratorSet::singleton(1));
        assert_eq!(
            a2.left_descents(&Element::identity()).unwrap(),
            GeneratorSet::EMPTY
        );

        let a2t = families::affine_a2();
        assert_eq!(
            a2t.support(&a2t.element("tustuts").unwrap()),
            GeneratorSet(0b111)
        );
        assert_eq!(a2t.support(&Element::identity()), GeneratorSet::EMPTY);
    }

    #[test]
    fn certified_reduction_replays() {
        let a2t = families::affine_a2();
        for text in ["tustutstustuts", "stss", "ststs", "utsstu", ""] {
            let w = a2t.parse_word(text).unwrap();
            let (e, steps) = a2t.certified_reduction(&w).unwrap();
            assert_eq!(e, a2t.reduce(&w).unwrap());
            assert_eq!(&replay(a2t.matrix(), &w, &steps).unwrap(), e.word());
        }
    }

    #[test]
    fn invalid_generators_are_rejected() {
        let a2t = families::affine_a2();
        let bad = Word::new(vec![0, 7]);
        assert_eq!(
            a2t.reduce(&bad),
            Err(Error::InvalidGenerator { index: 7, rank: 3 })
        );
    }
}
