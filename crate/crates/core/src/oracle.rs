//! Independent ground truth for testing the combinatorial engine.
//!
//! [`GeometricRep`] decides reducedness numerically in the standard
//! geometric representation and shares no code with the braid-closure
//! search. The enumeration helpers are brute force over group elements.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::matrix::{CoxeterMatrix, Order};
use crate::system::CoxeterSystem;
use crate::word::{Element, Word};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;
pub const DEFAULT_LENGTH_CAP: usize = 16;

/// The reflection representation on the span of the simple roots, with
/// `B(α_s, α_t) = −cos(π / m(s,t))` and `−1` for `m = ∞`.
#[derive(Clone, Debug)]
pub struct GeometricRep {
    rank: usize,
    form: Vec<f64>,
    tolerance: f64,
    length_cap: usize,
}

impl GeometricRep {
    pub fn new(matrix: &CoxeterMatrix) -> Self {
        let rank = matrix.rank();
        let mut form = vec![0.0; rank * rank];
        for s in matrix.generators() {
            for t in matrix.generators() {
                form[s as usize * rank + t as usize] = match matrix.m(s, t) {
                    Order::Finite(1) => 1.0,
                    Order::Finite(m) => -(PI / m as f64).cos(),
                    Order::Infinite => -1.0,
                };
            }
        }
        GeometricRep {
            rank,
            form,
            tolerance: DEFAULT_TOLERANCE,
            length_cap: DEFAULT_LENGTH_CAP,
        }
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self
    }

    pub fn with_length_cap(mut self, cap: usize) -> Self {
        self.length_cap = cap;
        self
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn bilinear(&self, s: usize, t: usize) -> f64 {
        self.form[s * self.rank + t]
    }

    /// `v ↦ v − 2 B(α_s, v) α_s`.
    pub fn reflect(&self, s: usize, v: &mut [f64]) {
        let row = &self.form[s * self.rank..(s + 1) * self.rank];
        let b: f64 = row.iter().zip(v.iter()).map(|(x, y)| x * y).sum();
        v[s] -= 2.0 * b;
    }

    /// Image of `α_s` under the product of `prefix`, applied right to left.
    pub fn root_image(&self, prefix: &[u8], s: usize) -> Vec<f64> {
        let mut v = vec![0.0; self.rank];
        v[s] = 1.0;
        for &g in prefix.iter().rev() {
            self.reflect(g as usize, &mut v);
        }
        v
    }

    /// `Some(true)` for a positive root, `Some(false)` for a negative one and
    /// `None` if the signs cannot be decided at the tolerance.
    fn sign(&self, root: &[f64]) -> Option<bool> {
        let pos = root.iter().any(|&c| c > self.tolerance);
        let neg = root.iter().any(|&c| c < -self.tolerance);
        match (pos, neg) {
            (true, false) => Some(true),
            (false, true) => Some(false),
            _ => None,
        }
    }

    /// A word is reduced iff each letter's simple root stays positive under
    /// the product of the letters before it.
    pub fn is_reduced(&self, word: &Word) -> Result<bool> {
        let letters = word.letters();
        if letters.len() > self.length_cap {
            return Err(Error::WordTooLong {
                len: letters.len(),
                cap: self.length_cap,
            });
        }
        if let Some(&s) = letters.iter().find(|&&s| s as usize >= self.rank) {
            return Err(Error::InvalidGenerator {
                index: s as usize,
                rank: self.rank,
            });
        }
        for (i, &s) in letters.iter().enumerate() {
            let root = self.root_image(&letters[..i], s as usize);
            match self.sign(&root) {
                Some(true) => {}
                Some(false) => return Ok(false),
                None => return Err(Error::NumericallyAmbiguous { position: i }),
            }
        }
        Ok(true)
    }
}

/// Reducedness decided in the geometric representation at the default
/// tolerance.
pub fn is_reduced_oracle(matrix: &CoxeterMatrix, word: &Word) -> Result<bool> {
    GeometricRep::new(matrix).is_reduced(word)
}

/// Elements of length at most `max_len`, with a flag telling whether the
/// whole group was reached.
pub fn enumerate_with_completeness(
    system: &CoxeterSystem,
    max_len: usize,
) -> Result<(Vec<Element>, bool)> {
    let mut seen = BTreeSet::from([Element::identity()]);
    let mut layer = vec![Element::identity()];
    let mut length = 0;
    while !layer.is_empty() && length < max_len {
        let mut next = BTreeSet::new();
        for x in &layer {
            for s in system.matrix().generators() {
                let y = system.multiply(x, &system.generator_element(s))?;
                if y.length() > x.length() && !seen.contains(&y) {
                    next.insert(y);
                }
            }
        }
        if seen.len() + next.len() > system.node_cap() {
            return Err(Error::CapExceeded {
                cap: system.node_cap(),
            });
        }
        seen.extend(next.iter().cloned());
        layer = next.into_iter().collect();
        length += 1;
    }
    let complete = layer.is_empty()
        || layer.iter().all(|x| {
            system.matrix().generators().all(|s| {
                system
                    .multiply(x, &system.generator_element(s))
                    .map(|y| y.length() < x.length())
                    .unwrap_or(false)
            })
        });
    Ok((seen.into_iter().collect(), complete))
}

/// All elements of length at most `max_len`, sorted shortlex.
pub fn enumerate_elements(system: &CoxeterSystem, max_len: usize) -> Result<Vec<Element>> {
    Ok(enumerate_with_completeness(system, max_len)?.0)
}

/// The whole group, when it is finite.
pub fn enumerate_group(system: &CoxeterSystem) -> Result<Vec<Element>> {
    if !system.is_spherical(system.matrix().all_generators()) {
        return Err(Error::NotSpherical);
    }
    enumerate_elements(system, usize::MAX)
}

/// `{ v w v⁻¹ : ℓ(v) ≤ conjugator_cap }`, sorted shortlex.
pub fn conjugacy_class_bruteforce(
    system: &CoxeterSystem,
    w: &Element,
    conjugator_cap: usize,
) -> Result<Vec<Element>> {
    let mut class = BTreeSet::new();
    for v in enumerate_elements(system, conjugator_cap)? {
        class.insert(system.conjugate(&v, w)?);
    }
    Ok(class.into_iter().collect())
}

/// Least `n ≤ cap` with `wⁿ = 1`.
pub fn order_bruteforce(system: &CoxeterSystem, w: &Element, cap: u64) -> Result<Option<u64>> {
    let mut acc = Element::identity();
    for n in 1..=cap {
        acc = system.multiply(&acc, w)?;
        if acc.is_identity() {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

pub struct ConjugatorSearch {
    pub conjugator: Option<Element>,
    /// True when every element of the group was tried.
    pub exhaustive: bool,
}

/// Searches for `v` with `v u1 v⁻¹ = u2`. Without a cap, finite groups are
/// searched completely and infinite ones up to conjugator length 8.
pub fn find_conjugator(
    system: &CoxeterSystem,
    u1: &Element,
    u2: &Element,
    cap: Option<usize>,
) -> Result<ConjugatorSearch> {
    let finite = system.is_spherical(system.matrix().all_generators());
    let max_len = cap.unwrap_or(if finite { usize::MAX } else { 8 });
    let (candidates, complete) = enumerate_with_completeness(system, max_len)?;
    for v in candidates {
        if system.conjugate(&v, u1)? == *u2 {
            return Ok(ConjugatorSearch {
                conjugator: Some(v),
                exhaustive: complete,
            });
        }
    }
    Ok(ConjugatorSearch {
        conjugator: None,
        exhaustive: complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn geometric_reducedness() {
        let a2t = families::affine_a2();
        let rep = GeometricRep::new(a2t.matrix());
        let w = |t: &str| a2t.parse_word(t).unwrap();
        assert!(!rep.is_reduced(&w("ss")).unwrap());
        assert!(rep.is_reduced(&w("tustuts")).unwrap());
        assert!(rep.is_reduced(&Word::empty()).unwrap());
        assert!(!rep.is_reduced(&w("stst")).unwrap());
        let long = Word::new([0, 1, 2].repeat(6));
        assert!(matches!(
            rep.is_reduced(&long),
            Err(Error::WordTooLong { len: 18, cap: 16 })
        ));
        assert!((rep.bilinear(0, 0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn generators_are_involutions() {
        for sys in [
            families::affine_a2(),
            families::type_b(3),
            families::universal(3),
        ] {
            let rep = GeometricRep::new(sys.matrix());
            for s in 0..sys.rank() {
                let mut v: Vec<f64> = (0..sys.rank()).map(|i| 0.3 + i as f64).collect();
                let orig = v.clone();
                rep.reflect(s, &mut v);
                rep.reflect(s, &mut v);
                for (a, b) in v.iter().zip(&orig) {
                    assert!((a - b).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(
            enumerate_elements(&families::dihedral(3), 3).unwrap().len(),
            6
        );
        assert_eq!(
            enumerate_elements(&families::type_a(3), 6).unwrap().len(),
            24
        );
        assert_eq!(
            enumerate_elements(&families::affine_a2(), 0).unwrap(),
            vec![Element::identity()]
        );
        assert_eq!(enumerate_group(&families::type_b(3)).unwrap().len(), 48);
        let (_, complete) = enumerate_with_completeness(&families::type_a(3), 5).unwrap();
        assert!(!complete);
        let (_, complete) = enumerate_with_completeness(&families::type_a(3), 6).unwrap();
        assert!(complete);
        let (_, complete) = enumerate_with_completeness(&families::affine_a2(), 4).unwrap();
        assert!(!complete);
    }

    #[test]
    fn brute_force_classes_and_orders() {
        let a3 = families::type_a(3);
        let s1 = a3.element("s1").unwrap();
        assert_eq!(conjugacy_class_bruteforce(&a3, &s1, 6).unwrap().len(), 6);
        assert_eq!(
            conjugacy_class_bruteforce(&a3, &Element::identity(), 6).unwrap(),
            vec![Element::identity()]
        );
        let a2 = families::dihedral(3);
        let class = conjugacy_class_bruteforce(&a2, &a2.element("sts").unwrap(), 3).unwrap();
        assert!(class.iter().any(|e| e.length() == 1));

        assert_eq!(
            order_bruteforce(&a2, &a2.element("s").unwrap(), 10).unwrap(),
            Some(2)
        );
        assert_eq!(
            order_bruteforce(&a2, &a2.element("st").unwrap(), 10).unwrap(),
            Some(3)
        );
        let a2t = families::affine_a2();
        assert_eq!(
            order_bruteforce(&a2t, &a2t.element("stu").unwrap(), 20).unwrap(),
            None
        );
    }
}
