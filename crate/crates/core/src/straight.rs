//! Straight elements, full commutativity and the Coxeter-element shortcuts.
//!
//! An element `w` is straight when `ℓ(wⁿ) = n·ℓ(w)` for all `n`. For a
//! cyclically reduced `w` this holds exactly when every element of its
//! κ-closure is torsion-free; [`CoxeterSystem::is_straight`] decides it that
//! way and returns a checkable witness on failure. Power lengths are only
//! ever used as a cross-check.

use crate::braid::{for_each_move, MoveSet};
use crate::certificate::MoveCertificate;
use crate::error::{Error, Result};
use crate::matrix::GeneratorSet;
use crate::system::CoxeterSystem;
use crate::word::Element;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StraightnessWitness {
    NoWitness,
    /// A strictly shorter κ-related conjugate.
    ShorterConjugate {
        element: Element,
        certificate: MoveCertificate,
    },
    /// A κ-related conjugate that normalises `W_I` for spherical `I` and has
    /// a left descent in `I`.
    NonTorsionFreeMember {
        element: Element,
        subset: GeneratorSet,
    },
    /// `ℓ(w^power) = length < power · ℓ(w)`.
    PowerDefect {
        power: usize,
        length: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StraightnessVerdict {
    pub straight: bool,
    pub witness: StraightnessWitness,
}

impl StraightnessVerdict {
    /// Re-checks the witness independently of how it was found.
    pub fn verify(&self, system: &CoxeterSystem, w: &Element) -> Result<bool> {
        match &self.witness {
            StraightnessWitness::NoWitness => Ok(self.straight),
            StraightnessWitness::ShorterConjugate {
                element,
                certificate,
            } => {
                certificate.verify(system.matrix())?;
                Ok(!self.straight
                    && certificate.start == *w.word()
                    && certificate.end == *element.word()
                    && element.length() < w.length())
            }
            StraightnessWitness::NonTorsionFreeMember { element, subset } => {
                let descents = system.left_descents(element)?;
                Ok(!self.straight
                    && system.is_spherical(*subset)
                    && !subset.intersection(descents).is_empty()
                    && system.normalises(element, *subset)?
                    && system.kappa_closure(w)?.contains(element))
            }
            StraightnessWitness::PowerDefect { power, length } => {
                let actual = system.power(w, *power as i64)?.length();
                Ok(!self.straight && actual == *length && *length < power * w.length())
            }
        }
    }
}

impl CoxeterSystem {
    /// `ℓ(w), ℓ(w²), …, ℓ(w^count)`.
    pub fn power_length_profile(&self, w: &Element, count: usize) -> Result<Vec<usize>> {
        self.power_lengths(w, count)
    }

    pub fn is_straight(&self, w: &Element) -> Result<StraightnessVerdict> {
        let shorter = |element: Element, certificate: MoveCertificate| StraightnessVerdict {
            straight: false,
            witness: StraightnessWitness::ShorterConjugate {
                element,
                certificate,
            },
        };
        if !self.is_cyclically_reduced(w)? {
            let (v, cert) = self.cyclic_reduce(w)?;
            return Ok(shorter(v, cert));
        }
        let closure = self.kappa_closure(w)?;
        if !closure.length_preserved {
            let target = closure.min_stratum[0].clone();
            let cert = closure.certificate_to(self, closure.index_of(&target).unwrap())?;
            return Ok(shorter(target, cert));
        }
        for node in &closure.nodes {
            if !self.is_cyclically_reduced(node)? {
                return Err(Error::InvariantViolation(format!(
                    "`{}` is κ-related to the cyclically reduced `{}` without being cyclically reduced",
                    self.format(node),
                    self.format(w)
                )));
            }
        }
        for node in closure.sorted_nodes() {
            if let Some(subset) = self.torsion_witness(&node)? {
                return Ok(StraightnessVerdict {
                    straight: false,
                    witness: StraightnessWitness::NonTorsionFreeMember {
                        element: node,
                        subset,
                    },
                });
            }
        }
        Ok(StraightnessVerdict {
            straight: true,
            witness: StraightnessWitness::NoWitness,
        })
    }

    /// Fully commutative: the commutation class of a reduced word is its
    /// whole braid class.
    pub fn is_fc(&self, w: &Element) -> Result<bool> {
        let commutations = self.explore(w.letters(), MoveSet::Commutations, |_| false)?;
        let all = self.explore(w.letters(), MoveSet::All, |_| false)?;
        Ok(commutations.words().count() == all.words().count())
    }

    /// Fully commutative by the factor criterion: no reduced word contains
    /// an alternating factor `sts…` of length `m(s,t) ≥ 3`.
    pub fn is_fc_by_factors(&self, w: &Element) -> Result<bool> {
        let matrix = self.matrix();
        let e = self.explore(w.letters(), MoveSet::All, |word| {
            let mut long = false;
            for_each_move(matrix, word, MoveSet::All, |_, m| long |= m >= 3);
            long
        })?;
        Ok(e.hit.is_none())
    }

    /// Cyclically fully commutative: every rotation of every reduced word is
    /// a reduced word of a fully commutative element.
    pub fn is_cfc(&self, w: &Element) -> Result<bool> {
        if !self.is_cyclically_reduced(w)? {
            return Ok(false);
        }
        for v in self.elementary_related(w)? {
            if !self.is_fc(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Straightness of a CFC element, read off its standard parabolic
    /// closure.
    pub fn cfc_straight(&self, w: &Element) -> Result<bool> {
        if !self.is_cfc(w)? {
            return Err(Error::NotCfc);
        }
        Ok(self.only_infinite_irreducible_components(self.support(w)))
    }

    /// A product of all generators, each exactly once.
    pub fn is_coxeter_element(&self, w: &Element) -> bool {
        w.length() == self.rank() && self.support(w) == self.matrix().all_generators()
    }

    /// Whether Coxeter elements of this system are straight.
    pub fn coxeter_straight(&self) -> bool {
        self.only_infinite_irreducible_components(self.matrix().all_generators())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn power_profiles() {
        let a2t = families::affine_a2();
        assert_eq!(
            a2t.power_length_profile(&Element::identity(), 3).unwrap(),
            vec![0, 0, 0]
        );
        let stu = a2t.element("stu").unwrap();
        let expected: Vec<usize> = (1..=6).map(|n| 3 * n).collect();
        assert_eq!(a2t.power_length_profile(&stu, 6).unwrap(), expected);
        let w = a2t.element("tustuts").unwrap();
        assert_eq!(a2t.power_length_profile(&w, 2).unwrap(), vec![7, 12]);
    }

    #[test]
    fn straightness_examples() {
        let a2t = families::affine_a2();
        let w = a2t.element("tustuts").unwrap();
        let verdict = a2t.is_straight(&w).unwrap();
        assert!(!verdict.straight);
        assert_eq!(
            verdict.witness,
            StraightnessWitness::NonTorsionFreeMember {
                element: a2t.element("stustut").unwrap(),
                subset: GeneratorSet::singleton(1),
            }
        );
        assert!(verdict.verify(&a2t, &w).unwrap());

        let stu = a2t.element("stu").unwrap();
        assert!(a2t.is_straight(&stu).unwrap().straight);

        let s = a2t.element("s").unwrap();
        let verdict = a2t.is_straight(&s).unwrap();
        assert!(!verdict.straight);
        assert!(verdict.verify(&a2t, &s).unwrap());

        let a2 = families::dihedral(3);
        let sts = a2.element("sts").unwrap();
        let verdict = a2.is_straight(&sts).unwrap();
        assert!(matches!(
            verdict.witness,
            StraightnessWitness::ShorterConjugate { .. }
        ));
        assert!(verdict.verify(&a2, &sts).unwrap());

        assert!(a2t.is_straight(&Element::identity()).unwrap().straight);
    }

    #[test]
    fn full_commutativity() {
        let a2t = families::affine_a2();
        let a2 = families::dihedral(3);
        assert!(a2t.is_fc(&a2t.element("stu").unwrap()).unwrap());
        assert!(!a2.is_fc(&a2.element("sts").unwrap()).unwrap());
        assert!(!a2.is_fc_by_factors(&a2.element("sts").unwrap()).unwrap());
        assert!(a2.is_fc(&Element::identity()).unwrap());

        assert!(a2t.is_cfc(&a2t.element("stu").unwrap()).unwrap());
        assert!(!a2.is_cfc(&a2.element("sts").unwrap()).unwrap());
        assert!(a2t.is_cfc(&Element::identity()).unwrap());
    }

    #[test]
    fn cfc_and_coxeter_shortcuts() {
        let a2t = families::affine_a2();
        assert!(a2t.cfc_straight(&a2t.element("stu").unwrap()).unwrap());
        let a1a1 = families::dihedral(2);
        assert!(!a1a1.cfc_straight(&a1a1.element("st").unwrap()).unwrap());
        let univ = families::universal(3);
        assert!(univ.cfc_straight(&univ.element("st").unwrap()).unwrap());
        assert_eq!(
            univ.cfc_straight(&univ.element("sts").unwrap()),
            Err(Error::NotCfc)
        );
        let a2 = families::dihedral(3);
        assert_eq!(
            a2.cfc_straight(&a2.element("sts").unwrap()),
            Err(Error::NotCfc)
        );

        assert!(a2t.is_coxeter_element(&a2t.element("stu").unwrap()));
        assert!(!a2t.is_coxeter_element(&a2t.element("st").unwrap()));
        assert!(a2t.coxeter_straight());
        let a3 = families::type_a(3);
        assert!(a3.is_coxeter_element(&a3.element("s1 s2 s3").unwrap()));
        assert!(!a3.coxeter_straight());
    }
}
