//! Cyclic shifts, the κ-relation and conjugacy.
//!
//! An element `u` is elementary related to `v` when `v` is represented by a
//! rotation of some reduced word of `u`; the κ-closure of `u` is everything
//! reachable by chains of such moves. Every node of a closure is conjugate to
//! its start and no longer than it.

use std::collections::BTreeSet;

use rustc_hash::{FxHashMap, FxHashSet};

use crate::braid::MoveSet;
use crate::certificate::{MoveCertificate, Step};
use crate::error::{Error, Result};
use crate::matrix::{Generator, GeneratorSet};
use crate::oracle;
use crate::system::CoxeterSystem;
use crate::word::{Element, Word};

/// One elementary move: rotate reduced word `member` of node `source` by
/// `shift` letters and reduce, landing on node `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KappaEdge {
    pub source: usize,
    pub member: Word,
    pub shift: usize,
    pub target: usize,
}

/// The set of elements reachable from `start` by elementary moves.
///
/// `nodes` is in breadth-first discovery order with `nodes[0] == start`;
/// one edge is kept per ordered pair of distinct nodes.
#[derive(Clone, Debug)]
pub struct KappaClosure {
    pub start: Element,
    pub nodes: Vec<Element>,
    pub edges: Vec<KappaEdge>,
    pub min_length: usize,
    /// Nodes of minimal length, sorted shortlex.
    pub min_stratum: Vec<Element>,
    pub length_preserved: bool,
    index: FxHashMap<Element, usize>,
    /// Edge through which each node was first reached.
    tree: Vec<Option<usize>>,
}

impl KappaClosure {
    pub fn index_of(&self, e: &Element) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn contains(&self, e: &Element) -> bool {
        self.index.contains_key(e)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Nodes sorted shortlex.
    pub fn sorted_nodes(&self) -> Vec<Element> {
        let mut v = self.nodes.clone();
        v.sort();
        v
    }

    /// A certificate leading from the start's canonical word to the
    /// canonical word of node `target`.
    pub fn certificate_to(&self, system: &CoxeterSystem, target: usize) -> Result<MoveCertificate> {
        let mut path = Vec::new();
        let mut at = target;
        while let Some(edge) = self.tree[at] {
            path.push(edge);
            at = self.edges[edge].source;
        }
        path.reverse();
        let mut steps = Vec::new();
        for edge in path.into_iter().map(|i| &self.edges[i]) {
            let source = &self.nodes[edge.source];
            let braids = system.braid_path(source.letters(), edge.member.letters())?;
            steps.extend(braids.into_iter().map(Step::Braid));
            steps.push(Step::Rotate {
                shift: edge.shift,
                word: edge.member.clone(),
            });
            let (reached, tail) = system.certified_reduction(&edge.member.rotated(edge.shift))?;
            debug_assert_eq!(reached, self.nodes[edge.target]);
            steps.extend(tail);
        }
        Ok(MoveCertificate {
            start: self.start.word().clone(),
            steps,
            end: self.nodes[target].word().clone(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConjugacyStatus {
    Conjugate,
    NotConjugate,
    Unknown,
}

/// Why a negative conjugacy answer is complete.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompletenessBasis {
    /// One side has infinite order and property (Cent'), so cyclically
    /// reduced conjugates are κ-related.
    CentPrimeInfiniteOrder,
    /// Every element of the (finite) group was tried as a conjugator.
    BruteForce,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConjugacyWitness {
    /// Move sequences from each element ending on the same canonical word.
    Moves {
        left: MoveCertificate,
        right: MoveCertificate,
    },
    /// `v` with `v · u1 · v⁻¹ = u2`, found by exhaustive search.
    Conjugator(Element),
}

impl ConjugacyWitness {
    /// Re-checks the witness against the two elements.
    pub fn verify(&self, system: &CoxeterSystem, u1: &Element, u2: &Element) -> Result<bool> {
        match self {
            ConjugacyWitness::Moves { left, right } => {
                left.verify(system.matrix())?;
                right.verify(system.matrix())?;
                Ok(left.start == *u1.word() && right.start == *u2.word() && left.end == right.end)
            }
            ConjugacyWitness::Conjugator(v) => Ok(system.conjugate(v, u1)? == *u2),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyVerdict {
    pub status: ConjugacyStatus,
    pub witness: Option<ConjugacyWitness>,
    pub basis: Option<CompletenessBasis>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ConjugacyOptions {
    /// Fall back to an exhaustive conjugator search when the κ-strata are
    /// disjoint and no completeness result applies.
    pub brute_force: bool,
    /// Longest conjugator tried by the fallback; `None` tries the whole group
    /// when it is finite and length 8 otherwise.
    pub conjugator_cap: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriState {
    Yes,
    No,
    Unknown,
}

impl CoxeterSystem {
    /// All cyclic rotations of a word.
    pub fn rotations(&self, word: &Word) -> Vec<Word> {
        word.rotations()
    }

    fn rotation_element(
        &self,
        member: &[Generator],
        shift: usize,
        cache: &mut FxHashMap<Vec<Generator>, Element>,
    ) -> Result<Element> {
        let mut rotated = member[shift..].to_vec();
        rotated.extend_from_slice(&member[..shift]);
        if let Some(e) = cache.get(&rotated) {
            return Ok(e.clone());
        }
        let tail = &member[..shift];
        let reduced = self.reduce_onto(member[shift..].to_vec(), tail)?;
        let e = self.canonicalize(&reduced)?;
        cache.insert(rotated, e.clone());
        Ok(e)
    }

    fn reduced_words(&self, u: &Element) -> Result<Vec<Vec<Generator>>> {
        let e = self.explore(u.letters(), MoveSet::All, |_| false)?;
        let mut words: Vec<Vec<Generator>> = e.words().map(<[Generator]>::to_vec).collect();
        words.sort();
        Ok(words)
    }

    /// Elements obtained by rotating a reduced word of `u` and reducing; `u`
    /// itself is included through the trivial rotation.
    pub fn elementary_related(&self, u: &Element) -> Result<Vec<Element>> {
        let mut out = BTreeSet::from([u.clone()]);
        let mut cache = FxHashMap::default();
        for member in self.reduced_words(u)? {
            for shift in 1..member.len() {
                out.insert(self.rotation_element(&member, shift, &mut cache)?);
            }
        }
        Ok(out.into_iter().collect())
    }

    fn closure_until(
        &self,
        start: &Element,
        mut stop: impl FnMut(&Element) -> bool,
    ) -> Result<(KappaClosure, Option<usize>)> {
        let mut nodes = vec![start.clone()];
        let mut index = FxHashMap::default();
        index.insert(start.clone(), 0);
        let mut tree = vec![None];
        let mut edges = Vec::new();
        let mut cache = FxHashMap::default();
        let mut hit = stop(start).then_some(0);
        let mut head = 0;
        while head < nodes.len() && hit.is_none() {
            let mut seen_targets = FxHashSet::default();
            for member in self.reduced_words(&nodes[head])? {
                for shift in 1..member.len() {
                    let target = self.rotation_element(&member, shift, &mut cache)?;
                    let t = match index.get(&target) {
                        Some(&t) => t,
                        None => {
                            if nodes.len() >= self.node_cap() {
                                return Err(Error::CapExceeded {
                                    cap: self.node_cap(),
                                });
                            }
                            let t = nodes.len();
                            index.insert(target.clone(), t);
                            tree.push(Some(edges.len()));
                            if hit.is_none() && stop(&target) {
                                hit = Some(t);
                            }
                            nodes.push(target);
                            t
                        }
                    };
                    if t != head && seen_targets.insert(t) {
                        edges.push(KappaEdge {
                            source: head,
                            member: Word::new(member.clone()),
                            shift,
                            target: t,
                        });
                    }
                }
            }
            head += 1;
        }
        let min_length = nodes.iter().map(Element::length).min().unwrap_or(0);
        let mut min_stratum: Vec<Element> = nodes
            .iter()
            .filter(|n| n.length() == min_length)
            .cloned()
            .collect();
        min_stratum.sort();
        let length_preserved = nodes.iter().all(|n| n.length() == start.length());
        let closure = KappaClosure {
            start: start.clone(),
            nodes,
            edges,
            min_length,
            min_stratum,
            length_preserved,
            index,
            tree,
        };
        Ok((closure, hit))
    }

    pub fn kappa_closure(&self, u: &Element) -> Result<KappaClosure> {
        Ok(self.closure_until(u, |_| false)?.0)
    }

    /// Whether every rotation of every reduced word of `w` is reduced.
    pub fn is_cyclically_reduced(&self, w: &Element) -> Result<bool> {
        let n = w.length();
        for member in self.reduced_words(w)? {
            for shift in 1..n {
                let reduced = self.reduce_onto(member[shift..].to_vec(), &member[..shift])?;
                if reduced.len() < n {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// A node of least length in the κ-closure of `w` (shortlex-least among
    /// those), with a certificate from `w`. The result is cyclically reduced.
    pub fn cyclic_reduce(&self, w: &Element) -> Result<(Element, MoveCertificate)> {
        let closure = self.kappa_closure(w)?;
        let target = closure.min_stratum[0].clone();
        let idx = closure.index_of(&target).expect("stratum node");
        let cert = closure.certificate_to(self, idx)?;
        Ok((target, cert))
    }

    /// A node of the κ-closure of `w` lying in a finite standard parabolic
    /// subgroup, if any. Such a node exists exactly when `w` has finite order.
    pub fn spherical_support_node(&self, w: &Element) -> Result<Option<Element>> {
        let (closure, hit) = self.closure_until(w, |node| self.is_spherical(self.support(node)))?;
        Ok(hit.map(|i| closure.nodes[i].clone()))
    }

    pub fn is_finite_order(&self, w: &Element) -> Result<bool> {
        Ok(self.spherical_support_node(w)?.is_some())
    }

    /// The order of `w`, computed inside the finite parabolic subgroup that
    /// contains a κ-related conjugate; `None` for infinite order.
    pub fn order(&self, w: &Element) -> Result<Option<u64>> {
        let Some(x) = self.spherical_support_node(w)? else {
            return Ok(None);
        };
        let mut acc = x.clone();
        let mut n = 1u64;
        while !acc.is_identity() {
            acc = self.multiply(&acc, &x)?;
            n += 1;
        }
        Ok(Some(n))
    }

    /// Property (Cent') for a cyclically reduced `u`: every node `w` of its
    /// κ-closure that normalises a subgroup `x W_J x⁻¹` (with `J ⊆ I`
    /// spherical and `x ∈ W_I`) also centralises it.
    pub fn has_cent_prime(&self, u: &Element) -> Result<bool> {
        if !self.is_cyclically_reduced(u)? {
            return Err(Error::NotCyclicallyReduced);
        }
        let closure = self.kappa_closure(u)?;
        let subgroups = self.conjugated_parabolics()?;
        for w in &closure.nodes {
            for sub in &subgroups {
                let mut normalises = true;
                let mut centralises = true;
                for g in &sub.generators {
                    let image = self.conjugate(w, g)?;
                    if image != *g {
                        centralises = false;
                        let back = self.conjugate(&sub.conjugator_inverse, &image)?;
                        if !self.support(&back).is_subset(sub.inner) {
                            normalises = false;
                            break;
                        }
                    }
                }
                if normalises && !centralises {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The subgroups `x W_J x⁻¹` for spherical `J ⊆ I`, `x ∈ W_I`, listed once
    /// per distinct generating set.
    fn conjugated_parabolics(&self) -> Result<Vec<ConjugatedParabolic>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for outer in self.spherical_subsets() {
            let elements = self.parabolic_elements(outer)?;
            for inner in outer.subsets() {
                if inner.is_empty() {
                    continue;
                }
                for x in &elements {
                    let mut generators = Vec::with_capacity(inner.len());
                    for j in inner.iter() {
                        generators.push(self.conjugate(x, &self.generator_element(j))?);
                    }
                    let mut key = generators.clone();
                    key.sort();
                    if seen.insert(key) {
                        out.push(ConjugatedParabolic {
                            inner,
                            conjugator_inverse: self.inverse(x)?,
                            generators,
                        });
                    }
                }
            }
        }
        Ok(out)
    }

    /// `Yes` when `w` is cyclically reduced and either has finite order or
    /// property (Cent'); `No` when a strictly shorter κ-related conjugate
    /// exists; `Unknown` otherwise.
    pub fn is_min_in_conjugacy_class(&self, w: &Element) -> Result<TriState> {
        let (v, _) = self.cyclic_reduce(w)?;
        if v.length() < w.length() {
            return Ok(TriState::No);
        }
        if self.is_finite_order(w)? || self.has_cent_prime(w)? {
            Ok(TriState::Yes)
        } else {
            Ok(TriState::Unknown)
        }
    }

    pub fn are_conjugate(
        &self,
        u1: &Element,
        u2: &Element,
        options: ConjugacyOptions,
    ) -> Result<ConjugacyVerdict> {
        let (v1, to_v1) = self.cyclic_reduce(u1)?;
        let (v2, to_v2) = self.cyclic_reduce(u2)?;
        if v1.length() == v2.length() {
            let k1 = self.kappa_closure(&v1)?;
            let k2 = self.kappa_closure(&v2)?;
            let common = k1
                .min_stratum
                .iter()
                .find(|x| k2.min_stratum.binary_search(x).is_ok());
            if let Some(x) = common {
                let left = to_v1.then(k1.certificate_to(self, k1.index_of(x).unwrap())?);
                let right = to_v2.then(k2.certificate_to(self, k2.index_of(x).unwrap())?);
                return Ok(ConjugacyVerdict {
                    status: ConjugacyStatus::Conjugate,
                    witness: Some(ConjugacyWitness::Moves { left, right }),
                    basis: None,
                });
            }
        }

        for (u, v) in [(u1, &v1), (u2, &v2)] {
            if !self.is_finite_order(u)? && self.has_cent_prime(v)? {
                return Ok(ConjugacyVerdict {
                    status: ConjugacyStatus::NotConjugate,
                    witness: None,
                    basis: Some(CompletenessBasis::CentPrimeInfiniteOrder),
                });
            }
        }

        if options.brute_force {
            let search = oracle::find_conjugator(self, u1, u2, options.conjugator_cap)?;
            if let Some(v) = search.conjugator {
                return Ok(ConjugacyVerdict {
                    status: ConjugacyStatus::Conjugate,
                    witness: Some(ConjugacyWitness::Conjugator(v)),
                    basis: None,
                });
            }
            if search.exhaustive {
                return Ok(ConjugacyVerdict {
                    status: ConjugacyStatus::NotConjugate,
                    witness: None,
                    basis: Some(CompletenessBasis::BruteForce),
                });
            }
        }
        Ok(ConjugacyVerdict {
            status: ConjugacyStatus::Unknown,
            witness: None,
            basis: None,
        })
    }
}

struct ConjugatedParabolic {
    inner: GeneratorSet,
    conjugator_inverse: Element,
    generators: Vec<Element>,
}
