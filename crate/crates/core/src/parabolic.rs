//! Standard parabolic subgroups, the finite-type classification and
//! normaliser decompositions.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::{CoxeterMatrix, Generator, GeneratorSet, Order};
use crate::system::CoxeterSystem;
use crate::word::Element;

/// The irreducible finite Coxeter types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FiniteType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    /// Dihedral of order `2m` with `m ∉ {3, 4}`.
    I2(u32),
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteType::A(n) => write!(f, "A{n}"),
            FiniteType::B(n) => write!(f, "B{n}"),
            FiniteType::D(n) => write!(f, "D{n}"),
            FiniteType::E(n) => write!(f, "E{n}"),
            FiniteType::F4 => f.write_str("F4"),
            FiniteType::H(n) => write!(f, "H{n}"),
            FiniteType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// Connected components of the Coxeter diagram restricted to `set`, ordered
/// by their least generator.
pub fn components(matrix: &CoxeterMatrix, set: GeneratorSet) -> Vec<GeneratorSet> {
    let mut remaining = set;
    let mut out = Vec::new();
    while let Some(seed) = remaining.iter().next() {
        let mut component = GeneratorSet::singleton(seed);
        let mut stack = vec![seed];
        while let Some(s) = stack.pop() {
            for t in set.iter() {
                if !component.contains(t) && matrix.m(s, t).is_edge() {
                    component.insert(t);
                    stack.push(t);
                }
            }
        }
        remaining = GeneratorSet(remaining.0 & !component.0);
        out.push(component);
    }
    out
}

/// Identifies a connected diagram with one of the finite types, or returns
/// `None` when the component generates an infinite group.
pub fn classify_component(matrix: &CoxeterMatrix, component: GeneratorSet) -> Option<FiniteType> {
    let nodes: Vec<Generator> = component.iter().collect();
    let n = nodes.len();
    let mut edges = Vec::new();
    for (i, &s) in nodes.iter().enumerate() {
        for &t in &nodes[i + 1..] {
            match matrix.m(s, t) {
                Order::Infinite => return None,
                Order::Finite(m) if m >= 3 => edges.push((s, t, m)),
                _ => {}
            }
        }
    }
    match n {
        0 => return None,
        1 => return Some(FiniteType::A(1)),
        2 => {
            return match edges.as_slice() {
                [(_, _, 3)] => Some(FiniteType::A(2)),
                [(_, _, 4)] => Some(FiniteType::B(2)),
                [(_, _, m)] => Some(FiniteType::I2(*m)),
                _ => None,
            }
        }
        _ => {}
    }
    // Connected with n - 1 edges: a tree.
    if edges.len() != n - 1 {
        return None;
    }
    let degree = |s: Generator| edges.iter().filter(|e| e.0 == s || e.1 == s).count();
    let leaf = |s: Generator| degree(s) == 1;
    let max_degree = nodes.iter().map(|&s| degree(s)).max().unwrap_or(0);
    let special: Vec<_> = edges.iter().filter(|e| e.2 != 3).collect();

    match special.as_slice() {
        [] if max_degree <= 2 => Some(FiniteType::A(n)),
        [] => {
            let branches: Vec<Generator> =
                nodes.iter().copied().filter(|&s| degree(s) >= 3).collect();
            if branches.len() != 1 || degree(branches[0]) != 3 {
                return None;
            }
            let centre = branches[0];
            let mut arms: Vec<usize> = edges
                .iter()
                .filter_map(|&(a, b, _)| match (a == centre, b == centre) {
                    (true, _) => Some(b),
                    (_, true) => Some(a),
                    _ => None,
                })
                .map(|start| arm_length(&edges, centre, start))
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => Some(FiniteType::D(n)),
                [1, 2, 2] => Some(FiniteType::E(6)),
                [1, 2, 3] => Some(FiniteType::E(7)),
                [1, 2, 4] => Some(FiniteType::E(8)),
                _ => None,
            }
        }
        [&(a, b, m)] if max_degree <= 2 => {
            let at_end = leaf(a) || leaf(b);
            match (m, at_end, n) {
                (4, true, _) => Some(FiniteType::B(n)),
                (4, false, 4) => Some(FiniteType::F4),
                (5, true, 3) => Some(FiniteType::H(3)),
                (5, true, 4) => Some(FiniteType::H(4)),
                _ => None,
            }
        }
        _ => None,
    }
}

fn arm_length(edges: &[(Generator, Generator, u32)], centre: Generator, start: Generator) -> usize {
    let (mut prev, mut cur, mut len) = (centre, start, 1);
    loop {
        let next = edges.iter().find_map(|&(a, b, _)| {
            if a == cur && b != prev {
                Some(b)
            } else if b == cur && a != prev {
                Some(a)
            } else {
                None
            }
        });
        match next {
            Some(n) => {
                prev = cur;
                cur = n;
                len += 1;
            }
            None => return len,
        }
    }
}

/// A subset `I ⊆ S` with its diagram components and sphericity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSubset {
    pub members: GeneratorSet,
    pub components: Vec<GeneratorSet>,
    /// The finite type of each component, `None` for infinite ones.
    pub types: Vec<Option<FiniteType>>,
    pub spherical: bool,
}

impl GeneratorSubset {
    pub fn new(matrix: &CoxeterMatrix, members: GeneratorSet) -> Self {
        let components = components(matrix, members);
        let types: Vec<_> = components
            .iter()
            .map(|&c| classify_component(matrix, c))
            .collect();
        let spherical = types.iter().all(Option::is_some);
        GeneratorSubset {
            members,
            components,
            types,
            spherical,
        }
    }

    /// True when no irreducible component is finite.
    pub fn only_infinite_components(&self) -> bool {
        self.types.iter().all(Option::is_none)
    }
}

/// `w = w_I · n_I` with `w_I ∈ W_I` and `n_I` normalising `W_I` without
/// left descents in `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormaliserDecomposition {
    pub subset: GeneratorSubset,
    pub torsion_part: Element,
    pub straight_part: Element,
}

impl CoxeterSystem {
    pub fn subset(&self, members: GeneratorSet) -> GeneratorSubset {
        GeneratorSubset::new(self.matrix(), members)
    }

    pub fn is_spherical(&self, set: GeneratorSet) -> bool {
        components(self.matrix(), set)
            .into_iter()
            .all(|c| classify_component(self.matrix(), c).is_some())
    }

    /// All spherical subsets of `S`, ordered by size and then by mask.
    pub fn spherical_subsets(&self) -> Vec<GeneratorSet> {
        let mut found = vec![GeneratorSet::EMPTY];
        let mut frontier = vec![GeneratorSet::EMPTY];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for set in frontier {
                let start = set.iter().last().map_or(0, |g| g as usize + 1);
                for s in start..self.rank() {
                    let mut bigger = set;
                    bigger.insert(s as Generator);
                    if self.is_spherical(bigger) {
                        next.push(bigger);
                    }
                }
            }
            found.extend_from_slice(&next);
            frontier = next;
        }
        found.sort_by_key(|s| (s.len(), s.0));
        found
    }

    pub fn only_infinite_irreducible_components(&self, set: GeneratorSet) -> bool {
        self.subset(set).only_infinite_components()
    }

    pub fn standard_parabolic_closure(&self, w: &Element) -> GeneratorSubset {
        self.subset(self.support(w))
    }

    pub fn element_of_parabolic(&self, w: &Element, set: GeneratorSet) -> bool {
        self.support(w).is_subset(set)
    }

    /// All elements of the finite group `W_I`, sorted shortlex.
    pub fn parabolic_elements(&self, set: GeneratorSet) -> Result<Vec<Element>> {
        if !self.is_spherical(set) {
            return Err(Error::NotSpherical);
        }
        let mut seen = BTreeSet::from([Element::identity()]);
        let mut frontier = vec![Element::identity()];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for x in &frontier {
                for s in set.iter() {
                    let y = self.multiply(x, &self.generator_element(s))?;
                    if y.length() > x.length() && seen.insert(y.clone()) {
                        if seen.len() > self.node_cap() {
                            return Err(Error::CapExceeded {
                                cap: self.node_cap(),
                            });
                        }
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        Ok(seen.into_iter().collect())
    }

    /// Whether `w` normalises `W_I`, tested on the generators of `I`.
    pub fn normalises(&self, w: &Element, set: GeneratorSet) -> Result<bool> {
        for s in set.iter() {
            let image = self.conjugate(w, &self.generator_element(s))?;
            if !self.support(&image).is_subset(set) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Splits `w = w_I · u` with `u` the shortest element of `W_I · w`.
    pub fn coset_decomposition(
        &self,
        set: GeneratorSet,
        w: &Element,
    ) -> Result<(Element, Element)> {
        let mut rep = w.clone();
        let mut stripped = Vec::new();
        loop {
            let descents = self.left_descents(&rep)?.intersection(set);
            let Some(s) = descents.iter().next() else {
                break;
            };
            rep = self.multiply(&self.generator_element(s), &rep)?;
            stripped.push(s);
        }
        let parabolic = self.reduce(&stripped.into())?;
        Ok((parabolic, rep))
    }

    pub fn min_coset_rep(&self, set: GeneratorSet, w: &Element) -> Result<Element> {
        Ok(self.coset_decomposition(set, w)?.1)
    }

    pub fn normaliser_decomposition(
        &self,
        w: &Element,
        set: GeneratorSet,
    ) -> Result<NormaliserDecomposition> {
        let subset = self.subset(set);
        if !subset.spherical {
            return Err(Error::NotSpherical);
        }
        if !self.normalises(w, set)? {
            return Err(Error::NotNormalising);
        }
        let (torsion_part, straight_part) = self.coset_decomposition(set, w)?;
        Ok(NormaliserDecomposition {
            subset,
            torsion_part,
            straight_part,
        })
    }

    /// The least spherical `I` (by size, then mask) such that `w` normalises
    /// `W_I` and has a left descent in `I`; `None` when `w` is torsion-free.
    pub fn torsion_witness(&self, w: &Element) -> Result<Option<GeneratorSet>> {
        let descents = self.left_descents(w)?;
        if descents.is_empty() {
            return Ok(None);
        }
        for set in self.spherical_subsets() {
            if set.intersection(descents).is_empty() {
                continue;
            }
            if self.normalises(w, set)? {
                return Ok(Some(set));
            }
        }
        Ok(None)
    }

    pub fn is_torsion_free(&self, w: &Element) -> Result<bool> {
        Ok(self.torsion_witness(w)?.is_none())
    }

    /// Whether `w g w⁻¹ = g` for every `g` in `generators`.
    pub fn centralises(&self, w: &Element, generators: &[Element]) -> Result<bool> {
        for g in generators {
            if self.conjugate(w, g)? != *g {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
