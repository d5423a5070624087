#![allow(dead_code)]

use std::collections::BTreeSet;

use coxeter_core::{families, CoxeterMatrix, CoxeterSystem, Element, GeneratorSet, Order, Word};
use proptest::prelude::*;

pub fn h3() -> CoxeterSystem {
    let m = CoxeterMatrix::from_pairs(
        &["a", "b", "c"],
        &[("a", "b", Order::Finite(5)), ("b", "c", Order::Finite(3))],
    );
    CoxeterSystem::new(m.unwrap())
}

/// The systems every property is checked on.
pub fn systems() -> Vec<(&'static str, CoxeterSystem)> {
    vec![
        ("A3", families::type_a(3)),
        ("B3", families::type_b(3)),
        ("H3", h3()),
        ("Ã2", families::affine_a2()),
        ("Ĩ1", families::infinite_dihedral()),
        ("U3", families::universal(3)),
        ("A1×A1", families::dihedral(2)),
    ]
}

pub fn system(index: usize) -> (&'static str, CoxeterSystem) {
    systems().swap_remove(index)
}

/// A system index together with a word of length at most `max_len` over
/// its generators, drawn from `pool` (indices into [`systems`]).
pub fn system_word(pool: &'static [usize], max_len: usize) -> impl Strategy<Value = (usize, Word)> {
    prop::sample::select(pool).prop_flat_map(move |i| {
        let rank = systems()[i].1.rank() as u8;
        (
            Just(i),
            prop::collection::vec(0..rank, 0..=max_len).prop_map(Word::new),
        )
    })
}

pub const ALL: &[usize] = &[0, 1, 2, 3, 4, 5, 6];
pub const FINITE: &[usize] = &[0, 1, 2, 6];
pub const AFFINE_AND_B3: &[usize] = &[1, 3];

/// Elements of `W_I` by closing under right multiplication; `None` past
/// `bound` elements.
pub fn parabolic_group(
    system: &CoxeterSystem,
    set: GeneratorSet,
    bound: usize,
) -> Option<BTreeSet<Element>> {
    let mut seen = BTreeSet::from([Element::identity()]);
    let mut frontier = vec![Element::identity()];
    while let Some(x) = frontier.pop() {
        for s in set.iter() {
            let y = system.multiply(&x, &system.generator_element(s)).unwrap();
            if seen.insert(y.clone()) {
                if seen.len() > bound {
                    return None;
                }
                frontier.push(y);
            }
        }
    }
    Some(seen)
}

pub fn finite_parabolics(system: &CoxeterSystem) -> Vec<(GeneratorSet, BTreeSet<Element>)> {
    system
        .matrix()
        .all_generators()
        .subsets()
        .into_iter()
        .filter(|set| !set.is_empty())
        .filter_map(|set| parabolic_group(system, set, 200).map(|g| (set, g)))
        .collect()
}

pub fn normalises_by_definition(
    system: &CoxeterSystem,
    n: &Element,
    set: GeneratorSet,
    group: &BTreeSet<Element>,
) -> bool {
    set.iter()
        .all(|s| group.contains(&system.conjugate(n, &system.generator_element(s)).unwrap()))
}

/// Torsion-freeness from the definition: no spherical `I` and
/// `w_I ∈ W_I ∖ {1}` with `w = w_I · n`, lengths adding, `n` normalising.
pub fn torsion_free_by_definition(
    system: &CoxeterSystem,
    w: &Element,
    groups: &[(GeneratorSet, BTreeSet<Element>)],
) -> bool {
    !groups.iter().any(|(set, group)| {
        group.iter().filter(|x| !x.is_identity()).any(|w_i| {
            let n = system.multiply(&system.inverse(w_i).unwrap(), w).unwrap();
            w_i.length() + n.length() == w.length()
                && normalises_by_definition(system, &n, *set, group)
        })
    })
}
