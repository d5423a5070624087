mod common;

use common::{system, system_word, ALL};
use coxeter_core::straight::StraightnessWitness;
use coxeter_core::{oracle, Word};
use proptest::prelude::*;

const STRAIGHT_POOL: &[usize] = &[0, 1, 3, 4, 5, 6];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn straight_means_linear_powers((i, w) in system_word(STRAIGHT_POOL, 7)) {
        let (_, sys) = system(i);
        let w = sys.reduce(&w).unwrap();
        let verdict = sys.is_straight(&w).unwrap();
        let profile = sys.power_length_profile(&w, 10).unwrap();
        let linear: Vec<usize> = (1..=10).map(|n| n * w.length()).collect();
        if verdict.straight {
            prop_assert_eq!(profile, linear);
        } else {
            prop_assert!(verdict.witness != StraightnessWitness::NoWitness);
            prop_assert!(verdict.verify(&sys, &w).unwrap());
        }
    }

    #[test]
    fn power_defects_rule_out_straightness((i, w) in system_word(STRAIGHT_POOL, 7)) {
        let (_, sys) = system(i);
        let w = sys.reduce(&w).unwrap();
        let profile = sys.power_length_profile(&w, 10).unwrap();
        if let Some(n) = (1..=10).find(|&n| profile[n - 1] < n * w.length()) {
            let verdict = sys.is_straight(&w).unwrap();
            prop_assert!(!verdict.straight);
            let defect = coxeter_core::straight::StraightnessVerdict {
                straight: false,
                witness: StraightnessWitness::PowerDefect { power: n, length: profile[n - 1] },
            };
            prop_assert!(defect.verify(&sys, &w).unwrap());
        }
    }

    #[test]
    fn straightness_is_conjugation_invariant_at_fixed_length(
        (i, w) in system_word(STRAIGHT_POOL, 5),
        v in prop::collection::vec(0u8..3, 0..=3),
    ) {
        let (_, sys) = system(i);
        let w = sys.reduce(&w).unwrap();
        let v: Vec<u8> = v.into_iter().filter(|&s| (s as usize) < sys.rank()).collect();
        let v = sys.reduce(&Word::new(v)).unwrap();
        let c = sys.conjugate(&v, &w).unwrap();
        if c.length() == w.length() {
            prop_assert_eq!(sys.is_straight(&w).unwrap().straight, sys.is_straight(&c).unwrap().straight);
        }
    }

    #[test]
    fn fc_criteria_agree((i, w) in system_word(ALL, 8)) {
        let (_, sys) = system(i);
        let w = sys.reduce(&w).unwrap();
        prop_assert_eq!(sys.is_fc(&w).unwrap(), sys.is_fc_by_factors(&w).unwrap());
    }

    #[test]
    fn non_torsion_free_fc_elements_have_a_finite_component((i, w) in system_word(ALL, 6)) {
        let (_, sys) = system(i);
        let w = sys.reduce(&w).unwrap();
        if sys.is_fc(&w).unwrap() && !sys.is_torsion_free(&w).unwrap() {
            let closure = sys.standard_parabolic_closure(&w);
            prop_assert!(closure.types.iter().any(Option::is_some));
        }
    }

    #[test]
    fn cfc_shortcut_agrees_with_exact_decision((i, w) in system_word(STRAIGHT_POOL, 6)) {
        let (_, sys) = system(i);
        let w = sys.reduce(&w).unwrap();
        if sys.is_cfc(&w).unwrap() {
            prop_assert_eq!(sys.cfc_straight(&w).unwrap(), sys.is_straight(&w).unwrap().straight);
        } else {
            prop_assert!(sys.cfc_straight(&w).is_err());
        }
    }
}

#[test]
fn finite_groups_have_no_nontrivial_straight_elements() {
    for i in [0, 1, 2, 6] {
        let (name, sys) = system(i);
        for w in oracle::enumerate_group(&sys).unwrap() {
            assert_eq!(
                sys.is_straight(&w).unwrap().straight,
                w.is_identity(),
                "{name} {}",
                sys.format(&w)
            );
        }
    }
}
