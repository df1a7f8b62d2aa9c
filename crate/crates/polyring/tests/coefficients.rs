use std::collections::BTreeMap;

use indexword::{compositions, IndexWord};
use permgroup::Perm;
use polyring::{
    assembled_lhs, rhs_multiplier, starred_patterns, subset_power, substituted_combination,
    theorem1_coefficient, theorem_patterns, MultiPoly, Rational,
};
use proptest::prelude::*;

fn small_poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..3, 0u32..3), -5i64..6), 0..5).prop_map(|ts| {
        let mut p = MultiPoly::zero();
        for ((a, b, c, d), k) in ts {
            p = p + MultiPoly::monomial([a, b, c, d], k);
        }
        p
    })
}

fn perm4() -> impl Strategy<Value = Perm> {
    (0usize..24).prop_map(|i| Perm::all(4)[i].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &MultiPoly::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn action_is_a_ring_automorphism(a in small_poly(), b in small_poly(), s in perm4(), r in perm4()) {
        prop_assert_eq!((&a * &b).act(&s), &a.act(&s) * &b.act(&s));
        prop_assert_eq!((&a + &b).act(&s), &a.act(&s) + &b.act(&s));
        prop_assert_eq!(a.act(&r).act(&s), a.act(&(&s * &r)));
    }

    #[test]
    fn substitution_is_evaluation(a in small_poly(), b in small_poly(),
                                  p in prop::array::uniform4(-3i64..4)) {
        let pt = p.map(Rational::from);
        prop_assert_eq!((&a * &b).substitute(&pt), a.substitute(&pt) * b.substitute(&pt));
    }
}

#[test]
fn unit_vector_reduces_to_sum_formula() {
    let e1 = [1, 0, 0, 0].map(Rational::from);
    for weight in 5..=9 {
        for l in compositions(weight, 4, true).unwrap() {
            let p = theorem1_coefficient(&l).unwrap();
            assert_eq!(p.substitute(&e1), 1, "{l}");
        }
        assert_eq!(rhs_multiplier(weight).substitute(&e1), 1);
    }
}

#[test]
fn coefficients_are_homogeneous() {
    for weight in 5..=8 {
        for l in compositions(weight, 4, true).unwrap() {
            let p = theorem1_coefficient(&l).unwrap();
            assert!(p.is_homogeneous(), "{l}");
            assert_eq!(p.total_degree(), Some(weight - 4), "{l}");
        }
    }
}

#[test]
fn lhs_is_fixed_by_cyclic_group() {
    let s: Perm = "(1234)".parse().unwrap();
    let t: Perm = "(12)".parse().unwrap();
    for weight in 5..=8 {
        let lhs = assembled_lhs(weight, &theorem_patterns()).unwrap();
        assert!(lhs.values().all(|p| p.act(&s) == *p), "w{weight}");
    }
    // but not by the whole symmetric group
    let lhs = assembled_lhs(6, &theorem_patterns()).unwrap();
    assert!(lhs.values().any(|p| p.act(&t) != *p));
}

/// Expands one printed argument tuple by hand, as an oracle independent of
/// the pattern builder.
fn direct(l: &IndexWord, tuples: &[(&str, i64)]) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for (t, k) in tuples {
        let subs = permgroup::parse_tuple(t).unwrap();
        let mut m = MultiPoly::constant(*k);
        for (s, &lj) in subs.iter().zip(l.parts()) {
            m = &m * &subset_power(*s, lj - 1);
        }
        out = out + m;
    }
    out
}

#[test]
fn weight_five_coefficient_from_both_forms() {
    let l: IndexWord = "(2,1,1,1)".parse().unwrap();
    let a = theorem1_coefficient(&l).unwrap();
    let b = starred_patterns().coefficient_polynomial(&l);
    assert_eq!(a, b);
    // weight 5 has a single index, so the coefficient must be x1+x2+x3+x4
    assert_eq!(a, rhs_multiplier(5));
}

#[test]
fn weight_five_coefficient_by_hand() {
    let l: IndexWord = "(2,1,1,1)".parse().unwrap();
    // x_{A1} summed over the printed lists, orbit sizes included
    let s4_part = direct(&l, &[("(1234,234,34,4)", 24)]);
    let mut minus = MultiPoly::zero();
    let block: Vec<Perm> = ["e", "(1234)", "(13)(24)", "(1432)", "(34)", "(123)", "(1324)", "(142)"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    let first_slots = [("134", 3), ("134", 2), ("134", 1)];
    for sigma in &block {
        for (s, k) in first_slots {
            let sub: permgroup::Subscript = s.parse().unwrap();
            minus = minus + subset_power(sub.act(sigma), 1).scale(&Rational::from(k));
        }
    }
    let c: Vec<Perm> = ["e", "(1234)", "(13)(24)", "(1432)"].iter().map(|s| s.parse().unwrap()).collect();
    let mut plus = MultiPoly::zero();
    // first slots: 1nu3 for nu in {e,(1234)} twice each, nu1 3 once each, 41, minus 1
    let firsts = [("13", 2), ("14", 2), ("13", 1), ("23", 1), ("14", 1), ("1", -1)];
    for sigma in &c {
        for (s, k) in firsts {
            let sub: permgroup::Subscript = s.parse().unwrap();
            plus = plus + subset_power(sub.act(sigma), 1).scale(&Rational::from(k));
        }
    }
    let want = s4_part - minus + plus;
    assert_eq!(theorem1_coefficient(&l).unwrap(), want);
}

fn combo(pairs: &[([i64; 4], i64)]) -> BTreeMap<[i64; 4], i64> {
    pairs.iter().copied().collect()
}

#[test]
fn substituted_combinations_match_printed_lists() {
    assert_eq!(
        substituted_combination(&[1, 1, 0, 0]),
        combo(&[
            ([2, 2, 2, 1], 2),
            ([2, 2, 1, 1], 1),
            ([2, 1, 1, 1], 1),
            ([1, 2, 2, 1], -2),
            ([1, 2, 1, 1], -1),
            ([1, 1, 1, 1], -3)
        ])
    );
    assert_eq!(
        substituted_combination(&[1, 0, 1, 0]),
        combo(&[
            ([2, 2, 2, 1], 4),
            ([2, 2, 1, 1], 2),
            ([1, 2, 2, 1], -4),
            ([1, 2, 1, 1], -2),
            ([1, 1, 2, 1], -4)
        ])
    );
    assert_eq!(
        substituted_combination(&[1, 1, 1, 0]),
        combo(&[
            ([3, 3, 2, 1], 6),
            ([3, 2, 2, 1], 4),
            ([3, 2, 1, 1], 2),
            ([2, 3, 2, 1], -6),
            ([2, 2, 2, 1], -8),
            ([2, 2, 1, 1], -4),
            ([2, 1, 2, 1], -2),
            ([2, 1, 1, 1], -2),
            ([1, 2, 2, 1], 4),
            ([1, 2, 1, 1], 2),
            ([1, 1, 2, 1], 2),
            ([1, 1, 1, 1], 3)
        ])
    );
    assert_eq!(
        substituted_combination(&[1, 1, 1, 1]),
        combo(&[
            ([4, 3, 2, 1], 24),
            ([3, 3, 2, 1], -24),
            ([3, 2, 2, 1], -16),
            ([3, 2, 1, 1], -8),
            ([2, 2, 2, 1], 16),
            ([2, 2, 1, 1], 8),
            ([2, 1, 1, 1], 4),
            ([1, 1, 1, 1], -4)
        ])
    );
}
