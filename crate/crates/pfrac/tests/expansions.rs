use pfrac::{
    equal_as_rational_functions, expansions, prescreen, shift_expand, stated_rhs,
    substituted_rhs, triple_single, verify_prop22_expansions, verify_substitutions, Expansion,
    FracSum, FracTerm,
};
use permgroup::{named, PermSet, Subscript};
use polyring::{MultiPoly, Rational};
use proptest::prelude::*;

fn s(x: &str) -> Subscript {
    x.parse().unwrap()
}

#[test]
fn all_expansions_and_weighted_forms() {
    let checks = verify_prop22_expansions(8, 6, 2024).unwrap();
    // 4 expansions, 5 weights each (4..=8), 3 substitutions and the reduction
    assert_eq!(checks.len(), 4 + 4 * 5 + 4);
    for c in &checks {
        assert!(c.pass, "{}: {}", c.name, c.detail);
    }
}

/// Sum over all orderings (a, b, c, d) of the values of
/// 1/((a+b+c+d)(b+c+d)(c+d)d), written out without permutation objects.
fn ordered_sum(v: [i64; 4]) -> Rational {
    let mut total = Rational::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let idx = [a, b, c, d];
                    let mut seen = [false; 4];
                    idx.iter().for_each(|&i| seen[i] = true);
                    if seen.iter().all(|&x| x) {
                        let (p, q, r, t) = (v[a], v[b], v[c], v[d]);
                        total += Rational::from((1, (p + q + r + t) * (q + r + t) * (r + t) * t));
                    }
                }
            }
        }
    }
    total
}

#[test]
fn symmetric_expansion_against_direct_sum() {
    let e = expansions().pop().unwrap();
    for v in [[1, 2, 3, 4], [5, 1, 7, 2], [9, 9, 1, 3]] {
        let m = v.map(Rational::from);
        let y = [0, 0, 0, 0].map(Rational::from);
        let got = e.rhs_sum().eval(&m, &y).unwrap();
        assert_eq!(got, ordered_sum(v));
        assert_eq!(got, Rational::from((1, v.iter().product::<i64>())));
    }
}

#[test]
fn dropping_a_permutation_breaks_the_expansion() {
    let e = triple_single();
    for drop in e.set.iter() {
        let bad = Expansion {
            set: e.set.difference(&PermSet::new([drop.clone()])),
            ..e.clone()
        };
        let v = equal_as_rational_functions(&bad.lhs_sum(), &bad.rhs_sum(), 3).unwrap();
        assert!(!v.equal);
    }
}

#[test]
fn unequal_sums_come_with_a_witness() {
    // 1/(m3 m4) - 1/(m34 m4) - 1/(m34 m3) vanishes; drop one term
    let a = FracSum::from_terms([FracTerm::new(1, &[s("3"), s("4")])]);
    let b = FracSum::from_terms([FracTerm::new(1, &[s("34"), s("4")])]);
    let v = equal_as_rational_functions(&a, &b, 11).unwrap();
    assert!(!v.equal);
    let (m, y) = v.witness.unwrap();
    let diff = a.eval(&m.map(Rational::from), &y.map(Rational::from)).unwrap()
        - b.eval(&m.map(Rational::from), &y.map(Rational::from)).unwrap();
    assert_ne!(diff, 0);
    assert!(prescreen(&a, &a, 11, 3).unwrap().is_none());
}

#[test]
fn series_coefficients_have_expected_sizes() {
    // coefficient of t^k in a product of n geometric series has C(k+n-1, n-1) terms
    let denoms = [s("1"), s("12"), s("123"), s("1234")];
    for k in 0..5u32 {
        let want = (1..=3).fold(1u32, |acc, i| acc * (k + i) / i);
        assert_eq!(shift_expand(&denoms, k).len() as u32, want);
    }
}

#[test]
fn substitutions_reproduce_stated_arguments() {
    for c in verify_substitutions() {
        assert!(c.pass, "{}: {}", c.name, c.detail);
    }
}

#[test]
fn wrong_substitution_is_rejected() {
    let e = triple_single();
    // the substitution of the second identity does not fit the first
    let x = |j: usize| pfrac::linear(Subscript::single(j));
    let images = [[1, -1, 0, 0], x(2), [0, 0, 1, -1], x(4)];
    assert_ne!(substituted_rhs(&e, &images), stated_rhs("i").unwrap());
    assert!(stated_rhs("v").is_none());
}

#[test]
fn summing_sets_have_expected_sizes() {
    let sizes: Vec<usize> = expansions().iter().map(|e| e.set.len()).collect();
    assert_eq!(sizes, vec![4, 6, 2, 24]);
    assert_eq!(named::u2().len(), 6);
}

fn denominators() -> impl Strategy<Value = Vec<Subscript>> {
    prop::collection::vec((1u16..16).prop_map(Subscript::from_bits), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn a_single_term_is_never_zero(d in denominators(), c in 1i64..5) {
        let a = FracSum::from_terms([FracTerm::new(c, &d)]);
        let v = equal_as_rational_functions(&a, &FracSum::zero(), 5).unwrap();
        prop_assert!(!v.equal);
    }

    #[test]
    fn canonical_form_preserves_values(
        d1 in denominators(), d2 in denominators(), c1 in -3i64..4, c2 in -3i64..4,
        m in prop::array::uniform4(1i64..50), y in prop::array::uniform4(-5i64..6),
    ) {
        let t1 = FracTerm::new(c1, &d1);
        let mut t2 = FracTerm::new(1, &d2);
        t2.numer = MultiPoly::var(1).scale(&Rational::from(c2)) + MultiPoly::var(3);
        let (mr, yr) = (m.map(Rational::from), y.map(Rational::from));
        let a = FracSum::from_terms([t1.clone()]).eval(&mr, &yr).unwrap();
        let b = FracSum::from_terms([t2.clone()]).eval(&mr, &yr).unwrap();
        let both = FracSum::from_terms([t1, t2]);
        prop_assert_eq!(both.eval(&mr, &yr).unwrap(), a + b);
        let v = equal_as_rational_functions(&both, &both.clone(), 9).unwrap();
        prop_assert!(v.equal);
    }
}
