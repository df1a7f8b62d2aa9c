use std::collections::BTreeSet;

use permgroup::named::{c, cb, group};
use permgroup::{act_on_subscript_tuple, parse_tuple, right_coset, Perm, PermSet, TABLES};
use proptest::prelude::*;

#[test]
fn associativity_identity_inverse_over_s4() {
    let all = Perm::all(4);
    let e = Perm::identity(4);
    for a in &all {
        assert_eq!(&(a * &e), a);
        assert_eq!(&(&e * a), a);
        assert!((a * &a.inverse()).is_identity());
        for b in &all {
            let ab = a * b;
            for c in &all {
                assert_eq!(&ab * c, a * &(b * c));
            }
        }
    }
}

#[test]
fn right_cosets_partition_s4() {
    for h in [c(), group(&["(12)", "(34)"]), group(&["(234)"]), group(&["(24)"])] {
        let cosets: BTreeSet<Vec<Perm>> = Perm::all(4)
            .iter()
            .map(|s| right_coset(&h, s).iter().cloned().collect())
            .collect();
        assert_eq!(cosets.len() * h.len(), 24);
        let union: BTreeSet<Perm> = cosets.iter().flatten().cloned().collect();
        assert_eq!(union.len(), 24);
    }
}

#[test]
fn subscript_action_is_functorial_on_table_tuples() {
    let all = Perm::all(4);
    for table in &TABLES {
        for (row, _) in table.rows {
            let t = parse_tuple(row).unwrap();
            for s in &all {
                for r in &all {
                    assert_eq!(
                        act_on_subscript_tuple(&(s * r), &t),
                        act_on_subscript_tuple(s, &act_on_subscript_tuple(r, &t))
                    );
                }
            }
        }
    }
}

#[test]
fn cb_is_not_a_group() {
    assert!(!cb().is_closed());
    assert!(c().is_closed());
    let one: PermSet = PermSet::from_cycles(&["e"]);
    assert!(one.is_closed());
}

fn arb_perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(&v).unwrap())
}

proptest! {
    #[test]
    fn larger_degrees_compose_associatively(a in arb_perm(7), b in arb_perm(7), c in arb_perm(7)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!((&a * &b).sign(), a.sign() * b.sign());
    }

    #[test]
    fn cycle_notation_round_trips(a in arb_perm(9)) {
        let back = Perm::parse_cycles(&a.to_string(), 9).unwrap();
        prop_assert_eq!(back, a);
    }
}
