use indexword::{compositions, IndexWord};
use proptest::prelude::*;

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

// Odometer over every tuple in [1, weight]^depth; independent of the
// recursive generator.
fn brute_force(weight: u32, depth: usize, admissible_only: bool) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut t = vec![1u32; depth];
    loop {
        if t.iter().sum::<u32>() == weight && (!admissible_only || t[0] >= 2) {
            out.push(t.clone());
        }
        let mut i = depth;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if t[i] < weight {
                t[i] += 1;
                break;
            }
            t[i] = 1;
        }
    }
}

#[test]
fn counts_match_binomials_up_to_weight_12() {
    for depth in 1..=4usize {
        for weight in depth as u32..=12 {
            let all = compositions(weight, depth, false).unwrap();
            assert_eq!(
                all.len() as u64,
                binomial(weight as u64 - 1, depth as u64 - 1),
                "all, weight {weight} depth {depth}"
            );
            if weight > depth as u32 {
                let adm = compositions(weight, depth, true).unwrap();
                assert_eq!(
                    adm.len() as u64,
                    binomial(weight as u64 - 2, depth as u64 - 1),
                    "admissible, weight {weight} depth {depth}"
                );
            }
        }
    }
}

#[test]
fn lists_match_brute_force() {
    for depth in 1..=4usize {
        for weight in depth as u32..=9 {
            for adm in [false, true] {
                if adm && weight == depth as u32 {
                    continue;
                }
                let got: Vec<Vec<u32>> = compositions(weight, depth, adm)
                    .unwrap()
                    .into_iter()
                    .map(|w| w.parts().to_vec())
                    .collect();
                assert_eq!(got, brute_force(weight, depth, adm));
            }
        }
    }
}

proptest! {
    #[test]
    fn every_composition_has_requested_shape(weight in 1u32..14, depth in 1usize..6) {
        prop_assume!(weight >= depth as u32);
        for w in compositions(weight, depth, false).unwrap() {
            prop_assert_eq!(w.weight(), weight);
            prop_assert_eq!(w.depth(), depth);
        }
    }

    #[test]
    fn display_parse_round_trip(parts in prop::collection::vec(1u32..20, 1..6)) {
        let w = IndexWord::new(parts).unwrap();
        let back: IndexWord = w.to_string().parse().unwrap();
        prop_assert_eq!(back, w);
    }
}
