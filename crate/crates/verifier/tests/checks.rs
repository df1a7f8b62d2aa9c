use proptest::prelude::*;
use verifier::formulas::{self, Theorem1Mode};
use verifier::{derive_lemma41, lemma41_printed, Config, Status, Verifier};

fn residual(r: &verifier::CheckResult) -> f64 {
    r.residual_value().expect("numeric check")
}

#[test]
fn residuals_shrink_with_precision() {
    let low = Verifier::new(Config {
        prec_bits: 64,
        tol: 1e-6,
        ..Config::default()
    });
    let high = Verifier::new(Config::default());
    for l in [7, 9] {
        let a = residual(&formulas::check_sum_formula(&low, l));
        let b = residual(&formulas::check_sum_formula(&high, l));
        assert!(b < a, "weight {l}: {b:e} at 128 bits vs {a:e} at 64 bits");
        assert!(b < 1e-30);
    }
}

#[test]
fn lemma41_substitutions_have_the_printed_leading_terms() {
    let one = derive_lemma41(1);
    assert_eq!(one[&[2, 2, 2, 1]], 2);
    assert_eq!(one[&[1, 1, 1, 1]], -3);
    assert_eq!(derive_lemma41(4)[&[4, 3, 2, 1]], 24);
    for k in 1..=4 {
        assert_eq!(formulas::check_lemma41_symbolic(k).status, Status::Pass);
        assert!(!lemma41_printed(k).terms.is_empty());
    }
}

#[test]
fn weight_three_remark_at_weight_six() {
    // (l - 5) l / 2 at l = 6 is 3
    let v = Verifier::new(Config::default());
    let [f, _, _] = formulas::remark41_formulas();
    assert_eq!((f.rhs)(6), 3);
    assert_eq!(formulas::check_weighted(&v, &f, 6).status, Status::Pass);
}

#[test]
fn wrong_right_hand_side_is_caught() {
    let v = Verifier::new(Config::default());
    let [mut f, ..] = formulas::theorem2_formulas();
    f.rhs = |l| (l + 1).into();
    let r = formulas::check_weighted(&v, &f, 6);
    assert_eq!(r.status, Status::Fail);
    assert!(residual(&r) > 0.5);
}

#[test]
fn random_points_agree_with_coefficients() {
    let v = Verifier::new(Config::default());
    let a = formulas::check_theorem1(&v, 6, Theorem1Mode::Coefficientwise);
    let b = formulas::check_theorem1(&v, 6, Theorem1Mode::RandomPoints(3));
    assert_eq!((a.status, b.status), (Status::Pass, Status::Pass));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn consistency_holds_at_every_weight(l in 4u32..=12) {
        prop_assert_eq!(formulas::check_theorem2_consistency(l).status, Status::Pass);
    }

    #[test]
    fn bookkeeping_holds_at_every_weight(l in 5u32..=40) {
        prop_assert_eq!(formulas::check_eq45_bookkeeping(l).status, Status::Pass);
    }

    #[test]
    fn sum_formula_independent_of_seed(seed in any::<u64>()) {
        let v = Verifier::new(Config { seed, ..Config::default() });
        prop_assert_eq!(formulas::check_sum_formula(&v, 6).status, Status::Pass);
    }
}
