use indexword::{compositions, IndexWord, ZPattern};
use numeric::{
    ct_extract, eval_li, eval_li_many, eval_mzv, eval_param_sum, star_combination, star_value,
    CtSchedule, Float, MzvCache, ParamKind, PatternKind, Rational, Zeta,
};
use proptest::prelude::*;
use rug::ops::Pow;
use qshuffle::{stuffle, Letter};

const PREC: u32 = 128;

fn w(p: &[u32]) -> IndexWord {
    IndexWord::new(p.to_vec()).unwrap()
}

fn pi() -> Float {
    Float::with_val(PREC + 32, rug::float::Constant::Pi)
}

fn diff(a: &Float, b: &Float) -> f64 {
    Float::with_val(PREC + 32, a - b).abs().to_f64()
}

/// zeta(s) by direct summation to N plus an Euler-Maclaurin tail.
fn zeta_direct(s: u32) -> Float {
    let n = 1000u32;
    let p = PREC + 32;
    let mut sum = Float::with_val(p, 0);
    for k in 1..n {
        sum += Float::with_val(p, k).pow(-(s as i32));
    }
    let nn = Float::with_val(p, n);
    let sf = s as i32;
    // N^{1-s}/(s-1) + N^{-s}/2 + s N^{-s-1}/12 - s(s+1)(s+2) N^{-s-3}/720
    sum += nn.clone().pow(1 - sf) / (sf - 1);
    sum += nn.clone().pow(-sf) / 2;
    sum += nn.clone().pow(-sf - 1) * sf / 12;
    sum -= nn.clone().pow(-sf - 3) * (sf * (sf + 1) * (sf + 2)) / 720;
    sum
}

#[test]
fn single_values_against_closed_forms() {
    let z = Zeta::new(PREC);
    let pi2 = Float::with_val(PREC + 32, pi().square_ref());
    let z2 = z.zeta_of(&[2]).unwrap();
    assert!(diff(&z2.value, &(pi2.clone() / 6)) < 1e-35);
    let pi4 = Float::with_val(PREC + 32, pi2.square_ref());
    assert!(diff(&z.zeta_of(&[4]).unwrap().value, &(pi4.clone() / 90)) < 1e-35);
    // zeta(2,2) = (zeta(2)^2 - zeta(4)) / 2 = pi^4 / 120
    assert!(diff(&z.zeta_of(&[2, 2]).unwrap().value, &(pi4 / 120)) < 1e-35);
    // direct summation with a tail correction
    let z3 = z.zeta_of(&[3]).unwrap();
    assert!(diff(&z3.value, &zeta_direct(3)) < 1e-15);
    let printed = Float::with_val(PREC, Float::parse("1.2020569031595942854").unwrap());
    assert!(diff(&z3.value, &printed) < 1e-19);
    let z5 = Float::with_val(PREC, Float::parse("1.0369277551433699263").unwrap());
    assert!(diff(&z.zeta_of(&[5]).unwrap().value, &z5) < 1e-19);
}

#[test]
fn oracle_suite() {
    let target = 1e-30;
    let check = |a: &[u32], b: &[u32]| {
        let x = eval_mzv(&w(a), target).unwrap();
        let y = eval_mzv(&w(b), target).unwrap();
        assert!(x.err < target && y.err < target);
        assert!(diff(&x.value, &y.value) < 10.0 * target, "{a:?} vs {b:?}");
    };
    check(&[2, 1], &[3]);
    check(&[2, 1, 1], &[4]);
    check(&[2, 1, 1, 1], &[5]);
    // duality
    check(&[3, 1, 1], &[4, 1]);
}

#[test]
fn sum_formula_at_depth_four() {
    let z = Zeta::new(PREC);
    for l in 5..=9 {
        let mut total = Float::with_val(PREC + 32, 0);
        for c in compositions(l, 4, true).unwrap() {
            total += &z.zeta(&c).unwrap().value;
        }
        let r = diff(&total, &z.zeta_of(&[l]).unwrap().value);
        assert!(r < 10.0 * z.target(), "weight {l}: {r:e}");
    }
}

#[test]
fn error_bounds_shrink_with_the_target() {
    let coarse = eval_mzv(&w(&[3, 1, 2]), 1e-12).unwrap();
    let fine = eval_mzv(&w(&[3, 1, 2]), 1e-30).unwrap();
    assert!(fine.err <= coarse.err);
    assert!(diff(&coarse.value, &fine.value) <= coarse.err + fine.err);
    assert!(eval_mzv(&w(&[1, 2]), 1e-10).is_err());
}

#[test]
fn regularized_values() {
    let z = Zeta::new(PREC);
    for n in 1..=4 {
        assert_eq!(z.star_of(&vec![1; n]).unwrap().value, 0);
    }
    let z3 = z.zeta_of(&[3]).unwrap().value;
    let s12 = z.star_of(&[1, 2]).unwrap().value;
    assert!(diff(&s12, &(z3 * -2)) < 1e-35);
    // zeta*(1, k-1) = -(zeta(k-1, 1) + zeta(k))
    for k in 3..=8u32 {
        let s = z.star_of(&[1, k - 1]).unwrap().value;
        let want = -(z.zeta_of(&[k - 1, 1]).unwrap().value + z.zeta_of(&[k]).unwrap().value);
        assert!(diff(&s, &want) < 1e-35, "k = {k}");
    }
    let v = star_value(&w(&[1, 4]), 1e-30).unwrap();
    assert!(v.regularized);
    // admissible indices are their own regularization
    assert_eq!(star_combination(&w(&[2, 1, 3])).len(), 1);
}

fn flat_li(parts: &'static [u32]) -> impl Fn(&Float) -> numeric::Result<Float> {
    move |z| Ok(eval_li(&w(parts), &ZPattern::flat(parts.len()), z, 1e-30)?.value)
}

#[test]
fn constant_terms_match_regularization() {
    let s = CtSchedule::default();
    let z = Zeta::new(PREC);
    for parts in [&[1u32][..], &[1, 1], &[1, 1, 1], &[1, 2], &[1, 1, 2], &[1, 3, 1], &[2, 1]] {
        let fit = ct_extract(flat_li(parts), parts.len(), &s).unwrap();
        let want = z.star_of(parts).unwrap().value;
        let r = diff(&fit.constant, &want);
        assert!(r < 1e-6, "{parts:?}: {r:e}");
        assert!(fit.residual < 1e-4);
    }
    // Li(1; z) = T exactly
    let fit = ct_extract(flat_li(&[1]), 1, &s).unwrap();
    assert!((fit.poly[1].to_f64() - 1.0).abs() < 1e-8);
}

#[test]
fn ladder_constant_terms_carry_extra_values() {
    let s = CtSchedule::default();
    let z = Zeta::new(PREC);
    let ladder = |parts: &'static [u32]| {
        move |x: &Float| Ok(eval_li(&w(parts), &ZPattern::ladder(parts.len()), x, 1e-30)?.value)
    };
    let z2 = z.zeta_of(&[2]).unwrap().value;
    let fit = ct_extract(ladder(&[1, 1]), 2, &s).unwrap();
    assert!(diff(&fit.constant, &(z2.clone() / -2)) < 1e-6);
    let fit = ct_extract(ladder(&[1, 2]), 2, &s).unwrap();
    assert!(diff(&fit.constant, &(z.zeta_of(&[3]).unwrap().value * -2)) < 1e-6);
}

#[test]
fn polylog_values() {
    let half = Float::with_val(PREC, 0.5);
    let l2 = Float::with_val(PREC, 2).ln();
    let li1 = eval_li(&w(&[1]), &ZPattern::flat(1), &half, 1e-30).unwrap();
    assert!(diff(&li1.value, &l2) < 1e-30);
    let li11 = eval_li(&w(&[1, 1]), &ZPattern::flat(2), &half, 1e-30).unwrap();
    assert!(diff(&li11.value, &(Float::with_val(PREC, l2.square_ref()) / 2)) < 1e-30);
    assert!(eval_li(&w(&[1, 1]), &ZPattern::flat(3), &half, 1e-30).is_err());
}

#[test]
fn shuffle_relation_for_ones() {
    // Li(1,...,1; z,...,z) = Li1(z)^n / n!
    for zf in [0.3, 0.7, 0.9] {
        let z = Float::with_val(PREC, zf);
        let li1 = eval_li(&w(&[1]), &ZPattern::flat(1), &z, 1e-30).unwrap().value;
        let mut fact = 1u32;
        for n in 1..=4usize {
            fact *= n as u32;
            let v = eval_li(&w(&vec![1; n]), &ZPattern::flat(n), &z, 1e-30).unwrap().value;
            let want = Float::with_val(PREC, li1.clone().pow(n as u32)) / fact;
            assert!(diff(&v, &want) < 1e-28, "z = {zf}, n = {n}");
        }
    }
}

#[test]
fn parameterized_sums() {
    let z = Float::with_val(PREC, 0.6);
    let one = |v: i64| Rational::from(v);
    let x = [one(1), one(0), one(0), one(0)];
    for l in 4..=7 {
        let q = eval_param_sum(ParamKind::Q, l, &x, PatternKind::Flat, &z, 1e-30).unwrap();
        let li = eval_li(&w(&[l - 3, 1, 1, 1]), &ZPattern::flat(4), &z, 1e-30).unwrap();
        assert!(diff(&q.value, &li.value) < 1e-29);
    }
    let d2 = eval_param_sum(ParamKind::D, 2, &[one(3), one(5)], PatternKind::Ladder, &z, 1e-30).unwrap();
    let li = eval_li(&w(&[1, 1]), &ZPattern::ladder(2), &z, 1e-30).unwrap();
    assert!(diff(&d2.value, &li.value) < 1e-30);
    // x = (1,1): D_l is the plain sum over all compositions
    let x = [one(1), one(1)];
    let d = eval_param_sum(ParamKind::D, 5, &x, PatternKind::Ladder, &z, 1e-30).unwrap();
    let items: Vec<_> = compositions(5, 2, false).unwrap().into_iter().map(|c| (c, ZPattern::ladder(2))).collect();
    let total = eval_li_many(&items, &z, 1e-30).unwrap().into_iter().fold(Float::with_val(PREC, 0), |a, b| a + b.value);
    assert!(diff(&d.value, &total) < 1e-29);
}

fn letters() -> impl Strategy<Value = Vec<Letter<u32>>> {
    prop::collection::vec((1u32..4, 0u32..3), 1..3).prop_map(|v| {
        v.into_iter()
            .enumerate()
            // the outermost letter carries a positive power of z
            .map(|(i, (exp, d))| Letter { exp, d: if i == 0 { d + 1 } else { d } })
            .collect()
    })
}

fn value_of(ls: &[Letter<u32>], z: &Float) -> Float {
    let word = numeric::SweepWord::new(ls.iter().map(|l| l.exp).collect(), ls.iter().map(|l| l.d).collect()).unwrap();
    numeric::sweep(&[word], z, 1e-32, 1 << 26).unwrap().remove(0).value
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn products_follow_the_stuffle(a in letters(), b in letters(), k in 0usize..3) {
        let z = Float::with_val(PREC, [0.3, 0.7, 0.9][k]);
        let lhs = Float::with_val(PREC, value_of(&a, &z) * value_of(&b, &z));
        let mut rhs = Float::with_val(PREC, 0);
        for (sym, c) in stuffle(&a, &b).iter() {
            rhs += Float::with_val(PREC, c) * value_of(sym.letters(), &z);
        }
        prop_assert!(diff(&lhs, &rhs) < 1e-25);
    }
}

#[test]
fn cache_round_trip_and_staleness() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mzv.jsonl");
    let missing = MzvCache::open(&path).unwrap();
    assert!(missing.is_empty());

    let z = Zeta::new(128).with_cache(std::sync::Arc::new(missing));
    let v = z.zeta_of(&[5]).unwrap();
    let s = z.star_of(&[1, 2]).unwrap();
    drop(z);

    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 3); // zeta(5), zeta(2,1), zeta*(1,2)
    let reloaded = MzvCache::open(&path).unwrap();
    let hit = reloaded.get(&[5], false, 1e-30, 128).unwrap();
    assert_eq!(hit.value.to_string_radix(10, None), v.value.to_string_radix(10, None));
    let hit = reloaded.get(&[1, 2], true, 1e-30, 128).unwrap();
    assert_eq!(hit.value, s.value);
    // a request for more precision than stored is a miss
    assert!(reloaded.get(&[5], false, 1e-60, 200).is_none());

    // corrupt lines are skipped
    std::fs::write(&path, format!("{text}not json\n{{\"index\":[0]}}\n")).unwrap();
    let c = MzvCache::open(&path).unwrap();
    assert_eq!(c.corrupt_lines, 2);
    assert_eq!(c.len(), 3);
}
