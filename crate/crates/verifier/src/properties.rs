//! Seeded randomized invariants of the algebraic building blocks.

use permgroup::{act_on_subscript_tuple, parse_tuple, Perm, TABLES};
use polyring::MultiPoly;
use qshuffle::{stuffle, FormalLiSum, Letter, LiSymbol};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::anchors::PROPERTIES;
use crate::context::Verifier;
use crate::report::{timed, CheckResult};

pub const CASES: usize = 200;

fn letters(rng: &mut ChaCha8Rng, max_len: usize) -> Vec<Letter<u32>> {
    let n = rng.gen_range(0..=max_len);
    (0..n)
        .map(|_| Letter {
            exp: rng.gen_range(1..=4),
            d: rng.gen_range(0..=2),
        })
        .collect()
}

fn symbol(rng: &mut ChaCha8Rng) -> FormalLiSum<u32> {
    FormalLiSum::single(LiSymbol::from_letters(letters(rng, 3)))
}

fn poly(rng: &mut ChaCha8Rng) -> MultiPoly {
    let mut p = MultiPoly::zero();
    for _ in 0..rng.gen_range(0..5) {
        let e = [(); 4].map(|_| rng.gen_range(0..3u32));
        p = p + MultiPoly::monomial(e, rng.gen_range(-5..=5i64));
    }
    p
}

/// Runs `prop` on `CASES` seeded draws and reports the first failing case.
fn property(
    v: &Verifier,
    id: &str,
    salt: u64,
    mut prop: impl FnMut(&mut ChaCha8Rng) -> Option<String>,
) -> CheckResult {
    timed(|| {
        let mut rng = v.rng(salt);
        let failure = (0..CASES).find_map(|i| prop(&mut rng).map(|d| format!("case {i}: {d}")));
        let pass = failure.is_none();
        CheckResult::exact(id, PROPERTIES, pass, failure.unwrap_or_default())
            .param("cases", CASES)
            .seed(v.config.seed)
    })
}

pub fn stuffle_commutes(v: &Verifier) -> CheckResult {
    property(v, "properties.stuffle.commutative", 0xa1, |rng| {
        let (a, b) = (letters(rng, 3), letters(rng, 3));
        (stuffle(&a, &b) != stuffle(&b, &a)).then(|| format!("{a:?} * {b:?}"))
    })
}

pub fn stuffle_associates(v: &Verifier) -> CheckResult {
    property(v, "properties.stuffle.associative", 0xa2, |rng| {
        let (a, b, c) = (symbol(rng), symbol(rng), symbol(rng));
        let left = a.product(&b).product(&c);
        let right = a.product(&b.product(&c));
        (left != right).then(|| format!("{a} * {b} * {c}"))
    })
}

pub fn stuffle_unit(v: &Verifier) -> CheckResult {
    property(v, "properties.stuffle.unit", 0xa3, |rng| {
        let a = symbol(rng);
        (a.product(&FormalLiSum::one()) != a).then(|| a.to_string())
    })
}

pub fn ring_laws(v: &Verifier) -> CheckResult {
    property(v, "properties.poly.ring_laws", 0xa4, |rng| {
        let (a, b, c) = (poly(rng), poly(rng), poly(rng));
        let laws = [
            ("a+b", &a + &b == &b + &a),
            ("ab", &a * &b == &b * &a),
            ("(ab)c", &(&a * &b) * &c == &a * &(&b * &c)),
            ("a(b+c)", &a * &(&b + &c) == &(&a * &b) + &(&a * &c)),
            ("a-a", (&a - &a) == MultiPoly::zero()),
        ];
        laws.iter()
            .find(|(_, ok)| !ok)
            .map(|(name, _)| format!("{name} fails for {a}, {b}, {c}"))
    })
}

/// `(sr).t = s.(r.t)` for every pair in `S4` and every tabulated tuple.
pub fn action_functorial() -> CheckResult {
    timed(|| {
        let s4 = Perm::all(4);
        let mut failure = None;
        let mut count = 0usize;
        'outer: for table in TABLES.iter() {
            for (row, _) in table.rows {
                let t = match parse_tuple(row) {
                    Ok(t) => t,
                    Err(e) => {
                        failure = Some(format!("{row}: {e}"));
                        break 'outer;
                    }
                };
                for s in &s4 {
                    for r in &s4 {
                        count += 1;
                        let lhs = act_on_subscript_tuple(&(s * r), &t);
                        let rhs = act_on_subscript_tuple(s, &act_on_subscript_tuple(r, &t));
                        if lhs != rhs {
                            failure = Some(format!("s = {s}, r = {r}, t = {row}"));
                            break 'outer;
                        }
                    }
                }
            }
        }
        let pass = failure.is_none();
        CheckResult::exact("properties.action.tuples", PROPERTIES, pass, failure.unwrap_or_default())
            .param("cases", count)
    })
}

/// `p.act(r).act(s) = p.act(sr)` on random polynomials for all of `S4 x S4`.
pub fn poly_action_functorial(v: &Verifier) -> CheckResult {
    let s4 = Perm::all(4);
    property(v, "properties.action.poly", 0xa5, |rng| {
        let p = poly(rng);
        let s = &s4[rng.gen_range(0..s4.len())];
        let r = &s4[rng.gen_range(0..s4.len())];
        (p.act(r).act(s) != p.act(&(s * r))).then(|| format!("s = {s}, r = {r}, p = {p}"))
    })
}

pub fn properties_suite(v: &Verifier) -> Vec<CheckResult> {
    vec![
        stuffle_commutes(v),
        stuffle_associates(v),
        stuffle_unit(v),
        ring_laws(v),
        action_functorial(),
        poly_action_functorial(v),
    ]
}
