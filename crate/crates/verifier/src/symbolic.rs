//! Exact suites: harmonic relations, the lemmas on argument tuples, the
//! cyclic sum of zeta values, coset tables and coset identities.

use indexword::IndexWord;
use numeric::Float;
use permgroup::{
    verify_action_tables, verify_c_cosets, verify_congruences, verify_coset_identities,
    verify_coset_products, verify_transversals, Check,
};
use polyring::{verify_bracket_merges, verify_remainder_cancellations, verify_star_split};
use qshuffle::{
    cyclic_sum_relation, symmetric_sum_depth2, symmetric_sum_depth3, symmetric_sum_depth4,
    verify_cyclic_sum_relation, verify_lemma21_exhaustive, verify_lemma21_formal, verify_lemma22,
    verify_lemma22_formal, Part, ZetaPoly,
};

use crate::anchors::{COSETS, LEMMA21, LEMMA22, LEMMA3X, REMARK21, TABLE1};
use crate::context::Verifier;
use crate::eval::comps;
use crate::report::{timed, CheckResult};
use crate::Result;

fn wrap(checks: Vec<Check>, anchor: &str) -> Vec<CheckResult> {
    checks.into_iter().map(|c| CheckResult::from_check(c, anchor)).collect()
}

/// Spreads the time of a batch evenly over its results.
fn batch(f: impl FnOnce() -> Vec<CheckResult>) -> Vec<CheckResult> {
    let start = std::time::Instant::now();
    let mut out = f();
    let ms = start.elapsed().as_millis() as u64 / out.len().max(1) as u64;
    for r in out.iter_mut() {
        r.elapsed_ms = ms;
    }
    out
}

pub fn lemma21_suite(max_weight: u32) -> Vec<CheckResult> {
    batch(|| {
        let mut out: Vec<CheckResult> = Part::ALL
            .iter()
            .map(|&p| CheckResult::from_check(verify_lemma21_formal(p), LEMMA21))
            .collect();
        match verify_lemma21_exhaustive(max_weight) {
            Ok(cs) => out.extend(wrap(cs, LEMMA21)),
            Err(e) => out.push(CheckResult::error("lemma21.exhaustive", LEMMA21, e)),
        }
        out
    })
}

pub fn lemma22_suite(max_weight: u32) -> Vec<CheckResult> {
    batch(|| {
        let mut out = Vec::new();
        for part in [Part::I, Part::II, Part::III] {
            out.push(match verify_lemma22_formal(part) {
                Ok(c) => CheckResult::from_check(c, LEMMA22),
                Err(e) => CheckResult::error(format!("lemma22.{part}.formal"), LEMMA22, e),
            });
            for w in 4..=max_weight {
                let words = match comps(w, 4) {
                    Ok(ws) => ws,
                    Err(e) => {
                        out.push(CheckResult::error(format!("lemma22.{part}.w{w}"), LEMMA22, e));
                        continue;
                    }
                };
                for l in words {
                    out.push(match verify_lemma22(part, &l) {
                        Ok(c) => CheckResult::from_check(c, LEMMA22),
                        Err(e) => CheckResult::error(format!("lemma22.{part}.{l}"), LEMMA22, e),
                    });
                }
            }
        }
        out
    })
}

pub fn lemma3x_suite(max_weight: u32) -> Vec<CheckResult> {
    batch(|| {
        let mut out = wrap(verify_star_split(4..=max_weight), LEMMA3X);
        out.extend(wrap(verify_remainder_cancellations(), LEMMA3X));
        out.extend(wrap(verify_bracket_merges(), LEMMA3X));
        out
    })
}

pub fn table1_suite() -> Vec<CheckResult> {
    batch(|| wrap(verify_action_tables(), TABLE1))
}

pub fn cosets_suite() -> Vec<CheckResult> {
    batch(|| {
        let mut out = wrap(verify_c_cosets(), COSETS);
        out.extend(wrap(verify_coset_products(), COSETS));
        out.extend(wrap(verify_transversals(), COSETS));
        out.extend(wrap(verify_congruences(), COSETS));
        out.extend(wrap(verify_coset_identities(), COSETS));
        out
    })
}

/// Numeric value of a polynomial in zeta values.
pub fn eval_zeta_poly(v: &Verifier, p: &ZetaPoly<u32>) -> Result<Float> {
    let mut total = Float::with_val(v.prec(), 0);
    for (mono, c) in p.iter() {
        let mut t = v.float(c);
        for w in mono {
            t *= v.zeta(w)?;
        }
        total += t;
    }
    Ok(total)
}

/// Index families the numeric cyclic and symmetric sums are evaluated at.
pub fn remark21_indices() -> Vec<IndexWord> {
    [[2, 2, 2, 2], [3, 2, 2, 2]]
        .iter()
        .map(|p| IndexWord::new(p.to_vec()).expect("valid index"))
        .collect()
}

pub fn remark21_suite(v: &Verifier) -> Vec<CheckResult> {
    let mut out = batch(|| wrap(verify_cyclic_sum_relation(), REMARK21));
    let relations = [
        ("cyclic", cyclic_sum_relation()),
        ("hoffman.d2", symmetric_sum_depth2()),
        ("hoffman.d3", symmetric_sum_depth3()),
        ("hoffman.d4", symmetric_sum_depth4()),
    ];
    for l in remark21_indices() {
        for (name, rel) in &relations {
            let id = format!("remark21.{name}.{l}");
            out.push(timed(|| match eval_zeta_poly(v, &rel.instantiate(&l)) {
                Ok(r) => CheckResult::numeric(id.clone(), REMARK21, r.to_f64().abs(), v.config.tol)
                    .param("index", l.to_string())
                    .param("terms", rel.len()),
                Err(e) => CheckResult::error(id.clone(), REMARK21, e),
            }));
        }
    }
    out
}
