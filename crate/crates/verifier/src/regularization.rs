//! Constant terms of polylogarithm sums as `z -> 1`, against regularized
//! zeta values and the extra terms ladder arguments pick up.

use std::collections::HashMap;

use indexword::{IndexWord, ZPattern};
use numeric::{ct_fit_many, eval_li_many, monomial, CtSchedule, Float, ParamKind, PatternKind, Rational};

use crate::anchors::{LEMMA23, PROP23, SHUFFLE};
use crate::context::{point_string, random_point, Verifier};
use crate::eval::{abs_diff, comps, LiTable};
use crate::report::{timed, CheckResult};
use crate::{Error, Result};

/// Fitted constant terms of every `Li(c; pattern)` with depth at most four
/// and weight up to a bound.
pub struct CtTable {
    prec: u32,
    constants: HashMap<Vec<u32>, (Float, f64)>,
}

impl CtTable {
    pub fn new(pattern: PatternKind, max_weight: u32, schedule: &CtSchedule) -> Result<Self> {
        let zs = schedule.z_values();
        let tables = zs
            .iter()
            .map(|z| LiTable::new(pattern, max_weight, z, 1e-30))
            .collect::<Result<Vec<_>>>()?;
        let mut constants = HashMap::new();
        for n in 1..=4usize {
            let words: Vec<IndexWord> = (n as u32..=max_weight)
                .map(|w| comps(w, n))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .flatten()
                .collect();
            if words.is_empty() {
                continue;
            }
            let values = tables
                .iter()
                .map(|t| words.iter().map(|w| Ok(t.get(w.parts())?.value.clone())).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            let fits = ct_fit_many(&values, n, schedule)?;
            for (w, f) in words.iter().zip(fits) {
                constants.insert(w.parts().to_vec(), (f.constant, f.residual));
            }
        }
        Ok(CtTable {
            prec: schedule.prec,
            constants,
        })
    }

    pub fn constant(&self, parts: &[u32]) -> Result<&(Float, f64)> {
        self.constants
            .get(parts)
            .ok_or_else(|| Error::Usage(format!("no fit for {parts:?}")))
    }

    /// `ct` of `sum_{|c| = l} x^{c-1} Li(c)` over compositions into
    /// `x.len()` parts, with the summed leave-one-out spread.
    pub fn param(&self, x: &[Rational], l: u32) -> Result<(Float, f64)> {
        let mut v = Float::with_val(self.prec, 0);
        let mut spread = 0.0;
        for c in comps(l, x.len())? {
            let m = monomial(x, &c);
            let (k, r) = self.constant(c.parts())?;
            spread += m.to_f64().abs() * r;
            v += Float::with_val(self.prec, &m) * k;
        }
        Ok((v, spread))
    }
}

/// `sum_{|c| = l} x^{c-1} zeta*(c)` over all compositions.
pub fn star_param(v: &Verifier, x: &[Rational], l: u32) -> Result<Float> {
    let mut s = Float::with_val(v.prec(), 0);
    for c in comps(l, x.len())? {
        let m = monomial(x, &c);
        if m != 0 {
            s += v.float(&m) * v.star(c.parts())?;
        }
    }
    Ok(s)
}

fn pow(x: &Rational, e: u32) -> Rational {
    let mut r = Rational::from(1);
    for _ in 0..e {
        r *= x;
    }
    r
}

/// What the ladder sums pick up beyond the regularized sums.
pub fn ladder_extra(v: &Verifier, kind: ParamKind, l: u32, x: &[Rational]) -> Result<Float> {
    let p = v.prec();
    let z2 = v.zeta(&[2])?;
    Ok(match kind {
        ParamKind::S => Float::with_val(p, 0),
        ParamKind::D if l == 2 => Float::with_val(p, -&z2) / 2,
        ParamKind::D => Float::with_val(p, 0),
        ParamKind::T if l == 3 => v.zeta(&[3])? / 3,
        ParamKind::T => {
            let c = Float::with_val(p, &z2 * &v.zeta(&[l - 2])?) / -2;
            c * v.float(&pow(&x[2], l - 3))
        }
        ParamKind::Q => {
            let d = star_param(v, &x[2..4], l - 2)?;
            let a = Float::with_val(p, &z2 * &d) / -2;
            let b = Float::with_val(p, &v.zeta(&[3])? * &v.zeta(&[l - 3])?) / 3;
            a + b * v.float(&pow(&x[3], l - 4))
        }
    })
}

fn kind_name(kind: ParamKind) -> &'static str {
    match kind {
        ParamKind::S => "S",
        ParamKind::D => "D",
        ParamKind::T => "T",
        ParamKind::Q => "Q",
    }
}

/// Lowest weight each constant-term formula is stated for.
pub fn min_weight(kind: ParamKind, pattern: PatternKind) -> u32 {
    match (kind, pattern) {
        (ParamKind::Q, PatternKind::Ladder) => 5,
        _ => kind.depth() as u32,
    }
}

pub fn check_ct(
    v: &Verifier,
    table: &CtTable,
    pattern: PatternKind,
    kind: ParamKind,
    l: u32,
    x: &[Rational; 4],
) -> CheckResult {
    let pname = match pattern {
        PatternKind::Ladder => "ladder",
        PatternKind::Flat => "flat",
    };
    let id = format!("prop23.{pname}.{}.w{l}", kind_name(kind));
    timed(|| {
        let run = || -> Result<CheckResult> {
            let xs = &x[..kind.depth()];
            let (got, spread) = table.param(xs, l)?;
            let mut want = star_param(v, xs, l)?;
            if pattern == PatternKind::Ladder {
                want += ladder_extra(v, kind, l, x)?;
            }
            Ok(CheckResult::numeric(id.clone(), PROP23, abs_diff(&got, &want), v.config.ct_tol)
                .param("weight", l)
                .param("x", point_string(xs))
                .param("fit_spread", spread)
                .seed(v.config.seed))
        };
        run().unwrap_or_else(|e| CheckResult::error(id.clone(), PROP23, e))
    })
}

/// `ct` of flat `Li(1,...,1)` and `Li(1,2)` against `0` and `-2 zeta(3)`.
pub fn check_star_examples(v: &Verifier, flat: &CtTable) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let cases: [(&[u32], &str); 4] = [(&[1], "ones1"), (&[1, 1], "ones2"), (&[1, 1, 1], "ones3"), (&[1, 2], "one_two")];
    for (parts, name) in cases {
        let id = format!("prop23.star.{name}");
        out.push(timed(|| {
            let run = || -> Result<CheckResult> {
                let (c, spread) = flat.constant(parts)?;
                let want = if parts == [1, 2] {
                    Float::with_val(v.prec(), v.zeta(&[3])? * -2)
                } else {
                    Float::with_val(v.prec(), 0)
                };
                let star = v.star(parts)?;
                Ok(CheckResult::numeric(id.clone(), PROP23, abs_diff(c, &want), v.config.ct_tol)
                    .param("index", format!("{parts:?}"))
                    .param("fit_spread", *spread)
                    .param("star_minus_expected", abs_diff(&star, &want)))
            };
            run().unwrap_or_else(|e| CheckResult::error(id.clone(), PROP23, e))
        }));
    }
    out
}

/// `|Li(1,2; z, z^3) - Li(1,2; z, z)|` at `z = 1 - 10^{-k}`.
pub fn lemma23_differences(ks: std::ops::RangeInclusive<i32>, prec: u32) -> Result<Vec<f64>> {
    let w = IndexWord::new(vec![1, 2]).map_err(|e| Error::Usage(e.to_string()))?;
    let steep = ZPattern::new(vec![1, 3]).map_err(|e| Error::Usage(e.to_string()))?;
    let items = [(w.clone(), steep), (w, ZPattern::flat(2))];
    ks.map(|k| {
        let z = Float::with_val(prec, 1) - Float::with_val(prec, 10f64.powi(-k));
        let v = eval_li_many(&items, &z, 1e-20)?;
        Ok(abs_diff(&v[0].value, &v[1].value))
    })
    .collect()
}

pub fn check_lemma23(v: &Verifier) -> CheckResult {
    let id = "lemma23.difference";
    timed(|| match lemma23_differences(2..=5, v.prec()) {
        Ok(d) => {
            let decreasing = d.windows(2).all(|p| p[1] < p[0]);
            let seq: Vec<String> = d.iter().map(|x| format!("{x:.6e}")).collect();
            CheckResult::exact(id, LEMMA23, decreasing, if decreasing { "" } else { "not decreasing" })
                .param("differences", seq)
                .param("z", "1 - 10^-k, k = 2..5")
        }
        Err(e) => CheckResult::error(id, LEMMA23, e),
    })
}

/// `Li(1,...,1; z,...,z) = Li_1(z)^n / n!` for `n <= 4`.
pub fn check_shuffle_ones(v: &Verifier, zs: &[f64]) -> Vec<CheckResult> {
    (1..=4usize)
        .map(|n| {
            let id = format!("shuffle.ones{n}");
            timed(|| {
                let run = || -> Result<CheckResult> {
                    let mut worst = 0f64;
                    for &zf in zs {
                        let z = Float::with_val(v.prec(), zf);
                        let items = [
                            (IndexWord::new(vec![1]).expect("valid"), ZPattern::flat(1)),
                            (IndexWord::new(vec![1; n]).expect("valid"), ZPattern::flat(n)),
                        ];
                        let vals = eval_li_many(&items, &z, v.target())?;
                        let mut fact = Float::with_val(v.prec(), 1);
                        for k in 2..=n {
                            fact *= k as u32;
                        }
                        let mut p = Float::with_val(v.prec(), 1);
                        for _ in 0..n {
                            p *= &vals[0].value;
                        }
                        worst = worst.max(abs_diff(&(p / &fact), &vals[1].value));
                    }
                    Ok(CheckResult::numeric(id.clone(), SHUFFLE, worst, v.config.tol)
                        .param("z", zs.to_vec()))
                };
                run().unwrap_or_else(|e| CheckResult::error(id.clone(), SHUFFLE, e))
            })
        })
        .collect()
}

/// Every constant-term check up to the configured weight.
pub fn prop23_suite(v: &Verifier) -> Vec<CheckResult> {
    let schedule = CtSchedule::default();
    let max_w = v.config.ct_max_weight;
    let mut out = Vec::new();
    let mut rng = v.rng(0x2300);
    let x = random_point(&mut rng);
    for pattern in [PatternKind::Ladder, PatternKind::Flat] {
        let table = match CtTable::new(pattern, max_w, &schedule) {
            Ok(t) => t,
            Err(e) => {
                out.push(CheckResult::error(format!("prop23.{pattern:?}.fit"), PROP23, e));
                continue;
            }
        };
        for kind in [ParamKind::D, ParamKind::T, ParamKind::Q] {
            for l in min_weight(kind, pattern)..=max_w {
                out.push(check_ct(v, &table, pattern, kind, l, &x));
            }
        }
        if pattern == PatternKind::Flat {
            out.extend(check_star_examples(v, &table));
        }
    }
    out.push(check_lemma23(v));
    out.extend(check_shuffle_ones(v, &[0.3, 0.7, 0.9]));
    out
}
