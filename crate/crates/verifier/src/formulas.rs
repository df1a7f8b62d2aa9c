//! Sum formulas at the level of zeta values: the plain and parameterized sum
//! formulas, the weighted formulas, and the 0/1 substitutions they come from.

use std::collections::BTreeMap;

use indexword::{compositions, IndexWord};
use numeric::{Float, Rational};
use permgroup::Perm;
use rug::ops::Pow;
use polyring::{
    assembled_lhs, complete_homogeneous, lhs_is_fixed_by, substituted_combination,
    theorem_patterns,
};

use crate::anchors::{LEMMA41, REMARK41, SUM_FORMULA, THEOREM1, THEOREM2};
use crate::context::{point_string, random_point, Verifier};
use crate::eval::abs_diff;
use crate::report::{timed, CheckResult};
use crate::{Error, Result};

type Tuple = [i64; 4];

fn admissible(l: u32) -> Result<Vec<IndexWord>> {
    compositions(l, 4, true).map_err(|e| Error::Usage(e.to_string()))
}

fn all_compositions(l: u32) -> Result<Vec<IndexWord>> {
    compositions(l, 4, false).map_err(|e| Error::Usage(e.to_string()))
}

fn values(v: &Verifier, l: u32) -> Result<Vec<(IndexWord, Float)>> {
    admissible(l)?
        .into_iter()
        .map(|w| {
            let z = v.zeta(w.parts())?;
            Ok((w, z))
        })
        .collect()
}

/// `sum_w c(w) zeta(w) - rhs zeta(l)` over admissible `w` of weight `l`.
fn weighted_residual(v: &Verifier, l: u32, c: impl Fn(&[u32]) -> Rational, rhs: &Rational) -> Result<f64> {
    let mut lhs = Float::with_val(v.prec(), 0);
    for (w, z) in values(v, l)? {
        lhs += v.float(&c(w.parts())) * z;
    }
    let r = v.float(rhs) * v.zeta(&[l])?;
    Ok(abs_diff(&lhs, &r))
}

fn run(id: String, anchor: &'static str, f: impl FnOnce() -> Result<CheckResult>) -> CheckResult {
    timed(|| f().unwrap_or_else(|e| CheckResult::error(id.clone(), anchor, e)))
}

// ---------------------------------------------------------------- sum formula

pub fn check_sum_formula(v: &Verifier, l: u32) -> CheckResult {
    let id = format!("sumformula.w{l}");
    run(id.clone(), SUM_FORMULA, || {
        let r = weighted_residual(v, l, |_| Rational::from(1), &Rational::from(1))?;
        Ok(CheckResult::numeric(id, SUM_FORMULA, r, v.config.tol)
            .param("weight", l)
            .param("terms", admissible(l)?.len())
            .param("prec_bits", v.config.prec_bits))
    })
}

// ---------------------------------------------------------------- theorem 1

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem1Mode {
    /// Every monomial coefficient of the left side against `zeta(l)`.
    Coefficientwise,
    /// Both sides at this many random rational points.
    RandomPoints(usize),
}

pub fn check_theorem1(v: &Verifier, l: u32, mode: Theorem1Mode) -> CheckResult {
    let id = match mode {
        Theorem1Mode::Coefficientwise => format!("thm1.w{l}"),
        Theorem1Mode::RandomPoints(_) => format!("thm1.w{l}.random"),
    };
    run(id.clone(), THEOREM1, || {
        let lhs = assembled_lhs(l, &theorem_patterns())?;
        let zl = v.zeta(&[l])?;
        let mut zs = BTreeMap::new();
        for w in lhs.keys() {
            zs.insert(w.clone(), v.zeta(w.parts())?);
        }
        let rhs = complete_homogeneous(l - 4);
        match mode {
            Theorem1Mode::Coefficientwise => {
                let mut monos: Vec<[u32; 4]> = rhs.terms().map(|(e, _)| *e).collect();
                for p in lhs.values() {
                    monos.extend(p.terms().map(|(e, _)| *e));
                }
                monos.sort_unstable();
                monos.dedup();
                let mut worst = 0f64;
                for e in &monos {
                    let mut c = Float::with_val(v.prec(), 0);
                    for (w, p) in &lhs {
                        let k = p.coeff(e);
                        if k != 0 {
                            c += v.float(&k) * &zs[w];
                        }
                    }
                    let want = v.float(&rhs.coeff(e)) * &zl;
                    worst = worst.max(abs_diff(&c, &want));
                }
                Ok(CheckResult::numeric(id, THEOREM1, worst, v.config.tol)
                    .param("weight", l)
                    .param("mode", "coefficientwise")
                    .param("monomials", monos.len()))
            }
            Theorem1Mode::RandomPoints(n) => {
                let mut rng = v.rng(0x7431_0000 + l as u64);
                let mut worst = 0f64;
                let mut points = Vec::new();
                for _ in 0..n {
                    let x = random_point(&mut rng);
                    let mut s = Float::with_val(v.prec(), 0);
                    for (w, p) in &lhs {
                        s += v.float(&p.substitute(&x)) * &zs[w];
                    }
                    let want = v.float(&rhs.substitute(&x)) * &zl;
                    worst = worst.max(abs_diff(&s, &want));
                    points.push(point_string(&x));
                }
                Ok(CheckResult::numeric(id, THEOREM1, worst, v.config.tol)
                    .param("weight", l)
                    .param("mode", "random-point")
                    .param("points", points)
                    .seed(v.config.seed))
            }
        }
    })
}

/// The assembled left side is fixed by `(1234)`, as exact polynomials.
pub fn check_theorem1_invariance(l: u32) -> CheckResult {
    let id = format!("thm1.invariance.w{l}");
    run(id.clone(), THEOREM1, || {
        let sigma: Perm = "(1234)".parse().expect("cycle literal");
        let fixed = lhs_is_fixed_by(l, &sigma)?;
        Ok(CheckResult::exact(id, THEOREM1, fixed, if fixed { "" } else { "moved by (1234)" }))
    })
}

/// At `x = (1, 0, 0, 0)` every coefficient is 1, so the identity becomes the
/// plain sum formula.
pub fn check_theorem1_reduction(l: u32) -> CheckResult {
    let id = format!("thm1.reduction.w{l}");
    run(id.clone(), THEOREM1, || {
        let x = [1, 0, 0, 0].map(Rational::from);
        let lhs = assembled_lhs(l, &theorem_patterns())?;
        let bad: Vec<String> = lhs
            .iter()
            .filter(|(_, p)| p.substitute(&x) != 1)
            .map(|(w, p)| format!("{w} -> {}", p.substitute(&x)))
            .collect();
        let rhs_one = complete_homogeneous(l - 4).substitute(&x) == 1;
        let pass = bad.is_empty() && rhs_one;
        Ok(CheckResult::exact(id, THEOREM1, pass, bad.join("; ")))
    })
}

// ---------------------------------------------------------------- lemma 4.1

/// Rational combination of parameterized sums `Z(l; a, b, c, d)`.
#[derive(Clone, Debug)]
pub struct Combination {
    pub terms: BTreeMap<Tuple, Rational>,
    pub rhs: fn(u32) -> Rational,
}

impl Combination {
    fn from_ints(terms: &[(Tuple, i64)], rhs: fn(u32) -> Rational) -> Self {
        Combination {
            terms: terms.iter().map(|(t, k)| (*t, Rational::from(*k))).collect(),
            rhs,
        }
    }

    /// Coefficient of `zeta(w)`: `sum_t c_t prod_j t_j^{w_j - 1}`.
    pub fn weight(&self, w: &[u32]) -> Rational {
        self.weight_without(w, None)
    }

    fn weight_without(&self, w: &[u32], skip: Option<&Tuple>) -> Rational {
        let mut s = Rational::new();
        for (t, c) in &self.terms {
            if Some(t) == skip {
                continue;
            }
            let mut m = Rational::from(c);
            for (&a, &e) in t.iter().zip(w) {
                m *= Rational::from(rug::Integer::from(a).pow(e - 1));
            }
            s += m;
        }
        s
    }

    pub fn coefficient(&self, t: &Tuple) -> Rational {
        self.terms.get(t).cloned().unwrap_or_default()
    }

    fn scaled_add(&self, other: &Combination, k: &Rational, rhs: fn(u32) -> Rational) -> Combination {
        let mut terms = self.terms.clone();
        for (t, c) in &other.terms {
            let e = terms.entry(*t).or_default();
            *e += Rational::from(c * k);
        }
        terms.retain(|_, c| *c != 0);
        Combination { terms, rhs }
    }
}

const ONES: Tuple = [1, 1, 1, 1];

fn binom(n: u32, k: u32) -> Rational {
    let mut r = Rational::from(1);
    for i in 0..k {
        r *= Rational::from((n as i64 - i as i64, (i + 1) as i64));
    }
    r
}

fn q(n: i64, d: i64) -> Rational {
    Rational::from((n, d))
}

/// The substituted point of each of the four 0/1 substitutions.
pub fn lemma41_point(which: usize) -> Tuple {
    match which {
        1 => [1, 1, 0, 0],
        2 => [1, 0, 1, 0],
        3 => [1, 1, 1, 0],
        _ => [1, 1, 1, 1],
    }
}

/// The combination obtained by substituting the point, computed from the
/// argument tuples of the parameterized sum formula.
pub fn derive_lemma41(which: usize) -> BTreeMap<Tuple, i64> {
    substituted_combination(&lemma41_point(which))
}

/// The combinations as printed, with their right-hand sides.
pub fn lemma41_printed(which: usize) -> Combination {
    match which {
        1 => Combination::from_ints(
            &[
                ([2, 2, 2, 1], 2),
                ([2, 2, 1, 1], 1),
                ([2, 1, 1, 1], 1),
                ([1, 2, 2, 1], -2),
                ([1, 2, 1, 1], -1),
                ([1, 1, 1, 1], -3),
            ],
            |l| Rational::from(l as i64 - 3),
        ),
        2 => Combination::from_ints(
            &[
                ([2, 2, 2, 1], 4),
                ([2, 2, 1, 1], 2),
                ([1, 2, 2, 1], -4),
                ([1, 2, 1, 1], -2),
                ([1, 1, 2, 1], -4),
            ],
            |l| Rational::from(l as i64 - 3),
        ),
        3 => Combination::from_ints(
            &[
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
                ([1, 1, 1, 1], 3),
            ],
            |l| binom(l - 2, 2),
        ),
        _ => Combination::from_ints(
            &[
                ([4, 3, 2, 1], 24),
                ([3, 3, 2, 1], -24),
                ([3, 2, 2, 1], -16),
                ([3, 2, 1, 1], -8),
                ([2, 2, 2, 1], 16),
                ([2, 2, 1, 1], 8),
                ([2, 1, 1, 1], 4),
                ([1, 1, 1, 1], -4),
            ],
            |l| binom(l - 1, 3),
        ),
    }
}

/// First sum of substitutions, `(l+1)(l-3)/2 zeta(l)` on the right.
pub fn eq45_printed() -> Combination {
    Combination::from_ints(
        &[
            ([3, 3, 2, 1], 6),
            ([3, 2, 2, 1], 4),
            ([3, 2, 1, 1], 2),
            ([2, 3, 2, 1], -6),
            ([2, 2, 2, 1], -4),
            ([2, 2, 1, 1], -2),
            ([2, 1, 2, 1], -2),
            ([2, 1, 1, 1], -1),
        ],
        |l| q((l as i64 + 1) * (l as i64 - 3), 2),
    )
}

/// Three-term combination behind the 2-and-3-power formula.
pub fn quarter_printed() -> Combination {
    Combination::from_ints(
        &[([4, 3, 2, 1], 6), ([2, 3, 2, 1], -6), ([2, 1, 2, 1], -2)],
        |l| {
            let l = l as i64;
            q((l + 1) * (l * l + 5 * l - 18), 24)
        },
    )
}

fn combination_residual(v: &Verifier, c: &Combination, l: u32) -> Result<f64> {
    weighted_residual(v, l, |w| c.weight(w), &(c.rhs)(l))
}

/// The derived combination matches the printed one exactly.
pub fn check_lemma41_symbolic(which: usize) -> CheckResult {
    let id = format!("lemma41.{which}.derive");
    timed(|| {
        let got = derive_lemma41(which);
        let want = lemma41_printed(which);
        let want: BTreeMap<Tuple, i64> = want
            .terms
            .iter()
            .map(|(t, c)| (*t, c.to_f64() as i64))
            .collect();
        let detail = if got == want {
            format!("{} terms", got.len())
        } else {
            format!("derived {got:?}")
        };
        CheckResult::exact(id, LEMMA41, got == want, detail)
            .param("point", format!("{:?}", lemma41_point(which)))
    })
}

pub fn check_lemma41(v: &Verifier, which: usize, l: u32) -> CheckResult {
    let id = format!("lemma41.{which}.w{l}");
    run(id.clone(), LEMMA41, || {
        let r = combination_residual(v, &lemma41_printed(which), l)?;
        Ok(CheckResult::numeric(id, LEMMA41, r, v.config.tol).param("weight", l))
    })
}

// ---------------------------------------------------------------- weighted formulas

/// A weighted sum formula `sum' w(l) zeta(l) = rhs(l) zeta(l)`.
#[derive(Clone, Copy)]
pub struct Weighted {
    pub id: &'static str,
    pub anchor: &'static str,
    pub weight: fn(&[u32]) -> Rational,
    pub rhs: fn(u32) -> Rational,
}

fn p2(e: u32) -> Rational {
    Rational::from(rug::Integer::from(1) << e)
}

fn p3(e: u32) -> Rational {
    Rational::from(rug::Integer::from(3).pow(e))
}

fn split(w: &[u32]) -> (u32, u32, u32) {
    (w[0], w[1], w[2])
}

fn w14(w: &[u32]) -> Rational {
    let (a, b, c) = split(w);
    p2(a + b + c - 2) + p2(a + b - 2) + p2(a - 1) - p2(b + c - 1) - p2(b - 1)
}

fn w15(w: &[u32]) -> Rational {
    let (a, b, c) = split(w);
    p2(a + b + c - 1) + p2(a + b - 1) - p2(b + c) - p2(b) - p2(c + 1)
}

fn w16(w: &[u32]) -> Rational {
    let (a, _, c) = split(w);
    p2(a) + p2(c + 1)
}

fn w17(w: &[u32]) -> Rational {
    let (a, b, c) = split(w);
    (p3(b) * p2(a - 1) - p3(b) - 1u32) * p2(a + c)
}

fn w46(w: &[u32]) -> Rational {
    let (a, b, c) = split(w);
    p3(a + b - 1) * p2(c) + p3(a - 1) * p2(b + c) + p3(a - 1) * p2(b)
        - p3(b) * p2(a + c - 1)
        - p2(a + b + c)
        - p2(a + b)
        - p2(a + c - 1)
        - p2(a)
        + p2(b + c)
        + p2(b)
        + p2(c)
}

fn w47(w: &[u32]) -> Rational {
    let (a, b, c) = split(w);
    p3(b) * p2(2 * a + c - 1)
        - p3(a + b - 1) * p2(c + 1)
        - p3(a - 1) * p2(b + c + 1)
        - p3(a - 1) * p2(b + 1)
        + p2(a + b + c)
        + p2(a + b)
        + p2(a)
}

fn w48(w: &[u32]) -> Rational {
    let (a, b, c) = split(w);
    p3(a + b - 1) * p2(c + 1) + p3(a - 1) * p2(b + c + 1) + p3(a - 1) * p2(b + 1)
        - p3(b) * p2(a + c)
        - p2(a + b + c)
        - p2(a + b)
        - p2(a + c)
        - p2(a)
}

/// The four weighted formulas, ids `i.1`, `i.2`, `i.3`, `ii`.
pub fn theorem2_formulas() -> [Weighted; 4] {
    [
        Weighted { id: "i.1", anchor: THEOREM2, weight: w14, rhs: |l| Rational::from(l) },
        Weighted { id: "i.2", anchor: THEOREM2, weight: w15, rhs: |l| Rational::from(l as i64 - 3) },
        Weighted { id: "i.3", anchor: THEOREM2, weight: w16, rhs: |l| Rational::from(l + 3) },
        Weighted {
            id: "ii",
            anchor: THEOREM2,
            weight: w17,
            rhs: |l| {
                let l = l as i64;
                q((l + 1) * (l * l + 5 * l - 18), 12)
            },
        },
    ]
}

/// The three weighted rewritings, ids `1`, `2`, `3`.
pub fn remark41_formulas() -> [Weighted; 3] {
    [
        Weighted {
            id: "1",
            anchor: REMARK41,
            weight: w46,
            rhs: |l| {
                let l = l as i64;
                q(l * (l - 5), 2)
            },
        },
        Weighted {
            id: "2",
            anchor: REMARK41,
            weight: w47,
            rhs: |l| {
                let l = l as i64;
                q((l + 1) * (l * l - 7 * l + 18), 12)
            },
        },
        Weighted {
            id: "3",
            anchor: REMARK41,
            weight: w48,
            rhs: |l| {
                let l = l as i64;
                Rational::from((l + 1) * (l - 3))
            },
        },
    ]
}

fn prefix(anchor: &str) -> &'static str {
    if anchor == THEOREM2 {
        "thm2"
    } else {
        "remark41"
    }
}

pub fn check_weighted(v: &Verifier, f: &Weighted, l: u32) -> CheckResult {
    let id = format!("{}.{}.w{l}", prefix(f.anchor), f.id);
    run(id.clone(), f.anchor, || {
        let r = weighted_residual(v, l, f.weight, &(f.rhs)(l))?;
        Ok(CheckResult::numeric(id, f.anchor, r, v.config.tol)
            .param("weight", l)
            .param("rhs", (f.rhs)(l).to_string()))
    })
}

/// `i.3 = 2 i.1 - i.2` coefficient by coefficient, for every composition of
/// each weight, and for the right-hand sides.
pub fn check_theorem2_consistency(l: u32) -> CheckResult {
    let id = format!("thm2.consistency.w{l}");
    run(id.clone(), THEOREM2, || {
        let [f1, f2, f3, _] = theorem2_formulas();
        let mut bad = Vec::new();
        for w in all_compositions(l)? {
            let p = w.parts();
            let lhs = (f3.weight)(p);
            let rhs = Rational::from(2 * (f1.weight)(p)) - (f2.weight)(p);
            if lhs != rhs {
                bad.push(format!("{w}: {lhs} vs {rhs}"));
            }
        }
        let rhs_ok = (f3.rhs)(l) == Rational::from(2 * (f1.rhs)(l)) - (f2.rhs)(l);
        if !rhs_ok {
            bad.push("right-hand sides differ".into());
        }
        Ok(CheckResult::exact(id, THEOREM2, bad.is_empty(), bad.join("; ")).param("weight", l))
    })
}

/// Each weighted formula is a combination of substitutions with the
/// `Z(l; 1, 1, 1, 1) = zeta(l)` term moved to the right, times a scale.
pub fn derivations() -> Vec<(Weighted, Combination, Rational)> {
    let [i1, i2, _, ii] = theorem2_formulas();
    let [r1, r2, r3] = remark41_formulas();
    vec![
        (i1, lemma41_printed(1), Rational::from(1)),
        (i2, lemma41_printed(2), Rational::from(1)),
        (ii, quarter_printed(), Rational::from(2)),
        (r1, lemma41_printed(3), Rational::from(1)),
        (r2, lemma41_printed(4), q(1, 2)),
        (r3, eq45_printed(), Rational::from(2)),
    ]
}

pub fn check_derivation(f: &Weighted, c: &Combination, scale: &Rational, l: u32) -> CheckResult {
    let id = format!("{}.{}.derivation.w{l}", prefix(f.anchor), f.id);
    run(id.clone(), f.anchor, || {
        let mut bad = Vec::new();
        for w in all_compositions(l)? {
            let p = w.parts();
            let want = Rational::from(scale * c.weight_without(p, Some(&ONES)));
            let got = (f.weight)(p);
            if got != want {
                bad.push(format!("{w}: {got} vs {want}"));
            }
        }
        let rhs_want = Rational::from(scale * ((c.rhs)(l) - c.coefficient(&ONES)));
        if (f.rhs)(l) != rhs_want {
            bad.push(format!("rhs {} vs {rhs_want}", (f.rhs)(l)));
        }
        bad.truncate(4);
        Ok(CheckResult::exact(id, f.anchor, bad.is_empty(), bad.join("; ")).param("weight", l))
    })
}

/// The two combination steps: the first three substitutions with the
/// second halved add up to the first sum, and a quarter of the fourth
/// turns that into the three-term combination.
pub fn check_eq45_combinations() -> Vec<CheckResult> {
    let half = q(1, 2);
    let quarter = q(1, 4);
    let one = Rational::from(1);
    let sum = lemma41_printed(1)
        .scaled_add(&lemma41_printed(2), &half, |_| Rational::new())
        .scaled_add(&lemma41_printed(3), &one, |_| Rational::new());
    let e45 = eq45_printed();
    let a = CheckResult::exact(
        "remark41.eq45.combination",
        REMARK41,
        sum.terms == e45.terms,
        format!("{} terms", sum.terms.len()),
    );
    let moved = e45.scaled_add(&lemma41_printed(4), &quarter, |_| Rational::new());
    let mut want = quarter_printed().terms;
    want.insert(ONES, Rational::from(-1));
    let b = CheckResult::exact(
        "remark41.quarter.combination",
        REMARK41,
        moved.terms == want,
        format!("{} terms", moved.terms.len()),
    );
    vec![a, b]
}

/// Scalar identities used when adding up the substitutions.
pub fn check_eq45_bookkeeping(l: u32) -> CheckResult {
    let li = l as i64;
    let first = q(3 * (li - 3), 2) + binom(l - 2, 2) == q((li + 1) * (li - 3), 2);
    let second = q((li + 1) * (li - 3), 2) + binom(l - 1, 3) / Rational::from(4) + 1u32
        == q((li + 1) * (li * li + 5 * li - 18), 24);
    CheckResult::exact(
        format!("remark41.bookkeeping.w{l}"),
        REMARK41,
        first && second,
        if first && second { "" } else { "scalar identity fails" },
    )
    .param("weight", l)
}

pub fn check_eq45(v: &Verifier, l: u32) -> CheckResult {
    let id = format!("remark41.eq45.w{l}");
    run(id.clone(), REMARK41, || {
        let r = combination_residual(v, &eq45_printed(), l)?;
        Ok(CheckResult::numeric(id, REMARK41, r, v.config.tol).param("weight", l))
    })
}

pub fn check_quarter(v: &Verifier, l: u32) -> CheckResult {
    let id = format!("remark41.quarter.w{l}");
    run(id.clone(), REMARK41, || {
        let r = combination_residual(v, &quarter_printed(), l)?;
        Ok(CheckResult::numeric(id, REMARK41, r, v.config.tol).param("weight", l))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_right_hand_sides() {
        // at l = 7: 3*4/2 + C(5,2) = 16 = 8*4/2
        assert_eq!((eq45_printed().rhs)(7), Rational::from(16));
        assert_eq!((lemma41_printed(3).rhs)(6), Rational::from(6));
        let [_, _, _, ii] = theorem2_formulas();
        assert_eq!((ii.rhs)(5), Rational::from(16));
        let [r1, _, r3] = remark41_formulas();
        assert_eq!((r1.rhs)(6), Rational::from(3));
        assert_eq!((r3.rhs)(5), Rational::from(12));
    }

    #[test]
    fn single_composition_at_weight_five() {
        // only (2,1,1,1): (2^2 + 2^2) = 8 = 5 + 3
        let [_, _, i3, _] = theorem2_formulas();
        assert_eq!((i3.weight)(&[2, 1, 1, 1]), Rational::from(8));
    }

    #[test]
    fn combination_weights() {
        let c = lemma41_printed(4);
        // every tuple contributes its coefficient at (1,1,1,1)
        let total: i64 = c.terms.values().map(|k| k.to_f64() as i64).sum();
        assert_eq!(c.weight(&[1, 1, 1, 1]), Rational::from(total));
        assert_eq!(c.coefficient(&[4, 3, 2, 1]), Rational::from(24));
    }
}
