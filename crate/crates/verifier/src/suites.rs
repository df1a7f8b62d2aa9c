//! Named groups of checks and a parallel runner with deterministic output.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::context::Verifier;
use crate::formulas::{self, Theorem1Mode};
use crate::report::CheckResult;
use crate::{polylog, properties, regularization, symbolic, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    All,
    SumFormula,
    Thm1,
    Thm2,
    Prop21,
    Prop22,
    Prop23,
    Lemma21,
    Lemma22,
    Lemma3x,
    Lemma41,
    Remark21,
    Remark41,
    Table1,
    Cosets,
    Properties,
}

impl Suite {
    pub const EACH: [Suite; 15] = [
        Suite::SumFormula,
        Suite::Thm1,
        Suite::Thm2,
        Suite::Prop21,
        Suite::Prop22,
        Suite::Prop23,
        Suite::Lemma21,
        Suite::Lemma22,
        Suite::Lemma3x,
        Suite::Lemma41,
        Suite::Remark21,
        Suite::Remark41,
        Suite::Table1,
        Suite::Cosets,
        Suite::Properties,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::SumFormula => "sumformula",
            Suite::Thm1 => "thm1",
            Suite::Thm2 => "thm2",
            Suite::Prop21 => "prop21",
            Suite::Prop22 => "prop22",
            Suite::Prop23 => "prop23",
            Suite::Lemma21 => "lemma21",
            Suite::Lemma22 => "lemma22",
            Suite::Lemma3x => "lemma3x",
            Suite::Lemma41 => "lemma41",
            Suite::Remark21 => "remark21",
            Suite::Remark41 => "remark41",
            Suite::Table1 => "table1",
            Suite::Cosets => "cosets",
            Suite::Properties => "properties",
        }
    }

    /// Whether the suite only does exact arithmetic.
    pub fn is_symbolic(self) -> bool {
        matches!(
            self,
            Suite::Lemma21 | Suite::Lemma22 | Suite::Lemma3x | Suite::Table1 | Suite::Cosets | Suite::Properties
        )
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        if s == "all" {
            return Ok(Suite::All);
        }
        Suite::EACH
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown suite {s:?}")))
    }
}

type Task<'a> = Box<dyn FnOnce() -> Vec<CheckResult> + Send + 'a>;

fn one<'a>(f: impl FnOnce() -> CheckResult + Send + 'a) -> Task<'a> {
    Box::new(move || vec![f()])
}

/// Above this weight the parameterized sum formula is also checked at
/// random points.
pub const RANDOM_POINTS_FROM: u32 = 7;

fn tasks<'a>(v: &'a Verifier, suite: Suite) -> Vec<Task<'a>> {
    let c = &v.config;
    let weights = (*c.weights.start()).max(5)..=*c.weights.end();
    let sym_weights = *weights.start()..=(*weights.end()).min(c.symbolic_max_weight);
    let sym_max = c.symbolic_max_weight;
    let mut t: Vec<Task<'a>> = Vec::new();
    match suite {
        Suite::All => {
            for s in Suite::EACH {
                t.extend(tasks(v, s));
            }
        }
        Suite::SumFormula => {
            for l in weights {
                t.push(one(move || formulas::check_sum_formula(v, l)));
            }
        }
        Suite::Thm1 => {
            let n = c.random_points;
            for l in weights.clone() {
                t.push(one(move || formulas::check_theorem1(v, l, Theorem1Mode::Coefficientwise)));
                if l > RANDOM_POINTS_FROM {
                    t.push(one(move || formulas::check_theorem1(v, l, Theorem1Mode::RandomPoints(n))));
                }
            }
            for l in sym_weights {
                t.push(one(move || formulas::check_theorem1_invariance(l)));
                t.push(one(move || formulas::check_theorem1_reduction(l)));
            }
        }
        Suite::Thm2 => {
            for l in weights {
                for f in formulas::theorem2_formulas() {
                    t.push(one(move || formulas::check_weighted(v, &f, l)));
                }
                t.push(one(move || formulas::check_theorem2_consistency(l)));
                for (f, comb, scale) in formulas::derivations() {
                    if f.anchor == crate::anchors::THEOREM2 {
                        t.push(one(move || formulas::check_derivation(&f, &comb, &scale, l)));
                    }
                }
            }
        }
        Suite::Lemma41 => {
            for k in 1..=4 {
                t.push(one(move || formulas::check_lemma41_symbolic(k)));
                for l in weights.clone() {
                    t.push(one(move || formulas::check_lemma41(v, k, l)));
                }
            }
        }
        Suite::Remark41 => {
            t.push(Box::new(formulas::check_eq45_combinations));
            for l in weights {
                t.push(one(move || formulas::check_eq45_bookkeeping(l)));
                t.push(one(move || formulas::check_eq45(v, l)));
                t.push(one(move || formulas::check_quarter(v, l)));
                for f in formulas::remark41_formulas() {
                    t.push(one(move || formulas::check_weighted(v, &f, l)));
                }
                for (f, comb, scale) in formulas::derivations() {
                    if f.anchor == crate::anchors::REMARK41 {
                        t.push(one(move || formulas::check_derivation(&f, &comb, &scale, l)));
                    }
                }
            }
        }
        Suite::Prop21 => {
            t.push(Box::new(move || polylog::prop21_symbolic(sym_max)));
            for &z in &c.z {
                t.push(Box::new(move || polylog::prop21_numeric(v, 4..=sym_max, z)));
            }
        }
        Suite::Prop22 => {
            let seed = c.seed;
            t.push(Box::new(move || polylog::prop22_symbolic(sym_max, sym_max.min(6), seed)));
            for &z in &c.z {
                t.push(Box::new(move || polylog::prop22_numeric(v, 4..=sym_max, z)));
            }
        }
        Suite::Prop23 => t.push(Box::new(move || regularization::prop23_suite(v))),
        Suite::Lemma21 => t.push(Box::new(move || symbolic::lemma21_suite(sym_max))),
        Suite::Lemma22 => t.push(Box::new(move || symbolic::lemma22_suite(sym_max))),
        Suite::Lemma3x => t.push(Box::new(move || symbolic::lemma3x_suite(sym_max))),
        Suite::Remark21 => t.push(Box::new(move || symbolic::remark21_suite(v))),
        Suite::Table1 => t.push(Box::new(symbolic::table1_suite)),
        Suite::Cosets => t.push(Box::new(symbolic::cosets_suite)),
        Suite::Properties => t.push(Box::new(move || properties::properties_suite(v))),
    }
    t
}

/// Runs the selected suites on `jobs` threads (0 picks the default) and
/// returns the results sorted by check id.
pub fn run_suites(v: &Verifier, suites: &[Suite], jobs: usize) -> Result<Vec<CheckResult>> {
    let mut selected: Vec<Suite> = if suites.contains(&Suite::All) {
        Suite::EACH.to_vec()
    } else {
        suites.to_vec()
    };
    selected.sort_unstable();
    selected.dedup();
    let work: Vec<Task<'_>> = selected.into_iter().flat_map(|s| tasks(v, s)).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Usage(e.to_string()))?;
    let mut out: Vec<CheckResult> = pool.install(|| work.into_par_iter().flat_map_iter(|f| f()).collect());
    out.sort_by(|a, b| id_order(&a.check, &b.check));
    Ok(out)
}

/// Orders ids with embedded numbers by value, so `w9` precedes `w10`.
pub fn id_order(a: &str, b: &str) -> Ordering {
    fn chunks(s: &str) -> Vec<(bool, &str)> {
        let mut out = Vec::new();
        let mut start = 0;
        for (i, c) in s.char_indices().skip(1) {
            let prev = s[..i].chars().next_back().is_some_and(|p| p.is_ascii_digit());
            if prev != c.is_ascii_digit() {
                out.push((prev, &s[start..i]));
                start = i;
            }
        }
        if start < s.len() {
            out.push((s[start..].starts_with(|c: char| c.is_ascii_digit()), &s[start..]));
        }
        out
    }
    let (ca, cb) = (chunks(a), chunks(b));
    for (x, y) in ca.iter().zip(&cb) {
        let o = match (x, y) {
            ((true, x), (true, y)) => x.len().cmp(&y.len()).then_with(|| x.cmp(y)),
            ((_, x), (_, y)) => x.cmp(y),
        };
        if o != Ordering::Equal {
            return o;
        }
    }
    ca.len().cmp(&cb.len()).then_with(|| a.cmp(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numeric_parts_sort_by_value() {
        let mut ids = vec!["thm1.w10", "thm1.w9", "thm1.invariance.w5", "prop21.w4.z0.8", "prop21.w4.z0.5"];
        ids.sort_by(|a, b| id_order(a, b));
        assert_eq!(ids, ["prop21.w4.z0.5", "prop21.w4.z0.8", "thm1.invariance.w5", "thm1.w9", "thm1.w10"]);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("thm3".parse::<Suite>().is_err());
    }
}
