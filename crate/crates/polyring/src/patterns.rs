//! Signed multisets of argument tuples `(x_{A1}, x_{A2}, x_{A3}, x_{A4})` and
//! the coefficient polynomials they induce on `zeta(l1, l2, l3, l4)`.

use std::collections::{BTreeMap, HashMap};

use indexword::IndexWord;
use permgroup::named::{c, c_coset, cb, group, s4};
use permgroup::{Perm, PermSet, Subscript};
use rug::Rational;

use crate::poly::{complete_homogeneous, subset_power, MultiPoly};
use crate::{Error, Result};

/// Integer-weighted multiset of subscript tuples.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct ArgPatternSum {
    terms: BTreeMap<Vec<Subscript>, i64>,
}

impl ArgPatternSum {
    pub fn single(t: Vec<Subscript>) -> Self {
        let mut p = ArgPatternSum::default();
        p.insert(t, 1);
        p
    }

    pub fn insert(&mut self, t: Vec<Subscript>, k: i64) {
        if k == 0 {
            return;
        }
        let e = self.terms.entry(t.clone()).or_insert(0);
        *e += k;
        if *e == 0 {
            self.terms.remove(&t);
        }
    }

    pub fn add(&mut self, other: &ArgPatternSum, k: i64) {
        for (t, v) in &other.terms {
            self.insert(t.clone(), v * k);
        }
    }

    pub fn act(&self, sigma: &Perm) -> ArgPatternSum {
        let mut out = ArgPatternSum::default();
        for (t, &v) in &self.terms {
            out.insert(t.iter().map(|s| s.act(sigma)).collect(), v);
        }
        out
    }

    /// `sum_{sigma in set} sigma . self`.
    pub fn sum_over(&self, set: &PermSet) -> ArgPatternSum {
        let mut out = ArgPatternSum::default();
        for sigma in set.iter() {
            out.add(&self.act(sigma), 1);
        }
        out
    }

    /// Drops the first slot of every tuple.
    pub fn tails(&self) -> ArgPatternSum {
        let mut out = ArgPatternSum::default();
        for (t, &v) in &self.terms {
            out.insert(t[1..].to_vec(), v);
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<Subscript>, i64)> {
        self.terms.iter().map(|(t, &v)| (t, v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of absolute multiplicities.
    pub fn mass(&self) -> i64 {
        self.terms.values().map(|v| v.abs()).sum()
    }

    /// `sum_t c_t prod_j x_{t_j}^{l_j - 1}`.
    pub fn coefficient_polynomial(&self, l: &IndexWord) -> MultiPoly {
        let mut cache: HashMap<(Subscript, u32), MultiPoly> = HashMap::new();
        let mut out = MultiPoly::zero();
        for (t, &v) in &self.terms {
            assert_eq!(t.len(), l.depth(), "tuple length must match the index depth");
            let mut m = MultiPoly::constant(Rational::from(v));
            for (s, &lj) in t.iter().zip(l.parts()) {
                let f = cache
                    .entry((*s, lj - 1))
                    .or_insert_with(|| subset_power(*s, lj - 1));
                m = &m * f;
            }
            out = out + m;
        }
        out
    }

    /// Replaces every `x_j` by `point[j-1]` and collects the resulting value
    /// tuples `(x_{A1}, ..., x_{A4})`.
    pub fn value_tuples(&self, point: &[i64]) -> BTreeMap<Vec<i64>, i64> {
        let mut out: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
        for (t, &v) in &self.terms {
            let vals: Vec<i64> = t
                .iter()
                .map(|s| s.members().iter().map(|&j| point[j - 1]).sum())
                .collect();
            *out.entry(vals).or_insert(0) += v;
        }
        out.retain(|_, v| *v != 0);
        out
    }
}

pub fn sub(js: &[usize]) -> Subscript {
    Subscript::new(js).expect("valid subscript")
}

pub fn tuple(parts: [&str; 4]) -> Vec<Subscript> {
    parts.iter().map(|p| p.parse().expect("subscript literal")).collect()
}

/// Transposition `(a b)` in S4.
fn transposition(a: usize, b: usize) -> Perm {
    let mut img = [1, 2, 3, 4];
    img.swap(a - 1, b - 1);
    Perm::from_images(&img).expect("transposition")
}

pub(crate) fn s4_block() -> ArgPatternSum {
    ArgPatternSum::single(tuple(["1234", "234", "34", "4"])).sum_over(&s4())
}

pub(crate) fn c_c34_block() -> ArgPatternSum {
    let mut inner = ArgPatternSum::default();
    for rho in group(&["(234)"]).iter() {
        let t = tuple(["134", "234", "34", "4"]);
        let mut u = vec![t[0]];
        u.extend(t[1..].iter().map(|s| s.act(rho)));
        inner.insert(u, 1);
    }
    for rho in group(&["(24)"]).iter() {
        let (r2, r4) = (rho.apply(2), rho.apply(4));
        inner.insert(vec![sub(&[3, 1, 4]), sub(&[1, 4]), sub(&[r2, r4]), sub(&[r4])], 1);
    }
    inner.insert(tuple(["341", "41", "1", "2"]), 1);
    inner.sum_over(&c().union(&c_coset("(34)")))
}

/// Inner sum over `nu in Cb`, `rho in <(nu(2) 4)>` of
/// `(x_{1 nu(3)}, x_{nu(3) 2}, x_{rho nu(2) rho(4)}, x_{rho(4)})`; `nu` is
/// chosen first and the transposition depends on it.
pub fn nu_rho_bracket() -> ArgPatternSum {
    let mut out = ArgPatternSum::default();
    for nu in cb().iter() {
        let (n2, n3) = (nu.apply(2), nu.apply(3));
        for rho in [Perm::identity(4), transposition(n2, 4)] {
            let (rn2, r4) = (rho.apply(n2), rho.apply(4));
            out.insert(vec![sub(&[1, n3]), sub(&[n3, 2]), sub(&[rn2, r4]), sub(&[r4])], 1);
        }
    }
    out
}

/// `sum_{nu in Cb} (x_{nu(1) 3}, x_{2 nu(3)}, x_{nu(3)}, x_{nu(4)})`.
pub fn nu_bracket() -> ArgPatternSum {
    let mut out = ArgPatternSum::default();
    for nu in cb().iter() {
        let (n1, n3, n4) = (nu.apply(1), nu.apply(3), nu.apply(4));
        out.insert(vec![sub(&[n1, 3]), sub(&[2, n3]), sub(&[n3]), sub(&[n4])], 1);
    }
    out
}

/// The two rho-sums they replace.
pub fn split_rho_bracket() -> ArgPatternSum {
    let mut out = ArgPatternSum::default();
    for rho in group(&["(24)"]).iter() {
        let (r2, r4) = (rho.apply(2), rho.apply(4));
        out.insert(vec![sub(&[1, 3]), sub(&[3, 2]), sub(&[r2, r4]), sub(&[r4])], 1);
    }
    for rho in group(&["(34)"]).iter() {
        let (r3, r4) = (rho.apply(3), rho.apply(4));
        out.insert(vec![sub(&[1, 4]), sub(&[2, 4]), sub(&[r3, r4]), sub(&[r4])], 1);
    }
    out
}

pub fn split_pair_bracket() -> ArgPatternSum {
    let mut out = ArgPatternSum::single(tuple(["13", "23", "3", "4"]));
    out.insert(tuple(["14", "42", "2", "3"]), 1);
    out
}

fn c_tail_bracket() -> ArgPatternSum {
    let mut out = ArgPatternSum::single(tuple(["41", "1", "2", "3"]));
    out.insert(tuple(["1", "2", "3", "4"]), -1);
    out
}

/// Argument tuples (with signs) of the four-parameter sum formula: the
/// coefficient of `zeta(l)` is `sum_t c_t prod_j x_{t_j}^{l_j - 1}`.
pub fn theorem_patterns() -> ArgPatternSum {
    let mut total = s4_block();
    total.add(&c_c34_block(), -1);
    let mut inner = nu_rho_bracket();
    inner.add(&nu_bracket(), 1);
    inner.add(&c_tail_bracket(), 1);
    total.add(&inner.sum_over(&c()), 1);
    total
}

/// The same identity in the form it takes for regularized values, before
/// the cyclic terms are merged.
pub fn starred_patterns() -> ArgPatternSum {
    let mut total = s4_block();
    total.add(&c_c34_block(), -1);
    let mut inner = split_rho_bracket();
    inner.add(&split_pair_bracket(), 1);
    inner.add(&c_tail_bracket(), 1);
    total.add(&inner.sum_over(&c()), 1);
    total
}

/// Coefficient polynomial of `zeta(l)` in the four-parameter sum formula.
pub fn theorem1_coefficient(l: &IndexWord) -> Result<MultiPoly> {
    check_index(l)?;
    Ok(theorem_patterns().coefficient_polynomial(l))
}

fn check_index(l: &IndexWord) -> Result<()> {
    if l.depth() != 4 {
        return Err(Error::Depth(l.clone()));
    }
    if !l.is_admissible() {
        return Err(Error::NotAdmissible(l.clone()));
    }
    Ok(())
}

/// Polynomial multiplying `zeta(l)` on the right-hand side: every monomial of
/// degree `weight - 4`.
pub fn rhs_multiplier(weight: u32) -> MultiPoly {
    complete_homogeneous(weight - 4)
}

/// Coefficient polynomials of every admissible depth-4 index of the weight.
pub fn assembled_lhs(weight: u32, patterns: &ArgPatternSum) -> Result<BTreeMap<IndexWord, MultiPoly>> {
    let words = indexword::compositions(weight, 4, true)
        .map_err(|e| Error::InvalidArguments(e.to_string()))?;
    Ok(words
        .into_iter()
        .map(|w| {
            let p = patterns.coefficient_polynomial(&w);
            (w, p)
        })
        .collect())
}

/// Value tuples with a nonzero leading entry obtained by substituting
/// `point` into the argument tuples. Tuples led by zero drop out because
/// the admissible sum carries `x^{l1 - 1}` with `l1 >= 2`.
pub fn substituted_combination(point: &[i64; 4]) -> BTreeMap<[i64; 4], i64> {
    theorem_patterns()
        .value_tuples(point)
        .into_iter()
        .filter(|(t, _)| t[0] != 0)
        .map(|(t, v)| ([t[0], t[1], t[2], t[3]], v))
        .collect()
}

/// Whether `sigma . coefficient` summed with its index stays put, i.e. the
/// whole left side is fixed by the action of `sigma` on the variables.
pub fn lhs_is_fixed_by(weight: u32, sigma: &Perm) -> Result<bool> {
    let lhs = assembled_lhs(weight, &theorem_patterns())?;
    Ok(lhs.values().all(|p| p.act(sigma) == *p))
}
