//! Polynomials in formal multiple zeta symbols, used for the cyclic sum of
//! quadruple zeta values and its comparison with the symmetric sums.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use indexword::IndexWord;
use permgroup::named::{c, cb, cb_coset, group, s4};
use permgroup::{Check, Perm, PermSet};
use rug::Rational;

use crate::harmonic::cyclic_param_blocks;
use crate::symbol::{Exponent, SymbolSum};

/// A product of zeta symbols, kept sorted.
pub type ZetaMonomial<E> = Vec<Vec<E>>;

/// Rational combination of products of `zeta(word)` symbols.
#[derive(Clone, PartialEq, Eq)]
pub struct ZetaPoly<E: Exponent> {
    terms: BTreeMap<ZetaMonomial<E>, Rational>,
}

impl<E: Exponent> Default for ZetaPoly<E> {
    fn default() -> Self {
        ZetaPoly {
            terms: BTreeMap::new(),
        }
    }
}

impl<E: Exponent> ZetaPoly<E> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(k: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(Vec::new(), Rational::from(k));
        p
    }

    pub fn zeta(word: Vec<E>) -> Self {
        let mut p = Self::zero();
        p.add_term(vec![word], Rational::from(1));
        p
    }

    pub fn add_term(&mut self, mut mono: ZetaMonomial<E>, c: Rational) {
        if c == 0 {
            return;
        }
        mono.sort();
        match self.terms.get_mut(&mono) {
            Some(v) => {
                *v += c;
                if *v == 0 {
                    self.terms.remove(&mono);
                }
            }
            None => {
                self.terms.insert(mono, c);
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ZetaMonomial<E>, &Rational)> {
        self.terms.iter()
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

    pub fn scale_int(&self, k: i64) -> Self {
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), Rational::from(v * k));
        }
        out
    }

    /// Applies `rule` to each zeta factor until no factor is rewritten.
    /// `rule` returns `None` for factors already in normal form.
    pub fn normalize(&self, rule: &impl Fn(&[E]) -> Option<ZetaPoly<E>>) -> Self {
        let mut cur = self.clone();
        loop {
            let mut changed = false;
            let mut next = Self::zero();
            for (mono, v) in &cur.terms {
                let hit = mono.iter().enumerate().find_map(|(i, w)| rule(w).map(|r| (i, r)));
                match hit {
                    Some((i, rewritten)) => {
                        changed = true;
                        let mut rest = mono.clone();
                        rest.remove(i);
                        let mut cofactor = Self::zero();
                        cofactor.add_term(rest, v.clone());
                        next = next + &cofactor * &rewritten;
                    }
                    None => next.add_term(mono.clone(), v.clone()),
                }
            }
            cur = next;
            if !changed {
                return cur;
            }
        }
    }
}

impl ZetaPoly<SymbolSum> {
    pub fn act(&self, sigma: &Perm) -> Self {
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            let mono = m
                .iter()
                .map(|w| w.iter().map(|s| s.act(sigma)).collect())
                .collect();
            out.add_term(mono, v.clone());
        }
        out
    }

    pub fn sum_over(&self, set: &PermSet) -> Self {
        let mut out = Self::zero();
        for sigma in set.iter() {
            out = out + self.act(sigma);
        }
        out
    }

    pub fn instantiate(&self, l: &IndexWord) -> ZetaPoly<u32> {
        let mut out = ZetaPoly::zero();
        for (m, v) in &self.terms {
            let mono = m
                .iter()
                .map(|w| w.iter().map(|s| s.instantiate(l)).collect())
                .collect();
            out.add_term(mono, v.clone());
        }
        out
    }
}

impl<E: Exponent> Add for ZetaPoly<E> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (m, v) in rhs.terms {
            self.add_term(m, v);
        }
        self
    }
}

impl<E: Exponent> Sub for ZetaPoly<E> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<E: Exponent> Neg for ZetaPoly<E> {
    type Output = Self;

    fn neg(self) -> Self {
        ZetaPoly {
            terms: self.terms.into_iter().map(|(m, v)| (m, -v)).collect(),
        }
    }
}

impl<E: Exponent> Mul for &ZetaPoly<E> {
    type Output = ZetaPoly<E>;

    fn mul(self, rhs: &ZetaPoly<E>) -> ZetaPoly<E> {
        let mut out = ZetaPoly::zero();
        for (a, va) in &self.terms {
            for (b, vb) in &rhs.terms {
                let mut m = a.clone();
                m.extend(b.iter().cloned());
                out.add_term(m, Rational::from(va * vb));
            }
        }
        out
    }
}

impl<E: Exponent> fmt::Display for ZetaPoly<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, v)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({v})")?;
            for w in m {
                write!(f, "*Z(")?;
                for (j, e) in w.iter().enumerate() {
                    if j > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{e}")?;
                }
                write!(f, ")")?;
            }
        }
        Ok(())
    }
}

impl<E: Exponent> fmt::Debug for ZetaPoly<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

type Z = ZetaPoly<SymbolSum>;

fn s(x: &str) -> SymbolSum {
    x.parse().expect("symbol literal")
}

fn z(word: &[&str]) -> Z {
    Z::zeta(word.iter().map(|x| s(x)).collect())
}

fn prod(factors: &[Z]) -> Z {
    factors
        .iter()
        .fold(Z::constant(1), |acc, f| &acc * f)
}

/// The per-index cyclic identity at `z = 1`, written as `lhs - rhs`, read off
/// the same block description as the parameterized identity: each factor
/// `Li(l_{j..}; <z>^n)` becomes `zeta(l_{j..})`.
pub fn cyclic_identity_at_one() -> Z {
    let mut out = Z::zero();
    for block in cyclic_param_blocks() {
        let mono = prod(
            &block
                .factors
                .iter()
                .map(|f| Z::zeta(f.vars.iter().map(|&j| SymbolSum::single(j)).collect()))
                .collect::<Vec<_>>(),
        );
        out = out + mono.sum_over(&block.perms).scale_int(block.sign as i64);
    }
    out - z(&["1234"])
}

/// The cyclic sum relation as printed, written as `lhs - rhs`.
pub fn cyclic_sum_relation() -> Z {
    let lhs = z(&["1", "2", "3", "4"]).sum_over(&c());
    let rhs = prod(&[z(&["1"]), z(&["2"]), z(&["3"]), z(&["4"])])
        + prod(&[z(&["1", "2"]), z(&["3", "4"])]).sum_over(&cb())
        + (prod(&[z(&["1", "2", "3"]), z(&["4"])]) - prod(&[z(&["1", "2"]), z(&["3"]), z(&["4"])]))
            .sum_over(&c())
        - z(&["1234"]);
    lhs - rhs
}

/// Symmetric sum of depth two, `lhs - rhs`.
pub fn symmetric_sum_depth2() -> Z {
    z(&["1", "2"]).sum_over(&group(&["(12)"])) - (prod(&[z(&["1"]), z(&["2"])]) - z(&["12"]))
}

/// Symmetric sum of depth three, `lhs - rhs`.
pub fn symmetric_sum_depth3() -> Z {
    let s3 = group(&["(12)", "(123)"]);
    z(&["1", "2", "3"]).sum_over(&s3)
        - (prod(&[z(&["1"]), z(&["2"]), z(&["3"])])
            - prod(&[z(&["12"]), z(&["3"])]).sum_over(&group(&["(123)"]))
            + z(&["123"]).scale_int(2))
}

/// Symmetric sum of depth four, `lhs - rhs`.
pub fn symmetric_sum_depth4() -> Z {
    let lhs = z(&["1", "2", "3", "4"]).sum_over(&s4());
    let rhs = prod(&[z(&["1"]), z(&["2"]), z(&["3"]), z(&["4"])])
        - prod(&[z(&["12"]), z(&["3"]), z(&["4"])]).sum_over(&c().union(&cb_coset("(14)")))
        + prod(&[z(&["12"]), z(&["34"])]).sum_over(&group(&["(123)"]))
        + prod(&[z(&["123"]), z(&["4"])]).sum_over(&c()).scale_int(2)
        - z(&["1234"]).scale_int(6);
    lhs - rhs
}

/// Rewrites a depth-2 or depth-3 zeta with pairwise distinct entries in
/// strictly decreasing order through the symmetric-sum relations; all
/// other factors are normal.
pub fn symmetric_sum_rule(w: &[SymbolSum]) -> Option<Z> {
    match w {
        [a, b] if a > b => {
            let zz = |x: Vec<SymbolSum>| Z::zeta(x);
            Some(
                &zz(vec![*a]) * &zz(vec![*b]) - zz(vec![a.merge(b)]) - zz(vec![*b, *a]),
            )
        }
        [a, b, cc] if a > b && b > cc => {
            let zz = |x: Vec<SymbolSum>| Z::zeta(x);
            let mut r = prod(&[zz(vec![*a]), zz(vec![*b]), zz(vec![*cc])])
                - &zz(vec![a.merge(b)]) * &zz(vec![*cc])
                - &zz(vec![b.merge(cc)]) * &zz(vec![*a])
                - &zz(vec![cc.merge(a)]) * &zz(vec![*b])
                + zz(vec![a.merge(b).merge(cc)]).scale_int(2);
            for o in [[a, cc, b], [b, a, cc], [b, cc, a], [cc, a, b], [cc, b, a]] {
                r = r - zz(o.iter().map(|x| **x).collect());
            }
            Some(r)
        }
        _ => None,
    }
}

/// The six permutations whose actions on the cyclic relation add up to the
/// depth-four symmetric sum.
pub fn six_transversal() -> PermSet {
    PermSet::from_cycles(&["e", "(12)", "(13)", "(14)", "(23)", "(34)"])
}

/// Exact checks: the cyclic relation is the z = 1 case of the per-index
/// identity, and six of its conjugates add up to the depth-four symmetric
/// sum modulo the depth-two and depth-three ones.
pub fn verify_cyclic_sum_relation() -> Vec<Check> {
    let mut out = Vec::new();
    let e18 = cyclic_identity_at_one();
    let e21 = cyclic_sum_relation();
    let d = e21.clone() + e18;
    out.push(Check::new(
        "remark21.from_cyclic_identity",
        d.is_zero(),
        if d.is_zero() { String::new() } else { format!("difference {d}") },
    ));

    let combined = e21.sum_over(&six_transversal()) - symmetric_sum_depth4();
    let reduced = combined.normalize(&symmetric_sum_rule);
    out.push(Check::new(
        "remark21.symmetric_sum_reduction",
        reduced.is_zero(),
        if reduced.is_zero() {
            format!("{} terms reduce to zero", combined.len())
        } else {
            format!("{} terms survive: {reduced}", reduced.len())
        },
    ));

    // sanity: the rewriting rules are the symmetric sums themselves
    for (name, rel) in [
        ("remark21.rule_depth2", symmetric_sum_depth2()),
        ("remark21.rule_depth3", symmetric_sum_depth3()),
    ] {
        let r = rel.normalize(&symmetric_sum_rule);
        out.push(Check::new(name, r.is_zero(), format!("{r}")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_relation_checks() {
        for c in verify_cyclic_sum_relation() {
            assert!(c.pass, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn six_cosets_cover_s4() {
        let mut all = permgroup::SignedMultiset::default();
        for sigma in six_transversal().iter() {
            all = all + c().left_mul(sigma).to_multiset();
        }
        assert_eq!(all, s4().to_multiset());
    }

    #[test]
    fn instantiation_at_equal_parts() {
        let l = IndexWord::new(vec![2, 2, 2, 2]).unwrap();
        let lhs = z(&["1", "2", "3", "4"]).sum_over(&c()).instantiate(&l);
        assert_eq!(lhs.iter().next().unwrap().1, &Rational::from(4));
    }
}
