use std::collections::{BTreeMap, HashMap};
use std::fmt;

use permgroup::Subscript;
use polyring::{MultiPoly, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, Result};

/// `numer(y) / prod_S m_S^{e_S}`; the numerator is a polynomial in `y1..y4`
/// (stored in the variables `x1..x4` of [`MultiPoly`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FracTerm {
    pub numer: MultiPoly,
    pub denom: BTreeMap<Subscript, u32>,
}

impl FracTerm {
    /// `c / prod_j m_{S_j}`, repeated subscripts raising the power.
    pub fn new(c: i64, denoms: &[Subscript]) -> Self {
        let mut denom = BTreeMap::new();
        for s in denoms {
            *denom.entry(*s).or_insert(0) += 1;
        }
        FracTerm {
            numer: MultiPoly::constant(c),
            denom,
        }
    }

    pub fn with_numer(numer: MultiPoly, denom: BTreeMap<Subscript, u32>) -> Self {
        FracTerm { numer, denom }
    }

    pub fn degree(&self) -> u32 {
        self.denom.values().sum()
    }
}

/// A sum of fraction terms, kept canonical: one numerator per denominator.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FracSum {
    terms: BTreeMap<Vec<(Subscript, u32)>, MultiPoly>,
}

impl FracSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn push(&mut self, t: FracTerm) {
        if t.numer.is_zero() {
            return;
        }
        let key: Vec<(Subscript, u32)> = t.denom.into_iter().filter(|(_, e)| *e > 0).collect();
        let e = self.terms.entry(key.clone()).or_default();
        *e = e.clone() + t.numer;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn from_terms(ts: impl IntoIterator<Item = FracTerm>) -> Self {
        let mut s = Self::zero();
        for t in ts {
            s.push(t);
        }
        s
    }

    pub fn add(&mut self, other: &FracSum) {
        for (d, n) in &other.terms {
            self.push(FracTerm::with_numer(n.clone(), d.iter().copied().collect()));
        }
    }

    pub fn negated(&self) -> FracSum {
        FracSum {
            terms: self.terms.iter().map(|(d, n)| (d.clone(), -n.clone())).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<(Subscript, u32)>, &MultiPoly)> {
        self.terms.iter()
    }

    /// Exact value at `m`, `y`. `None` at a pole.
    pub fn eval(&self, m: &[Rational; 4], y: &[Rational; 4]) -> Option<Rational> {
        let mut total = Rational::new();
        for (d, n) in &self.terms {
            let mut den = Rational::from(1);
            for (s, e) in d {
                let v: Rational = s.members().iter().map(|&j| m[j - 1].clone()).sum();
                if v == 0 {
                    return None;
                }
                for _ in 0..*e {
                    den *= &v;
                }
            }
            total += n.substitute(y) / den;
        }
        Some(total)
    }
}

impl fmt::Display for FracSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, n)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({n})/(")?;
            for (j, (s, e)) in d.iter().enumerate() {
                if j > 0 {
                    write!(f, "*")?;
                }
                write!(f, "m{s}")?;
                if *e > 1 {
                    write!(f, "^{e}")?;
                }
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Coefficient of `t^k` in `prod_j 1/(m_{S_j} - t y_{S_j})`:
/// `sum_{k_1+...+k_n=k} prod_j y_{S_j}^{k_j} / m_{S_j}^{k_j+1}`.
pub fn shift_expand(denoms: &[Subscript], k: u32) -> FracSum {
    let mut out = FracSum::zero();
    let mut ks = vec![0u32; denoms.len()];
    distribute(k, 0, &mut ks, &mut |ks| {
        let mut numer = MultiPoly::one();
        let mut denom = BTreeMap::new();
        for (s, &kj) in denoms.iter().zip(ks) {
            numer = &numer * &polyring::subset_power(*s, kj);
            *denom.entry(*s).or_insert(0) += kj + 1;
        }
        out.push(FracTerm::with_numer(numer, denom));
    });
    out
}

fn distribute(rest: u32, at: usize, ks: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if at + 1 == ks.len() {
        ks[at] = rest;
        f(ks);
        return;
    }
    for k in 0..=rest {
        ks[at] = k;
        distribute(rest - k, at + 1, ks, f);
    }
}

/// Outcome of a rational-function comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub equal: bool,
    /// A point `(m, y)` where the difference is nonzero, when one was found.
    pub witness: Option<([i64; 4], [i64; 4])>,
    /// Random points tried before the exact comparison.
    pub points: usize,
}

/// Decides `a == b` as rational functions of `m1..m4, y1..y4`.
///
/// Random integer points from `[1, 10^6]` act as a fast screen that can
/// only prove inequality; equality is then decided exactly by clearing
/// denominators separately for every `y`-monomial. Positive `m` never hit a
/// pole because every denominator is a sum of the `m_j`.
pub fn equal_as_rational_functions(a: &FracSum, b: &FracSum, seed: u64) -> Result<Verdict> {
    const POINTS: usize = 4;
    let mut diff = a.clone();
    diff.add(&b.negated());
    if let Some(w) = nonzero_point(&diff, seed, POINTS)? {
        return Ok(Verdict {
            equal: false,
            witness: Some(w),
            points: POINTS,
        });
    }
    Ok(Verdict {
        equal: cleared_numerators_vanish(&diff)?,
        witness: None,
        points: POINTS,
    })
}

/// Evaluates `a - b` at `points` seeded random points; returns the first
/// point where it does not vanish.
pub fn prescreen(
    a: &FracSum,
    b: &FracSum,
    seed: u64,
    points: usize,
) -> Result<Option<([i64; 4], [i64; 4])>> {
    let mut diff = a.clone();
    diff.add(&b.negated());
    nonzero_point(&diff, seed, points)
}

fn nonzero_point(diff: &FracSum, seed: u64, points: usize) -> Result<Option<([i64; 4], [i64; 4])>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..points {
        let mi: [i64; 4] = std::array::from_fn(|_| rng.gen_range(1..=1_000_000));
        let yi: [i64; 4] = std::array::from_fn(|_| rng.gen_range(1..=1_000_000));
        let v = diff
            .eval(&mi.map(Rational::from), &yi.map(Rational::from))
            .ok_or(Error::Pole)?;
        if v != 0 {
            return Ok(Some((mi, yi)));
        }
    }
    Ok(None)
}

type Exps = [u32; 4];

/// Sparse integer polynomial in `m1..m4`.
#[derive(Default)]
struct IntPoly(HashMap<[u16; 4], i128>);

impl IntPoly {
    fn constant(c: i128) -> Self {
        let mut p = IntPoly::default();
        if c != 0 {
            p.0.insert([0; 4], c);
        }
        p
    }

    fn mul_linear(&self, s: Subscript) -> Result<IntPoly> {
        let mut out: HashMap<[u16; 4], i128> = HashMap::with_capacity(self.0.len() * 2);
        for (e, &c) in &self.0 {
            for j in s.members() {
                let mut f = *e;
                f[j - 1] += 1;
                let slot = out.entry(f).or_insert(0);
                *slot = slot.checked_add(c).ok_or(Error::Overflow)?;
            }
        }
        Ok(IntPoly(out))
    }

    fn add_assign(&mut self, other: &IntPoly) -> Result<()> {
        for (e, &c) in &other.0 {
            let slot = self.0.entry(*e).or_insert(0);
            *slot = slot.checked_add(c).ok_or(Error::Overflow)?;
        }
        self.0.retain(|_, c| *c != 0);
        Ok(())
    }
}

fn cleared_numerators_vanish(diff: &FracSum) -> Result<bool> {
    // y-monomial -> list of (integer coefficient, denominator)
    let mut groups: BTreeMap<Exps, Vec<(Rational, &Vec<(Subscript, u32)>)>> = BTreeMap::new();
    for (d, n) in diff.iter() {
        for (e, c) in n.terms() {
            groups.entry(*e).or_default().push((c.clone(), d));
        }
    }
    for terms in groups.values() {
        let mut lcm = rug::Integer::from(1);
        for (c, _) in terms {
            lcm.lcm_mut(c.denom());
        }
        let mut top: BTreeMap<Subscript, u32> = BTreeMap::new();
        for (_, d) in terms {
            for (s, e) in d.iter() {
                let t = top.entry(*s).or_insert(0);
                *t = (*t).max(*e);
            }
        }
        let mut total = IntPoly::default();
        for (c, d) in terms {
            let scaled = Rational::from(c * &lcm);
            let k = scaled.numer().to_i128().ok_or(Error::Overflow)?;
            let own: BTreeMap<Subscript, u32> = d.iter().copied().collect();
            let mut p = IntPoly::constant(k);
            for (s, &e) in &top {
                for _ in 0..e - own.get(s).copied().unwrap_or(0) {
                    p = p.mul_linear(*s)?;
                }
            }
            total.add_assign(&p)?;
        }
        if !total.0.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}
