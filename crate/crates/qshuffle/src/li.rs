use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use indexword::{IndexWord, ZPattern};
use permgroup::{Perm, PermSet, SignedMultiset};
use rug::Rational;

use crate::symbol::{Exponent, SymbolSum};
use crate::Error;

/// One summation variable `m_j` of a multiple polylogarithm: its exponent
/// `l_j` and the power `d` of `z` it carries once
/// `z_1^{m_1-m_2} ... z_n^{m_n}` is rewritten as a product over the `m_j`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Letter<E> {
    pub exp: E,
    pub d: u32,
}

impl<E: Exponent> Letter<E> {
    /// Letter of two coinciding summation variables.
    pub fn merge(&self, other: &Letter<E>) -> Letter<E> {
        Letter {
            exp: self.exp.merge(&other.exp),
            d: self.d + other.d,
        }
    }
}

/// `Li(k_1, ..., k_n; z^{e_1}, ..., z^{e_n})`. The empty symbol is the unit.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LiSymbol<E> {
    letters: Vec<Letter<E>>,
}

impl<E: Exponent> LiSymbol<E> {
    pub fn new(word: Vec<E>, zpat: &ZPattern) -> Result<Self, Error> {
        if word.len() != zpat.len() {
            return Err(Error::Arity {
                word: word.len(),
                pattern: zpat.len(),
            });
        }
        let inc = zpat.increments();
        if inc.iter().any(|&d| d < 0) {
            return Err(Error::DecreasingPattern(zpat.to_string()));
        }
        Ok(LiSymbol {
            letters: word
                .into_iter()
                .zip(inc)
                .map(|(exp, d)| Letter { exp, d: d as u32 })
                .collect(),
        })
    }

    pub fn unit() -> Self {
        LiSymbol { letters: Vec::new() }
    }

    pub fn from_letters(letters: Vec<Letter<E>>) -> Self {
        LiSymbol { letters }
    }

    pub fn letters(&self) -> &[Letter<E>] {
        &self.letters
    }

    pub fn depth(&self) -> usize {
        self.letters.len()
    }

    pub fn word(&self) -> Vec<E> {
        self.letters.iter().map(|l| l.exp.clone()).collect()
    }

    /// Cumulative exponents `(e_1, ..., e_n)`.
    pub fn zexps(&self) -> Vec<u32> {
        self.letters
            .iter()
            .scan(0, |acc, l| {
                *acc += l.d;
                Some(*acc)
            })
            .collect()
    }

    pub fn zpat(&self) -> Option<ZPattern> {
        ZPattern::new(self.zexps()).ok()
    }
}

impl LiSymbol<SymbolSum> {
    pub fn act(&self, sigma: &Perm) -> Self {
        LiSymbol {
            letters: self
                .letters
                .iter()
                .map(|l| Letter {
                    exp: l.exp.act(sigma),
                    d: l.d,
                })
                .collect(),
        }
    }

    pub fn instantiate(&self, l: &IndexWord) -> LiSymbol<u32> {
        LiSymbol {
            letters: self
                .letters
                .iter()
                .map(|x| Letter {
                    exp: x.exp.instantiate(l),
                    d: x.d,
                })
                .collect(),
        }
    }
}

impl LiSymbol<u32> {
    pub fn index(&self) -> Option<IndexWord> {
        IndexWord::new(self.word()).ok()
    }

    pub fn weight(&self) -> u32 {
        self.letters.iter().map(|l| l.exp).sum()
    }
}

impl<E: Exponent> Ord for LiSymbol<E> {
    /// By depth, then word, then z-pattern.
    fn cmp(&self, other: &Self) -> Ordering {
        self.depth()
            .cmp(&other.depth())
            .then_with(|| self.word().cmp(&other.word()))
            .then_with(|| self.zexps().cmp(&other.zexps()))
    }
}

impl<E: Exponent> PartialOrd for LiSymbol<E> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<E: Exponent> fmt::Display for LiSymbol<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        write!(f, "Li(")?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", l.exp)?;
        }
        write!(f, ";")?;
        for (i, e) in self.zexps().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            match e {
                1 => write!(f, "z")?,
                _ => write!(f, "z^{e}")?,
            }
        }
        write!(f, ")")
    }
}

impl<E: Exponent> fmt::Debug for LiSymbol<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Rational linear combination of polylog symbols.
#[derive(Clone, PartialEq, Eq)]
pub struct FormalLiSum<E: Exponent> {
    terms: BTreeMap<LiSymbol<E>, Rational>,
}

impl<E: Exponent> Default for FormalLiSum<E> {
    fn default() -> Self {
        FormalLiSum {
            terms: BTreeMap::new(),
        }
    }
}

impl<E: Exponent> FormalLiSum<E> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::single(LiSymbol::unit())
    }

    pub fn single(sym: LiSymbol<E>) -> Self {
        let mut s = Self::zero();
        s.add_term(sym, Rational::from(1));
        s
    }

    pub fn add_term(&mut self, sym: LiSymbol<E>, c: Rational) {
        if c == 0 {
            return;
        }
        match self.terms.get_mut(&sym) {
            Some(v) => {
                *v += c;
                if *v == 0 {
                    self.terms.remove(&sym);
                }
            }
            None => {
                self.terms.insert(sym, c);
            }
        }
    }

    pub fn coeff(&self, sym: &LiSymbol<E>) -> Rational {
        self.terms.get(sym).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&LiSymbol<E>, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (s, v) in &self.terms {
            out.add_term(s.clone(), Rational::from(v * c));
        }
        out
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&Rational::from(k))
    }

    /// Bilinear extension of the quasi-shuffle product.
    pub fn product(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let c = Rational::from(ca * cb);
                for (s, k) in stuffle(a.letters(), b.letters()).terms {
                    out.add_term(s, Rational::from(&c * &k));
                }
            }
        }
        out
    }

    /// Keeps the symbols accepted by `keep`.
    pub fn filter(&self, keep: impl Fn(&LiSymbol<E>) -> bool) -> Self {
        FormalLiSum {
            terms: self
                .terms
                .iter()
                .filter(|(s, _)| keep(s))
                .map(|(s, v)| (s.clone(), v.clone()))
                .collect(),
        }
    }
}

impl FormalLiSum<SymbolSum> {
    pub fn act(&self, sigma: &Perm) -> Self {
        let mut out = Self::zero();
        for (s, v) in &self.terms {
            out.add_term(s.act(sigma), v.clone());
        }
        out
    }

    /// `sum_{sigma in set} sigma . self`.
    pub fn sum_over(&self, set: &PermSet) -> Self {
        let mut out = Self::zero();
        for sigma in set.iter() {
            out = out + self.act(sigma);
        }
        out
    }

    /// `sum_sigma k_sigma sigma . self` over a signed multiset.
    pub fn sum_over_multiset(&self, set: &SignedMultiset) -> Self {
        let mut out = Self::zero();
        for (sigma, k) in set.iter() {
            out = out + self.act(sigma).scale_int(k);
        }
        out
    }

    pub fn instantiate(&self, l: &IndexWord) -> FormalLiSum<u32> {
        let mut out = FormalLiSum::zero();
        for (s, v) in &self.terms {
            out.add_term(s.instantiate(l), v.clone());
        }
        out
    }
}

/// Quasi-shuffle of two letter sequences, every term with coefficient one:
/// all interleavings plus all ways of merging letters of `a` with letters
/// of `b` in order.
pub fn stuffle<E: Exponent>(a: &[Letter<E>], b: &[Letter<E>]) -> FormalLiSum<E> {
    let mut out = FormalLiSum::zero();
    for w in stuffle_words(a, b) {
        out.add_term(LiSymbol::from_letters(w), Rational::from(1));
    }
    out
}

fn stuffle_words<E: Exponent>(a: &[Letter<E>], b: &[Letter<E>]) -> Vec<Vec<Letter<E>>> {
    if a.is_empty() {
        return vec![b.to_vec()];
    }
    if b.is_empty() {
        return vec![a.to_vec()];
    }
    let prepend = |head: Letter<E>, tails: Vec<Vec<Letter<E>>>| {
        tails.into_iter().map(move |mut t| {
            t.insert(0, head.clone());
            t
        })
    };
    let mut out: Vec<Vec<Letter<E>>> = prepend(a[0].clone(), stuffle_words(&a[1..], b)).collect();
    out.extend(prepend(b[0].clone(), stuffle_words(a, &b[1..])));
    out.extend(prepend(a[0].merge(&b[0]), stuffle_words(&a[1..], &b[1..])));
    out
}

impl<E: Exponent> Add for FormalLiSum<E> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (s, v) in rhs.terms {
            self.add_term(s, v);
        }
        self
    }
}

impl<E: Exponent> Sub for FormalLiSum<E> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<E: Exponent> Neg for FormalLiSum<E> {
    type Output = Self;

    fn neg(self) -> Self {
        FormalLiSum {
            terms: self.terms.into_iter().map(|(s, v)| (s, -v)).collect(),
        }
    }
}

impl<E: Exponent> fmt::Display for FormalLiSum<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (s, v)) in self.terms.iter().enumerate() {
            let neg = *v < 0;
            let abs = Rational::from(v.abs_ref());
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if abs != 1 {
                write!(f, "{abs}*")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl<E: Exponent> fmt::Debug for FormalLiSum<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `Li(word; z^{e_1}, ...)` over formal symbols written as digit strings,
/// e.g. `li(&["12", "3", "4"], &[2, 3, 4])`.
pub fn li(word: &[&str], zexps: &[u32]) -> FormalLiSum<SymbolSum> {
    let w = word
        .iter()
        .map(|s| s.parse().expect("symbol literal"))
        .collect();
    let z = ZPattern::new(zexps.to_vec()).expect("z-pattern literal");
    FormalLiSum::single(LiSymbol::new(w, &z).expect("matching arity"))
}

/// Concrete-exponent symbol.
pub fn li_int(word: &[u32], zexps: &[u32]) -> Result<FormalLiSum<u32>, Error> {
    let z = ZPattern::new(zexps.to_vec()).map_err(|e| Error::InvalidArguments(e.to_string()))?;
    Ok(FormalLiSum::single(LiSymbol::new(word.to_vec(), &z)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_singletons() {
        // Li(k1; w1) Li(k2; w2) with w1 = z, w2 = z^2
        let a = li_int(&[3], &[1]).unwrap();
        let b = li_int(&[5], &[2]).unwrap();
        let want = li_int(&[3, 5], &[1, 3]).unwrap()
            + li_int(&[5, 3], &[2, 3]).unwrap()
            + li_int(&[8], &[3]).unwrap();
        assert_eq!(a.product(&b), want);
    }

    #[test]
    fn unit_law() {
        let b = li(&["1", "2"], &[1, 2]);
        assert_eq!(FormalLiSum::one().product(&b), b);
        assert_eq!(b.product(&FormalLiSum::one()), b);
    }

    #[test]
    fn triple_times_single_has_seven_terms() {
        let p = li(&["1", "2", "3"], &[1, 2, 3]).product(&li(&["4"], &[1]));
        assert_eq!(p.len(), 7);
        assert_eq!(p.coeff(&LiSymbol::new(
            vec!["4".parse().unwrap(), "1".parse().unwrap(), "2".parse().unwrap(), "3".parse().unwrap()],
            &ZPattern::new(vec![1, 2, 3, 4]).unwrap()
        ).unwrap()), 1);
    }

    #[test]
    fn ordering_is_depth_first() {
        let a = li_int(&[9], &[1]).unwrap();
        let b = li_int(&[1, 1], &[1, 2]).unwrap();
        let (sa, _) = a.iter().next().unwrap();
        let (sb, _) = b.iter().next().unwrap();
        assert!(sa < sb);
    }
}
