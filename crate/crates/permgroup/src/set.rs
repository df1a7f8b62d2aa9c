use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::Perm;

/// A finite set of permutations of one degree, optionally labelled.
/// Equality ignores the label.
#[derive(Clone)]
pub struct PermSet {
    members: BTreeSet<Perm>,
    label: Option<String>,
}

impl PermSet {
    pub fn new(members: impl IntoIterator<Item = Perm>) -> Self {
        PermSet {
            members: members.into_iter().collect(),
            label: None,
        }
    }

    /// Degree-4 set from cycle strings; panics on malformed literals.
    pub fn from_cycles(cycles: &[&str]) -> Self {
        PermSet::new(cycles.iter().map(|c| c.parse::<Perm>().expect("cycle literal")))
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.members.contains(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Perm> {
        self.members.iter()
    }

    pub fn union(&self, other: &PermSet) -> PermSet {
        PermSet::new(self.members.union(&other.members).cloned())
    }

    pub fn difference(&self, other: &PermSet) -> PermSet {
        PermSet::new(self.members.difference(&other.members).cloned())
    }

    /// `{h ∘ sigma : h ∈ self}`.
    pub fn right_mul(&self, sigma: &Perm) -> PermSet {
        PermSet::new(self.members.iter().map(|h| h * sigma))
    }

    /// `{sigma ∘ h : h ∈ self}`.
    pub fn left_mul(&self, sigma: &Perm) -> PermSet {
        PermSet::new(self.members.iter().map(|h| sigma * h))
    }

    /// The multiset `{a ∘ b : a ∈ self, b ∈ other}`.
    pub fn product(&self, other: &PermSet) -> SignedMultiset {
        let mut out = SignedMultiset::default();
        for a in &self.members {
            for b in &other.members {
                out.insert(a * b, 1);
            }
        }
        out
    }

    pub fn to_multiset(&self) -> SignedMultiset {
        let mut out = SignedMultiset::default();
        for p in &self.members {
            out.insert(p.clone(), 1);
        }
        out
    }

    pub fn is_closed(&self) -> bool {
        self.members
            .iter()
            .all(|a| self.members.iter().all(|b| self.members.contains(&(a * b))))
    }
}

impl PartialEq for PermSet {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for PermSet {}

impl fmt::Display for PermSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = &self.label {
            write!(f, "{l} = ")?;
        }
        write!(f, "{{")?;
        for (i, p) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for PermSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Closure of `generators` under composition. Always contains the identity.
pub fn generate(generators: &[Perm], degree: usize) -> PermSet {
    let mut members: BTreeSet<Perm> = BTreeSet::new();
    let id = Perm::identity(degree);
    members.insert(id.clone());
    let mut frontier = vec![id];
    while let Some(p) = frontier.pop() {
        for g in generators {
            let q = g * &p;
            if members.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    PermSet::new(members)
}

/// `H sigma = {h ∘ sigma : h ∈ H}`.
pub fn right_coset(h: &PermSet, sigma: &Perm) -> PermSet {
    h.right_mul(sigma)
}

/// Integer-weighted multiset of permutations.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct SignedMultiset {
    counts: BTreeMap<Perm, i64>,
}

impl SignedMultiset {
    pub fn insert(&mut self, p: Perm, k: i64) {
        if k == 0 {
            return;
        }
        let e = self.counts.entry(p.clone()).or_insert(0);
        *e += k;
        if *e == 0 {
            self.counts.remove(&p);
        }
    }

    pub fn scaled(&self, k: i64) -> SignedMultiset {
        let mut out = SignedMultiset::default();
        for (p, &v) in &self.counts {
            out.insert(p.clone(), v * k);
        }
        out
    }

    pub fn count(&self, p: &Perm) -> i64 {
        self.counts.get(p).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Perm, i64)> {
        self.counts.iter().map(|(p, &v)| (p, v))
    }

    pub fn is_zero(&self) -> bool {
        self.counts.is_empty()
    }

    /// Sum of all multiplicities.
    pub fn total(&self) -> i64 {
        self.counts.values().sum()
    }

    /// Images of the members in the left coset space `G/H`, each coset
    /// named by its smallest element.
    pub fn left_cosets(&self, h: &PermSet) -> BTreeMap<Perm, i64> {
        let mut out: BTreeMap<Perm, i64> = BTreeMap::new();
        for (p, v) in self.iter() {
            let key = h.iter().map(|x| p * x).min().expect("nonempty subgroup");
            *out.entry(key).or_insert(0) += v;
        }
        out.retain(|_, v| *v != 0);
        out
    }

    /// Equality of the coset images in `G/H`, counted with multiplicity.
    pub fn congruent_mod(&self, other: &SignedMultiset, h: &PermSet) -> bool {
        self.left_cosets(h) == other.left_cosets(h)
    }
}

impl From<&PermSet> for SignedMultiset {
    fn from(s: &PermSet) -> Self {
        s.to_multiset()
    }
}

impl Add for SignedMultiset {
    type Output = SignedMultiset;

    fn add(mut self, rhs: SignedMultiset) -> SignedMultiset {
        for (p, v) in rhs.counts {
            self.insert(p, v);
        }
        self
    }
}

impl Sub for SignedMultiset {
    type Output = SignedMultiset;

    fn sub(self, rhs: SignedMultiset) -> SignedMultiset {
        self + rhs.scaled(-1)
    }
}

impl Neg for SignedMultiset {
    type Output = SignedMultiset;

    fn neg(self) -> SignedMultiset {
        self.scaled(-1)
    }
}

impl fmt::Debug for SignedMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (p, v)) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if *v == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{v}*{p}")?;
            }
        }
        write!(f, "}}")
    }
}

/// Whether `t` contains exactly one representative of every left coset
/// `sigma H` of the full symmetric group of the given degree.
pub fn is_transversal(t: &PermSet, h: &PermSet, degree: usize) -> bool {
    let index = Perm::all(degree).len() / h.len();
    let cosets = t.to_multiset().left_cosets(h);
    t.len() == index && cosets.len() == index && cosets.values().all(|&v| v == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn generated_groups() {
        let c = generate(&[p("(1234)")], 4);
        assert_eq!(c, PermSet::from_cycles(&["e", "(1234)", "(13)(24)", "(1432)"]));
        assert_eq!(generate(&[], 4), PermSet::from_cycles(&["e"]));
        assert_eq!(generate(&[p("(12)"), p("(1234)")], 4).len(), 24);
        // a transposition and a 3-cycle on the same points only give S3
        assert_eq!(generate(&[p("(12)"), p("(123)")], 4).len(), 6);
        assert!(c.is_closed());
    }

    #[test]
    fn right_cosets() {
        let c = generate(&[p("(1234)")], 4);
        assert_eq!(
            right_coset(&c, &p("(14)")),
            PermSet::from_cycles(&["(14)", "(234)", "(1243)", "(132)"])
        );
        assert_eq!(right_coset(&c, &p("e")), c);
        assert_eq!(
            right_coset(&c, &p("(34)")),
            PermSet::from_cycles(&["(34)", "(123)", "(1324)", "(142)"])
        );
    }

    #[test]
    fn multiset_arithmetic() {
        let a = PermSet::from_cycles(&["e", "(12)"]).to_multiset();
        let b = PermSet::from_cycles(&["(12)"]).to_multiset();
        let d = a.clone() - b.clone();
        assert_eq!(d.total(), 1);
        assert_eq!(d.count(&p("(12)")), 0);
        assert!((a.clone() - a).is_zero());
        assert_eq!(b.scaled(3).count(&p("(12)")), 3);
    }

    #[test]
    fn transversal_of_transposition_quotient() {
        let a4 = PermSet::new(Perm::all(4).into_iter().filter(|s| s.sign() == 1));
        let h = generate(&[p("(12)")], 4);
        assert!(is_transversal(&a4, &h, 4));
        let not = PermSet::from_cycles(&["e", "(12)"]);
        assert!(!is_transversal(&not, &h, 4));
    }
}
