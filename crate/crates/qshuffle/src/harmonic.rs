//! Harmonic relations among products of polylogarithms with ladder
//! arguments `<z>^n = (z, z^2, ..., z^n)`, over formal exponents `l1..l4`.

use std::collections::BTreeMap;
use std::fmt;

use indexword::{compositions, IndexWord, ZPattern};
use permgroup::named::{a4, c, c_coset, cb, cb_coset, s4, u1, u2, u3, v2, v3a, v3b, v3c, w3};
use permgroup::{Check, Perm, PermSet, SignedMultiset};
use polyring::{complete_homogeneous, MultiPoly};

use crate::li::{li, FormalLiSum, LiSymbol};
use crate::symbol::SymbolSum;
use crate::{Error, Result};

type Sum = FormalLiSum<SymbolSum>;

/// The four products expanded in the harmonic relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Part {
    I,
    II,
    III,
    IV,
}

impl Part {
    pub const ALL: [Part; 4] = [Part::I, Part::II, Part::III, Part::IV];
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Part::I => "i",
            Part::II => "ii",
            Part::III => "iii",
            Part::IV => "iv",
        })
    }
}

impl std::str::FromStr for Part {
    type Err = Error;

    fn from_str(s: &str) -> Result<Part> {
        match s {
            "i" => Ok(Part::I),
            "ii" => Ok(Part::II),
            "iii" => Ok(Part::III),
            "iv" => Ok(Part::IV),
            _ => Err(Error::InvalidArguments(format!("unknown part {s:?}"))),
        }
    }
}

fn li4() -> Sum {
    li(&["1", "2", "3", "4"], &[1, 2, 3, 4])
}

/// `Li(l12,l3,l4; z^2,z^3,z^4) + Li(l1,l23,l4; z,z^3,z^4) + Li(l1,l2,l34; z,z^2,z^4)`.
fn three() -> Sum {
    li(&["12", "3", "4"], &[2, 3, 4]) + li(&["1", "23", "4"], &[1, 3, 4]) + li(&["1", "2", "34"], &[1, 2, 4])
}

fn li12_34() -> Sum {
    li(&["12", "34"], &[2, 4])
}

fn li123_4() -> Sum {
    li(&["123", "4"], &[3, 4])
}

fn li1_234() -> Sum {
    li(&["1", "234"], &[1, 4])
}

fn li1234() -> Sum {
    li(&["1234"], &[4])
}

fn p(s: &str) -> Perm {
    s.parse().expect("cycle literal")
}

fn ladder(word: &[&str]) -> Sum {
    let z: Vec<u32> = (1..=word.len() as u32).collect();
    li(word, &z)
}

/// The product on the left of each harmonic relation, expanded.
pub fn lemma21_lhs(part: Part) -> Sum {
    match part {
        Part::I => ladder(&["1", "2", "3"]).product(&ladder(&["4"])),
        Part::II => ladder(&["1", "2"]).product(&ladder(&["3", "4"])),
        Part::III => ladder(&["1", "2"])
            .product(&ladder(&["3"]))
            .product(&ladder(&["4"])),
        Part::IV => ladder(&["1"])
            .product(&ladder(&["2"]))
            .product(&ladder(&["3"]))
            .product(&ladder(&["4"])),
    }
}

/// The right-hand side as printed, through the named permutation sets.
pub fn lemma21_rhs(part: Part) -> Sum {
    match part {
        Part::I => {
            li4().sum_over(&u1())
                + (li(&["12", "3", "4"], &[2, 3, 4]) + li(&["1", "23", "4"], &[1, 3, 4])).act(&p("(243)"))
                + li(&["1", "2", "34"], &[1, 2, 4])
        }
        Part::II => li4().sum_over(&u2()) + three().sum_over(&v2()) + li12_34().act(&p("(23)")),
        Part::III => {
            li4().sum_over(&u3())
                + li(&["12", "3", "4"], &[2, 3, 4]).sum_over(&v3a())
                + li(&["1", "23", "4"], &[1, 3, 4]).sum_over(&v3b())
                + li(&["1", "2", "34"], &[1, 2, 4]).sum_over(&v3c())
                + li12_34().sum_over(&w3())
                + li123_4().act(&p("(24)"))
                + li1_234()
        }
        Part::IV => {
            li4().sum_over(&s4())
                + three().sum_over(&a4())
                + li12_34().sum_over(&c().union(&cb_coset("(14)")))
                + (li123_4() + li1_234()).sum_over(&c())
                + li1234()
        }
    }
}

fn compare(name: String, lhs: &Sum, rhs: &Sum) -> Check {
    let diff = lhs.clone() - rhs.clone();
    let detail = if diff.is_zero() {
        format!("{} terms", lhs.len())
    } else {
        format!("lhs - rhs = {diff}")
    };
    Check::new(name, diff.is_zero(), detail)
}

fn compare_int(name: String, lhs: &FormalLiSum<u32>, rhs: &FormalLiSum<u32>) -> Check {
    let diff = lhs.clone() - rhs.clone();
    let detail = if diff.is_zero() { String::new() } else { format!("lhs - rhs = {diff}") };
    Check::new(name, diff.is_zero(), detail)
}

/// The harmonic relation over formal exponents; one check covers every `l`.
pub fn verify_lemma21_formal(part: Part) -> Check {
    compare(
        format!("lemma21.{part}.formal"),
        &lemma21_lhs(part),
        &lemma21_rhs(part),
    )
}

/// The harmonic relation at concrete exponents `l`: both sides are
/// instantiated and canonicalized independently.
pub fn verify_lemma21(part: Part, l: &IndexWord) -> Check {
    compare_int(
        format!("lemma21.{part}.{l}"),
        &lemma21_lhs(part).instantiate(l),
        &lemma21_rhs(part).instantiate(l),
    )
}

/// The instantiated relation with the left side built straight from integer
/// letters, bypassing the formal symbols.
pub fn verify_lemma21_direct(part: Part, l: &IndexWord) -> Result<Check> {
    let v = l.parts();
    let lad = |w: &[u32]| -> Result<FormalLiSum<u32>> {
        let z: Vec<u32> = (1..=w.len() as u32).collect();
        crate::li::li_int(w, &z)
    };
    let lhs = match part {
        Part::I => lad(&v[..3])?.product(&lad(&v[3..])?),
        Part::II => lad(&v[..2])?.product(&lad(&v[2..])?),
        Part::III => lad(&v[..2])?.product(&lad(&v[2..3])?).product(&lad(&v[3..])?),
        Part::IV => lad(&v[..1])?
            .product(&lad(&v[1..2])?)
            .product(&lad(&v[2..3])?)
            .product(&lad(&v[3..])?),
    };
    Ok(compare_int(
        format!("lemma21.{part}.{l}"),
        &lhs,
        &lemma21_rhs(part).instantiate(l),
    ))
}

/// Every relation at every depth-4 composition of each weight up to `max_weight`.
pub fn verify_lemma21_exhaustive(max_weight: u32) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for w in 4..=max_weight {
        for l in compositions(w, 4, false).map_err(|e| Error::InvalidArguments(e.to_string()))? {
            for part in Part::ALL {
                out.push(verify_lemma21_direct(part, &l)?);
            }
        }
    }
    Ok(out)
}

fn ms(s: &PermSet) -> SignedMultiset {
    s.to_multiset()
}

fn cc(s: &str) -> SignedMultiset {
    ms(&c_coset(s))
}

/// Summing set of the cyclic version of each relation: C, or Cb for part ii.
pub fn lemma22_summing_set(part: Part) -> PermSet {
    match part {
        Part::II => cb(),
        _ => c(),
    }
}

/// Left side of the cyclic relation: the product summed over the set.
pub fn lemma22_lhs(part: Part) -> Sum {
    lemma21_lhs(part).sum_over(&lemma22_summing_set(part))
}

/// Right side of the cyclic relation in coset-coefficient form.
pub fn lemma22_rhs(part: Part) -> Result<Sum> {
    Ok(match part {
        Part::I => {
            li4().sum_over_multiset(&(cc("e").scaled(2) + cc("(12)") + cc("(34)")))
                + three().sum_over_multiset(&(ms(&a4()) - cc("(13)") - cc("(23)")))
        }
        Part::II => {
            li4().sum_over_multiset(&(cc("e") + cc("(14)") + cc("(23)")))
                + three().sum_over_multiset(&cc("(23)"))
                + li12_34().sum_over(&cb_coset("(14)"))
        }
        Part::III => {
            li4().sum_over_multiset(&(ms(&s4()).scaled(2) + cc("e") - cc("(13)")))
                + three().sum_over_multiset(&(ms(&a4()).scaled(2) - cc("(13)")))
                + li12_34().sum_over_multiset(&(cc("e") + ms(&cb_coset("(14)")).scaled(2)))
                + (li123_4() + li1_234()).sum_over(&c())
        }
        Part::IV => {
            return Err(Error::InvalidArguments(
                "the four-singleton relation has no cyclic version".into(),
            ))
        }
    })
}

pub fn verify_lemma22_formal(part: Part) -> Result<Check> {
    Ok(compare(
        format!("lemma22.{part}.formal"),
        &lemma22_lhs(part),
        &lemma22_rhs(part)?,
    ))
}

pub fn verify_lemma22(part: Part, l: &IndexWord) -> Result<Check> {
    Ok(compare_int(
        format!("lemma22.{part}.{l}"),
        &lemma22_lhs(part).instantiate(l),
        &lemma22_rhs(part)?.instantiate(l),
    ))
}

/// Both sides of the per-index identity
/// `C.(Li(l1,l2,l3)Li(l4) - Li(l1,l2)Li(l3)Li(l4)) + Cb.Li(l1,l2)Li(l3,l4)
///  + Li(l1)Li(l2)Li(l3)Li(l4) = C.Li(l1,l2,l3,l4) + Li(l1234; z^4)`.
pub fn cyclic_identity_sides() -> (Sum, Sum) {
    let lhs = (lemma21_lhs(Part::I) - lemma21_lhs(Part::III)).sum_over(&c())
        + lemma21_lhs(Part::II).sum_over(&cb())
        + lemma21_lhs(Part::IV);
    let rhs = li4().sum_over(&c()) + li1234();
    (lhs, rhs)
}

pub fn verify_cyclic_identity() -> Check {
    let (lhs, rhs) = cyclic_identity_sides();
    compare("eq218.formal".into(), &lhs, &rhs)
}

/// Parameterized sum `sum_{l} prod_k x_{vars_k}^{l_k - 1} Li(l; zpat)` over
/// compositions of a given weight into `vars.len()` parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamFactor {
    /// Variable indices `1..=4`.
    pub vars: Vec<usize>,
    pub zpat: ZPattern,
}

impl ParamFactor {
    pub fn depth(&self) -> usize {
        self.vars.len()
    }
}

/// `sign * sum_{sigma in perms} sigma . sum_{weights} prod_f factor_f`, the
/// inner sum running over all splits of the total weight with each factor
/// weight at least its depth.
#[derive(Clone, Debug)]
pub struct ParamBlock {
    pub sign: i32,
    pub perms: PermSet,
    pub factors: Vec<ParamFactor>,
}

fn factor(vars: &[usize], zpat: ZPattern) -> ParamFactor {
    ParamFactor {
        vars: vars.to_vec(),
        zpat,
    }
}

/// The five blocks of the parameterized identity, with signs `-,+,+,-,+`.
/// Their total equals `h_{l-4}(x) Li_l(z^4)`, see [`cyclic_rhs_pattern`].
pub fn cyclic_param_blocks() -> Vec<ParamBlock> {
    let id = PermSet::new([Perm::identity(4)]);
    vec![
        ParamBlock {
            sign: -1,
            perms: c(),
            factors: vec![factor(&[1, 2, 3, 4], ZPattern::ladder(4))],
        },
        ParamBlock {
            sign: 1,
            perms: c(),
            factors: vec![factor(&[1, 2, 3], ZPattern::ladder(3)), factor(&[4], ZPattern::ladder(1))],
        },
        ParamBlock {
            sign: 1,
            perms: cb(),
            factors: vec![factor(&[1, 2], ZPattern::ladder(2)), factor(&[3, 4], ZPattern::ladder(2))],
        },
        ParamBlock {
            sign: -1,
            perms: c(),
            factors: vec![
                factor(&[1, 2], ZPattern::ladder(2)),
                factor(&[3], ZPattern::ladder(1)),
                factor(&[4], ZPattern::ladder(1)),
            ],
        },
        ParamBlock {
            sign: 1,
            perms: id,
            factors: (1..=4).map(|j| factor(&[j], ZPattern::ladder(1))).collect(),
        },
    ]
}

/// Argument of the single polylogarithm on the right: `Li_l(z^4)`.
pub fn cyclic_rhs_pattern() -> ZPattern {
    ZPattern::new(vec![4]).expect("positive")
}

/// Expansion of `sum of blocks` at one weight into polylog symbols with
/// polynomial coefficients in `x1..x4`.
pub fn expand_blocks(blocks: &[ParamBlock], weight: u32) -> Result<BTreeMap<LiSymbol<u32>, MultiPoly>> {
    let words = compositions(weight, 4, false).map_err(|e| Error::InvalidArguments(e.to_string()))?;
    let mut out: BTreeMap<LiSymbol<u32>, MultiPoly> = BTreeMap::new();
    for block in blocks {
        let depth: usize = block.factors.iter().map(|f| f.depth()).sum();
        if depth != 4 {
            return Err(Error::InvalidArguments("blocks must have total depth 4".into()));
        }
        for l in &words {
            let parts = l.parts();
            let mut prod = FormalLiSum::<u32>::one();
            let mut exps = [0u32; 4];
            let mut at = 0;
            for f in &block.factors {
                let chunk = &parts[at..at + f.depth()];
                prod = prod.product(&FormalLiSum::single(LiSymbol::new(chunk.to_vec(), &f.zpat)?));
                for (&v, &lj) in f.vars.iter().zip(chunk) {
                    exps[v - 1] += lj - 1;
                }
                at += f.depth();
            }
            let mono = MultiPoly::monomial(exps, block.sign);
            for sigma in block.perms.iter() {
                let m = mono.act(sigma);
                for (s, k) in prod.iter() {
                    let e = out.entry(s.clone()).or_default();
                    *e = e.clone() + m.scale(k);
                }
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// The parameterized identity at one weight, as an exact equality of
/// polynomial-coefficient polylog sums.
pub fn verify_cyclic_param_identity(weight: u32) -> Result<Check> {
    let lhs = expand_blocks(&cyclic_param_blocks(), weight)?;
    let mut rhs = BTreeMap::new();
    rhs.insert(
        LiSymbol::new(vec![weight], &cyclic_rhs_pattern())?,
        complete_homogeneous(weight - 4),
    );
    let pass = lhs == rhs;
    let detail = if pass {
        "all polylog coefficients cancel".to_string()
    } else {
        let extra: Vec<String> = lhs
            .iter()
            .filter(|(s, v)| rhs.get(*s) != Some(*v))
            .take(3)
            .map(|(s, v)| format!("{s}: {v}"))
            .collect();
        format!("mismatch, e.g. {}", extra.join("; "))
    };
    Ok(Check::new(format!("prop21.w{weight}"), pass, detail))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formal_relations_hold() {
        for part in Part::ALL {
            let c = verify_lemma21_formal(part);
            assert!(c.pass, "{part}: {}", c.detail);
        }
        for part in [Part::I, Part::II, Part::III] {
            let c = verify_lemma22_formal(part).unwrap();
            assert!(c.pass, "{part}: {}", c.detail);
        }
        assert!(verify_cyclic_identity().pass);
    }

    #[test]
    fn four_singletons_term_count() {
        // ordered set partitions of four letters: the Fubini number 75
        assert_eq!(lemma21_lhs(Part::IV).len(), 75);
        assert_eq!(lemma21_rhs(Part::IV).len(), 75);
    }

    #[test]
    fn param_identity_low_weights() {
        for w in 4..=6 {
            let c = verify_cyclic_param_identity(w).unwrap();
            assert!(c.pass, "{}", c.detail);
        }
    }
}
