//! Index words `(l1, ..., ln)` and the exponent patterns of polylog arguments.
//!
//! An [`IndexWord`] is a composition of its weight. It is admissible when the
//! first part is at least 2, which is exactly when the nested zeta series
//! converges. A [`ZPattern`] records the powers `(e1, ..., en)` in an argument
//! tuple `(z^e1, ..., z^en)`.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid arguments: {0}")]
    InvalidArguments(String),
    #[error("arity mismatch: word has depth {word}, pattern has length {pattern}")]
    ArityMismatch { word: usize, pattern: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

/// A composition `(l1, ..., ln)` with every part positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct IndexWord(Vec<u32>);

impl IndexWord {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidArguments("index word must be nonempty".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidArguments(format!(
                "index parts must be positive, got {parts:?}"
            )));
        }
        Ok(IndexWord(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn is_admissible(&self) -> bool {
        self.0[0] >= 2
    }

    /// Number of leading parts equal to 1.
    pub fn leading_ones(&self) -> usize {
        self.0.iter().take_while(|&&p| p == 1).count()
    }
}

impl TryFrom<Vec<u32>> for IndexWord {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        IndexWord::new(parts)
    }
}

impl From<IndexWord> for Vec<u32> {
    fn from(w: IndexWord) -> Self {
        w.0
    }
}

impl fmt::Display for IndexWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl std::str::FromStr for IndexWord {
    type Err = Error;

    /// Accepts `(2,1,1,1)`, `2,1,1,1` or `2 1 1 1`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| Error::InvalidArguments(format!("bad index part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        IndexWord::new(parts)
    }
}

/// Exponents `(e1, ..., en)` of the argument tuple `(z^e1, ..., z^en)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ZPattern(Vec<u32>);

impl ZPattern {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        if exps.is_empty() || exps.contains(&0) {
            return Err(Error::InvalidArguments(format!(
                "pattern exponents must be positive and nonempty, got {exps:?}"
            )));
        }
        Ok(ZPattern(exps))
    }

    /// `(z, z^2, ..., z^n)`.
    pub fn ladder(n: usize) -> Self {
        ZPattern((1..=n as u32).collect())
    }

    /// `(z, z, ..., z)`.
    pub fn flat(n: usize) -> Self {
        ZPattern(vec![1; n])
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Per-letter increments `d_j = e_j - e_{j-1}` with `e_0 = 0`.
    ///
    /// These are the powers of `z` attached to each summation variable once
    /// the argument product is rewritten over `m_1 > ... > m_n`.
    pub fn increments(&self) -> Vec<i64> {
        let mut prev = 0i64;
        self.0
            .iter()
            .map(|&e| {
                let d = e as i64 - prev;
                prev = e as i64;
                d
            })
            .collect()
    }
}

impl fmt::Display for ZPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
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

/// All compositions of `weight` into `depth` positive parts, in lexicographic
/// order. With `admissible_only` the first part must be at least 2.
pub fn compositions(weight: u32, depth: usize, admissible_only: bool) -> Result<Vec<IndexWord>> {
    if depth == 0 {
        return Err(Error::InvalidArguments("depth must be positive".into()));
    }
    let depth_u = depth as u32;
    if weight < depth_u {
        return Err(Error::InvalidArguments(format!(
            "weight {weight} is smaller than depth {depth}"
        )));
    }
    if admissible_only && weight < depth_u + 1 {
        return Err(Error::InvalidArguments(format!(
            "no admissible index of weight {weight} and depth {depth}"
        )));
    }
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(depth);
    let first_min = if admissible_only { 2 } else { 1 };
    fill(weight, depth, first_min, &mut buf, &mut out);
    Ok(out)
}

fn fill(rest: u32, slots: usize, min: u32, buf: &mut Vec<u32>, out: &mut Vec<IndexWord>) {
    if slots == 1 {
        if rest >= min {
            buf.push(rest);
            out.push(IndexWord(buf.clone()));
            buf.pop();
        }
        return;
    }
    // leave at least one for every remaining slot
    let max = rest.saturating_sub(slots as u32 - 1);
    for p in min..=max {
        buf.push(p);
        fill(rest - p, slots - 1, 1, buf, out);
        buf.pop();
    }
}

/// Returns the pair unchanged when the word depth matches the pattern length.
pub fn concat_split_arity_check(w: IndexWord, z: ZPattern) -> Result<(IndexWord, ZPattern)> {
    if w.depth() != z.len() {
        return Err(Error::ArityMismatch {
            word: w.depth(),
            pattern: z.len(),
        });
    }
    Ok((w, z))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(p: &[u32]) -> IndexWord {
        IndexWord::new(p.to_vec()).unwrap()
    }

    #[test]
    fn weight_depth_admissible() {
        let x = w(&[2, 1, 1, 1]);
        assert_eq!(x.weight(), 5);
        assert_eq!(x.depth(), 4);
        assert!(x.is_admissible());
        assert!(!w(&[1, 2]).is_admissible());
        assert_eq!(w(&[1, 1, 3]).leading_ones(), 2);
    }

    #[test]
    fn rejects_zero_and_empty() {
        assert!(IndexWord::new(vec![]).is_err());
        assert!(IndexWord::new(vec![2, 0]).is_err());
        assert!(ZPattern::new(vec![1, 0]).is_err());
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(compositions(5, 4, true).unwrap(), vec![w(&[2, 1, 1, 1])]);
        assert_eq!(compositions(4, 4, false).unwrap(), vec![w(&[1, 1, 1, 1])]);
        assert_eq!(compositions(6, 4, true).unwrap().len(), 4);
        assert_eq!(compositions(7, 4, true).unwrap().len(), 10);
        assert!(compositions(3, 4, false).is_err());
        assert!(compositions(4, 4, true).is_err());
    }

    #[test]
    fn enumeration_is_sorted() {
        let all = compositions(9, 3, false).unwrap();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
    }

    #[test]
    fn patterns() {
        assert_eq!(ZPattern::ladder(4).exps(), &[1, 2, 3, 4]);
        assert_eq!(ZPattern::flat(3).exps(), &[1, 1, 1]);
        assert_eq!(ZPattern::ladder(3).increments(), vec![1, 1, 1]);
        assert_eq!(ZPattern::flat(3).increments(), vec![1, 0, 0]);
        assert_eq!(ZPattern::ladder(2).to_string(), "(z,z^2)");
    }

    #[test]
    fn arity() {
        let ok = concat_split_arity_check(w(&[2, 1]), ZPattern::new(vec![1, 2]).unwrap());
        assert!(ok.is_ok());
        let bad = concat_split_arity_check(w(&[2, 1]), ZPattern::ladder(3));
        assert_eq!(bad.unwrap_err(), Error::ArityMismatch { word: 2, pattern: 3 });
        assert!(concat_split_arity_check(w(&[1, 1, 1, 1]), ZPattern::ladder(4)).is_ok());
    }

    #[test]
    fn parse_and_display() {
        let x: IndexWord = "(3,2,2,2)".parse().unwrap();
        assert_eq!(x, w(&[3, 2, 2, 2]));
        assert_eq!(x.to_string(), "(3,2,2,2)");
        assert!("(1,x)".parse::<IndexWord>().is_err());
    }
}
