use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::{Error, Result};

/// A permutation of `{1, ..., n}` stored as its image array.
///
/// Products compose right to left: `(s * r)(i) = s(r(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    // zero-based images
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u8).collect(),
        }
    }

    /// Builds a permutation from one-based images, `images[i-1] = sigma(i)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
            seen[v - 1] = true;
        }
        Ok(Perm {
            images: images.iter().map(|&v| (v - 1) as u8).collect(),
        })
    }

    /// Parses cycle notation such as `(13)(24)`, `(1432)` or `e`.
    ///
    /// Points are single digits, matching how the cycles are written for
    /// degree at most 9.
    pub fn parse_cycles(s: &str, degree: usize) -> Result<Self> {
        let s = s.trim();
        let mut images: Vec<u8> = (0..degree as u8).collect();
        if s == "e" || s.is_empty() {
            return Ok(Perm { images });
        }
        let bad = || Error::BadCycleNotation(s.to_string());
        let mut rest = s;
        let mut touched = vec![false; degree];
        while !rest.is_empty() {
            rest = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = rest.find(')').ok_or_else(bad)?;
            let body = &rest[..close];
            rest = rest[close + 1..].trim_start();
            let pts: Vec<usize> = body
                .chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_>>()?;
            for &p in &pts {
                if p == 0 || p > degree || touched[p - 1] {
                    return Err(bad());
                }
                touched[p - 1] = true;
            }
            for (k, &p) in pts.iter().enumerate() {
                let q = pts[(k + 1) % pts.len()];
                images[p - 1] = (q - 1) as u8;
            }
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `sigma(i)` for one-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm {
            images: other.images.iter().map(|&j| self.images[j as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Perm { images: inv }
    }

    /// Sign as +1 or -1.
    pub fn sign(&self) -> i32 {
        let mut seen = vec![false; self.degree()];
        let mut s = 1;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.images[j] as usize;
                len += 1;
            }
            if len % 2 == 0 {
                s = -s;
            }
        }
        s
    }

    /// Every permutation of the given degree, in lexicographic image order.
    pub fn all(degree: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (0..degree as u8).collect();
        loop {
            out.push(Perm {
                images: cur.clone(),
            });
            // next permutation
            let Some(i) = (1..degree).rev().find(|&i| cur[i - 1] < cur[i]) else {
                return out;
            };
            let j = (i..degree).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
    }
}

impl Mul for &Perm {
    type Output = Perm;

    fn mul(self, rhs: &Perm) -> Perm {
        self.compose(rhs)
    }
}

impl Mul for Perm {
    type Output = Perm;

    fn mul(self, rhs: Perm) -> Perm {
        self.compose(&rhs)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "e");
        }
        let mut seen = vec![false; self.degree()];
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            write!(f, "(")?;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                write!(f, "{}", j + 1)?;
                j = self.images[j] as usize;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// Cycle notation in degree 4.
    fn from_str(s: &str) -> Result<Self> {
        Perm::parse_cycles(s, 4)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn cycle_round_trip() {
        for s in ["e", "(12)", "(13)(24)", "(1432)", "(243)", "(1234)"] {
            assert_eq!(p(s).to_string(), s);
        }
        // a cycle may start anywhere
        assert_eq!(p("(432)"), p("(243)"));
    }

    #[test]
    fn rejects_bad_notation() {
        assert!(Perm::parse_cycles("(12", 4).is_err());
        assert!(Perm::parse_cycles("(15)", 4).is_err());
        assert!(Perm::parse_cycles("(121)", 4).is_err());
        assert!(Perm::from_images(&[1, 1, 3]).is_err());
    }

    #[test]
    fn composition_applies_right_factor_first() {
        // (12) after (23): 1->1->2, 2->3->3, 3->2->1
        let c = &p("(12)") * &p("(23)");
        assert_eq!(c, p("(123)"));
        assert_eq!(p("(1234)").apply(4), 1);
    }

    #[test]
    fn enumerate_s4() {
        let all = Perm::all(4);
        assert_eq!(all.len(), 24);
        assert_eq!(all.iter().filter(|s| s.sign() == 1).count(), 12);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn inverse_and_sign() {
        let s = p("(1432)");
        assert!((&s * &s.inverse()).is_identity());
        assert_eq!(s.sign(), -1);
        assert_eq!(p("(13)(24)").sign(), 1);
    }
}
