use std::fmt;
use std::str::FromStr;

use crate::{Error, Perm, Result};

/// A nonempty subset of `{1, ..., 16}` used as a merged subscript such as
/// the `134` in `l_134` or `x_134`. Stored as a bitmask, so `l_13` and `l_31`
/// are the same value.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subscript(u16);

impl Subscript {
    pub fn new(members: &[usize]) -> Result<Self> {
        let mut bits = 0u16;
        for &j in members {
            if j == 0 || j > 16 {
                return Err(Error::BadSubscript(format!("{members:?}")));
            }
            bits |= 1 << (j - 1);
        }
        if bits == 0 {
            return Err(Error::BadSubscript("empty subscript".into()));
        }
        Ok(Subscript(bits))
    }

    pub fn single(j: usize) -> Self {
        Subscript::new(&[j]).expect("index in range")
    }

    pub fn from_bits(bits: u16) -> Self {
        assert!(bits != 0, "empty subscript");
        Subscript(bits)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn contains(self, j: usize) -> bool {
        j >= 1 && j <= 16 && self.0 & (1 << (j - 1)) != 0
    }

    /// Members in increasing order.
    pub fn members(self) -> Vec<usize> {
        (1..=16).filter(|&j| self.contains(j)).collect()
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        false
    }

    pub fn union(self, other: Subscript) -> Subscript {
        Subscript(self.0 | other.0)
    }

    pub fn is_disjoint(self, other: Subscript) -> bool {
        self.0 & other.0 == 0
    }

    /// Replaces every member `j` by `sigma(j)`.
    pub fn act(self, sigma: &Perm) -> Subscript {
        let mut bits = 0u16;
        for j in self.members() {
            bits |= 1 << (sigma.apply(j) - 1);
        }
        Subscript(bits)
    }
}

// Order by the sorted member list, so 1 < 12 < 123 < 13 < 2.
impl Ord for Subscript {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.members().cmp(&other.members())
    }
}

impl PartialOrd for Subscript {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subscript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in self.members() {
            if j < 10 {
                write!(f, "{j}")?;
            } else {
                write!(f, "[{j}]")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Subscript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Subscript {
    type Err = Error;

    /// Digits, e.g. `"134"`.
    fn from_str(s: &str) -> Result<Self> {
        let members = s
            .trim()
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::BadSubscript(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Subscript::new(&members)
    }
}

/// Parses a tuple written as `(12,3,4)`.
pub fn parse_tuple(s: &str) -> Result<Vec<Subscript>> {
    s.trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(',')
        .map(str::parse)
        .collect()
}

pub fn format_tuple(t: &[Subscript]) -> String {
    let parts: Vec<String> = t.iter().map(|s| s.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Applies `sigma` inside every subscript of the tuple; slot order is kept.
pub fn act_on_subscript_tuple(sigma: &Perm, t: &[Subscript]) -> Vec<Subscript> {
    t.iter().map(|s| s.act(sigma)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_and_display() {
        let a: Subscript = "31".parse().unwrap();
        assert_eq!(a, "13".parse().unwrap());
        assert_eq!(a.to_string(), "13");
        assert_eq!(a.members(), vec![1, 3]);
        assert!("".parse::<Subscript>().is_err());
    }

    #[test]
    fn ordering_is_by_member_list() {
        let mut v: Vec<Subscript> = ["2", "13", "1", "123", "12"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        v.sort();
        let shown: Vec<String> = v.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, ["1", "12", "123", "13", "2"]);
    }

    #[test]
    fn tuple_actions() {
        let t = parse_tuple("(1,2,3,4)").unwrap();
        assert_eq!(
            act_on_subscript_tuple(&p("(13)(24)"), &t),
            parse_tuple("(3,4,1,2)").unwrap()
        );
        let t = parse_tuple("(12,34)").unwrap();
        assert_eq!(
            act_on_subscript_tuple(&p("(1234)"), &t),
            parse_tuple("(23,41)").unwrap()
        );
        let t = parse_tuple("(12,3,4)").unwrap();
        assert_eq!(
            act_on_subscript_tuple(&p("(132)"), &t),
            parse_tuple("(13,2,4)").unwrap()
        );
        assert_eq!(format_tuple(&t), "(12,3,4)");
    }
}
