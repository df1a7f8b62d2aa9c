use std::fmt;
use std::str::FromStr;

use indexword::IndexWord;
use permgroup::{Perm, Subscript};

use crate::Error;

/// An exponent entry: either a concrete positive integer or a formal sum of
/// the base symbols `l1..l4`.
pub trait Exponent: Clone + Ord + fmt::Display {
    /// Exponent of a merged letter, `l_A (+) l_B`.
    fn merge(&self, other: &Self) -> Self;
}

impl Exponent for u32 {
    fn merge(&self, other: &Self) -> Self {
        self + other
    }
}

/// Formal sum `l_{j1} + ... + l_{jm}` of base symbols, stored as a multiset
/// of counts. `l_{134}` is `[1, 0, 1, 1]`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SymbolSum([u8; 4]);

impl SymbolSum {
    pub fn single(j: usize) -> Self {
        assert!((1..=4).contains(&j), "symbol index {j} out of range");
        let mut c = [0; 4];
        c[j - 1] = 1;
        SymbolSum(c)
    }

    pub fn from_counts(counts: [u8; 4]) -> Self {
        SymbolSum(counts)
    }

    pub fn from_subscript(s: Subscript) -> Self {
        let mut c = [0; 4];
        for j in s.members() {
            c[j - 1] = 1;
        }
        SymbolSum(c)
    }

    pub fn counts(&self) -> [u8; 4] {
        self.0
    }

    /// Number of base symbols, with multiplicity.
    pub fn size(&self) -> u32 {
        self.0.iter().map(|&c| c as u32).sum()
    }

    /// `sigma . l_{j1...jm} = l_{sigma(j1)...sigma(jm)}`.
    pub fn act(&self, sigma: &Perm) -> SymbolSum {
        let mut c = [0; 4];
        for (j, &k) in self.0.iter().enumerate() {
            c[sigma.apply(j + 1) - 1] += k;
        }
        SymbolSum(c)
    }

    /// Value after substituting the integers of `l` for `l1..l4`.
    pub fn instantiate(&self, l: &IndexWord) -> u32 {
        assert_eq!(l.depth(), 4, "base symbols need a depth-4 index");
        self.0
            .iter()
            .zip(l.parts())
            .map(|(&c, &v)| c as u32 * v)
            .sum()
    }
}

impl Exponent for SymbolSum {
    fn merge(&self, other: &Self) -> Self {
        let mut c = self.0;
        for (a, b) in c.iter_mut().zip(other.0) {
            *a += b;
        }
        SymbolSum(c)
    }
}

impl fmt::Display for SymbolSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "l")?;
        for (j, &k) in self.0.iter().enumerate() {
            for _ in 0..k {
                write!(f, "{}", j + 1)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymbolSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses digit strings such as `"134"` or `"l12"`; repeated digits add up.
impl FromStr for SymbolSum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let body = s.trim().trim_start_matches('l');
        if body.is_empty() {
            return Err(Error::BadSymbol(s.to_string()));
        }
        let mut c = [0u8; 4];
        for ch in body.chars() {
            match ch.to_digit(10) {
                Some(d @ 1..=4) => c[d as usize - 1] += 1,
                _ => return Err(Error::BadSymbol(s.to_string())),
            }
        }
        Ok(SymbolSum(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_act_instantiate() {
        let s: SymbolSum = "134".parse().unwrap();
        assert_eq!(s.to_string(), "l134");
        let sigma: Perm = "(1234)".parse().unwrap();
        assert_eq!(s.act(&sigma), "124".parse().unwrap());
        let l = IndexWord::new(vec![2, 1, 3, 5]).unwrap();
        assert_eq!(s.instantiate(&l), 10);
        assert!("15".parse::<SymbolSum>().is_err());
        assert_eq!("11".parse::<SymbolSum>().unwrap().size(), 2);
    }
}
