use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use permgroup::{Perm, Subscript};
use rug::ops::Pow;
use rug::Rational;

/// Exponent vector of a monomial `x1^a x2^b x3^c x4^d`.
pub type Exps = [u32; 4];

/// Polynomial in `x1..x4` with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Exps, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::from(1))
    }

    pub fn constant(c: impl Into<Rational>) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term([0; 4], c.into());
        p
    }

    /// The variable `x_j`, `j` in `1..=4`.
    pub fn var(j: usize) -> Self {
        assert!((1..=4).contains(&j), "variable index {j} out of range");
        let mut e = [0; 4];
        e[j - 1] = 1;
        MultiPoly::monomial(e, Rational::from(1))
    }

    pub fn monomial(exps: Exps, c: impl Into<Rational>) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(exps, c.into());
        p
    }

    /// `x_S = sum_{j in S} x_j`.
    pub fn subset_sum(s: Subscript) -> Self {
        let mut p = MultiPoly::zero();
        for j in s.members() {
            p = p + MultiPoly::var(j);
        }
        p
    }

    pub fn add_term(&mut self, exps: Exps, c: Rational) {
        if c == 0 {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(v) => {
                *v += c;
                if *v == 0 {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
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

    pub fn coeff(&self, exps: &Exps) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &Rational)> {
        self.terms.iter()
    }

    /// Largest total degree, or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if *c == 0 {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (*e, Rational::from(v * c)))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut out = MultiPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// `sigma . f(x1, ..., x4) = f(x_sigma(1), ..., x_sigma(4))`.
    pub fn act(&self, sigma: &Perm) -> MultiPoly {
        assert_eq!(sigma.degree(), 4, "polynomials carry an S4 action");
        let mut out = MultiPoly::zero();
        for (e, v) in &self.terms {
            let mut f = [0; 4];
            for (j, &a) in e.iter().enumerate() {
                f[sigma.apply(j + 1) - 1] = a;
            }
            out.add_term(f, v.clone());
        }
        out
    }

    /// Exact value at a rational point.
    pub fn substitute(&self, point: &[Rational; 4]) -> Rational {
        let mut sum = Rational::new();
        for (e, v) in &self.terms {
            let mut t = v.clone();
            for (x, &a) in point.iter().zip(e) {
                if a > 0 {
                    t *= x.clone().pow(a);
                }
            }
            sum += t;
        }
        sum
    }

    /// Replaces each `x_j` by the polynomial `images[j-1]`.
    pub fn compose(&self, images: &[MultiPoly; 4]) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (e, v) in &self.terms {
            let mut t = MultiPoly::constant(v.clone());
            for (img, &a) in images.iter().zip(e) {
                if a > 0 {
                    t = &t * &img.pow(a);
                }
            }
            out = out + t;
        }
        out
    }
}

/// `x_S^k`.
pub fn subset_power(s: Subscript, k: u32) -> MultiPoly {
    MultiPoly::subset_sum(s).pow(k)
}

/// Complete homogeneous polynomial of degree `d`: every monomial of total
/// degree `d` with coefficient 1.
pub fn complete_homogeneous(d: u32) -> MultiPoly {
    let mut p = MultiPoly::zero();
    for a in 0..=d {
        for b in 0..=d - a {
            for c in 0..=d - a - b {
                p.add_term([a, b, c, d - a - b - c], Rational::from(1));
            }
        }
    }
    p
}

impl Add for MultiPoly {
    type Output = MultiPoly;

    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        for (e, v) in rhs.terms {
            self.add_term(e, v);
        }
        self
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.clone() + rhs.clone()
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        self + (-rhs)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.clone() - rhs.clone()
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.into_iter().map(|(e, v)| (e, -v)).collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ea, va) in &self.terms {
            for (eb, vb) in &rhs.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]];
                out.add_term(e, Rational::from(va * vb));
            }
        }
        out
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl fmt::Display for MultiPoly {
    /// Terms by descending total degree, then descending exponent vector.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Exps> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then(b.cmp(a))
        });
        for (i, e) in keys.into_iter().enumerate() {
            let v = &self.terms[e];
            let neg = *v < 0;
            let abs = Rational::from(v.abs_ref());
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let is_const = e.iter().all(|&a| a == 0);
            if abs != 1 || is_const {
                write!(f, "{abs}")?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut first = true;
            for (j, &a) in e.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "x{}", j + 1)?;
                if a > 1 {
                    write!(f, "^{a}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> Subscript {
        x.parse().unwrap()
    }

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn subset_powers() {
        let p = subset_power(s("12"), 2);
        assert_eq!(p.to_string(), "x1^2 + 2*x1*x2 + x2^2");
        assert_eq!(subset_power(s("234"), 0), MultiPoly::one());
        assert_eq!(subset_power(s("234"), 1).to_string(), "x2 + x3 + x4");
    }

    #[test]
    fn substitution() {
        let p = subset_power(s("1234"), 2);
        assert_eq!(p.substitute(&[q(1), q(1), q(1), q(1)]), 16);
        let half = Rational::from((1, 2));
        assert_eq!(
            MultiPoly::var(3).substitute(&[q(0), q(0), half.clone(), q(0)]),
            half
        );
    }

    #[test]
    fn action_relabels_variables() {
        let sigma: Perm = "(1234)".parse().unwrap();
        assert_eq!(MultiPoly::var(1).act(&sigma), MultiPoly::var(2));
        let rho: Perm = "(24)".parse().unwrap();
        let sr = &sigma * &rho;
        // sigma.rho acting on x_234^k gives x_{sr(2) sr(3) sr(4)}^k
        let lhs = subset_power(s("234"), 3).act(&sr);
        let img = Subscript::new(&[sr.apply(2), sr.apply(3), sr.apply(4)]).unwrap();
        assert_eq!(lhs, subset_power(img, 3));
    }

    #[test]
    fn homogeneous_multiplier_at_unit_vector() {
        for d in 0..7 {
            let h = complete_homogeneous(d);
            assert_eq!(h.substitute(&[q(1), q(0), q(0), q(0)]), 1);
            assert!(h.is_homogeneous());
        }
        assert_eq!(complete_homogeneous(3).len(), 20);
    }

    #[test]
    fn compose_with_linear_forms() {
        // x1 x2 with x1 -> x1 - x2, x2 -> x2
        let p = MultiPoly::var(1) * MultiPoly::var(2);
        let imgs = [
            MultiPoly::var(1) - MultiPoly::var(2),
            MultiPoly::var(2),
            MultiPoly::var(3),
            MultiPoly::var(4),
        ];
        assert_eq!(p.compose(&imgs).to_string(), "x1*x2 - x2^2");
    }
}
