use std::collections::HashMap;

use indexword::{compositions, IndexWord, ZPattern};
use numeric::{eval_li_many, monomial, Bounded, Float, PatternKind, Rational};

use crate::{Error, Result};

/// Values of every `Li(c; pattern)` of depth at most four and weight up to a
/// bound, at one `z`.
pub struct LiTable {
    prec: u32,
    values: HashMap<Vec<u32>, Bounded>,
}

impl LiTable {
    pub fn new(pattern: PatternKind, max_weight: u32, z: &Float, target: f64) -> Result<Self> {
        Self::with_depths(pattern, 1..=4, max_weight, z, target)
    }

    pub fn with_depths(
        pattern: PatternKind,
        depths: std::ops::RangeInclusive<usize>,
        max_weight: u32,
        z: &Float,
        target: f64,
    ) -> Result<Self> {
        let mut items: Vec<(IndexWord, ZPattern)> = Vec::new();
        for n in depths {
            for w in n as u32..=max_weight {
                for c in comps(w, n)? {
                    items.push((c, pattern.pattern(n)));
                }
            }
        }
        let vals = eval_li_many(&items, z, target)?;
        Ok(LiTable {
            prec: z.prec(),
            values: items
                .into_iter()
                .zip(vals)
                .map(|((w, _), v)| (w.parts().to_vec(), v))
                .collect(),
        })
    }

    pub fn get(&self, parts: &[u32]) -> Result<&Bounded> {
        self.values
            .get(parts)
            .ok_or_else(|| Error::Usage(format!("no table entry for {parts:?}")))
    }

    /// `sum_{|c| = weight} prod_j args_j^{c_j - 1} Li(c)` over compositions
    /// into `args.len()` parts.
    pub fn param(&self, args: &[Rational], weight: u32) -> Result<Bounded> {
        let mut value = Float::with_val(self.prec, 0);
        let mut err = 0.0;
        for c in comps(weight, args.len())? {
            let m = monomial(args, &c);
            if m == 0 {
                continue;
            }
            let v = self.get(c.parts())?;
            err += m.to_f64().abs() * v.err;
            value += Float::with_val(self.prec, &m) * &v.value;
        }
        Ok(Bounded { value, err })
    }

    /// `sum over weight splits of prod_f param(args_f, w_f)`, each factor
    /// weight at least its depth.
    pub fn product(&self, factors: &[Vec<Rational>], weight: u32) -> Result<Bounded> {
        let mins: Vec<u32> = factors.iter().map(|a| a.len() as u32).collect();
        let mut total = zero(self.prec);
        for split in splits(weight, &mins) {
            let mut p = one(self.prec);
            for (args, &w) in factors.iter().zip(&split) {
                p = mul(&p, &self.param(args, w)?);
            }
            total = add(&total, &p, 1);
        }
        Ok(total)
    }
}

pub fn comps(weight: u32, depth: usize) -> Result<Vec<IndexWord>> {
    compositions(weight, depth, false).map_err(|e| Error::Usage(e.to_string()))
}

/// Tuples `w` with `sum w = total` and `w_j >= mins_j`.
pub fn splits(total: u32, mins: &[u32]) -> Vec<Vec<u32>> {
    let Some((&first, rest)) = mins.split_first() else {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    };
    let rest_min: u32 = rest.iter().sum();
    let mut out = Vec::new();
    for w in first..=total.saturating_sub(rest_min) {
        for mut tail in splits(total - w, rest) {
            tail.insert(0, w);
            out.push(tail);
        }
    }
    out
}

pub fn zero(prec: u32) -> Bounded {
    Bounded {
        value: Float::with_val(prec, 0),
        err: 0.0,
    }
}

pub fn one(prec: u32) -> Bounded {
    Bounded {
        value: Float::with_val(prec, 1),
        err: 0.0,
    }
}

pub fn mul(a: &Bounded, b: &Bounded) -> Bounded {
    let av = a.value.to_f64().abs();
    let bv = b.value.to_f64().abs();
    Bounded {
        value: Float::with_val(a.value.prec(), &a.value * &b.value),
        err: av * b.err + bv * a.err + a.err * b.err,
    }
}

/// `a + k b`.
pub fn add(a: &Bounded, b: &Bounded, k: i64) -> Bounded {
    Bounded {
        value: Float::with_val(a.value.prec(), &a.value + Float::with_val(a.value.prec(), &b.value * k)),
        err: a.err + (k.unsigned_abs() as f64) * b.err,
    }
}

pub fn abs_diff(a: &Float, b: &Float) -> f64 {
    Float::with_val(a.prec().max(b.prec()), a - b).abs().to_f64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_counts() {
        assert_eq!(splits(5, &[2, 1]), vec![vec![2, 3], vec![3, 2], vec![4, 1]]);
        assert_eq!(splits(4, &[1, 1, 1, 1]).len(), 1);
        assert!(splits(3, &[2, 2]).is_empty());
        // compositions of 7 into 3 parts
        assert_eq!(splits(7, &[1, 1, 1]).len(), 15);
    }

    #[test]
    fn param_sum_with_one_nonzero_argument() {
        let z = Float::with_val(160, 0.5);
        let t = LiTable::new(PatternKind::Flat, 6, &z, 1e-35).unwrap();
        let x = [1, 0, 0, 0].map(Rational::from);
        let s = t.param(&x, 6).unwrap();
        let want = &t.get(&[3, 1, 1, 1]).unwrap().value;
        assert!(abs_diff(&s.value, want) < 1e-35);
    }
}
