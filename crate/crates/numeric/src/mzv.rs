use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use indexword::IndexWord;
use rug::{Float, Rational};

use crate::cache::MzvCache;
use crate::sweep::{sweep, SweepWord};
use crate::{Error, Result};

/// A (possibly regularized) multiple zeta value with an absolute error bound.
#[derive(Clone, Debug)]
pub struct MzvValue {
    pub index: IndexWord,
    pub value: Float,
    pub err: f64,
    pub regularized: bool,
}

/// Binary word in `x0` (false) and `x1` (true); `(2, 1)` is `x0 x1 x1`.
type Word = Vec<bool>;

fn to_word(parts: &[u32]) -> Word {
    let mut w = Vec::new();
    for &p in parts {
        w.extend(std::iter::repeat(false).take(p as usize - 1));
        w.push(true);
    }
    w
}

fn to_parts(w: &[bool]) -> Vec<u32> {
    let mut parts = Vec::new();
    let mut run = 1;
    for &b in w {
        if b {
            parts.push(run);
            run = 1;
        } else {
            run += 1;
        }
    }
    parts
}

fn dual(w: &[bool]) -> Word {
    w.iter().rev().map(|b| !b).collect()
}

fn precision_for(target_err: f64) -> u32 {
    let bits = (-target_err.log2()).ceil().max(0.0) as u32;
    (bits + 32).max(64)
}

/// `zeta(w)` for admissible `w` by Hoelder convolution at `1/2`:
/// `zeta(w) = sum_{w = uv} lambda(dual(u)) lambda(v)` with
/// `lambda(s) = Li_s(1/2, 1, ..., 1)`, every series converging like `2^{-m}`.
pub fn eval_mzv(w: &IndexWord, target_err: f64) -> Result<MzvValue> {
    if !w.is_admissible() {
        return Err(Error::NotAdmissible(w.to_string()));
    }
    let prec = precision_for(target_err);
    let word = to_word(w.parts());
    let mut lam: Vec<SweepWord> = Vec::new();
    let mut slot: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut pairs = Vec::new();
    for j in 0..=word.len() {
        let mut ids = [None, None];
        for (k, part) in [dual(&word[..j]), word[j..].to_vec()].iter().enumerate() {
            if part.is_empty() {
                continue;
            }
            let p = to_parts(part);
            let id = *slot.entry(p.clone()).or_insert_with(|| {
                lam.push(SweepWord::flat(&p));
                lam.len() - 1
            });
            ids[k] = Some(id);
        }
        pairs.push(ids);
    }
    let half = Float::with_val(prec, 0.5);
    let inner = target_err / (4.0 * (word.len() + 1) as f64);
    let vals = sweep(&lam, &half, inner, 1 << 24)?;
    let mut total = Float::with_val(prec, 0);
    let mut err = 0.0;
    for ids in pairs {
        let get = |i: Option<usize>| match i {
            Some(i) => (vals[i].value.clone(), vals[i].err),
            None => (Float::with_val(prec, 1), 0.0),
        };
        let (a, ea) = get(ids[0]);
        let (b, eb) = get(ids[1]);
        err += a.to_f64().abs() * eb + b.to_f64().abs() * ea + ea * eb;
        total += a * b;
    }
    Ok(MzvValue {
        index: w.clone(),
        value: total,
        err,
        regularized: false,
    })
}

/// `zeta*(w)` as an exact rational combination of admissible indices
/// (the empty index standing for 1).
///
/// With `T = 0` the regularized values are multiplicative for the shuffle
/// product and vanish on `x1`, so `x1 sh x1^{k-1} v = 0` gives
/// `k zeta*(x1^k v) = -sum_p zeta*(x1^{k-1} v_{<=p} x1 v_{>p})`.
pub fn star_combination(w: &IndexWord) -> BTreeMap<Vec<u32>, Rational> {
    let mut memo = HashMap::new();
    regularize(&to_word(w.parts()), &mut memo)
}

fn regularize(w: &Word, memo: &mut HashMap<Word, BTreeMap<Vec<u32>, Rational>>) -> BTreeMap<Vec<u32>, Rational> {
    if let Some(r) = memo.get(w) {
        return r.clone();
    }
    let k = w.iter().take_while(|&&b| b).count();
    let mut out = BTreeMap::new();
    if k == 0 {
        out.insert(to_parts(w), Rational::from(1));
    } else if k < w.len() {
        let v = &w[k..];
        let scale = Rational::from((-1, k as i64));
        for p in 1..=v.len() {
            let mut u: Word = vec![true; k - 1];
            u.extend_from_slice(&v[..p]);
            u.push(true);
            u.extend_from_slice(&v[p..]);
            for (idx, c) in regularize(&u, memo) {
                let e = out.entry(idx).or_insert_with(Rational::new);
                *e += c * &scale;
            }
        }
        out.retain(|_, c| *c != 0);
    }
    memo.insert(w.clone(), out.clone());
    out
}

/// Regularized value: the constant term of `Li(w; z, ..., z)` as `z -> 1`.
pub fn star_value(w: &IndexWord, target_err: f64) -> Result<MzvValue> {
    Zeta::new(precision_for(target_err).saturating_sub(32)).star(w)
}

/// Evaluator for `zeta` and `zeta*` at fixed precision, with memoization and
/// an optional persistent cache.
pub struct Zeta {
    prec_bits: u32,
    target: f64,
    memo: Mutex<HashMap<(Vec<u32>, bool), MzvValue>>,
    cache: Option<Arc<MzvCache>>,
}

impl Zeta {
    /// Values accurate to about `2^{-prec_bits}`.
    pub fn new(prec_bits: u32) -> Self {
        Zeta {
            prec_bits,
            target: 2f64.powi(-(prec_bits as i32)),
            memo: Mutex::new(HashMap::new()),
            cache: None,
        }
    }

    pub fn with_cache(mut self, cache: Arc<MzvCache>) -> Self {
        self.cache = Some(cache);
        self
    }

    pub fn prec_bits(&self) -> u32 {
        self.prec_bits
    }

    pub fn target(&self) -> f64 {
        self.target
    }

    fn lookup(&self, key: &(Vec<u32>, bool)) -> Option<MzvValue> {
        if let Some(v) = self.memo.lock().expect("memo lock").get(key) {
            return Some(v.clone());
        }
        let hit = self.cache.as_ref()?.get(&key.0, key.1, self.target, self.prec_bits)?;
        self.memo.lock().expect("memo lock").insert(key.clone(), hit.clone());
        Some(hit)
    }

    fn store(&self, key: (Vec<u32>, bool), v: &MzvValue) -> Result<()> {
        if let Some(c) = &self.cache {
            c.put(v, self.prec_bits)?;
        }
        self.memo.lock().expect("memo lock").insert(key, v.clone());
        Ok(())
    }

    pub fn zeta(&self, w: &IndexWord) -> Result<MzvValue> {
        let key = (w.parts().to_vec(), false);
        if let Some(v) = self.lookup(&key) {
            return Ok(v);
        }
        let v = eval_mzv(w, self.target)?;
        self.store(key, &v)?;
        Ok(v)
    }

    pub fn zeta_of(&self, parts: &[u32]) -> Result<MzvValue> {
        let w = IndexWord::new(parts.to_vec()).map_err(|e| Error::InvalidArguments(e.to_string()))?;
        self.zeta(&w)
    }

    pub fn star(&self, w: &IndexWord) -> Result<MzvValue> {
        if w.is_admissible() {
            let mut v = self.zeta(w)?;
            v.regularized = true;
            return Ok(v);
        }
        let key = (w.parts().to_vec(), true);
        if let Some(v) = self.lookup(&key) {
            return Ok(v);
        }
        let prec = precision_for(self.target);
        let mut value = Float::with_val(prec, 0);
        let mut err = 0.0;
        for (idx, c) in star_combination(w) {
            let cf = Float::with_val(prec, &c);
            if idx.is_empty() {
                value += cf;
                continue;
            }
            let z = self.zeta_of(&idx)?;
            err += z.err * cf.to_f64().abs();
            value += cf * &z.value;
        }
        let v = MzvValue {
            index: w.clone(),
            value,
            err,
            regularized: true,
        };
        self.store(key, &v)?;
        Ok(v)
    }

    pub fn star_of(&self, parts: &[u32]) -> Result<MzvValue> {
        let w = IndexWord::new(parts.to_vec()).map_err(|e| Error::InvalidArguments(e.to_string()))?;
        self.star(&w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_round_trip() {
        for p in [vec![2, 1], vec![1, 3, 1], vec![4]] {
            assert_eq!(to_parts(&to_word(&p)), p);
        }
        // x0 x0 x1 -> x0 x1 x1
        assert_eq!(to_parts(&dual(&to_word(&[3]))), vec![2, 1]);
    }

    #[test]
    fn regularized_simple_cases() {
        let w = |p: &[u32]| IndexWord::new(p.to_vec()).unwrap();
        assert!(star_combination(&w(&[1, 1, 1])).is_empty());
        let c = star_combination(&w(&[1, 2]));
        assert_eq!(c.len(), 1);
        assert_eq!(c[&vec![2, 1]], Rational::from(-2));
    }
}
