use indexword::{compositions, IndexWord, ZPattern};
use rug::{Float, Rational};

use crate::sweep::{sweep, Bounded, SweepWord};
use crate::{Error, Result};

/// Outer-term cap for a single sweep.
pub const MAX_TERMS: u64 = 1 << 26;

fn sweep_word(w: &IndexWord, zp: &ZPattern) -> Result<SweepWord> {
    if w.depth() != zp.len() {
        return Err(Error::InvalidArguments(format!(
            "index {w} has depth {} but the pattern has {} entries",
            w.depth(),
            zp.len()
        )));
    }
    let incs = zp.increments().into_iter().map(|d| d as u32).collect();
    SweepWord::new(w.parts().to_vec(), incs)
}

/// `Li(w; z^{e_1}, ..., z^{e_n})` to within `target_err`.
pub fn eval_li(w: &IndexWord, zp: &ZPattern, z: &Float, target_err: f64) -> Result<Bounded> {
    Ok(eval_li_many(&[(w.clone(), zp.clone())], z, target_err)?.remove(0))
}

/// Several polylogarithms at the same `z` in one pass.
pub fn eval_li_many(items: &[(IndexWord, ZPattern)], z: &Float, target_err: f64) -> Result<Vec<Bounded>> {
    let words = items
        .iter()
        .map(|(w, zp)| sweep_word(w, zp))
        .collect::<Result<Vec<_>>>()?;
    sweep(&words, z, target_err, MAX_TERMS)
}

/// Depth of a parameterized sum: `S_l`, `D_l`, `T_l` or the quadruple one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParamKind {
    S,
    D,
    T,
    Q,
}

impl ParamKind {
    pub fn depth(self) -> usize {
        match self {
            ParamKind::S => 1,
            ParamKind::D => 2,
            ParamKind::T => 3,
            ParamKind::Q => 4,
        }
    }
}

/// `(z, z^2, ..., z^n)` or `(z, ..., z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternKind {
    Ladder,
    Flat,
}

impl PatternKind {
    pub fn pattern(self, n: usize) -> ZPattern {
        match self {
            PatternKind::Ladder => ZPattern::ladder(n),
            PatternKind::Flat => ZPattern::flat(n),
        }
    }
}

/// `x_1^{l_1-1} ... x_n^{l_n-1}` at rational `x`.
pub fn monomial(x: &[Rational], w: &IndexWord) -> Rational {
    let mut r = Rational::from(1);
    for (xi, &l) in x.iter().zip(w.parts()) {
        for _ in 1..l {
            r *= xi;
        }
    }
    r
}

/// `sum_{l_1+...+l_n=l} x^{l-1} Li(l_1, ..., l_n; pattern)` at `z`.
pub fn eval_param_sum(
    kind: ParamKind,
    l: u32,
    x: &[Rational],
    pattern: PatternKind,
    z: &Float,
    target_err: f64,
) -> Result<Bounded> {
    let n = kind.depth();
    if (l as usize) < n || x.len() < n {
        return Err(Error::InvalidArguments(format!("weight {l} for depth {n}")));
    }
    let ws = compositions(l, n, false).map_err(|e| Error::InvalidArguments(e.to_string()))?;
    let coeffs: Vec<Rational> = ws.iter().map(|w| monomial(x, w)).collect();
    let scale: f64 = coeffs.iter().map(|c| c.to_f64().abs()).sum::<f64>().max(1.0);
    let items: Vec<(IndexWord, ZPattern)> = ws.iter().map(|w| (w.clone(), pattern.pattern(n))).collect();
    let vals = eval_li_many(&items, z, target_err / scale)?;
    let mut value = Float::with_val(z.prec(), 0);
    let mut err = 0.0;
    for (c, v) in coeffs.iter().zip(vals) {
        err += c.to_f64().abs() * v.err;
        value += Float::with_val(z.prec(), c) * v.value;
    }
    Ok(Bounded { value, err })
}
