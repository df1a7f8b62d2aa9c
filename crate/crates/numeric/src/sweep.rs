use std::collections::HashMap;

use rug::{Assign, Float};

use crate::{Error, Result};

/// A nested sum `sum_{m_1 > ... > m_n > 0} prod_j z^{d_j m_j} / m_j^{l_j}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SweepWord {
    pub exps: Vec<u32>,
    /// Per-letter `z`-power increments; the first must be positive.
    pub incs: Vec<u32>,
}

impl SweepWord {
    pub fn new(exps: Vec<u32>, incs: Vec<u32>) -> Result<Self> {
        if exps.len() != incs.len() || exps.is_empty() {
            return Err(Error::InvalidArguments(format!("{exps:?} with {incs:?}")));
        }
        if incs[0] == 0 || exps.contains(&0) {
            return Err(Error::InvalidArguments(format!("{exps:?} with {incs:?}")));
        }
        Ok(SweepWord { exps, incs })
    }

    /// `Li(l; z, ..., z)`: only the outermost variable carries `z`.
    pub fn flat(exps: &[u32]) -> Self {
        let mut incs = vec![0; exps.len()];
        incs[0] = 1;
        SweepWord {
            exps: exps.to_vec(),
            incs,
        }
    }
}

/// A truncated value with an absolute error bound.
#[derive(Clone, Debug)]
pub struct Bounded {
    pub value: Float,
    pub err: f64,
}

/// Number of outer terms after which the tail
/// `sum_{m > M} z^m (1 + ln m)^{n-1}` drops below `target`.
///
/// Inner sums are bounded by `H_m^{n-1}`, and the ratio of consecutive
/// bound terms is at most `z e^{(n-1)/m}`.
pub fn terms_needed(z: f64, depth: usize, target: f64, max_terms: u64) -> Result<(u64, f64)> {
    let lnz = z.ln();
    let k = depth.saturating_sub(1) as f64;
    let bound = |m: u64| -> Option<f64> {
        let m1 = (m + 1) as f64;
        let ratio_ln = lnz + k / m1;
        if ratio_ln >= 0.0 {
            return None;
        }
        let ln_b = m1 * lnz + k * (1.0 + m1.ln()).ln() - (-ratio_ln.exp_m1()).ln();
        Some(ln_b.exp())
    };
    let mut m = 16u64;
    loop {
        if let Some(b) = bound(m) {
            if b < target {
                // back off by bisection to the smallest doubling-step value
                let (mut lo, mut hi) = (m / 2, m);
                while hi - lo > 1 + hi / 64 {
                    let mid = (lo + hi) / 2;
                    match bound(mid) {
                        Some(b) if b < target => hi = mid,
                        _ => lo = mid,
                    }
                }
                return Ok((hi, bound(hi).unwrap_or(target)));
            }
        }
        if m >= max_terms {
            return Err(Error::PrecisionInfeasible(format!(
                "tail at z = {z} needs more than {max_terms} terms"
            )));
        }
        m = (m * 2).min(max_terms);
    }
}

/// Evaluates many nested sums at one `z` in a single pass over `m`.
///
/// Words are stored as a trie of suffixes; a suffix node holds
/// `F(m) = sum_{m > m_j > ... > m_n > 0} ...`, updated from its child's
/// previous value, so nodes are visited longest suffix first.
pub fn sweep(words: &[SweepWord], z: &Float, target: f64, max_terms: u64) -> Result<Vec<Bounded>> {
    let prec = z.prec();
    let zf = z.to_f64();
    if !(zf > 0.0 && zf < 1.0) {
        return Err(Error::InvalidArguments(format!("z = {zf} not in (0, 1)")));
    }
    let depth = words.iter().map(|w| w.exps.len()).max().unwrap_or(0);
    if depth == 0 {
        return Ok(Vec::new());
    }
    let (m_max, tail) = terms_needed(zf, depth, target, max_terms)?;

    // node 0 is the empty suffix
    let mut index: HashMap<(u32, u32, usize), usize> = HashMap::new();
    let mut nodes: Vec<(u32, u32, usize, usize)> = vec![(0, 0, 0, 0)]; // (l, d, child, len)
    let mut heads = Vec::with_capacity(words.len());
    for w in words {
        let mut child = 0;
        for j in (0..w.exps.len()).rev() {
            let key = (w.exps[j], w.incs[j], child);
            let len = nodes[child].3 + 1;
            child = *index.entry(key).or_insert_with(|| {
                nodes.push((key.0, key.1, key.2, len));
                nodes.len() - 1
            });
        }
        heads.push(child);
    }
    let mut order: Vec<usize> = (1..nodes.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(nodes[i].3));

    let l_max = nodes.iter().map(|n| n.0).max().unwrap_or(0) as usize;
    let d_max = nodes.iter().map(|n| n.1).max().unwrap_or(0) as usize;
    let mut pairs: Vec<(u32, u32)> = nodes[1..].iter().map(|n| (n.0, n.1)).collect();
    pairs.sort_unstable();
    pairs.dedup();
    let pair_at: HashMap<(u32, u32), usize> = pairs.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let node_pair: Vec<usize> = nodes
        .iter()
        .map(|n| pair_at.get(&(n.0, n.1)).copied().unwrap_or(0))
        .collect();

    let new = || Float::new(prec);
    let mut f: Vec<Float> = (0..nodes.len()).map(|_| new()).collect();
    f[0].assign(1);
    let mut inv = vec![new(); l_max + 1];
    let mut zp = vec![new(); d_max + 1];
    let mut zm = new();
    zm.assign(1);
    let mut term = vec![new(); pairs.len()];
    let mut tmp = new();
    inv[0].assign(1);
    zp[0].assign(1);

    for m in 1..=m_max {
        zm *= z;
        tmp.assign(m);
        inv[1].assign(tmp.recip_ref());
        for l in 2..=l_max {
            let (a, b) = inv.split_at_mut(l);
            b[0].assign(&a[l - 1] * &a[1]);
        }
        zp[1].assign(&zm);
        for d in 2..=d_max {
            let (a, b) = zp.split_at_mut(d);
            b[0].assign(&a[d - 1] * &zm);
        }
        for (t, &(l, d)) in term.iter_mut().zip(&pairs) {
            t.assign(&inv[l as usize] * &zp[d as usize]);
        }
        for &i in &order {
            let child = nodes[i].2;
            tmp.assign(&term[node_pair[i]] * &f[child]);
            f[i] += &tmp;
        }
    }

    let rounding = (m_max as f64) * (depth as f64 + 2.0) * 2f64.powi(1 - prec as i32);
    Ok(heads
        .iter()
        .map(|&h| Bounded {
            err: tail + rounding * (1.0 + f[h].to_f64().abs()),
            value: f[h].clone(),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_two() {
        let z = Float::with_val(128, 0.5);
        let v = sweep(&[SweepWord::flat(&[1])], &z, 1e-30, 1 << 20).unwrap();
        let want = Float::with_val(128, 2).ln();
        assert!(Float::with_val(128, &v[0].value - &want).abs().to_f64() < 1e-30);
        assert!(v[0].err < 1e-29);
    }

    #[test]
    fn shared_suffixes_do_not_interfere() {
        let z = Float::with_val(128, 0.5);
        let words = [SweepWord::flat(&[1, 1]), SweepWord::flat(&[2, 1]), SweepWord::flat(&[1])];
        let v = sweep(&words, &z, 1e-30, 1 << 20).unwrap();
        let l2 = Float::with_val(128, 2).ln();
        // Li(1,1; z,z) = Li1(z)^2 / 2
        let want = Float::with_val(128, &l2 * &l2) / 2;
        assert!(Float::with_val(128, &v[0].value - &want).abs().to_f64() < 1e-30);
        assert!(Float::with_val(128, &v[2].value - &l2).abs().to_f64() < 1e-30);
    }

    #[test]
    fn term_count_grows_near_one() {
        let (a, _) = terms_needed(0.5, 2, 1e-20, 1 << 30).unwrap();
        let (b, _) = terms_needed(0.99, 2, 1e-20, 1 << 30).unwrap();
        assert!(a < b);
        assert!(terms_needed(0.999999, 4, 1e-30, 1000).is_err());
    }
}
