use rug::{Assign, Float};

use crate::{Error, Result};

/// Sample points for constant-term extraction, given as `eps = 1 - z`.
///
/// The model is `f(z) = sum_{i <= orders, j <= degree} c_ij eps^i T^j`
/// with `T = -log(1 - z)`, so the `O((1-z) log^J)` remainder is fitted
/// rather than waited out and moderate `z` suffice.
#[derive(Clone, Debug)]
pub struct CtSchedule {
    pub eps: Vec<f64>,
    pub orders: usize,
    /// Leave-one-out spread above which the fit is rejected.
    pub max_residual: f64,
    pub prec: u32,
}

impl Default for CtSchedule {
    fn default() -> Self {
        CtSchedule::geometric(3e-2, 1e-3, 40, 5)
    }
}

impl CtSchedule {
    /// `count` points from `eps_hi` down to `eps_lo`, evenly spaced in `log eps`.
    pub fn geometric(eps_hi: f64, eps_lo: f64, count: usize, orders: usize) -> Self {
        let r = (eps_lo / eps_hi).powf(1.0 / (count.max(2) - 1) as f64);
        CtSchedule {
            eps: (0..count).map(|k| eps_hi * r.powi(k as i32)).collect(),
            orders,
            max_residual: 1e-3,
            prec: 128,
        }
    }

    pub fn z_values(&self) -> Vec<Float> {
        self.eps
            .iter()
            .map(|&e| Float::with_val(self.prec, 1) - Float::with_val(self.prec, e))
            .collect()
    }
}

/// A fitted asymptotic polynomial.
#[derive(Clone, Debug)]
pub struct CtFit {
    pub z: Vec<f64>,
    /// Coefficients of `P(T)`, constant first.
    pub poly: Vec<Float>,
    pub constant: Float,
    /// Largest change of the constant when one sample is left out.
    pub residual: f64,
}

/// Fits `f` on the schedule and returns `P(0)`.
pub fn ct_extract(
    f: impl Fn(&Float) -> Result<Float>,
    degree_hint: usize,
    schedule: &CtSchedule,
) -> Result<CtFit> {
    let values = schedule
        .z_values()
        .iter()
        .map(|z| f(z).map(|v| vec![v]))
        .collect::<Result<Vec<_>>>()?;
    Ok(ct_fit_many(&values, degree_hint, schedule)?.remove(0))
}

/// Fits several functions sampled on the same schedule: `values[k][f]` is
/// function `f` at the `k`-th point.
pub fn ct_fit_many(values: &[Vec<Float>], degree: usize, schedule: &CtSchedule) -> Result<Vec<CtFit>> {
    let n = schedule.eps.len();
    let cols = (schedule.orders + 1) * (degree + 1);
    if values.len() != n || n < cols + 2 {
        return Err(Error::InvalidArguments(format!(
            "{} samples for {cols} unknowns",
            values.len()
        )));
    }
    let prec = 2 * schedule.prec;
    let rows: Vec<Vec<Float>> = schedule.eps.iter().map(|&e| basis(e, schedule, degree, prec)).collect();
    let nf = values.first().map_or(0, Vec::len);
    let rhs = |skip: Option<usize>| -> Vec<Vec<Float>> {
        (0..nf)
            .map(|f| {
                (0..n)
                    .filter(|&k| Some(k) != skip)
                    .map(|k| Float::with_val(prec, &values[k][f]))
                    .collect()
            })
            .collect()
    };
    let keep = |skip: Option<usize>| -> Vec<Vec<Float>> {
        (0..n).filter(|&k| Some(k) != skip).map(|k| rows[k].clone()).collect()
    };
    let full = lstsq(keep(None), rhs(None))?;
    let mut spread = vec![0f64; nf];
    for k in 0..n {
        let loo = lstsq(keep(Some(k)), rhs(Some(k)))?;
        for f in 0..nf {
            let d = Float::with_val(prec, &loo[f][0] - &full[f][0]).abs().to_f64();
            spread[f] = spread[f].max(d);
        }
    }
    let z: Vec<f64> = schedule.eps.iter().map(|e| 1.0 - e).collect();
    let mut out = Vec::with_capacity(nf);
    for (f, coeffs) in full.into_iter().enumerate() {
        if !(spread[f] <= schedule.max_residual) {
            return Err(Error::IllConditioned(format!(
                "leave-one-out spread {:e} for function {f}",
                spread[f]
            )));
        }
        // column (i = 0, j) sits at index j
        let poly: Vec<Float> = coeffs[..=degree].iter().map(|c| Float::with_val(schedule.prec, c)).collect();
        out.push(CtFit {
            z: z.clone(),
            constant: poly[0].clone(),
            poly,
            residual: spread[f],
        });
    }
    Ok(out)
}

fn basis(eps: f64, schedule: &CtSchedule, degree: usize, prec: u32) -> Vec<Float> {
    let e = Float::with_val(prec, eps);
    let t = Float::with_val(prec, -e.clone().ln());
    let mut row = Vec::with_capacity((schedule.orders + 1) * (degree + 1));
    let mut ei = Float::with_val(prec, 1);
    for _ in 0..=schedule.orders {
        let mut tj = ei.clone();
        for _ in 0..=degree {
            row.push(tj.clone());
            tj *= &t;
        }
        ei *= &e;
    }
    row
}

/// Least squares `min |A c - b|` for several right-hand sides, by
/// Householder QR on column-scaled `A`.
fn lstsq(mut a: Vec<Vec<Float>>, mut bs: Vec<Vec<Float>>) -> Result<Vec<Vec<Float>>> {
    let n = a.first().map_or(0, Vec::len);
    let prec = a[0][0].prec();
    let mut scale = Vec::with_capacity(n);
    for j in 0..n {
        let mut s = Float::with_val(prec, 0);
        for row in &a {
            let v = Float::with_val(prec, row[j].abs_ref());
            if v > s {
                s = v;
            }
        }
        if s == 0 {
            return Err(Error::IllConditioned(format!("column {j} vanishes")));
        }
        for row in a.iter_mut() {
            row[j] /= &s;
        }
        scale.push(s);
    }
    let mut tmp = Float::new(prec);
    for k in 0..n {
        let mut norm = Float::with_val(prec, 0);
        for row in a.iter().skip(k) {
            tmp.assign(row[k].square_ref());
            norm += &tmp;
        }
        let norm = norm.sqrt();
        if norm == 0 {
            return Err(Error::IllConditioned("rank deficient design".into()));
        }
        let alpha = if a[k][k] > 0 { -norm } else { norm };
        // v = x - alpha e_k
        let mut v: Vec<Float> = a.iter().skip(k).map(|row| row[k].clone()).collect();
        v[0] -= &alpha;
        let mut vv = Float::with_val(prec, 0);
        for x in &v {
            tmp.assign(x.square_ref());
            vv += &tmp;
        }
        if vv == 0 {
            continue;
        }
        for j in k..n {
            let mut dot = Float::with_val(prec, 0);
            for (i, x) in v.iter().enumerate() {
                tmp.assign(x * &a[k + i][j]);
                dot += &tmp;
            }
            dot *= 2;
            dot /= &vv;
            for (i, x) in v.iter().enumerate() {
                tmp.assign(x * &dot);
                a[k + i][j] -= &tmp;
            }
        }
        for b in bs.iter_mut() {
            let mut dot = Float::with_val(prec, 0);
            for (i, x) in v.iter().enumerate() {
                tmp.assign(x * &b[k + i]);
                dot += &tmp;
            }
            dot *= 2;
            dot /= &vv;
            for (i, x) in v.iter().enumerate() {
                tmp.assign(x * &dot);
                b[k + i] -= &tmp;
            }
        }
    }
    let mut out = Vec::with_capacity(bs.len());
    for b in &bs {
        let mut c = vec![Float::with_val(prec, 0); n];
        for k in (0..n).rev() {
            let mut s = b[k].clone();
            for j in k + 1..n {
                tmp.assign(&a[k][j] * &c[j]);
                s -= &tmp;
            }
            if a[k][k] == 0 {
                return Err(Error::IllConditioned("singular triangular factor".into()));
            }
            c[k] = s / &a[k][k];
        }
        for (ck, sk) in c.iter_mut().zip(&scale) {
            *ck /= sk;
        }
        out.push(c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_a_planted_expansion() {
        // f = 2 - T + 3 T^2 + eps (1 + T) - eps^2 T^2
        let s = CtSchedule::geometric(3e-2, 1e-3, 20, 2);
        let fit = ct_extract(
            |z| {
                let e = Float::with_val(256, 1) - z;
                let t = Float::with_val(256, -e.clone().ln());
                let t2 = Float::with_val(256, t.square_ref());
                let v = Float::with_val(256, 2) - &t + 3 * t2.clone()
                    + e.clone() * (Float::with_val(256, 1) + &t)
                    - e.clone() * &e * t2;
                Ok(v)
            },
            2,
            &s,
        )
        .unwrap();
        assert!((fit.constant.to_f64() - 2.0).abs() < 1e-20);
        assert!((fit.poly[1].to_f64() + 1.0).abs() < 1e-20);
        assert!((fit.poly[2].to_f64() - 3.0).abs() < 1e-20);
        assert!(fit.residual < 1e-20);
    }

    #[test]
    fn too_few_samples_is_an_error() {
        let s = CtSchedule::geometric(3e-2, 1e-3, 5, 2);
        assert!(ct_extract(|_| Ok(Float::new(64)), 2, &s).is_err());
    }
}
