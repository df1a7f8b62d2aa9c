//! Identities between parameterized sums of multiple polylogarithms at
//! `0 < z < 1`: the cyclic harmonic identity and the shuffle identities.

use indexword::IndexWord;
use numeric::{eval_li, Bounded, Float, PatternKind, Rational};
use pfrac::{stated_rhs, verify_prop22_expansions, verify_substitutions, Linear};
use polyring::complete_homogeneous;
use qshuffle::{cyclic_param_blocks, cyclic_rhs_pattern, verify_cyclic_identity, verify_cyclic_param_identity};

use crate::anchors::{PROP21, PROP22};
use crate::context::{point_string, random_point, Verifier};
use crate::eval::{add, mul, LiTable};
use crate::report::{timed, CheckResult};
use crate::{Error, Result};

/// Exact checks: the per-index identity over formal exponents and the
/// parameterized identity at each weight.
pub fn prop21_symbolic(max_weight: u32) -> Vec<CheckResult> {
    let mut out = vec![timed(|| CheckResult::from_check(verify_cyclic_identity(), PROP21))];
    for w in 4..=max_weight {
        out.push(timed(|| match verify_cyclic_param_identity(w) {
            Ok(c) => CheckResult::from_check(c, PROP21),
            Err(e) => CheckResult::error(format!("prop21.w{w}"), PROP21, e),
        }));
    }
    out
}

/// Left side of the parameterized cyclic identity minus
/// `h_{l-4}(x) Li_l(z^4)`, evaluated from a table of ladder values.
pub fn prop21_residual(table: &LiTable, x: &[Rational; 4], l: u32, z: &Float, target: f64) -> Result<Bounded> {
    let prec = z.prec();
    let mut lhs = crate::eval::zero(prec);
    for block in cyclic_param_blocks() {
        for sigma in block.perms.iter() {
            let factors: Vec<Vec<Rational>> = block
                .factors
                .iter()
                .map(|f| f.vars.iter().map(|&v| x[sigma.apply(v) - 1].clone()).collect())
                .collect();
            lhs = add(&lhs, &table.product(&factors, l)?, block.sign as i64);
        }
    }
    let li = eval_li(&word(&[l])?, &cyclic_rhs_pattern(), z, target)?;
    let h = Bounded {
        value: Float::with_val(prec, &complete_homogeneous(l - 4).substitute(x)),
        err: 0.0,
    };
    Ok(add(&lhs, &mul(&h, &li), -1))
}

fn word(p: &[u32]) -> Result<IndexWord> {
    IndexWord::new(p.to_vec()).map_err(|e| Error::Usage(e.to_string()))
}

fn z_label(z: f64) -> String {
    format!("{z}")
}

/// Numeric residuals of the cyclic identity for each weight at one `z`.
pub fn prop21_numeric(v: &Verifier, weights: std::ops::RangeInclusive<u32>, zf: f64) -> Vec<CheckResult> {
    let z = Float::with_val(v.prec(), zf);
    let table = match LiTable::new(PatternKind::Ladder, *weights.end(), &z, v.target()) {
        Ok(t) => t,
        Err(e) => return vec![CheckResult::error(format!("prop21.numeric.z{}", z_label(zf)), PROP21, e)],
    };
    weights
        .map(|l| {
            let id = format!("prop21.w{l}.z{}", z_label(zf));
            timed(|| {
                let mut rng = v.rng(0x2100 + l as u64 + (zf * 1e6) as u64);
                let x = random_point(&mut rng);
                match prop21_residual(&table, &x, l, &z, v.target()) {
                    Ok(r) => CheckResult::numeric(id, PROP21, r.value.to_f64().abs(), v.config.tol)
                        .param("weight", l)
                        .param("z", zf)
                        .param("x", point_string(&x))
                        .param("err_bound", r.err)
                        .seed(v.config.seed),
                    Err(e) => CheckResult::error(id, PROP21, e),
                }
            })
        })
        .collect()
}

/// Exact partial fraction checks.
pub fn prop22_symbolic(max_weight: u32, exact_max_weight: u32, seed: u64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let start = std::time::Instant::now();
    match verify_prop22_expansions(max_weight, exact_max_weight, seed) {
        Ok(cs) => out.extend(cs.into_iter().map(|c| CheckResult::from_check(c, PROP22).seed(seed))),
        Err(e) => out.push(CheckResult::error("prop22.expansions", PROP22, e)),
    }
    let ms = start.elapsed().as_millis() as u64 / out.len().max(1) as u64;
    for r in out.iter_mut() {
        r.elapsed_ms = ms;
    }
    out.extend(verify_substitutions().into_iter().map(|c| timed(|| CheckResult::from_check(c, PROP22))));
    out
}

/// The four product identities, by name.
pub const PROP22_PARTS: [&str; 4] = ["i", "ii", "iii", "iv"];

/// Arguments of the left-hand factors: `T(x1,x2,x3) S(x4)`, `D(x1,x2) D(x3,x4)`,
/// `D(x1,x2) S(x3) S(x4)` and `S(x1) S(x2) S(x3) S(x4)`.
fn prop22_factors(part: &str, x: &[Rational; 4]) -> Option<Vec<Vec<Rational>>> {
    let groups: &[&[usize]] = match part {
        "i" => &[&[0, 1, 2], &[3]],
        "ii" => &[&[0, 1], &[2, 3]],
        "iii" => &[&[0, 1], &[2], &[3]],
        "iv" => &[&[0], &[1], &[2], &[3]],
        _ => return None,
    };
    Some(groups.iter().map(|g| g.iter().map(|&j| x[j].clone()).collect()).collect())
}

fn apply_linear(f: &Linear, x: &[Rational; 4]) -> Rational {
    let mut s = Rational::new();
    for (c, xi) in f.iter().zip(x) {
        s += Rational::from(xi * *c);
    }
    s
}

/// Product side minus the stated quadruple sums, flat pattern.
pub fn prop22_residual(table: &LiTable, part: &str, x: &[Rational; 4], l: u32) -> Result<Bounded> {
    let factors = prop22_factors(part, x).ok_or_else(|| Error::Usage(format!("unknown part {part}")))?;
    let lhs = table.product(&factors, l)?;
    let tuples = stated_rhs(part).ok_or_else(|| Error::Usage(format!("unknown part {part}")))?;
    let mut total = lhs;
    for (t, k) in tuples {
        let args: Vec<Rational> = t.iter().map(|f| apply_linear(f, x)).collect();
        total = add(&total, &table.param(&args, l)?, -k);
    }
    Ok(total)
}

pub fn prop22_numeric(v: &Verifier, weights: std::ops::RangeInclusive<u32>, zf: f64) -> Vec<CheckResult> {
    let z = Float::with_val(v.prec(), zf);
    let table = match LiTable::new(PatternKind::Flat, *weights.end(), &z, v.target()) {
        Ok(t) => t,
        Err(e) => return vec![CheckResult::error(format!("prop22.numeric.z{}", z_label(zf)), PROP22, e)],
    };
    let mut out = Vec::new();
    for l in weights {
        for (k, part) in PROP22_PARTS.iter().enumerate() {
            let id = format!("prop22.{part}.w{l}.z{}", z_label(zf));
            out.push(timed(|| {
                let mut rng = v.rng(0x2200 + 16 * l as u64 + k as u64 + (zf * 1e6) as u64);
                let x = random_point(&mut rng);
                match prop22_residual(&table, part, &x, l) {
                    Ok(r) => CheckResult::numeric(id, PROP22, r.value.to_f64().abs(), v.config.tol)
                        .param("weight", l)
                        .param("z", zf)
                        .param("x", point_string(&x))
                        .param("err_bound", r.err)
                        .seed(v.config.seed),
                    Err(e) => CheckResult::error(id, PROP22, e),
                }
            }));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_hold_at_small_weight() {
        let z = Float::with_val(160, 0.6);
        let x = [(1, 2), (-1, 3), (2, 1), (3, 4)].map(Rational::from);
        let lad = LiTable::new(PatternKind::Ladder, 6, &z, 1e-35).unwrap();
        let flat = LiTable::new(PatternKind::Flat, 6, &z, 1e-35).unwrap();
        for l in 4..=6 {
            let r = prop21_residual(&lad, &x, l, &z, 1e-35).unwrap();
            assert!(r.value.to_f64().abs() < 1e-30, "prop21 w{l}: {}", r.value);
            for part in PROP22_PARTS {
                let r = prop22_residual(&flat, part, &x, l).unwrap();
                assert!(r.value.to_f64().abs() < 1e-30, "prop22 {part} w{l}: {}", r.value);
            }
        }
    }

    #[test]
    fn wrong_pattern_breaks_the_shuffle_identity() {
        // evaluating the flat identity with ladder values must fail
        let z = Float::with_val(160, 0.6);
        let x = [1, 1, 1, 1].map(Rational::from);
        let lad = LiTable::new(PatternKind::Ladder, 5, &z, 1e-35).unwrap();
        let r = prop22_residual(&lad, "iv", &x, 5).unwrap();
        assert!(r.value.to_f64().abs() > 1e-6);
    }
}
