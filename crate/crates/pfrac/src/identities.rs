use std::collections::BTreeMap;

use indexword::compositions;
use permgroup::{named, Check, Perm, PermSet, Subscript};
use polyring::MultiPoly;

use crate::frac::{equal_as_rational_functions, prescreen, shift_expand, FracSum, FracTerm};
use crate::{Error, Result};

fn sub(s: &str) -> Subscript {
    s.parse().expect("valid subscript")
}

fn subs(list: &[&str]) -> Vec<Subscript> {
    list.iter().map(|s| sub(s)).collect()
}

/// A partial fraction expansion
/// `1 / prod_j m_{L_j} = sum_{sigma in set} 1 / prod_j m_{sigma(R_j)}`.
#[derive(Clone, Debug)]
pub struct Expansion {
    pub name: &'static str,
    pub lhs: Vec<Subscript>,
    pub set: PermSet,
    pub rhs: Vec<Subscript>,
}

impl Expansion {
    pub fn arity(&self) -> usize {
        self.lhs.len()
    }

    fn rhs_flags(&self) -> Vec<Vec<Subscript>> {
        self.set
            .iter()
            .map(|s| self.rhs.iter().map(|x| x.act(s)).collect())
            .collect()
    }

    pub fn lhs_sum(&self) -> FracSum {
        FracSum::from_terms([FracTerm::new(1, &self.lhs)])
    }

    pub fn rhs_sum(&self) -> FracSum {
        FracSum::from_terms(self.rhs_flags().iter().map(|f| FracTerm::new(1, f)))
    }

    /// The left side after `m_j -> m_j - t y_j`, coefficient of `t^{l-n}`,
    /// written as the summed-out product of its factors.
    pub fn lhs_weighted(&self, l: u32) -> Result<FracSum> {
        weighted(&self.lhs, l)
    }

    pub fn rhs_weighted(&self, l: u32) -> Result<FracSum> {
        let mut out = FracSum::zero();
        for f in self.rhs_flags() {
            out.add(&weighted(&f, l)?);
        }
        Ok(out)
    }

    /// The same two sides obtained from the geometric series in `t`.
    pub fn lhs_shifted(&self, l: u32) -> FracSum {
        shift_expand(&self.lhs, l - self.arity() as u32)
    }

    pub fn rhs_shifted(&self, l: u32) -> FracSum {
        let mut out = FracSum::zero();
        for f in self.rhs_flags() {
            out.add(&shift_expand(&f, l - self.arity() as u32));
        }
        out
    }
}

/// `sum_{l_1+...+l_n=l} prod_j y_{S_j}^{l_j-1} / m_{S_j}^{l_j}`.
fn weighted(denoms: &[Subscript], l: u32) -> Result<FracSum> {
    let ws = compositions(l, denoms.len(), false)
        .map_err(|e| Error::InvalidArguments(e.to_string()))?;
    Ok(FracSum::from_terms(ws.iter().map(|w| {
        let mut numer = MultiPoly::one();
        let mut denom = BTreeMap::new();
        for (s, &lj) in denoms.iter().zip(w.parts()) {
            numer = &numer * &MultiPoly::subset_sum(*s).pow(lj - 1);
            *denom.entry(*s).or_insert(0) += lj;
        }
        FracTerm::with_numer(numer, denom)
    })))
}

pub fn triple_single() -> Expansion {
    Expansion {
        name: "i",
        lhs: subs(&["123", "23", "3", "4"]),
        set: named::u1(),
        rhs: subs(&["1234", "234", "34", "4"]),
    }
}

pub fn double_double() -> Expansion {
    Expansion {
        name: "ii",
        lhs: subs(&["12", "2", "34", "4"]),
        set: named::u2(),
        rhs: subs(&["1234", "234", "34", "4"]),
    }
}

pub fn single_single() -> Expansion {
    Expansion {
        name: "split",
        lhs: subs(&["3", "4"]),
        set: named::group(&["(34)"]),
        rhs: subs(&["34", "4"]),
    }
}

pub fn four_singles() -> Expansion {
    Expansion {
        name: "iv",
        lhs: subs(&["1", "2", "3", "4"]),
        set: named::s4(),
        rhs: subs(&["1234", "234", "34", "4"]),
    }
}

pub fn expansions() -> Vec<Expansion> {
    vec![triple_single(), double_double(), single_single(), four_singles()]
}

/// Checks every expansion exactly, then for each weight `l` up to
/// `max_weight`:
///
/// * both weighted sides agree term by term with the `t^{l-n}` coefficient
///   of the geometric series, which together with the exact expansion
///   proves the weighted identity;
/// * the weighted sides are compared directly, exactly when
///   `l <= exact_max_weight` and by the random screen above that.
pub fn verify_prop22_expansions(
    max_weight: u32,
    exact_max_weight: u32,
    seed: u64,
) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for e in expansions() {
        let v = equal_as_rational_functions(&e.lhs_sum(), &e.rhs_sum(), seed)?;
        out.push(Check::new(
            format!("prop22.{}.expansion", e.name),
            v.equal,
            format!("{} terms; witness {:?}", e.set.len(), v.witness),
        ));
        let n = e.arity() as u32;
        for l in n.max(4)..=max_weight {
            let lw = e.lhs_weighted(l)?;
            let rw = e.rhs_weighted(l)?;
            let series = lw == e.lhs_shifted(l) && rw == e.rhs_shifted(l);
            let (direct, how) = if l <= exact_max_weight {
                let v = equal_as_rational_functions(&lw, &rw, seed ^ u64::from(l))?;
                (v.equal, "exact")
            } else {
                let w = prescreen(&lw, &rw, seed ^ u64::from(l), 8)?;
                (w.is_none(), "screened")
            };
            out.push(Check::new(
                format!("prop22.{}.w{l}", e.name),
                series && direct,
                format!(
                    "series match {series}; direct {how} {direct}; {} + {} terms",
                    lw.len(),
                    rw.len()
                ),
            ));
        }
    }
    out.extend(verify_substitutions());
    Ok(out)
}

/// A linear form `sum_j c_j x_j`.
pub type Linear = [i64; 4];
/// The argument tuple of one quadruple sum.
pub type ArgTuple = [Linear; 4];

pub fn linear(s: Subscript) -> Linear {
    let mut f = [0; 4];
    for j in s.members() {
        f[j - 1] = 1;
    }
    f
}

fn act_linear(f: &Linear, sigma: &Perm) -> Linear {
    let mut g = [0; 4];
    for j in 1..=4 {
        g[sigma.apply(j) - 1] = f[j - 1];
    }
    g
}

/// `y_j -> images[j]`.
fn substitute(f: &Linear, images: &[Linear; 4]) -> Linear {
    let mut g = [0; 4];
    for (c, img) in f.iter().zip(images) {
        for k in 0..4 {
            g[k] += c * img[k];
        }
    }
    g
}

fn tuple(list: [&str; 4]) -> ArgTuple {
    list.map(|s| linear(sub(s)))
}

fn act_tuple(t: &ArgTuple, sigma: &Perm) -> ArgTuple {
    t.map(|f| act_linear(&f, sigma))
}

pub type TupleSum = BTreeMap<ArgTuple, i64>;

fn insert(m: &mut TupleSum, t: ArgTuple, k: i64) {
    let e = m.entry(t).or_insert(0);
    *e += k;
    if *e == 0 {
        m.remove(&t);
    }
}

fn over(set: &PermSet, t: &ArgTuple) -> TupleSum {
    let mut m = TupleSum::new();
    for s in set.iter() {
        insert(&mut m, act_tuple(t, s), 1);
    }
    m
}

/// Right side argument tuples of an expansion after `y -> images`.
pub fn substituted_rhs(e: &Expansion, images: &[Linear; 4]) -> TupleSum {
    let flag: ArgTuple = std::array::from_fn(|j| linear(e.rhs[j]));
    let mut m = TupleSum::new();
    for s in e.set.iter() {
        let t = act_tuple(&flag, s).map(|f| substitute(&f, images));
        insert(&mut m, t, 1);
    }
    m
}

/// The quadruple-sum argument tuples appearing on the right of the four
/// product identities.
pub fn stated_rhs(part: &str) -> Option<TupleSum> {
    let g = |c: &[&str]| named::group(c);
    let mut m = TupleSum::new();
    match part {
        "i" => {
            // rho acts only on the last two slots
            for r in g(&["(34)"]).iter() {
                let mut t = tuple(["14", "24", "34", "4"]);
                t[2] = act_linear(&t[2], r);
                t[3] = act_linear(&t[3], r);
                insert(&mut m, t, 1);
            }
            insert(&mut m, tuple(["14", "24", "2", "3"]), 1);
            insert(&mut m, tuple(["14", "1", "2", "3"]), 1);
        }
        "ii" => {
            let mut inner = TupleSum::new();
            for r in g(&["(24)"]).iter() {
                let mut t = tuple(["13", "23", "24", "4"]);
                t[2] = act_linear(&t[2], r);
                t[3] = act_linear(&t[3], r);
                insert(&mut inner, t, 1);
            }
            insert(&mut inner, tuple(["13", "23", "3", "4"]), 1);
            for s in g(&["(13)(24)"]).iter() {
                for (t, k) in &inner {
                    insert(&mut m, act_tuple(t, s), *k);
                }
            }
        }
        "iii" => {
            let mut inner = TupleSum::new();
            for r in g(&["(234)"]).iter() {
                let mut t = tuple(["134", "234", "34", "4"]);
                for slot in 1..4 {
                    t[slot] = act_linear(&t[slot], r);
                }
                insert(&mut inner, t, 1);
            }
            for r in g(&["(24)"]).iter() {
                let mut t = tuple(["134", "14", "24", "4"]);
                t[2] = act_linear(&t[2], r);
                t[3] = act_linear(&t[3], r);
                insert(&mut inner, t, 1);
            }
            insert(&mut inner, tuple(["134", "14", "1", "2"]), 1);
            for s in g(&["(34)"]).iter() {
                for (t, k) in &inner {
                    insert(&mut m, act_tuple(t, s), *k);
                }
            }
        }
        "iv" => {
            m = over(&named::s4(), &tuple(["1234", "234", "34", "4"]));
        }
        _ => return None,
    }
    Some(m)
}

/// The `y`-forms of the left factors must become the plain `x` arguments,
/// and the substituted right side must equal the stated tuples. The third
/// identity is the second with `x_3 -> x_34`, summed over `<(34)>`.
pub fn verify_substitutions() -> Vec<Check> {
    let x = |j: usize| linear(Subscript::single(j));
    let diff = |a: usize, b: usize| -> Linear {
        let mut f = x(a);
        f[b - 1] = -1;
        f
    };
    let cases: [(&str, Expansion, [Linear; 4]); 3] = [
        ("i", triple_single(), [diff(1, 2), diff(2, 3), x(3), x(4)]),
        ("ii", double_double(), [diff(1, 2), x(2), diff(3, 4), x(4)]),
        ("iv", four_singles(), [x(1), x(2), x(3), x(4)]),
    ];
    let mut out = Vec::new();
    for (part, e, images) in &cases {
        let lhs: Vec<Linear> = e.lhs.iter().map(|s| substitute(&linear(*s), images)).collect();
        let plain = lhs.iter().enumerate().all(|(j, f)| {
            // each left factor is one of the plain x_1, ..., x_4
            f.iter().filter(|&&c| c != 0).count() == 1 && f[j] == 1
        });
        let got = substituted_rhs(e, images);
        let want = stated_rhs(part).expect("known part");
        out.push(Check::new(
            format!("prop22.{part}.substitution"),
            plain && got == want,
            format!("left plain {plain}; {} tuples", got.len()),
        ));
    }

    let x34: [Linear; 4] = [x(1), x(2), [0, 0, 1, 1], x(4)];
    let ii = stated_rhs("ii").expect("known part");
    let mut lifted = TupleSum::new();
    for s in named::group(&["(34)"]).iter() {
        for (t, k) in &ii {
            let t = t.map(|f| act_linear(&substitute(&f, &x34), s));
            insert(&mut lifted, t, *k);
        }
    }
    let want = stated_rhs("iii").expect("known part");
    out.push(Check::new(
        "prop22.iii.reduction",
        lifted == want,
        format!("{} tuples", lifted.len()),
    ));
    out
}
