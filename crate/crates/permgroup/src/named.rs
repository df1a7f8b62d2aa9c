//! The fixed subsets of S4 that index the harmonic-product expansions.

use crate::{generate, Perm, PermSet};

fn p(s: &str) -> Perm {
    s.parse().expect("cycle literal")
}

/// The cyclic group generated by `(1234)`.
pub fn c() -> PermSet {
    generate(&[p("(1234)")], 4).with_label("C")
}

/// `{e, (1234)}`.
pub fn cb() -> PermSet {
    PermSet::from_cycles(&["e", "(1234)"]).with_label("Cb")
}

pub fn s4() -> PermSet {
    PermSet::new(Perm::all(4)).with_label("S4")
}

pub fn a4() -> PermSet {
    PermSet::new(Perm::all(4).into_iter().filter(|s| s.sign() == 1)).with_label("A4")
}

/// Stabiliser of the point `i` in S4.
pub fn stabilizer(i: usize) -> PermSet {
    PermSet::new(Perm::all(4).into_iter().filter(|s| s.apply(i) == i)).with_label(format!("S4^{i}"))
}

/// Group generated by the given cycles in degree 4.
pub fn group(cycles: &[&str]) -> PermSet {
    let gens: Vec<Perm> = cycles.iter().map(|c| p(c)).collect();
    generate(&gens, 4).with_label(format!("<{}>", cycles.join(",")))
}

/// Right coset `C sigma`.
pub fn c_coset(sigma: &str) -> PermSet {
    c().right_mul(&p(sigma)).with_label(format!("C{sigma}"))
}

/// Right coset `Cb sigma`.
pub fn cb_coset(sigma: &str) -> PermSet {
    cb().right_mul(&p(sigma)).with_label(format!("Cb{sigma}"))
}

pub fn u1() -> PermSet {
    PermSet::from_cycles(&["e", "(34)", "(243)", "(1432)"]).with_label("U1")
}

pub fn v2() -> PermSet {
    PermSet::from_cycles(&["(23)", "(1342)"]).with_label("V2")
}

pub fn u2() -> PermSet {
    v2().union(&PermSet::from_cycles(&["e", "(13)(24)", "(132)", "(234)"]))
        .with_label("U2")
}

pub fn w3() -> PermSet {
    PermSet::from_cycles(&["(23)", "(24)"]).with_label("W3")
}

pub fn v3() -> PermSet {
    w3().union(&PermSet::from_cycles(&["(34)", "(1342)", "(1423)", "(1432)"]))
        .with_label("V3")
}

pub fn v3a() -> PermSet {
    v3().difference(&PermSet::from_cycles(&["(34)"])).with_label("V3a")
}

pub fn v3b() -> PermSet {
    v3().difference(&PermSet::from_cycles(&["(1432)"])).with_label("V3b")
}

pub fn v3c() -> PermSet {
    v3().difference(&PermSet::from_cycles(&["(1423)"])).with_label("V3c")
}

pub fn u3() -> PermSet {
    v3().union(&PermSet::from_cycles(&[
        "e", "(13)(24)", "(132)", "(142)", "(234)", "(243)",
    ]))
    .with_label("U3")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cardinalities() {
        assert_eq!(c().len(), 4);
        assert_eq!(cb().len(), 2);
        assert_eq!(a4().len(), 12);
        assert_eq!(s4().len(), 24);
        assert_eq!(u1().len(), 4);
        assert_eq!(v2().len(), 2);
        assert_eq!(u2().len(), 6);
        assert_eq!(w3().len(), 2);
        assert_eq!(v3().len(), 6);
        for s in [v3a(), v3b(), v3c()] {
            assert_eq!(s.len(), 5);
        }
        assert_eq!(u3().len(), 12);
        assert_eq!(stabilizer(4).len(), 6);
    }

    #[test]
    fn labels() {
        assert_eq!(c_coset("(14)").label(), Some("C(14)"));
        assert_eq!(u3().label(), Some("U3"));
    }
}
