//! Exact coset and transversal identities in S4.

use crate::named::{a4, c, c_coset, cb, cb_coset, group, s4, stabilizer, u1, u2, u3, v2, v3, w3};
use crate::{is_transversal, Check, PermSet, SignedMultiset};

fn ms(s: &PermSet) -> SignedMultiset {
    s.to_multiset()
}

fn eq_check(name: &str, lhs: SignedMultiset, rhs: SignedMultiset) -> Check {
    let diff = lhs.clone() - rhs;
    Check::new(name, diff.is_zero(), format!("lhs - rhs = {diff:?}"))
}

fn congruence(name: &str, a: SignedMultiset, b: SignedMultiset, h: &PermSet) -> Check {
    let la = a.left_cosets(h);
    let lb = b.left_cosets(h);
    Check::new(name, la == lb, format!("{la:?} vs {lb:?}"))
}

/// The six right cosets of C in S4 as listed, and that they partition S4.
pub fn verify_c_cosets() -> Vec<Check> {
    let listed: [(&str, [&str; 4]); 6] = [
        ("e", ["e", "(1234)", "(13)(24)", "(1432)"]),
        ("(12)", ["(12)", "(134)", "(1423)", "(243)"]),
        ("(13)", ["(13)", "(14)(23)", "(24)", "(12)(34)"]),
        ("(14)", ["(14)", "(234)", "(1243)", "(132)"]),
        ("(23)", ["(23)", "(124)", "(1342)", "(143)"]),
        ("(34)", ["(34)", "(123)", "(1324)", "(142)"]),
    ];
    let mut out = Vec::new();
    let mut total = SignedMultiset::default();
    for (sigma, members) in listed {
        let got = c_coset(sigma);
        let want = PermSet::from_cycles(&members);
        total = total + ms(&got);
        out.push(Check::new(
            format!("C{sigma} members"),
            got == want,
            format!("computed {got}"),
        ));
    }
    out.push(eq_check("six cosets of C partition S4", total, ms(&s4())));
    out
}

/// Products of named sets with C or Cb, expressed through right cosets.
pub fn verify_coset_products() -> Vec<Check> {
    let cc = |s: &str| ms(&c_coset(s));
    vec![
        eq_check(
            "C.U1 = 2C + C(12) + C(34)",
            c().product(&u1()),
            cc("e").scaled(2) + cc("(12)") + cc("(34)"),
        ),
        eq_check("C(243) = C(12)", cc("(243)"), cc("(12)")),
        eq_check("Cb.V2 = C(23)", cb().product(&v2()), cc("(23)")),
        eq_check(
            "Cb.U2 = C + C(14) + C(23)",
            cb().product(&u2()),
            cc("e") + cc("(14)") + cc("(23)"),
        ),
        eq_check("C.W3 = C(13) + C(23)", c().product(&w3()), cc("(13)") + cc("(23)")),
        eq_check(
            "C.V3 = C + C(12) + C(13) + 2C(23) + C(34)",
            c().product(&v3()),
            cc("e") + cc("(12)") + cc("(13)") + cc("(23)").scaled(2) + cc("(34)"),
        ),
        eq_check(
            "C.U3 = 2S4 + C - C(13)",
            c().product(&u3()),
            ms(&s4()).scaled(2) + cc("e") - cc("(13)"),
        ),
        eq_check("<(34)>.U2 = U3", group(&["(34)"]).product(&u2()), ms(&u3())),
        eq_check(
            "<(34)>.V2 = {(23),(1342),(243),(142)}",
            group(&["(34)"]).product(&v2()),
            ms(&PermSet::from_cycles(&["(23)", "(1342)", "(243)", "(142)"])),
        ),
        eq_check(
            "<(34)>.(23) = {(23),(243)}",
            group(&["(34)"]).product(&PermSet::from_cycles(&["(23)"])),
            ms(&PermSet::from_cycles(&["(23)", "(243)"])),
        ),
        eq_check(
            "Cb(14) = {(14),(234)}",
            ms(&cb_coset("(14)")),
            ms(&PermSet::from_cycles(&["(14)", "(234)"])),
        ),
    ]
}

/// Transversals of the quotients used to split the free four-fold sum.
pub fn verify_transversals() -> Vec<Check> {
    let mut out = Vec::new();
    for t in ["(12)", "(13)", "(14)", "(23)", "(24)", "(34)"] {
        out.push(Check::new(
            format!("A4 transversal of S4/<{t}>"),
            is_transversal(&a4(), &group(&[t]), 4),
            String::new(),
        ));
    }
    let c_cb14 = c().union(&cb_coset("(14)"));
    out.push(Check::new(
        "C u Cb(14) transversal of S4/<(12),(34)>",
        is_transversal(&c_cb14, &group(&["(12)", "(34)"]), 4),
        String::new(),
    ));
    for i in [1, 4] {
        out.push(Check::new(
            format!("C transversal of S4/S4^{i}"),
            is_transversal(&c(), &stabilizer(i), 4),
            String::new(),
        ));
    }
    out
}

/// Coset congruences `A ≡ B in S4/H`: equal multisets of left cosets.
pub fn verify_congruences() -> Vec<Check> {
    let cc = |s: &str| ms(&c_coset(s));
    let mut out = Vec::new();
    let table: [(&str, [(&str, &str); 3]); 3] = [
        ("(12)", [("e", "(12)"), ("(13)", "(34)"), ("(14)", "(23)")]),
        ("(23)", [("e", "(23)"), ("(12)", "(34)"), ("(13)", "(14)")]),
        ("(34)", [("e", "(34)"), ("(12)", "(13)"), ("(14)", "(23)")]),
    ];
    for (t, pairs) in table {
        let h = group(&[t]);
        for (a, b) in pairs {
            out.push(congruence(
                &format!("C{a} = C{b} in S4/<{t}>"),
                cc(a),
                cc(b),
                &h,
            ));
        }
    }
    let k = group(&["(12)", "(34)"]);
    out.push(congruence(
        "Cb(23) = Cb(14) in S4/<(12),(34)>",
        ms(&cb_coset("(23)")),
        ms(&cb_coset("(14)")),
        &k,
    ));
    out.push(congruence("C(13) = C in S4/<(12),(34)>", cc("(13)"), cc("e"), &k));
    // C(23) meets each class of Cb(14) twice.
    out.push(congruence(
        "C(23) = 2 Cb(14) in S4/<(12),(34)>",
        cc("(23)"),
        ms(&cb_coset("(14)")).scaled(2),
        &k,
    ));
    out.push(congruence("C(24) = C in S4/S4^4", cc("(24)"), cc("e"), &stabilizer(4)));
    out
}

/// All coset, transversal and congruence identities.
pub fn verify_coset_identities() -> Vec<Check> {
    let mut out = verify_c_cosets();
    out.extend(verify_coset_products());
    out.extend(verify_transversals());
    out.extend(verify_congruences());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn everything_passes() {
        let failed: Vec<Check> = verify_coset_identities()
            .into_iter()
            .filter(|c| !c.pass)
            .collect();
        assert!(failed.is_empty(), "{failed:#?}");
    }

    #[test]
    fn unscaled_c23_congruence_is_false() {
        let k = group(&["(12)", "(34)"]);
        assert!(!ms(&c_coset("(23)")).congruent_mod(&ms(&cb_coset("(14)")), &k));
    }
}
