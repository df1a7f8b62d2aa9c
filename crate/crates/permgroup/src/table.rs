//! Orbit tables: for each merged tuple `l'`, which permutations send it to
//! which tuple `l = sigma . l'`.

use std::collections::BTreeMap;

use crate::subscript::{act_on_subscript_tuple, format_tuple, parse_tuple, Subscript};
use crate::{Check, Perm};

/// One orbit table as printed: a base tuple and rows `(l, [sigma, ...])`.
pub struct CosetTable {
    pub base: &'static str,
    pub rows: &'static [(&'static str, &'static [&'static str])],
}

pub const TABLES: [CosetTable; 6] = [
    CosetTable {
        base: "(12,3,4)",
        rows: &[
            ("(12,3,4)", &["e", "(12)"]),
            ("(12,4,3)", &["(12)(34)", "(34)"]),
            ("(13,2,4)", &["(132)", "(23)"]),
            ("(13,4,2)", &["(234)", "(1342)"]),
            ("(14,2,3)", &["(243)", "(1432)"]),
            ("(14,3,2)", &["(142)", "(24)"]),
            ("(23,1,4)", &["(123)", "(13)"]),
            ("(23,4,1)", &["(134)", "(1234)"]),
            ("(24,1,3)", &["(143)", "(1243)"]),
            ("(24,3,1)", &["(124)", "(14)"]),
            ("(34,1,2)", &["(13)(24)", "(1423)"]),
            ("(34,2,1)", &["(14)(23)", "(1324)"]),
        ],
    },
    CosetTable {
        base: "(1,23,4)",
        rows: &[
            ("(1,23,4)", &["e", "(23)"]),
            ("(1,24,3)", &["(243)", "(34)"]),
            ("(1,34,2)", &["(234)", "(24)"]),
            ("(2,13,4)", &["(123)", "(12)"]),
            ("(2,14,3)", &["(12)(34)", "(1243)"]),
            ("(2,34,1)", &["(124)", "(1234)"]),
            ("(3,12,4)", &["(132)", "(13)"]),
            ("(3,14,2)", &["(13)(24)", "(1342)"]),
            ("(3,24,1)", &["(134)", "(1324)"]),
            ("(4,12,3)", &["(143)", "(1432)"]),
            ("(4,13,2)", &["(142)", "(1423)"]),
            ("(4,23,1)", &["(14)(23)", "(14)"]),
        ],
    },
    CosetTable {
        base: "(1,2,34)",
        rows: &[
            ("(1,2,34)", &["e", "(34)"]),
            ("(1,3,24)", &["(234)", "(23)"]),
            ("(1,4,23)", &["(243)", "(24)"]),
            ("(2,1,34)", &["(12)(34)", "(12)"]),
            ("(2,3,14)", &["(123)", "(1234)"]),
            ("(2,4,13)", &["(124)", "(1243)"]),
            ("(3,1,24)", &["(132)", "(1342)"]),
            ("(3,2,14)", &["(134)", "(13)"]),
            ("(3,4,12)", &["(13)(24)", "(1324)"]),
            ("(4,1,23)", &["(142)", "(1432)"]),
            ("(4,2,13)", &["(143)", "(14)"]),
            ("(4,3,12)", &["(14)(23)", "(1423)"]),
        ],
    },
    CosetTable {
        base: "(12,34)",
        rows: &[
            ("(12,34)", &["e", "(12)(34)", "(12)", "(34)"]),
            ("(13,24)", &["(132)", "(234)", "(23)", "(1342)"]),
            ("(14,23)", &["(142)", "(243)", "(24)", "(1432)"]),
            ("(23,14)", &["(123)", "(134)", "(13)", "(1234)"]),
            ("(24,13)", &["(124)", "(143)", "(14)", "(1243)"]),
            ("(34,12)", &["(13)(24)", "(14)(23)", "(1423)", "(1324)"]),
        ],
    },
    CosetTable {
        base: "(123,4)",
        rows: &[
            ("(123,4)", &["e", "(123)", "(132)", "(12)", "(13)", "(23)"]),
            ("(124,3)", &["(12)(34)", "(143)", "(243)", "(34)", "(1243)", "(1432)"]),
            ("(134,2)", &["(13)(24)", "(142)", "(234)", "(24)", "(1342)", "(1423)"]),
            ("(234,1)", &["(14)(23)", "(124)", "(134)", "(14)", "(1234)", "(1324)"]),
        ],
    },
    CosetTable {
        base: "(1,234)",
        rows: &[
            ("(1,234)", &["e", "(234)", "(243)", "(23)", "(24)", "(34)"]),
            ("(2,134)", &["(12)(34)", "(123)", "(124)", "(12)", "(1234)", "(1243)"]),
            ("(3,124)", &["(13)(24)", "(132)", "(134)", "(13)", "(1324)", "(1342)"]),
            ("(4,123)", &["(14)(23)", "(142)", "(143)", "(14)", "(1423)", "(1432)"]),
        ],
    },
];

/// Checks every row of every table (action correctness) and that each table
/// lists each element of S4 exactly once.
pub fn verify_action_tables() -> Vec<Check> {
    let mut out = Vec::new();
    for table in &TABLES {
        let base = parse_tuple(table.base).expect("table literal");
        let mut seen: BTreeMap<Perm, usize> = BTreeMap::new();
        for (row, sigmas) in table.rows {
            let target: Vec<Subscript> = parse_tuple(row).expect("table literal");
            let mut bad = Vec::new();
            for s in sigmas.iter() {
                let sigma: Perm = s.parse().expect("cycle literal");
                *seen.entry(sigma.clone()).or_insert(0) += 1;
                if act_on_subscript_tuple(&sigma, &base) != target {
                    bad.push(format!(
                        "{s} sends {} to {}",
                        table.base,
                        format_tuple(&act_on_subscript_tuple(&sigma, &base))
                    ));
                }
            }
            out.push(Check::new(
                format!("{} -> {}", table.base, row),
                bad.is_empty(),
                bad.join("; "),
            ));
        }
        let missing: Vec<String> = Perm::all(4)
            .into_iter()
            .filter(|p| seen.get(p) != Some(&1))
            .map(|p| format!("{p} x{}", seen.get(&p).copied().unwrap_or(0)))
            .collect();
        out.push(Check::new(
            format!("{} partitions S4", table.base),
            missing.is_empty() && seen.len() == 24,
            missing.join(", "),
        ));
    }
    out
}
