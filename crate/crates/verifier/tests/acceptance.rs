//! The ten acceptance criteria, one PASS/FAIL line each.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use verifier::formulas::{self, Theorem1Mode};
use verifier::report::CheckResult;
use verifier::{polylog, run_suites, Config, Status, Suite, Verifier};

struct Outcome {
    checks: usize,
    failures: Vec<String>,
}

fn outcome(results: &[CheckResult]) -> Outcome {
    Outcome {
        checks: results.len(),
        failures: results
            .iter()
            .filter(|r| r.status != Status::Pass)
            .map(|r| {
                let why = r
                    .params
                    .get("detail")
                    .or_else(|| r.params.get("error"))
                    .map(|d| d.to_string())
                    .or_else(|| r.residual.clone())
                    .unwrap_or_default();
                format!("{} ({why})", r.check)
            })
            .collect(),
    }
}

fn suites(config: Config, s: &[Suite]) -> Vec<CheckResult> {
    run_suites(&Verifier::new(config), s, 0).expect("thread pool")
}

fn sum_formula() -> Outcome {
    let start = Instant::now();
    let v = Verifier::new(Config::default());
    let rs: Vec<_> = (5..=9).map(|l| formulas::check_sum_formula(&v, l)).collect();
    let mut o = outcome(&rs);
    if start.elapsed() > Duration::from_secs(120) {
        o.failures.push(format!("took {:?}", start.elapsed()));
    }
    o
}

fn theorem1() -> Outcome {
    let v = Verifier::new(Config {
        tol: 1e-9,
        ..Config::default()
    });
    let mut rs: Vec<_> = (5..=7)
        .map(|l| formulas::check_theorem1(&v, l, Theorem1Mode::Coefficientwise))
        .collect();
    rs.push(formulas::check_theorem1(&v, 8, Theorem1Mode::RandomPoints(5)));
    outcome(&rs)
}

fn theorem2() -> Outcome {
    let v = Verifier::new(Config::default());
    let mut rs = Vec::new();
    for l in 5..=10 {
        for f in formulas::theorem2_formulas() {
            rs.push(formulas::check_weighted(&v, &f, l));
        }
    }
    rs.extend((4..=10).map(formulas::check_theorem2_consistency));
    outcome(&rs)
}

fn quasi_shuffle() -> Outcome {
    outcome(&suites(Config::default(), &[Suite::Lemma21, Suite::Lemma22]))
}

fn cosets() -> Outcome {
    outcome(&suites(Config::default(), &[Suite::Table1, Suite::Cosets]))
}

fn partial_fractions() -> Outcome {
    outcome(&polylog::prop22_symbolic(8, 6, Config::default().seed))
}

fn regularization() -> Outcome {
    let config = Config {
        ct_tol: 1e-4,
        ct_max_weight: 7,
        ..Config::default()
    };
    outcome(&suites(config, &[Suite::Prop23]))
}

fn lemma41() -> Outcome {
    let v = Verifier::new(Config::default());
    let mut rs = Vec::new();
    for k in 1..=4 {
        rs.push(formulas::check_lemma41_symbolic(k));
        rs.extend((5..=10).map(|l| formulas::check_lemma41(&v, k, l)));
    }
    for l in 5..=10 {
        for f in formulas::remark41_formulas() {
            rs.push(formulas::check_weighted(&v, &f, l));
        }
    }
    outcome(&rs)
}

fn remark21() -> Outcome {
    outcome(&suites(Config::default(), &[Suite::Remark21]))
}

fn properties() -> Outcome {
    outcome(&suites(Config::default(), &[Suite::Properties]))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("1 sum formula, weights 5..9", sum_formula),
        ("2 theorem 1, coefficientwise 5..7 and random points at 8", theorem1),
        ("3 weighted sum formulas 5..10 and consistency", theorem2),
        ("4 harmonic product lemmas, exhaustive to weight 8", quasi_shuffle),
        ("5 coset tables and coset identities", cosets),
        ("6 partial fraction identities", partial_fractions),
        ("7 constant terms and limits at z = 1", regularization),
        ("8 substitution lemma and weighted relations 5..10", lemma41),
        ("9 cyclic and symmetric sums of zeta values", remark21),
        ("10 property suites", properties),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let o = run();
        let secs = start.elapsed().as_secs_f64();
        if o.failures.is_empty() {
            println!("PASS criterion {name}: {} checks in {secs:.1} s", o.checks);
        } else {
            failed += 1;
            println!("FAIL criterion {name}: {} of {} checks failed", o.failures.len(), o.checks);
            for f in o.failures.iter().take(10) {
                println!("    {f}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
