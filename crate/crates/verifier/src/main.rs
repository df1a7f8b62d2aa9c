use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::Parser;
use numeric::MzvCache;
use verifier::report::tally;
use verifier::{run_suites, Config, Error, Status, Suite, Verifier, WeightRange};

/// Verify the quadruple zeta identities and write a JSON report.
#[derive(Parser, Debug)]
#[command(name = "verify", version)]
struct Args {
    /// Suites to run; repeat or separate with commas.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    suite: Vec<Suite>,
    /// Numeric weights, e.g. `7`, `5..10`.
    #[arg(long, conflicts_with = "weight_max")]
    weight: Option<WeightRange>,
    /// Largest numeric weight; the sweep starts at 5.
    #[arg(long)]
    weight_max: Option<u32>,
    #[arg(long, default_value_t = 128)]
    prec_bits: u32,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Tolerance of the constant-term checks.
    #[arg(long, default_value_t = 1e-4)]
    ct_tol: f64,
    /// Sample points for the polylogarithm identities, each in (0, 1).
    #[arg(long, value_delimiter = ',')]
    z: Option<Vec<f64>>,
    #[arg(long)]
    seed: Option<u64>,
    /// File of cached zeta values, created if missing.
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Where to write the JSON report.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Print only failing checks.
    #[arg(long, short)]
    quiet: bool,
}

fn config(args: &Args) -> Result<Config, Error> {
    let mut c = Config::default();
    if !(32..=4096).contains(&args.prec_bits) {
        return Err(Error::Usage(format!("--prec-bits {} out of range 32..=4096", args.prec_bits)));
    }
    if !(args.tol > 0.0 && args.ct_tol > 0.0) {
        return Err(Error::Usage("tolerances must be positive".into()));
    }
    c.prec_bits = args.prec_bits;
    c.tol = args.tol;
    c.ct_tol = args.ct_tol;
    let weights = match (&args.weight, args.weight_max) {
        (Some(w), _) => Some(w.0.clone()),
        (None, Some(m)) if m >= 5 => Some(5..=m),
        (None, Some(m)) => return Err(Error::Usage(format!("--weight-max {m} is below 5"))),
        (None, None) => None,
    };
    if let Some(w) = weights {
        c = c.with_weights(w);
    }
    if let Some(z) = &args.z {
        if z.is_empty() || z.iter().any(|&t| !(t > 0.0 && t < 1.0)) {
            return Err(Error::Usage("every --z value must lie in (0, 1)".into()));
        }
        c.z = z.clone();
    }
    if let Some(s) = args.seed {
        c.seed = s;
    }
    if let Some(path) = &args.cache {
        let cache = MzvCache::open(path).map_err(|e| Error::Usage(format!("cache {}: {e}", path.display())))?;
        c.cache = Some(Arc::new(cache));
    }
    Ok(c)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let config = match config(&args) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let v = Verifier::new(config);
    let results = match run_suites(&v, &args.suite, args.jobs) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    for r in &results {
        if args.quiet && r.status != Status::Fail {
            continue;
        }
        let status = match r.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        let residual = r.residual.as_deref().unwrap_or("exact");
        println!("{status} {:<40} {residual:>14} {:>7} ms", r.check, r.elapsed_ms);
        if r.status == Status::Fail {
            for key in ["detail", "error"] {
                if let Some(d) = r.params.get(key) {
                    println!("     {key}: {d}");
                }
            }
        }
    }
    let (pass, fail, skipped) = tally(&results);
    println!("{pass} passed, {fail} failed, {skipped} skipped");
    if let Some(path) = &args.report {
        let write = serde_json::to_string_pretty(&results)
            .map_err(|e| e.to_string())
            .and_then(|s| std::fs::write(path, s + "\n").map_err(|e| e.to_string()));
        if let Err(e) = write {
            eprintln!("error: writing {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if fail == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
