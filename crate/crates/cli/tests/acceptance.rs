//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use llt_cli::{domino_example, triomino_example, run_suite, CliError, SuiteOpts};
use llt_identities::VerificationReport;

struct Outcome {
    reports: Vec<VerificationReport>,
    elapsed: Duration,
}

fn timed(f: impl FnOnce() -> Result<Vec<VerificationReport>, CliError>) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let reports = f()?;
    Ok(Outcome { reports, elapsed: start.elapsed() })
}

fn suite(name: &str) -> Result<Outcome, CliError> {
    timed(|| run_suite(name, &SuiteOpts::default()))
}

fn instances(o: &Outcome, id: &str) -> usize {
    o.reports.iter().filter(|r| r.id == id).map(|r| r.instance.split(" n=").next().unwrap_or("")).collect::<BTreeSet<_>>().len()
}

/// `None` on success, otherwise the reason.
fn judge(o: &Outcome, limit: Duration, extra: Option<String>) -> Option<String> {
    if let Some(r) = o.reports.iter().find(|r| !r.pass) {
        let failed = o.reports.iter().filter(|r| !r.pass).count();
        return Some(format!("{failed} failing, first {} {}: {}", r.id, r.instance, r.witness.as_deref().unwrap_or("")));
    }
    if o.reports.is_empty() {
        return Some("no checks ran".into());
    }
    if o.elapsed > limit {
        return Some(format!("took {:.1?}, limit {limit:?}", o.elapsed));
    }
    extra
}

type Criterion = Box<dyn Fn() -> Result<(Outcome, Option<String>), CliError>>;

fn main() {
    let secs = Duration::from_secs;
    let criteria: Vec<(&str, Criterion)> = vec![
        ("((1),(2)) from (4,2): three computations, G relation, box 0", Box::new(|| Ok((timed(domino_example)?, None)))),
        ("((1),(3),(2)) from (8,7,3): polynomial, box 1/2, ribbon function", Box::new(|| Ok((timed(triomino_example)?, None)))),
        ("Yang-Baxter equations, k = 1, 2", Box::new(|| Ok((suite("ybe")?, None)))),
        ("algebraic and graphical weights, k <= 3", Box::new(|| Ok((suite("weights")?, None)))),
        (
            "symmetry, cancellation, homogeneity, restriction, factorization",
            Box::new(|| {
                let o = suite("main3")?;
                let shapes = instances(&o, "symmetry");
                Ok((o, (shapes < 20).then(|| format!("only {shapes} shapes"))))
            }),
        ),
        ("white lattice equals coinversion LLT sum", Box::new(|| Ok((suite("lattice")?, None)))),
        ("g: chains, conjugation, strip duality, x/y swap", Box::new(|| Ok((suite("g")?, None)))),
        ("gray and light purple lattices, stability in l1, l2", Box::new(|| Ok((suite("star")?, None)))),
        ("Cauchy identities to degree 3", Box::new(|| Ok((suite("cauchy")?, None)))),
        (
            "HHL, sp, Lam and cosp conversions",
            Box::new(|| {
                let o = suite("other-forms")?;
                let shapes = instances(&o, "hhl");
                Ok((o, (shapes < 10).then(|| format!("only {shapes} shapes"))))
            }),
        ),
        ("Littlewood and theta bijections, content transport, theta square", Box::new(|| Ok((suite("bijection")?, None)))),
    ];
    let limits = [1, 1, 300, 600, 600, 600, 600, 600, 900, 600, 600];
    let mut failed = 0;
    for (i, ((name, f), limit)) in criteria.iter().zip(limits).enumerate() {
        let line = match f() {
            Err(e) => Some(format!("error: {e}")),
            Ok((o, extra)) => judge(&o, secs(limit), extra).or_else(|| {
                println!("PASS {:>2} {name} ({} checks, {:.2?})", i + 1, o.reports.len(), o.elapsed);
                None
            }),
        };
        if let Some(why) = line {
            failed += 1;
            println!("FAIL {:>2} {name}: {why}", i + 1);
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
