//! Acceptance criteria, one pass/fail line each. Run with `cargo test`.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use frobgrann_cli::golden::run_golden;
use frobgrann_core::suite::{CriterionOutcome, Suite, SuiteConfig};

/// Wall-clock limits per criterion.
const LIMITS: [(u32, Duration); 4] = [
    (1, Duration::from_secs(10)),
    (2, Duration::from_secs(30)),
    (7, Duration::from_secs(5)),
    (10, Duration::from_secs(60)),
];

/// Minimum instance counts per criterion.
const MINIMUM_INSTANCES: [(u32, usize); 5] = [(2, 200), (3, 400), (6, 20), (8, 100), (9, 100)];

/// Seed of the acceptance run.
const SEED: u64 = 1;

fn report(id: u32, title: &str, pass: bool, detail: &str) -> bool {
    println!(
        "{} criterion {id:>2}: {title} -- {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    pass
}

fn judge(o: &CriterionOutcome) -> bool {
    let mut pass = o.pass;
    let mut notes = vec![format!("{} instances, {} ms", o.instances, o.millis)];
    if let Some((_, limit)) = LIMITS.iter().find(|l| l.0 == o.id) {
        if o.millis > limit.as_millis() {
            pass = false;
            notes.push(format!("over the {} s limit", limit.as_secs()));
        }
    }
    if let Some((_, min)) = MINIMUM_INSTANCES.iter().find(|m| m.0 == o.id) {
        if o.instances < *min {
            pass = false;
            notes.push(format!("needs at least {min} instances"));
        }
    }
    if o.failures > 0 || !o.detail.is_empty() {
        notes.push(o.detail.clone());
    }
    report(o.id, o.title, pass, &notes.join("; "))
}

fn golden_and_quick_run() -> bool {
    let golden = run_golden();
    let failing: Vec<&str> = golden
        .iter()
        .filter(|g| !g.pass())
        .map(|g| g.name)
        .collect();
    let start = Instant::now();
    let run = Command::new(env!("CARGO_BIN_EXE_frobgrann"))
        .args(["verify-all", "--quick"])
        .output();
    let elapsed = start.elapsed();
    let (limit_id, limit) = LIMITS[3];
    assert_eq!(limit_id, 10);
    let (status_ok, status) = match &run {
        Ok(out) => (
            out.status.success(),
            format!("exit {:?}", out.status.code()),
        ),
        Err(e) => (false, format!("could not start: {e}")),
    };
    let pass = failing.is_empty() && status_ok && elapsed < limit;
    let detail = format!(
        "{} golden scripts, {} failing; verify-all --quick {status} in {} ms (limit {} s)",
        golden.len(),
        failing.len(),
        elapsed.as_millis(),
        limit.as_secs()
    );
    report(
        10,
        "golden scripts byte-identical, verify-all --quick succeeds",
        pass,
        &detail,
    )
}

fn main() -> ExitCode {
    let mut suite = Suite::new(SuiteConfig {
        quick: false,
        seed: SEED,
    });
    let mut all = true;
    for outcome in suite.run_all() {
        all &= judge(&outcome);
    }
    all &= golden_and_quick_run();
    println!(
        "acceptance: {}",
        if all { "all criteria pass" } else { "FAILURES" }
    );
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
