//! The ten acceptance criteria, each printed as one pass/fail line.
//!
//! Runs as a plain binary (`harness = false`) so the lines are always shown.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use serde_json::json;
use trigva_core::suite::{run_suite, CheckRecord, Fault, Report, Status, Suite, SuiteConfig};

struct Outcome {
    ok: bool,
    note: String,
}

fn outcome(ok: bool, note: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        note: note.into(),
    }
}

fn config() -> SuiteConfig {
    SuiteConfig {
        timing: false,
        ..SuiteConfig::default()
    }
}

fn run(suite: Suite) -> (Report, Duration) {
    run_with(&config(), suite)
}

fn run_with(c: &SuiteConfig, suite: Suite) -> (Report, Duration) {
    let start = Instant::now();
    let r = run_suite(c, suite).expect("default configuration is valid");
    (r, start.elapsed())
}

fn with_prefix<'a>(r: &'a Report, prefix: &str) -> Vec<&'a CheckRecord> {
    r.records
        .iter()
        .filter(|x| x.check_id.starts_with(prefix))
        .collect()
}

/// All records under `prefix` pass and there are `expected` of them.
fn all_pass(r: &Report, prefix: &str, expected: usize) -> Outcome {
    let recs = with_prefix(r, prefix);
    if recs.len() != expected {
        return outcome(
            false,
            format!("{} records under {prefix}, expected {expected}", recs.len()),
        );
    }
    match recs.iter().find(|x| x.status != Status::Pass) {
        Some(bad) => outcome(
            false,
            format!("{}: {}", bad.check_id, bad.witness.as_deref().unwrap_or("")),
        ),
        None => outcome(true, format!("{expected} checks under {prefix}")),
    }
}

fn within(o: Outcome, took: Duration, budget_s: u64) -> Outcome {
    let s = took.as_secs_f64();
    if s > budget_s as f64 {
        outcome(
            false,
            format!("{}; took {s:.1}s, budget {budget_s}s", o.note),
        )
    } else {
        outcome(o.ok, format!("{}; {s:.1}s", o.note))
    }
}

fn and(a: Outcome, b: Outcome) -> Outcome {
    outcome(a.ok && b.ok, format!("{}; {}", a.note, b.note))
}

fn main() -> ExitCode {
    let mut results: Vec<(usize, &str, Outcome)> = Vec::new();

    let (jac, t) = run(Suite::Jacobi);
    results.push((
        1,
        "trigonometric Jacobi identities, 200 seeded triples per kind",
        within(all_pass(&jac, "jacobi/trig-", 4), t, 30),
    ));
    results.push((
        2,
        "covariant brackets: skew-symmetry and Jacobi, 200 triples per setup",
        within(all_pass(&jac, "jacobi/cov-", 4), t, 60),
    ));

    let (iso, t1) = run(Suite::Iso);
    let mut perturbed = config();
    perturbed.perturb = Some(Fault::CharacterSquare);
    let (bad, t2) = run_with(&perturbed, Suite::Iso);
    let flipped = bad.records.len() == 5
        && bad.records.iter().all(|r| {
            r.status == Status::Fail && r.witness.as_deref().is_some_and(|w| w.contains("pair"))
        });
    results.push((
        3,
        "five isomorphism dictionaries on |labels| <= 3; squared character fails each",
        within(
            and(
                all_pass(&iso, "iso/", 5),
                outcome(
                    flipped,
                    format!("character-square fails {} of 5", bad.failures().count()),
                ),
            ),
            t1 + t2,
            60,
        ),
    ));

    let (sing, t) = run(Suite::Singular);
    results.push((
        4,
        "singular vectors for levels 1, 2 and all roots of [0,3]",
        within(all_pass(&sing, "singular/", 8), t, 120),
    ));

    let (dims, t) = run(Suite::Dims);
    let v01 = dims
        .get("dims/V/I=[0,1]")
        .map(|r| r.params.get("dims") == Some(&json!([1, 2, 5, 10, 20])));
    let l1 = dims.get("dims/L/l1/I=[0,3]");
    let l1_ok = l1.is_some_and(|r| {
        r.status == Status::Pass
            && match (r.params.get("dims_L"), r.params.get("dims_V")) {
                (Some(l), Some(v)) => l[2].as_u64() < v[2].as_u64(),
                _ => false,
            }
    });
    let l1_note = l1
        .map(|r| {
            format!(
                "L(1,0) dims {} vs V {}",
                r.params["dims_L"], r.params["dims_V"]
            )
        })
        .unwrap_or_default();
    results.push((
        5,
        "graded dimensions of V and L with two agreeing q-specializations",
        within(
            and(
                all_pass(&dims, "dims/V/", 2),
                outcome(v01 == Some(true) && l1_ok, l1_note),
            ),
            t,
            120,
        ),
    ));

    let (rel, t) = run(Suite::FockRelations);
    let shift = rel
        .get("fock-relations/probe")
        .and_then(|r| r.params.get("shift"))
        .cloned()
        .unwrap_or(json!(null));
    results.push((
        6,
        "Fock realization relations for |alpha|, |m| <= 2 at K = D = 8",
        within(
            and(
                all_pass(&rel, "fock-relations/", 2),
                outcome(shift.is_i64(), format!("probe shift {shift}")),
            ),
            t,
            180,
        ),
    ));

    let (ope, t) = run(Suite::Ope);
    results.push((
        7,
        "contraction factor to order 6 and operator products on 1, x1, x2",
        within(
            and(
                all_pass(&ope, "ope/contraction", 1),
                all_pass(&ope, "ope/product/", 3),
            ),
            t,
            60,
        ),
    ));

    let (van, t) = run(Suite::Vanish);
    results.push((
        8,
        "coincidence vanishing at levels 1, 2 and nilpotency on L(1,0)",
        within(
            and(
                all_pass(&van, "vanish/coincidence/", 3),
                all_pass(&van, "vanish/nilpotent/l1/", 4),
            ),
            t,
            300,
        ),
    ));

    let (qc, t) = run(Suite::QuasiComm);
    results.push((
        9,
        "commutator formula for |alpha|, |beta| <= 2 and the group-action axiom",
        within(
            and(
                all_pass(&qc, "quasi-comm/pair/", 25),
                all_pass(&qc, "quasi-comm/r-axiom/", 1),
            ),
            t,
            120,
        ),
    ));

    let (w, t) = run(Suite::Weights);
    results.push((
        10,
        "tensor vacuum weights for 1 <= |n| <= 3, total level <= 3",
        within(all_pass(&w, "weights/", 6), t, 30),
    ));

    let mut failed = 0;
    for (n, what, o) in &results {
        let tag = if o.ok { "PASS" } else { "FAIL" };
        println!("criterion {n:>2} {tag}: {what} ({})", o.note);
        failed += usize::from(!o.ok);
    }
    println!(
        "{} of {} criteria passed",
        results.len() - failed,
        results.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
