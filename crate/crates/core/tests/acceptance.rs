//! Acceptance suite: one line per criterion, exit status nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use hallbridge::algdef::load_algebra;
use hallbridge::builtin::{A2_F2, A2_F3, THREE_VERTEX_F2, TWO_CYCLE_F2};
use hallbridge::hall::{Budgets, Lab};
use hallbridge::modcat::{hall_number_oracle, ModCat};
use hallbridge::verify::{run_check, Check, CheckResult, VerifyConfig};

const BOUND: usize = 3;

struct Case {
    name: &'static str,
    lab: Lab,
}

fn build(name: &'static str, text: &str) -> Result<Case, String> {
    let alg = load_algebra(text.as_bytes()).map_err(|e| format!("{name}: {e}"))?;
    let lab = Lab::new(alg, BOUND, Budgets::default()).map_err(|e| format!("{name}: {e}"))?;
    Ok(Case { name, lab })
}

/// Run `checks` on every case; returns a summary and whether everything passed.
fn run(cases: &[&Case], checks: &[Check]) -> (String, bool) {
    let cfg = VerifyConfig::new(BOUND);
    let mut tested = 0;
    let mut notes = Vec::new();
    for case in cases {
        for &check in checks {
            match run_check(&case.lab, check, &cfg) {
                Ok(r) => {
                    tested += r.pairs_tested;
                    if !r.passed() {
                        notes.push(failure_note(case.name, &r));
                    }
                }
                Err(e) => notes.push(format!("{}/{check}: error {e}", case.name)),
            }
        }
    }
    let ok = notes.is_empty();
    let summary = if ok {
        format!("{tested} instances")
    } else {
        notes.join("; ")
    };
    (summary, ok)
}

fn failure_note(case: &str, r: &CheckResult) -> String {
    format!(
        "{case}/{}: {} failures, first {}",
        r.name,
        r.failures.len(),
        r.failures[0].key
    )
}

fn report(
    results: &mut Vec<bool>,
    n: usize,
    title: &str,
    start: Instant,
    (summary, ok): (String, bool),
) {
    let status = if ok { "PASS" } else { "FAIL" };
    println!(
        "criterion {n:>2} [{status}] {title}: {summary} ({:.1}s)",
        start.elapsed().as_secs_f64()
    );
    results.push(ok);
}

fn main() -> ExitCode {
    let cases = match [
        ("A2/F2", A2_F2),
        ("A2/F3", A2_F3),
        ("two-cycle/F2", TWO_CYCLE_F2),
        ("three-vertex/F2", THREE_VERTEX_F2),
    ]
    .into_iter()
    .map(|(n, t)| build(n, t))
    .collect::<Result<Vec<_>, _>>()
    {
        Ok(c) => c,
        Err(e) => {
            println!("setup failed: {e}");
            return ExitCode::FAILURE;
        }
    };
    let a2: Vec<&Case> = cases[..2].iter().collect();
    let gl2: Vec<&Case> = cases[2..].iter().collect();
    let all: Vec<&Case> = cases.iter().collect();
    let mut results = Vec::new();

    let t = Instant::now();
    report(
        &mut results,
        1,
        "main embedding, A2 over F2 and F3",
        t,
        run(&a2, &[Check::Main]),
    );

    let t = Instant::now();
    report(
        &mut results,
        2,
        "reduced embedding, A2 over F2 and F3",
        t,
        run(&a2, &[Check::Reduced]),
    );

    let t = Instant::now();
    let (mut summary, mut ok) = run(&gl2, &[Check::Main, Check::Reduced]);
    let gl = [gl2[0].lab.gldim, gl2[1].lab.gldim];
    if gl[0] != 2 || gl[1] > 2 {
        ok = false;
        summary = format!("global dimensions {gl:?}; {summary}");
    } else {
        summary = format!("global dimensions {gl:?}, {summary}");
    }
    report(
        &mut results,
        3,
        "global dimension two cases",
        t,
        (summary, ok),
    );

    let t = Instant::now();
    report(
        &mut results,
        4,
        "Hom cardinality formula for C_A",
        t,
        run(&all, &[Check::Phi]),
    );

    let t = Instant::now();
    report(
        &mut results,
        5,
        "Ext isomorphism for C_A",
        t,
        run(&all, &[Check::Extiso]),
    );

    let t = Instant::now();
    report(
        &mut results,
        6,
        "E_A independent of the resolution",
        t,
        run(&all, &[Check::Epad]),
    );

    let t = Instant::now();
    report(
        &mut results,
        7,
        "relations with K_P and K*_P",
        t,
        run(&all, &[Check::Relations]),
    );

    let t = Instant::now();
    let (mut summary, mut ok) = run(&a2[..1], &[Check::Rp]);
    for case in &a2 {
        let m: &ModCat = case.lab.m();
        let q = m.q() as u128;
        for s in &m.simples {
            let ss = s.direct_sum(s);
            match hall_number_oracle(m, s, &ss, s, 1 << 20) {
                Ok(g) if g == q + 1 => {}
                other => {
                    ok = false;
                    summary = format!("{summary}; sanity at q={q} gave {other:?}");
                }
            }
        }
    }
    report(
        &mut results,
        8,
        "Riedtmann formula against submodule counts",
        t,
        (summary, ok),
    );

    let t = Instant::now();
    report(
        &mut results,
        9,
        "associativity, 200 samples per algebra",
        t,
        run(&all, &[Check::Assoc]),
    );

    let t = Instant::now();
    report(
        &mut results,
        10,
        "structural sanity",
        t,
        run(&all, &[Check::Structure]),
    );

    let passed = results.iter().filter(|&&r| r).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
