//! Acceptance criteria: one PASS/FAIL line each. Equality is exact
//! everywhere; the only tolerances are the wall-clock budgets below.
//!
//! A criterion that asks for a printed closed form to hold fails when the
//! oracle falsifies that form, even if a corrected form matches.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use qschroder::hankel::{verify_identity, HankelReport, IdentityId, Mode, Status};
use qschroder::verify::{self, CheckReport, Suite, VerifyConfig};
use qschroder::Registry;

use IdentityId::*;

const SEED: u64 = 42;
const POINTS: usize = 20;

struct Outcome {
    pass: bool,
    detail: String,
}

fn all_match(checks: &[CheckReport]) -> Outcome {
    let bad: Vec<String> = checks
        .iter()
        .filter(|c| c.status != Status::Match)
        .map(|c| format!("{} [{}]", c.check, c.status))
        .collect();
    Outcome {
        pass: bad.is_empty() && !checks.is_empty(),
        detail: if bad.is_empty() { format!("{} checks match", checks.len()) } else { bad.join("; ") },
    }
}

/// Symbolic reports for `n = 1..=symbolic`, plus `POINTS` seeded points
/// for `n = 1..=specialized` when that is nonzero.
fn identity_reports(reg: &Registry, ids: &[IdentityId], symbolic: usize, specialized: usize) -> Vec<HankelReport> {
    let mut out = Vec::new();
    for &id in ids {
        out.extend(verify_identity(reg, id, symbolic, &Mode::Symbolic).expect("symbolic run"));
        if specialized > 0 {
            let mode = Mode::Specialized { seed: SEED, points: POINTS };
            out.extend(verify_identity(reg, id, specialized, &mode).expect("specialized run"));
        }
    }
    out
}

/// Passes if every printed form matches; lists the first failing `n` of
/// each identity and mode otherwise.
fn printed_forms_hold(reports: &[HankelReport]) -> Outcome {
    let mut failing: Vec<(String, String, usize, Status)> = Vec::new();
    for r in reports.iter().filter(|r| !r.matches) {
        if !failing.iter().any(|(id, mode, _, _)| *id == r.identity && *mode == r.mode) {
            failing.push((r.identity.clone(), r.mode.clone(), r.n, r.status));
        }
    }
    Outcome {
        pass: failing.is_empty(),
        detail: if failing.is_empty() {
            format!("{} comparisons match", reports.len())
        } else {
            failing
                .iter()
                .map(|(id, mode, n, s)| format!("{id} {mode} from n = {n}: {s}"))
                .collect::<Vec<_>>()
                .join("; ")
        },
    }
}

fn criterion(number: usize, name: &str, budget: Option<Duration>, body: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let in_time = budget.is_none_or(|b| elapsed <= b);
    let pass = outcome.pass && in_time;
    let timing = match budget {
        Some(b) => format!("{:.2} s of {} s", elapsed.as_secs_f64(), b.as_secs()),
        None => format!("{:.2} s", elapsed.as_secs_f64()),
    };
    let late = if in_time { "" } else { " OVER BUDGET;" };
    println!("{} {number:>2}. {name} ({timing}){late} {}", if pass { "PASS" } else { "FAIL" }, outcome.detail);
    pass
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

fn main() -> ExitCode {
    let reg = Registry::standard();
    let cfg = VerifyConfig { seed: SEED, points: POINTS, ..VerifyConfig::default() };
    let results = [
        criterion(1, "printed sequences", secs(1), || all_match(&verify::printed_sequences(&reg))),
        criterion(2, "printed triangles", secs(1), || all_match(&verify::printed_triangles())),
        criterion(3, "classical Hankel identities, n = 1..10", secs(5), || {
            let ids = [SchroderLargeD0, SchroderLargeD1, LittleSchroderD0, LittleSchroderD1, LittleSchroderD2];
            printed_forms_hold(&identity_reports(&reg, &ids, 10, 0))
        }),
        criterion(4, "two-variable Hankel identities", secs(60), || {
            let ids = [SchroderLikeD0, SchroderLikeD1, LittleSchroderLikeD0, LittleSchroderLikeD1, LittleSchroderLikeD2];
            printed_forms_hold(&identity_reports(&reg, &ids, 6, 8))
        }),
        criterion(5, "q Hankel identities", secs(300), || {
            let ids = [QSchroderLikeD0, QSchroderLikeD1, QSchroderLikeD2, QLittleSchroderLikeD0, QLittleSchroderLikeD1];
            printed_forms_hold(&identity_reports(&reg, &ids, 5, 8))
        }),
        criterion(6, "b-family Hankel identities, n = 1..5", secs(60), || {
            let reports = identity_reports(&reg, &[BFamilyD0, BFamilyD1, BFamilyD2, BFamilyD2Alt], 5, 0);
            let recorded = reports.iter().all(|r| r.status.is_ok());
            let d0 = reports.iter().filter(|r| r.identity == BFamilyD0.key()).all(|r| r.matches);
            let mut outcome = printed_forms_hold(&reports);
            outcome.pass = recorded && d0;
            if !d0 {
                outcome.detail = format!("{} printed form does not hold; {}", BFamilyD0.key(), outcome.detail);
            }
            outcome
        }),
        criterion(7, "associated sequences and aeration maps, 6 terms", secs(60), || {
            let keys = [
                "schroder-large",
                "little-schroder",
                "schroder-like",
                "little-schroder-like",
                "schroder-like-shift",
                "q-schroder-like",
                "q-little-schroder-like",
                "b-family",
                "q-schroder-like-shift",
                "q-classical",
            ];
            let checks: Vec<CheckReport> = verify::jacobi_checks(&reg, 6)
                .into_iter()
                .filter(|c| {
                    keys.iter().any(|k| c.check.starts_with(&format!("{k} extracted")))
                        || c.check.contains("aerated/q-schroder-like to q-schroder-like")
                        || c.check.contains("aerated/q-little-schroder-like to q-little-schroder-like")
                })
                .collect();
            all_match(&checks)
        }),
        criterion(8, "continued fractions", secs(30), || all_match(&verify::continued_fraction_checks(&reg))),
        criterion(9, "h-function identities to order 10", secs(60), || all_match(&verify::h_function_checks(&reg, 10))),
        criterion(10, "cross-route agreement and special values", secs(60), || {
            all_match(&verify::route_checks(&reg, &cfg))
        }),
        criterion(11, "path oracles", secs(120), || all_match(&verify::oracle_checks(&reg, &cfg))),
        criterion(12, "Polya-Gessel consistency, 6 terms", secs(10), || {
            all_match(&verify::polya_gessel_checks(&reg, 6))
        }),
        criterion(13, "determinism of the full suite at seed 42", None, || {
            let render = || {
                let report = verify::run_suite(&Registry::standard(), Suite::All, &cfg).expect("suite runs");
                serde_json::to_string_pretty(&report).expect("serializable")
            };
            let (a, b) = (render(), render());
            Outcome { pass: a == b, detail: format!("two runs, {} bytes each", a.len()) }
        }),
    ];
    let failed = results.iter().filter(|&&p| !p).count();
    println!("{} of {} criteria pass", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
