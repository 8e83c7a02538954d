//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
//!
//! Tolerances are fixed here: every algebraic identity is checked with exact
//! rational equality; the scaled-limit checks use the bounds stated per criterion.

use std::panic::{self, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ggh_core::exact::{int, rat};
use ggh_core::genfun;
use ggh_core::matching::{self, ConjectureReading};
use ggh_core::mehler_heine::{self, MhConfig};
use ggh_core::operator;
use ggh_core::presets;
use ggh_core::recurrence;
use ggh_core::report::all_passed;
use ggh_core::sweep::{self, random_fraction};
use ggh_core::{Exec, Kind, Rational, Report, SystemSpec};

const SEED: u64 = sweep::DEFAULT_SEED;
const EXEC: Exec = Exec::Parallel;

/// Exact identities: zero tolerance.
const REP_N_MAX: usize = 30;
const EIGEN_N_MAX: usize = 30;
const BAND_N_MAX: usize = 25;
const HAHN_N_MAX: usize = 20;
const SERIES_ORDER: usize = 15;
/// Scaled limits.
const MH_SHIFT_BOUND: f64 = 4e-3;
const MH_FINAL_BOUND: f64 = 1e-2;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

fn first_failure(reports: &[Report]) -> String {
    reports
        .iter()
        .find(|r| !r.passed())
        .map(|r| {
            format!(
                "first failure: {} [{}] {}",
                r.check,
                r.params.get("spec").cloned().unwrap_or_default(),
                r.violations.first().cloned().unwrap_or_default()
            )
        })
        .unwrap_or_default()
}

fn sweep_verdict(what: &str, reports: &[Report]) -> Verdict {
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let skipped = reports.iter().filter(|r| r.is_skipped()).count();
    verdict(
        failed == 0,
        format!("{} {what} checks, {failed} failed, {skipped} skipped {}", reports.len(), first_failure(reports)),
    )
}

fn c1_representations() -> Verdict {
    let specs = sweep::grid(SEED);
    let reports = sweep::representation_sweep(&specs, REP_N_MAX, EXEC);
    sweep_verdict(&format!("representation (n <= {REP_N_MAX})"), &reports)
}

fn c2_eigen() -> Verdict {
    let mut specs = sweep::grid(SEED);
    specs.extend(sweep::general_q_specs());
    let reports = sweep::eigen_sweep(&specs, EIGEN_N_MAX, EXEC);
    sweep_verdict(&format!("eigen (n <= {EIGEN_N_MAX}, 3 general q)"), &reports)
}

/// `-tau l n(n-1)...(n-l+2)` at `j = l-1`, zero elsewhere.
fn closed_row(tau: &Rational, l: usize, n: usize) -> Vec<Rational> {
    let mut row = vec![int(0); n + 1];
    if l - 1 <= n {
        let falling = (0..l - 1).fold(int(1), |acc, s| acc * int(n as i64 - s as i64));
        row[l - 1] = -(tau * int(l as i64) * falling);
    }
    row
}

fn c3_recurrence() -> Verdict {
    let specs = sweep::grid(SEED);
    let band = sweep::bandwidth_sweep(&specs, BAND_N_MAX, EXEC);
    let mut mismatches = Vec::new();
    let mut rows = 0;
    let mut cases: Vec<(Rational, usize, &str)> = Vec::new();
    for l in 1..=4 {
        for tau in [int(1), rat(-3, 2), rat(2, 5)] {
            cases.push((tau, l, "gould-hopper"));
        }
        cases.push((-int(l as i64).recip(), l, "intro"));
    }
    for (tau, l, label) in &cases {
        let spec = SystemSpec::pure_power(Kind::Continuous, vec![], int(1), tau.clone(), *l).unwrap();
        let family = operator::build_family(&spec, BAND_N_MAX + 1, EXEC);
        for n in 0..=BAND_N_MAX {
            let got = recurrence::recurrence_row_from(&family, n).unwrap();
            rows += 1;
            if got != closed_row(tau, *l, n) {
                mismatches.push(format!("{label} l={l} tau={tau} n={n}"));
            }
        }
    }
    let band_ok = all_passed(&band);
    verdict(
        band_ok && mismatches.is_empty(),
        format!(
            "{} band checks (n <= {BAND_N_MAX}) {} {}; {rows} closed-form rows, {} mismatches {}",
            band.len(),
            if band_ok { "clean" } else { "FAILED" },
            first_failure(&band),
            mismatches.len(),
            mismatches.first().cloned().unwrap_or_default()
        ),
    )
}

fn c4_hahn() -> Verdict {
    let reports = sweep::hahn_sweep(&sweep::grid(SEED), HAHN_N_MAX, EXEC);
    sweep_verdict(&format!("Hahn (n <= {HAHN_N_MAX})"), &reports)
}

fn c5_generating_functions() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 5);
    let mut reports = Vec::new();
    for draw in 0..5 {
        let upper: Vec<Rational> = (0..draw % 3).map(|_| random_fraction(&mut rng)).collect();
        let lower: Vec<Rational> = (0..(draw + 1) % 3).map(|_| random_fraction(&mut rng)).collect();
        let u = random_fraction(&mut rng);
        reports.push(genfun::gf_exp_check_general(&upper, &lower, &u, SERIES_ORDER).unwrap());
        reports.push(genfun::srivastava_check(&upper, &lower, &u, SERIES_ORDER).unwrap());
    }
    let generic = reports.len();
    let xs = [rat(1, 3), rat(2, 1), rat(-5, 4)];
    let specs = sweep::grid(SEED);
    let family_reports: Vec<Vec<Report>> = EXEC.map(&specs, |s| {
        let mut out = Vec::new();
        for x in &xs {
            match (s.kind(), s.l()) {
                (Kind::Continuous, 1) => out.push(genfun::gf_l1_check(s, x, SERIES_ORDER).unwrap()),
                (Kind::Discrete, 1) => out.push(genfun::gf_disc_l1_check(s, x, SERIES_ORDER).unwrap()),
                _ => {}
            }
            match s.kind() {
                Kind::Continuous => out.push(genfun::gf_total_check(s, x, SERIES_ORDER).unwrap()),
                Kind::Discrete => {
                    for i in 0..s.l() {
                        out.push(genfun::gf_disc_checks(s, i, x, SERIES_ORDER).unwrap());
                    }
                }
            }
        }
        out
    });
    reports.extend(family_reports.into_iter().flatten());
    let mut v = sweep_verdict(&format!("generating-function (order {SERIES_ORDER})"), &reports);
    v.detail = format!("{generic} generic-identity checks + {}", v.detail);
    v
}

fn c6_mehler_heine() -> Verdict {
    let mut lines = Vec::new();
    let mut pass = true;
    let shift = SystemSpec::pure_power(Kind::Continuous, vec![], int(1), int(1), 1).unwrap();
    let cfg_all = |n: usize| MhConfig {
        tol: MH_FINAL_BOUND,
        tail: n,
    };
    let ns = [50, 100, 200, 400];
    let r = mehler_heine::mh_l1_check(&mehler_heine::mh_companion(&shift).unwrap(), &int(1), &ns, cfg_all(ns.len()), EXEC).unwrap();
    let last = *r.deviations.last().unwrap();
    let ok = r.report.passed() && last < MH_SHIFT_BOUND;
    pass &= ok;
    lines.push(format!("d=0 l=1 deviations {:?}", r.deviations.iter().map(|d| format!("{d:.3e}")).collect::<Vec<_>>()));
    let ms = [25, 50, 100, 200];
    let specs = [
        ("hermite-type", SystemSpec::pure_power(Kind::Continuous, vec![], int(1), int(1), 2).unwrap()),
        ("d=1 l=2 alpha=1/3", SystemSpec::pure_power(Kind::Continuous, vec![rat(1, 3)], int(1), int(1), 2).unwrap()),
    ];
    for (name, spec) in &specs {
        let companion = mehler_heine::mh_companion(spec).unwrap();
        for i in 0..2 {
            let r = mehler_heine::mh_power_check(&companion, &int(1), i, &ms, cfg_all(ms.len()), EXEC).unwrap();
            pass &= r.report.passed();
            lines.push(format!(
                "{name} i={i} deviations {:?}{}",
                r.deviations.iter().map(|d| format!("{d:.3e}")).collect::<Vec<_>>(),
                if r.report.passed() { "" } else { " FAILED" }
            ));
        }
    }
    verdict(pass, lines.join("; "))
}

fn c7a_complete() -> Verdict {
    let mut reports = Vec::new();
    for n in 1..=8 {
        for r in 1..=3 {
            reports.push(matching::complete_check(n, r, EXEC).unwrap());
        }
    }
    sweep_verdict("complete-graph (n <= 8, r in 1..3)", &reports)
}

fn c7b_bipartite() -> Verdict {
    let mut reports = Vec::new();
    for n in 1..8 {
        for m in 1..=8 - n {
            reports.push(matching::bipartite_check(n, m, 1, EXEC).unwrap());
        }
    }
    sweep_verdict("bipartite (n + m <= 8, r = 1)", &reports)
}

/// Part vectors in nonincreasing order with sum `n`.
fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn c7c_multipartite() -> Verdict {
    let mut cases: Vec<(Vec<usize>, usize)> = Vec::new();
    for n in 1..=8 {
        cases.extend(partitions(n, n).into_iter().map(|p| (p, 1)));
    }
    cases.push((vec![2, 2], 3));
    cases.push((vec![2, 1, 1], 3));
    let mut lines = Vec::new();
    let mut pass = true;
    for reading in ConjectureReading::ALL {
        let reports: Vec<Report> = EXEC.map(&cases, |(parts, r)| {
            matching::conjecture_multipartite(parts, *r, reading, Exec::Sequential).unwrap()
        });
        let mut by_k = std::collections::BTreeMap::<usize, (usize, usize)>::new();
        for ((parts, _), rep) in cases.iter().zip(&reports) {
            let e = by_k.entry(parts.len()).or_default();
            e.1 += 1;
            if rep.passed() {
                e.0 += 1;
            }
        }
        let equal = reports.iter().filter(|r| r.passed()).count();
        if equal != reports.len() {
            pass = false;
        }
        let first = cases
            .iter()
            .zip(&reports)
            .find(|(_, r)| !r.passed())
            .map(|((p, r), rep)| format!(" first counterexample parts={p:?} r={r}: {}", rep.violations[0]))
            .unwrap_or_default();
        let groups: Vec<String> = by_k.iter().map(|(k, (e, t))| format!("k={k}: {e}/{t}")).collect();
        lines.push(format!("{} reading EQUAL {equal}/{} ({}){first}", reading.name(), reports.len(), groups.join(", ")));
    }
    verdict(pass, lines.join("; "))
}

fn c8_degeneration() -> Verdict {
    let mut specs = Vec::new();
    for kind in [Kind::Continuous, Kind::Discrete] {
        for rho in [int(1), rat(-1, 2)] {
            for l in 1..=2 {
                specs.push(SystemSpec::pure_power(kind, vec![int(-3)], rho.clone(), int(1), l).unwrap());
            }
        }
    }
    let literal: Vec<Report> = specs.iter().map(|s| operator::degeneration_check(s, 12, EXEC)).collect();
    let subspace: Vec<Report> = specs.iter().map(|s| operator::invariant_subspace_check(s, 12, EXEC)).collect();
    let failing = literal.iter().filter(|r| !r.passed()).count();
    verdict(
        failing == 0,
        format!(
            "P_n = psi_n for 3 <= n <= 12 on {} specs: {failing} fail {}; span{{psi_3..psi_n}} invariant-subspace form holds on {}/{}",
            specs.len(),
            first_failure(&literal),
            subspace.iter().filter(|r| r.passed()).count(),
            subspace.len()
        ),
    )
}

fn c9_cli() -> Verdict {
    let mut specs = sweep::grid(SEED);
    specs.extend(sweep::general_q_specs());
    specs.extend(presets::PRESETS.iter().map(|p| p.build_default().unwrap()));
    let mut round_trip_failures = Vec::new();
    for s in &specs {
        let text = s.to_json();
        let back = SystemSpec::from_json(&text).unwrap();
        if &back != s || back.to_json() != text {
            round_trip_failures.push(s.label());
        }
    }
    let bin = env!("CARGO_BIN_EXE_ggh");
    let mut preset_failures = Vec::new();
    for p in presets::PRESETS {
        let status = Command::new(bin).args(["verify", "all", "--preset", p.name]).output().unwrap();
        if status.status.code() != Some(0) {
            preset_failures.push(p.name);
        }
    }
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let corrupted = [
        "zero_rho.json",
        "bad_kind.json",
        "bad_rational.json",
        "empty_q.json",
        "zero_leading_q.json",
        "unknown_field.json",
        "truncated.json",
    ];
    let mut fixture_failures = Vec::new();
    for name in corrupted {
        let out = Command::new(bin)
            .args(["verify", "eigen", "--spec"])
            .arg(fixtures.join(name))
            .output()
            .unwrap();
        if out.status.code() != Some(2) {
            fixture_failures.push(name);
        }
    }
    verdict(
        round_trip_failures.is_empty() && preset_failures.is_empty() && fixture_failures.is_empty(),
        format!(
            "{} specs round-trip ({} failures); verify all on {} presets ({} nonzero exits {:?}); {} corrupted fixtures ({} without exit 2 {:?})",
            specs.len(),
            round_trip_failures.len(),
            presets::PRESETS.len(),
            preset_failures.len(),
            preset_failures,
            corrupted.len(),
            fixture_failures.len(),
            fixture_failures
        ),
    )
}

fn main() {
    let criteria: Vec<(&str, &str, fn() -> Verdict)> = vec![
        ("1", "representation-construction equivalence", c1_representations),
        ("2", "eigenfunction identity", c2_eigen),
        ("3", "recurrence bandwidth and closed rows", c3_recurrence),
        ("4", "Hahn property", c4_hahn),
        ("5", "generating functions", c5_generating_functions),
        ("6", "scaled limits", c6_mehler_heine),
        ("7a", "matching: complete graphs", c7a_complete),
        ("7b", "matching: complete bipartite graphs", c7b_bipartite),
        ("7c", "matching: complete multipartite closed form", c7c_multipartite),
        ("8", "finite-system degeneration", c8_degeneration),
        ("9", "CLI round-trip and exit codes", c9_cli),
    ];
    let mut failed = Vec::new();
    for (id, title, run) in criteria {
        let start = Instant::now();
        let v = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            verdict(false, format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        println!(
            "criterion {id:<3} {:<4} {title} [{secs:.1}s]: {}",
            if v.pass { "PASS" } else { "FAIL" },
            v.detail.trim()
        );
        if !v.pass {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria passed");
    } else {
        println!("acceptance: {} criteria failed: {}", failed.len(), failed.join(", "));
        std::process::exit(1);
    }
}
