//! Acceptance criteria: one line per criterion, each with its time budget.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use fpr_core::classifier::BoundKind;
use fpr_core::exact_math::Rational;
use fpr_core::fpr_formulas::fpr_partition_transposition;
use fpr_core::verify_harness::{catalog, run_cases, Check, Report, Status, Suite, VerificationCase};

struct Outcome {
    ok: bool,
    note: String,
}

fn threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn by_ids(all: &[VerificationCase], ids: &[&str]) -> Vec<VerificationCase> {
    ids.iter()
        .map(|id| all.iter().find(|c| c.id == *id).unwrap_or_else(|| panic!("missing case {id}")).clone())
        .collect()
}

fn run(cases: &[VerificationCase]) -> Vec<Report> {
    run_cases(cases, threads()).expect("harness runs")
}

fn failures(reports: &[Report]) -> Vec<String> {
    reports
        .iter()
        .filter(|r| r.status != Status::Pass)
        .map(|r| format!("{}: computed {} expected {} {}", r.case, r.computed, r.expected, r.detail.clone().unwrap_or_default()))
        .collect()
}

fn value_of<'a>(reports: &'a [Report], id: &str) -> &'a str {
    &reports.iter().find(|r| r.case == id).expect("report").computed
}

fn all_pass(reports: &[Report]) -> Outcome {
    let bad = failures(reports);
    Outcome { ok: bad.is_empty() && !reports.is_empty(), note: if bad.is_empty() { format!("{} cases", reports.len()) } else { bad.join("; ") } }
}

fn with_values(reports: &[Report], want: &[(&str, &str)]) -> Outcome {
    let mut out = all_pass(reports);
    for (id, v) in want {
        let got = value_of(reports, id);
        if got != *v {
            out.ok = false;
            out.note = format!("{id}: {got} instead of {v}");
        }
    }
    out
}

fn is_main_scan(c: &VerificationCase) -> bool {
    matches!(c.check, Check::Exceptions { bound: BoundKind::Main })
}

fn table4(all: &[VerificationCase]) -> Outcome {
    let ids = ["tab:a6/A6/A5prim/33", "tab:a6/S6/S5prim/23", "tab:a6/S6/S5prim/33", "tab:a6/S6/S2wrS3/2", "tab:a6/A6.2^2/S3wrS2.2/2"];
    let reps = run(&by_ids(all, &ids));
    let want: Vec<(&str, &str)> = ids.iter().copied().zip(["1/2", "2/3", "1/2", "7/15", "2/5"]).collect();
    with_values(&reps, &want)
}

fn partitions(all: &[VerificationCase]) -> Outcome {
    let ids = ["partitions/S6/transposition", "partitions/S8/transposition", "partitions/S10/transposition"];
    let reps = run(&by_ids(all, &ids));
    let mut want = Vec::new();
    for (id, n) in ids.iter().zip([6i64, 8, 10]) {
        let closed = Rational::ratio(1, 3) + Rational::ratio(n - 4, 6 * (n - 1));
        assert_eq!(fpr_partition_transposition(n).unwrap(), closed);
        want.push((*id, closed.to_string()));
    }
    let want: Vec<(&str, &str)> = want.iter().map(|(a, b)| (*a, b.as_str())).collect();
    with_values(&reps, &want)
}

fn m22(all: &[VerificationCase]) -> Outcome {
    let reps = run(&by_ids(all, &["m22.2/order", "m22.2/degree", "m22.2/2B", "m22.2/mindeg"]));
    with_values(&reps, &[("m22.2/order", "887040"), ("m22.2/degree", "22"), ("m22.2/2B", "4/11"), ("m22.2/mindeg", "14")])
}

fn cross_check(all: &[VerificationCase]) -> Outcome {
    let ids = [
        "l3(2)/P1/transvection",
        "l4(2)/P1/transvection",
        "sp6/Ominus/degree",
        "sp6/Ominus/b1",
        "sp6/Ominus/b1/class-row",
        "sp6/Ominus/b1/subb2-row",
        "u4(2)/N1/omega",
        "u4(2).2/P2/tau",
    ];
    let reps = run(&by_ids(all, &ids));
    let mut out = with_values(
        &reps,
        &[
            ("l3(2)/P1/transvection", "3/7"),
            ("l4(2)/P1/transvection", "7/15"),
            ("sp6/Ominus/degree", "28"),
            ("sp6/Ominus/b1", "4/7"),
            ("u4(2)/N1/omega", "13/40"),
            ("u4(2).2/P2/tau", "5/9"),
        ],
    );
    let three: BTreeSet<&str> = ["sp6/Ominus/b1", "sp6/Ominus/b1/class-row", "sp6/Ominus/b1/subb2-row"]
        .iter()
        .flat_map(|id| {
            let r = reps.iter().find(|r| r.case == *id).unwrap();
            [r.computed.as_str(), r.expected.as_str()]
        })
        .collect();
    if three.len() != 1 {
        out.ok = false;
        out.note = format!("three-way disagreement {three:?}");
    }
    out
}

fn subset_rcycles(all: &[VerificationCase]) -> Outcome {
    let cases: Vec<VerificationCase> = all.iter().filter(|c| c.id.starts_with("subset/S") && c.id.contains("/rcycle")).cloned().collect();
    let mut expected = 0;
    for n in 5..=9u64 {
        let primes = (2..=n).filter(|&p| (2..p).all(|d| p % d != 0)).count();
        expected += primes * (1..n).filter(|l| 2 * l < n).count();
    }
    let mut out = all_pass(&run(&cases));
    if cases.len() != expected {
        out.ok = false;
        out.note = format!("{} rcycle cases, expected {expected}", cases.len());
    }
    out
}

fn affine_transvection(all: &[VerificationCase]) -> Outcome {
    let reps = run(&by_ids(all, &["affine/3^2:GL23/transvection", "affine/3^2:GL23/max3", "affine/3^2:GL23/exceptions"]));
    let mut out = with_values(&reps, &[("affine/3^2:GL23/transvection", "1/3")]);
    let scan = value_of(&reps, "affine/3^2:GL23/exceptions");
    if scan != "2:{} 3:{1/3}" {
        out.ok = false;
        out.note = format!("scan {scan}");
    }
    out
}

fn diagonal(all: &[VerificationCase]) -> Outcome {
    let ids = ["diag/A5/k2/degree", "diag/A5/k2/max2", "diag/A5/k2/inner-involution", "diag/A5/k2/R1-identity-alpha", "diag/A5/k2/exceptions"];
    let reps = run(&by_ids(all, &ids));
    with_values(
        &reps,
        &[
            ("diag/A5/k2/degree", "60"),
            ("diag/A5/k2/max2", "4/15"),
            ("diag/A5/k2/inner-involution", "1/15"),
            ("diag/A5/k2/R1-identity-alpha", "4/15"),
            ("diag/A5/k2/exceptions", "2:{} 3:{} 5:{}"),
        ],
    )
}

fn product(all: &[VerificationCase]) -> Outcome {
    let ids = ["product/S5wrS2/degree", "product/S5wrS2/x1-transposition", "product/S5wrS2/x1-3cycle", "product/S5wrS2/x1-5cycle", "product/S5wrS2/pi-bound"];
    let reps = run(&by_ids(all, &ids));
    with_values(&reps, &[("product/S5wrS2/degree", "25"), ("product/S5wrS2/x1-transposition", "3/5"), ("product/S5wrS2/x1-3cycle", "2/5")])
}

fn minindex(all: &[VerificationCase]) -> Outcome {
    let cases: Vec<VerificationCase> =
        all.iter().filter(|c| c.suites.contains(&Suite::Minindex) && matches!(c.check, Check::MinIndex { .. })).cloned().collect();
    let reps = run(&cases);
    let subsets = reps.iter().filter(|r| r.case.starts_with("subset/")).count();
    let mut out = with_values(&reps, &[("l2(8):3/P1/minindex", "4"), ("u4(2).2/P2/minindex", "6"), ("sp6/Ominus/minindex", "6")]);
    let grid: usize = (5..=9usize).map(|n| 2 * (1..n).filter(|l| 2 * l < n).count()).sum();
    if subsets != grid {
        out.ok = false;
        out.note = format!("{subsets} subset cases, expected {grid}");
    }
    out
}

fn odd_order(all: &[VerificationCase]) -> Outcome {
    let cases: Vec<VerificationCase> = all.iter().filter(|c| matches!(c.check, Check::OddIndexBounds { .. })).cloned().collect();
    let mut out = all_pass(&run(&cases));
    if cases.len() < 3 {
        out.ok = false;
        out.note = format!("{} odd order groups", cases.len());
    }
    out
}

fn exception_soundness(all: &[VerificationCase]) -> Outcome {
    let cases: Vec<VerificationCase> = all.iter().filter(|c| c.suites.contains(&Suite::Exceptions)).cloned().collect();
    let closable: BTreeSet<&str> = all.iter().filter(|c| c.group.closable).map(|c| c.group.key.as_str()).collect();
    let scanned: BTreeSet<&str> = cases.iter().filter(|c| is_main_scan(c)).map(|c| c.group.key.as_str()).collect();
    let mut out = all_pass(&run(&cases));
    let missing: Vec<&&str> = closable.difference(&scanned).collect();
    if !missing.is_empty() {
        out.ok = false;
        out.note = format!("closable groups without a scan: {missing:?}");
    } else if out.ok {
        out.note = format!("{} scans over {} groups", cases.len(), scanned.len());
    }
    out
}

fn invariants(all: &[VerificationCase]) -> Outcome {
    let cases: Vec<VerificationCase> = all.iter().filter(|c| c.suites.contains(&Suite::Burnside)).cloned().collect();
    let closable: BTreeSet<&str> = all.iter().filter(|c| c.group.closable).map(|c| c.group.key.as_str()).collect();
    let covered: BTreeSet<&str> = cases.iter().filter(|c| matches!(c.check, Check::Burnside)).map(|c| c.group.key.as_str()).collect();
    let mut out = all_pass(&run(&cases));
    if closable != covered {
        out.ok = false;
        out.note = format!("Burnside coverage differs: {:?}", closable.symmetric_difference(&covered).collect::<Vec<_>>());
    }
    out
}

#[test]
fn acceptance() {
    let all = catalog::catalog();
    type Criterion = fn(&[VerificationCase]) -> Outcome;
    let criteria: [(&str, u64, Criterion); 12] = [
        ("1 A6-socle special cases (five values)", 5, table4),
        ("2 transposition on bisections, n = 6, 8, 10", 30, partitions),
        ("3 M22:2 order, degree, 2B fpr, minimal degree", 60, m22),
        ("4 classical rows, Sp6(2) three-way 4/7", 120, cross_check),
        ("5 r-cycle on l-subsets against brute force, n <= 9", 60, subset_rcycles),
        ("6 affine 3^2:GL2(3) transvection and bound", 5, affine_transvection),
        ("7 diagonal A5 k = 2", 10, diagonal),
        ("8 product action S5 wr S2", 10, product),
        ("9 minimal index formulas and witnesses", 120, minindex),
        ("10 odd order affine index bounds", 30, odd_order),
        ("11 exception scan soundness", 300, exception_soundness),
        ("12 Burnside and fpr identity invariants", 120, invariants),
    ];
    let mut failed = Vec::new();
    for (name, budget, f) in criteria {
        let t = Instant::now();
        let mut out = f(&all);
        let took = t.elapsed();
        if took > Duration::from_secs(budget) {
            out.ok = false;
            out.note = format!("{} (over the {budget} s budget)", out.note);
        }
        let tag = if out.ok { "PASS" } else { "FAIL" };
        println!("[{tag}] {name}: {} in {:.2} s", out.note, took.as_secs_f64());
        if !out.ok {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
