use std::collections::BTreeSet;

use fpr_core::perm_core::{burnside_sum, max_fpr_by_prime_of, minimal_degree_of};
use fpr_core::verify_harness::{construct, find_case, run_case, run_cases, run_suite, select, Status, Suite};
use num_bigint::BigUint;

#[test]
fn case_ids_are_unique_and_findable() {
    let all = select(None);
    let ids: BTreeSet<&str> = all.iter().map(|c| c.id.as_str()).collect();
    assert_eq!(ids.len(), all.len());
    for id in ["tab:a6/S6/S2wrS3/2", "sp6/Ominus/b1", "m22.2/2B", "affine/3^2:GL23/transvection", "diag/A5/k2/R1-identity-alpha"] {
        assert!(find_case(id).is_some(), "{id}");
    }
    assert!(find_case("no/such/case").is_none());
    for s in Suite::ALL {
        assert!(!select(Some(s)).is_empty(), "{s}");
    }
}

#[test]
fn small_suites_pass() {
    for name in ["tables", "affine", "diagonal", "product"] {
        let (reports, summary) = run_suite(name, 2).unwrap();
        assert!(summary.all_passed(), "{name}: {:?}", reports.iter().filter(|r| r.status != Status::Pass).collect::<Vec<_>>());
        assert_eq!(summary.total.pass, reports.len());
    }
}

#[test]
fn parallel_runs_agree() {
    let cases = select(Some(Suite::Subset));
    let strip = |rs: Vec<fpr_core::verify_harness::Report>| rs.into_iter().map(|r| (r.case, r.status, r.computed)).collect::<Vec<_>>();
    let one = strip(run_cases(&cases, 1).unwrap());
    let four = strip(run_cases(&cases, 4).unwrap());
    assert_eq!(one, four);
    assert_eq!(one.len(), cases.len());
}

#[test]
fn single_case_matches_expected() {
    let r = run_case(&find_case("tab:a6/S6/S2wrS3/2").unwrap());
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.computed, "7/15");
    assert_eq!(r.computed, r.expected);
}

#[test]
fn constructions_answer_brute_queries() {
    let c = construct("a5-natural").unwrap();
    assert_eq!(c.degree(), 5);
    assert_eq!(c.order().unwrap(), BigUint::from(60u32));
    let classes = c.class_images().unwrap();
    assert_eq!(burnside_sum(&classes), BigUint::from(60u32));
    assert_eq!(minimal_degree_of(&classes).unwrap(), 3);

    let sp = construct("sp6-P1").unwrap();
    assert_eq!(sp.degree(), 63);
    let max = max_fpr_by_prime_of(&sp.class_images().unwrap());
    assert_eq!(max[&2].0.to_string(), "31/63");
    assert!(construct("nonexistent-natural").is_err());
}
