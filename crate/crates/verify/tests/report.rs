use std::collections::BTreeMap;

use capelli_core::uea::pfaffian_central;
use capelli_core::{LieContext, PbwAlgebra};
use capelli_verify::{run_suite, CheckSet, Params, Report, Status, SuiteReport};

#[test]
fn failure_injection_reports_the_offending_monomial() {
    let alg = PbwAlgebra::new(&LieContext::so(3).unwrap()).unwrap();
    let c1 = pfaffian_central(&alg, 1).unwrap();
    let broken = c1.plus(&alg.generator(-1, -1).unwrap());
    let mut checks = CheckSet::new();
    checks.run("so_3/k=1/equals-itself", || alg.expect_eq("C_1", &c1, &c1));
    checks.run("so_3/k=1/injected", || alg.expect_eq("C_1", &c1, &broken));
    let records = checks.finish();
    assert_eq!(records[0].id, "so_3/k=1/equals-itself");
    assert_eq!(records[1].status, Status::Fail);
    let w = records[1].witness.as_deref().unwrap();
    assert!(w.contains("F(-1,-1)"), "{w}");

    let report = Report {
        suites: vec![SuiteReport { name: "injected".into(), params: BTreeMap::new(), checks: records }],
        ..Report::default()
    };
    assert_eq!(report.exit_code(), 1);
    let json = report.to_json();
    assert!(json.contains("\"status\": \"fail\""));
    assert!(json.contains("F(-1,-1)"));
    assert_eq!(json.matches("\"witness\"").count(), 1);
}

#[test]
fn pfaffian_suite_at_a_single_point() {
    let p = Params { big_n: Some(3), m: Some(2), k: Some(1), ..Params::default() };
    let r = run_suite("thm-4.1", &p).unwrap();
    assert!(r.passed());
    assert!(r.checks.iter().any(|c| c.id == "so_3/m=2/k=1/pfaffian-image"));
}

#[test]
fn timing_is_the_only_nondeterministic_field() {
    let p = Params { seed: 3, ..Params::default() };
    let a = Report { suites: vec![run_suite("prop-2.2", &p).unwrap()], ..Report::default() };
    let b = Report { suites: vec![run_suite("prop-2.2", &p).unwrap()], ..Report::default() };
    assert_eq!(a.without_timing().to_json(), b.without_timing().to_json());
}

#[test]
fn explicit_oversized_tensor_is_rejected() {
    let p = Params { big_n: Some(4), m: Some(4), max_cells: 100, ..Params::default() };
    assert!(run_suite("decomp-3.04", &p).is_err());
    let p = Params { big_n: Some(4), m: Some(4), ..Params::default() };
    assert!(run_suite("decomp-3.04", &p).unwrap().passed());
}
