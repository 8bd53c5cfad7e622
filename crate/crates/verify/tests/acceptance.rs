//! Acceptance gate: one pass/fail line per criterion. A criterion passes when
//! every check of its suites passes, the expected cases were actually run,
//! and the whole group finishes inside its time budget.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use capelli_verify::{run_suite, Params, SuiteReport};

struct Criterion {
    number: usize,
    title: &'static str,
    budget_s: u64,
    runs: Vec<(&'static str, Params)>,
    /// Check-id fragments that must occur among the executed checks.
    required: &'static [&'static str],
}

fn with(f: impl FnOnce(&mut Params)) -> Params {
    let mut p = Params::default();
    f(&mut p);
    p
}

fn criteria() -> Vec<Criterion> {
    let d = Params::default;
    let n2 = || with(|p| p.big_n = Some(2));
    let n2m2 = || with(|p| {
        p.big_n = Some(2);
        p.m = Some(2);
    });
    vec![
        Criterion {
            number: 1,
            title: "Capelli identity in U(gl_N), N in {2,3}, m in {2,3}, k <= min(m,N)",
            budget_s: 10,
            runs: vec![("capelli-gl", d())],
            required: &["gl_2/m=2/k=2/det/image", "gl_3/m=3/k=3/det/image", "gl_3/m=2/k=2/det/image"],
        },
        Criterion {
            number: 2,
            title: "permanent Capelli identity, same ranges",
            budget_s: 30,
            runs: vec![("capelli-gl-per", d())],
            required: &["gl_2/m=2/k=2/per/image", "gl_3/m=3/k=3/per/image"],
        },
        Criterion {
            number: 3,
            title: "Pfaffian C_k for so_2, so_3, so_4 (k <= 2, m <= 3)",
            budget_s: 60,
            runs: vec![("thm-4.1", d())],
            required: &["so_2/k=1/hc-image", "so_3/k=2/central", "so_4/k=2/hc-image", "so_4/m=3/k=2/pfaffian-image"],
        },
        Criterion {
            number: 4,
            title: "Hafnian D_k for sp_2, sp_4 (k <= 2, m <= 2)",
            budget_s: 120,
            runs: vec![("thm-5.1", d())],
            required: &["sp_2/k=2/hc-image", "sp_4/k=2/central", "sp_4/m=2/k=2/hafnian-image"],
        },
        Criterion {
            number: 5,
            title: "column and row fusion at the classical point, N in {2,3}, k <= 2",
            budget_s: 120,
            runs: vec![("thm-3.2", d()), ("thm-3.3", d())],
            required: &[
                "so_2/k=1/equals-pfaffian-c_k",
                "so_3/k=2/equals-pfaffian-c_k",
                "sp_2/k=2/equals-hafnian-d_k",
                "so_3/k=2/hc-image",
                "sp_2/k=1/hc-image",
            ],
        },
        Criterion {
            number: 6,
            title: "R-matrix identities at N = 2, m <= 2, l <= 2",
            budget_s: 60,
            runs: vec![
                ("prop-3.1", n2()),
                ("rel-3.03", n2()),
                ("lemma-3.5", n2()),
                ("decomp-3.04", n2m2()),
                ("prop-3.6", n2m2()),
                ("prop-3.9", n2()),
                ("prop-3.10", n2()),
                ("prop-3.11", n2()),
            ],
            required: &[
                "so_2/reflection-relation",
                "sp_2/reflection-relation",
                "N=2/symplectic/mixed-yang-baxter",
                "N=2/m=2/column/r-matrix-product",
                "N=2/m=2/symplectic/row/projected-q-sum",
                "gl_2/symplectic/e-matrix-relations",
                "N=2/m=2/l=2/plain/column/equals-distinct-transposition-sum",
                "N=2/m=2/l=2/plain/row/vanishes-on-small-module",
            ],
        },
        Criterion {
            number: 7,
            title: "C(u) as quantum determinant for so_2, so_3, sp_2; gl_2 eigenvalues for |nu| <= 2",
            budget_s: 60,
            runs: vec![("thm-6.2", d()), ("prop-6.1", d())],
            required: &[
                "so_2/c-series-equals-quantum-det",
                "so_3/c-series-equals-quantum-det",
                "sp_2/c-series-equals-quantum-det",
                "gl_2/nu=(1,1)/eigenvalue",
                "gl_2/nu=(2)/eigenvalue",
            ],
        },
        Criterion {
            number: 8,
            title: "dual-pair transfer, so_N (N <= 4) and sp_N (N in {2,4}), m <= 2, with corollaries",
            budget_s: 180,
            runs: vec![("prop-4.3", d()), ("thm-4.4", d()), ("prop-5.2", d()), ("thm-5.3", d())],
            required: &[
                "so_3/m=2/alpha-c-equals-c'",
                "so_4/m=2/k=2/c'_k-combination",
                "so_2/m=2/k=2/vanishing-corollary",
                "so_4/m=1/k=1/equality-corollary",
                "sp_4/m=2/beta-d-equals-d'",
                "sp_4/m=2/k=2/d'_k-combination",
                "sp_2/m=2/k=2/equality-corollary",
            ],
        },
        Criterion {
            number: 9,
            title: "factorial Schur functions: column/row cases, generating series, vanishing grid",
            budget_s: 30,
            runs: vec![("prop-2.2", d()), ("prop-2.3", d()), ("thm-2.1", d())],
            required: &[
                "random4/n=3/k=4/e-is-column-schur",
                "random4/n=3/k=4/h-is-row-schur",
                "random4/n=3/z=",
                "n=3/mu=(2,1,1)/vanishing-grid",
                "n=3/mu=(4)/characterizations-reject-others",
            ],
        },
        Criterion {
            number: 10,
            title: "C(u) D(u) = 1 + O(u^-8) for so_3 and sp_2",
            budget_s: 30,
            runs: vec![("series-inversion", with(|p| p.big_k = Some(3)))],
            required: &["so_3/K=3/c-times-d-is-one", "sp_2/K=3/c-times-d-is-one"],
        },
    ]
}

fn evaluate(c: &Criterion) -> (bool, String, Duration) {
    let t = Instant::now();
    let mut reports: Vec<SuiteReport> = Vec::new();
    for (name, params) in &c.runs {
        match run_suite(name, params) {
            Ok(r) => reports.push(r),
            Err(e) => return (false, format!("{name}: usage error {e}"), t.elapsed()),
        }
    }
    let elapsed = t.elapsed();
    let total: usize = reports.iter().map(|r| r.checks.len()).sum();
    if let Some((s, f)) = reports.iter().find_map(|r| r.failures().next().map(|f| (r.name.clone(), f.clone()))) {
        return (false, format!("{s}: {} failed: {}", f.id, f.witness.unwrap_or_default()), elapsed);
    }
    for frag in c.required {
        if !reports.iter().flat_map(|r| &r.checks).any(|ch| ch.id.contains(frag)) {
            return (false, format!("expected check {frag:?} did not run"), elapsed);
        }
    }
    if elapsed > Duration::from_secs(c.budget_s) {
        return (false, format!("over budget: {:.1}s > {}s", elapsed.as_secs_f64(), c.budget_s), elapsed);
    }
    (true, format!("{total} checks"), elapsed)
}

fn main() -> ExitCode {
    let mut all = true;
    for c in criteria() {
        let (ok, detail, elapsed) = evaluate(&c);
        all &= ok;
        println!(
            "criterion {:>2} {}: {} ({detail}; {:.2}s of {}s)",
            c.number,
            if ok { "PASS" } else { "FAIL" },
            c.title,
            elapsed.as_secs_f64(),
            c.budget_s
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
