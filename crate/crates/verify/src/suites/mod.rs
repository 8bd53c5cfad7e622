//! The suite registry. Each entry maps a name to a function that resolves
//! its parameter ranges and records one pass/fail line per check.

use std::collections::BTreeMap;
use std::time::Instant;

use capelli_core::{Error, LieContext, PbwAlgebra, SymPoly};
use serde::Serialize;
use serde_json::Value;

use crate::params::{Params, UsageError};
use crate::report::{CheckRecord, Status, SuiteReport};

mod capelli;
mod dual;
mod fusion;
mod pfaffian;
mod relations;
mod series;
mod symmetric;

/// Collects check outcomes with their wall time.
#[derive(Debug, Default)]
pub struct CheckSet {
    records: Vec<CheckRecord>,
}

impl CheckSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Run one check; an `Err` becomes a failure whose witness is the error text.
    pub fn run(&mut self, id: impl Into<String>, f: impl FnOnce() -> capelli_core::Result<()>) -> bool {
        let t = Instant::now();
        let out = f();
        let ms = t.elapsed().as_millis() as u64;
        let (status, witness) = match out {
            Ok(()) => (Status::Pass, None),
            Err(e) => (Status::Fail, Some(e.to_string())),
        };
        self.records.push(CheckRecord { id: id.into(), status, witness, ms });
        status == Status::Pass
    }

    /// Build shared state for later checks. Only a failure is recorded.
    pub fn setup<T>(&mut self, id: impl Into<String>, f: impl FnOnce() -> capelli_core::Result<T>) -> Option<T> {
        let t = Instant::now();
        match f() {
            Ok(v) => Some(v),
            Err(e) => {
                let ms = t.elapsed().as_millis() as u64;
                self.records.push(CheckRecord { id: id.into(), status: Status::Fail, witness: Some(e.to_string()), ms });
                None
            }
        }
    }

    pub fn records(&self) -> &[CheckRecord] {
        &self.records
    }

    /// Records sorted by id.
    pub fn finish(mut self) -> Vec<CheckRecord> {
        self.records.sort_by(|a, b| a.id.cmp(&b.id));
        self.records
    }
}

/// State handed to a suite body.
pub struct Run<'a> {
    pub p: &'a Params,
    params: BTreeMap<String, Value>,
    pub checks: CheckSet,
}

impl Run<'_> {
    /// Record a resolved parameter in the report.
    pub fn param(&mut self, name: &str, v: impl Serialize) {
        self.params.insert(name.to_string(), serde_json::to_value(v).expect("serializable"));
    }

    pub fn check(&mut self, id: impl Into<String>, f: impl FnOnce() -> capelli_core::Result<()>) -> bool {
        self.checks.run(id, f)
    }

    pub fn setup<T>(&mut self, id: impl Into<String>, f: impl FnOnce() -> capelli_core::Result<T>) -> Option<T> {
        self.checks.setup(id, f)
    }
}

pub struct Suite {
    pub name: &'static str,
    pub summary: &'static str,
    body: fn(&mut Run) -> Result<(), UsageError>,
}

static REGISTRY: &[Suite] = &[
    Suite { name: "capelli-gl", summary: "Capelli identity in U(gl_N): determinant element maps to the Cayley operator", body: capelli::det },
    Suite { name: "capelli-gl-per", summary: "permanent Capelli identity in U(gl_N)", body: capelli::per },
    Suite { name: "prop-2.2", summary: "factorial e_k and h_k as factorial Schur functions of a column and a row", body: symmetric::elementary },
    Suite { name: "prop-2.3", summary: "generating series of factorial e_k (exact) and h_k (to order K)", body: symmetric::generating },
    Suite { name: "thm-2.1", summary: "characterization of factorial Schur functions by vanishing (finite grid)", body: symmetric::characterization },
    Suite { name: "prop-3.1", summary: "reflection relation for F(u); P and Q relations", body: relations::reflection },
    Suite { name: "rel-3.03", summary: "mixed Yang-Baxter relation for R(u) and Q-matrix", body: relations::mixed_ybe },
    Suite { name: "lemma-3.5", summary: "regularity of the fusion factors at v = u +- 1", body: relations::regularity },
    Suite { name: "decomp-3.04", summary: "(anti)symmetrizer as ordered product of R-matrices", body: relations::decomposition },
    Suite { name: "prop-3.6", summary: "fused Q-corrections commute with the projector", body: relations::q_fusion },
    Suite { name: "prop-3.7", summary: "fused matrix with pairwise Q-factors equals the plain one", body: relations::pairwise },
    Suite { name: "prop-3.9", summary: "gl_N matrix relations in the symmetric labelling", body: relations::gl_relations },
    Suite { name: "prop-3.4", summary: "trace of the fused matrix is central", body: relations::trace_central },
    Suite { name: "prop-3.10", summary: "antisymmetrized E product vanishes on modules with fewer than m rows", body: relations::vanishing_column },
    Suite { name: "prop-3.11", summary: "symmetrized E product vanishes on modules with first row below m", body: relations::vanishing_row },
    Suite { name: "cor-3.12", summary: "antisymmetrized twisted E product vanishes on modules with fewer than m rows", body: relations::vanishing_tilde_column },
    Suite { name: "cor-3.13", summary: "symmetrized twisted E product vanishes on modules with first row below m", body: relations::vanishing_tilde_row },
    Suite { name: "thm-3.2", summary: "column fusion at the classical point gives C_k", body: fusion::column },
    Suite { name: "thm-3.3", summary: "row fusion at the classical point gives D_k", body: fusion::row },
    Suite { name: "thm-4.1", summary: "Pfaffian C_k in U(o_N): centrality, HC image, image in PD", body: pfaffian::pfaffians },
    Suite { name: "cor-4.2", summary: "C_n as minus-signed square of the full Pfaffian for o_2n", body: pfaffian::full_pfaffian },
    Suite { name: "prop-4.3", summary: "transfer of C(u) across the (O_N, sp_2m) dual pair", body: dual::so_transfer },
    Suite { name: "thm-4.4", summary: "dual C'_k as combinations of C_l, with the vanishing and equality corollaries", body: dual::so_combination },
    Suite { name: "thm-5.1", summary: "Hafnian D_k in U(sp_N): centrality, HC image, image in PD", body: pfaffian::hafnians },
    Suite { name: "prop-5.2", summary: "transfer of D(u) across the (Sp_N, so_2m) dual pair", body: dual::sp_transfer },
    Suite { name: "thm-5.3", summary: "dual D'_k as combinations of D_l, with the equality corollary", body: dual::sp_combination },
    Suite { name: "series-inversion", summary: "C(u) D(u) = 1 to order K", body: series::inversion },
    Suite { name: "thm-6.2", summary: "C(u) as the shifted quantum determinant", body: fusion::quantum_det },
    Suite { name: "prop-6.1", summary: "eigenvalues of the gl_N quantum determinant and its two forms", body: fusion::gl_quantum_det },
];

pub fn registry() -> &'static [Suite] {
    REGISTRY
}

pub fn find(name: &str) -> Option<&'static Suite> {
    REGISTRY.iter().find(|s| s.name == name)
}

/// Run a named suite. Unknown names and out-of-range parameters are usage errors.
pub fn run_suite(name: &str, p: &Params) -> Result<SuiteReport, UsageError> {
    let suite = find(name).ok_or_else(|| UsageError(format!("unknown suite {name:?}; see list-suites")))?;
    let mut run = Run { p, params: BTreeMap::new(), checks: CheckSet::new() };
    run.param("seed", p.seed);
    run.param("max_cells", p.max_cells);
    (suite.body)(&mut run)?;
    Ok(SuiteReport { name: suite.name.to_string(), params: run.params, checks: run.checks.finish() })
}

// --- helpers shared by the suites -------------------------------------------

fn algebra(ctx: capelli_core::Result<LieContext>) -> capelli_core::Result<PbwAlgebra> {
    PbwAlgebra::new(&ctx?)
}

fn render_sym(p: &SymPoly, n: usize) -> String {
    let names: Vec<String> = (1..=n).map(|i| format!("z{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    p.render(&refs)
}

fn expect_sym(check: &str, got: &SymPoly, want: &SymPoly, n: usize) -> capelli_core::Result<()> {
    if got == want {
        return Ok(());
    }
    Err(Error::mismatch(check, format!("got {} expected {}", render_sym(got, n), render_sym(want, n))))
}

fn expect(check: &str, ok: bool, witness: impl FnOnce() -> String) -> capelli_core::Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::mismatch(check, witness()))
    }
}
