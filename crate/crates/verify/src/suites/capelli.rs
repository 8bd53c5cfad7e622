//! Capelli identities in `U(gl_N)` acting on polynomials in an `m x N` matrix.

use capelli_core::uea::capelli_element;
use capelli_core::weyl::{cayley_omega, cayley_symmetrized, cayley_theta, expect_ops_eq, OperatorRep};
use capelli_core::LieContext;

use super::{algebra, Run};
use crate::params::UsageError;

pub(super) fn det(run: &mut Run) -> Result<(), UsageError> {
    identity(run, true)
}

pub(super) fn per(run: &mut Run) -> Result<(), UsageError> {
    identity(run, false)
}

fn identity(run: &mut Run, signed: bool) -> Result<(), UsageError> {
    let ns = run.p.n_range(2..=3, 1..=4)?;
    let ms = run.p.m_range(2..=3, 1..=4)?;
    let ks = run.p.k_range(1..=4, 1..=4)?;
    run.param("N", &ns);
    run.param("m", &ms);
    if run.p.k.is_some() {
        run.param("k", &ks);
    } else {
        run.param("k", "1..=min(N,m)");
    }
    let form = if signed { "det" } else { "per" };
    for &n in &ns {
        let Some(alg) = run.setup(format!("gl_{n}/setup"), || algebra(LieContext::gl(n))) else { continue };
        for &m in &ms {
            let Some(mut rep) = run.setup(format!("gl_{n}/m={m}/setup"), || OperatorRep::polarization(&alg, m)) else {
                continue;
            };
            for &k in ks.iter().filter(|k| **k <= n.min(m)) {
                let id = format!("gl_{n}/m={m}/k={k}");
                let Some(c) = run.setup(format!("{id}/build"), || capelli_element(&alg, k, signed)) else { continue };
                if m == ms[0] {
                    run.check(format!("gl_{n}/k={k}/{form}/central"), || alg.check_central(&c));
                }
                let ctx = rep.context().clone();
                run.check(format!("{id}/{form}/symmetrized-form"), || {
                    let cayley = if signed { cayley_omega(&ctx, k)? } else { cayley_theta(&ctx, k)? };
                    expect_ops_eq(&ctx, "symmetrized sum equals the Cayley operator", &cayley_symmetrized(&ctx, k, signed), &cayley)
                });
                run.check(format!("{id}/{form}/image"), || {
                    let cayley = if signed { cayley_omega(&ctx, k)? } else { cayley_theta(&ctx, k)? };
                    expect_ops_eq(&ctx, "image of the Capelli element", &rep.image(&c), &cayley)
                });
            }
        }
    }
    Ok(())
}
