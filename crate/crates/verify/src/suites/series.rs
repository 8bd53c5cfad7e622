//! `C(u)` and `D(u)` are mutually inverse series in `u^-2`.

use capelli_core::genfun::{central_elements, check_inversion, ladder, Kind, Route};
use capelli_core::{Element, Family, LieContext, PbwAlgebra};

use super::{algebra, Run};
use crate::params::UsageError;

/// The series of `kind` up to `order`, by fusion while `N^{2k}` fits under
/// the cap and by the HC preimage past it. Returns the elements and how
/// many came from fusion.
fn by_fusion_then_preimage(
    alg: &PbwAlgebra,
    kind: Kind,
    order: usize,
    cap: u64,
) -> capelli_core::Result<(Vec<Element>, usize)> {
    let big_n = alg.context().big_n() as u64;
    let fused = (1..=order).take_while(|k| big_n.saturating_pow(2 * *k as u32) <= cap).count();
    let mut out = central_elements(alg, kind, fused, Route::Fusion, cap)?;
    if fused < order {
        let pre = central_elements(alg, kind, order, Route::Preimage, cap)?;
        out.extend(pre.into_iter().skip(fused));
    }
    Ok((out, fused))
}

pub(super) fn inversion(run: &mut Run) -> Result<(), UsageError> {
    let ns = run.p.n_range(2..=3, 2..=4)?;
    let order = run.p.big_k(3, 1..=4)?;
    run.param("N", &ns);
    run.param("K", order);
    let cap = run.p.max_cells;
    for &big_n in &ns {
        let fams = if big_n % 2 == 0 { vec![Family::So, Family::Sp] } else { vec![Family::So] };
        for fam in fams {
            let Some(alg) = run.setup(format!("{fam:?}_{big_n}/setup"), || algebra(LieContext::new(fam, big_n))) else {
                continue;
            };
            let name = alg.context().name();
            let n = alg.context().n();
            let series = run.setup(format!("{name}/series"), || match fam {
                Family::So => {
                    let c = central_elements(&alg, Kind::C, n, Route::Explicit, cap)?;
                    let (d, fused) = by_fusion_then_preimage(&alg, Kind::D, order, cap)?;
                    Ok((c, d, fused))
                }
                _ => {
                    let (c, fused) = by_fusion_then_preimage(&alg, Kind::C, n, cap)?;
                    let d = central_elements(&alg, Kind::D, order, Route::Explicit, cap)?;
                    Ok((c, d, fused))
                }
            });
            let Some((c, d, fused)) = series else { continue };
            if fam == Family::So && fused > 0 {
                run.check(format!("{name}/d_k-fusion-equals-preimage"), || {
                    let pre = central_elements(&alg, Kind::D, fused, Route::Preimage, cap)?;
                    for k in 0..fused {
                        alg.expect_eq(&format!("D_{}", k + 1), &d[k], &pre[k])?;
                    }
                    Ok(())
                });
            }
            run.check(format!("{name}/K={order}/c-times-d-is-one"), || {
                let ctx = alg.context();
                check_inversion(&alg, &c, &ladder(ctx, Kind::C, c.len())?, &d, &ladder(ctx, Kind::D, order)?, order)
            });
        }
    }
    Ok(())
}
