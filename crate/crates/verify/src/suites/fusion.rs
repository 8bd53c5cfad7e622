//! Central elements from fusion of the matrix `F(u)`, and quantum determinants.

use capelli_core::genfun::{central_elements, compare_quantum_det, Kind, Route};
use capelli_core::symfun::{e_factorial, h_factorial, Partition};
use capelli_core::tensor::{fusion_capelli, quantum_det_gl, Shape};
use capelli_core::uea::{hafnian_central, pfaffian_central, HcOracle};
use capelli_core::weyl::{singular_vector, OperatorRep};
use capelli_core::{Error, Family, Form, LieContext, PbwAlgebra, Ring, Scalar};
use num_traits::Zero;

use super::{algebra, expect, expect_sym, Run};
use crate::params::UsageError;

pub(super) fn column(run: &mut Run) -> Result<(), UsageError> {
    fused(run, Shape::Column)
}

pub(super) fn row(run: &mut Run) -> Result<(), UsageError> {
    fused(run, Shape::Row)
}

/// Families whose fusion is compared with an explicit formula for `shape`,
/// and those checked through centrality and the HC image instead.
fn families(big_n: usize) -> Vec<Family> {
    if big_n % 2 == 0 {
        vec![Family::So, Family::Sp]
    } else {
        vec![Family::So]
    }
}

fn fused(run: &mut Run, shape: Shape) -> Result<(), UsageError> {
    let ns = run.p.n_range(2..=3, 2..=4)?;
    let ks = run.p.k_range(1..=2, 1..=3)?;
    run.param("N", &ns);
    run.param("k", &ks);
    let explicit = run.p.big_n.is_some() && run.p.k.is_some();
    for &big_n in &ns {
        for fam in families(big_n) {
            let Some(alg) = run.setup(format!("{fam:?}_{big_n}/setup"), || algebra(LieContext::new(fam, big_n))) else {
                continue;
            };
            let name = alg.context().name();
            let n = alg.context().n();
            let a = alg.context().shift_sequence().expect("shift sequence");
            let Some(oracle) = run.setup(format!("{name}/oracle"), || HcOracle::new(&alg)) else { continue };
            for &k in &ks {
                if !run.p.fits(big_n, 2 * k, explicit)? {
                    continue;
                }
                let id = format!("{name}/k={k}");
                let Some(value) = run.setup(format!("{id}/fusion"), || fusion_capelli(&alg, shape, 2 * k)) else {
                    continue;
                };
                match (shape, fam) {
                    (Shape::Column, Family::So) => {
                        run.check(format!("{id}/equals-pfaffian-c_k"), || {
                            alg.expect_eq("column fusion equals C_k", &value, &pfaffian_central(&alg, k)?)
                        });
                    }
                    (Shape::Row, Family::Sp) => {
                        run.check(format!("{id}/equals-hafnian-d_k"), || {
                            alg.expect_eq("row fusion equals D_k", &value, &hafnian_central(&alg, k)?)
                        });
                    }
                    _ => {
                        run.check(format!("{id}/central"), || alg.check_central(&value));
                        run.check(format!("{id}/hc-image"), || {
                            let want = match shape {
                                Shape::Column => {
                                    let e = e_factorial(k, n, &a);
                                    if k % 2 == 1 { e.negate() } else { e }
                                }
                                Shape::Row => h_factorial(k, n, &a),
                            };
                            expect_sym("HC image of the fused value", &oracle.hc_polynomial(&value, k)?, &want, n)
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

pub(super) fn quantum_det(run: &mut Run) -> Result<(), UsageError> {
    let ns = run.p.n_range(2..=3, 2..=4)?;
    run.param("N", &ns);
    let explicit = run.p.big_n.is_some();
    for &big_n in &ns {
        if !run.p.fits(big_n, big_n, explicit)? {
            continue;
        }
        for fam in families(big_n) {
            let Some(alg) = run.setup(format!("{fam:?}_{big_n}/setup"), || algebra(LieContext::new(fam, big_n))) else {
                continue;
            };
            let name = alg.context().name();
            let route = if fam == Family::So { Route::Explicit } else { Route::Fusion };
            let n = alg.context().n();
            let cap = run.p.max_cells;
            let Some(c) = run.setup(format!("{name}/c_k"), || central_elements(&alg, Kind::C, n, route, cap)) else {
                continue;
            };
            run.check(format!("{name}/c-series-equals-quantum-det"), || {
                let cmp = compare_quantum_det(&alg, &c)?;
                expect("normalizing factor equals the stated epsilon(u)", cmp.matches_stated, || {
                    format!("ratio ({}) / ({})", cmp.ratio.0.render("u"), cmp.ratio.1.render("u"))
                })
            });
        }
    }
    Ok(())
}

/// `Π_q (ν_q + N - q - u)` read as coefficients of `u^0, u^1, ...`.
fn expected_eigen(nu: &Partition, big_n: usize) -> Vec<Scalar> {
    let mut coeffs = vec![Scalar::from_integer(1.into())];
    for q in 1..=big_n {
        let c = Scalar::from_integer(((nu.part(q) + big_n) as i64 - q as i64).into());
        let mut next = vec![Scalar::zero(); coeffs.len() + 1];
        for (e, x) in coeffs.iter().enumerate() {
            next[e] += x * &c;
            next[e + 1] -= x.clone();
        }
        coeffs = next;
    }
    coeffs
}

fn hdet_eigen(alg: &PbwAlgebra, m: usize, nu: &Partition) -> capelli_core::Result<Vec<Scalar>> {
    let h = quantum_det_gl(alg, None)?;
    let rep = OperatorRep::polarization(alg, m)?;
    let v = singular_vector(rep.context(), nu)?;
    let (mono, c) = v.leading().ok_or_else(|| Error::Consistency("zero singular vector".into()))?;
    let mut out = Vec::new();
    for d in 0..=h.u_degree().unwrap_or(0) {
        let w = rep.act(&h.u_coeff(d), &v);
        let ev = w.coeff(mono) / c;
        if w != v.scaled(&ev) {
            return Err(Error::NotEigen(format!("coefficient of u^{d} at weight {nu}")));
        }
        out.push(ev);
    }
    Ok(out)
}

pub(super) fn gl_quantum_det(run: &mut Run) -> Result<(), UsageError> {
    let ns = run.p.n_range(2..=2, 1..=3)?;
    let size = run.p.big_k(2, 0..=4)?;
    run.param("N", &ns);
    run.param("K", size);
    for &big_n in &ns {
        let Some(alg) = run.setup(format!("gl_{big_n}/setup"), || algebra(LieContext::gl(big_n))) else { continue };
        for nu in Partition::all(0, size, big_n, size) {
            run.check(format!("gl_{big_n}/nu={nu}/eigenvalue"), || {
                let got = hdet_eigen(&alg, big_n, &nu)?;
                let want = expected_eigen(&nu, big_n);
                expect("eigenvalue is prod_q (nu_q + N - q - u)", got == want, || {
                    let show = |v: &[Scalar]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
                    format!("coefficients [{}] expected [{}]", show(&got), show(&want))
                })
            });
        }
        let Some(sym) = run.setup(format!("gl_{big_n}/symmetric-setup"), || algebra(LieContext::gl_symmetric(big_n)))
        else {
            continue;
        };
        for form in [Form::Orthogonal, Form::Symplectic] {
            if form == Form::Symplectic && big_n % 2 == 1 {
                continue;
            }
            let tag = if form == Form::Orthogonal { "orthogonal" } else { "symplectic" };
            run.check(format!("gl_{big_n}/{tag}/twisted-form-equals-quantum-det"), || {
                let h = quantum_det_gl(&sym, None)?;
                sym.expect_eq("both determinant forms agree", &quantum_det_gl(&sym, Some(form))?, &h)
            });
        }
    }
    Ok(())
}
