//! Matrix relations for `F(u)`, `E(u)` and their fused products, checked in
//! `End(C^N)^{⊗m}` with polynomial spectral parameters.

use capelli_core::tensor::{
    check_fusion_regularity, check_gl_relations, check_mixed_ybe, check_projector_decomposition, check_q_fusion,
    check_reflection, distinct_transposition_sum, fused_matrix, fusion_trace, tail_projector, vanishing_image, Shape,
    TensorMatrix, TensorSpace,
};
use capelli_core::{Family, Form, IndexSet, LieContext, PbwAlgebra, Scalar};

use super::{algebra, expect, Run};
use crate::params::UsageError;

fn forms(big_n: usize) -> Vec<(Form, &'static str)> {
    let mut v = vec![(Form::Orthogonal, "orthogonal")];
    if big_n % 2 == 0 {
        v.push((Form::Symplectic, "symplectic"));
    }
    v
}

fn families(big_n: usize) -> Vec<Family> {
    if big_n % 2 == 0 {
        vec![Family::So, Family::Sp]
    } else {
        vec![Family::So]
    }
}

fn shape_tag(shape: Shape) -> &'static str {
    match shape {
        Shape::Column => "column",
        Shape::Row => "row",
    }
}

fn scalar_alg() -> capelli_core::Result<PbwAlgebra> {
    algebra(LieContext::gl(1))
}

pub(super) fn reflection(run: &mut Run) -> Result<(), UsageError> {
    let ns = run.p.n_range(2..=3, 2..=4)?;
    run.param("N", &ns);
    for &big_n in &ns {
        for fam in families(big_n) {
            let Some(alg) = run.setup(format!("{fam:?}_{big_n}/setup"), || algebra(LieContext::new(fam, big_n))) else {
                continue;
            };
            let name = alg.context().name();
            run.check(format!("{name}/reflection-relation"), || check_reflection(&alg));
            let form = alg.context().form().expect("orthogonal or symplectic");
            run.check(format!("{name}/p-q-relations"), || {
                let one = scalar_alg()?;
                let sp = TensorSpace::new(IndexSet::symmetric(big_n), 2)?;
                let p = sp.perm::<Scalar>(1, 2);
                let q = sp.q_op::<Scalar>(form, 1, 2);
                let d = sp.dim();
                p.mul(&one, &p).expect_eq(&one, "P^2 = 1", &TensorMatrix::identity(d))?;
                let signed_q = if form == Form::Orthogonal { q.clone() } else { q.negate() };
                p.mul(&one, &q).expect_eq(&one, "PQ = +-Q", &signed_q)?;
                q.mul(&one, &p).expect_eq(&one, "QP = +-Q", &signed_q)?;
                q.mul(&one, &q).expect_eq(&one, "Q^2 = NQ", &q.scaled(&Scalar::from_integer((big_n as i64).into())))
            });
        }
    }
    Ok(())
}

pub(super) fn mixed_ybe(run: &mut Run) -> Result<(), UsageError> {
    let ns = run.p.n_range(2..=3, 1..=4)?;
    run.param("N", &ns);
    let explicit = run.p.big_n.is_some();
    for &big_n in &ns {
        if !run.p.fits(big_n, 3, explicit)? {
            continue;
        }
        for (form, tag) in forms(big_n) {
            run.check(format!("N={big_n}/{tag}/mixed-yang-baxter"), || check_mixed_ybe(&IndexSet::symmetric(big_n), form));
        }
    }
    Ok(())
}

pub(super) fn regularity(run: &mut Run) -> Result<(), UsageError> {
    let ns = run.p.n_range(2..=3, 1..=4)?;
    run.param("N", &ns);
    let explicit = run.p.big_n.is_some();
    for &big_n in &ns {
        if !run.p.fits(big_n, 3, explicit)? {
            continue;
        }
        for (form, tag) in forms(big_n) {
            for (plus, side) in [(true, "v=u+1"), (false, "v=u-1")] {
                run.check(format!("N={big_n}/{tag}/{side}/pole-cancels"), || {
                    check_fusion_regularity(&IndexSet::symmetric(big_n), form, plus)
                });
            }
        }
    }
    Ok(())
}

pub(super) fn decomposition(run: &mut Run) -> Result<(), UsageError> {
    let ns = run.p.n_range(2..=3, 1..=4)?;
    let ms = run.p.m_range(2..=3, 2..=4)?;
    run.param("N", &ns);
    run.param("m", &ms);
    let explicit = run.p.big_n.is_some() || run.p.m.is_some();
    for &big_n in &ns {
        for &m in &ms {
            if !run.p.fits(big_n, m, explicit)? {
                continue;
            }
            let index = IndexSet::symmetric(big_n);
            for shape in [Shape::Column, Shape::Row] {
                run.check(format!("N={big_n}/m={m}/{}/r-matrix-product", shape_tag(shape)), || {
                    check_projector_decomposition(&index, m, shape)
                });
            }
            run.check(format!("N={big_n}/m={m}/projector-identities"), || {
                let one = scalar_alg()?;
                let sp = TensorSpace::new(index.clone(), m)?;
                let a = sp.projector::<Scalar>(m, true);
                let b = sp.projector::<Scalar>(m, false);
                a.mul(&one, &a).expect_eq(&one, "A^2 = A", &a)?;
                b.mul(&one, &b).expect_eq(&one, "B^2 = B", &b)?;
                a.mul(&one, &b).expect_eq(&one, "AB = 0", &TensorMatrix::zero(sp.dim()))?;
                let p = sp.perm::<Scalar>(1, 2);
                p.mul(&one, &a).expect_eq(&one, "P_12 A = -A", &a.negate())?;
                p.mul(&one, &b).expect_eq(&one, "P_12 B = B", &b)
            });
        }
    }
    Ok(())
}

pub(super) fn q_fusion(run: &mut Run) -> Result<(), UsageError> {
    let ns = run.p.n_range(2..=3, 1..=4)?;
    let ms = run.p.m_range(2..=3, 2..=4)?;
    run.param("N", &ns);
    run.param("m", &ms);
    let explicit = run.p.big_n.is_some() || run.p.m.is_some();
    for &big_n in &ns {
        for &m in &ms {
            if !run.p.fits(big_n, m, explicit)? {
                continue;
            }
            for (form, tag) in forms(big_n) {
                for shape in [Shape::Column, Shape::Row] {
                    run.check(format!("N={big_n}/m={m}/{tag}/{}/projected-q-sum", shape_tag(shape)), || {
                        check_q_fusion(&IndexSet::symmetric(big_n), form, m, shape)
                    });
                }
            }
        }
    }
    Ok(())
}

pub(super) fn pairwise(run: &mut Run) -> Result<(), UsageError> {
    let ns = run.p.n_range(2..=3, 2..=4)?;
    let ms = run.p.m_range(2..=3, 2..=4)?;
    run.param("N", &ns);
    run.param("m", &ms);
    let explicit = run.p.big_n.is_some() || run.p.m.is_some();
    for &big_n in &ns {
        for fam in families(big_n) {
            let Some(alg) = run.setup(format!("{fam:?}_{big_n}/setup"), || algebra(LieContext::new(fam, big_n))) else {
                continue;
            };
            let name = alg.context().name();
            for &m in &ms {
                if !run.p.fits(big_n, m, explicit)? {
                    continue;
                }
                for shape in [Shape::Column, Shape::Row] {
                    run.check(format!("{name}/m={m}/{}/pairwise-equals-summed", shape_tag(shape)), || {
                        let a = fused_matrix(&alg, shape, m, false)?;
                        let b = fused_matrix(&alg, shape, m, true)?;
                        a.num.times_coeff(&b.den).expect_eq(&alg, "fused matrices agree", &b.num.times_coeff(&a.den))
                    });
                }
            }
        }
    }
    Ok(())
}

pub(super) fn trace_central(run: &mut Run) -> Result<(), UsageError> {
    let ns = run.p.n_range(2..=3, 2..=4)?;
    let ms = run.p.m_range(2..=2, 1..=4)?;
    run.param("N", &ns);
    run.param("m", &ms);
    let explicit = run.p.big_n.is_some() || run.p.m.is_some();
    for &big_n in &ns {
        for fam in families(big_n) {
            let Some(alg) = run.setup(format!("{fam:?}_{big_n}/setup"), || algebra(LieContext::new(fam, big_n))) else {
                continue;
            };
            let name = alg.context().name();
            for &m in &ms {
                if !run.p.fits(big_n, m, explicit)? {
                    continue;
                }
                for shape in [Shape::Column, Shape::Row] {
                    run.check(format!("{name}/m={m}/{}/trace-central", shape_tag(shape)), || {
                        let (num, _) = fusion_trace(&alg, shape, m)?;
                        alg.check_central(&num)
                    });
                }
            }
        }
    }
    Ok(())
}

pub(super) fn gl_relations(run: &mut Run) -> Result<(), UsageError> {
    let ns = run.p.n_range(2..=3, 1..=4)?;
    run.param("N", &ns);
    for &big_n in &ns {
        let Some(alg) = run.setup(format!("gl_{big_n}/setup"), || algebra(LieContext::gl_symmetric(big_n))) else {
            continue;
        };
        for (form, tag) in forms(big_n) {
            run.check(format!("gl_{big_n}/{tag}/e-matrix-relations"), || check_gl_relations(&alg, form));
        }
    }
    Ok(())
}

pub(super) fn vanishing_column(run: &mut Run) -> Result<(), UsageError> {
    vanishing(run, Shape::Column, false)
}

pub(super) fn vanishing_row(run: &mut Run) -> Result<(), UsageError> {
    vanishing(run, Shape::Row, false)
}

pub(super) fn vanishing_tilde_column(run: &mut Run) -> Result<(), UsageError> {
    vanishing(run, Shape::Column, true)
}

pub(super) fn vanishing_tilde_row(run: &mut Run) -> Result<(), UsageError> {
    vanishing(run, Shape::Row, true)
}

/// The image of the fused `E` product in `End(C^N)^{⊗(m+l)}`, where the last
/// `l` factors carry `U(gl_N)` through its action on `(C^N)^{⊗l}`. The
/// (anti)symmetric tail realises `U_λ` with `λ = (l)` or `(1^l)`.
fn vanishing(run: &mut Run, shape: Shape, tilde: bool) -> Result<(), UsageError> {
    let ns = run.p.n_range(2..=2, 1..=3)?;
    let ms = run.p.m_range(1..=2, 1..=3)?;
    let ls: Vec<usize> = match run.p.big_k {
        Some(l) if (1..=3).contains(&l) => vec![l],
        Some(l) => return Err(UsageError(format!("--K {l} (tail length l) outside 1..=3"))),
        None => vec![1, 2],
    };
    run.param("N", &ns);
    run.param("m", &ms);
    run.param("l", &ls);
    let explicit = run.p.any_explicit();
    let st = shape_tag(shape);
    for &big_n in &ns {
        let index = IndexSet::symmetric(big_n);
        let form_list: Vec<(Form, &str)> = if tilde { forms(big_n) } else { vec![(Form::Orthogonal, "plain")] };
        for &m in &ms {
            for &l in &ls {
                if !run.p.fits(big_n, m + l, explicit)? {
                    continue;
                }
                for &(form, tag) in &form_list {
                    let id = format!("N={big_n}/m={m}/l={l}/{tag}/{st}");
                    let Some(img) = run.setup(format!("{id}/image"), || vanishing_image(&index, form, m, l, shape, tilde))
                    else {
                        continue;
                    };
                    if !tilde {
                        run.check(format!("{id}/equals-distinct-transposition-sum"), || {
                            let one = scalar_alg()?;
                            img.expect_eq(&one, "image of the fused product", &distinct_transposition_sum(&index, m, l, shape)?)
                        });
                    }
                    if l < m {
                        run.check(format!("{id}/vanishes-when-l<m"), || {
                            let one = scalar_alg()?;
                            img.expect_eq(&one, "image vanishes", &TensorMatrix::zero(img.dim()))
                        });
                    }
                    if m >= 2 {
                        // column: ℓ(λ) = 1 < m on the symmetric tail; row: λ_1 = 1 < m on the antisymmetric tail
                        run.check(format!("{id}/vanishes-on-small-module"), || {
                            let one = scalar_alg()?;
                            let tail = tail_projector(&index, m, l, shape == Shape::Row)?;
                            img.mul(&one, &tail).expect_eq(&one, "image on the small module", &TensorMatrix::zero(img.dim()))
                        });
                    }
                    if l >= m && (shape == Shape::Row || big_n >= m) {
                        run.check(format!("{id}/nonzero-on-large-module"), || {
                            let one = scalar_alg()?;
                            let tail = tail_projector(&index, m, l, shape == Shape::Column)?;
                            expect("image on the large module is nonzero", !img.mul(&one, &tail).is_zero(), || {
                                format!("zero on the {} tail", if shape == Shape::Column { "antisymmetric" } else { "symmetric" })
                            })
                        });
                    }
                }
            }
        }
    }
    Ok(())
}
