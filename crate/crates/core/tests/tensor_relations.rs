use capelli_core::scalar::{binomial, int};
use capelli_core::symfun::Partition;
use capelli_core::tensor::{
    check_fusion_regularity, check_gl_relations, check_mixed_ybe, check_projector_decomposition, check_q_fusion,
    check_reflection, classical_point, distinct_transposition_sum, f_matrix, fused_matrix, fusion_capelli,
    fusion_normalizer, fusion_trace, quantum_det_gl, tail_projector, vanishing_image, Shape, TensorMatrix,
    TensorSpace,
};
use capelli_core::uea::{hafnian_central, pfaffian_central, HcOracle};
use capelli_core::weyl::{singular_vector, OperatorRep};
use capelli_core::{Element, Error, Family, Form, IndexSet, LieContext, PbwAlgebra, Ring, Scalar, UniPoly};

fn algebra(family: Family, big_n: usize) -> PbwAlgebra {
    PbwAlgebra::new(&LieContext::new(family, big_n).unwrap()).unwrap()
}

/// Coefficient algebra for matrices with scalar entries.
fn scalars() -> PbwAlgebra {
    algebra(Family::Gl, 1)
}

fn forms(big_n: usize) -> Vec<Form> {
    if big_n % 2 == 0 { vec![Form::Orthogonal, Form::Symplectic] } else { vec![Form::Orthogonal] }
}

fn trace_value(t: &TensorMatrix) -> Scalar {
    t.trace().constant_term()
}

#[test]
fn exchange_and_contraction_operators() {
    let one = scalars();
    for big_n in 2..=3 {
        let sp = TensorSpace::new(IndexSet::symmetric(big_n), 2).unwrap();
        let p: TensorMatrix = sp.perm(1, 2);
        let id = TensorMatrix::identity(sp.dim());
        assert_eq!(p.mul(&one, &p), id);
        for form in forms(big_n) {
            let q: TensorMatrix = sp.q_op(form, 1, 2);
            let sign = if form == Form::Orthogonal { int(1) } else { int(-1) };
            assert_eq!(p.mul(&one, &q), q.scaled(&sign), "N={big_n} {form:?}");
            assert_eq!(q.mul(&one, &p), q.scaled(&sign));
            assert_eq!(q.mul(&one, &q), q.scaled(&int(big_n as i64)));
        }
    }
}

#[test]
fn symmetrizers() {
    let one = scalars();
    for big_n in 1..=3 {
        for m in 1..=3 {
            let sp = TensorSpace::new(IndexSet::standard(big_n), m).unwrap();
            let a: TensorMatrix = sp.projector(m, true);
            let b: TensorMatrix = sp.projector(m, false);
            assert_eq!(a.mul(&one, &a), a);
            assert_eq!(b.mul(&one, &b), b);
            if m >= 2 {
                assert!(a.mul(&one, &b).is_zero());
            }
            assert_eq!(trace_value(&a), binomial(big_n, m), "tr A N={big_n} m={m}");
            assert_eq!(trace_value(&b), binomial(big_n + m - 1, m), "tr B N={big_n} m={m}");
        }
    }
}

#[test]
fn symmetrizers_as_products_of_r_matrices() {
    for big_n in 2..=3 {
        for m in 2..=3 {
            for shape in [Shape::Column, Shape::Row] {
                check_projector_decomposition(&IndexSet::symmetric(big_n), m, shape).unwrap();
            }
        }
    }
}

#[test]
fn reflection_relation() {
    for (fam, n) in [(Family::So, 2), (Family::So, 3), (Family::Sp, 2)] {
        check_reflection(&algebra(fam, n)).unwrap();
    }
    assert!(matches!(check_reflection(&algebra(Family::Gl, 2)), Err(Error::Domain(_))));
}

#[test]
fn r_matrix_relations() {
    for big_n in 2..=3 {
        let idx = IndexSet::symmetric(big_n);
        for form in forms(big_n) {
            check_mixed_ybe(&idx, form).unwrap();
            check_fusion_regularity(&idx, form, true).unwrap();
            check_fusion_regularity(&idx, form, false).unwrap();
            for m in 2..=3 {
                check_q_fusion(&idx, form, m, Shape::Column).unwrap();
                check_q_fusion(&idx, form, m, Shape::Row).unwrap();
            }
        }
    }
}

#[test]
fn gl_relations() {
    for big_n in 2..=3 {
        let alg = PbwAlgebra::new(&LieContext::gl_symmetric(big_n).unwrap()).unwrap();
        for form in forms(big_n) {
            check_gl_relations(&alg, form).unwrap();
        }
    }
    assert!(check_gl_relations(&algebra(Family::Gl, 2), Form::Orthogonal).is_err());
}

#[test]
fn single_factor_fusion_is_the_generator_matrix() {
    for (fam, n) in [(Family::So, 3), (Family::Sp, 2)] {
        let alg = algebra(fam, n);
        let sp = TensorSpace::new(alg.context().index().clone(), 1).unwrap();
        let eta = alg.context().eta().unwrap();
        let expected = f_matrix::<UniPoly>(&sp, &alg, 1)
            .unwrap()
            .minus(&TensorMatrix::scalar_identity(sp.dim(), UniPoly::linear(int(1), eta)));
        for shape in [Shape::Column, Shape::Row] {
            let fm = fused_matrix(&alg, shape, 1, false).unwrap();
            assert_eq!(fm.den, UniPoly::one());
            assert_eq!(fm.num, expected);
        }
    }
}

#[test]
fn fused_matrix_has_two_equal_forms() {
    for (fam, n) in [(Family::So, 2), (Family::So, 3), (Family::Sp, 2)] {
        let alg = algebra(fam, n);
        for m in 2..=3 {
            for shape in [Shape::Column, Shape::Row] {
                let a = fused_matrix(&alg, shape, m, false).unwrap();
                let b = fused_matrix(&alg, shape, m, true).unwrap();
                assert_eq!(a.num.times_coeff(&b.den), b.num.times_coeff(&a.den), "{} m={m} {shape:?}", alg.context().name());
            }
        }
    }
}

/// Multiplicity of `x` as a root of `p`.
fn root_order(p: &UniPoly, x: &Scalar) -> usize {
    let lin = UniPoly::linear(int(1), -x.clone());
    let mut p = p.clone();
    let mut k = 0;
    while !p.is_zero() && p.eval(x).vanishes() {
        p = p.div_rem(&lin).unwrap().0;
        k += 1;
    }
    k
}

#[test]
fn normalized_fused_matrix_is_regular_at_the_classical_point() {
    for (fam, n, shape) in [(Family::So, 2, Shape::Column), (Family::So, 3, Shape::Column), (Family::Sp, 2, Shape::Row)] {
        let alg = algebra(fam, n);
        for m in 2..=3 {
            let fm = fused_matrix(&alg, shape, m, false).unwrap();
            let (pn, pd) = fusion_normalizer(fam, shape, m).unwrap();
            let u0 = classical_point(alg.context(), shape, m).unwrap();
            let need = root_order(&fm.den.times(&pd), &u0);
            assert!(need > 0, "{} m={m}: no pole to cancel", alg.context().name());
            for r in 0..fm.num.dim() {
                for c in 0..fm.num.dim() {
                    let Some(e) = fm.num.get(r, c) else { continue };
                    for (_, coeff) in e.terms() {
                        let got = root_order(&coeff.times(&pn), &u0);
                        assert!(got >= need, "{} m={m} entry ({r},{c}): order {got} < {need}", alg.context().name());
                    }
                }
            }
        }
    }
}

#[test]
fn fused_traces_are_central() {
    for (fam, n) in [(Family::So, 2), (Family::So, 3), (Family::Sp, 2)] {
        let alg = algebra(fam, n);
        for m in 1..=2 {
            for shape in [Shape::Column, Shape::Row] {
                let (num, _) = fusion_trace(&alg, shape, m).unwrap();
                alg.check_central(&num).unwrap();
            }
        }
    }
}

#[test]
fn fusion_reproduces_pfaffian_and_hafnian_elements() {
    let so2 = algebra(Family::So, 2);
    let f = so2.generator::<Scalar>(-1, -1).unwrap();
    assert_eq!(fusion_capelli(&so2, Shape::Column, 2).unwrap(), so2.mul(&f, &f).negate());
    for (fam, n) in [(Family::So, 2), (Family::So, 3), (Family::Sp, 2)] {
        let alg = algebra(fam, n);
        for k in 1..=2 {
            match fam {
                Family::So => {
                    let z = fusion_capelli(&alg, Shape::Column, 2 * k).unwrap();
                    assert_eq!(z, pfaffian_central(&alg, k).unwrap(), "{} C_{k}", alg.context().name());
                }
                _ => {
                    let z = fusion_capelli(&alg, Shape::Row, 2 * k).unwrap();
                    assert_eq!(z, hafnian_central(&alg, k).unwrap(), "{} D_{k}", alg.context().name());
                }
            }
        }
    }
    // D_1 of sp_2 from a row, compared through eigenvalues
    let sp2 = algebra(Family::Sp, 2);
    let hc = HcOracle::new(&sp2).unwrap();
    let d1 = fusion_capelli(&sp2, Shape::Row, 2).unwrap();
    for l in 0..=3usize {
        let lambda = Partition::new(vec![l]).unwrap();
        let expected = int(((l + 1) * (l + 1)) as i64 - 1);
        assert_eq!(hc.eigenvalue(&d1, &lambda).unwrap(), expected);
    }
}

#[test]
fn vanishing_images() {
    let idx = IndexSet::symmetric(2);
    let one = scalars();
    for shape in [Shape::Column, Shape::Row] {
        // fewer tail factors than rows: the distinct-index sum is empty
        let img = vanishing_image(&idx, Form::Orthogonal, 2, 1, shape, false).unwrap();
        assert!(img.is_zero());
        assert!(distinct_transposition_sum(&idx, 2, 1, shape).unwrap().is_zero());
        let img = vanishing_image(&idx, Form::Orthogonal, 2, 2, shape, false).unwrap();
        assert_eq!(img, distinct_transposition_sum(&idx, 2, 2, shape).unwrap());
        assert!(!img.is_zero());
        // the column kills symmetric tails and the row antisymmetric ones
        let killed = tail_projector(&idx, 2, 2, shape == Shape::Row).unwrap();
        let kept = tail_projector(&idx, 2, 2, shape == Shape::Column).unwrap();
        assert!(img.mul(&one, &killed).is_zero());
        assert!(!img.mul(&one, &kept).is_zero());
    }
    // one row: A_1 = 1 and the image is Σ_r P_{1,1+r}
    let sp = TensorSpace::new(idx.clone(), 3).unwrap();
    let expected = sp.perm::<Scalar>(1, 2).plus(&sp.perm(1, 3));
    assert_eq!(vanishing_image(&idx, Form::Orthogonal, 1, 2, Shape::Column, false).unwrap(), expected);
    for form in forms(2) {
        for shape in [Shape::Column, Shape::Row] {
            assert!(vanishing_image(&idx, form, 2, 1, shape, true).unwrap().is_zero(), "{form:?} {shape:?}");
        }
    }
}

#[test]
fn quantum_determinant_of_gl() {
    let gl1 = algebra(Family::Gl, 1);
    let h = quantum_det_gl(&gl1, None).unwrap();
    let e11 = gl1.generator::<UniPoly>(1, 1).unwrap();
    assert_eq!(h, e11.minus(&Element::constant(UniPoly::u())));
    assert!(quantum_det_gl(&algebra(Family::So, 2), None).is_err());

    // eigenvalue on the highest vector of C^2, weight ν = (1, 0): (2 - u)(-u)
    let gl2 = algebra(Family::Gl, 2);
    let h = quantum_det_gl(&gl2, None).unwrap();
    let rep = OperatorRep::polarization(&gl2, 1).unwrap();
    let v = singular_vector(rep.context(), &Partition::new(vec![1]).unwrap()).unwrap();
    let mut coeffs = Vec::new();
    for k in 0..=h.u_degree().unwrap() {
        let w = rep.act(&h.u_coeff(k), &v);
        let ratio = w.coeff(&v.leading().unwrap().0.clone()) / v.leading().unwrap().1;
        assert_eq!(w, v.scaled(&ratio));
        coeffs.push(ratio);
    }
    let expected = UniPoly::new(vec![int(2), int(-1)]).times(&UniPoly::new(vec![int(0), int(-1)]));
    assert_eq!(UniPoly::new(coeffs), expected);
    // the symmetric-label form agrees with both twisted products
    let gls = PbwAlgebra::new(&LieContext::gl_symmetric(2).unwrap()).unwrap();
    let h = quantum_det_gl(&gls, None).unwrap();
    for form in [Form::Orthogonal, Form::Symplectic] {
        assert_eq!(quantum_det_gl(&gls, Some(form)).unwrap(), h, "{form:?}");
    }
}
