use capelli_core::matrix::det;
use capelli_core::scalar::int;
use capelli_core::symfun::Partition;
use capelli_core::weyl::{
    cayley_omega, cayley_symmetrized, cayley_theta, omega_split, operators_agree_on_degree, singular_vector,
    theta_split, OperatorRep, WeylContext, WeylOperator,
};
use capelli_core::{Error, IndexSet, LieContext, PbwAlgebra, Ring, Scalar, SymPoly};
use proptest::prelude::*;

fn ctx(m: usize, big_n: usize) -> WeylContext {
    WeylContext::new(m, IndexSet::standard(big_n))
}

/// All exponent vectors over `nv` variables with total degree at most `d`.
fn monomials(nv: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..nv {
        out = out
            .into_iter()
            .flat_map(|m: Vec<u32>| {
                let used: u32 = m.iter().sum();
                (0..=d - used).map(move |e| {
                    let mut m = m.clone();
                    m.push(e);
                    m
                })
            })
            .collect();
    }
    out
}

fn x_minor(c: &WeylContext, rows: &[usize], cols: &[i32]) -> SymPoly {
    let m: Vec<Vec<SymPoly>> = rows.iter().map(|a| cols.iter().map(|i| c.x(*a, *i).unwrap()).collect()).collect();
    det(&m).unwrap()
}

#[test]
fn canonical_commutation() {
    let c = ctx(2, 1);
    let d11 = c.op_d(1, 1).unwrap();
    let x11 = c.op_x(1, 1).unwrap();
    let x21 = c.op_x(2, 1).unwrap();
    assert_eq!(d11.times(&x11), x11.times(&d11).plus(&c.identity()));
    assert_eq!(d11.times(&x21), x21.times(&d11));
}

#[test]
fn euler_operator_squared() {
    let c = ctx(1, 1);
    let x = c.x(1, 1).unwrap();
    let e = c.polarization(1, 1).unwrap();
    let expected = c.from_parts(&x.pow(2), &x.pow(2)).plus(&c.from_parts(&x, &x));
    assert_eq!(e.times(&e), expected);
    for d in 0..6u32 {
        assert_eq!(e.times(&e).apply(&x.pow(d)), x.pow(d).scaled(&int((d * d) as i64)));
    }
}

#[test]
fn applying_operators() {
    let c = ctx(1, 1);
    let x = c.x(1, 1).unwrap();
    assert_eq!(c.op_d(1, 1).unwrap().apply(&x.pow(2)), x.scaled(&int(2)));
    assert_eq!(cayley_omega(&c, 1).unwrap().apply(&x), x);
}

#[test]
fn out_of_range_variables_are_domain_errors() {
    let c = ctx(2, 2);
    assert!(matches!(c.var(3, 1), Err(Error::Domain(_))));
    assert!(matches!(c.var(1, 0), Err(Error::Domain(_))));
    assert!(matches!(c.op_d(0, 1), Err(Error::Domain(_))));
}

#[test]
fn first_operators_are_euler_operators() {
    for m in 1..=3 {
        for n in 1..=3 {
            let c = ctx(m, n);
            let mut euler = c.zero_op();
            for i in 1..=n as i32 {
                euler = euler.plus(&c.polarization(i, i).unwrap());
            }
            assert_eq!(cayley_omega(&c, 1).unwrap(), euler);
            assert_eq!(cayley_theta(&c, 1).unwrap(), euler);
        }
    }
}

#[test]
fn omega_vanishes_past_the_rank() {
    for m in 1..=3 {
        for n in 1..=3 {
            let c = ctx(m, n);
            for k in m.min(n) + 1..=3 {
                assert!(cayley_omega(&c, k).unwrap().vanishes(), "m={m} N={n} k={k}");
            }
        }
    }
}

#[test]
fn top_omega_is_product_of_determinants() {
    let c = ctx(2, 2);
    let d = x_minor(&c, &[1, 2], &[1, 2]);
    assert_eq!(cayley_omega(&c, 2).unwrap(), c.from_parts(&d, &d));
}

#[test]
fn symmetrized_and_minor_forms_agree() {
    for m in 1..=3 {
        for n in 1..=3 {
            let c = ctx(m, n);
            for k in 1..=3 {
                assert_eq!(cayley_symmetrized(&c, k, true), cayley_omega(&c, k).unwrap(), "Ω m={m} N={n} k={k}");
                assert_eq!(cayley_symmetrized(&c, k, false), cayley_theta(&c, k).unwrap(), "Θ m={m} N={n} k={k}");
            }
        }
    }
}

#[test]
fn cayley_operators_kill_low_degrees() {
    for m in 1..=3 {
        for n in 1..=3 {
            let c = ctx(m, n);
            for k in 1..=3u32 {
                let om = cayley_omega(&c, k as usize).unwrap();
                let th = cayley_theta(&c, k as usize).unwrap();
                for e in monomials(c.nv(), k - 1) {
                    let p = SymPoly::monomial(&e, int(1));
                    assert!(om.apply(&p).is_zero(), "Ω_{k} on {e:?}");
                    assert!(th.apply(&p).is_zero(), "Θ_{k} on {e:?}");
                }
            }
        }
    }
}

#[test]
fn single_pair_split_operators() {
    let c = WeylContext::new(2, IndexSet::symmetric(4));
    let xd = |a: usize, i: i32, j: i32| c.op_x(a, i).unwrap().times(&c.op_d(a, j).unwrap());
    for a in 1..=2 {
        for (i1, i2) in [(-2, 1), (-1, 2), (1, 2), (-2, -1)] {
            let om = xd(a, i1, -i2).minus(&xd(a, i2, -i1));
            assert_eq!(omega_split(&c, &[a], &[i1, i2]).unwrap(), om);
            assert_eq!(omega_split(&c, &[a], &[i2, i1]).unwrap(), om);
            let s = |i: i32| int(i.signum() as i64);
            let th = xd(a, i1, -i2).scaled(&s(i1)).plus(&xd(a, i2, -i1).scaled(&s(i2)));
            assert_eq!(theta_split(&c, &[a], &[i1, i2]).unwrap(), th);
        }
        // coincident entries: both position splits give the same term
        assert_eq!(theta_split(&c, &[a], &[-1, -1]).unwrap(), xd(a, -1, 1).scaled(&int(-2)));
    }
    assert_eq!(omega_split(&c, &[], &[]).unwrap(), c.identity());
    assert_eq!(theta_split(&c, &[], &[]).unwrap(), c.identity());
    assert!(matches!(omega_split(&c, &[1], &[1, 1]), Err(Error::Domain(_))));
    assert!(matches!(omega_split(&c, &[1], &[1, 2, -1]), Err(Error::Dimension(_))));
}

#[test]
fn split_operators_need_a_symmetric_index_set() {
    let c = ctx(1, 2);
    assert!(matches!(omega_split(&c, &[1], &[1, 2]), Err(Error::Domain(_))));
}

#[test]
fn highest_weight_vectors() {
    let so3 = PbwAlgebra::new(&LieContext::so(3).unwrap()).unwrap();
    let rep = OperatorRep::polarization(&so3, 1).unwrap();
    let c = rep.context();
    assert_eq!(singular_vector(c, &Partition::empty()).unwrap(), SymPoly::one());
    let v = singular_vector(c, &Partition::new(vec![1]).unwrap()).unwrap();
    assert_eq!(v, c.x(1, -1).unwrap());
    // F_{-1,-1} acts as x_{1,-1} ∂_{1,-1} - x_{1,1} ∂_{1,1}
    let f = so3.generator::<Scalar>(-1, -1).unwrap();
    assert_eq!(rep.act(&f, &v), v);

    let sp4 = PbwAlgebra::new(&LieContext::sp(4).unwrap()).unwrap();
    let rep = OperatorRep::polarization(&sp4, 2).unwrap();
    for lambda in Partition::all(0, 4, 2, 3) {
        let v = singular_vector(rep.context(), &lambda).unwrap();
        assert_eq!(v.total_degree(), Some(lambda.size() as u32), "{lambda}");
    }
}

fn op(c: &WeylContext) -> impl Strategy<Value = WeylOperator> {
    let nv = c.nv();
    let c = c.clone();
    prop::collection::vec((prop::collection::vec(0u32..=1, 2 * nv), -3i64..=3), 1..4).prop_map(move |terms| {
        terms.into_iter().fold(c.zero_op(), |acc, (e, k)| {
            let px = SymPoly::monomial(&e[..nv], int(k));
            let pd = SymPoly::monomial(&e[nv..], int(1));
            acc.plus(&c.from_parts(&px, &pd))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn weyl_product_is_associative_and_acts_by_composition(
        (a, b, cc) in {
            let c = ctx(1, 3);
            (op(&c), op(&c), op(&c))
        }
    ) {
        prop_assert_eq!(a.times(&b).times(&cc), a.times(&b.times(&cc)));
        let ab = a.times(&b);
        for e in monomials(3, 3) {
            let p = SymPoly::monomial(&e, int(1));
            prop_assert_eq!(ab.apply(&p), a.apply(&b.apply(&p)));
        }
        // order at most 6 in three variables: agreement on degree 6 decides equality
        prop_assert_eq!(operators_agree_on_degree(&ab, &b.times(&a), 6), ab == b.times(&a));
    }
}
