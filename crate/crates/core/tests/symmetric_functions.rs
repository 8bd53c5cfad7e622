use capelli_core::combinat::multisets;
use capelli_core::matrix::det;
use capelli_core::scalar::{frac, int};
use capelli_core::symfun::{
    a_lambda, check_characterization, check_generating_series, e_factorial, factorial_power, h_factorial, schur,
    schur_factorial, Characterization, Partition, ShiftSequence,
};
use capelli_core::{Error, RatFun, Ring, Scalar, SymPoly, UniPoly};
use proptest::prelude::*;

fn z(i: usize) -> SymPoly {
    SymPoly::var(i)
}

fn c(x: Scalar) -> SymPoly {
    SymPoly::constant(x)
}

fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

/// `a_k = (k - 1)^2`, i.e. `0, 1, 4, 9, ...`.
fn squares() -> ShiftSequence {
    ShiftSequence::shifted_squares(int(0))
}

fn explicit(values: &[(i64, i64)]) -> ShiftSequence {
    ShiftSequence::explicit(values.iter().map(|(n, d)| frac(*n, *d)).collect())
}

/// Ordinary complete homogeneous polynomial as a sum of monomials.
fn complete(k: usize, n: usize) -> SymPoly {
    let mut out = SymPoly::zero();
    for ms in multisets(n, k) {
        out = out.plus(&ms.iter().fold(SymPoly::one(), |acc, i| acc.times(&z(*i))));
    }
    out
}

/// Ordinary Schur polynomial from the Jacobi-Trudi determinant.
fn jacobi_trudi(mu: &Partition, n: usize) -> SymPoly {
    let l = mu.len();
    if l == 0 {
        return SymPoly::one();
    }
    let m: Vec<Vec<SymPoly>> = (1..=l)
        .map(|i| {
            (1..=l)
                .map(|j| {
                    let d = mu.part(i) as i64 - i as i64 + j as i64;
                    if d < 0 { SymPoly::zero() } else { complete(d as usize, n) }
                })
                .collect()
        })
        .collect();
    det(&m).unwrap()
}

fn test_sequences() -> Vec<ShiftSequence> {
    vec![
        squares(),
        ShiftSequence::shifted_squares(frac(1, 2)),
        explicit(&[(3, 1), (-1, 2), (5, 3), (0, 1), (7, 2), (-4, 1), (2, 5), (11, 3)]),
    ]
}

#[test]
fn factorial_powers() {
    let a = ShiftSequence::explicit(vec![int(0), int(1), int(4)]);
    assert_eq!(factorial_power(&int(3), &a, 0), int(1));
    assert_eq!(factorial_power(&int(3), &a, 2), int(6));
    let so3 = ShiftSequence::shifted_squares(frac(1, 2));
    assert_eq!(factorial_power(&z(0), &so3, 1), z(0).minus(&c(frac(1, 4))));
}

#[test]
fn small_factorial_schur_functions() {
    assert_eq!(schur_factorial(&Partition::empty(), 3, &squares()).unwrap(), SymPoly::one());
    assert_eq!(schur_factorial(&part(&[1, 1]), 2, &squares()).unwrap(), z(0).times(&z(1)));
    // with a = (0, 1, ...) the alternant for μ = ∅, n = 2 is z1 - z2
    let alt = det(&[vec![z(0), z(1)], vec![SymPoly::one(), SymPoly::one()]]).unwrap();
    assert_eq!(alt, z(0).minus(&z(1)));
    assert!(matches!(schur_factorial(&part(&[1, 1, 1]), 2, &squares()), Err(Error::Domain(_))));
}

#[test]
fn zero_shifts_give_ordinary_schur_polynomials() {
    for n in 1..=3 {
        for mu in Partition::all(0, 4, n, 4) {
            assert_eq!(schur(&mu, n).unwrap(), jacobi_trudi(&mu, n), "μ={mu} n={n}");
        }
    }
}

#[test]
fn factorial_schur_differs_from_schur_in_lower_degree() {
    for a in test_sequences() {
        for n in 1..=3 {
            for mu in Partition::all(1, 4, n, 4) {
                let diff = schur_factorial(&mu, n, &a).unwrap().minus(&schur(&mu, n).unwrap());
                assert!(diff.total_degree().is_none_or(|d| (d as usize) < mu.size()), "μ={mu} n={n} {a:?}");
            }
        }
    }
}

#[test]
fn vanishing_at_interpolation_points() {
    for a in test_sequences() {
        for n in 1..=3 {
            for mu in Partition::all(0, 4, n, 4) {
                let s = schur_factorial(&mu, n, &a).unwrap();
                for lambda in Partition::all(0, mu.size(), n, 4) {
                    let v = s.eval(&a_lambda(&lambda, n, &a).unwrap()).unwrap();
                    if !lambda.contains(&mu) {
                        assert!(v.vanishes(), "s_{mu}(a_{lambda}) = {v}");
                    }
                    if lambda == mu {
                        assert!(!v.vanishes(), "s_{mu}(a_{mu}) vanishes");
                    }
                }
            }
        }
    }
}

#[test]
fn elementary_and_complete_sums() {
    let a = squares();
    assert_eq!(e_factorial(0, 2, &a), SymPoly::one());
    assert_eq!(h_factorial(0, 2, &a), SymPoly::one());
    assert_eq!(e_factorial(2, 2, &a), z(0).times(&z(1)));
    let b = explicit(&[(2, 1), (-3, 2), (5, 1)]);
    let expected = z(0).minus(&c(int(2))).times(&z(0).minus(&c(frac(-3, 2))));
    assert_eq!(h_factorial(2, 1, &b), expected);
}

#[test]
fn elementary_sums_vanish_past_n() {
    for a in test_sequences() {
        for n in 1..=3 {
            for k in n + 1..=n + 2 {
                assert!(e_factorial(k, n, &a).is_zero(), "k={k} n={n}");
            }
        }
    }
}

#[test]
fn sums_are_column_and_row_schur_functions() {
    for a in test_sequences() {
        for n in 1..=3 {
            for k in 1..=n {
                assert_eq!(e_factorial(k, n, &a), schur_factorial(&Partition::new(vec![1; k]).unwrap(), n, &a).unwrap());
            }
            for k in 1..=3 {
                assert_eq!(h_factorial(k, n, &a), schur_factorial(&part(&[k]), n, &a).unwrap());
            }
        }
    }
}

#[test]
fn interpolation_points() {
    let a = explicit(&[(10, 1), (20, 1), (30, 1)]);
    assert_eq!(a_lambda(&Partition::empty(), 2, &a).unwrap(), vec![int(20), int(10)]);
    assert_eq!(a_lambda(&part(&[1]), 1, &a).unwrap(), vec![int(20)]);
    assert_eq!(a_lambda(&part(&[2, 1]), 2, &squares()).unwrap(), vec![int(9), int(1)]);
    assert!(matches!(a_lambda(&part(&[1, 1, 1]), 2, &a), Err(Error::Domain(_))));
    // past the end of a finite sequence
    assert!(matches!(a_lambda(&part(&[3]), 1, &a), Err(Error::Domain(_))));
}

#[test]
fn characterizations() {
    let all = Characterization { proportional: true, vanishes_off_mu: true, vanishes_below_with_top: true };
    let none = Characterization { proportional: false, vanishes_off_mu: false, vanishes_below_with_top: false };
    for a in test_sequences() {
        for n in 1..=2 {
            for mu in Partition::all(1, 3, n, 3) {
                let s = schur_factorial(&mu, n, &a).unwrap();
                assert_eq!(check_characterization(&s, &mu, n, &a).unwrap(), all, "μ={mu}");
                assert_eq!(check_characterization(&s.scaled(&int(2)), &mu, n, &a).unwrap(), all);
                for nu in Partition::all(1, mu.size(), n, 3) {
                    if nu == mu {
                        continue;
                    }
                    let f = schur_factorial(&nu, n, &a).unwrap();
                    assert_eq!(check_characterization(&f, &mu, n, &a).unwrap(), none, "ν={nu} μ={mu}");
                }
            }
        }
    }
    let lopsided = z(0).times(&z(0));
    assert!(matches!(check_characterization(&lopsided, &part(&[2]), 2, &squares()), Err(Error::Domain(_))));
}

fn t_minus(x: &Scalar) -> UniPoly {
    UniPoly::linear(int(1), -x)
}

#[test]
fn one_variable_generating_series() {
    let a = explicit(&[(1, 3), (2, 1), (-5, 2), (7, 1), (0, 1), (9, 2)]);
    let z1 = frac(13, 7);
    check_generating_series(3, &a, &[z1.clone()]).unwrap();

    // (t - z1)/(t - a1) = 1 - e_1/(t - a1) with e_1 = z1 - a1
    let x = RatFun::new(t_minus(&z1), t_minus(&a.get(1))).unwrap();
    let e1 = &z1 - a.get(1);
    let rhs = RatFun::one().minus(&RatFun::new(UniPoly::constant(e1), t_minus(&a.get(1))).unwrap());
    assert_eq!(x, rhs);

    // 1/x = 1 + Σ_k (z1|a)^k / ((t - a_2)...(t - a_{k+1})) up to t^-4
    let mut partial = RatFun::one();
    for k in 1..=3 {
        let hk = factorial_power(&z1, &a, k);
        let den = (2..=k + 1).fold(UniPoly::one(), |acc, j| acc.times(&t_minus(&a.get(j))));
        partial = partial.plus(&RatFun::new(UniPoly::constant(hk), den).unwrap());
    }
    let rest = x.recip().unwrap().minus(&partial);
    assert_eq!(rest.order_at_infinity(), Some(4));
}

#[test]
fn two_variable_generating_series() {
    check_generating_series(3, &squares(), &[frac(5, 3), frac(-7, 2)]).unwrap();
    check_generating_series(2, &ShiftSequence::shifted_squares(frac(1, 2)), &[frac(1, 5), frac(8, 3), frac(-2, 9)]).unwrap();
}

#[test]
fn generating_series_reports_pole_collisions() {
    let err = check_generating_series(2, &squares(), &[int(4), frac(1, 3)]).unwrap_err();
    assert!(matches!(err, Error::PoleCollision(_)));
}

fn sequence() -> impl Strategy<Value = ShiftSequence> {
    prop::collection::vec((-12i64..=12, 1i64..=4), 8).prop_map(|v| explicit(&v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sums_are_symmetric(a in sequence(), k in 1usize..=3, n in 2usize..=3) {
        let e = e_factorial(k, n, &a);
        let h = h_factorial(k, n, &a);
        for i in 0..n - 1 {
            prop_assert_eq!(&e.swap_vars(i, i + 1), &e);
            prop_assert_eq!(&h.swap_vars(i, i + 1), &h);
        }
    }

    #[test]
    fn generating_series_at_random_points(a in sequence(), z in prop::collection::vec((-30i64..=30, 1i64..=6), 1..=3)) {
        let z: Vec<Scalar> = z.into_iter().map(|(n, d)| frac(n, d)).collect();
        match check_generating_series(3, &a, &z) {
            Err(Error::PoleCollision(_)) => {}
            r => prop_assert!(r.is_ok(), "{:?}", r),
        }
    }
}
