use capelli_core::genfun::alpha_roots;
use capelli_core::matrix::{det, det_leibniz, per};
use capelli_core::scalar::{factorial, frac, int};
use capelli_core::{Error, RatFun, Ring, Scalar, SymPoly, UniPoly};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| frac(n, d))
}

/// Small polynomials in two variables with degree at most 2.
fn poly2() -> impl Strategy<Value = SymPoly> {
    prop::collection::vec(((0u32..=2, 0u32..=2), -3i64..=3), 0..4).prop_map(|terms| {
        let mut p = SymPoly::zero();
        for ((a, b), c) in terms {
            p.add_term(vec![a, b], int(c));
        }
        p
    })
}

fn matrix3() -> impl Strategy<Value = Vec<Vec<SymPoly>>> {
    prop::collection::vec(prop::collection::vec(poly2(), 3), 3)
}

fn uni(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-4i64..=4, 1..=max_deg + 1).prop_map(|c| UniPoly::new(c.into_iter().map(int).collect()))
}

fn nonzero_uni(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    uni(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

/// Permanent as a plain sum over permutations.
fn per_by_permutations(m: &[Vec<SymPoly>]) -> SymPoly {
    let n = m.len();
    let mut acc = SymPoly::zero();
    for (p, _) in capelli_core::combinat::permutations(n) {
        acc = acc.plus(&(0..n).fold(SymPoly::one(), |t, i| t.times(&m[i][p[i]])));
    }
    acc
}

fn x(i: usize) -> SymPoly {
    SymPoly::var(i)
}

#[test]
fn small_determinants() {
    assert_eq!(det(&[vec![x(0)]]).unwrap(), x(0));
    let m = vec![vec![x(0), x(1)], vec![x(2), x(3)]];
    assert_eq!(det(&m).unwrap(), x(0).times(&x(3)).minus(&x(1).times(&x(2))));
    assert_eq!(per(&m).unwrap(), x(0).times(&x(3)).plus(&x(1).times(&x(2))));
    assert_eq!(per(&[vec![x(0)]]).unwrap(), x(0));
}

#[test]
fn non_square_input_is_a_dimension_error() {
    let m = vec![vec![int(1), int(2)], vec![int(3)]];
    assert!(matches!(det(&m), Err(Error::Dimension(_))));
    assert!(matches!(per(&m), Err(Error::Dimension(_))));
}

#[test]
fn permanent_of_all_ones_is_factorial() {
    for k in 1..=6 {
        let ones = vec![vec![int(1); k]; k];
        assert_eq!(per(&ones).unwrap(), factorial(k), "k={k}");
    }
}

#[test]
fn large_determinants_agree_with_leibniz() {
    // size 5 takes the elimination branch
    let m: Vec<Vec<Scalar>> = (0..5).map(|i| (0..5).map(|j| frac((i * 7 + j * j * 3) % 11 - 5, 1 + (i + j) % 3)).collect()).collect();
    assert_eq!(det(&m).unwrap(), det_leibniz(&m).unwrap());
    let v: Vec<Vec<SymPoly>> = (0..5).map(|i| (0..5).map(|j| x(i).plus(&SymPoly::constant(int(j as i64)))).collect()).collect();
    assert_eq!(det(&v).unwrap(), det_leibniz(&v).unwrap());
}

#[test]
fn rational_function_evaluation() {
    let f = RatFun::new(UniPoly::new(vec![int(-1), int(1)]), UniPoly::new(vec![int(-2), int(1)])).unwrap();
    assert_eq!(f.eval(&int(3)).unwrap(), int(2));
    assert!(matches!(f.eval(&int(2)), Err(Error::Pole(_))));
    // (u^2 - 1)/(u - 1) has a removable singularity at 1
    let g = RatFun::new(UniPoly::new(vec![int(-1), int(0), int(1)]), UniPoly::new(vec![int(-1), int(1)])).unwrap();
    assert_eq!(g.eval(&int(1)).unwrap(), int(2));
    assert_eq!(g.den(), &UniPoly::one());
}

#[test]
fn alpha_factor_at_a_point() {
    // α(u) = Π_a (u² - (N/2 - a)²) / (u² - a²), evaluated from the product directly
    let (num, den) = alpha_roots(3, 1);
    let u2 = int(4);
    let value: Scalar = num.iter().zip(&den).map(|(r, s)| (&u2 - r) / (&u2 - s)).product();
    assert_eq!(value, frac(5, 4));
}

proptest! {
    #[test]
    fn scalar_field_axioms(a in rat(), b in rat(), c in rat()) {
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        if a != int(0) {
            prop_assert_eq!(&a * (int(1) / &a), int(1));
        }
    }

    #[test]
    fn determinant_is_alternating(m in matrix3(), i in 0usize..3, j in 0usize..3) {
        prop_assume!(i != j);
        let d = det(&m).unwrap();
        prop_assert_eq!(&d, &det_leibniz(&m).unwrap());
        let mut swapped = m.clone();
        swapped.swap(i, j);
        prop_assert_eq!(det(&swapped).unwrap(), d.negate());
        let mut repeated = m.clone();
        repeated[j] = m[i].clone();
        prop_assert!(det(&repeated).unwrap().is_zero());
    }

    #[test]
    fn determinant_is_multilinear(m in matrix3(), row in prop::collection::vec(poly2(), 3), c in poly2(), i in 0usize..3) {
        let mut mixed = m.clone();
        mixed[i] = m[i].iter().zip(&row).map(|(p, q)| p.plus(&c.times(q))).collect();
        let mut other = m.clone();
        other[i] = row;
        let lhs = det(&mixed).unwrap();
        let rhs = det(&m).unwrap().plus(&c.times(&det(&other).unwrap()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn permanent_is_symmetric_and_multilinear(m in matrix3(), row in prop::collection::vec(poly2(), 3), c in poly2(), i in 0usize..3, j in 0usize..3) {
        let p = per(&m).unwrap();
        prop_assert_eq!(&p, &per_by_permutations(&m));
        let mut swapped = m.clone();
        swapped.swap(i, j);
        prop_assert_eq!(&per(&swapped).unwrap(), &p);
        let mut mixed = m.clone();
        mixed[i] = m[i].iter().zip(&row).map(|(a, b)| a.plus(&c.times(b))).collect();
        let mut other = m.clone();
        other[i] = row;
        prop_assert_eq!(per(&mixed).unwrap(), p.plus(&c.times(&per(&other).unwrap())));
    }

    #[test]
    fn ratfun_equality_is_cross_multiplication(n1 in uni(3), d1 in nonzero_uni(2), n2 in uni(3), d2 in nonzero_uni(2), q in nonzero_uni(2)) {
        let f = RatFun::new(n1.clone(), d1.clone()).unwrap();
        let g = RatFun::new(n2.clone(), d2.clone()).unwrap();
        let cross = n1.times(&d2).minus(&n2.times(&d1));
        prop_assert_eq!(f == g, cross.is_zero());
        // a common factor never changes the value
        let h = RatFun::new(n1.times(&q), d1.times(&q)).unwrap();
        prop_assert_eq!(&h, &f);
        prop_assert!(f.den().lead().is_none_or(|c| *c == int(1)));
        prop_assert!(f.is_zero() || f.num().gcd(f.den()).degree() == Some(0));
    }
}
