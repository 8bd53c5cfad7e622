use capelli_core::genfun::{
    alpha_roots, beta_roots, central_elements, check_inversion, check_ladder_transfer, check_series_transfer,
    compare_quantum_det, dual_combination, ladder, ladder_to_power, power_to_ladder, scalar_ratio_series, series_inverse,
    series_mul, Kind, Operators, Route, Scalars,
};
use capelli_core::scalar::{frac, int};
use capelli_core::weyl::OperatorRep;
use capelli_core::{Error, Family, LieContext, PbwAlgebra, Ring, Scalar};
use proptest::prelude::*;

const CELLS: u64 = 1 << 12;

fn algebra(family: Family, big_n: usize) -> PbwAlgebra {
    PbwAlgebra::new(&LieContext::new(family, big_n).unwrap()).unwrap()
}

fn squares(v: &[(i64, i64)]) -> Vec<Scalar> {
    v.iter().map(|(n, d)| frac(*n, *d) * frac(*n, *d)).collect()
}

#[test]
fn ladder_roots() {
    let so3 = LieContext::so(3).unwrap();
    assert_eq!(ladder(&so3, Kind::C, 1).unwrap(), squares(&[(1, 2)]));
    assert_eq!(ladder(&so3, Kind::D, 3).unwrap(), squares(&[(3, 2), (5, 2), (7, 2)]));
    assert!(matches!(ladder(&so3, Kind::C, 2), Err(Error::Domain(_))));
    let so4 = LieContext::so(4).unwrap();
    assert_eq!(ladder(&so4, Kind::C, 2).unwrap(), squares(&[(1, 1), (0, 1)]));
    assert_eq!(ladder(&so4, Kind::D, 2).unwrap(), squares(&[(2, 1), (3, 1)]));
    let sp4 = LieContext::sp(4).unwrap();
    assert_eq!(ladder(&sp4, Kind::C, 2).unwrap(), squares(&[(2, 1), (1, 1)]));
    assert_eq!(ladder(&sp4, Kind::D, 2).unwrap(), squares(&[(3, 1), (4, 1)]));
}

#[test]
fn single_step_ladder() {
    // 1 + x / (t - r) = 1 + x w + x r w^2 + x r^2 w^3 with w = 1/t
    let (x, r) = (frac(3, 2), int(5));
    let p = ladder_to_power(&Scalars, &[x.clone()], &[r.clone()], 3);
    assert_eq!(p, vec![int(1), x.clone(), &x * &r, &x * &r * &r]);
}

#[test]
fn ratio_series() {
    // (1 - 2w) / (1 - 3w) = 1 + w + 3w^2 + 9w^3
    assert_eq!(scalar_ratio_series(&[int(2)], &[int(3)], 3), vec![int(1), int(1), int(3), int(9)]);
    let den = scalar_ratio_series(&[int(4), frac(1, 3)], &[], 4);
    assert_eq!(scalar_ratio_series(&[], &[int(4), frac(1, 3)], 4), series_inverse(&Scalars, &den));
}

#[test]
fn central_elements_by_several_routes() {
    let so3 = algebra(Family::So, 3);
    let pre = central_elements(&so3, Kind::D, 3, Route::Preimage, CELLS).unwrap();
    let inv = central_elements(&so3, Kind::D, 3, Route::Inversion, CELLS).unwrap();
    let fus = central_elements(&so3, Kind::D, 2, Route::Fusion, CELLS).unwrap();
    assert_eq!(pre, inv);
    assert_eq!(&fus[..], &pre[..2]);
    for d in &pre {
        so3.check_central(d).unwrap();
    }
    let c = central_elements(&so3, Kind::C, 1, Route::Explicit, CELLS).unwrap();
    assert_eq!(c, central_elements(&so3, Kind::C, 1, Route::Fusion, CELLS).unwrap());
    check_inversion(&so3, &c, &ladder(so3.context(), Kind::C, 1).unwrap(), &pre, &ladder(so3.context(), Kind::D, 3).unwrap(), 3)
        .unwrap();

    let sp2 = algebra(Family::Sp, 2);
    let c = central_elements(&sp2, Kind::C, 1, Route::Fusion, CELLS).unwrap();
    assert_eq!(c, central_elements(&sp2, Kind::C, 1, Route::Inversion, CELLS).unwrap());
    let d = central_elements(&sp2, Kind::D, 3, Route::Explicit, CELLS).unwrap();
    check_inversion(&sp2, &c, &ladder(sp2.context(), Kind::C, 1).unwrap(), &d, &ladder(sp2.context(), Kind::D, 3).unwrap(), 3)
        .unwrap();
    // a perturbed D_2 breaks the inversion
    let mut bad = d.clone();
    bad[1] = bad[1].plus(&d[0]);
    assert!(matches!(
        check_inversion(&sp2, &c, &ladder(sp2.context(), Kind::C, 1).unwrap(), &bad, &ladder(sp2.context(), Kind::D, 3).unwrap(), 3),
        Err(Error::Mismatch { .. })
    ));
}

#[test]
fn trailing_c_elements_are_zero() {
    let so2 = algebra(Family::So, 2);
    for route in [Route::Explicit, Route::Fusion, Route::Preimage] {
        let c = central_elements(&so2, Kind::C, 3, route, CELLS).unwrap();
        assert_eq!(c.len(), 3);
        assert!(!c[0].is_zero());
        assert!(c[1].is_zero() && c[2].is_zero(), "{route:?}");
    }
}

#[test]
fn route_errors() {
    let so4 = algebra(Family::So, 4);
    // D_3 needs 4^6 cells
    let err = central_elements(&so4, Kind::D, 3, Route::Fusion, 4095).unwrap_err();
    assert!(matches!(err, Error::SizeGuard { cells: 4096, max: 4095 }), "{err:?}");
    assert!(central_elements(&so4, Kind::D, 1, Route::Fusion, 4095).is_ok());
    let gl2 = algebra(Family::Gl, 2);
    assert!(matches!(central_elements(&gl2, Kind::C, 1, Route::Explicit, CELLS), Err(Error::Domain(_))));
}

#[test]
fn quantum_determinant_factor() {
    for (fam, n) in [(Family::So, 2), (Family::Sp, 2)] {
        let alg = algebra(fam, n);
        let c = central_elements(&alg, Kind::C, alg.context().n(), Route::Fusion, CELLS).unwrap();
        let cmp = compare_quantum_det(&alg, &c).unwrap();
        assert!(cmp.matches_stated, "{}: {:?}", alg.context().name(), cmp.ratio);
    }
}

#[test]
fn dual_pair_transfer() {
    let m = 1;
    for big_n in 2..=3 {
        let g = algebra(Family::So, big_n);
        let n = g.context().n();
        let dual = algebra(Family::Sp, 2 * m);
        let cs = central_elements(&g, Kind::C, n, Route::Explicit, CELLS).unwrap();
        let cp = central_elements(&dual, Kind::C, m, Route::Inversion, CELLS).unwrap();
        let mut gr = OperatorRep::polarization(&g, m).unwrap();
        let mut gp = OperatorRep::dual(&dual, Family::So, g.context().index()).unwrap();
        let ring = Operators(gr.context().nv());
        let gc: Vec<_> = cs.iter().map(|x| gr.image(x)).collect();
        let gcp: Vec<_> = cp.iter().map(|x| gp.image(x)).collect();
        let (an, ad) = alpha_roots(big_n, m);
        let rx = ladder(g.context(), Kind::C, n).unwrap();
        let ry = ladder(dual.context(), Kind::C, m).unwrap();
        check_ladder_transfer(&ring, (&an, &ad), &gc, &rx, &gcp, &ry).unwrap();
        assert_eq!(dual_combination(&ring, Family::So, 1, &gc, m, big_n).unwrap(), gcp[0], "so_{big_n}");
        // without α the images differ
        assert!(check_ladder_transfer(&ring, (&[], &[]), &gc, &rx, &gcp, &ry).is_err());
    }

    let g = algebra(Family::Sp, 2);
    let dual = algebra(Family::So, 2 * m);
    let ds = central_elements(&g, Kind::D, 2, Route::Explicit, CELLS).unwrap();
    let dp = central_elements(&dual, Kind::D, 2, Route::Inversion, CELLS).unwrap();
    let mut gr = OperatorRep::polarization(&g, m).unwrap();
    let mut gp = OperatorRep::dual(&dual, Family::Sp, g.context().index()).unwrap();
    let ring = Operators(gr.context().nv());
    let gd: Vec<_> = ds.iter().map(|x| gr.image(x)).collect();
    let gdp: Vec<_> = dp.iter().map(|x| gp.image(x)).collect();
    let (bn, bd) = beta_roots(1, m);
    let rx = ladder(g.context(), Kind::D, 2).unwrap();
    let ry = ladder(dual.context(), Kind::D, 2).unwrap();
    check_series_transfer(&ring, (&bn, &bd), &gd, &rx, &gdp, &ry, 2).unwrap();
    for k in 1..=2 {
        assert_eq!(dual_combination(&ring, Family::Sp, k, &gd, m, 2).unwrap(), gdp[k - 1], "k={k}");
    }
}

fn rat() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| frac(n, d))
}

proptest! {
    #[test]
    fn ladder_and_power_coefficients_round_trip(
        x in prop::collection::vec(rat(), 1..=4),
        roots in prop::collection::vec(rat(), 4),
    ) {
        let p = ladder_to_power(&Scalars, &x, &roots, x.len());
        prop_assert_eq!(&p[0], &int(1));
        prop_assert_eq!(power_to_ladder(&Scalars, &p, &roots), x);
    }

    #[test]
    fn series_inverse_is_an_inverse(tail in prop::collection::vec(rat(), 0..=5)) {
        let mut p = vec![int(1)];
        p.extend(tail);
        let q = series_inverse(&Scalars, &p);
        let prod = series_mul(&Scalars, &p, &q);
        prop_assert_eq!(&prod[0], &int(1));
        prop_assert!(prod[1..].iter().all(|c| c.vanishes()));
    }
}
