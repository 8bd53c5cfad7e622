//! Generating functions `C(u)`, `D(u)` of the central elements, their
//! inversion, and the transfer identities between a dual pair.
//!
//! Series are taken in `w = u^{-2}`. A ladder series
//! `1 + Σ_k X_k / Π_{j≤k} (u² - r_j)` has power coefficients
//! `P_e = Σ_{k≤e} X_k h_{e-k}(r_1, ..., r_k)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lie::{Family, LieContext};
use crate::pbw::{Element, PbwAlgebra};
use crate::poly::UniPoly;
use crate::ring::Ring;
use crate::scalar::{self, Scalar};
use crate::symfun;
use crate::tensor::{self, Shape};
use crate::uea;
use crate::weyl::WeylOperator;

/// Commutative coefficient arithmetic for series.
pub trait SeriesRing {
    type T: Clone + PartialEq;
    fn zero(&self) -> Self::T;
    fn one(&self) -> Self::T;
    fn add(&self, a: &Self::T, b: &Self::T) -> Self::T;
    fn scale(&self, a: &Self::T, s: &Scalar) -> Self::T;
    fn mul(&self, a: &Self::T, b: &Self::T) -> Self::T;
    fn is_zero(&self, a: &Self::T) -> bool;
}

/// Rational numbers.
pub struct Scalars;

impl SeriesRing for Scalars {
    type T = Scalar;
    fn zero(&self) -> Scalar {
        Scalar::zero()
    }
    fn one(&self) -> Scalar {
        Scalar::one()
    }
    fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a + b
    }
    fn scale(&self, a: &Scalar, s: &Scalar) -> Scalar {
        a * s
    }
    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a * b
    }
    fn is_zero(&self, a: &Scalar) -> bool {
        a.is_zero()
    }
}

/// Central elements of an enveloping algebra.
impl SeriesRing for PbwAlgebra {
    type T = Element;
    fn zero(&self) -> Element {
        Element::zero()
    }
    fn one(&self) -> Element {
        Element::one()
    }
    fn add(&self, a: &Element, b: &Element) -> Element {
        a.plus(b)
    }
    fn scale(&self, a: &Element, s: &Scalar) -> Element {
        a.scaled(s)
    }
    fn mul(&self, a: &Element, b: &Element) -> Element {
        PbwAlgebra::mul(self, a, b)
    }
    fn is_zero(&self, a: &Element) -> bool {
        a.is_zero()
    }
}

/// Commuting differential operators in `nv` variables.
pub struct Operators(pub usize);

impl SeriesRing for Operators {
    type T = WeylOperator;
    fn zero(&self) -> WeylOperator {
        WeylOperator::zero(self.0)
    }
    fn one(&self) -> WeylOperator {
        WeylOperator::constant(self.0, Scalar::one())
    }
    fn add(&self, a: &WeylOperator, b: &WeylOperator) -> WeylOperator {
        a.plus(b)
    }
    fn scale(&self, a: &WeylOperator, s: &Scalar) -> WeylOperator {
        a.scaled(s)
    }
    fn mul(&self, a: &WeylOperator, b: &WeylOperator) -> WeylOperator {
        a.times(b)
    }
    fn is_zero(&self, a: &WeylOperator) -> bool {
        a.vanishes()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    C,
    D,
}

/// Roots `r_1, ..., r_k` of the denominators in `u²`: `a_{n-j+1}` for `C(u)`
/// and `a_{n+j}` for `D(u)`, with `a` the shift sequence of the algebra.
/// For `o_N` these are `(N/2-j)²` and `(N/2+j-1)²`; for `sp_N`, `(n-j+1)²` and
/// `(n+j)²`.
pub fn ladder(ctx: &LieContext, kind: Kind, k: usize) -> Result<Vec<Scalar>> {
    let a = ctx.shift_sequence()?;
    let n = ctx.n();
    (1..=k)
        .map(|j| match kind {
            Kind::C if j <= n => a.try_get(n - j + 1),
            Kind::C => Err(Error::Domain(format!("C(u) has {n} terms"))),
            Kind::D => a.try_get(n + j),
        })
        .collect()
}

/// Complete homogeneous `h_d(r)`.
fn complete(d: usize, r: &[Scalar]) -> Scalar {
    // h_d(r_1..r_k) = h_d(r_1..r_{k-1}) + r_k h_{d-1}(r_1..r_k)
    let mut h = vec![Scalar::zero(); d + 1];
    h[0] = Scalar::one();
    for x in r {
        for e in 1..=d {
            let t = x * &h[e - 1];
            h[e] += t;
        }
    }
    h[d].clone()
}

/// Power coefficients `P_0..P_order` of `1 + Σ_k x[k-1] / Π_{j≤k} (u² - r_j)`.
pub fn ladder_to_power<R: SeriesRing>(ring: &R, x: &[R::T], roots: &[Scalar], order: usize) -> Vec<R::T> {
    let mut p = vec![ring.one()];
    for e in 1..=order {
        let mut acc = ring.zero();
        for k in 1..=e.min(x.len()) {
            let h = complete(e - k, &roots[..k]);
            if !h.is_zero() {
                acc = ring.add(&acc, &ring.scale(&x[k - 1], &h));
            }
        }
        p.push(acc);
    }
    p
}

/// Inverse of [`ladder_to_power`]: ladder coefficients `X_1..X_K` from
/// `P_0 = 1, P_1..P_K`.
pub fn power_to_ladder<R: SeriesRing>(ring: &R, p: &[R::T], roots: &[Scalar]) -> Vec<R::T> {
    let mut x: Vec<R::T> = Vec::new();
    for e in 1..p.len() {
        let mut acc = p[e].clone();
        for k in 1..e {
            let h = complete(e - k, &roots[..k]);
            if !h.is_zero() {
                acc = ring.add(&acc, &ring.scale(&x[k - 1], &-h));
            }
        }
        x.push(acc);
    }
    x
}

/// Truncated product.
pub fn series_mul<R: SeriesRing>(ring: &R, p: &[R::T], q: &[R::T]) -> Vec<R::T> {
    let len = p.len().min(q.len());
    (0..len)
        .map(|e| (0..=e).fold(ring.zero(), |acc, i| ring.add(&acc, &ring.mul(&p[i], &q[e - i]))))
        .collect()
}

/// Truncated inverse of a series with `P_0 = 1`.
pub fn series_inverse<R: SeriesRing>(ring: &R, p: &[R::T]) -> Vec<R::T> {
    let mut q = vec![ring.one()];
    for e in 1..p.len() {
        let mut acc = ring.zero();
        for i in 1..=e {
            acc = ring.add(&acc, &ring.mul(&p[i], &q[e - i]));
        }
        q.push(ring.scale(&acc, &-Scalar::one()));
    }
    q
}

/// `Π (1 - a w) / Π (1 - b w)` to order `order` in `w`.
pub fn scalar_ratio_series(num: &[Scalar], den: &[Scalar], order: usize) -> Vec<Scalar> {
    let mut p = vec![Scalar::zero(); order + 1];
    p[0] = Scalar::one();
    for a in num {
        for e in (1..=order).rev() {
            let t = a * &p[e - 1];
            p[e] -= t;
        }
    }
    for b in den {
        for e in 1..=order {
            let t = b * &p[e - 1];
            p[e] += t;
        }
    }
    p
}

/// Index of the first coefficient `1..len` that does not vanish in `p - q`.
fn first_mismatch<R: SeriesRing>(ring: &R, p: &[R::T], q: &[R::T]) -> Option<usize> {
    (0..p.len().min(q.len())).find(|&e| !ring.is_zero(&ring.add(&p[e], &ring.scale(&q[e], &-Scalar::one()))))
}

/// `C(u) · D(u) = 1` up to `w^order` with both sides given as ladders.
pub fn check_inversion<R: SeriesRing>(
    ring: &R,
    c: &[R::T],
    c_roots: &[Scalar],
    d: &[R::T],
    d_roots: &[Scalar],
    order: usize,
) -> Result<()> {
    let pc = ladder_to_power(ring, c, c_roots, order);
    let pd = ladder_to_power(ring, d, d_roots, order);
    let prod = series_mul(ring, &pc, &pd);
    let mut one = vec![ring.zero(); order + 1];
    one[0] = ring.one();
    match first_mismatch(ring, &prod, &one) {
        None => Ok(()),
        Some(e) => Err(Error::mismatch("series inversion", format!("coefficient of u^-{}", 2 * e))),
    }
}

/// Polynomial in `t = u²`, low degree first, with coefficients in `R`.
fn poly_from_roots(roots: &[Scalar]) -> Vec<Scalar> {
    let mut p = vec![Scalar::one()];
    for r in roots {
        let mut q = vec![Scalar::zero(); p.len() + 1];
        for (i, c) in p.iter().enumerate() {
            q[i + 1] += c;
            q[i] -= r * c;
        }
        p = q;
    }
    p
}

fn poly_scale<R: SeriesRing>(ring: &R, s: &[Scalar], p: &[R::T]) -> Vec<R::T> {
    let mut out = vec![ring.zero(); s.len() + p.len() - 1];
    for (i, a) in s.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in p.iter().enumerate() {
            out[i + j] = ring.add(&out[i + j], &ring.scale(b, a));
        }
    }
    out
}

/// `(1 + Σ_k X_k / Π_{j≤k} (t - r_j)) · Π_{j≤K} (t - r_j)` as a polynomial in `t`.
pub fn ladder_numerator<R: SeriesRing>(ring: &R, x: &[R::T], roots: &[Scalar]) -> Vec<R::T> {
    let k_max = x.len();
    let full = poly_from_roots(&roots[..k_max]);
    let mut out: Vec<R::T> = full.iter().map(|c| ring.scale(&ring.one(), c)).collect();
    for k in 1..=k_max {
        let tail = poly_from_roots(&roots[k..k_max]);
        for (i, c) in tail.iter().enumerate() {
            out[i] = ring.add(&out[i], &ring.scale(&x[k - 1], c));
        }
    }
    out
}

/// `α(u) X(u) = Y(u)` for ladders `X` (roots `rx`), `Y` (roots `ry`) and the
/// scalar factor `α = Π (t - a) / Π (t - b)`, compared as polynomials in `t`
/// after clearing denominators.
pub fn check_ladder_transfer<R: SeriesRing>(
    ring: &R,
    alpha: (&[Scalar], &[Scalar]),
    x: &[R::T],
    rx: &[Scalar],
    y: &[R::T],
    ry: &[Scalar],
) -> Result<()> {
    let nx = ladder_numerator(ring, x, rx);
    let ny = ladder_numerator(ring, y, ry);
    // α_num · numX · denY = α_den · denX · numY
    let mut lscal = poly_from_roots(alpha.0);
    lscal = mul_scalar_polys(&lscal, &poly_from_roots(&ry[..y.len()]));
    let mut rscal = poly_from_roots(alpha.1);
    rscal = mul_scalar_polys(&rscal, &poly_from_roots(&rx[..x.len()]));
    let lhs = poly_scale(ring, &lscal, &nx);
    let rhs = poly_scale(ring, &rscal, &ny);
    let len = lhs.len().max(rhs.len());
    for e in 0..len {
        let a = lhs.get(e).cloned().unwrap_or_else(|| ring.zero());
        let b = rhs.get(e).cloned().unwrap_or_else(|| ring.zero());
        if !ring.is_zero(&ring.add(&a, &ring.scale(&b, &-Scalar::one()))) {
            return Err(Error::mismatch("ladder transfer", format!("coefficient of u^{}", 2 * e)));
        }
    }
    Ok(())
}

fn mul_scalar_polys(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `β(u) X(u) = Y(u)` as power series in `w` up to `w^order`, with
/// `β = Π (t - a) / Π (t - b)`.
pub fn check_series_transfer<R: SeriesRing>(
    ring: &R,
    beta: (&[Scalar], &[Scalar]),
    x: &[R::T],
    rx: &[Scalar],
    y: &[R::T],
    ry: &[Scalar],
    order: usize,
) -> Result<()> {
    let b = scalar_ratio_series(beta.0, beta.1, order);
    let px = ladder_to_power(ring, x, rx, order);
    let py = ladder_to_power(ring, y, ry, order);
    let lhs: Vec<R::T> = (0..=order)
        .map(|e| (0..=e).fold(ring.zero(), |acc, i| ring.add(&acc, &ring.scale(&px[e - i], &b[i]))))
        .collect();
    match first_mismatch(ring, &lhs, &py) {
        None => Ok(()),
        Some(e) => Err(Error::mismatch("series transfer", format!("coefficient of u^-{}", 2 * e))),
    }
}

/// Numerator and denominator roots in `u²` of `α(u) = Π_a (u² - (N/2-a)²) / (u² - a²)`.
pub fn alpha_roots(big_n: usize, m: usize) -> (Vec<Scalar>, Vec<Scalar>) {
    let half = scalar::frac(big_n as i64, 2);
    let num = (1..=m as i64).map(|a| (&half - scalar::int(a)) * (&half - scalar::int(a))).collect();
    let den = (1..=m as i64).map(|a| scalar::int(a * a)).collect();
    (num, den)
}

/// Roots of `β(u) = Π_a (u² - (a-1)²) / (u² - (n-a+1)²)`.
pub fn beta_roots(n: usize, m: usize) -> (Vec<Scalar>, Vec<Scalar>) {
    let num = (1..=m as i64).map(|a| scalar::int((a - 1) * (a - 1))).collect();
    let den = (1..=m as i64).map(|a| scalar::int((n as i64 - a + 1) * (n as i64 - a + 1))).collect();
    (num, den)
}

/// `Σ_l coeff(k, l) · x[l]` with `x[0] = 1`, the right side of the dual-pair
/// formulas for `k ≥ 1`.
pub fn dual_combination<R: SeriesRing>(
    ring: &R,
    family: Family,
    k: usize,
    x: &[R::T],
    m: usize,
    big_n: usize,
) -> Result<R::T> {
    let mut acc = ring.zero();
    for l in 0..=k {
        let f = uea::dual_pair_coeff(family, k, l, m, big_n)?;
        if f.is_zero() {
            continue;
        }
        let xl = if l == 0 { ring.one() } else { x.get(l - 1).cloned().unwrap_or_else(|| ring.zero()) };
        acc = ring.add(&acc, &ring.scale(&xl, &f));
    }
    Ok(acc)
}

/// How to build the central elements `C_k` or `D_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Pfaffians for `C_k` in `o_N`, Hafnians for `D_k` in `sp_N`.
    Explicit,
    /// Trace of the fused matrix at the classical point: a column for `C_k`,
    /// a row for `D_k`.
    Fusion,
    /// Inverting the generating function of the other family.
    Inversion,
    /// Polynomial in `C_1, ..., C_n` with the prescribed Harish-Chandra image.
    Preimage,
}

/// `C_1..C_K` or `D_1..D_K`. `C_k = 0` for `k > n` is returned explicitly.
/// `max_cells` bounds the tensor dimension `N^{2k}` used by fusion.
pub fn central_elements(alg: &PbwAlgebra, kind: Kind, k_max: usize, route: Route, max_cells: u64) -> Result<Vec<Element>> {
    let ctx = alg.context();
    let n = ctx.n();
    let fam = ctx.family();
    if fam == Family::Gl {
        return Err(Error::Domain("central series are defined for o_N and sp_N".into()));
    }
    let len = if kind == Kind::C { k_max.min(n) } else { k_max };
    let mut out: Vec<Element> = match route {
        Route::Explicit => match (kind, fam) {
            (Kind::C, Family::So) => (1..=len).map(|k| uea::pfaffian_central(alg, k)).collect::<Result<_>>()?,
            (Kind::D, Family::Sp) => (1..=len).map(|k| uea::hafnian_central(alg, k)).collect::<Result<_>>()?,
            _ => return Err(Error::Domain(format!("no explicit formula for this series in {}", ctx.name()))),
        },
        Route::Fusion => {
            let shape = if kind == Kind::C { Shape::Column } else { Shape::Row };
            let mut v = Vec::new();
            for k in 1..=len {
                let cells = (ctx.big_n() as u64).saturating_pow(2 * k as u32);
                if cells > max_cells {
                    return Err(Error::SizeGuard { cells, max: max_cells });
                }
                v.push(tensor::fusion_capelli(alg, shape, 2 * k)?);
            }
            v
        }
        Route::Inversion => {
            let (other, explicit) = match fam {
                Family::So => (Kind::C, Kind::C),
                _ => (Kind::D, Kind::D),
            };
            if other == kind {
                return Err(Error::Domain("inversion needs the other series".into()));
            }
            let mut src = central_elements(alg, explicit, k_max, Route::Explicit, max_cells)?;
            if explicit == Kind::C {
                src.truncate(n);
            }
            let p = ladder_to_power(alg, &src, &ladder(ctx, explicit, src.len())?, k_max);
            let q = series_inverse(alg, &p);
            let roots = ladder(ctx, kind, len)?;
            let mut x = power_to_ladder(alg, &q[..=roots.len()], &roots);
            if kind == Kind::C {
                // the inverse series must terminate after n terms
                let full = power_to_ladder(alg, &q, &padded_roots(ctx, k_max)?);
                if let Some(k) = full.iter().skip(n).position(|e| !e.is_zero()) {
                    return Err(Error::mismatch("terminating C(u)", format!("C_{} nonzero", n + k + 1)));
                }
                x.truncate(len);
            }
            x
        }
        Route::Preimage => {
            let a = ctx.shift_sequence()?;
            let mut gens = Vec::new();
            let cs = central_elements(alg, Kind::C, n, Route::Fusion, max_cells)
                .or_else(|_| central_elements(alg, Kind::C, n, Route::Explicit, max_cells))?;
            for (k, c) in cs.into_iter().enumerate() {
                let img = symfun::e_factorial(k + 1, n, &a);
                gens.push((c, if k % 2 == 0 { img.negate() } else { img }));
            }
            (1..=len)
                .map(|k| {
                    let target = match kind {
                        Kind::C => {
                            let e = symfun::e_factorial(k, n, &a);
                            if k % 2 == 1 { e.negate() } else { e }
                        }
                        Kind::D => symfun::h_factorial(k, n, &a),
                    };
                    uea::hc_preimage(alg, &target, &gens)
                })
                .collect::<Result<_>>()?
        }
    };
    out.resize(k_max, Element::zero());
    Ok(out)
}

/// C-ladder roots extended past `n` so the inverse series can be read off
/// in ladder form to any order; the extension only serves to detect
/// nonvanishing coefficients beyond `n`.
fn padded_roots(ctx: &LieContext, k: usize) -> Result<Vec<Scalar>> {
    let n = ctx.n();
    let mut r = ladder(ctx, Kind::C, n)?;
    for j in n + 1..=k {
        r.push(scalar::int(-(j as i64)));
    }
    Ok(r)
}

/// `C(u) · Π_{j≤n} (u² - r_j)` as an element with polynomial coefficients in `u`.
pub fn c_numerator(alg: &PbwAlgebra, c: &[Element]) -> Result<Element<UniPoly>> {
    let n = alg.context().n();
    let roots = ladder(alg.context(), Kind::C, n)?;
    let coeffs = ladder_numerator(alg, &c[..n.min(c.len())], &roots);
    let mut out = Element::zero();
    for (e, x) in coeffs.iter().enumerate() {
        let mut mono = vec![Scalar::zero(); 2 * e + 1];
        mono[2 * e] = Scalar::one();
        out.add_assign(&x.lift::<UniPoly>().times_coeff(&UniPoly::new(mono)));
    }
    Ok(out)
}

/// Comparison of `C(u)` with the quantum determinant of the fused matrix.
#[derive(Clone, Debug)]
pub struct QuantumDetComparison {
    /// `ρ(v)` with `F_(1^N)(v) = ρ(v) A_N ⊗ C(v - s) Π_q (N/2 + 1/2 - q - (v - s) - η)`,
    /// `s = N/2 - 1/2`, as a reduced fraction.
    pub ratio: (UniPoly, UniPoly),
    /// Whether `ρ(v)` equals `(2v+1)/(2v-N+1)` for `sp_N` and `1` for `o_N`.
    pub matches_stated: bool,
}

/// Express the quantum determinant of `F(u)` through `C(u)`: check that
/// `A_N ⊗ C(u) Π_q (N/2 + 1/2 - q - u - η)` is proportional to
/// `F_(1^N)(u + N/2 - 1/2)` with a scalar rational factor, and return it.
pub fn compare_quantum_det(alg: &PbwAlgebra, c: &[Element]) -> Result<QuantumDetComparison> {
    let ctx = alg.context();
    let big_n = ctx.big_n();
    let eta = ctx.eta()?;
    let s = scalar::frac(big_n as i64 - 1, 2);
    let (y, den) = tensor::sklyanin_numerator(alg)?;
    let n = ctx.n();
    let lc = ladder(ctx, Kind::C, n)?
        .iter()
        .fold(UniPoly::one(), |acc, r| acc.times(&UniPoly::new(vec![-r.clone(), Scalar::zero(), Scalar::one()])));
    // Π_q (N/2 + 1/2 - q - u - η)
    let half = scalar::frac(big_n as i64 + 1, 2);
    let pq = (1..=big_n as i64).fold(UniPoly::one(), |acc, q| {
        acc.times(&UniPoly::linear(-Scalar::one(), &half - scalar::int(q) - &eta))
    });
    let p = y.shift_u(&s).times_coeff(&lc);
    let q = c_numerator(alg, c)?.times_coeff(&den.shift(&s).times(&pq));
    let pc = p.constant_term();
    let qc = q.constant_term();
    if qc.is_zero() {
        return Err(Error::Consistency("C(u) numerator has no scalar part".into()));
    }
    if p.times_coeff(&qc) != q.times_coeff(&pc) {
        let w = alg.first_difference(&p.times_coeff(&qc), &q.times_coeff(&pc)).unwrap_or_default();
        return Err(Error::mismatch("quantum determinant proportional to C(u)", w));
    }
    // ρ(u + s) = pc / qc; shift back to the argument of F
    let g = pc.gcd(&qc);
    let mut num = pc.div_exact(&g).expect("gcd").shift(&-s.clone());
    let mut dn = qc.div_exact(&g).expect("gcd").shift(&-s);
    let lead = Scalar::one() / dn.lead().cloned().unwrap_or_else(Scalar::one);
    num = num.scaled(&lead);
    dn = dn.scaled(&lead);
    let (en, ed) = tensor::sklyanin_eps(ctx)?;
    let matches_stated = num.times(&ed) == dn.times(&en);
    Ok(QuantumDetComparison { ratio: (num, dn), matches_stated })
}
