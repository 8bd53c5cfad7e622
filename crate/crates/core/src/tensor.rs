//! Matrices on tensor powers of `C^N` with entries in an enveloping algebra,
//! R-matrix relations, fusion of the matrix `F(u)`, and quantum determinants.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::combinat;
use crate::error::{Error, Result};
use crate::lie::{Family, Form, IndexSet, LieContext};
use crate::pbw::{Element, PbwAlgebra, Show};
use crate::poly::{SymPoly, UniPoly};
use crate::ring::{Coeff, Ring};
use crate::scalar::{self, Scalar};

/// `(C^N)^{⊗m}` with basis `e_{i_1} ⊗ ... ⊗ e_{i_m}` in lexicographic order of
/// label positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorSpace {
    index: IndexSet,
    m: usize,
    dim: usize,
}

impl TensorSpace {
    pub fn new(index: IndexSet, m: usize) -> Result<Self> {
        let dim = (index.len() as u64)
            .checked_pow(m as u32)
            .filter(|d| *d <= u32::MAX as u64)
            .ok_or_else(|| Error::SizeGuard { cells: u64::MAX, max: u32::MAX as u64 })?;
        Ok(TensorSpace { index, m, dim: dim as usize })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn factors(&self) -> usize {
        self.m
    }

    pub fn index(&self) -> &IndexSet {
        &self.index
    }

    /// Label positions of a basis vector, factor 1 first.
    pub fn decode(&self, mut idx: usize) -> Vec<usize> {
        let n = self.index.len();
        let mut out = vec![0; self.m];
        for p in (0..self.m).rev() {
            out[p] = idx % n;
            idx /= n;
        }
        out
    }

    pub fn encode(&self, pos: &[usize]) -> usize {
        let n = self.index.len();
        pos.iter().fold(0, |acc, p| acc * n + p)
    }

    fn label(&self, pos: usize) -> i32 {
        self.index.labels()[pos]
    }

    fn pos(&self, label: i32) -> Option<usize> {
        self.index.pos(label)
    }
}

/// Sparse square matrix, stored by rows, with entries in `U(g) ⊗ C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorMatrix<C: Coeff = Scalar> {
    dim: usize,
    rows: Vec<BTreeMap<usize, Element<C>>>,
}

impl<C: Coeff> TensorMatrix<C> {
    pub fn zero(dim: usize) -> Self {
        TensorMatrix { dim, rows: vec![BTreeMap::new(); dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar_identity(dim, C::constant(Scalar::one()))
    }

    /// `c · 1`.
    pub fn scalar_identity(dim: usize, c: C) -> Self {
        let mut out = Self::zero(dim);
        if !c.vanishes() {
            for i in 0..dim {
                out.rows[i].insert(i, Element::constant(c.clone()));
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&Element<C>> {
        self.rows[r].get(&c)
    }

    pub fn add_entry(&mut self, r: usize, c: usize, x: Element<C>) {
        if x.is_zero() {
            return;
        }
        let row = &mut self.rows[r];
        match row.get_mut(&c) {
            Some(v) => {
                v.add_assign(&x);
                if v.is_zero() {
                    row.remove(&c);
                }
            }
            None => {
                row.insert(c, x);
            }
        }
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (r, row) in other.rows.iter().enumerate() {
            for (c, x) in row {
                out.add_entry(r, *c, x.clone());
            }
        }
        out
    }

    pub fn negate(&self) -> Self {
        self.map(|x| x.negate())
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negate())
    }

    pub fn scaled(&self, s: &Scalar) -> Self {
        self.map(|x| x.scaled(s))
    }

    /// Multiply every entry by a central coefficient.
    pub fn times_coeff(&self, c: &C) -> Self {
        self.map(|x| x.times_coeff(c))
    }

    fn map(&self, f: impl Fn(&Element<C>) -> Element<C>) -> Self {
        let mut out = Self::zero(self.dim);
        for (r, row) in self.rows.iter().enumerate() {
            for (c, x) in row {
                out.add_entry(r, *c, f(x));
            }
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> TensorMatrix<D> {
        let mut out = TensorMatrix::zero(self.dim);
        for (r, row) in self.rows.iter().enumerate() {
            for (c, x) in row {
                out.add_entry(r, *c, x.map_coeffs(&f));
            }
        }
        out
    }

    /// Matrix product; algebra entries multiply in the order left factor first.
    pub fn mul(&self, alg: &PbwAlgebra, other: &Self) -> Self {
        let mut out = Self::zero(self.dim);
        for (r, row) in self.rows.iter().enumerate() {
            for (j, a) in row {
                for (c, b) in &other.rows[*j] {
                    out.add_entry(r, *c, alg.mul(a, b));
                }
            }
        }
        out
    }

    pub fn product(alg: &PbwAlgebra, dim: usize, factors: &[Self]) -> Self {
        factors.iter().fold(Self::identity(dim), |acc, f| acc.mul(alg, f))
    }

    /// Full trace over every tensor factor.
    pub fn trace(&self) -> Element<C> {
        let mut out = Element::zero();
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(x) = row.get(&r) {
                out.add_assign(x);
            }
        }
        out
    }

    pub fn apply(&self, alg: &PbwAlgebra, v: &BTreeMap<usize, Element<C>>) -> BTreeMap<usize, Element<C>> {
        let mut out: BTreeMap<usize, Element<C>> = BTreeMap::new();
        for (r, row) in self.rows.iter().enumerate() {
            let mut acc = Element::zero();
            for (j, a) in row {
                if let Some(b) = v.get(j) {
                    acc.add_assign(&alg.mul(a, b));
                }
            }
            if !acc.is_zero() {
                out.insert(r, acc);
            }
        }
        out
    }
}

impl<C: Coeff + Show> TensorMatrix<C> {
    /// First entry where the matrices differ, rendered.
    pub fn first_difference(&self, alg: &PbwAlgebra, other: &Self) -> Option<alloc::string::String> {
        let d = self.minus(other);
        for (r, row) in d.rows.iter().enumerate() {
            if let Some((c, _)) = row.iter().next() {
                let zero = Element::zero();
                let a = self.get(r, *c).unwrap_or(&zero);
                let b = other.get(r, *c).unwrap_or(&zero);
                let w = alg.first_difference(a, b).unwrap_or_default();
                return Some(format!("entry ({r},{c}) {w}"));
            }
        }
        None
    }

    pub fn expect_eq(&self, alg: &PbwAlgebra, check: &str, other: &Self) -> Result<()> {
        match self.first_difference(alg, other) {
            None => Ok(()),
            Some(w) => Err(Error::mismatch(check, w)),
        }
    }
}

/// Scalar matrices used to build the operators below.
impl TensorSpace {
    fn scalar_matrix<C: Coeff>(&self, f: impl Fn(&[usize]) -> Vec<(Vec<usize>, Scalar)>) -> TensorMatrix<C> {
        let mut out = TensorMatrix::zero(self.dim);
        for c in 0..self.dim {
            let pos = self.decode(c);
            for (rpos, s) in f(&pos) {
                out.add_entry(self.encode(&rpos), c, Element::scalar(s));
            }
        }
        out
    }

    /// `P_pq`, exchanging factors `p` and `q` (1-based).
    pub fn perm<C: Coeff>(&self, p: usize, q: usize) -> TensorMatrix<C> {
        self.scalar_matrix(|pos| {
            let mut r = pos.to_vec();
            r.swap(p - 1, q - 1);
            vec![(r, Scalar::one())]
        })
    }

    /// `Q_pq = Σ_ij ε_ij E_ij^(p) E_{-i,-j}^(q)`.
    pub fn q_op<C: Coeff>(&self, form: Form, p: usize, q: usize) -> TensorMatrix<C> {
        self.scalar_matrix(|pos| {
            let j = self.label(pos[p - 1]);
            if self.label(pos[q - 1]) != -j {
                return Vec::new();
            }
            self.index
                .labels()
                .iter()
                .map(|&i| {
                    let mut r = pos.to_vec();
                    r[p - 1] = self.pos(i).unwrap();
                    r[q - 1] = self.pos(-i).unwrap();
                    (r, scalar::int(form.eps(i, j) as i64))
                })
                .collect()
        })
    }

    /// Sum over permutations `σ` of the first `k` factors of `s(σ) P_σ / k!`:
    /// the antisymmetrizer `A_k` or the symmetrizer `B_k`.
    pub fn projector<C: Coeff>(&self, k: usize, antisym: bool) -> TensorMatrix<C> {
        let perms = combinat::permutations(k);
        let w = Scalar::one() / scalar::factorial(k);
        self.scalar_matrix(|pos| {
            perms
                .iter()
                .map(|(p, s)| {
                    let mut r = pos.to_vec();
                    for t in 0..k {
                        r[t] = pos[p[t]];
                    }
                    let c = if antisym && *s < 0 { -w.clone() } else { w.clone() };
                    (r, c)
                })
                .collect()
        })
    }

    /// `Σ_ij E_ij^(q) ⊗ X_ij` where `x(i, j)` supplies `X_ij`.
    pub fn generator_matrix<C: Coeff>(
        &self,
        q: usize,
        mut x: impl FnMut(i32, i32) -> Result<Element<C>>,
    ) -> Result<TensorMatrix<C>> {
        let labels = self.index.labels().to_vec();
        let mut table = BTreeMap::new();
        for &i in &labels {
            for &j in &labels {
                table.insert((i, j), x(i, j)?);
            }
        }
        let mut out = TensorMatrix::zero(self.dim);
        for c in 0..self.dim {
            let pos = self.decode(c);
            let j = labels[pos[q - 1]];
            for (ip, &i) in labels.iter().enumerate() {
                let e = &table[&(i, j)];
                if e.is_zero() {
                    continue;
                }
                let mut r = pos.clone();
                r[q - 1] = ip;
                out.add_entry(self.encode(&r), c, e.clone());
            }
        }
        Ok(out)
    }
}

/// `F^(q) = Σ_ij E_ij^(q) ⊗ F_ji`, without the spectral shift.
pub fn f_matrix<C: Coeff>(space: &TensorSpace, alg: &PbwAlgebra, q: usize) -> Result<TensorMatrix<C>> {
    space.generator_matrix(q, |i, j| alg.generator(j, i))
}

/// `Σ_ij ε_ij E_ij^(q) ⊗ E_{-i,-j}` for `gl_N` with symmetric labels.
pub fn e_tilde_matrix<C: Coeff>(
    space: &TensorSpace,
    alg: &PbwAlgebra,
    form: Form,
    q: usize,
) -> Result<TensorMatrix<C>> {
    space.generator_matrix(q, |i, j| Ok(alg.generator::<C>(-i, -j)?.scaled(&scalar::int(form.eps(i, j) as i64))))
}

/// Young-diagram shapes used for fusion: a column `(1^m)` or a row `(m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Column,
    Row,
}

/// `(alpha u + beta)` as a polynomial in `u`.
fn lin(alpha: i64, beta: Scalar) -> UniPoly {
    UniPoly::linear(scalar::int(alpha), beta)
}

/// A rational function of `u` with values in matrices: `num / den`.
#[derive(Clone, Debug)]
pub struct FusedMatrix {
    pub num: TensorMatrix<UniPoly>,
    pub den: UniPoly,
}

/// Numerator factors of the fused matrix, so that
/// `F_μ(u) = P_μ · factors[0] · factors[1] ... / den`.
pub struct FusionFactors {
    pub space: TensorSpace,
    pub factors: Vec<TensorMatrix<UniPoly>>,
    pub den: UniPoly,
}

/// Fusion of `F(u) = Σ E_ij ⊗ F_ji - u - η` over `m` tensor factors.
///
/// Column: `Π_q (1 + Σ_{p<q} Q_pq / (2u-q+1)) F_q(u-q+1)`. Row: the same with
/// `2u+q-1` and `F_q(u+q-1)`. With `pairwise` the `Q`-factor is replaced by
/// the ordered product `Π_{p<q} (1 + Q_pq / (2u ∓ (p+q-2)))`.
pub fn fusion_factors(alg: &PbwAlgebra, shape: Shape, m: usize, pairwise: bool) -> Result<FusionFactors> {
    let ctx = alg.context();
    let form = ctx.form().ok_or_else(|| Error::Domain("fusion needs o_N or sp_N".into()))?;
    let eta = ctx.eta()?;
    let space = TensorSpace::new(ctx.index().clone(), m)?;
    let dir: i64 = if shape == Shape::Column { -1 } else { 1 };
    let mut factors = Vec::new();
    let mut den = UniPoly::one();
    for q in 1..=m {
        if q > 1 {
            if pairwise {
                for p in 1..q {
                    let shift = scalar::int(dir * (p + q - 2) as i64);
                    let d = lin(2, shift);
                    let g = TensorMatrix::scalar_identity(space.dim(), d.clone()).plus(&space.q_op(form, p, q));
                    factors.push(g);
                    den = den.times(&d);
                }
            } else {
                let d = lin(2, scalar::int(dir * (q - 1) as i64));
                let mut g = TensorMatrix::scalar_identity(space.dim(), d.clone());
                for p in 1..q {
                    g = g.plus(&space.q_op(form, p, q));
                }
                factors.push(g);
                den = den.times(&d);
            }
        }
        // F_q(u + dir (q-1)) = F^(q) - (u + dir (q-1) + η)
        let shift = scalar::int(dir * (q - 1) as i64) + &eta;
        let f = f_matrix::<UniPoly>(&space, alg, q)?.minus(&TensorMatrix::scalar_identity(space.dim(), lin(1, shift)));
        factors.push(f);
    }
    Ok(FusionFactors { space, factors, den })
}

/// The full fused matrix `F_μ(u)` including the projector.
pub fn fused_matrix(alg: &PbwAlgebra, shape: Shape, m: usize, pairwise: bool) -> Result<FusedMatrix> {
    let ff = fusion_factors(alg, shape, m, pairwise)?;
    let proj = ff.space.projector::<UniPoly>(m, shape == Shape::Column);
    let mut num = proj;
    for f in &ff.factors {
        num = num.mul(alg, f);
    }
    Ok(FusedMatrix { num, den: ff.den })
}

/// `tr(P_μ X)` computed on a basis of the image of the projector, where `X`
/// is the product of `factors`.
pub fn projected_trace<C: Coeff>(
    alg: &PbwAlgebra,
    space: &TensorSpace,
    k: usize,
    antisym: bool,
    factors: &[TensorMatrix<C>],
) -> Element<C> {
    let n = space.index().len();
    let reps = if antisym { combinat::combinations(n, k) } else { combinat::multisets(n, k) };
    let perms = combinat::permutations(k);
    let mut out = Element::zero();
    let rest = space.factors() - k;
    for rep in reps {
        for tail in combinat::tuples(n, rest) {
            // orbit of rep under permutations, with signs
            let mut orbit: BTreeMap<usize, i32> = BTreeMap::new();
            for (p, s) in &perms {
                let mut pos: Vec<usize> = p.iter().map(|t| rep[*t]).collect();
                pos.extend_from_slice(&tail);
                orbit.insert(space.encode(&pos), if antisym { *s } else { 1 });
            }
            let size = orbit.len();
            let mut v: BTreeMap<usize, Element<C>> = orbit
                .iter()
                .map(|(i, s)| (*i, Element::scalar(scalar::int(*s as i64))))
                .collect();
            for f in factors.iter().rev() {
                v = f.apply(alg, &v);
            }
            let w = if antisym { Scalar::one() / scalar::factorial(k) } else { Scalar::one() / scalar::int(size as i64) };
            for (i, s) in &orbit {
                if let Some(x) = v.get(i) {
                    out.add_assign(&x.scaled(&(&w * scalar::int(*s as i64))));
                }
            }
        }
    }
    out
}

/// Normalizing factor `φ_μ(u)` as `(num, den)`.
pub fn fusion_normalizer(family: Family, shape: Shape, m: usize) -> Result<(UniPoly, UniPoly)> {
    let half_m = scalar::frac(m as i64, 2);
    let half = scalar::frac(1, 2);
    Ok(match (family, shape) {
        (Family::So, Shape::Column) => (lin(1, -&half_m + &half), lin(1, half)),
        (Family::Sp, Shape::Row) => (lin(1, half_m - &half), lin(1, -half)),
        (Family::So, Shape::Row) | (Family::Sp, Shape::Column) => (UniPoly::one(), UniPoly::one()),
        (Family::Gl, _) => return Err(Error::Domain("fusion needs o_N or sp_N".into())),
    })
}

/// Classical point `u_μ`: `m/2 - η` for a column, `-m/2 - η` for a row.
pub fn classical_point(ctx: &LieContext, shape: Shape, m: usize) -> Result<Scalar> {
    let half_m = scalar::frac(m as i64, 2);
    let eta = ctx.eta()?;
    Ok(match shape {
        Shape::Column => half_m - eta,
        Shape::Row => -half_m - eta,
    })
}

/// `φ_μ(u) tr F_μ(u)` as `num / den` after cancelling common factors.
pub fn fusion_trace(alg: &PbwAlgebra, shape: Shape, m: usize) -> Result<(Element<UniPoly>, UniPoly)> {
    let ff = fusion_factors(alg, shape, m, false)?;
    let t = projected_trace(alg, &ff.space, m, shape == Shape::Column, &ff.factors);
    let (pn, pd) = fusion_normalizer(alg.context().family(), shape, m)?;
    Ok(reduce(t.times_coeff(&pn), ff.den.times(&pd)))
}

/// Divide numerator and denominator by their common polynomial factor and
/// make the denominator monic.
pub fn reduce(num: Element<UniPoly>, den: UniPoly) -> (Element<UniPoly>, UniPoly) {
    let Some(content) = num.content() else {
        return (num, UniPoly::one());
    };
    let g = content.gcd(&den);
    let mut num = num.div_exact_poly(&g).expect("gcd divides");
    let mut den = den.div_exact(&g).expect("gcd divides");
    let lead = den.lead().cloned().unwrap_or_else(Scalar::one);
    let inv = Scalar::one() / lead;
    num = num.scaled(&inv);
    den = den.scaled(&inv);
    (num, den)
}

/// Evaluate a reduced `num / den` at `u`; a pole that survives cancellation is an error.
pub fn eval_reduced(num: &Element<UniPoly>, den: &UniPoly, u: &Scalar) -> Result<Element<Scalar>> {
    let d = den.eval(u);
    if d.is_zero() {
        return Err(Error::Pole(format!("residual pole at u = {u}")));
    }
    Ok(num.eval_at(u).scaled(&(Scalar::one() / d)))
}

/// `φ_μ(u) tr F_μ(u)` at the classical point: the central element attached to
/// a column (`C_k` for `m = 2k`) or a row (`D_k`).
pub fn fusion_capelli(alg: &PbwAlgebra, shape: Shape, m: usize) -> Result<Element<Scalar>> {
    let (num, den) = fusion_trace(alg, shape, m)?;
    eval_reduced(&num, &den, &classical_point(alg.context(), shape, m)?)
}

// --- two-parameter relations -------------------------------------------------

fn var(i: usize) -> SymPoly {
    SymPoly::var(i)
}

fn c(s: Scalar) -> SymPoly {
    SymPoly::constant(s)
}

/// `x · 1` as a matrix with polynomial coefficients.
fn sid(space: &TensorSpace, x: SymPoly) -> TensorMatrix<SymPoly> {
    TensorMatrix::scalar_identity(space.dim(), x)
}

/// Reflection-type relation for `F(u)`:
/// `R(u,v) F_1(u) R̃(u,v) F_2(v) = F_2(v) R̃(u,v) F_1(u) R(u,v)` with
/// `R = 1 - P/(u-v)` and `R̃ = 1 + Q/(u+v)`, checked after clearing
/// denominators.
pub fn check_reflection(alg: &PbwAlgebra) -> Result<()> {
    let ctx = alg.context();
    let form = ctx.form().ok_or_else(|| Error::Domain("needs o_N or sp_N".into()))?;
    let eta = ctx.eta()?;
    let sp = TensorSpace::new(ctx.index().clone(), 2)?;
    let (u, v) = (var(0), var(1));
    let r = sid(&sp, u.minus(&v)).minus(&sp.perm(1, 2));
    let rt = sid(&sp, u.plus(&v)).plus(&sp.q_op(form, 1, 2));
    let f1 = f_matrix::<SymPoly>(&sp, alg, 1)?.minus(&sid(&sp, u.plus(&c(eta.clone()))));
    let f2 = f_matrix::<SymPoly>(&sp, alg, 2)?.minus(&sid(&sp, v.plus(&c(eta))));
    let lhs = TensorMatrix::product(alg, sp.dim(), &[r.clone(), f1.clone(), rt.clone(), f2.clone()]);
    let rhs = TensorMatrix::product(alg, sp.dim(), &[f2, rt, f1, r]);
    lhs.expect_eq(alg, "reflection relation", &rhs)
}

fn scalar_alg() -> PbwAlgebra {
    PbwAlgebra::new(&LieContext::gl(1).expect("gl_1")).expect("gl_1 algebra")
}

/// `R_12(u,v) R̃_13(u,w) R̃_23(v,w) = R̃_23(v,w) R̃_13(u,w) R_12(u,v)`.
pub fn check_mixed_ybe(index: &IndexSet, form: Form) -> Result<()> {
    let alg = scalar_alg();
    let sp = TensorSpace::new(index.clone(), 3)?;
    let (u, v, w) = (var(0), var(1), var(2));
    let r12 = sid(&sp, u.minus(&v)).minus(&sp.perm(1, 2));
    let r13 = sid(&sp, u.plus(&w)).plus(&sp.q_op(form, 1, 3));
    let r23 = sid(&sp, v.plus(&w)).plus(&sp.q_op(form, 2, 3));
    let lhs = TensorMatrix::product(&alg, sp.dim(), &[r12.clone(), r13.clone(), r23.clone()]);
    let rhs = TensorMatrix::product(&alg, sp.dim(), &[r23, r13, r12]);
    lhs.expect_eq(&alg, "mixed Yang-Baxter", &rhs)
}

/// On `v = u ± 1`: `R_12(u,v) R̃_13(u,w) R̃_23(v,w) = (1 ± P_12)(1 + (Q_13 + Q_23)/(u+w))`,
/// so the pole at `v + w = 0` cancels.
pub fn check_fusion_regularity(index: &IndexSet, form: Form, plus: bool) -> Result<()> {
    let alg = scalar_alg();
    let sp = TensorSpace::new(index.clone(), 3)?;
    let (u, w) = (var(0), var(1));
    let s = if plus { Scalar::one() } else { -Scalar::one() };
    let v = u.plus(&c(s.clone()));
    let r12 = TensorMatrix::<SymPoly>::identity(sp.dim()).plus(&sp.perm(1, 2).scaled(&s));
    let r13 = sid(&sp, u.plus(&w)).plus(&sp.q_op(form, 1, 3));
    let r23 = sid(&sp, v.plus(&w)).plus(&sp.q_op(form, 2, 3));
    let lhs = TensorMatrix::product(&alg, sp.dim(), &[r12.clone(), r13, r23]);
    let q = sp.q_op(form, 1, 3).plus(&sp.q_op(form, 2, 3));
    let rhs = r12.mul(&alg, &sid(&sp, u.plus(&w)).plus(&q)).times_coeff(&v.plus(&w));
    lhs.expect_eq(&alg, "fusion regularity", &rhs)
}

/// `A_{m-1} Π_{p<m} R̃_pm(u-p+1, u-m+1) = A_{m-1} (1 + Σ_{p<m} Q_pm / (2u-m+1))`,
/// and the row version with `B_{m-1}`, `R̃_pm(u+p-1, u+m-1)` and `2u+m-1`.
pub fn check_q_fusion(index: &IndexSet, form: Form, m: usize, shape: Shape) -> Result<()> {
    if m < 2 {
        return Err(Error::Domain("needs m >= 2".into()));
    }
    let alg = scalar_alg();
    let sp = TensorSpace::new(index.clone(), m)?;
    let dir: i64 = if shape == Shape::Column { -1 } else { 1 };
    let proj = sp.projector::<UniPoly>(m - 1, shape == Shape::Column);
    let mut lhs = proj.clone();
    let mut lden = UniPoly::one();
    let mut qsum = TensorMatrix::zero(sp.dim());
    for p in 1..m {
        let d = lin(2, scalar::int(dir * (p + m - 2) as i64));
        lhs = lhs.mul(&alg, &TensorMatrix::scalar_identity(sp.dim(), d.clone()).plus(&sp.q_op(form, p, m)));
        lden = lden.times(&d);
        qsum = qsum.plus(&sp.q_op(form, p, m));
    }
    let rd = lin(2, scalar::int(dir * (m - 1) as i64));
    let rhs = proj.mul(&alg, &TensorMatrix::scalar_identity(sp.dim(), rd.clone()).plus(&qsum));
    lhs.times_coeff(&rd).expect_eq(&alg, "projected Q fusion", &rhs.times_coeff(&lden))
}

/// `A_m = (1/m!) Π_p R_pm(1-p,1-m) ... R_{p,p+1}(1-p,-p)` and `B_m` with
/// `R_pq(p-1, q-1)`. The outer product runs over `p = m-1, ..., 1` from
/// left to right; with `p` increasing the identity fails for `m = 3`.
pub fn check_projector_decomposition(index: &IndexSet, m: usize, shape: Shape) -> Result<()> {
    let alg = scalar_alg();
    let sp = TensorSpace::new(index.clone(), m)?;
    let mut prod = TensorMatrix::<Scalar>::identity(sp.dim());
    for p in (1..m).rev() {
        for q in (p + 1..=m).rev() {
            // R_pq(u,v) = 1 - P/(u-v); u - v = ±(q - p)
            let diff = match shape {
                Shape::Column => scalar::int((q - p) as i64),
                Shape::Row => scalar::int(p as i64 - q as i64),
            };
            let r = TensorMatrix::identity(sp.dim()).minus(&sp.perm(p, q).scaled(&(Scalar::one() / diff)));
            prod = prod.mul(&alg, &r);
        }
    }
    prod = prod.scaled(&(Scalar::one() / scalar::factorial(m)));
    prod.expect_eq(&alg, "projector decomposition", &sp.projector(m, shape == Shape::Column))
}

/// `gl_N` relations with `E(u) = -u + Σ E_ij ⊗ E_ji` and
/// `Ẽ(u) = -u + Σ ε_ij E_ij ⊗ E_{-i,-j}`:
/// `R E_1(u) E_2(v) = E_2(v) E_1(u) R`,
/// `R Ẽ_1(-u) Ẽ_2(-v) = Ẽ_2(-v) Ẽ_1(-u) R`,
/// `Ẽ_1(-u) R̃ E_2(v) = E_2(v) R̃ Ẽ_1(-u)`.
pub fn check_gl_relations(alg: &PbwAlgebra, form: Form) -> Result<()> {
    let ctx = alg.context();
    if ctx.family() != Family::Gl || !ctx.index().is_symmetric() {
        return Err(Error::Domain("needs gl_N with symmetric labels".into()));
    }
    let sp = TensorSpace::new(ctx.index().clone(), 2)?;
    let (u, v) = (var(0), var(1));
    let r = sid(&sp, u.minus(&v)).minus(&sp.perm(1, 2));
    let rt = sid(&sp, u.plus(&v)).plus(&sp.q_op(form, 1, 2));
    let e = |q: usize, x: &SymPoly| -> Result<TensorMatrix<SymPoly>> {
        Ok(f_matrix::<SymPoly>(&sp, alg, q)?.minus(&sid(&sp, x.clone())))
    };
    let et = |q: usize, x: &SymPoly| -> Result<TensorMatrix<SymPoly>> {
        Ok(e_tilde_matrix::<SymPoly>(&sp, alg, form, q)?.minus(&sid(&sp, x.clone())))
    };
    let (nu, nv) = (u.negate(), v.negate());
    let e1u = e(1, &u)?;
    let e2v = e(2, &v)?;
    let t1 = et(1, &nu)?;
    let t2 = et(2, &nv)?;
    let d = sp.dim();
    TensorMatrix::product(alg, d, &[r.clone(), e1u.clone(), e2v.clone()])
        .expect_eq(alg, "RTT for E", &TensorMatrix::product(alg, d, &[e2v.clone(), e1u, r.clone()]))?;
    TensorMatrix::product(alg, d, &[r.clone(), t1.clone(), t2.clone()])
        .expect_eq(alg, "RTT for E-tilde", &TensorMatrix::product(alg, d, &[t2, t1.clone(), r]))?;
    TensorMatrix::product(alg, d, &[t1.clone(), rt.clone(), e2v.clone()])
        .expect_eq(alg, "mixed E relation", &TensorMatrix::product(alg, d, &[e2v, rt, t1]))
}

/// Images in `End(C^N)^{⊗(m+l)}` of the antisymmetrized products
/// `A_m E_1(0) E_2(-1) ... E_m(1-m)` (column) and
/// `B_m E_1(0) E_2(1) ... E_m(m-1)` (row) under `U(gl_N) -> End(C^N)^{⊗l}`,
/// where `E_p(u) -> -u + Σ_r P_{p,m+r}`. With `tilde`, `Ẽ_p` replaces
/// `E_p` with the reversed shifts, `Ẽ_p(u) -> -u + Σ_r Q_{p,m+r}`.
pub fn vanishing_image(
    index: &IndexSet,
    form: Form,
    m: usize,
    l: usize,
    shape: Shape,
    tilde: bool,
) -> Result<TensorMatrix<Scalar>> {
    let alg = scalar_alg();
    let sp = TensorSpace::new(index.clone(), m + l)?;
    let mut out = sp.projector::<Scalar>(m, shape == Shape::Column);
    let dir: i64 = if shape == Shape::Column { -1 } else { 1 };
    for p in 1..=m {
        let shift = if tilde { dir * (m - p) as i64 } else { dir * (p - 1) as i64 };
        let mut f = TensorMatrix::scalar_identity(sp.dim(), scalar::int(-shift));
        for r in 1..=l {
            f = f.plus(&if tilde { sp.q_op(form, p, m + r) } else { sp.perm(p, m + r) });
        }
        out = out.mul(&alg, &f);
    }
    Ok(out)
}

/// `P_m Σ_{r distinct} P_{1,m+r_1} ... P_{m,m+r_m}` with `P_m` the
/// (anti)symmetrizer on the first `m` factors.
pub fn distinct_transposition_sum(index: &IndexSet, m: usize, l: usize, shape: Shape) -> Result<TensorMatrix<Scalar>> {
    let alg = scalar_alg();
    let sp = TensorSpace::new(index.clone(), m + l)?;
    let mut sum = TensorMatrix::zero(sp.dim());
    for rs in combinat::tuples(l, m) {
        if combinat::sort_sign(&rs) == 0 {
            continue;
        }
        let mut prod = TensorMatrix::identity(sp.dim());
        for (p, r) in rs.iter().enumerate() {
            prod = prod.mul(&alg, &sp.perm(p + 1, m + r + 1));
        }
        sum = sum.plus(&prod);
    }
    Ok(sp.projector::<Scalar>(m, shape == Shape::Column).mul(&alg, &sum))
}

/// `1 ⊗ P` with `P` the (anti)symmetrizer on the last `l` of `m + l` factors.
pub fn tail_projector(index: &IndexSet, m: usize, l: usize, antisym: bool) -> Result<TensorMatrix<Scalar>> {
    let sp = TensorSpace::new(index.clone(), m + l)?;
    let perms = combinat::permutations(l);
    let w = Scalar::one() / scalar::factorial(l);
    Ok(sp.scalar_matrix(|pos| {
        perms
            .iter()
            .map(|(p, s)| {
                let mut r = pos.to_vec();
                for t in 0..l {
                    r[m + t] = pos[m + p[t]];
                }
                (r, if antisym && *s < 0 { -w.clone() } else { w.clone() })
            })
            .collect()
    }))
}

/// Quantum determinant `H(u)` of `E(u)` from
/// `A_N E_1(u) E_2(u-1) ... E_N(u-N+1) = A_N ⊗ H(u)`, checking the right-hand
/// side has that form. With `tilde = Some(form)` the product
/// `A_N Ẽ_1(u-N+1) ... Ẽ_N(u)` is used instead.
pub fn quantum_det_gl(alg: &PbwAlgebra, tilde: Option<Form>) -> Result<Element<UniPoly>> {
    let ctx = alg.context();
    if ctx.family() != Family::Gl {
        return Err(Error::Domain("needs gl_N".into()));
    }
    let big_n = ctx.big_n();
    let sp = TensorSpace::new(ctx.index().clone(), big_n)?;
    let mut x = sp.projector::<UniPoly>(big_n, true);
    for q in 1..=big_n {
        let f = match tilde {
            None => f_matrix::<UniPoly>(&sp, alg, q)?.minus(&TensorMatrix::scalar_identity(
                sp.dim(),
                lin(1, -scalar::int(q as i64 - 1)),
            )),
            Some(form) => e_tilde_matrix::<UniPoly>(&sp, alg, form, q)?.minus(&TensorMatrix::scalar_identity(
                sp.dim(),
                lin(1, -scalar::int((big_n - q) as i64)),
            )),
        };
        x = x.mul(alg, &f);
    }
    split_projector(alg, &sp, &x)
}

/// Write `x = A_N ⊗ y` and return `y`, or report where `x` fails to have that form.
fn split_projector<C: Coeff + Show>(alg: &PbwAlgebra, sp: &TensorSpace, x: &TensorMatrix<C>) -> Result<Element<C>> {
    let a = sp.projector::<C>(sp.factors(), true);
    let r0 = sp.encode(&(0..sp.factors()).collect::<Vec<_>>());
    let a00 = a.get(r0, r0).expect("A_N has a nonzero diagonal").constant_term();
    let y = x
        .get(r0, r0)
        .cloned()
        .unwrap_or_else(Element::zero)
        .map_coeffs(|c| c.div_exact(&a00).expect("scalar division"));
    let mut expect = TensorMatrix::zero(sp.dim());
    for r in 0..sp.dim() {
        for (col, e) in &a.rows[r] {
            expect.add_entry(r, *col, alg.mul(e, &y));
        }
    }
    x.expect_eq(alg, "projector form", &expect)?;
    Ok(y)
}

/// Sklyanin determinant data: `F_(1^N)(u) = ε(u) A_N ⊗ C̄(u)`. Returns
/// `(Y(u), den)` with `F_(1^N)(u) = A_N ⊗ Y(u) / den`, so that
/// `C̄(u) = Y(u) / (den · ε(u))`.
pub fn sklyanin_numerator(alg: &PbwAlgebra) -> Result<(Element<UniPoly>, UniPoly)> {
    let big_n = alg.context().big_n();
    let fm = fused_matrix(alg, Shape::Column, big_n, false)?;
    let sp = TensorSpace::new(alg.context().index().clone(), big_n)?;
    let y = split_projector(alg, &sp, &fm.num)?;
    Ok((y, fm.den))
}

/// `ε(u) = (2u+1)/(2u-N+1)` for `sp_N`, `1` for `o_N`.
pub fn sklyanin_eps(ctx: &LieContext) -> Result<(UniPoly, UniPoly)> {
    Ok(match ctx.family() {
        Family::Sp => (lin(2, Scalar::one()), lin(2, scalar::int(1 - ctx.big_n() as i64))),
        Family::So => (UniPoly::one(), UniPoly::one()),
        Family::Gl => return Err(Error::Domain("needs o_N or sp_N".into())),
    })
}
