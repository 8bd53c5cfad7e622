//! Differential operators on polynomials in the matrix of variables `x_{ai}`.
//!
//! Rows `a = 1..m`, columns run over an [`IndexSet`]. Variable `x_{ai}` has flat
//! index `(a-1)*N + pos(i)`, i.e. variables are ordered lexicographically by
//! `(a, i)`. Operators are kept in normal order, every `x` to the left of
//! every `∂`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::combinat;
use crate::error::{Error, Result};
use crate::lie::{Family, IndexSet};
use crate::matrix;
use crate::pbw::{Element, Gen, PbwAlgebra, Word};
use crate::poly::SymPoly;
use crate::ring::Ring;
use crate::scalar::{self, Scalar};
use crate::symfun::Partition;

/// Shape of the variable matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylContext {
    m: usize,
    index: IndexSet,
}

impl WeylContext {
    pub fn new(m: usize, index: IndexSet) -> Self {
        WeylContext { m, index }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn index(&self) -> &IndexSet {
        &self.index
    }

    pub fn nv(&self) -> usize {
        self.m * self.index.len()
    }

    /// Flat index of `x_{ai}`, `a` 1-based.
    pub fn var(&self, a: usize, i: i32) -> Result<usize> {
        let p = self
            .index
            .pos(i)
            .ok_or_else(|| Error::Domain(format!("column {i} not in index set")))?;
        if a == 0 || a > self.m {
            return Err(Error::Domain(format!("row {a} outside 1..{}", self.m)));
        }
        Ok((a - 1) * self.index.len() + p)
    }

    pub fn var_name(&self, v: usize) -> String {
        let n = self.index.len();
        format!("x({},{})", v / n + 1, self.index.labels()[v % n])
    }

    pub fn x(&self, a: usize, i: i32) -> Result<SymPoly> {
        Ok(SymPoly::var(self.var(a, i)?))
    }

    pub fn identity(&self) -> WeylOperator {
        WeylOperator::constant(self.nv(), Scalar::one())
    }

    pub fn zero_op(&self) -> WeylOperator {
        WeylOperator::zero(self.nv())
    }

    /// Multiplication by `x_{ai}`.
    pub fn op_x(&self, a: usize, i: i32) -> Result<WeylOperator> {
        let v = self.var(a, i)?;
        let mut key = vec![0u8; 2 * self.nv()];
        key[v] = 1;
        Ok(WeylOperator::single(self.nv(), key, Scalar::one()))
    }

    /// `∂/∂x_{ai}`.
    pub fn op_d(&self, a: usize, i: i32) -> Result<WeylOperator> {
        let v = self.var(a, i)?;
        let mut key = vec![0u8; 2 * self.nv()];
        key[self.nv() + v] = 1;
        Ok(WeylOperator::single(self.nv(), key, Scalar::one()))
    }

    /// `Σ_a x_{ai} ∂_{aj}`, the polarization operator.
    pub fn polarization(&self, i: i32, j: i32) -> Result<WeylOperator> {
        let mut out = self.zero_op();
        for a in 1..=self.m {
            let mut key = vec![0u8; 2 * self.nv()];
            key[self.var(a, i)?] += 1;
            key[self.nv() + self.var(a, j)?] += 1;
            out.add_term(key, Scalar::one());
        }
        Ok(out)
    }

    /// Normal-ordered product of a polynomial in the `x` and one in the `∂`,
    /// both given as polynomials in the flat variables.
    pub fn from_parts(&self, px: &SymPoly, pd: &SymPoly) -> WeylOperator {
        let nv = self.nv();
        let mut out = self.zero_op();
        for (mx, cx) in px.terms() {
            for (md, cd) in pd.terms() {
                let mut key = vec![0u8; 2 * nv];
                for (v, e) in mx.iter().enumerate() {
                    key[v] = *e as u8;
                }
                for (v, e) in md.iter().enumerate() {
                    key[nv + v] = *e as u8;
                }
                out.add_term(key, cx * cd);
            }
        }
        out
    }

    pub fn render_op(&self, op: &WeylOperator) -> String {
        if op.terms.is_empty() {
            return "0".into();
        }
        let nv = self.nv();
        let parts: Vec<String> = op
            .terms
            .iter()
            .map(|(k, c)| {
                let mut s = scalar::render(c);
                for v in 0..nv {
                    for _ in 0..k[v] {
                        s.push('*');
                        s.push_str(&self.var_name(v));
                    }
                }
                for v in 0..nv {
                    for _ in 0..k[nv + v] {
                        s.push_str("*d");
                        s.push_str(&self.var_name(v));
                    }
                }
                s
            })
            .collect();
        parts.join(" + ")
    }

    pub fn render_poly(&self, p: &SymPoly) -> String {
        let names: Vec<String> = (0..self.nv()).map(|v| self.var_name(v)).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        p.render(&refs)
    }
}

/// Element of the Weyl algebra, as a sum of `c · x^α ∂^β` keyed by `α ++ β`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylOperator {
    nv: usize,
    terms: BTreeMap<Vec<u8>, Scalar>,
}

fn falling(n: u8, k: u8) -> u64 {
    (0..k as u64).map(|t| n as u64 - t).product()
}

fn binom(n: u8, k: u8) -> u64 {
    falling(n, k) / falling(k, k)
}

impl WeylOperator {
    pub fn zero(nv: usize) -> Self {
        WeylOperator { nv, terms: BTreeMap::new() }
    }

    pub fn constant(nv: usize, c: Scalar) -> Self {
        let mut op = WeylOperator::zero(nv);
        op.add_term(vec![0u8; 2 * nv], c);
        op
    }

    fn single(nv: usize, key: Vec<u8>, c: Scalar) -> Self {
        let mut op = WeylOperator::zero(nv);
        op.add_term(key, c);
        op
    }

    pub fn nv(&self) -> usize {
        self.nv
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, key: Vec<u8>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    /// Apply to a polynomial in the flat variables.
    pub fn apply(&self, p: &SymPoly) -> SymPoly {
        let nv = self.nv;
        let mut out = SymPoly::zero();
        for (k, c) in &self.terms {
            let (alpha, beta) = k.split_at(nv);
            'terms: for (g, pc) in p.terms() {
                let mut factor: u64 = 1;
                let mut res = vec![0u32; nv];
                for v in 0..nv {
                    let gv = g.get(v).copied().unwrap_or(0);
                    let bv = beta[v] as u32;
                    if gv < bv {
                        continue 'terms;
                    }
                    factor *= falling(gv as u8, bv as u8);
                    res[v] = gv - bv + alpha[v] as u32;
                }
                out.add_term(res, c * pc * scalar::int(factor as i64));
            }
        }
        out
    }

    /// Part of degree `d` in the `x` and `e` in the `∂`.
    pub fn bidegree_part(&self, d: u32, e: u32) -> WeylOperator {
        let nv = self.nv;
        let terms = self
            .terms
            .iter()
            .filter(|(k, _)| {
                k[..nv].iter().map(|x| *x as u32).sum::<u32>() == d
                    && k[nv..].iter().map(|x| *x as u32).sum::<u32>() == e
            })
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect();
        WeylOperator { nv, terms }
    }
}

impl Ring for WeylOperator {
    fn zero_like(&self) -> Self {
        WeylOperator::zero(self.nv)
    }
    fn one_like(&self) -> Self {
        WeylOperator::constant(self.nv, Scalar::one())
    }
    fn vanishes(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }
    fn negate(&self) -> Self {
        WeylOperator { nv: self.nv, terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect() }
    }
    /// `(x^α ∂^β)(x^γ ∂^δ) = Σ_κ Π_v C(β_v,κ_v) γ_v!/(γ_v-κ_v)! x^{α+γ-κ} ∂^{β+δ-κ}`.
    fn times(&self, other: &Self) -> Self {
        let nv = self.nv;
        let mut out = WeylOperator::zero(nv);
        for (k1, c1) in &self.terms {
            let (a1, b1) = k1.split_at(nv);
            for (k2, c2) in &other.terms {
                let (a2, b2) = k2.split_at(nv);
                let contract: Vec<(usize, u8)> =
                    (0..nv).filter_map(|v| (b1[v] > 0 && a2[v] > 0).then(|| (v, b1[v].min(a2[v])))).collect();
                let c12 = c1 * c2;
                let mut kappa = vec![0u8; contract.len()];
                loop {
                    let mut key = vec![0u8; 2 * nv];
                    for v in 0..nv {
                        key[v] = a1[v] + a2[v];
                        key[nv + v] = b1[v] + b2[v];
                    }
                    let mut factor: u64 = 1;
                    for (t, (v, _)) in contract.iter().enumerate() {
                        let k = kappa[t];
                        factor *= binom(b1[*v], k) * falling(a2[*v], k);
                        key[*v] -= k;
                        key[nv + *v] -= k;
                    }
                    out.add_term(key, &c12 * scalar::int(factor as i64));
                    // odometer over κ
                    let mut t = 0;
                    while t < contract.len() {
                        if kappa[t] < contract[t].1 {
                            kappa[t] += 1;
                            break;
                        }
                        kappa[t] = 0;
                        t += 1;
                    }
                    if t == contract.len() {
                        break;
                    }
                }
            }
        }
        out
    }
    fn scaled(&self, c: &Scalar) -> Self {
        let mut out = WeylOperator::zero(self.nv);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }
}

/// All monomials of total degree at most `d` in `nv` variables.
fn monomials_up_to(nv: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(v: usize, nv: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if v == nv {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(v + 1, nv, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, nv, d, &mut Vec::new(), &mut out);
    out
}

/// Independent equality test: both operators agree on every monomial of
/// degree at most `d`. For operators of order at most `d` this decides
/// equality.
pub fn operators_agree_on_degree(a: &WeylOperator, b: &WeylOperator, d: u32) -> bool {
    monomials_up_to(a.nv, d).into_iter().all(|m| {
        let p = SymPoly::monomial(&m, Scalar::one());
        a.apply(&p) == b.apply(&p)
    })
}

/// First differing term of two operators, rendered.
pub fn op_difference(ctx: &WeylContext, a: &WeylOperator, b: &WeylOperator) -> Option<String> {
    let d = a.minus(b);
    let (k, _) = d.terms.iter().next()?;
    let single = WeylOperator::single(a.nv, k.clone(), Scalar::one());
    let zero = Scalar::zero();
    Some(format!(
        "{}: {} vs {}",
        ctx.render_op(&single),
        a.terms.get(k).unwrap_or(&zero),
        b.terms.get(k).unwrap_or(&zero)
    ))
}

pub fn expect_ops_eq(ctx: &WeylContext, check: &str, a: &WeylOperator, b: &WeylOperator) -> Result<()> {
    match op_difference(ctx, a, b) {
        None => Ok(()),
        Some(w) => Err(Error::mismatch(check, w)),
    }
}

fn x_matrix(ctx: &WeylContext, rows: &[usize], cols: &[i32]) -> Result<Vec<Vec<SymPoly>>> {
    rows.iter().map(|a| cols.iter().map(|i| ctx.x(*a, *i)).collect()).collect()
}

/// Symmetrized Cayley-type operator `(1/k!) Σ_σ Σ_{a,i} s(σ) x_{a_1 i_1}...x_{a_k i_k}
/// ∂_{a_1 i_σ(1)}...∂_{a_k i_σ(k)}` with `s = sgn` (`signed`) or `s = 1`.
pub fn cayley_symmetrized(ctx: &WeylContext, k: usize, signed: bool) -> WeylOperator {
    let nv = ctx.nv();
    let ncol = ctx.index().len();
    let perms = combinat::permutations(k);
    let inv_fact = Scalar::one() / scalar::factorial(k);
    let mut out = ctx.zero_op();
    for rows in combinat::tuples(ctx.m(), k) {
        for cols in combinat::tuples(ncol, k) {
            for (p, s) in &perms {
                let mut key = vec![0u8; 2 * nv];
                for t in 0..k {
                    key[rows[t] * ncol + cols[t]] += 1;
                    key[nv + rows[t] * ncol + cols[p[t]]] += 1;
                }
                let c = if signed && *s < 0 { -inv_fact.clone() } else { inv_fact.clone() };
                out.add_term(key, c);
            }
        }
    }
    out
}

/// `Σ_{a_1<...<a_k} Σ_{i_1<...<i_k} det[x_{a_p i_q}] det[∂_{a_p i_q}]`.
pub fn cayley_omega(ctx: &WeylContext, k: usize) -> Result<WeylOperator> {
    if k == 0 {
        return Ok(ctx.identity());
    }
    let labels = ctx.index().labels().to_vec();
    let mut out = ctx.zero_op();
    for rows in combinat::combinations(ctx.m(), k) {
        let rows: Vec<usize> = rows.iter().map(|a| a + 1).collect();
        for cols in combinat::combinations(labels.len(), k) {
            let cols: Vec<i32> = cols.iter().map(|c| labels[*c]).collect();
            let d = matrix::det(&x_matrix(ctx, &rows, &cols)?)?;
            out = out.plus(&ctx.from_parts(&d, &d));
        }
    }
    Ok(out)
}

/// `Σ_{a weakly increasing} Σ_{i weakly increasing} per[x] per[∂] / (Π d! Π f!)`
/// with `d`, `f` the multiplicities in the row and column sequences.
pub fn cayley_theta(ctx: &WeylContext, k: usize) -> Result<WeylOperator> {
    if k == 0 {
        return Ok(ctx.identity());
    }
    let labels = ctx.index().labels().to_vec();
    let mut out = ctx.zero_op();
    for rows in combinat::multisets(ctx.m(), k) {
        let df = combinat::multiplicity_factorials(&rows);
        let rows: Vec<usize> = rows.iter().map(|a| a + 1).collect();
        for cols in combinat::multisets(labels.len(), k) {
            let ff = combinat::multiplicity_factorials(&cols);
            let cols: Vec<i32> = cols.iter().map(|c| labels[*c]).collect();
            let p = matrix::per(&x_matrix(ctx, &rows, &cols)?)?;
            let w = Scalar::one() / scalar::int((df * ff) as i64);
            out = out.plus(&ctx.from_parts(&p, &p).scaled(&w));
        }
    }
    Ok(out)
}

fn check_split_args(ctx: &WeylContext, rows: &[usize], cols: &[i32]) -> Result<()> {
    if cols.len() != 2 * rows.len() {
        return Err(Error::Dimension(format!("{} columns for {} rows", cols.len(), rows.len())));
    }
    if !ctx.index().is_symmetric() {
        return Err(Error::Domain("split operators need a symmetric index set".into()));
    }
    Ok(())
}

/// `Σ_J sgn(JJ') det[x_{a_p j_q}] det[∂_{a_p, -j'_q}]` over the splittings of
/// the increasing `2k`-sequence `cols` into `J` and its complement `J'`.
/// `sgn(JJ')` is the sign of `(j_1, j'_1, ..., j_k, j'_k)` against `cols`.
///
/// The column list is read as a set: it is sorted first and repeats are rejected.
pub fn omega_split(ctx: &WeylContext, rows: &[usize], cols: &[i32]) -> Result<WeylOperator> {
    check_split_args(ctx, rows, cols)?;
    let mut cols = cols.to_vec();
    cols.sort_unstable();
    if cols.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Domain(format!("repeated column in {cols:?}")));
    }
    let k = rows.len();
    if k == 0 {
        return Ok(ctx.identity());
    }
    let mut out = ctx.zero_op();
    for j in combinat::combinations(2 * k, k) {
        let jc: Vec<usize> = (0..2 * k).filter(|p| !j.contains(p)).collect();
        let interleaved: Vec<usize> = (0..k).flat_map(|q| [j[q], jc[q]]).collect();
        let s = combinat::sort_sign(&interleaved);
        let xcols: Vec<i32> = j.iter().map(|p| cols[*p]).collect();
        let dcols: Vec<i32> = jc.iter().map(|p| -cols[*p]).collect();
        let dx = matrix::det(&x_matrix(ctx, rows, &xcols)?)?;
        let dd = matrix::det(&x_matrix(ctx, rows, &dcols)?)?;
        let t = ctx.from_parts(&dx, &dd);
        out = if s > 0 { out.plus(&t) } else { out.minus(&t) };
    }
    Ok(out)
}

/// `Σ_J sgn(j_1...j_k) per[x_{a_p j_q}] per[∂_{a_p, -j'_q}]` over the
/// splittings of the weakly increasing `2k`-sequence `cols` by position, so a
/// split that occurs for several position sets is counted that many times.
pub fn theta_split(ctx: &WeylContext, rows: &[usize], cols: &[i32]) -> Result<WeylOperator> {
    check_split_args(ctx, rows, cols)?;
    let mut cols = cols.to_vec();
    cols.sort_unstable();
    let k = rows.len();
    if k == 0 {
        return Ok(ctx.identity());
    }
    let mut out = ctx.zero_op();
    for j in combinat::combinations(2 * k, k) {
        let jc: Vec<usize> = (0..2 * k).filter(|p| !j.contains(p)).collect();
        let xcols: Vec<i32> = j.iter().map(|p| cols[*p]).collect();
        let dcols: Vec<i32> = jc.iter().map(|p| -cols[*p]).collect();
        let s: i32 = xcols.iter().map(|i| scalar::sgn(*i)).product();
        let px = matrix::per(&x_matrix(ctx, rows, &xcols)?)?;
        let pd = matrix::per(&x_matrix(ctx, rows, &dcols)?)?;
        let t = ctx.from_parts(&px, &pd);
        out = if s > 0 { out.plus(&t) } else { out.minus(&t) };
    }
    Ok(out)
}

/// `Δ_1^{λ_1-λ_2} ... Δ_n^{λ_n}` where `Δ_p` is the minor on rows `1..p` and
/// the first `p` columns.
pub fn singular_vector(ctx: &WeylContext, lambda: &Partition) -> Result<SymPoly> {
    let l = lambda.len();
    if l > ctx.m() || l > ctx.index().len() {
        return Err(Error::Domain(format!("{lambda} needs at least {l} rows and columns")));
    }
    let labels = ctx.index().labels();
    let mut v = SymPoly::one();
    for p in 1..=l {
        let rows: Vec<usize> = (1..=p).collect();
        let minor = matrix::det(&x_matrix(ctx, &rows, &labels[..p])?)?;
        let e = (lambda.part(p) - lambda.part(p + 1)) as u32;
        v = v.times(&minor.pow(e));
    }
    Ok(v)
}

/// A representation of an enveloping algebra by differential operators,
/// fixed by the images of its generators.
pub struct OperatorRep {
    ctx: WeylContext,
    images: Vec<WeylOperator>,
    cache: BTreeMap<Word, WeylOperator>,
}

impl OperatorRep {
    /// `E_ij -> Σ_a x_{ai} ∂_{aj}`, extended to `o_N` and `sp_N` through their
    /// embedding in `gl_N`.
    pub fn polarization(alg: &PbwAlgebra, m: usize) -> Result<Self> {
        let ctx = WeylContext::new(m, alg.context().index().clone());
        let mut images = Vec::with_capacity(alg.dim());
        for g in 0..alg.dim() as Gen {
            let mut op = ctx.zero_op();
            for ((i, j), c) in alg.gl_image(g) {
                op = op.plus(&ctx.polarization(*i, *j)?.scaled(c));
            }
            images.push(op);
        }
        Ok(OperatorRep { ctx, images, cache: BTreeMap::new() })
    }

    /// The oscillator representation of the dual algebra `g'` (`sp_{2m}` for
    /// `g = o_N`, `o_{2m}` for `g = sp_N`) on polynomials in the `m x N`
    /// matrix of variables. `dual` must have labels `±1..±m`; `g_index` is the
    /// index set of `g`.
    pub fn dual(dual: &PbwAlgebra, g_family: Family, g_index: &IndexSet) -> Result<Self> {
        let m = dual.context().n();
        let big_n = g_index.len();
        let ctx = WeylContext::new(m, g_index.clone());
        let (expected, shift) = match g_family {
            Family::So => (Family::Sp, scalar::frac(big_n as i64, 2)),
            Family::Sp => (Family::So, scalar::int((big_n / 2) as i64)),
            Family::Gl => return Err(Error::Domain("no dual pair for gl".into())),
        };
        if dual.context().family() != expected || dual.context().big_n() % 2 == 1 {
            return Err(Error::Domain(format!("{} is not dual to this algebra", dual.context().name())));
        }
        let labels = g_index.labels().to_vec();
        let sign = |c: i32| -> Scalar {
            match g_family {
                Family::Sp => scalar::int(scalar::sgn(c) as i64),
                _ => Scalar::one(),
            }
        };
        let mut images = Vec::with_capacity(dual.dim());
        for g in 0..dual.dim() as Gen {
            let (i, j) = dual.gen_labels(g);
            let mut op = ctx.zero_op();
            match (i > 0, j > 0) {
                (true, true) | (false, false) => {
                    // F'_{ab} for a, b > 0; the negative pair is -F'_{|j|,|i|}
                    let (a, b, s) = if i > 0 { (i, j, 1) } else { (-j, -i, -1) };
                    for &c in &labels {
                        op = op.plus(&ctx.op_x(a as usize, c)?.times(&ctx.op_d(b as usize, c)?));
                    }
                    if a == b {
                        op = op.plus(&WeylOperator::constant(ctx.nv(), shift.clone()));
                    }
                    if s < 0 {
                        op = op.negate();
                    }
                }
                (true, false) => {
                    let (a, b) = (i as usize, (-j) as usize);
                    for &c in &labels {
                        let t = ctx.op_x(a, c)?.times(&ctx.op_x(b, -c)?).scaled(&sign(c));
                        op = op.plus(&t);
                    }
                    if g_family == Family::So {
                        op = op.negate();
                    }
                }
                (false, true) => {
                    let (a, b) = ((-i) as usize, j as usize);
                    for &c in &labels {
                        let t = ctx.op_d(a, c)?.times(&ctx.op_d(b, -c)?).scaled(&sign(c));
                        op = op.plus(&t);
                    }
                }
            }
            images.push(op);
        }
        Ok(OperatorRep { ctx, images, cache: BTreeMap::new() })
    }

    pub fn context(&self) -> &WeylContext {
        &self.ctx
    }

    pub fn generator_image(&self, g: Gen) -> &WeylOperator {
        &self.images[g as usize]
    }

    fn word_image(&mut self, w: &[Gen]) -> WeylOperator {
        if w.is_empty() {
            return self.ctx.identity();
        }
        if w.len() == 1 {
            return self.images[w[0] as usize].clone();
        }
        if let Some(op) = self.cache.get(w) {
            return op.clone();
        }
        let head = self.word_image(&w[..w.len() - 1]);
        let op = head.times(&self.images[w[w.len() - 1] as usize]);
        self.cache.insert(w.to_vec(), op.clone());
        op
    }

    /// Image of an element as a single operator.
    pub fn image(&mut self, x: &Element<Scalar>) -> WeylOperator {
        let mut out = self.ctx.zero_op();
        for (w, c) in x.terms() {
            out = out.plus(&self.word_image(w).scaled(c));
        }
        out
    }

    /// Action on a polynomial, applying generators right to left without
    /// forming the operator.
    pub fn act(&self, x: &Element<Scalar>, p: &SymPoly) -> SymPoly {
        let mut cache: BTreeMap<&[Gen], SymPoly> = BTreeMap::new();
        let mut out = SymPoly::zero();
        for (w, c) in x.terms() {
            let mut v = p.clone();
            let mut start = w.len();
            // reuse the longest cached suffix
            for s in 0..w.len() {
                if let Some(cv) = cache.get(&w[s..]) {
                    v = cv.clone();
                    start = s;
                    break;
                }
            }
            for s in (0..start).rev() {
                v = self.images[w[s] as usize].apply(&v);
                cache.insert(&w[s..], v.clone());
            }
            out = out.plus(&v.scaled(c));
        }
        out
    }

    /// `[ρ(g), ρ(h)] = ρ([g, h])` for all generator pairs, or a witness.
    pub fn check_homomorphism(&self, alg: &PbwAlgebra) -> Result<()> {
        for g in 0..alg.dim() as Gen {
            for h in 0..alg.dim() as Gen {
                let a = &self.images[g as usize];
                let b = &self.images[h as usize];
                let lhs = a.times(b).minus(&b.times(a));
                let mut rhs = self.ctx.zero_op();
                for (c, s) in alg.bracket_gens(g, h) {
                    rhs = rhs.plus(&self.images[*c as usize].scaled(s));
                }
                let check = format!("bracket {} {}", alg.render_word(&[g]), alg.render_word(&[h]));
                expect_ops_eq(&self.ctx, &check, &lhs, &rhs)?;
            }
        }
        Ok(())
    }
}
