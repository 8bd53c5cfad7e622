//! Distinguished elements of enveloping algebras: Capelli-type elements of
//! `U(gl_N)`, Pfaffians and Hafnians of `o_N` and `sp_N`, their central sums,
//! and the Harish-Chandra image computed by eigenvalue interpolation.

use alloc::format;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::combinat;
use crate::error::{Error, Result};
use crate::lie::Family;
use crate::matrix;
use crate::pbw::{Element, PbwAlgebra};
use crate::poly::SymPoly;
use crate::ring::Ring;
use crate::scalar::{self, Scalar};
use crate::symfun::Partition;
use crate::weyl::{singular_vector, OperatorRep};

fn require(alg: &PbwAlgebra, family: Family) -> Result<()> {
    if alg.context().family() != family {
        return Err(Error::Domain(format!("construction not defined for {}", alg.context().name())));
    }
    Ok(())
}

/// `(1/k!) Σ_σ Σ_i s(σ) Π_s (E_{i_s i_σ(s)} + c(s-1) δ_{i_s i_σ(s)})` in
/// `U(gl_N)`, factors taken left to right. The signed version has `s = sgn`,
/// `c = 1`; the unsigned one `s = 1`, `c = -1`.
pub fn capelli_element(alg: &PbwAlgebra, k: usize, signed: bool) -> Result<Element> {
    require(alg, Family::Gl)?;
    let labels = alg.context().labels().to_vec();
    let shift = if signed { Scalar::one() } else { -Scalar::one() };
    let inv_fact = Scalar::one() / scalar::factorial(k);
    let mut out = Element::zero();
    for (p, s) in combinat::permutations(k) {
        for idx in combinat::tuples(labels.len(), k) {
            let mut prod = Element::<Scalar>::one();
            for t in 0..k {
                let (i, j) = (labels[idx[t]], labels[idx[p[t]]]);
                let mut f = alg.generator::<Scalar>(i, j)?;
                if i == j {
                    f = f.plus(&Element::scalar(&shift * scalar::int(t as i64)));
                }
                prod = alg.mul(&prod, &f);
            }
            let c = if signed && s < 0 { -inv_fact.clone() } else { inv_fact.clone() };
            out.add_assign(&prod.scaled(&c));
        }
    }
    Ok(out)
}

fn check_sequence(alg: &PbwAlgebra, seq: &[i32]) -> Result<()> {
    if seq.len() % 2 == 1 {
        return Err(Error::Dimension("index sequence of odd length".into()));
    }
    if let Some(i) = seq.iter().find(|i| !alg.context().index().contains(**i)) {
        return Err(Error::Domain(format!("index {i} outside {}", alg.context().name())));
    }
    Ok(())
}

/// `Φ_I = Σ_{σ∈S_2k} sgn σ / (2^k k!) F_{i_σ(1),-i_σ(2)} ... F_{i_σ(2k-1),-i_σ(2k)}`.
pub fn pfaffian(alg: &PbwAlgebra, seq: &[i32]) -> Result<Element> {
    require(alg, Family::So)?;
    check_sequence(alg, seq)?;
    if (1..seq.len()).any(|p| seq[..p].contains(&seq[p])) {
        return Err(Error::Domain(format!("repeated index in {seq:?}")));
    }
    pair_product_sum(alg, seq, true)
}

/// `Ψ_I = Σ_{σ∈S_2k} 1 / (2^k k!) F̃_{i_σ(1),-i_σ(2)} ... ` with `F̃_ij = sgn(i) F_ij`.
pub fn hafnian(alg: &PbwAlgebra, seq: &[i32]) -> Result<Element> {
    require(alg, Family::Sp)?;
    check_sequence(alg, seq)?;
    pair_product_sum(alg, seq, false)
}

fn pair_product_sum(alg: &PbwAlgebra, seq: &[i32], signed: bool) -> Result<Element> {
    let two_k = seq.len();
    let k = two_k / 2;
    let norm = Scalar::one() / (scalar::pow(&scalar::int(2), k as u32) * scalar::factorial(k));
    let pair = |i: i32, j: i32| -> Result<Element> {
        let g = alg.generator::<Scalar>(i, -j)?;
        Ok(if signed { g } else { g.scaled(&scalar::int(scalar::sgn(i) as i64)) })
    };
    let mut pairs = alloc::collections::BTreeMap::new();
    for &i in seq {
        for &j in seq {
            pairs.insert((i, j), pair(i, j)?);
        }
    }
    let mut out = Element::zero();
    for (p, s) in combinat::permutations(two_k) {
        let factors: Vec<Element> = (0..k).map(|t| pairs[&(seq[p[2 * t]], seq[p[2 * t + 1]])].clone()).collect();
        if factors.iter().any(|f| f.is_zero()) {
            continue;
        }
        let c = if signed && s < 0 { -norm.clone() } else { norm.clone() };
        out.add_assign(&alg.product(&factors).scaled(&c));
    }
    Ok(out)
}

/// `I* = (-i_2k, ..., -i_1)`.
pub fn dual_sequence(seq: &[i32]) -> Vec<i32> {
    seq.iter().rev().map(|i| -i).collect()
}

/// `C_k = (-1)^k Σ_I Φ_I Φ_{I*}` over increasing `2k`-sequences, in `U(o_N)`.
pub fn pfaffian_central(alg: &PbwAlgebra, k: usize) -> Result<Element> {
    require(alg, Family::So)?;
    let labels = alg.context().labels().to_vec();
    let mut out = Element::zero();
    for c in combinat::combinations(labels.len(), 2 * k) {
        let seq: Vec<i32> = c.iter().map(|p| labels[*p]).collect();
        let a = pfaffian(alg, &seq)?;
        let b = pfaffian(alg, &dual_sequence(&seq))?;
        out.add_assign(&alg.mul(&a, &b));
    }
    Ok(if k % 2 == 1 { out.negate() } else { out })
}

/// `D_k = (-1)^k Σ_I sgn(i_1...i_2k) Ψ_I Ψ_{I*} / (f_1!...f_N!)` over weakly
/// increasing `2k`-sequences, in `U(sp_N)`.
pub fn hafnian_central(alg: &PbwAlgebra, k: usize) -> Result<Element> {
    require(alg, Family::Sp)?;
    let labels = alg.context().labels().to_vec();
    let mut out = Element::zero();
    for c in combinat::multisets(labels.len(), 2 * k) {
        let seq: Vec<i32> = c.iter().map(|p| labels[*p]).collect();
        let sign: i32 = seq.iter().map(|i| scalar::sgn(*i)).product();
        let w = scalar::int(sign as i64) / scalar::int(combinat::multiplicity_factorials(&c) as i64);
        let a = hafnian(alg, &seq)?;
        let b = hafnian(alg, &dual_sequence(&seq))?;
        out.add_assign(&alg.mul(&a, &b).scaled(&w));
    }
    Ok(if k % 2 == 1 { out.negate() } else { out })
}

/// Harish-Chandra images by interpolation of eigenvalues on highest-weight
/// vectors realised as products of minors in polynomials on `n x N` matrices.
pub struct HcOracle<'a> {
    alg: &'a PbwAlgebra,
    rep: OperatorRep,
}

impl<'a> HcOracle<'a> {
    pub fn new(alg: &'a PbwAlgebra) -> Result<Self> {
        if alg.context().family() == Family::Gl {
            return Err(Error::Domain("the oracle handles o_N and sp_N".into()));
        }
        let rep = OperatorRep::polarization(alg, alg.context().n())?;
        Ok(HcOracle { alg, rep })
    }

    pub fn rep(&self) -> &OperatorRep {
        &self.rep
    }

    /// Eigenvalue of `z` on the highest-weight vector of weight `λ`.
    pub fn eigenvalue(&self, z: &Element, lambda: &Partition) -> Result<Scalar> {
        let v = singular_vector(self.rep.context(), lambda)?;
        let w = self.rep.act(z, &v);
        let (m, c) = v.leading().expect("singular vector is nonzero");
        let ratio = w.coeff(m) / c;
        if w != v.scaled(&ratio) {
            return Err(Error::NotEigen(format!("weight {lambda}")));
        }
        Ok(ratio)
    }

    /// Check the highest-weight conditions for `v_λ`: every `F_ij` with
    /// `i < j` kills it and `F_{-p,-p}` acts by `λ_{n-p+1}`.
    pub fn check_highest_weight(&self, lambda: &Partition) -> Result<()> {
        let ctx = self.rep.context();
        let v = singular_vector(ctx, lambda)?;
        let labels = self.alg.context().labels().to_vec();
        let n = self.alg.context().n();
        for &i in &labels {
            for &j in &labels {
                let f = self.alg.generator::<Scalar>(i, j)?;
                let w = self.rep.act(&f, &v);
                if i < j && !w.is_zero() {
                    return Err(Error::mismatch(format!("raising F({i},{j})"), format!("weight {lambda}")));
                }
                if i == j && i < 0 {
                    let p = (-i) as usize;
                    let expect = scalar::int(lambda.part(n - p + 1) as i64);
                    if w != v.scaled(&expect) {
                        return Err(Error::mismatch(format!("weight F({i},{i})"), format!("weight {lambda}")));
                    }
                }
            }
        }
        Ok(())
    }

    /// The symmetric polynomial `f` in `z_p = l_p^2` of degree at most `k`
    /// with `f(l^2) = ` eigenvalue of `z` at every `λ` with `λ_1 ≤ 2k`.
    pub fn hc_polynomial(&self, z: &Element, k: usize) -> Result<SymPoly> {
        let n = self.alg.context().n();
        let basis: Vec<SymPoly> = (0..=k)
            .flat_map(|d| combinat::partitions(d, n, d))
            .map(|nu| monomial_symmetric(&nu, n))
            .collect();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for lambda in Partition::all(0, 2 * k * n, n, (2 * k).max(1)) {
            let l2: Vec<Scalar> = self.alg.context().l_values(&lambda)?.iter().map(|l| l * l).collect();
            rows.push(basis.iter().map(|b| b.eval(&l2)).collect::<Result<Vec<_>>>()?);
            rhs.push(self.eigenvalue(z, &lambda)?);
        }
        let sol = matrix::solve(&rows, &rhs)?;
        Ok(basis.iter().zip(sol).fold(SymPoly::zero(), |acc, (b, c)| acc.plus(&b.scaled(&c))))
    }
}

/// Monomial symmetric polynomial `m_ν(z_1, ..., z_n)`.
pub fn monomial_symmetric(nu: &[usize], n: usize) -> SymPoly {
    let mut exps: Vec<u32> = nu.iter().map(|x| *x as u32).collect();
    exps.resize(n, 0);
    exps.sort();
    let mut out = SymPoly::zero();
    // iterate distinct permutations of the exponent multiset
    loop {
        out.add_term(exps.clone(), Scalar::one());
        let Some(i) = (1..n).rev().find(|&i| exps[i - 1] < exps[i]) else { break };
        let j = (i..n).rev().find(|&j| exps[j] > exps[i - 1]).unwrap();
        exps.swap(i - 1, j);
        exps[i..].reverse();
    }
    out
}

/// The central element with prescribed Harish-Chandra image, as a polynomial
/// in given central generators with known images. `gens[i]` is taken to have
/// degree `i + 1` in `z`.
pub fn hc_preimage(alg: &PbwAlgebra, target: &SymPoly, gens: &[(Element, SymPoly)]) -> Result<Element> {
    let k = target.total_degree().unwrap_or(0) as usize;
    // exponent vectors α with Σ (i+1) α_i ≤ k
    let mut monos: Vec<Vec<usize>> = Vec::new();
    fn rec(i: usize, left: usize, gens: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == gens {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left / (i + 1) {
            cur.push(e);
            rec(i + 1, left - e * (i + 1), gens, cur, out);
            cur.pop();
        }
    }
    rec(0, k, gens.len(), &mut Vec::new(), &mut monos);
    let images: Vec<SymPoly> = monos
        .iter()
        .map(|al| {
            al.iter().enumerate().fold(SymPoly::one(), |acc, (i, e)| acc.times(&gens[i].1.pow(*e as u32)))
        })
        .collect();
    // match coefficients monomial by monomial
    let mut keys: Vec<Vec<u32>> = images.iter().chain(core::iter::once(target)).flat_map(|p| p.terms().map(|(m, _)| m.clone())).collect();
    keys.sort();
    keys.dedup();
    let rows: Vec<Vec<Scalar>> = keys.iter().map(|m| images.iter().map(|p| p.coeff(m)).collect()).collect();
    let rhs: Vec<Scalar> = keys.iter().map(|m| target.coeff(m)).collect();
    let sol = matrix::solve(&rows, &rhs)?;
    let mut out = Element::zero();
    for (al, c) in monos.iter().zip(sol) {
        if c.is_zero() {
            continue;
        }
        let mut prod = Element::<Scalar>::one();
        for (i, e) in al.iter().enumerate() {
            for _ in 0..*e {
                prod = alg.mul(&prod, &gens[i].0);
            }
        }
        out.add_assign(&prod.scaled(&c));
    }
    Ok(out)
}

/// Coefficients relating the central elements of a dual pair.
///
/// `Family::So` gives `f_kl = Π_{s=l}^{k-1} (m-s)(N/2-s)(d+l-s)/(k-s)` with
/// `d = m - N/2 + 1`; `Family::Sp` gives
/// `g_kl = Π_{s=l}^{k-1} (m+s)(n+s)(d-k+s+1)/(s-l+1)` with `d = n - m + 1`.
pub fn dual_pair_coeff(family: Family, k: usize, l: usize, m: usize, big_n: usize) -> Result<Scalar> {
    if l > k {
        return Ok(Scalar::zero());
    }
    let (k, l, m) = (k as i64, l as i64, m as i64);
    let mut acc = Scalar::one();
    match family {
        Family::So => {
            let half = scalar::frac(big_n as i64, 2);
            let d = scalar::int(m + 1) - &half;
            for s in l..k {
                let s_ = scalar::int(s);
                acc *= scalar::int(m - s) * (&half - &s_) * (&d + scalar::int(l - s)) / scalar::int(k - s);
            }
        }
        Family::Sp => {
            if big_n % 2 == 1 {
                return Err(Error::Domain("sp_N needs even N".into()));
            }
            let n = (big_n / 2) as i64;
            let d = n - m + 1;
            for s in l..k {
                acc *= scalar::int((m + s) * (n + s) * (d - k + s + 1)) / scalar::int(s - l + 1);
            }
        }
        Family::Gl => return Err(Error::Domain("no dual pair coefficients for gl".into())),
    }
    Ok(acc)
}
