//! Sparse multivariate and dense univariate polynomials over [`Scalar`].

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::{Coeff, Ring};
use crate::scalar::{self, Scalar};

/// Exponent vector with trailing zeros removed.
pub type Monomial = Vec<u32>;

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

fn mono_mul(a: &[u32], b: &[u32]) -> Monomial {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, e) in out.iter_mut().zip(short) {
        *o += e;
    }
    out
}

fn mono_div(a: &[u32], b: &[u32]) -> Option<Monomial> {
    if b.len() > a.len() {
        return None;
    }
    let mut out = a.to_vec();
    for (o, e) in out.iter_mut().zip(b) {
        if *o < *e {
            return None;
        }
        *o -= e;
    }
    Some(trim(out))
}

/// Multivariate polynomial `x_0, x_1, ...` with rational coefficients.
///
/// Terms are keyed by exponent vectors; the map order is lexicographic with
/// `x_0 > x_1 > ...`, so the last key is the lex-leading monomial.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl SymPoly {
    pub fn zero() -> Self {
        SymPoly::default()
    }

    pub fn one() -> Self {
        SymPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = SymPoly::zero();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn var(i: usize) -> Self {
        let mut m = vec![0; i + 1];
        m[i] = 1;
        let mut p = SymPoly::zero();
        p.add_term(m, Scalar::one());
        p
    }

    pub fn monomial(exps: &[u32], c: Scalar) -> Self {
        let mut p = SymPoly::zero();
        p.add_term(exps.to_vec(), c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let m = trim(m);
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn coeff(&self, m: &[u32]) -> Scalar {
        let m = trim(m.to_vec());
        self.terms.get(&m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Number of variables actually occurring.
    pub fn nvars(&self) -> usize {
        self.terms.keys().map(|m| m.len()).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    pub fn homogeneous_part(&self, d: u32) -> SymPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.iter().sum::<u32>() == d)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        SymPoly { terms }
    }

    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&[])
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    pub fn pow(&self, e: u32) -> SymPoly {
        let mut acc = SymPoly::one();
        for _ in 0..e {
            acc = acc.times(self);
        }
        acc
    }

    /// Evaluate at a point; variables beyond `point` are an error.
    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar> {
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            if m.len() > point.len() {
                return Err(Error::Dimension(format!(
                    "polynomial in {} variables evaluated at {} values",
                    m.len(),
                    point.len()
                )));
            }
            let mut t = c.clone();
            for (x, e) in point.iter().zip(m) {
                t *= scalar::pow(x, *e);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Replace variable `i` by `subs[i]` for every `i`.
    pub fn substitute(&self, subs: &[SymPoly]) -> Result<SymPoly> {
        let mut powers: Vec<Vec<SymPoly>> = subs.iter().map(|s| vec![SymPoly::one(), s.clone()]).collect();
        let mut out = SymPoly::zero();
        for (m, c) in &self.terms {
            if m.len() > subs.len() {
                return Err(Error::Dimension(format!(
                    "substitution for {} variables given {}",
                    m.len(),
                    subs.len()
                )));
            }
            let mut t = SymPoly::constant(c.clone());
            for (i, e) in m.iter().enumerate() {
                let e = *e as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().times(&subs[i]);
                    powers[i].push(next);
                }
                t = t.times(&powers[i][e]);
            }
            out = out.plus(&t);
        }
        Ok(out)
    }

    pub fn swap_vars(&self, i: usize, j: usize) -> SymPoly {
        let mut out = SymPoly::zero();
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            let len = i.max(j) + 1;
            if m2.len() < len {
                m2.resize(len, 0);
            }
            m2.swap(i, j);
            out.add_term(m2, c.clone());
        }
        out
    }

    /// Symmetric in the first `n` variables and free of the others.
    pub fn is_symmetric(&self, n: usize) -> bool {
        if self.nvars() > n {
            return false;
        }
        (0..n.saturating_sub(1)).all(|i| &self.swap_vars(i, i + 1) == self)
    }

    /// Exact division; `None` if `d` is zero or does not divide.
    pub fn div_exact_poly(&self, d: &SymPoly) -> Option<SymPoly> {
        let (dm, dc) = d.leading()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut q = SymPoly::zero();
        while let Some((m, c)) = rem.leading() {
            let qm = mono_div(m, &dm)?;
            let qc = c / &dc;
            let t = SymPoly::monomial(&qm, qc);
            rem = rem.minus(&t.times(d));
            q = q.plus(&t);
        }
        Some(q)
    }

    pub fn to_unipoly(&self) -> Result<UniPoly> {
        if self.nvars() > 1 {
            return Err(Error::Domain("polynomial is not univariate".into()));
        }
        let mut coeffs = Vec::new();
        for (m, c) in &self.terms {
            let e = m.first().copied().unwrap_or(0) as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, Scalar::zero());
            }
            coeffs[e] = c.clone();
        }
        Ok(UniPoly::new(coeffs))
    }

    pub fn render(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mut s = String::new();
            let vars: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(i, e)| {
                    let name = names.get(i).map(|s| String::from(*s)).unwrap_or_else(|| format!("x{i}"));
                    if *e == 1 {
                        name
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            if vars.is_empty() {
                s.push_str(&scalar::render(c));
            } else {
                if !c.is_one() {
                    s.push_str(&scalar::render(c));
                    s.push('*');
                }
                s.push_str(&vars.join("*"));
            }
            parts.push(s);
        }
        parts.join(" + ")
    }
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}

impl Ring for SymPoly {
    fn zero_like(&self) -> Self {
        SymPoly::zero()
    }
    fn one_like(&self) -> Self {
        SymPoly::one()
    }
    fn vanishes(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
    fn negate(&self) -> Self {
        SymPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
    fn times(&self, other: &Self) -> Self {
        let mut out = SymPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(mono_mul(m1, m2), c1 * c2);
            }
        }
        out
    }
    fn scaled(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return SymPoly::zero();
        }
        SymPoly { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        self.div_exact_poly(d)
    }
}

impl Coeff for SymPoly {
    fn constant(c: Scalar) -> Self {
        SymPoly::constant(c)
    }
}

/// Dense univariate polynomial; `coeffs[k]` multiplies `u^k`.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UniPoly {
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn one() -> Self {
        UniPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        UniPoly::new(vec![c])
    }

    /// The polynomial `u`.
    pub fn u() -> Self {
        UniPoly::new(vec![Scalar::zero(), Scalar::one()])
    }

    /// `a*u + b`.
    pub fn linear(a: Scalar, b: Scalar) -> Self {
        UniPoly::new(vec![b, a])
    }

    /// `prod (u - r)` over the given roots.
    pub fn from_roots(roots: &[Scalar]) -> Self {
        roots
            .iter()
            .fold(UniPoly::one(), |acc, r| acc.times(&UniPoly::linear(Scalar::one(), -r)))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn monic(&self) -> UniPoly {
        match self.lead() {
            Some(l) => {
                let inv = Scalar::one() / l;
                self.scaled(&inv)
            }
            None => UniPoly::zero(),
        }
    }

    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = d.degree().ok_or_else(|| Error::Domain("division by zero polynomial".into()))?;
        let dl = d.lead().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut q = vec![Scalar::zero(); rem.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &rem[k + dd] / &dl;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        rem.truncate(dd);
        Ok((UniPoly::new(q), UniPoly::new(rem)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p(u + s)`.
    pub fn shift(&self, s: &Scalar) -> UniPoly {
        self.compose(&UniPoly::linear(Scalar::one(), s.clone()))
    }

    /// `p(q(u))`.
    pub fn compose(&self, q: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.times(q).plus(&UniPoly::constant(c.clone()));
        }
        acc
    }

    pub fn to_sympoly(&self) -> SymPoly {
        let mut p = SymPoly::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            p.add_term(vec![k as u32], c.clone());
        }
        p
    }

    pub fn render(&self, var: &str) -> String {
        self.to_sympoly().render(&[var])
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("u"))
    }
}

impl Ring for UniPoly {
    fn zero_like(&self) -> Self {
        UniPoly::zero()
    }
    fn one_like(&self) -> Self {
        UniPoly::one()
    }
    fn vanishes(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }
    fn negate(&self) -> Self {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
    fn times(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
    fn scaled(&self, c: &Scalar) -> Self {
        UniPoly::new(self.coeffs.iter().map(|v| v * c).collect())
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d).ok()?;
        r.is_zero().then_some(q)
    }
}

impl Coeff for UniPoly {
    fn constant(c: Scalar) -> Self {
        UniPoly::constant(c)
    }
}
