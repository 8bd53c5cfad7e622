//! Factorial Schur functions and their elementary and complete special cases.
//!
//! Polynomials live in the variables `z_1, ..., z_n`, stored as `SymPoly`
//! variables `0..n`. A [`ShiftSequence`] supplies the parameters `a_1, a_2, ...`.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use num_traits::{One, Zero};

use crate::combinat;
use crate::error::{Error, Result};
use crate::matrix;
use crate::poly::{SymPoly, UniPoly};
use crate::ratfun::RatFun;
use crate::ring::Ring;
use crate::scalar::{self, Scalar};

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates and drops trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `λ_i` with 1-based `i`; zero past the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn padded(&self, n: usize) -> Vec<usize> {
        (1..=n).map(|i| self.part(i)).collect()
    }

    /// `λ ⊇ μ` as diagrams.
    pub fn contains(&self, mu: &Partition) -> bool {
        (1..=mu.len()).all(|i| self.part(i) >= mu.part(i))
    }

    /// All partitions with at most `n` parts and the given size bounds.
    pub fn all(min_size: usize, max_size: usize, n: usize, max_part: usize) -> Vec<Partition> {
        (min_size..=max_size)
            .flat_map(|s| combinat::partitions(s, n, max_part))
            .map(Partition)
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone)]
enum Rule {
    Zero,
    ShiftedSquares(Scalar),
    Explicit(Vec<Scalar>),
    Custom(Arc<dyn Fn(usize) -> Scalar + Send + Sync>),
}

/// A sequence `a_1, a_2, ...` of rationals given by a rule, with a cached prefix.
#[derive(Clone)]
pub struct ShiftSequence {
    rule: Rule,
    cache: Vec<Scalar>,
}

impl fmt::Debug for ShiftSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<String> = (1..=6).map(|k| scalar::render(&self.get(k))).collect();
        write!(f, "a = ({}, ...)", shown.join(", "))
    }
}

impl ShiftSequence {
    const PREFIX: usize = 16;

    fn with_rule(rule: Rule) -> Self {
        let mut s = ShiftSequence { rule, cache: Vec::new() };
        s.cache = (1..=Self::PREFIX).map(|k| s.compute(k)).collect();
        s
    }

    /// `a_k = 0`; factorial Schur functions reduce to ordinary ones.
    pub fn zero() -> Self {
        Self::with_rule(Rule::Zero)
    }

    /// `a_k = (ε + k - 1)^2`.
    pub fn shifted_squares(eps: Scalar) -> Self {
        Self::with_rule(Rule::ShiftedSquares(eps))
    }

    /// Finite sequence; indices past the end are a domain error at use.
    pub fn explicit(values: Vec<Scalar>) -> Self {
        Self::with_rule(Rule::Explicit(values))
    }

    pub fn from_fn(f: impl Fn(usize) -> Scalar + Send + Sync + 'static) -> Self {
        Self::with_rule(Rule::Custom(Arc::new(f)))
    }

    fn compute(&self, k: usize) -> Scalar {
        match &self.rule {
            Rule::Zero => Scalar::zero(),
            Rule::ShiftedSquares(e) => {
                let v = e + scalar::int(k as i64 - 1);
                &v * &v
            }
            Rule::Explicit(v) => v.get(k - 1).cloned().unwrap_or_else(Scalar::zero),
            Rule::Custom(f) => f(k),
        }
    }

    /// Number of defined terms, if finite.
    pub fn defined_len(&self) -> Option<usize> {
        match &self.rule {
            Rule::Explicit(v) => Some(v.len()),
            _ => None,
        }
    }

    /// `a_k` with 1-based `k`.
    pub fn get(&self, k: usize) -> Scalar {
        assert!(k >= 1, "shift sequences are indexed from 1");
        match self.cache.get(k - 1) {
            Some(v) => v.clone(),
            None => self.compute(k),
        }
    }

    pub fn try_get(&self, k: usize) -> Result<Scalar> {
        if k == 0 || self.defined_len().is_some_and(|l| k > l) {
            return Err(Error::Domain(format!("shift sequence has no term a_{k}")));
        }
        Ok(self.get(k))
    }

    pub fn prefix(&self, len: usize) -> Vec<Scalar> {
        (1..=len).map(|k| self.get(k)).collect()
    }

    pub fn is_multiplicity_free(&self, len: usize) -> bool {
        let p = self.prefix(len);
        (0..len).all(|i| (i + 1..len).all(|j| p[i] != p[j]))
    }
}

/// `(z - a_1)(z - a_2)...(z - a_k)`.
pub fn factorial_power<R: Ring>(z: &R, a: &ShiftSequence, k: usize) -> R {
    factorial_power_from(z, a, 1, k)
}

/// `(z - a_s)(z - a_{s+1})...` with `k` factors.
pub fn factorial_power_from<R: Ring>(z: &R, a: &ShiftSequence, s: usize, k: usize) -> R {
    let one = z.one_like();
    (s..s + k).fold(one.clone(), |acc, j| acc.times(&z.minus(&one.scaled(&a.get(j)))))
}

fn z_vars(n: usize) -> Vec<SymPoly> {
    (0..n).map(SymPoly::var).collect()
}

/// `prod_{p<q} (z_p - z_q)`.
pub fn vandermonde(n: usize) -> SymPoly {
    let z = z_vars(n);
    let mut acc = SymPoly::one();
    for p in 0..n {
        for q in p + 1..n {
            acc = acc.times(&z[p].minus(&z[q]));
        }
    }
    acc
}

/// Factorial Schur polynomial `s_μ(z|a)` in `n` variables, as the ratio of
/// `det[(z_q|a)^{μ_p+n-p}]` by the Vandermonde product.
pub fn schur_factorial(mu: &Partition, n: usize, a: &ShiftSequence) -> Result<SymPoly> {
    if mu.len() > n {
        return Err(Error::Domain(format!("partition {mu} has more than {n} parts")));
    }
    if n == 0 {
        return Ok(SymPoly::one());
    }
    if let Some(l) = a.defined_len() {
        if mu.part(1) + n - 1 > l {
            return Err(Error::Domain(format!("shift sequence too short for {mu}")));
        }
    }
    let z = z_vars(n);
    let m: Vec<Vec<SymPoly>> = (1..=n)
        .map(|p| z.iter().map(|zq| factorial_power(zq, a, mu.part(p) + n - p)).collect())
        .collect();
    let num = matrix::det(&m)?;
    num.div_exact_poly(&vandermonde(n))
        .ok_or_else(|| Error::Consistency(format!("alternant for {mu} not divisible by Vandermonde")))
}

/// Ordinary Schur polynomial.
pub fn schur(mu: &Partition, n: usize) -> Result<SymPoly> {
    schur_factorial(mu, n, &ShiftSequence::zero())
}

/// `e_k(z|a) = Σ_{p_1<...<p_k} Π_r (z_{p_r} - a_{p_r-r+1})`.
pub fn e_factorial(k: usize, n: usize, a: &ShiftSequence) -> SymPoly {
    if k == 0 {
        return SymPoly::one();
    }
    let z = z_vars(n);
    let mut acc = SymPoly::zero();
    for ps in combinat::combinations(n, k) {
        let mut t = SymPoly::one();
        for (r, p) in ps.iter().enumerate() {
            // 1-based: p_r - r + 1 = (p+1) - (r+1) + 1
            let idx = p + 1 - r;
            t = t.times(&z[*p].minus(&SymPoly::constant(a.get(idx))));
        }
        acc = acc.plus(&t);
    }
    acc
}

/// `h_k(z|a) = Σ_{p_1≤...≤p_k} Π_r (z_{p_r} - a_{p_r+r-1})`.
pub fn h_factorial(k: usize, n: usize, a: &ShiftSequence) -> SymPoly {
    if k == 0 {
        return SymPoly::one();
    }
    let z = z_vars(n);
    let mut acc = SymPoly::zero();
    for ps in combinat::multisets(n, k) {
        let mut t = SymPoly::one();
        for (r, p) in ps.iter().enumerate() {
            let idx = p + 1 + r;
            t = t.times(&z[*p].minus(&SymPoly::constant(a.get(idx))));
        }
        acc = acc.plus(&t);
    }
    acc
}

/// The interpolation point `(a_{λ_1+n}, a_{λ_2+n-1}, ..., a_{λ_n+1})`.
pub fn a_lambda(lambda: &Partition, n: usize, a: &ShiftSequence) -> Result<Vec<Scalar>> {
    if lambda.len() > n {
        return Err(Error::Domain(format!("partition {lambda} has more than {n} parts")));
    }
    (1..=n).map(|p| a.try_get(lambda.part(p) + n - p + 1)).collect()
}

/// Verdicts for the three equivalent characterizations of `s_μ(z|a)` up to a
/// scalar: proportionality, vanishing outside `μ`, and vanishing below `|μ|`
/// with the right top-degree part.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Characterization {
    pub proportional: bool,
    pub vanishes_off_mu: bool,
    pub vanishes_below_with_top: bool,
}

fn proportional_to(f: &SymPoly, s: &SymPoly) -> bool {
    if f.is_zero() {
        return true;
    }
    let Some((m, c)) = s.leading() else { return false };
    let ratio = f.coeff(m) / c;
    &s.scaled(&ratio) == f
}

/// Decide the three characterizations for a symmetric polynomial `f` in `n`
/// variables. Vanishing conditions are tested on partitions with at most `n`
/// parts and first part at most `|μ|`, which covers every point that can
/// distinguish polynomials of degree `|μ|`.
pub fn check_characterization(
    f: &SymPoly,
    mu: &Partition,
    n: usize,
    a: &ShiftSequence,
) -> Result<Characterization> {
    if !f.is_symmetric(n) {
        return Err(Error::Domain("polynomial is not symmetric in z_1..z_n".into()));
    }
    let s = schur_factorial(mu, n, a)?;
    let size = mu.size();
    let proportional = proportional_to(f, &s);

    let mut vanishes_off_mu = true;
    let mut vanishes_below = true;
    for lambda in Partition::all(0, size * n, n, size) {
        let v = f.eval(&a_lambda(&lambda, n, a)?)?;
        if v.is_zero() {
            continue;
        }
        if !lambda.contains(mu) {
            vanishes_off_mu = false;
        }
        if lambda.size() < size {
            vanishes_below = false;
        }
    }
    let deg_ok = f.total_degree().is_none_or(|d| d as usize <= size);
    let top = f.homogeneous_part(size as u32);
    let top_ok = proportional_to(&top, &schur(mu, n)?);
    Ok(Characterization {
        proportional,
        vanishes_off_mu,
        vanishes_below_with_top: vanishes_below && deg_ok && top_ok,
    })
}

fn t_minus(c: &Scalar) -> UniPoly {
    UniPoly::linear(Scalar::one(), -c)
}

fn ladder(a: &ShiftSequence, from: usize, to: usize) -> UniPoly {
    (from..=to).fold(UniPoly::one(), |acc, j| acc.times(&t_minus(&a.get(j))))
}

/// `Π (t - z_i) / Π_{i≤n} (t - a_i)` at numeric `z`.
pub fn x_series(z: &[Scalar], a: &ShiftSequence) -> RatFun {
    let n = z.len();
    let num = UniPoly::from_roots(z);
    RatFun::new(num, ladder(a, 1, n)).expect("monic denominator")
}

/// Check both generating-series identities at a numeric point `z`:
/// the finite one for `e_k` exactly, and the `h_k` series through order `K`
/// together with the exact next coefficient.
pub fn check_generating_series(k_max: usize, a: &ShiftSequence, z: &[Scalar]) -> Result<()> {
    let n = z.len();
    for (i, zi) in z.iter().enumerate() {
        for j in 1..=n + k_max + 1 {
            if *zi == a.get(j) {
                return Err(Error::PoleCollision(format!("z_{} = a_{j} = {zi}", i + 1)));
            }
        }
    }
    let x = x_series(z, a);

    let mut lhs = RatFun::one();
    for k in 1..=n {
        let ek = e_factorial(k, n, a).eval(z)?;
        let term = RatFun::new(UniPoly::constant(ek), ladder(a, n - k + 1, n))?;
        lhs = if k % 2 == 1 { lhs.minus(&term) } else { lhs.plus(&term) };
    }
    if lhs != x {
        return Err(Error::mismatch("e-series", format!("{:?} vs {:?}", lhs, x)));
    }

    let xinv = x.recip()?;
    let mut partial = RatFun::one();
    for k in 1..=k_max {
        let hk = h_factorial(k, n, a).eval(z)?;
        partial = partial.plus(&RatFun::new(UniPoly::constant(hk), ladder(a, n + 1, n + k))?);
    }
    let diff = xinv.minus(&partial);
    let next = h_factorial(k_max + 1, n, a).eval(z)?;
    let order = diff.order_at_infinity();
    let ok = match order {
        None => next.is_zero(),
        Some(o) if o == k_max as i64 + 1 => diff.num().lead() == Some(&next),
        Some(o) => o > k_max as i64 + 1 && next.is_zero(),
    };
    if !ok {
        return Err(Error::mismatch(
            "h-series",
            format!("remainder {:?} has order {:?}; expected t^-{} coefficient {}", diff, order, k_max + 1, next),
        ));
    }
    Ok(())
}
