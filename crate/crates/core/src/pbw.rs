//! Normal forms in universal enveloping algebras.
//!
//! An element is a finite sum of ordered monomials (words of generator ids in
//! nondecreasing order) with coefficients in a commutative ring `C` that is
//! central in the algebra, such as scalars or scalar polynomials in a spectral
//! parameter. Products are straightened with the commutation relations and
//! memoized per algebra instance.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lie::{Family, LieContext};
use crate::poly::{SymPoly, UniPoly};
use crate::ratfun::RatFun;
use crate::ring::{Coeff, Ring};
use crate::scalar::{self, Scalar};

pub type Gen = u16;
pub type Word = Vec<Gen>;

/// Coefficients that can be printed in witnesses.
pub trait Show {
    fn show(&self) -> String;
}

impl Show for Scalar {
    fn show(&self) -> String {
        scalar::render(self)
    }
}

impl Show for UniPoly {
    fn show(&self) -> String {
        self.render("u")
    }
}

impl Show for SymPoly {
    fn show(&self) -> String {
        self.render(&["u", "v", "w"])
    }
}

impl Show for RatFun {
    fn show(&self) -> String {
        self.render("u")
    }
}

/// Sum of ordered monomials with central coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element<C = Scalar> {
    terms: BTreeMap<Word, C>,
}

impl<C> Default for Element<C> {
    fn default() -> Self {
        Element { terms: BTreeMap::new() }
    }
}

impl<C: Coeff> Element<C> {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn constant(c: C) -> Self {
        Self::from_word(Vec::new(), c)
    }

    pub fn scalar(s: Scalar) -> Self {
        Self::constant(C::constant(s))
    }

    pub fn one() -> Self {
        Self::scalar(Scalar::one())
    }

    pub fn from_word(w: Word, c: C) -> Self {
        let mut e = Element::zero();
        e.add_term(w, c);
        e
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[Gen]) -> Option<&C> {
        self.terms.get(w)
    }

    pub fn constant_term(&self) -> C {
        self.terms.get(&Vec::new()).cloned().unwrap_or_else(|| C::constant(Scalar::zero()))
    }

    pub fn add_term(&mut self, w: Word, c: C) {
        if c.vanishes() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(v) => {
                *v = v.plus(&c);
                if v.vanishes() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add_assign(&mut self, other: &Element<C>) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn plus(&self, other: &Element<C>) -> Element<C> {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn negate(&self) -> Element<C> {
        Element { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.negate())).collect() }
    }

    pub fn minus(&self, other: &Element<C>) -> Element<C> {
        self.plus(&other.negate())
    }

    pub fn scaled(&self, s: &Scalar) -> Element<C> {
        let mut out = Element::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.scaled(s));
        }
        out
    }

    /// Multiply every coefficient by a central `c`.
    pub fn times_coeff(&self, c: &C) -> Element<C> {
        let mut out = Element::zero();
        for (w, v) in &self.terms {
            out.add_term(w.clone(), v.times(c));
        }
        out
    }

    /// Largest word length.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.len()).max()
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Element<D> {
        let mut out = Element::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    pub fn try_map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> Result<D>) -> Result<Element<D>> {
        let mut out = Element::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c)?);
        }
        Ok(out)
    }
}

impl Element<Scalar> {
    /// Lift scalar coefficients to another coefficient ring.
    pub fn lift<D: Coeff>(&self) -> Element<D> {
        self.map_coeffs(|c| D::constant(c.clone()))
    }
}

impl Element<UniPoly> {
    pub fn eval_at(&self, u: &Scalar) -> Element<Scalar> {
        self.map_coeffs(|p| p.eval(u))
    }

    pub fn u_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(|p| p.degree()).max()
    }

    /// Coefficient of `u^k` as an element with scalar coefficients.
    pub fn u_coeff(&self, k: usize) -> Element<Scalar> {
        self.map_coeffs(|p| p.coeff(k))
    }

    pub fn shift_u(&self, s: &Scalar) -> Element<UniPoly> {
        self.map_coeffs(|p| p.shift(s))
    }

    pub fn compose_u(&self, q: &UniPoly) -> Element<UniPoly> {
        self.map_coeffs(|p| p.compose(q))
    }

    /// Monic gcd of all coefficients, or `None` for zero.
    pub fn content(&self) -> Option<UniPoly> {
        let mut g: Option<UniPoly> = None;
        for p in self.terms.values() {
            g = Some(match g {
                None => p.monic(),
                Some(g) => g.gcd(p),
            });
        }
        g
    }

    pub fn div_exact_poly(&self, d: &UniPoly) -> Option<Element<UniPoly>> {
        let mut out = Element::zero();
        for (w, p) in &self.terms {
            out.add_term(w.clone(), p.div_exact(d)?);
        }
        Some(out)
    }
}

type Expansion = Rc<Vec<(Word, Scalar)>>;

/// Enveloping algebra of a classical Lie algebra with its PBW basis.
///
/// For `gl_N` the generators are `E_ij` ordered lexicographically by `(i, j)`
/// in label order. For `o_N` and `sp_N` they are the nonzero canonical
/// `F_ij = E_ij - ε_ij E_{-j,-i}`, one per pair `{(i,j), (-j,-i)}` (the
/// lexicographically smaller), in the same order. Structure constants for
/// `o_N` and `sp_N` are computed through their expansion in `gl_N`.
pub struct PbwAlgebra {
    ctx: LieContext,
    gens: Vec<(i32, i32)>,
    index: BTreeMap<(i32, i32), Gen>,
    gl_images: Vec<Vec<((i32, i32), Scalar)>>,
    brackets: Vec<Vec<(Gen, Scalar)>>,
    rmul_cache: RefCell<BTreeMap<(Word, Gen), Expansion>>,
    mul_cache: RefCell<BTreeMap<(Word, Word), Expansion>>,
}

fn gl_bracket(a: (i32, i32), b: (i32, i32)) -> Vec<((i32, i32), Scalar)> {
    let mut out = Vec::new();
    if a.1 == b.0 {
        out.push(((a.0, b.1), Scalar::one()));
    }
    if b.1 == a.0 {
        out.push(((b.0, a.1), -Scalar::one()));
    }
    out
}

fn add_into(map: &mut BTreeMap<(i32, i32), Scalar>, k: (i32, i32), c: Scalar) {
    let v = map.entry(k).or_insert_with(Scalar::zero);
    *v += c;
    if v.is_zero() {
        map.remove(&k);
    }
}

impl PbwAlgebra {
    pub fn new(ctx: &LieContext) -> Result<Self> {
        let labels = ctx.labels().to_vec();
        let mut gens = Vec::new();
        let mut gl_images = Vec::new();
        for &i in &labels {
            for &j in &labels {
                match ctx.family() {
                    Family::Gl => {
                        gens.push((i, j));
                        gl_images.push(vec![((i, j), Scalar::one())]);
                    }
                    Family::So | Family::Sp => {
                        let partner = (-j, -i);
                        let eps = scalar::int(ctx.eps(i, j) as i64);
                        if partner == (i, j) {
                            if ctx.family() == Family::Sp {
                                gens.push((i, j));
                                gl_images.push(vec![((i, j), scalar::int(2))]);
                            }
                        } else if (i, j) < partner {
                            gens.push((i, j));
                            gl_images.push(vec![((i, j), Scalar::one()), (partner, -eps)]);
                        }
                    }
                }
            }
        }
        if gens.len() > Gen::MAX as usize {
            return Err(Error::Domain("too many generators".into()));
        }
        let index: BTreeMap<(i32, i32), Gen> = gens.iter().enumerate().map(|(g, p)| (*p, g as Gen)).collect();

        let dim = gens.len();
        let mut brackets = Vec::with_capacity(dim * dim);
        for a in 0..dim {
            for b in 0..dim {
                let mut acc: BTreeMap<(i32, i32), Scalar> = BTreeMap::new();
                for (ea, ca) in &gl_images[a] {
                    for (eb, cb) in &gl_images[b] {
                        for (e, c) in gl_bracket(*ea, *eb) {
                            add_into(&mut acc, e, c * ca * cb);
                        }
                    }
                }
                // re-express in the generator basis
                let mut combo = Vec::new();
                let mut check = acc.clone();
                for (g, img) in gl_images.iter().enumerate() {
                    let (lead, lc) = &img[0];
                    if let Some(c) = acc.get(lead) {
                        let coef = c / lc;
                        for (e, v) in img {
                            add_into(&mut check, *e, -(&coef * v));
                        }
                        combo.push((g as Gen, coef));
                    }
                }
                if !check.is_empty() {
                    return Err(Error::Consistency(format!(
                        "bracket of {:?} and {:?} leaves the subalgebra",
                        gens[a], gens[b]
                    )));
                }
                brackets.push(combo);
            }
        }
        Ok(PbwAlgebra {
            ctx: ctx.clone(),
            gens,
            index,
            gl_images,
            brackets,
            rmul_cache: RefCell::new(BTreeMap::new()),
            mul_cache: RefCell::new(BTreeMap::new()),
        })
    }

    pub fn context(&self) -> &LieContext {
        &self.ctx
    }

    pub fn dim(&self) -> usize {
        self.gens.len()
    }

    /// Label pair of a generator.
    pub fn gen_labels(&self, g: Gen) -> (i32, i32) {
        self.gens[g as usize]
    }

    pub fn gen_id(&self, i: i32, j: i32) -> Option<Gen> {
        self.index.get(&(i, j)).copied()
    }

    /// Expansion of a generator in the `E_ij` of `gl_N`.
    pub fn gl_image(&self, g: Gen) -> &[((i32, i32), Scalar)] {
        &self.gl_images[g as usize]
    }

    /// Structure constants: `[g, h]` as a combination of generators.
    pub fn bracket_gens(&self, g: Gen, h: Gen) -> &[(Gen, Scalar)] {
        &self.brackets[g as usize * self.gens.len() + h as usize]
    }

    /// `E_ij` for `gl_N`, or `F_ij` (possibly a multiple of a canonical
    /// generator, possibly zero) for `o_N` and `sp_N`.
    pub fn generator<C: Coeff>(&self, i: i32, j: i32) -> Result<Element<C>> {
        let idx = self.ctx.index();
        if !idx.contains(i) || !idx.contains(j) {
            return Err(Error::Domain(format!("index ({i},{j}) outside {}", self.ctx.name())));
        }
        if let Some(g) = self.gen_id(i, j) {
            return Ok(Element::from_word(vec![g], C::constant(Scalar::one())));
        }
        // (i, j) is the partner of a canonical pair, or a vanishing F_{i,-i}
        match self.gen_id(-j, -i) {
            Some(g) => {
                let c = -scalar::int(self.ctx.eps(i, j) as i64);
                Ok(Element::from_word(vec![g], C::constant(c)))
            }
            None => Ok(Element::zero()),
        }
    }

    pub fn letter(&self) -> char {
        match self.ctx.family() {
            Family::Gl => 'E',
            _ => 'F',
        }
    }

    fn rmul_gen(&self, w: &[Gen], g: Gen) -> Expansion {
        let t = w.partition_point(|&x| x <= g);
        if t == w.len() {
            let mut nw = w.to_vec();
            nw.push(g);
            return Rc::new(vec![(nw, Scalar::one())]);
        }
        let key = (w.to_vec(), g);
        if let Some(e) = self.rmul_cache.borrow().get(&key) {
            return e.clone();
        }
        let mut out: BTreeMap<Word, Scalar> = BTreeMap::new();
        let mut sorted = w[..t].to_vec();
        sorted.push(g);
        sorted.extend_from_slice(&w[t..]);
        out.insert(sorted, Scalar::one());
        for s in t..w.len() {
            for (c, coef) in self.bracket_gens(w[s], g) {
                let mut cur: BTreeMap<Word, Scalar> = BTreeMap::new();
                for (nw, v) in self.rmul_gen(&w[..s], *c).iter() {
                    acc_scalar(&mut cur, nw.clone(), v * coef);
                }
                for &v in &w[s + 1..] {
                    let mut next = BTreeMap::new();
                    for (cw, cv) in &cur {
                        for (nw, x) in self.rmul_gen(cw, v).iter() {
                            acc_scalar(&mut next, nw.clone(), cv * x);
                        }
                    }
                    cur = next;
                }
                for (cw, cv) in cur {
                    acc_scalar(&mut out, cw, cv);
                }
            }
        }
        let e: Expansion = Rc::new(out.into_iter().collect());
        self.rmul_cache.borrow_mut().insert(key, e.clone());
        e
    }

    /// Normal form of the product of two ordered words.
    pub fn mul_words(&self, a: &[Gen], b: &[Gen]) -> Expansion {
        if b.is_empty() {
            return Rc::new(vec![(a.to_vec(), Scalar::one())]);
        }
        if a.is_empty() || a.last() <= b.first() {
            let mut w = a.to_vec();
            w.extend_from_slice(b);
            return Rc::new(vec![(w, Scalar::one())]);
        }
        let key = (a.to_vec(), b.to_vec());
        if let Some(e) = self.mul_cache.borrow().get(&key) {
            return e.clone();
        }
        let mut cur: BTreeMap<Word, Scalar> = BTreeMap::new();
        cur.insert(a.to_vec(), Scalar::one());
        for &g in b {
            let mut next = BTreeMap::new();
            for (w, c) in &cur {
                for (nw, x) in self.rmul_gen(w, g).iter() {
                    acc_scalar(&mut next, nw.clone(), c * x);
                }
            }
            cur = next;
        }
        let e: Expansion = Rc::new(cur.into_iter().collect());
        self.mul_cache.borrow_mut().insert(key, e.clone());
        e
    }

    pub fn mul<C: Coeff>(&self, a: &Element<C>, b: &Element<C>) -> Element<C> {
        let mut out: BTreeMap<Word, C> = BTreeMap::new();
        for (w1, c1) in &a.terms {
            for (w2, c2) in &b.terms {
                let c12 = c1.times(c2);
                for (w, s) in self.mul_words(w1, w2).iter() {
                    let t = c12.scaled(s);
                    match out.get_mut(w) {
                        Some(v) => *v = v.plus(&t),
                        None => {
                            out.insert(w.clone(), t);
                        }
                    }
                }
            }
        }
        out.retain(|_, v| !v.vanishes());
        Element { terms: out }
    }

    pub fn product<C: Coeff>(&self, factors: &[Element<C>]) -> Element<C> {
        factors.iter().fold(Element::one(), |acc, f| self.mul(&acc, f))
    }

    pub fn commutator<C: Coeff>(&self, a: &Element<C>, b: &Element<C>) -> Element<C> {
        self.mul(a, b).minus(&self.mul(b, a))
    }

    /// Lie bracket of two elements of the Lie algebra itself (linear elements).
    pub fn bracket(&self, a: &Element<Scalar>, b: &Element<Scalar>) -> Result<Element<Scalar>> {
        if a.degree().unwrap_or(0) > 1 || b.degree().unwrap_or(0) > 1 {
            return Err(Error::Domain("bracket expects Lie algebra elements".into()));
        }
        Ok(self.commutator(a, b))
    }

    /// `[x, g] = 0` for every generator `g`, or a witness.
    pub fn check_central<C: Coeff + Show>(&self, x: &Element<C>) -> Result<()> {
        for g in 0..self.dim() as Gen {
            let ge = Element::from_word(vec![g], C::constant(Scalar::one()));
            let c = self.commutator(x, &ge);
            if let Some((w, v)) = c.terms.iter().next() {
                return Err(Error::mismatch(
                    format!("commutator with {}", self.render_word(&[g])),
                    format!("{} * {}", v.show(), self.render_word(w)),
                ));
            }
        }
        Ok(())
    }

    /// Image in the enveloping algebra of `gl_N` under the defining embedding.
    pub fn embed<C: Coeff>(&self, x: &Element<C>, gl: &PbwAlgebra) -> Result<Element<C>> {
        if gl.ctx.family() != Family::Gl || gl.ctx.labels() != self.ctx.labels() {
            return Err(Error::Domain("embedding target must be gl_N with the same labels".into()));
        }
        let mut images: Vec<Element<C>> = Vec::with_capacity(self.dim());
        for g in 0..self.dim() {
            let mut e = Element::zero();
            for ((i, j), c) in &self.gl_images[g] {
                e.add_assign(&gl.generator::<C>(*i, *j)?.scaled(c));
            }
            images.push(e);
        }
        let mut out = Element::zero();
        for (w, c) in &x.terms {
            let factors: Vec<Element<C>> = w.iter().map(|g| images[*g as usize].clone()).collect();
            out.add_assign(&gl.product(&factors).times_coeff(c));
        }
        Ok(out)
    }

    pub fn render_word(&self, w: &[Gen]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let parts: Vec<String> = w
            .iter()
            .map(|g| {
                let (i, j) = self.gens[*g as usize];
                format!("{}({},{})", self.letter(), i, j)
            })
            .collect();
        parts.join("*")
    }

    pub fn render<C: Coeff + Show>(&self, x: &Element<C>) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> =
            x.terms.iter().map(|(w, c)| format!("({})*{}", c.show(), self.render_word(w))).collect();
        parts.join(" + ")
    }

    /// First monomial where `a` and `b` differ, rendered canonically.
    pub fn first_difference<C: Coeff + Show>(&self, a: &Element<C>, b: &Element<C>) -> Option<String> {
        let d = a.minus(b);
        let (w, _) = d.terms.iter().next()?;
        let zero = C::constant(Scalar::zero());
        let ca = a.terms.get(w).unwrap_or(&zero);
        let cb = b.terms.get(w).unwrap_or(&zero);
        Some(format!("{}: {} vs {}", self.render_word(w), ca.show(), cb.show()))
    }

    /// `Ok` if equal, otherwise a mismatch carrying the first differing monomial.
    pub fn expect_eq<C: Coeff + Show>(&self, check: &str, a: &Element<C>, b: &Element<C>) -> Result<()> {
        match self.first_difference(a, b) {
            None => Ok(()),
            Some(w) => Err(Error::mismatch(check, w)),
        }
    }

    /// Number of memoized straightening results.
    pub fn cache_len(&self) -> usize {
        self.rmul_cache.borrow().len() + self.mul_cache.borrow().len()
    }
}

fn acc_scalar(map: &mut BTreeMap<Word, Scalar>, w: Word, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&w) {
        Some(v) => {
            *v += c;
            if v.is_zero() {
                map.remove(&w);
            }
        }
        None => {
            map.insert(w, c);
        }
    }
}
