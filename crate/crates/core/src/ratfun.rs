//! Univariate rational functions in `u` over [`Scalar`].

use alloc::format;
use alloc::string::String;
use core::fmt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::ring::{Coeff, Ring};
use crate::scalar::Scalar;

/// `num / den` with `gcd(num, den) = 1` and `den` monic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: UniPoly,
    den: UniPoly,
}

impl RatFun {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(RatFun::zero());
        }
        let g = num.gcd(&den);
        let num = num.div_rem(&g)?.0;
        let den = den.div_rem(&g)?.0;
        let lead = den.lead().unwrap().clone();
        let inv = Scalar::one() / lead;
        Ok(RatFun { num: num.scaled(&inv), den: den.scaled(&inv) })
    }

    pub fn zero() -> Self {
        RatFun { num: UniPoly::zero(), den: UniPoly::one() }
    }

    pub fn one() -> Self {
        RatFun::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        RatFun { num: UniPoly::constant(c), den: UniPoly::one() }
    }

    pub fn poly(p: UniPoly) -> Self {
        RatFun { num: p, den: UniPoly::one() }
    }

    pub fn u() -> Self {
        RatFun::poly(UniPoly::u())
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<RatFun> {
        if self.num.is_zero() {
            return Err(Error::Domain("reciprocal of zero".into()));
        }
        RatFun::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &RatFun) -> Result<RatFun> {
        Ok(self.times(&other.recip()?))
    }

    /// Value at `x`; an error at a genuine pole.
    pub fn eval(&self, x: &Scalar) -> Result<Scalar> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole(format!("u = {x}")));
        }
        Ok(self.num.eval(x) / d)
    }

    /// Order of vanishing at infinity: `deg den - deg num`.
    pub fn order_at_infinity(&self) -> Option<i64> {
        let dn = self.num.degree()? as i64;
        Some(self.den.degree().unwrap() as i64 - dn)
    }

    /// `f(u + s)`.
    pub fn shift(&self, s: &Scalar) -> RatFun {
        RatFun::new(self.num.shift(s), self.den.shift(s)).expect("shift keeps denominator nonzero")
    }

    /// `f(q(u))` for a polynomial `q`.
    pub fn compose(&self, q: &UniPoly) -> RatFun {
        RatFun::new(self.num.compose(q), self.den.compose(q)).expect("nonconstant substitution")
    }

    pub fn render(&self, var: &str) -> String {
        if self.den == UniPoly::one() {
            self.num.render(var)
        } else {
            format!("({}) / ({})", self.num.render(var), self.den.render(var))
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("u"))
    }
}

impl Ring for RatFun {
    fn zero_like(&self) -> Self {
        RatFun::zero()
    }
    fn one_like(&self) -> Self {
        RatFun::one()
    }
    fn vanishes(&self) -> bool {
        self.num.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        let num = self.num.times(&other.den).plus(&other.num.times(&self.den));
        RatFun::new(num, self.den.times(&other.den)).expect("nonzero denominators")
    }
    fn negate(&self) -> Self {
        RatFun { num: self.num.negate(), den: self.den.clone() }
    }
    fn times(&self, other: &Self) -> Self {
        RatFun::new(self.num.times(&other.num), self.den.times(&other.den)).expect("nonzero denominators")
    }
    fn scaled(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return RatFun::zero();
        }
        RatFun { num: self.num.scaled(c), den: self.den.clone() }
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        self.div(d).ok()
    }
}

impl Coeff for RatFun {
    fn constant(c: Scalar) -> Self {
        RatFun::constant(c)
    }
}
