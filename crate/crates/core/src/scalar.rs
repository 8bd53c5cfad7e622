//! Arbitrary-precision rationals.

use alloc::string::{String, ToString};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `n/d` in lowest terms. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn factorial(n: usize) -> Scalar {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Scalar::from_integer(acc)
}

pub fn binomial(n: usize, k: usize) -> Scalar {
    if k > n {
        return zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

pub fn pow(x: &Scalar, e: u32) -> Scalar {
    let mut acc = one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

/// Sign of an index label; zero counts as positive.
pub fn sgn(i: i32) -> i32 {
    if i < 0 {
        -1
    } else {
        1
    }
}

pub fn is_integer(x: &Scalar) -> bool {
    x.is_integer()
}

pub fn abs(x: &Scalar) -> Scalar {
    x.abs()
}

pub fn render(x: &Scalar) -> String {
    x.to_string()
}
