//! Determinants and permanents over commutative rings.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::scalar::Scalar;
use num_traits::{One, Zero};

fn check_square<R>(m: &[Vec<R>]) -> Result<usize> {
    let n = m.len();
    if n == 0 {
        return Err(Error::Dimension("empty matrix".into()));
    }
    if let Some(r) = m.iter().find(|r| r.len() != n) {
        return Err(Error::Dimension(format!("row of length {} in {}x{} matrix", r.len(), n, n)));
    }
    Ok(n)
}

fn minor<R: Clone>(m: &[Vec<R>], col: usize) -> Vec<Vec<R>> {
    m[1..]
        .iter()
        .map(|r| r.iter().enumerate().filter(|(j, _)| *j != col).map(|(_, x)| x.clone()).collect())
        .collect()
}

fn expand<R: Ring>(m: &[Vec<R>], signed: bool) -> R {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let mut acc = m[0][0].zero_like();
    for j in 0..m.len() {
        if m[0][j].vanishes() {
            continue;
        }
        let t = m[0][j].times(&expand(&minor(m, j), signed));
        acc = if signed && j % 2 == 1 { acc.minus(&t) } else { acc.plus(&t) };
    }
    acc
}

/// Fraction-free elimination; `None` when the ring lacks exact division.
fn bareiss<R: Ring>(m: &[Vec<R>]) -> Option<R> {
    let n = m.len();
    let mut a: Vec<Vec<R>> = m.to_vec();
    let mut sign = false;
    let mut prev = m[0][0].one_like();
    for k in 0..n - 1 {
        if a[k][k].vanishes() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].vanishes()) else {
                return Some(m[0][0].zero_like());
            };
            a.swap(k, p);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[k][k].times(&a[i][j]).minus(&a[i][k].times(&a[k][j]));
                a[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Some(if sign { d.negate() } else { d })
}

/// Determinant. Cofactor expansion up to size 4, fraction-free elimination
/// above that when the ring divides exactly, cofactor expansion otherwise.
pub fn det<R: Ring>(m: &[Vec<R>]) -> Result<R> {
    let n = check_square(m)?;
    if n > 4 {
        if let Some(d) = bareiss(m) {
            return Ok(d);
        }
    }
    Ok(expand(m, true))
}

/// Permanent by row expansion.
pub fn per<R: Ring>(m: &[Vec<R>]) -> Result<R> {
    check_square(m)?;
    Ok(expand(m, false))
}

/// Determinant by the Leibniz sum; an independent oracle for tests.
pub fn det_leibniz<R: Ring>(m: &[Vec<R>]) -> Result<R> {
    let n = check_square(m)?;
    let mut acc = m[0][0].zero_like();
    for (p, s) in crate::combinat::permutations(n) {
        let mut t = m[0][p[0]].clone();
        for i in 1..n {
            t = t.times(&m[i][p[i]]);
        }
        acc = if s > 0 { acc.plus(&t) } else { acc.minus(&t) };
    }
    Ok(acc)
}

/// Unique solution of `A x = b` over the rationals for a possibly
/// overdetermined but consistent system.
pub fn solve(a: &[Vec<Scalar>], b: &[Scalar]) -> Result<Vec<Scalar>> {
    let rows = a.len();
    if rows != b.len() {
        return Err(Error::Dimension(format!("{rows} rows, {} right-hand sides", b.len())));
    }
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<Scalar>> =
        a.iter().zip(b).map(|(r, v)| r.iter().cloned().chain(core::iter::once(v.clone())).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = Scalar::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=cols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if pivots.len() < cols {
        return Err(Error::Singular(format!("rank {} < {cols} unknowns", pivots.len())));
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return Err(Error::Singular("inconsistent system".into()));
    }
    Ok((0..cols).map(|i| m[i][cols].clone()).collect())
}
