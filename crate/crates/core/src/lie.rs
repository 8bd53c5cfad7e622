//! Index sets, bilinear forms and the classical Lie algebra contexts.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};
use crate::symfun::{Partition, ShiftSequence};

/// Ordered set of integer index labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexSet {
    labels: Vec<i32>,
}

impl IndexSet {
    /// `1, 2, ..., N`.
    pub fn standard(n: usize) -> Self {
        IndexSet { labels: (1..=n as i32).collect() }
    }

    /// `-n, ..., -1, 1, ..., n` for `N = 2n`, with `0` inserted for `N = 2n + 1`.
    pub fn symmetric(big_n: usize) -> Self {
        let n = (big_n / 2) as i32;
        let mut labels: Vec<i32> = (-n..=-1).collect();
        if big_n % 2 == 1 {
            labels.push(0);
        }
        labels.extend(1..=n);
        IndexSet { labels }
    }

    pub fn labels(&self) -> &[i32] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn pos(&self, label: i32) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    pub fn contains(&self, label: i32) -> bool {
        self.pos(label).is_some()
    }

    /// Closed under `i -> -i`.
    pub fn is_symmetric(&self) -> bool {
        self.labels.iter().all(|i| self.contains(-i))
    }
}

/// The form defining the orthogonal or symplectic algebra, through
/// `ε_ij = 1` or `ε_ij = sgn i · sgn j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Form {
    Orthogonal,
    Symplectic,
}

impl Form {
    pub fn eps(self, i: i32, j: i32) -> i32 {
        match self {
            Form::Orthogonal => 1,
            Form::Symplectic => scalar::sgn(i) * scalar::sgn(j),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Gl,
    So,
    Sp,
}

/// A classical Lie algebra of `N x N` matrices with its index labelling.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieContext {
    family: Family,
    big_n: usize,
    index: IndexSet,
}

impl LieContext {
    /// `gl_N` with indices `1..N`.
    pub fn gl(big_n: usize) -> Result<Self> {
        if big_n == 0 {
            return Err(Error::Domain("gl_0".into()));
        }
        Ok(LieContext { family: Family::Gl, big_n, index: IndexSet::standard(big_n) })
    }

    /// `gl_N` with the symmetric labelling used alongside `o_N` and `sp_N`.
    pub fn gl_symmetric(big_n: usize) -> Result<Self> {
        if big_n == 0 {
            return Err(Error::Domain("gl_0".into()));
        }
        Ok(LieContext { family: Family::Gl, big_n, index: IndexSet::symmetric(big_n) })
    }

    pub fn so(big_n: usize) -> Result<Self> {
        if big_n < 2 {
            return Err(Error::Domain(format!("o_{big_n} has rank zero")));
        }
        Ok(LieContext { family: Family::So, big_n, index: IndexSet::symmetric(big_n) })
    }

    pub fn sp(big_n: usize) -> Result<Self> {
        if big_n < 2 || big_n % 2 == 1 {
            return Err(Error::Domain(format!("sp_{big_n} needs even N >= 2")));
        }
        Ok(LieContext { family: Family::Sp, big_n, index: IndexSet::symmetric(big_n) })
    }

    pub fn new(family: Family, big_n: usize) -> Result<Self> {
        match family {
            Family::Gl => Self::gl(big_n),
            Family::So => Self::so(big_n),
            Family::Sp => Self::sp(big_n),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn big_n(&self) -> usize {
        self.big_n
    }

    /// Rank `n = [N/2]` for the orthogonal and symplectic families.
    pub fn n(&self) -> usize {
        self.big_n / 2
    }

    pub fn index(&self) -> &IndexSet {
        &self.index
    }

    pub fn labels(&self) -> &[i32] {
        self.index.labels()
    }

    pub fn form(&self) -> Option<Form> {
        match self.family {
            Family::Gl => None,
            Family::So => Some(Form::Orthogonal),
            Family::Sp => Some(Form::Symplectic),
        }
    }

    pub fn eps(&self, i: i32, j: i32) -> i32 {
        self.form().map_or(1, |f| f.eps(i, j))
    }

    pub fn name(&self) -> String {
        let f = match self.family {
            Family::Gl => "gl",
            Family::So => "so",
            Family::Sp => "sp",
        };
        format!("{f}_{}", self.big_n)
    }

    /// The shift `ε` in `ρ = (ε+n-1, ..., ε)`: `0`, `1/2`, `1` for
    /// `o_{2n}`, `o_{2n+1}`, `sp_{2n}`.
    pub fn rho_shift(&self) -> Result<Scalar> {
        match self.family {
            Family::So if self.big_n % 2 == 0 => Ok(scalar::int(0)),
            Family::So => Ok(scalar::frac(1, 2)),
            Family::Sp => Ok(scalar::int(1)),
            Family::Gl => Err(Error::Domain("gl has no orthogonal-type rho".into())),
        }
    }

    /// `η = 1/2` for `o_N`, `-1/2` for `sp_N`.
    pub fn eta(&self) -> Result<Scalar> {
        match self.family {
            Family::So => Ok(scalar::frac(1, 2)),
            Family::Sp => Ok(scalar::frac(-1, 2)),
            Family::Gl => Err(Error::Domain("eta is defined for o_N and sp_N".into())),
        }
    }

    pub fn rho(&self) -> Result<Vec<Scalar>> {
        let e = self.rho_shift()?;
        let n = self.n();
        Ok((1..=n).map(|p| &e + scalar::int((n - p) as i64)).collect())
    }

    /// `a_k = (ε + k - 1)^2`.
    pub fn shift_sequence(&self) -> Result<ShiftSequence> {
        Ok(ShiftSequence::shifted_squares(self.rho_shift()?))
    }

    /// `l_p = λ_p + ρ_p`.
    pub fn l_values(&self, lambda: &Partition) -> Result<Vec<Scalar>> {
        let n = self.n();
        if lambda.len() > n {
            return Err(Error::Domain(format!("{lambda} has more than {n} parts")));
        }
        Ok(self
            .rho()?
            .into_iter()
            .enumerate()
            .map(|(p, r)| r + scalar::int(lambda.part(p + 1) as i64))
            .collect())
    }
}
