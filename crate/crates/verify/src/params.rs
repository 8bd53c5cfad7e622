//! Suite parameters and desk-scale guards.

use std::fmt;
use std::ops::RangeInclusive;

/// Tensor dimension cap used when `VERIFY_MAX_CELLS` is unset.
pub const DEFAULT_MAX_CELLS: u64 = 256;

/// Rejected parameters. The command exits with status 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

/// Values fixed on the command line. Unset values fall back to the range
/// each suite declares.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    pub big_n: Option<usize>,
    pub m: Option<usize>,
    pub k: Option<usize>,
    pub big_k: Option<usize>,
    pub seed: u64,
    pub max_cells: u64,
}

impl Default for Params {
    fn default() -> Self {
        Params { big_n: None, m: None, k: None, big_k: None, seed: 0, max_cells: DEFAULT_MAX_CELLS }
    }
}

/// Parse `VERIFY_MAX_CELLS`.
pub fn max_cells_from(var: Option<&str>) -> Result<u64, UsageError> {
    match var {
        None => Ok(DEFAULT_MAX_CELLS),
        Some(s) => match s.trim().parse::<u64>() {
            Ok(v) if v > 0 => Ok(v),
            _ => Err(UsageError(format!("VERIFY_MAX_CELLS must be a positive integer, got {s:?}"))),
        },
    }
}

fn pick(
    name: &str,
    value: Option<usize>,
    default: RangeInclusive<usize>,
    allowed: RangeInclusive<usize>,
) -> Result<Vec<usize>, UsageError> {
    match value {
        Some(v) if allowed.contains(&v) => Ok(vec![v]),
        Some(v) => Err(UsageError(format!(
            "--{name} {v} outside {}..={} for this suite",
            allowed.start(),
            allowed.end()
        ))),
        None => Ok(default.collect()),
    }
}

impl Params {
    pub fn with_env() -> Result<Self, UsageError> {
        let var = std::env::var("VERIFY_MAX_CELLS").ok();
        Ok(Params { max_cells: max_cells_from(var.as_deref())?, ..Params::default() })
    }

    pub fn n_range(&self, default: RangeInclusive<usize>, allowed: RangeInclusive<usize>) -> Result<Vec<usize>, UsageError> {
        let allowed = *allowed.start()..=(*allowed.end()).min(4);
        pick("N", self.big_n, default, allowed)
    }

    /// Even `N` only, for the symplectic suites.
    pub fn even_n_range(&self, default: &[usize], max: usize) -> Result<Vec<usize>, UsageError> {
        match self.big_n {
            Some(v) if v % 2 == 0 && (2..=max.min(4)).contains(&v) => Ok(vec![v]),
            Some(v) => Err(UsageError(format!("--N {v} must be even and at most {}", max.min(4)))),
            None => Ok(default.to_vec()),
        }
    }

    pub fn m_range(&self, default: RangeInclusive<usize>, allowed: RangeInclusive<usize>) -> Result<Vec<usize>, UsageError> {
        pick("m", self.m, default, allowed)
    }

    pub fn k_range(&self, default: RangeInclusive<usize>, allowed: RangeInclusive<usize>) -> Result<Vec<usize>, UsageError> {
        pick("k", self.k, default, allowed)
    }

    pub fn big_k(&self, default: usize, allowed: RangeInclusive<usize>) -> Result<usize, UsageError> {
        Ok(pick("K", self.big_k, default..=default, allowed)?[0])
    }

    /// Whether a tensor power with `base^factors` cells fits under the cap.
    /// Over the cap is a usage error when the offending size was requested
    /// explicitly and a silent skip when it came from a default range.
    pub fn fits(&self, base: usize, factors: usize, explicit: bool) -> Result<bool, UsageError> {
        let cells = (base as u64).saturating_pow(factors as u32);
        if cells <= self.max_cells {
            return Ok(true);
        }
        if explicit {
            return Err(UsageError(format!(
                "tensor size {base}^{factors} = {cells} exceeds the cap {} (VERIFY_MAX_CELLS)",
                self.max_cells
            )));
        }
        Ok(false)
    }

    pub fn any_explicit(&self) -> bool {
        self.big_n.is_some() || self.m.is_some() || self.k.is_some() || self.big_k.is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn env_parsing() {
        assert_eq!(max_cells_from(None), Ok(256));
        assert_eq!(max_cells_from(Some("1024")), Ok(1024));
        assert!(max_cells_from(Some("0")).is_err());
        assert!(max_cells_from(Some("lots")).is_err());
    }

    #[test]
    fn ranges() {
        let p = Params { big_n: Some(3), ..Params::default() };
        assert_eq!(p.n_range(2..=3, 2..=4), Ok(vec![3]));
        assert!(p.even_n_range(&[2, 4], 4).is_err());
        assert_eq!(Params::default().m_range(1..=2, 1..=3), Ok(vec![1, 2]));
        let p = Params { big_n: Some(5), ..Params::default() };
        assert!(p.n_range(2..=3, 2..=8).is_err());
    }

    #[test]
    fn guard() {
        let p = Params::default();
        assert_eq!(p.fits(4, 4, true), Ok(true));
        assert_eq!(p.fits(3, 6, false), Ok(false));
        assert!(p.fits(3, 6, true).is_err());
    }
}
