use crate::error::{Error, Result};

/// Default bound on candidate tuples examined by one exhaustive search.
pub const DEFAULT_MAX_ENUMERATION: u64 = 1_000_000;

/// Configuration shared by every exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_enumeration: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_enumeration: DEFAULT_MAX_ENUMERATION,
        }
    }
}

impl Limits {
    pub fn new(max_enumeration: u64) -> Self {
        Limits { max_enumeration }
    }

    pub(crate) fn budget(&self) -> Budget {
        Budget {
            used: 0,
            limit: self.max_enumeration,
        }
    }

    /// Fails when a search space of `size` candidates would exceed the bound.
    pub(crate) fn guard(&self, size: u128) -> Result<()> {
        if size > self.max_enumeration as u128 {
            Err(Error::EnumerationBound {
                limit: self.max_enumeration,
            })
        } else {
            Ok(())
        }
    }
}

/// Running counter for one search; exceeding the limit is an error, never a
/// silent truncation.
#[derive(Debug)]
pub(crate) struct Budget {
    used: u64,
    limit: u64,
}

impl Budget {
    pub(crate) fn spend(&mut self, n: u64) -> Result<()> {
        self.used = self.used.saturating_add(n);
        if self.used > self.limit {
            Err(Error::EnumerationBound { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

/// `base^exp` saturating in u128, for size guards.
pub(crate) fn pow_size(base: usize, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}
