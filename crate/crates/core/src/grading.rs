//! Height grading of the Lie algebra induced by `ζ = Σ ω_i^∨`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{Coweight, RootSystem, MAX_COORD};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradingProfile {
    rank: usize,
    /// Number of roots of each nonzero height.
    counts: BTreeMap<i64, usize>,
    exponents: Vec<u32>,
    coxeter: u32,
}

impl GradingProfile {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `dim g_h`: the number of roots of height `h`, or the rank at `h = 0`.
    pub fn dim(&self, h: i64) -> usize {
        if h == 0 {
            self.rank
        } else {
            self.counts.get(&h).copied().unwrap_or(0)
        }
    }

    pub fn counts(&self) -> &BTreeMap<i64, usize> {
        &self.counts
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn coxeter(&self) -> u32 {
        self.coxeter
    }

    pub fn max_height(&self) -> i64 {
        i64::from(self.coxeter) - 1
    }
}

pub fn grading_profile(rs: &RootSystem) -> GradingProfile {
    let mut counts = BTreeMap::new();
    for r in rs.roots() {
        *counts.entry(r.height()).or_insert(0usize) += 1;
    }
    let max_height = counts.keys().copied().max().unwrap_or(0);
    let count = |h: i64| counts.get(&h).copied().unwrap_or(0);

    // Exponents are the conjugate partition of the positive height counts:
    // the number of exponents equal to k is counts(k) - counts(k+1).
    let mut exponents = Vec::with_capacity(rs.rank());
    for k in 1..=max_height {
        let here = count(k);
        let next = count(k + 1);
        debug_assert!(here >= next, "height counts must be non-increasing");
        for _ in 0..here.saturating_sub(next) {
            exponents.push(k as u32);
        }
    }

    GradingProfile {
        rank: rs.rank(),
        counts,
        exponents,
        coxeter: max_height as u32 + 1,
    }
}

/// `μ_can = (2g - 2) Σ ω_i^∨`.
pub fn mu_can(rs: &RootSystem, genus: i64) -> Result<Coweight> {
    check_genus(genus)?;
    Ok(Coweight::new(vec![2 * genus - 2; rs.rank()]))
}

pub(crate) fn check_genus(genus: i64) -> Result<()> {
    if genus < 2 {
        return Err(Error::Genus(genus));
    }
    if genus > MAX_COORD {
        return Err(Error::CoordinateRange(genus));
    }
    Ok(())
}
