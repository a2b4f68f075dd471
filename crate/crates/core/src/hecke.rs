//! Multiplicity divisors of Borel-type fixed points, the very-stability test,
//! Hecke admissibility and wobbly witnesses.
//!
//! A fixed point is recorded by its multiplicity vectors: at each point `c`
//! of the curve, the vanishing orders `(a_1^c, ..., a_r^c)` of the simple-root
//! components of the Higgs field, packaged as the coweight
//! `μ_c = Σ_i a_i^c ω_i^∨`. Curve points are opaque labels.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{Coweight, Root, RootSystem};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiplicityDivisor {
    entries: BTreeMap<String, Coweight>,
}

impl MultiplicityDivisor {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds the multiplicity vector at `point`. Zero vectors are dropped.
    pub fn insert(&mut self, point: impl Into<String>, mu: Coweight) -> Result<()> {
        let point = point.into();
        if point.is_empty() || point.contains([':', ';']) {
            return Err(Error::Parse(format!("bad point label `{point}`")));
        }
        if let Some((_, first)) = self.entries.iter().next() {
            if first.rank() != mu.rank() {
                return Err(Error::RankMismatch {
                    expected: first.rank(),
                    got: mu.rank(),
                });
            }
        }
        if !mu.is_dominant() {
            return Err(Error::NotDominant(mu.to_string()));
        }
        mu.check_range()?;
        if self.entries.contains_key(&point) {
            return Err(Error::Parse(format!("duplicate point label `{point}`")));
        }
        if !mu.is_zero() {
            self.entries.insert(point, mu);
        }
        Ok(())
    }

    pub fn entries(&self) -> &BTreeMap<String, Coweight> {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `μ = Σ_c μ_c`.
    pub fn total(&self, rank: usize) -> Coweight {
        self.entries
            .values()
            .fold(Coweight::zero(rank), |acc, mu| &acc + mu)
    }

    fn check_rank(&self, rs: &RootSystem) -> Result<()> {
        for mu in self.entries.values() {
            if mu.rank() != rs.rank() {
                return Err(Error::RankMismatch {
                    expected: rs.rank(),
                    got: mu.rank(),
                });
            }
        }
        Ok(())
    }
}

impl FromStr for MultiplicityDivisor {
    type Err = Error;

    /// `c1:1,0,0;c2:0,2,0`. The empty string is the empty divisor.
    fn from_str(s: &str) -> Result<Self> {
        let mut div = MultiplicityDivisor::new();
        for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (label, coords) = part
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("missing `:` in `{part}`")))?;
            div.insert(label.trim(), coords.parse()?)?;
        }
        Ok(div)
    }
}

impl fmt::Display for MultiplicityDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (label, mu)) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(";")?;
            }
            write!(f, "{label}:{mu}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub point: String,
    /// `α^∨` in the fundamental-coweight basis.
    pub coroot: Coweight,
    pub root: Root,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub very_stable: bool,
    pub witnesses: Vec<Witness>,
}

impl Verdict {
    fn from_witnesses(witnesses: Vec<Witness>) -> Self {
        Verdict {
            very_stable: witnesses.is_empty(),
            witnesses,
        }
    }
}

/// Very stable iff every `μ_c` is minuscule; each other point gets a witness.
pub fn classify(rs: &RootSystem, div: &MultiplicityDivisor) -> Result<Verdict> {
    div.check_rank(rs)?;
    let mut witnesses = Vec::new();
    for (point, mu) in div.entries() {
        if !rs.is_minuscule(mu)? {
            let (root, coroot) = wobbly_witness(rs, mu)?;
            witnesses.push(Witness {
                point: point.clone(),
                coroot,
                root,
            });
        }
    }
    Ok(Verdict::from_witnesses(witnesses))
}

/// Whether the Hecke curve through `z^μ` along `alpha` can be applied at a
/// point with multiplicity vector `a`: for every simple index `i` and every
/// `0 <= l` with `α_i + l·α` a root, `a_i - b_i - l >= 0` where `b = μ`.
///
/// `alpha` must be positive with `<alpha, mu> >= 1`; violations are reported
/// as `Error::Precondition`, distinct from a `false` verdict.
pub fn lemma_admissible(
    rs: &RootSystem,
    a: &Coweight,
    mu: &Coweight,
    alpha: &Root,
) -> Result<bool> {
    for cw in [a, mu] {
        if cw.rank() != rs.rank() {
            return Err(Error::RankMismatch {
                expected: rs.rank(),
                got: cw.rank(),
            });
        }
    }
    if !alpha.is_positive() || !rs.is_root(alpha.simple_coords()) {
        return Err(Error::Precondition("alpha must be a positive root".into()));
    }
    if rs.pairing(alpha, mu)? - 1 < 0 {
        return Err(Error::Precondition(format!(
            "<alpha, mu> - 1 must be nonnegative for mu = {mu}"
        )));
    }
    Ok((0..rs.rank()).all(|i| {
        // The string α_i + lα is unbroken from l = 0, so checking the largest
        // l suffices.
        let reach = rs.root_string_reach(i, alpha) as i64;
        a.coords()[i] - mu.coords()[i] - reach >= 0
    }))
}

/// A positive root `α` such that `μ - α^∨` is dominant and the Hecke curve of
/// type `α^∨` along `α` is admissible at multiplicity `μ`. Searches the
/// positive roots by increasing height, then lexicographically.
pub fn wobbly_witness(rs: &RootSystem, mu: &Coweight) -> Result<(Root, Coweight)> {
    if rs.is_minuscule(mu)? {
        return Err(Error::Minuscule(mu.to_string()));
    }
    for alpha in rs.positive_roots() {
        let coroot = alpha.coroot();
        if !(mu - &coroot).is_dominant() {
            continue;
        }
        if lemma_admissible(rs, mu, &coroot, alpha)? {
            return Ok((alpha.clone(), coroot));
        }
    }
    Err(Error::WitnessNotFound(mu.to_string()))
}

/// Multiplicity vector after the Hecke transformation by `z^b`: `a - b`.
pub fn hecke_shift(a: &Coweight, b: &Coweight) -> Result<Coweight> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch {
            expected: a.rank(),
            got: b.rank(),
        });
    }
    if let Some(i) = (0..a.rank()).find(|&i| b.coords()[i] < 0 || b.coords()[i] > a.coords()[i]) {
        return Err(Error::Precondition(format!(
            "need 0 <= b_{} <= a_{}, got b = {b}, a = {a}",
            i + 1,
            i + 1
        )));
    }
    Ok(a - b)
}

/// Coefficients of the highest root in the simple-root basis. For classical
/// groups these are the weights of the divisor that must be reduced.
pub fn classical_weights(rs: &RootSystem) -> Result<Vec<i64>> {
    Ok(rs.highest_root()?.simple_coords().to_vec())
}

/// Very-stability from section vanishing orders for `SL_n`, `SO_{2n+1}`,
/// `Sp_{2n}` and `SO_{2n}`: the divisor `Σ_i w_i·(zeros of the i-th section)`
/// must be reduced, with `w` from [`classical_weights`]. The last entry of
/// each order vector is `η` for types B, C and D.
pub fn classify_classical(rs: &RootSystem, orders: &BTreeMap<String, Vec<i64>>) -> Result<Verdict> {
    let ty = rs
        .cartan_type()
        .as_simple()
        .ok_or_else(|| Error::NotSimple(rs.cartan_type().to_string()))?;
    if !ty.family().is_classical() {
        return Err(Error::NotCovered(ty.to_string()));
    }
    let weights = classical_weights(rs)?;
    let mut witnesses = Vec::new();
    for (point, ord) in orders {
        if ord.len() != rs.rank() {
            return Err(Error::RankMismatch {
                expected: rs.rank(),
                got: ord.len(),
            });
        }
        if ord.iter().any(|&o| o < 0) {
            return Err(Error::NotDominant(Coweight::new(ord.clone()).to_string()));
        }
        let weighted: i64 = weights.iter().zip(ord).map(|(w, o)| w * o).sum();
        if weighted > 1 {
            let (root, coroot) = wobbly_witness(rs, &Coweight::new(ord.clone()))?;
            witnesses.push(Witness {
                point: point.clone(),
                coroot,
                root,
            });
        }
    }
    Ok(Verdict::from_witnesses(witnesses))
}

/// Writes `nu` as `Σ n_k ω_k^∨` over minuscule fundamental indices `k`, if
/// possible. Returns `(index, n_k)` pairs with nonzero `n_k` (0-based indices).
///
/// Since the fundamental coweights form a basis the decomposition is unique:
/// it exists exactly when `nu` vanishes off the minuscule indices.
pub fn component_feasible(rs: &RootSystem, nu: &Coweight) -> Result<Option<Vec<(usize, i64)>>> {
    if nu.rank() != rs.rank() {
        return Err(Error::RankMismatch {
            expected: rs.rank(),
            got: nu.rank(),
        });
    }
    if !nu.is_dominant() {
        return Err(Error::NotDominant(nu.to_string()));
    }
    let minuscule = rs.minuscule_fundamentals();
    let mut parts = Vec::new();
    for (i, &n) in nu.coords().iter().enumerate() {
        if n == 0 {
            continue;
        }
        if !minuscule.contains(&i) {
            return Ok(None);
        }
        parts.push((i, n));
    }
    Ok(Some(parts))
}
