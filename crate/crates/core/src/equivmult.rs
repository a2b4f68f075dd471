//! Virtual equivariant multiplicities of Borel-type fixed points and Dynkin
//! polynomials.
//!
//! With `r_j = dim g_j` (and `r_0` the rank) and the total multiplicity
//! coweight `μ`, the degree of `E(g_{-j})` is
//!
//! ```text
//! d_j(μ) = j·r_j·(2g - 2) - S_j(μ),    S_j(μ) = Σ_{ht α = j} <α, μ>,
//! ```
//!
//! with `d_0 = 0`, and the weight-`j` part of the positive tangent space has
//! dimension `d_{j-1} - d_j + (r_{j-1} + r_j)(g - 1)`. The multiplicity is the
//! ratio of the symmetric-algebra characters of that space and of the Hitchin
//! base, whose weight `e_i + 1` piece has dimension `(2e_i + 1)(g - 1)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grading::{check_genus, GradingProfile};
use crate::polyfactor::{FactoredProduct, IntPoly, Polynomiality};
use crate::rootsys::{Coweight, Family, RootSystem};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TangentWeightProfile {
    pub genus: i64,
    pub total_mu: Coweight,
    /// `j ↦ dim T^+_j` for `1 <= j <= coxeter`.
    pub dims: BTreeMap<usize, i64>,
    /// `j ↦ d_j(μ)` for `0 <= j <= coxeter`.
    pub degrees: BTreeMap<usize, i64>,
}

fn check_dominant(rs: &RootSystem, mu: &Coweight) -> Result<()> {
    if mu.rank() != rs.rank() {
        return Err(Error::RankMismatch {
            expected: rs.rank(),
            got: mu.rank(),
        });
    }
    if !mu.is_dominant() {
        return Err(Error::NotDominant(mu.to_string()));
    }
    mu.check_range()
}

/// `S_j(μ)` for `j = 0..=max_height`.
fn height_sums(rs: &RootSystem, gp: &GradingProfile, mu: &Coweight) -> Vec<i64> {
    let mut sums = vec![0i64; gp.max_height() as usize + 1];
    for r in rs.positive_roots() {
        sums[r.height() as usize] += r
            .simple_coords()
            .iter()
            .zip(mu.coords())
            .map(|(c, m)| c * m)
            .sum::<i64>();
    }
    sums
}

/// `j ↦ d_j(μ)` for `0 <= j <= coxeter`; `d_coxeter = 0` since `g_coxeter = 0`.
pub fn degree_profile(
    rs: &RootSystem,
    gp: &GradingProfile,
    mu: &Coweight,
    genus: i64,
) -> Result<BTreeMap<usize, i64>> {
    check_dominant(rs, mu)?;
    check_genus(genus)?;
    let sums = height_sums(rs, gp, mu);
    let h = gp.coxeter() as usize;
    Ok((0..=h)
        .map(|j| {
            let d = if j == 0 || j == h {
                0
            } else {
                j as i64 * gp.dim(j as i64) as i64 * (2 * genus - 2) - sums[j]
            };
            (j, d)
        })
        .collect())
}

pub fn tangent_weights(
    rs: &RootSystem,
    gp: &GradingProfile,
    mu: &Coweight,
    genus: i64,
) -> Result<TangentWeightProfile> {
    let degrees = degree_profile(rs, gp, mu, genus)?;
    let h = gp.coxeter() as usize;
    let r = |j: usize| gp.dim(j as i64) as i64;
    let dims = (1..=h)
        .map(|j| {
            let dim = degrees[&(j - 1)] - degrees[&j] + (r(j - 1) + r(j)) * (genus - 1);
            (j, dim)
        })
        .collect();
    Ok(TangentWeightProfile {
        genus,
        total_mu: mu.clone(),
        dims,
        degrees,
    })
}

/// `m_E(t)` in factored form. Only the total coweight `Σ_c μ_c` enters.
///
/// A negative tangent dimension means no fixed point with these invariants
/// exists at this genus, and is reported as an error.
pub fn virtual_multiplicity(
    rs: &RootSystem,
    gp: &GradingProfile,
    total_mu: &Coweight,
    genus: i64,
) -> Result<FactoredProduct> {
    let tw = tangent_weights(rs, gp, total_mu, genus)?;
    let mut m = FactoredProduct::unit();
    for (&j, &dim) in &tw.dims {
        if dim < 0 {
            return Err(Error::NegativeTangentDimension {
                weight: j,
                value: dim,
            });
        }
        m.multiply_factor(j as u32, -dim);
    }
    for &e in gp.exponents() {
        m.multiply_factor(e + 1, (2 * i64::from(e) + 1) * (genus - 1));
    }
    Ok(m)
}

/// `D_μ(t) = ∏_{α > 0} (1 - t^{<α, ρ^∨ + μ>}) / (1 - t^{<α, ρ^∨>})`.
pub fn dynkin_polynomial(rs: &RootSystem, mu: &Coweight) -> Result<FactoredProduct> {
    check_dominant(rs, mu)?;
    let shifted = &rs.rho_vee() + mu;
    let mut d = FactoredProduct::unit();
    for alpha in rs.positive_roots() {
        d.multiply_factor(rs.pairing(alpha, &shifted)? as u32, 1);
        d.multiply_factor(alpha.height() as u32, -1);
    }
    Ok(d)
}

/// Weyl dimension `∏_{α > 0} <α, ρ^∨ + μ> / <α, ρ^∨>`.
pub fn weyl_dimension(rs: &RootSystem, mu: &Coweight) -> Result<BigInt> {
    check_dominant(rs, mu)?;
    let shifted = &rs.rho_vee() + mu;
    let mut q = BigRational::one();
    for alpha in rs.positive_roots() {
        q *= BigRational::new(
            BigInt::from(rs.pairing(alpha, &shifted)?),
            BigInt::from(alpha.height()),
        );
    }
    if !q.is_integer() {
        return Err(Error::Internal(format!("non-integral Weyl dimension {q}")));
    }
    Ok(q.to_integer())
}

/// Closed form listed in the multiplicity table for `ω_{i+1}^∨` (0-based `i`)
/// of a simple type, or `None` if the table has no such row.
///
/// The `A` row is indexed by the number of line bundles, so rank `r` uses the
/// Gaussian binomial `[r + 1 choose i + 1]`.
pub fn table1_closed_form(rs: &RootSystem, i: usize) -> Option<IntPoly> {
    let ty = rs.cartan_type().as_simple()?;
    let n = ty.rank();
    let k = i + 1;
    let p = |c: &[usize]| -> IntPoly {
        c.iter()
            .map(|&j| IntPoly::one_plus_power(j))
            .fold(IntPoly::one(), |acc, f| &acc * &f)
    };
    match (ty.family(), k) {
        (Family::A, _) => {
            let lines = (n + 1) as u32;
            let fp = FactoredProduct::from_exponents(
                (1..=k as u32).flat_map(|j| [(lines - j + 1, 1), (j, -1)]),
            );
            fp.to_polynomial().polynomial().cloned()
        }
        (Family::B, 1) => Some(IntPoly::geometric(2 * n)),
        (Family::C, k) if k == n => Some(p(&(1..=n).collect::<Vec<_>>())),
        (Family::D, 1) => Some(&p(&[n - 1]) * &IntPoly::geometric(n)),
        (Family::D, k) if k == n - 1 || k == n => Some(p(&(1..=n).collect::<Vec<_>>())),
        (Family::E, 1 | 6) if n == 6 => {
            Some(&IntPoly::from_i64(&[1, 0, 0, 0, 1, 0, 0, 0, 1]) * &IntPoly::geometric(9))
        }
        (Family::E, 7) if n == 7 => Some(&p(&[5, 9]) * &IntPoly::geometric(14)),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Row {
    pub type_name: String,
    /// 0-based fundamental index.
    pub index: usize,
    pub coweight: Coweight,
    pub genus_list: Vec<i64>,
    pub factored: FactoredProduct,
    pub polynomial: Polynomiality,
    pub expected: IntPoly,
    /// Expansion equals the table entry at every genus in `genus_list`.
    pub matches_table1: bool,
    pub matches_dynkin: bool,
}

/// One row per minuscule fundamental coweight of a type in the table,
/// computed at genus 2 and 3.
pub fn table1(rs: &RootSystem, gp: &GradingProfile) -> Result<Vec<Table1Row>> {
    let ty = rs
        .cartan_type()
        .as_simple()
        .ok_or_else(|| Error::NotSimple(rs.cartan_type().to_string()))?;
    let indices = rs.minuscule_fundamentals();
    if indices.is_empty() {
        return Err(Error::NotCovered(ty.to_string()));
    }
    let genus_list = vec![2, 3];
    let mut rows = Vec::new();
    for i in indices {
        let expected =
            table1_closed_form(rs, i).ok_or_else(|| Error::NotCovered(ty.to_string()))?;
        let mu = rs.fundamental_coweight(i);
        let mut factored = None;
        let mut matches_table1 = true;
        for &g in &genus_list {
            let m = virtual_multiplicity(rs, gp, &mu, g)?;
            matches_table1 &= m.to_polynomial().polynomial() == Some(&expected);
            factored.get_or_insert(m);
        }
        let factored = factored.expect("nonempty genus list");
        let matches_dynkin = factored.rational_eq(&dynkin_polynomial(rs, &mu)?);
        rows.push(Table1Row {
            type_name: ty.to_string(),
            index: i,
            coweight: mu,
            genus_list: genus_list.clone(),
            polynomial: factored.to_polynomial(),
            factored,
            expected,
            matches_table1,
            matches_dynkin,
        });
    }
    Ok(rows)
}
