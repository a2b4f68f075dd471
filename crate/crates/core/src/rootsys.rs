//! Root systems of simple (and products of simple) complex Lie algebras.
//!
//! Simple roots follow the Bourbaki numbering (which is also the numbering of
//! Knapp's Appendix C tables):
//!
//! | family | short / long simple roots | branch |
//! |--------|---------------------------|--------|
//! | `A_n`  | all equal                 | chain `1-2-...-n` |
//! | `B_n`  | `α_n` short               | chain |
//! | `C_n`  | `α_n` long                | chain |
//! | `D_n`  | all equal                 | `n-2` joined to `n-1` and `n` |
//! | `E_n`  | all equal                 | chain `1-3-4-...-n`, `2` joined to `4` |
//! | `F_4`  | `α_1, α_2` long           | chain |
//! | `G_2`  | `α_1` short               | chain |
//!
//! The Cartan matrix is `A[i][j] = <α_i, α_j^∨>`, so the simple coroot `α_j^∨`
//! written in the fundamental-coweight basis is column `j` of `A`.
//!
//! Indices in this API are 0-based; `ω_1^∨` is `fundamental_coweight(0)`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest absolute coordinate accepted from user input. Keeps every pairing,
/// degree and dimension computation comfortably inside `i64`.
pub const MAX_COORD: i64 = 1 << 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::InvalidRank {
                family: family.letter(),
                rank,
            })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Squared lengths of the simple roots, scaled so that all values and all
    /// inner products are integers.
    fn simple_lengths(&self) -> Vec<i64> {
        let n = self.rank;
        match self.family {
            Family::A | Family::D | Family::E => vec![2; n],
            Family::B => (0..n).map(|i| if i + 1 == n { 2 } else { 4 }).collect(),
            Family::C => (0..n).map(|i| if i + 1 == n { 4 } else { 2 }).collect(),
            Family::F => vec![4, 4, 2, 2],
            Family::G => vec![2, 6],
        }
    }

    /// Edges of the Dynkin diagram, 0-based.
    fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.family {
            Family::A | Family::B | Family::C | Family::F | Family::G => {
                (1..n).map(|i| (i - 1, i)).collect()
            }
            Family::D => {
                let mut e: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
                e.push((n - 3, n - 1));
                e
            }
            Family::E => {
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((3..n).map(|i| (i - 1, i)));
                e
            }
        }
    }

    /// Symmetric Gram matrix `(α_i, α_j)` of the simple roots.
    fn gram(&self) -> Vec<Vec<i64>> {
        let len = self.simple_lengths();
        let n = self.rank;
        let mut g = vec![vec![0i64; n]; n];
        for i in 0..n {
            g[i][i] = len[i];
        }
        for (i, j) in self.edges() {
            let v = -len[i].max(len[j]) / 2;
            g[i][j] = v;
            g[j][i] = v;
        }
        g
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(|c| Family::from_letter(c.to_ascii_uppercase()))
            .ok_or_else(|| Error::InvalidType(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidType(s.to_string()))?;
        SimpleType::new(family, rank)
    }
}

/// An ordered product of simple types, e.g. `A2+A2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanType(Vec<SimpleType>);

impl CartanType {
    pub fn new(factors: Vec<SimpleType>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidType(String::new()));
        }
        Ok(CartanType(factors))
    }

    pub fn factors(&self) -> &[SimpleType] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.iter().map(|t| t.rank).sum()
    }

    pub fn as_simple(&self) -> Option<SimpleType> {
        match self.0.as_slice() {
            [t] => Some(*t),
            _ => None,
        }
    }
}

impl From<SimpleType> for CartanType {
    fn from(t: SimpleType) -> Self {
        CartanType(vec![t])
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, t) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("+")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Err(Error::InvalidType(s.to_string()));
        }
        let factors = s
            .split('+')
            .map(str::parse)
            .collect::<Result<Vec<SimpleType>>>()?;
        CartanType::new(factors)
    }
}

/// Integer vector in the fundamental-coweight basis: `coords[i] = <α_i, μ>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coweight(Vec<i64>);

impl Coweight {
    pub fn new(coords: Vec<i64>) -> Self {
        Coweight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Coweight(vec![0; rank])
    }

    /// `ω_{i+1}^∨`.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i] = 1;
        Coweight(c)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        Coweight(self.0.iter().map(|&x| k * x).collect())
    }

    /// Rejects coordinates larger in magnitude than [`MAX_COORD`].
    pub fn check_range(&self) -> Result<()> {
        match self.0.iter().find(|x| x.abs() > MAX_COORD) {
            Some(&x) => Err(Error::CoordinateRange(x)),
            None => Ok(()),
        }
    }
}

impl Add<&Coweight> for &Coweight {
    type Output = Coweight;

    fn add(self, rhs: &Coweight) -> Coweight {
        assert_eq!(self.rank(), rhs.rank(), "coweight rank mismatch");
        Coweight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Coweight> for &Coweight {
    type Output = Coweight;

    fn sub(self, rhs: &Coweight) -> Coweight {
        assert_eq!(self.rank(), rhs.rank(), "coweight rank mismatch");
        Coweight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Coweight {
    type Output = Coweight;

    fn neg(self) -> Coweight {
        Coweight(self.0.iter().map(|x| -x).collect())
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for Coweight {
    type Err = Error;

    /// Parses a comma-separated coordinate list such as `1,0,-2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty coweight".into()));
        }
        let coords = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad coordinate `{}`", p.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        let cw = Coweight(coords);
        cw.check_range()?;
        Ok(cw)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Root {
    simple_coords: Vec<i64>,
    coroot_coords: Vec<i64>,
    height: i64,
}

impl Root {
    /// Coefficients in the simple-root basis.
    pub fn simple_coords(&self) -> &[i64] {
        &self.simple_coords
    }

    /// The coroot `α^∨` in the fundamental-coweight basis.
    pub fn coroot(&self) -> Coweight {
        Coweight(self.coroot_coords.clone())
    }

    pub fn coroot_coords(&self) -> &[i64] {
        &self.coroot_coords
    }

    pub fn height(&self) -> i64 {
        self.height
    }

    pub fn is_positive(&self) -> bool {
        self.height > 0
    }
}

#[derive(Debug, Clone)]
struct Factor {
    ty: SimpleType,
    offset: usize,
    highest: usize,
}

/// An immutable root system with coroots and exact Cartan data.
#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: CartanType,
    cartan: Vec<Vec<i64>>,
    /// Positive roots sorted by (height, simple_coords), then their negatives
    /// in the same order.
    roots: Vec<Root>,
    n_positive: usize,
    lookup: HashMap<Vec<i64>, usize>,
    cartan_inv: Vec<Vec<BigRational>>,
    factors: Vec<Factor>,
}

impl RootSystem {
    pub fn build(ty: &CartanType) -> Result<Self> {
        let rank = ty.rank();
        let mut gram = vec![vec![0i64; rank]; rank];
        let mut offset = 0;
        for t in ty.factors() {
            let g = t.gram();
            for i in 0..t.rank {
                for j in 0..t.rank {
                    gram[offset + i][offset + j] = g[i][j];
                }
            }
            offset += t.rank;
        }
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| 2 * gram[i][j] / gram[j][j]).collect())
            .collect();

        let found = reflection_closure(&cartan)?;
        cross_check_coroots(&gram, &found)?;

        let mut positive: Vec<Root> = found
            .into_iter()
            .filter(|(s, _)| s.iter().sum::<i64>() > 0)
            .map(|(simple_coords, coroot_coords)| Root {
                height: simple_coords.iter().sum(),
                simple_coords,
                coroot_coords,
            })
            .collect();
        positive.sort_by(|a, b| (a.height, &a.simple_coords).cmp(&(b.height, &b.simple_coords)));
        let n_positive = positive.len();
        let negative: Vec<Root> = positive
            .iter()
            .map(|r| Root {
                simple_coords: r.simple_coords.iter().map(|x| -x).collect(),
                coroot_coords: r.coroot_coords.iter().map(|x| -x).collect(),
                height: -r.height,
            })
            .collect();
        let mut roots = positive;
        roots.extend(negative);
        let lookup = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.simple_coords.clone(), k))
            .collect();

        let mut factors = Vec::with_capacity(ty.factors().len());
        let mut offset = 0;
        for t in ty.factors() {
            let range = offset..offset + t.rank;
            let highest = (0..n_positive)
                .filter(|&k| {
                    roots[k]
                        .simple_coords
                        .iter()
                        .enumerate()
                        .all(|(i, &c)| c == 0 || range.contains(&i))
                })
                .max_by_key(|&k| roots[k].height)
                .ok_or_else(|| Error::Internal(format!("no roots in factor {t}")))?;
            factors.push(Factor {
                ty: *t,
                offset,
                highest,
            });
            offset += t.rank;
        }

        let cartan_inv =
            invert(&cartan).ok_or_else(|| Error::Internal("singular Cartan matrix".into()))?;

        let rs = RootSystem {
            ty: ty.clone(),
            cartan,
            roots,
            n_positive,
            lookup,
            cartan_inv,
            factors,
        };
        rs.check_highest_roots()?;
        Ok(rs)
    }

    pub fn build_simple(t: SimpleType) -> Result<Self> {
        Self::build(&CartanType::from(t))
    }

    fn check_highest_roots(&self) -> Result<()> {
        for f in &self.factors {
            let top = &self.roots[f.highest].simple_coords;
            let ok = self.positive_roots().iter().all(|r| {
                let inside = (0..self.rank()).all(|i| {
                    r.simple_coords[i] == 0 || (f.offset..f.offset + f.ty.rank).contains(&i)
                });
                !inside || r.simple_coords.iter().zip(top).all(|(a, b)| a <= b)
            });
            if !ok {
                return Err(Error::Internal(format!(
                    "highest root of {} does not dominate",
                    f.ty
                )));
            }
        }
        Ok(())
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.ty
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// `A[i][j] = <α_i, α_j^∨>`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.n_positive]
    }

    pub fn simple_root(&self, i: usize) -> &Root {
        let mut e = vec![0; self.rank()];
        e[i] = 1;
        self.find_root(&e).expect("simple root present")
    }

    pub fn find_root(&self, simple_coords: &[i64]) -> Option<&Root> {
        self.lookup.get(simple_coords).map(|&k| &self.roots[k])
    }

    pub fn is_root(&self, simple_coords: &[i64]) -> bool {
        self.lookup.contains_key(simple_coords)
    }

    /// Positive root whose coroot has the given coweight coordinates.
    pub fn root_with_coroot(&self, coroot: &Coweight) -> Option<&Root> {
        self.positive_roots()
            .iter()
            .find(|r| r.coroot_coords == coroot.0)
    }

    pub fn fundamental_coweight(&self, i: usize) -> Coweight {
        Coweight::fundamental(self.rank(), i)
    }

    pub fn simple_coroot(&self, j: usize) -> Coweight {
        Coweight(self.cartan.iter().map(|row| row[j]).collect())
    }

    /// `ρ^∨`, half the sum of the positive coroots; all coordinates equal 1.
    pub fn rho_vee(&self) -> Coweight {
        Coweight(vec![1; self.rank()])
    }

    fn check_rank(&self, cw: &Coweight) -> Result<()> {
        if cw.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: cw.rank(),
            });
        }
        Ok(())
    }

    pub fn pairing(&self, root: &Root, cw: &Coweight) -> Result<i64> {
        self.check_rank(cw)?;
        Ok(dot(&root.simple_coords, &cw.0))
    }

    /// Highest root of a simple type.
    pub fn highest_root(&self) -> Result<&Root> {
        match self.factors.as_slice() {
            [f] => Ok(&self.roots[f.highest]),
            _ => Err(Error::NotSimple(self.ty.to_string())),
        }
    }

    /// One highest root per simple factor.
    pub fn highest_roots(&self) -> Vec<&Root> {
        self.factors
            .iter()
            .map(|f| &self.roots[f.highest])
            .collect()
    }

    /// Largest `l >= 0` with `α_i + l·α` a root. `l = 0` always qualifies.
    pub fn root_string_reach(&self, i: usize, alpha: &Root) -> usize {
        let mut v = vec![0i64; self.rank()];
        v[i] = 1;
        let mut l = 0;
        loop {
            for (x, a) in v.iter_mut().zip(&alpha.simple_coords) {
                *x += a;
            }
            if !self.is_root(&v) {
                return l;
            }
            l += 1;
        }
    }

    /// Coordinates of `cw` in the simple-coroot basis.
    pub fn coroot_basis_coords(&self, cw: &Coweight) -> Result<Vec<BigRational>> {
        self.check_rank(cw)?;
        Ok(self
            .cartan_inv
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&cw.0)
                    .fold(BigRational::zero(), |acc, (a, &x)| {
                        acc + a * BigRational::from_integer(BigInt::from(x))
                    })
            })
            .collect())
    }

    /// `Σ_j x_j α_j^∨` in the fundamental-coweight basis.
    pub fn from_coroot_basis(&self, x: &[i64]) -> Result<Coweight> {
        if x.len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: x.len(),
            });
        }
        Ok(Coweight(
            self.cartan.iter().map(|row| dot(row, x)).collect(),
        ))
    }

    /// `lo <= hi` in the dominance order: `hi - lo` is a nonnegative integer
    /// combination of simple coroots. Different cosets compare as `false`.
    pub fn dominance_leq(&self, lo: &Coweight, hi: &Coweight) -> bool {
        if lo.rank() != self.rank() || hi.rank() != self.rank() {
            return false;
        }
        match self.coroot_basis_coords(&(hi - lo)) {
            Ok(x) => x.iter().all(|q| q.is_integer() && !q.is_negative()),
            Err(_) => false,
        }
    }

    /// Minuscule test for a dominant coweight: `<θ, μ> <= 1` for the highest
    /// root `θ` of every simple factor.
    pub fn is_minuscule(&self, cw: &Coweight) -> Result<bool> {
        self.check_rank(cw)?;
        if !cw.is_dominant() {
            return Err(Error::NotDominant(cw.to_string()));
        }
        Ok(self
            .highest_roots()
            .into_iter()
            .all(|theta| dot(&theta.simple_coords, &cw.0) <= 1))
    }

    /// Indices `i` (0-based) for which `ω_{i+1}^∨` is minuscule.
    pub fn minuscule_fundamentals(&self) -> Vec<usize> {
        (0..self.rank())
            .filter(|&i| {
                self.is_minuscule(&self.fundamental_coweight(i))
                    .expect("fundamental coweights are dominant")
            })
            .collect()
    }

    /// The simple factor containing simple index `i`, with its offset.
    pub fn factor_of(&self, i: usize) -> (SimpleType, usize) {
        let f = self
            .factors
            .iter()
            .find(|f| (f.offset..f.offset + f.ty.rank).contains(&i))
            .expect("index within rank");
        (f.ty, f.offset)
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// All roots with their coroots, by closing the simple roots under simple
/// reflections. Coroots travel along via the dual reflections.
fn reflection_closure(cartan: &[Vec<i64>]) -> Result<HashMap<Vec<i64>, Vec<i64>>> {
    let rank = cartan.len();
    let column = |j: usize| -> Vec<i64> { cartan.iter().map(|row| row[j]).collect() };
    let mut found: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
    let mut queue = VecDeque::new();
    for i in 0..rank {
        let mut e = vec![0; rank];
        e[i] = 1;
        found.insert(e.clone(), column(i));
        queue.push_back(e);
    }
    while let Some(beta) = queue.pop_front() {
        let beta_vee = found[&beta].clone();
        for i in 0..rank {
            // <β, α_i^∨> = Σ_j β_j A[j][i]
            let p: i64 = (0..rank).map(|j| beta[j] * cartan[j][i]).sum();
            let q = beta_vee[i];
            let mut image = beta.clone();
            image[i] -= p;
            let col = column(i);
            let image_vee: Vec<i64> = beta_vee.iter().zip(&col).map(|(b, c)| b - q * c).collect();
            match found.get(&image) {
                Some(existing) if *existing != image_vee => {
                    return Err(Error::Internal(format!(
                        "coroot of {image:?} reached inconsistently"
                    )));
                }
                Some(_) => {}
                None => {
                    if !(image.iter().all(|&x| x >= 0) || image.iter().all(|&x| x <= 0)) {
                        return Err(Error::Internal(format!("mixed-sign root {image:?}")));
                    }
                    found.insert(image.clone(), image_vee);
                    queue.push_back(image);
                }
            }
        }
    }
    Ok(found)
}

/// Recomputes every coroot as `2β/(β,β)` from the invariant form and compares.
fn cross_check_coroots(gram: &[Vec<i64>], found: &HashMap<Vec<i64>, Vec<i64>>) -> Result<()> {
    let rank = gram.len();
    for (beta, beta_vee) in found {
        let g_beta: Vec<i64> = (0..rank).map(|k| dot(&gram[k], beta)).collect();
        let norm = dot(beta, &g_beta);
        for k in 0..rank {
            let num = 2 * g_beta[k];
            if num % norm != 0 || num / norm != beta_vee[k] {
                return Err(Error::Internal(format!(
                    "coroot of {beta:?} disagrees with the invariant form"
                )));
            }
        }
    }
    Ok(())
}

/// Exact Gauss-Jordan inverse over the rationals.
fn invert(m: &[Vec<i64>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let q = |x: i64| BigRational::from_integer(BigInt::from(x));
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row.iter().map(|&x| q(x)).collect();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, p) in a[r].iter_mut().zip(&pivot_row) {
                    *x = &*x - &factor * p;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}
