//! Exact arithmetic for products `∏_k (1 - t^k)^{c_k}` with integer exponents
//! of either sign, and the dense integer polynomials they expand to.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense polynomial in `t` with unbounded integer coefficients; index = degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly(coeffs);
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly(Vec::new())
    }

    pub fn one() -> Self {
        IntPoly(vec![BigInt::one()])
    }

    /// `1 + t + ... + t^(n-1)`.
    pub fn geometric(n: usize) -> Self {
        IntPoly(vec![BigInt::one(); n])
    }

    /// `1 + t^k` for `k > 0`, or `2` for `k = 0`.
    pub fn one_plus_power(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[0] += 1;
        c[k] += 1;
        IntPoly(c)
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.0.last()
    }

    /// Multiplies in place by `1 - t^k`.
    fn mul_one_minus_power(&mut self, k: usize) {
        let old_len = self.0.len();
        if old_len == 0 {
            return;
        }
        self.0.resize(old_len + k, BigInt::zero());
        for i in (k..old_len + k).rev() {
            let lower = self.0[i - k].clone();
            self.0[i] -= lower;
        }
        self.trim();
    }

    /// Long division by a divisor whose leading coefficient is `±1`.
    pub fn div_rem(&self, divisor: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let lead = divisor
            .leading()
            .ok_or_else(|| Error::Precondition("division by the zero polynomial".into()))?;
        if !lead.abs().is_one() {
            return Err(Error::Precondition(
                "divisor leading coefficient must be a unit".into(),
            ));
        }
        let dd = divisor.0.len() - 1;
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.0.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        Ok((IntPoly::new(quot), IntPoly::new(rem)))
    }

    pub fn is_palindromic(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.0.iter().sum()
    }

    /// Leading coefficient and constant term both equal 1.
    pub fn is_monic_leading_and_constant_one(&self) -> bool {
        self.0.first().is_some_and(One::is_one) && self.leading().is_some_and(One::is_one)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.0.len().max(rhs.0.len());
        let z = BigInt::zero();
        IntPoly::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) + rhs.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.0.len().max(rhs.0.len());
        let z = BigInt::zero();
        IntPoly::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) - rhs.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => {}
                (_, false) => write!(f, "{a}")?,
            }
            match i {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Outcome of dividing out a factored product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Polynomiality {
    Polynomial(IntPoly),
    NotPolynomial { remainder_degree: usize },
}

impl Polynomiality {
    pub fn polynomial(&self) -> Option<&IntPoly> {
        match self {
            Polynomiality::Polynomial(p) => Some(p),
            Polynomiality::NotPolynomial { .. } => None,
        }
    }

    pub fn is_polynomial(&self) -> bool {
        matches!(self, Polynomiality::Polynomial(_))
    }
}

/// `∏_k (1 - t^k)^{c_k}`, stored as `k ↦ c_k` with zero exponents dropped.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FactoredProduct(BTreeMap<u32, i64>);

impl FactoredProduct {
    pub fn unit() -> Self {
        FactoredProduct(BTreeMap::new())
    }

    /// Builds a product from `(k, c_k)` pairs; repeated `k` accumulate.
    ///
    /// Panics if some `k` is zero, since `1 - t^0` vanishes.
    pub fn from_exponents(pairs: impl IntoIterator<Item = (u32, i64)>) -> Self {
        let mut fp = FactoredProduct::unit();
        for (k, c) in pairs {
            fp.multiply_factor(k, c);
        }
        fp
    }

    /// Multiplies by `(1 - t^k)^c`.
    pub fn multiply_factor(&mut self, k: u32, c: i64) {
        assert!(k > 0, "factor 1 - t^0 is zero");
        if c == 0 {
            return;
        }
        let e = self.0.entry(k).or_insert(0);
        *e += c;
        if *e == 0 {
            self.0.remove(&k);
        }
    }

    pub fn exponents(&self) -> &BTreeMap<u32, i64> {
        &self.0
    }

    pub fn exponent(&self, k: u32) -> i64 {
        self.0.get(&k).copied().unwrap_or(0)
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        FactoredProduct(self.0.iter().map(|(&k, &c)| (k, -c)).collect())
    }

    pub fn pow(&self, n: i64) -> Self {
        FactoredProduct::from_exponents(self.0.iter().map(|(&k, &c)| (k, c * n)))
    }

    /// `(∏_{c_k > 0} (1 - t^k)^{c_k}, ∏_{c_k < 0} (1 - t^k)^{-c_k})`.
    pub fn expand_numerator_denominator(&self) -> (IntPoly, IntPoly) {
        let mut num = IntPoly::one();
        let mut den = IntPoly::one();
        for (&k, &c) in &self.0 {
            let target = if c > 0 { &mut num } else { &mut den };
            for _ in 0..c.unsigned_abs() {
                target.mul_one_minus_power(k as usize);
            }
        }
        (num, den)
    }

    pub fn to_polynomial(&self) -> Polynomiality {
        let (num, den) = self.expand_numerator_denominator();
        let (q, r) = num
            .div_rem(&den)
            .expect("denominator has leading coefficient ±1");
        match r.degree() {
            None => Polynomiality::Polynomial(q),
            Some(d) => Polynomiality::NotPolynomial {
                remainder_degree: d,
            },
        }
    }

    /// Equality as rational functions, by cross-multiplying the expansions.
    /// Factors common to both sides are nonzero and cancelled first.
    pub fn rational_eq(&self, other: &FactoredProduct) -> bool {
        let (num, den) = (self * &other.inverse()).expand_numerator_denominator();
        num == den
    }
}

impl Mul for &FactoredProduct {
    type Output = FactoredProduct;

    fn mul(self, rhs: &FactoredProduct) -> FactoredProduct {
        let mut out = self.clone();
        for (&k, &c) in &rhs.0 {
            out.multiply_factor(k, c);
        }
        out
    }
}

impl fmt::Display for FactoredProduct {
    /// Numerator factors first, then denominator factors, each by increasing
    /// `k`: `(1-t^2)^3 (1-t)^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let ordered = self
            .0
            .iter()
            .filter(|(_, &c)| c > 0)
            .chain(self.0.iter().filter(|(_, &c)| c < 0));
        for (n, (&k, &c)) in ordered.enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            if k == 1 {
                f.write_str("(1-t)")?;
            } else {
                write!(f, "(1-t^{k})")?;
            }
            if c != 1 {
                write!(f, "^{c}")?;
            }
        }
        Ok(())
    }
}
