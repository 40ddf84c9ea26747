//! Exact Laurent polynomials in two variables `q` and `t` with arbitrary
//! precision integer coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by `(e_q, e_t)`, so the map order is
//! the canonical term order and structural equality is polynomial equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exponent pair `(e_q, e_t)`.
pub type Exponent = (i32, i32);

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentQT {
    terms: BTreeMap<Exponent, BigInt>,
}

impl LaurentQT {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `coeff * q^e_q * t^e_t`.
    pub fn monomial(coeff: impl Into<BigInt>, e_q: i32, e_t: i32) -> Self {
        let mut out = Self::zero();
        out.add_term((e_q, e_t), coeff.into());
        out
    }

    pub fn constant(coeff: impl Into<BigInt>) -> Self {
        Self::monomial(coeff, 0, 0)
    }

    /// Builds a polynomial from `(e_q, e_t, coeff)` triples, merging repeats.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, i32, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (e_q, e_t, c) in terms {
            out.add_term((e_q, e_t), c.into());
        }
        out
    }

    pub fn add_term(&mut self, exp: Exponent, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order, sorted by `(e_q, e_t)`.
    pub fn terms(&self) -> impl Iterator<Item = (Exponent, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e_q: i32, e_t: i32) -> BigInt {
        self.terms.get(&(e_q, e_t)).cloned().unwrap_or_default()
    }

    /// Multiplies by `q^e_q * t^e_t`.
    pub fn scale_monomial(&self, e_q: i32, e_t: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + e_q, b + e_t), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        let mut out = Self::zero();
        for (&e, c) in &self.terms {
            out.add_term(e, c * factor);
        }
        out
    }

    /// Coefficient of `t^k`, returned as a polynomial in `q` alone (all `e_t = 0`).
    pub fn t_slice(&self, k: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|((_, e_t), _)| *e_t == k)
                .map(|(&(e_q, _), c)| ((e_q, 0), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `t = 1`.
    pub fn at_t_one(&self) -> Self {
        let mut out = Self::zero();
        for (&(e_q, _), c) in &self.terms {
            out.add_term((e_q, 0), c.clone());
        }
        out
    }

    /// Replaces `q -> q^{-1}` and `t -> t^{-1}`.
    pub fn conj_qt(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((-a, -b), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..exp {
            out = &out * self;
        }
        out
    }

    pub fn t_degrees(&self) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|e| e.1);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), d| (lo.min(d), hi.max(d))))
    }

    pub fn q_degrees(&self) -> Option<(i32, i32)> {
        let lo = self.terms.keys().next()?.0;
        let hi = self.terms.keys().next_back()?.0;
        Some((lo, hi))
    }

    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// First term with a negative coefficient, in canonical order.
    pub fn first_negative(&self) -> Option<(Exponent, BigInt)> {
        self.terms
            .iter()
            .find(|(_, c)| c.is_negative())
            .map(|(e, c)| (*e, c.clone()))
    }

    pub fn evaluate(&self, q0: &BigRational, t0: &BigRational) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (&(a, b), c) in &self.terms {
            let term = rational_pow(q0, a)? * rational_pow(t0, b)?;
            acc += term * BigRational::from_integer(c.clone());
        }
        Ok(acc)
    }
}

fn rational_pow(base: &BigRational, exp: i32) -> Result<BigRational> {
    if exp < 0 && base.is_zero() {
        return Err(Error::ZeroToNegativePower);
    }
    let mut out = BigRational::one();
    for _ in 0..exp.unsigned_abs() {
        out *= base;
    }
    Ok(if exp < 0 { out.recip() } else { out })
}

impl From<i64> for LaurentQT {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl Add<&LaurentQT> for &LaurentQT {
    type Output = LaurentQT;
    fn add(self, rhs: &LaurentQT) -> LaurentQT {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentQT {
    type Output = LaurentQT;
    fn add(mut self, rhs: LaurentQT) -> LaurentQT {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentQT> for LaurentQT {
    fn add_assign(&mut self, rhs: &LaurentQT) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&LaurentQT> for LaurentQT {
    fn sub_assign(&mut self, rhs: &LaurentQT) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c);
        }
    }
}

impl Sub<&LaurentQT> for &LaurentQT {
    type Output = LaurentQT;
    fn sub(self, rhs: &LaurentQT) -> LaurentQT {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentQT {
    type Output = LaurentQT;
    fn sub(mut self, rhs: LaurentQT) -> LaurentQT {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentQT {
    type Output = LaurentQT;
    fn neg(self) -> LaurentQT {
        LaurentQT {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for LaurentQT {
    type Output = LaurentQT;
    fn neg(self) -> LaurentQT {
        -&self
    }
}

impl Mul<&LaurentQT> for &LaurentQT {
    type Output = LaurentQT;
    fn mul(self, rhs: &LaurentQT) -> LaurentQT {
        let mut out = LaurentQT::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentQT {
    type Output = LaurentQT;
    fn mul(self, rhs: LaurentQT) -> LaurentQT {
        &self * &rhs
    }
}

impl fmt::Display for LaurentQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (&(a, b), c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let has_var = a != 0 || b != 0;
            if !mag.is_one() || !has_var {
                write!(f, "{mag}")?;
            }
            for (name, e) in [("q", a), ("t", b)] {
                match e {
                    0 => {}
                    1 => write!(f, "{name}")?,
                    _ => write!(f, "{name}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    q: i32,
    t: i32,
    c: i64,
}

#[derive(Serialize, Deserialize)]
struct LaurentRepr {
    terms: Vec<TermRepr>,
}

impl Serialize for LaurentQT {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (&(q, t), c) in &self.terms {
            let c = c.to_i64().ok_or_else(|| {
                serde::ser::Error::custom(format!("coefficient {c} does not fit in 64 bits"))
            })?;
            terms.push(TermRepr { q, t, c });
        }
        LaurentRepr { terms }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentQT {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = LaurentRepr::deserialize(deserializer)?;
        Ok(LaurentQT::from_terms(
            repr.terms.into_iter().map(|t| (t.q, t.t, t.c)),
        ))
    }
}
