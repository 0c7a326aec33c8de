//! Dense integer polynomials, truncated power series and Laurent polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

/// Polynomial in `t` with arbitrary-precision integer coefficients.
///
/// Normalized: the last stored coefficient is nonzero, the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (usize, BigInt)>>(terms: I) -> Self {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (e, c) in terms {
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigInt::zero());
            }
            coeffs[e] += c;
        }
        Self::from_coeffs(coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.terms() {
            for (j, b) in other.terms() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }

    /// Multiplies by `1 - t^a` in place.
    pub fn mul_one_minus(&mut self, a: usize) {
        if self.is_zero() {
            return;
        }
        let n = self.coeffs.len();
        self.coeffs.resize(n + a, BigInt::zero());
        for i in (a..n + a).rev() {
            let shifted = self.coeffs[i - a].clone();
            self.coeffs[i] -= shifted;
        }
        self.normalize();
    }

    /// Substitutes `t -> t^k`.
    pub fn inflate(&self, k: usize) -> IntPolynomial {
        IntPolynomial::from_terms(self.terms().map(|(e, c)| (e * k, c.clone())))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "t")?,
                1 => write!(f, "{mag}*t")?,
                _ if unit => write!(f, "t^{e}")?,
                _ => write!(f, "{mag}*t^{e}")?,
            }
        }
        Ok(())
    }
}

/// Integer written as a JSON number when it fits in `i64`, otherwise as a decimal string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = JsonInt;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "an integer or a decimal string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonInt, E> {
                v.parse()
                    .map(JsonInt)
                    .map_err(|_| E::custom(format!("bad integer {v:?}")))
            }
        }
        d.deserialize_any(V)
    }
}

/// Serialized as a list of `[exponent, coefficient]` pairs of nonzero terms.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(None)?;
        for (e, c) in self.terms() {
            seq.serialize_element(&(e, JsonInt(c.clone())))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = IntPolynomial;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "a list of [exponent, coefficient] pairs")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<IntPolynomial, A::Error> {
                let mut terms = Vec::new();
                while let Some((e, c)) = seq.next_element::<(usize, JsonInt)>()? {
                    terms.push((e, c.0));
                }
                Ok(IntPolynomial::from_terms(terms))
            }
        }
        d.deserialize_seq(V)
    }
}

/// Power series known exactly for exponents below `order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); order],
        }
    }

    pub fn from_polynomial(p: &IntPolynomial, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (e, c) in p.terms() {
            if e < order {
                s.coeffs[e] = c.clone();
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> &BigInt {
        &self.coeffs[e]
    }

    pub fn add_at(&mut self, e: usize, c: &BigInt) {
        if e < self.coeffs.len() {
            self.coeffs[e] += c;
        }
    }

    pub fn mul_one_minus(&mut self, a: usize) {
        for i in (a..self.coeffs.len()).rev() {
            let shifted = self.coeffs[i - a].clone();
            self.coeffs[i] -= shifted;
        }
    }

    /// Divides by `1 - t^a` (multiplies by the geometric series), `a >= 1`.
    pub fn div_one_minus(&mut self, a: usize) {
        assert!(a >= 1);
        for i in a..self.coeffs.len() {
            let prev = self.coeffs[i - a].clone();
            self.coeffs[i] += prev;
        }
    }

    /// Series of `numerator / ∏ (1 - t^w)` to the given order.
    pub fn from_rational(numerator: &IntPolynomial, weights: &[usize], order: usize) -> Self {
        let mut s = Self::from_polynomial(numerator, order);
        for &w in weights {
            s.div_one_minus(w);
        }
        s
    }

    pub fn into_polynomial(self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs)
    }
}

/// Laurent polynomial stored densely from its lowest exponent.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    offset: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> Self {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        let mut p = LaurentPoly { offset: lo, coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            *self = Self::zero();
            return;
        }
        self.coeffs.drain(..lead);
        self.offset += lead as i64;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.offset)
    }

    pub fn max_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.offset + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let i = e - self.offset;
        if i < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(i as usize).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        let off = self.offset;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (off + i as i64, c))
    }

    /// Sum of all coefficients (value at `t = 1`).
    pub fn mass(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `t -> 1/t`.
    pub fn invert(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms().map(|(e, c)| (-e, c.clone())))
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> LaurentPoly {
        LaurentPoly {
            offset: self.offset + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.terms()
                .map(|(e, c)| (e, c.clone()))
                .chain(other.terms().map(|(e, c)| (e, -c))),
        )
    }

    /// Converts to an ordinary polynomial if no negative exponents occur.
    pub fn to_polynomial(&self) -> Option<IntPolynomial> {
        if self.offset < 0 && !self.is_zero() {
            return None;
        }
        Some(IntPolynomial::from_terms(
            self.terms().map(|(e, c)| (e as usize, c.clone())),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_products() {
        let mut p = IntPolynomial::one();
        p.mul_one_minus(1);
        p.mul_one_minus(1);
        assert_eq!(p, IntPolynomial::from_i64(&[1, -2, 1]));
        assert_eq!(p.to_string(), "1 - 2*t + t^2");
        let q = p.mul(&IntPolynomial::from_i64(&[0, 1]));
        assert_eq!(q.degree(), Some(3));
        assert_eq!(p.inflate(2), IntPolynomial::from_i64(&[1, 0, -2, 0, 1]));
    }

    #[test]
    fn geometric_series_roundtrip() {
        let n = IntPolynomial::from_i64(&[1, 3, -2]);
        let s = TruncatedSeries::from_rational(&n, &[1, 2, 5], 30);
        let mut back = s.clone();
        for w in [1, 2, 5] {
            back.mul_one_minus(w);
        }
        assert_eq!(back.into_polynomial(), n);
        assert_eq!(
            TruncatedSeries::from_rational(&IntPolynomial::one(), &[1], 4).coeffs(),
            &[
                BigInt::from(1),
                BigInt::from(1),
                BigInt::from(1),
                BigInt::from(1)
            ]
        );
    }

    #[test]
    fn laurent_basics() {
        let p = LaurentPoly::from_terms([(-2, 1.into()), (0, 4.into()), (3, BigInt::from(0))]);
        assert_eq!(p.min_exponent(), Some(-2));
        assert_eq!(p.max_exponent(), Some(0));
        assert_eq!(p.mass(), BigInt::from(5));
        assert_eq!(p.invert().coeff(2), BigInt::from(1));
        assert!(p.to_polynomial().is_none());
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn json_form() {
        let p = IntPolynomial::from_i64(&[1, 0, -28]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, "[[0,1],[2,-28]]");
        let big = IntPolynomial::from_coeffs(vec![BigInt::from(10).pow(30)]);
        let s = serde_json::to_string(&big).unwrap();
        assert_eq!(serde_json::from_str::<IntPolynomial>(&s).unwrap(), big);
    }
}
