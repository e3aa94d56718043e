//! Truncated formal power series in q over an exact integer ring.
//!
//! A series of order `O` is an element of `Z[[q]] / (q^(O+1))`: every identity
//! check in this crate is a congruence modulo `q^(O+1)`. Two series can only be
//! combined when their orders agree; mixing orders is an error rather than a
//! silent truncation to the smaller one.

mod bivariate;
mod pochhammer;

pub use bivariate::{bivariate_crank_product, BivariateLaurent};
pub use pochhammer::{eta_quotient, gaussian_binomial, pochhammer, Count, PochhammerSpec};

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::coeff::Coeff;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

/// First exponent at which two series differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch<T> {
    pub exponent: usize,
    pub lhs: T,
    pub rhs: T,
}

impl<T: Coeff> TruncatedSeries<T> {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![T::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, order)
    }

    /// `q^exp` modulo `q^(order+1)`; the zero series when `exp > order`.
    pub fn monomial(exp: usize, order: usize) -> Self {
        Self::term(exp, T::one(), order)
    }

    /// `c * q^exp` modulo `q^(order+1)`.
    pub fn term(exp: usize, c: T, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = c;
        }
        s
    }

    /// Builds a series from its coefficients; the order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<T>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Empty);
        }
        Ok(Self { coeffs })
    }

    pub fn from_i64s(order: usize, values: &[i64]) -> Self {
        let mut s = Self::zero(order);
        for (c, &v) in s.coeffs.iter_mut().zip(values) {
            *c = T::from(v);
        }
        s
    }

    /// Sum of signed monomials `Σ sign·q^exp`; terms beyond the order are dropped.
    pub fn sparse<I>(order: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, i64)>,
    {
        let mut s = Self::zero(order);
        for (exp, c) in terms {
            if exp <= order {
                s.coeffs[exp] = s.coeffs[exp].try_add(&T::from(c))?;
            }
        }
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `q^exp`, or `None` past the order.
    pub fn coeff(&self, exp: usize) -> Option<&T> {
        self.coeffs.get(exp)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn leading_term(&self) -> Option<(usize, &T)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.try_add(b))
            .collect::<Result<_>>()?;
        Ok(Self { coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.try_sub(b))
            .collect::<Result<_>>()?;
        Ok(Self { coeffs })
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.try_mul(c))
            .collect::<Result<_>>()?;
        Ok(Self { coeffs })
    }

    /// Multiplies by `(-1)^e`.
    pub fn signed(&self, e: usize) -> Self {
        if e.is_multiple_of(2) {
            self.clone()
        } else {
            self.neg()
        }
    }

    /// Cauchy product truncated at the shared order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let order = self.order();
        let mut out = vec![T::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].try_add(&a.try_mul(b)?)?;
            }
        }
        Ok(Self { coeffs: out })
    }

    /// Multiplicative inverse, defined when the constant term is `±1`.
    pub fn invert(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if !(a0.is_one() || (-a0.clone()).is_one()) {
            return Err(Error::NonUnit);
        }
        let order = self.order();
        let mut b: Vec<T> = Vec::with_capacity(order + 1);
        b.push(a0.clone());
        for n in 1..=order {
            let mut acc = T::zero();
            for i in 1..=n {
                let ai = &self.coeffs[i];
                if ai.is_zero() {
                    continue;
                }
                acc = acc.try_add(&ai.try_mul(&b[n - i])?)?;
            }
            // a0 is its own inverse
            b.push(-(acc.try_mul(a0)?));
        }
        Ok(Self { coeffs: b })
    }

    /// Multiplies by `q^exp`.
    pub fn shift(&self, exp: usize) -> Self {
        let order = self.order();
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp..].clone_from_slice(&self.coeffs[..=order - exp]);
        }
        s
    }

    /// Substitutes `q -> q^factor`. `factor` must be positive.
    pub fn dilate(&self, factor: usize) -> Self {
        assert!(factor > 0, "dilation factor must be positive");
        let order = self.order();
        let mut s = Self::zero(order);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i * factor > order {
                break;
            }
            s.coeffs[i * factor] = c.clone();
        }
        s
    }

    /// Reinterprets the series at a smaller order (explicit truncation).
    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order());
        let mut s = Self::zero(order);
        s.coeffs[..=keep].clone_from_slice(&self.coeffs[..=keep]);
        s
    }

    /// Smallest exponent where `self` and `other` disagree.
    pub fn first_mismatch(&self, other: &Self) -> Result<Option<Mismatch<T>>> {
        self.check_order(other)?;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .enumerate()
            .find(|(_, (a, b))| a != b)
            .map(|(exponent, (a, b))| Mismatch {
                exponent,
                lhs: a.clone(),
                rhs: b.clone(),
            }))
    }
}

/// `Σ_{j ∈ range} f(j)` where `f` returns `None` once terms vanish mod `q^(order+1)`.
pub fn sum_until<T, F>(order: usize, start: usize, mut f: F) -> Result<TruncatedSeries<T>>
where
    T: Coeff,
    F: FnMut(usize) -> Option<Result<TruncatedSeries<T>>>,
{
    let mut acc = TruncatedSeries::zero(order);
    let mut j = start;
    while let Some(term) = f(j) {
        acc = acc.add(&term?)?;
        j += 1;
    }
    Ok(acc)
}

impl<T: Coeff> fmt::Debug for TruncatedSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

impl<T: Coeff> fmt::Display for TruncatedSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}q")?,
                _ => write!(f, "{c}q^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type S = TruncatedSeries<i128>;

    fn s(values: &[i64]) -> S {
        S::from_i64s(values.len() - 1, values)
    }

    #[test]
    fn monomials() {
        assert_eq!(S::monomial(0, 5), s(&[1, 0, 0, 0, 0, 0]));
        assert_eq!(S::monomial(3, 5), s(&[0, 0, 0, 1, 0, 0]));
        assert_eq!(S::monomial(7, 5), S::zero(5));
    }

    #[test]
    fn addition() {
        assert_eq!(s(&[1, 1]).add(&s(&[0, -1])).unwrap(), s(&[1, 0]));
        let a = s(&[3, -1, 4]);
        assert_eq!(a.add(&S::zero(2)).unwrap(), a);
        assert_eq!(s(&[1, 2, 3]).add(&s(&[1, 2, 3])).unwrap(), s(&[2, 4, 6]));
    }

    #[test]
    fn multiplication() {
        let telescoped = s(&[1, -1, 0, 0]).mul(&s(&[1, 1, 1, 1])).unwrap();
        assert_eq!(telescoped, S::one(3));
        let a = s(&[2, 0, -7, 1]);
        assert_eq!(a.mul(&S::one(3)).unwrap(), a);
        assert_eq!(s(&[1, 1, 0]).mul(&s(&[1, 1, 0])).unwrap(), s(&[1, 2, 1]));
    }

    #[test]
    fn mixed_orders_are_rejected() {
        let err = s(&[1, 2]).add(&s(&[1, 2, 3])).unwrap_err();
        assert_eq!(err, Error::OrderMismatch { left: 1, right: 2 });
        assert!(s(&[1]).mul(&s(&[1, 0])).is_err());
        assert!(s(&[1]).first_mismatch(&s(&[1, 0])).is_err());
    }

    #[test]
    fn inversion() {
        assert_eq!(s(&[1, -1, 0, 0]).invert().unwrap(), s(&[1, 1, 1, 1]));
        assert_eq!(S::one(4).invert().unwrap(), S::one(4));
        assert_eq!(s(&[-1, 1, 0]).invert().unwrap(), s(&[-1, -1, -1]));
        assert_eq!(s(&[2, 1]).invert().unwrap_err(), Error::NonUnit);
        assert_eq!(s(&[0, 1]).invert().unwrap_err(), Error::NonUnit);
    }

    #[test]
    fn mismatch_location() {
        assert_eq!(s(&[1, 2, 3]).first_mismatch(&s(&[1, 2, 3])).unwrap(), None);
        let m = s(&[1, 2, 3])
            .first_mismatch(&s(&[1, 2, 4]))
            .unwrap()
            .unwrap();
        assert_eq!((m.exponent, m.lhs, m.rhs), (2, 3, 4));
    }

    #[test]
    fn shift_and_dilate() {
        assert_eq!(s(&[1, 2, 3, 4]).shift(2), s(&[0, 0, 1, 2]));
        assert_eq!(s(&[1, 2, 3, 4]).shift(9), S::zero(3));
        assert_eq!(s(&[1, 2, 3, 4, 5]).dilate(2), s(&[1, 0, 2, 0, 3]));
    }

    #[test]
    fn overflow_is_reported() {
        let big = TruncatedSeries::<i64>::from_coeffs(vec![i64::MAX, 0]).unwrap();
        assert_eq!(big.add(&big).unwrap_err(), Error::Overflow);
    }

    #[test]
    fn display() {
        assert_eq!(s(&[1, -1, 0, 2]).to_string(), "1 + -1q + 2q^3 + O(q^4)");
    }
}
