//! q-Pochhammer products `(q^a; q^s)_n`, eta quotients and Gaussian binomials.

use crate::coeff::Coeff;
use crate::error::{Error, Result};

use super::TruncatedSeries;

/// Number of factors in a q-Pochhammer product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Count {
    Finite(usize),
    /// Every factor whose exponent is at most the order; the rest are `≡ 1`.
    Infinite,
}

/// `(q^start; q^step)_count = Π_{i < count} (1 - q^(start + i·step))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PochhammerSpec {
    pub start_exp: usize,
    pub step_exp: usize,
    pub count: Count,
}

impl PochhammerSpec {
    pub fn finite(start_exp: usize, step_exp: usize, count: usize) -> Self {
        Self {
            start_exp,
            step_exp,
            count: Count::Finite(count),
        }
    }

    pub fn infinite(start_exp: usize, step_exp: usize) -> Self {
        Self {
            start_exp,
            step_exp,
            count: Count::Infinite,
        }
    }

    /// `(q;q)_∞`.
    pub fn euler() -> Self {
        Self::infinite(1, 1)
    }

    /// `(q;q)_n`.
    pub fn q_factorial(n: usize) -> Self {
        Self::finite(1, 1, n)
    }
}

pub fn pochhammer<T: Coeff>(spec: PochhammerSpec, order: usize) -> Result<TruncatedSeries<T>> {
    if spec.start_exp == 0 {
        return Err(Error::InvalidPochhammer(
            "start exponent must be positive".into(),
        ));
    }
    if spec.step_exp == 0 {
        return Err(Error::InvalidPochhammer(
            "step exponent must be positive".into(),
        ));
    }
    let mut c = TruncatedSeries::<T>::one(order).into_coeffs();
    let mut exp = spec.start_exp;
    let mut done = 0usize;
    while exp <= order {
        if let Count::Finite(n) = spec.count {
            if done == n {
                break;
            }
        }
        // multiply in place by (1 - q^exp)
        for i in (exp..=order).rev() {
            c[i] = c[i].try_sub(&c[i - exp])?;
        }
        exp += spec.step_exp;
        done += 1;
    }
    TruncatedSeries::from_coeffs(c)
}

/// `Π numerators / Π denominators`.
pub fn eta_quotient<T: Coeff>(
    numerators: &[PochhammerSpec],
    denominators: &[PochhammerSpec],
    order: usize,
) -> Result<TruncatedSeries<T>> {
    let mut num = TruncatedSeries::one(order);
    for &spec in numerators {
        num = num.mul(&pochhammer(spec, order)?)?;
    }
    let mut den = TruncatedSeries::one(order);
    for &spec in denominators {
        den = den.mul(&pochhammer(spec, order)?)?;
    }
    num.mul(&den.invert()?)
}

/// `[n; k]_q = (q;q)_n / ((q;q)_k (q;q)_{n-k})`, zero outside `0 ≤ k ≤ n`.
pub fn gaussian_binomial<T: Coeff>(n: usize, k: i64, order: usize) -> Result<TruncatedSeries<T>> {
    if k < 0 || k as usize > n {
        return Ok(TruncatedSeries::zero(order));
    }
    let k = k as usize;
    eta_quotient(
        &[PochhammerSpec::q_factorial(n)],
        &[
            PochhammerSpec::q_factorial(k),
            PochhammerSpec::q_factorial(n - k),
        ],
        order,
    )
}
