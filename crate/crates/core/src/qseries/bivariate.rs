//! Series in q with Laurent polynomial coefficients in z.

use crate::coeff::Coeff;
use crate::error::{Error, Result};

use super::{pochhammer, PochhammerSpec, TruncatedSeries};

/// `Σ c(n, m) q^n z^m` for `0 ≤ n ≤ q_order` and `|m| ≤ z_bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateLaurent<T> {
    q_order: usize,
    z_bound: usize,
    coeffs: Vec<T>,
}

impl<T: Coeff> BivariateLaurent<T> {
    pub fn zero(q_order: usize, z_bound: usize) -> Self {
        Self {
            q_order,
            z_bound,
            coeffs: vec![T::zero(); (q_order + 1) * (2 * z_bound + 1)],
        }
    }

    pub fn q_order(&self) -> usize {
        self.q_order
    }

    pub fn z_bound(&self) -> usize {
        self.z_bound
    }

    fn width(&self) -> usize {
        2 * self.z_bound + 1
    }

    fn index(&self, n: usize, m: i64) -> Option<usize> {
        if n > self.q_order || m.unsigned_abs() as usize > self.z_bound {
            return None;
        }
        Some(n * self.width() + (m + self.z_bound as i64) as usize)
    }

    /// Coefficient of `q^n z^m`; zero outside the stored box.
    pub fn coeff(&self, n: usize, m: i64) -> T {
        self.index(n, m)
            .map(|i| self.coeffs[i].clone())
            .unwrap_or_else(T::zero)
    }

    pub fn set(&mut self, n: usize, m: i64, value: T) {
        let i = self
            .index(n, m)
            .expect("coefficient outside the stored box");
        self.coeffs[i] = value;
    }

    /// Coefficients of `q^n`, indexed by `m + z_bound`.
    pub fn row(&self, n: usize) -> &[T] {
        let w = self.width();
        &self.coeffs[n * w..(n + 1) * w]
    }

    /// The series `Σ_n c(n, m) q^n` for fixed `m`.
    pub fn z_column(&self, m: i64) -> TruncatedSeries<T> {
        let coeffs = (0..=self.q_order).map(|n| self.coeff(n, m)).collect();
        TruncatedSeries::from_coeffs(coeffs).expect("q_order + 1 >= 1 coefficients")
    }

    /// Specialization `z = 1`.
    pub fn at_z_one(&self) -> Result<TruncatedSeries<T>> {
        let coeffs = (0..=self.q_order)
            .map(|n| {
                self.row(n)
                    .iter()
                    .try_fold(T::zero(), |acc, c| acc.try_add(c))
            })
            .collect::<Result<_>>()?;
        TruncatedSeries::from_coeffs(coeffs)
    }

    /// First `(n, m)` in row-major order where the two series disagree.
    pub fn first_mismatch(&self, other: &Self) -> Result<Option<(usize, i64, T, T)>> {
        if self.q_order != other.q_order {
            return Err(Error::OrderMismatch {
                left: self.q_order,
                right: other.q_order,
            });
        }
        let zb = self.z_bound.max(other.z_bound) as i64;
        for n in 0..=self.q_order {
            for m in -zb..=zb {
                let (a, b) = (self.coeff(n, m), other.coeff(n, m));
                if a != b {
                    return Ok(Some((n, m, a, b)));
                }
            }
        }
        Ok(None)
    }
}

/// The crank generating function `(q;q)_∞ / ((zq;q)_∞ (q/z;q)_∞)`.
///
/// Each factor `1/(1 - z^{±1} q^i)` is applied as a geometric series in place,
/// then every z-column is multiplied by `(q;q)_∞`. Since every factor raises the
/// q-degree at least as much as `|m|`, coefficients with `|m| > n` vanish and a
/// `z_bound` of `q_order` loses nothing.
pub fn bivariate_crank_product<T: Coeff>(
    q_order: usize,
    z_bound: usize,
) -> Result<BivariateLaurent<T>> {
    if z_bound < q_order {
        return Err(Error::ZBoundTooSmall { q_order, z_bound });
    }
    let mut out = BivariateLaurent::zero(q_order, z_bound);
    out.set(0, 0, T::one());
    let zb = z_bound as i64;
    for i in 1..=q_order {
        for dz in [1i64, -1] {
            for n in i..=q_order {
                for m in -zb..=zb {
                    let src = out.coeff(n - i, m - dz);
                    if src.is_zero() {
                        continue;
                    }
                    let idx = out.index(n, m).expect("in range");
                    out.coeffs[idx] = out.coeffs[idx].try_add(&src)?;
                }
            }
        }
    }
    let euler = pochhammer::<T>(PochhammerSpec::euler(), q_order)?;
    for m in -zb..=zb {
        let col = out.z_column(m).mul(&euler)?;
        for (n, c) in col.into_coeffs().into_iter().enumerate() {
            let idx = out.index(n, m).expect("in range");
            out.coeffs[idx] = c;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_order_coefficients() {
        let b = bivariate_crank_product::<i128>(6, 6).unwrap();
        assert_eq!(b.coeff(0, 0), 1);
        assert!((-6..=6).filter(|&m| m != 0).all(|m| b.coeff(0, m) == 0));
        assert_eq!(b.coeff(1, 1), 1);
        assert_eq!(b.coeff(1, -1), 1);
        assert_eq!(b.coeff(1, 0), -1);
        assert_eq!(b.coeff(1, 2), 0);
    }

    #[test]
    fn z_one_gives_partition_numbers() {
        let b = bivariate_crank_product::<i128>(10, 10).unwrap();
        let p = b.at_z_one().unwrap();
        assert_eq!(p.coeff(4), Some(&5));
        assert_eq!(p.coeff(10), Some(&42));
    }

    #[test]
    fn magnitude_bound() {
        let b = bivariate_crank_product::<i128>(12, 20).unwrap();
        for n in 0..=12 {
            for m in -20i64..=20 {
                if m.unsigned_abs() as usize > n {
                    assert_eq!(b.coeff(n, m), 0, "n={n} m={m}");
                }
            }
        }
    }

    #[test]
    fn z_bound_must_cover_order() {
        assert_eq!(
            bivariate_crank_product::<i128>(5, 4).unwrap_err(),
            Error::ZBoundTooSmall {
                q_order: 5,
                z_bound: 4
            }
        );
    }
}
