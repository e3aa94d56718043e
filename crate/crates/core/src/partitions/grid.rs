use crate::coeff::Coeff;
use crate::error::Result;

use super::{SequenceTable, Source};

/// Counts `c(m, n)` of partitions of `n` with statistic `m`, for `|m| ≤ n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatGrid<T> {
    n_max: usize,
    counts: Vec<T>,
}

impl<T: Coeff> StatGrid<T> {
    pub fn zero(n_max: usize) -> Self {
        Self {
            n_max,
            counts: vec![T::zero(); (n_max + 1) * (2 * n_max + 1)],
        }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    fn index(&self, m: i64, n: usize) -> Option<usize> {
        if n > self.n_max || m.unsigned_abs() as usize > self.n_max {
            return None;
        }
        Some(n * (2 * self.n_max + 1) + (m + self.n_max as i64) as usize)
    }

    /// Zero when `|m| > n_max`. Panics when `n > n_max`.
    pub fn get(&self, m: i64, n: usize) -> T {
        assert!(n <= self.n_max, "n = {n} beyond grid bound {}", self.n_max);
        self.index(m, n)
            .map(|i| self.counts[i].clone())
            .unwrap_or_else(T::zero)
    }

    pub fn add_to(&mut self, m: i64, n: usize, v: &T) -> Result<()> {
        let i = self.index(m, n).expect("statistic outside grid");
        self.counts[i] = self.counts[i].try_add(v)?;
        Ok(())
    }

    /// `Σ_{m ∈ range} c(m, n)` for each n.
    fn sum_where(&self, keep: impl Fn(i64) -> bool) -> Result<Vec<T>> {
        let w = self.n_max as i64;
        (0..=self.n_max)
            .map(|n| {
                (-w..=w)
                    .filter(|&m| keep(m))
                    .try_fold(T::zero(), |acc, m| acc.try_add(&self.get(m, n)))
            })
            .collect()
    }

    pub fn column(&self, m: i64) -> Vec<T> {
        (0..=self.n_max).map(|n| self.get(m, n)).collect()
    }

    pub fn table_at_least(
        &self,
        name: &str,
        source: Source,
        method: &'static str,
        m_min: i64,
    ) -> Result<SequenceTable<T>> {
        Ok(SequenceTable::new(
            name,
            source,
            method,
            self.sum_where(|m| m >= m_min)?,
        ))
    }

    pub fn table_at_most(
        &self,
        name: &str,
        source: Source,
        method: &'static str,
        m_max: i64,
    ) -> Result<SequenceTable<T>> {
        Ok(SequenceTable::new(
            name,
            source,
            method,
            self.sum_where(|m| m <= m_max)?,
        ))
    }

    /// `Σ_m c(m, n)`.
    pub fn totals(&self) -> Result<Vec<T>> {
        self.sum_where(|_| true)
    }
}
