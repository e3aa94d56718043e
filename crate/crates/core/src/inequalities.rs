//! Linear inequality families for `p(n)`.
//!
//! Each family has the shape
//!
//! ```text
//! S(k, n) = ε(k) · ( Σ c_i · p(n - s_i(k)) - X(n) )  ≥  B(k, n)
//! ```
//!
//! where `ε(k) = ±1` alternates with `k`, `X` is one of the partition
//! statistics `N, R, C, D, ge` (or absent), and the baseline `B` is `0` or
//! `M_k(n)`. Past a threshold depending on `k` the inequality is strict.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::gf;
use crate::partitions::{self, mk_alternating, SequenceTable};

/// Every sequence the families read, tabulated to a common `n_max`.
#[derive(Debug, Clone)]
pub struct StatTables<T> {
    pub p: SequenceTable<T>,
    /// Non-negative rank.
    pub nonneg_rank: SequenceTable<T>,
    /// Positive rank.
    pub pos_rank: SequenceTable<T>,
    /// Non-negative crank.
    pub nonneg_crank: SequenceTable<T>,
    /// Positive crank.
    pub pos_crank: SequenceTable<T>,
    /// Rank at most -2.
    pub ge: SequenceTable<T>,
}

impl<T: Coeff> StatTables<T> {
    pub fn new(n_max: usize) -> Result<Self> {
        let table = |name, method, s: Result<_>| -> Result<SequenceTable<T>> {
            Ok(SequenceTable::from_series(name, method, &s?))
        };
        Ok(Self {
            p: partitions::p_table(n_max)?,
            nonneg_rank: table("N", "theta-sum", gf::rank_nonneg_theta(n_max))?,
            pos_rank: table("R", "theta-sum", gf::rank_pos_theta(n_max))?,
            nonneg_crank: table("C", "theta-sum", gf::crank_nonneg_theta(n_max))?,
            pos_crank: table("D", "theta-sum", gf::crank_pos_theta(n_max))?,
            ge: table("ge", "theta-sum", gf::eden_theta(n_max))?,
        })
    }

    pub fn n_max(&self) -> usize {
        self.p.n_max()
    }

    pub fn stat(&self, s: Statistic) -> &SequenceTable<T> {
        match s {
            Statistic::NonnegRank => &self.nonneg_rank,
            Statistic::PosRank => &self.pos_rank,
            Statistic::NonnegCrank => &self.nonneg_crank,
            Statistic::PosCrank => &self.pos_crank,
            Statistic::Eden => &self.ge,
        }
    }

    pub fn mk(&self, k: usize) -> Result<SequenceTable<T>> {
        mk_alternating(k, &self.p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Statistic {
    #[serde(rename = "N")]
    NonnegRank,
    #[serde(rename = "R")]
    PosRank,
    #[serde(rename = "C")]
    NonnegCrank,
    #[serde(rename = "D")]
    PosCrank,
    #[serde(rename = "ge")]
    Eden,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Baseline {
    Zero,
    Mk,
}

/// Where strictness starts.
#[derive(Debug, Clone, Copy)]
pub enum Threshold {
    /// Strict for `n ≥ t(k)`.
    AtLeast(fn(usize) -> usize),
    /// Strict for `n > t(k)`.
    GreaterThan(fn(usize) -> usize),
}

impl Threshold {
    /// Smallest `n` in the strict zone.
    pub fn first_strict(&self, k: usize) -> usize {
        match self {
            Threshold::AtLeast(t) => t(k),
            Threshold::GreaterThan(t) => t(k) + 1,
        }
    }

    pub fn describe(&self, k: usize) -> String {
        match self {
            Threshold::AtLeast(t) => format!("n >= {}", t(k)),
            Threshold::GreaterThan(t) => format!("n > {}", t(k)),
        }
    }
}

#[derive(Debug, Clone)]
pub struct InequalityFamily {
    pub id: &'static str,
    pub k_min: usize,
    pub n_min: usize,
    /// Outer sign is `(-1)^(k + sign_offset)`.
    pub sign_offset: usize,
    /// `(shift, coefficient)` pairs of the `p` combination.
    pub p_terms: fn(usize) -> Vec<(usize, i64)>,
    pub statistic: Option<Statistic>,
    pub baseline: Baseline,
    pub threshold: Threshold,
    pub statement: &'static str,
}

fn alt(j: usize) -> i64 {
    if j.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn pent(j: usize) -> usize {
    j * (3 * j + 1) / 2
}

fn pent_shifted(j: usize) -> usize {
    j * (3 * j + 5) / 2 + 1
}

fn tri(j: usize) -> usize {
    j * (j + 1) / 2
}

pub fn families() -> Vec<InequalityFamily> {
    vec![
        InequalityFamily {
            id: "F1",
            k_min: 1,
            n_min: 1,
            sign_offset: 1,
            p_terms: |k| {
                (0..k)
                    .flat_map(|j| [(pent(j), alt(j)), (pent_shifted(j), -alt(j))])
                    .collect()
            },
            statistic: None,
            baseline: Baseline::Zero,
            threshold: Threshold::AtLeast(pent),
            statement: "(-1)^(k-1) sum_{j<k} (-1)^j [p(n-j(3j+1)/2) - p(n-j(3j+5)/2-1)] >= 0",
        },
        InequalityFamily {
            id: "F2",
            k_min: 1,
            n_min: 1,
            sign_offset: 1,
            p_terms: |k| (0..k).map(|j| (pent_shifted(j), alt(j))).collect(),
            statistic: Some(Statistic::NonnegRank),
            baseline: Baseline::Zero,
            threshold: Threshold::AtLeast(pent_shifted),
            statement: "(-1)^(k-1) (sum_{j<k} (-1)^j p(n-j(3j+5)/2-1) - N(n)) >= 0",
        },
        InequalityFamily {
            id: "F3",
            k_min: 1,
            n_min: 1,
            sign_offset: 1,
            p_terms: |k| (0..k).map(|j| (pent(j), alt(j))).collect(),
            statistic: Some(Statistic::NonnegRank),
            baseline: Baseline::Mk,
            threshold: Threshold::AtLeast(pent_shifted),
            statement: "(-1)^(k-1) (sum_{j<k} (-1)^j p(n-j(3j+1)/2) - N(n)) >= M_k(n)",
        },
        InequalityFamily {
            id: "F4",
            k_min: 2,
            n_min: 0,
            sign_offset: 0,
            p_terms: |k| (1..k).map(|j| (pent(j), -alt(j))).collect(),
            statistic: Some(Statistic::PosRank),
            baseline: Baseline::Mk,
            threshold: Threshold::AtLeast(pent_shifted),
            statement: "(-1)^k (sum_{1<=j<k} (-1)^(j+1) p(n-j(3j+1)/2) - R(n)) >= M_k(n)",
        },
        InequalityFamily {
            id: "F5",
            k_min: 1,
            n_min: 0,
            sign_offset: 1,
            p_terms: |k| (0..k).map(|j| (tri(j), alt(j))).collect(),
            statistic: Some(Statistic::NonnegCrank),
            baseline: Baseline::Zero,
            threshold: Threshold::AtLeast(tri),
            statement: "(-1)^(k-1) (sum_{j<k} (-1)^j p(n-j(j+1)/2) - C(n)) >= 0",
        },
        InequalityFamily {
            id: "F6",
            k_min: 1,
            n_min: 0,
            sign_offset: 1,
            p_terms: |k| (1..=k).map(|j| (3 * tri(j), -alt(j))).collect(),
            statistic: Some(Statistic::Eden),
            baseline: Baseline::Zero,
            threshold: Threshold::AtLeast(|k| 3 * tri(k + 1)),
            statement: "(-1)^(k-1) (sum_{1<=j<=k} (-1)^(j-1) p(n-3j(j+1)/2) - ge(n)) >= 0",
        },
        InequalityFamily {
            id: "F7",
            k_min: 1,
            n_min: 0,
            sign_offset: 1,
            p_terms: |k| (1..=k).map(|j| (tri(j), -alt(j))).collect(),
            statistic: Some(Statistic::PosCrank),
            baseline: Baseline::Zero,
            threshold: Threshold::AtLeast(|k| tri(k + 1)),
            statement: "(-1)^(k-1) (sum_{1<=j<=k} (-1)^(j-1) p(n-j(j+1)/2) - D(n)) >= 0",
        },
        InequalityFamily {
            id: "F8",
            k_min: 1,
            n_min: 1,
            sign_offset: 0,
            p_terms: |k| {
                let mut t = vec![(0, 1)];
                for j in 1..=k {
                    t.push((pent(j), alt(j)));
                    t.push((j * (3 * j - 1) / 2, alt(j)));
                }
                t
            },
            statistic: None,
            baseline: Baseline::Zero,
            threshold: Threshold::GreaterThan(|k| k * (3 * k + 5) / 2),
            statement:
                "(-1)^k (p(n) + sum_{1<=j<=k} (-1)^j [p(n-j(3j+1)/2) + p(n-j(3j-1)/2)]) >= 0",
        },
    ]
}

pub fn family(id: &str) -> Result<InequalityFamily> {
    families()
        .into_iter()
        .find(|f| f.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| Error::UnknownFamily(id.to_owned()))
}

impl InequalityFamily {
    /// The same family with the outer sign reversed.
    pub fn flipped(&self) -> Self {
        Self {
            sign_offset: self.sign_offset + 1,
            ..self.clone()
        }
    }

    pub fn domain(&self) -> String {
        match self.k_min {
            1 => "k >= 1".into(),
            m => format!("k > {}", m - 1),
        }
    }

    fn check_domain(&self, k: usize) -> Result<()> {
        if k < self.k_min {
            return Err(Error::OutOfDomain {
                id: self.id.to_owned(),
                params: format!("k={k}"),
                domain: self.domain(),
            });
        }
        Ok(())
    }

    /// `S(k, n)` and the baseline `B(k, n)` for every `n` in `n_min..=n_max`.
    pub fn values<T: Coeff>(&self, k: usize, tables: &StatTables<T>) -> Result<Vec<Row<T>>> {
        self.check_domain(k)?;
        let terms = (self.p_terms)(k);
        let mk = match self.baseline {
            Baseline::Mk => Some(tables.mk(k)?),
            Baseline::Zero => None,
        };
        let first_strict = self.threshold.first_strict(k);
        let mut rows = Vec::with_capacity(tables.n_max() + 1);
        for n in self.n_min..=tables.n_max() {
            let mut acc = T::zero();
            for &(shift, c) in &terms {
                let v = tables.p.at(n as i64 - shift as i64);
                acc = if c > 0 {
                    acc.try_add(&v)?
                } else {
                    acc.try_sub(&v)?
                };
            }
            if let Some(s) = self.statistic {
                acc = acc.try_sub(tables.stat(s).get(n))?;
            }
            let value = if (k + self.sign_offset).is_multiple_of(2) {
                acc
            } else {
                -acc
            };
            let baseline = mk.as_ref().map_or_else(T::zero, |t| t.get(n).clone());
            let margin = value.try_sub(&baseline)?;
            rows.push(Row {
                n,
                value,
                baseline,
                margin,
                strict: n >= first_strict,
            });
        }
        Ok(rows)
    }

    pub fn check<T: Coeff>(
        &self,
        k: usize,
        tables: &StatTables<T>,
        keep_rows: bool,
    ) -> Result<InequalityReport> {
        let rows = self.values(k, tables)?;
        let first_strict = self.threshold.first_strict(k);
        let mut nonneg_violations = Vec::new();
        let mut strict_violations = Vec::new();
        let mut min_margin: Option<&T> = None;
        for r in &rows {
            if r.margin.is_negative() {
                nonneg_violations.push(r.n);
            }
            if r.strict {
                if !r.margin.is_positive() {
                    strict_violations.push(r.n);
                }
                if min_margin.is_none_or(|m| r.margin < *m) {
                    min_margin = Some(&r.margin);
                }
            }
        }
        let samples = rows
            .iter()
            .filter(|r| r.n + 1 >= first_strict && r.n <= first_strict + 1)
            .map(Row::to_strings)
            .collect();
        let passed = nonneg_violations.is_empty() && strict_violations.is_empty();
        Ok(InequalityReport {
            family: self.id.to_owned(),
            k,
            n_min: self.n_min,
            n_max: tables.n_max(),
            threshold: self.threshold.describe(k),
            baseline: self.baseline,
            nonneg_violations: nonneg_violations.len(),
            strict_violations: strict_violations.len(),
            first_nonneg_violation: nonneg_violations.first().copied(),
            first_strict_violation: strict_violations.first().copied(),
            min_margin_at_threshold: min_margin.map(ToString::to_string),
            samples,
            passed,
            rows: keep_rows.then(|| rows.iter().map(Row::to_strings).collect()),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row<T> {
    pub n: usize,
    pub value: T,
    pub baseline: T,
    pub margin: T,
    /// `n` lies at or beyond the strictness threshold.
    pub strict: bool,
}

impl<T: Coeff> Row<T> {
    fn to_strings(&self) -> RowOut {
        RowOut {
            n: self.n,
            value: self.value.to_string(),
            baseline: self.baseline.to_string(),
            margin: self.margin.to_string(),
            strict: self.strict,
        }
    }
}

/// A row with its integers rendered as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowOut {
    pub n: usize,
    pub value: String,
    pub baseline: String,
    pub margin: String,
    pub strict: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InequalityReport {
    pub family: String,
    pub k: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub threshold: String,
    pub baseline: Baseline,
    pub nonneg_violations: usize,
    pub strict_violations: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_nonneg_violation: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_strict_violation: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_margin_at_threshold: Option<String>,
    /// Rows just below, at and above the threshold.
    pub samples: Vec<RowOut>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rows: Option<Vec<RowOut>>,
}

impl InequalityReport {
    /// Writes `family,k,n,value,baseline,margin,strict` rows; nothing if rows were not kept.
    pub fn write_rows_csv<W: std::io::Write>(&self, w: &mut csv::Writer<W>) -> std::io::Result<()> {
        for r in self.rows.iter().flatten() {
            w.write_record([
                self.family.clone(),
                self.k.to_string(),
                r.n.to_string(),
                r.value.clone(),
                r.baseline.clone(),
                r.margin.clone(),
                r.strict.to_string(),
            ])?;
        }
        Ok(())
    }
}

impl fmt::Display for InequalityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} k={:<2} n={}..={} strict {:<10} {}",
            self.family,
            self.k,
            self.n_min,
            self.n_max,
            self.threshold,
            if self.passed { "pass" } else { "FAIL" }
        )?;
        if !self.passed {
            write!(
                f,
                " ({} negative, {} not strict",
                self.nonneg_violations, self.strict_violations
            )?;
            if let Some(n) = self.first_nonneg_violation.or(self.first_strict_violation) {
                write!(f, ", first at n={n}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

pub fn check<T: Coeff>(
    id: &str,
    k: usize,
    tables: &StatTables<T>,
    keep_rows: bool,
) -> Result<InequalityReport> {
    family(id)?.check(k, tables, keep_rows)
}

/// Every family for every in-domain `k ≤ k_max`, ordered by family then `k`.
pub fn check_all<T: Coeff>(k_max: usize, tables: &StatTables<T>) -> Result<Vec<InequalityReport>> {
    check_families(&families(), k_max, tables)
}

pub fn check_families<T: Coeff>(
    families: &[InequalityFamily],
    k_max: usize,
    tables: &StatTables<T>,
) -> Result<Vec<InequalityReport>> {
    let jobs: Vec<(InequalityFamily, usize)> = families
        .iter()
        .cloned()
        .flat_map(|f| (f.k_min..=k_max).map(move |k| (f.clone(), k)))
        .collect();
    jobs.par_iter()
        .map(|(f, k)| f.check(*k, tables, false))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub k_max: usize,
    pub n_max: usize,
    pub passed: bool,
    /// First `(k, n)` where the two margins differ.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_difference: Option<(usize, usize)>,
}

/// The `M_k` baseline family and the `N(n)` family have identical margins.
pub fn equivalence_check<T: Coeff>(
    k_max: usize,
    tables: &StatTables<T>,
) -> Result<EquivalenceReport> {
    let f2 = family("F2")?;
    let f3 = family("F3")?;
    let mut first_difference = None;
    'outer: for k in 1..=k_max {
        let a = f2.values(k, tables)?;
        let b = f3.values(k, tables)?;
        for (x, y) in a.iter().zip(&b) {
            if x.margin != y.margin {
                first_difference = Some((k, x.n));
                break 'outer;
            }
        }
    }
    Ok(EquivalenceReport {
        k_max,
        n_max: tables.n_max(),
        passed: first_difference.is_none(),
        first_difference,
    })
}

/// Where the first family's value is zero, the last family's is non-negative.
pub fn weaker_family_consistent<T: Coeff>(k_max: usize, tables: &StatTables<T>) -> Result<bool> {
    let f1 = family("F1")?;
    let f8 = family("F8")?;
    for k in 1..=k_max {
        let a = f1.values(k, tables)?;
        let b = f8.values(k, tables)?;
        if a.iter()
            .zip(&b)
            .any(|(x, y)| x.value.is_zero() && y.value.is_negative())
        {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::mk_enumerated;

    fn tables(n: usize) -> StatTables<i128> {
        StatTables::new(n).unwrap()
    }

    #[test]
    fn all_families_hold() {
        let t = tables(300);
        for r in check_all(6, &t).unwrap() {
            assert!(r.passed, "{r}");
        }
    }

    #[test]
    fn first_family_counts_mk() {
        let t = tables(40);
        let f1 = family("F1").unwrap();
        for k in 1..=6 {
            let enumerated = mk_enumerated::<i128>(k, 40, 45).unwrap();
            for r in f1.values(k, &t).unwrap() {
                assert_eq!(&r.value, enumerated.get(r.n), "k={k} n={}", r.n);
            }
        }
        let at_threshold = &f1.values(2, &t).unwrap()[6];
        assert_eq!(at_threshold.n, 7);
        assert!(at_threshold.value >= 1);
    }

    #[test]
    fn boundary_examples() {
        let t = tables(500);
        assert!(check("F2", 1, &t, false).unwrap().passed);
        let f5 = family("F5").unwrap().values(1, &t).unwrap();
        assert_eq!((f5[0].n, f5[0].value, f5[0].strict), (0, 0, false));
        let r = check("F8", 2, &t, true).unwrap();
        let rows = r.rows.unwrap();
        assert_eq!(rows.iter().find(|r| r.strict).unwrap().n, 12);
    }

    #[test]
    fn domain_and_unknown() {
        let t = tables(10);
        assert!(matches!(
            check("F4", 1, &t, false),
            Err(Error::OutOfDomain { .. })
        ));
        assert!(matches!(
            check("F9", 1, &t, false),
            Err(Error::UnknownFamily(_))
        ));
    }

    #[test]
    fn flipped_sign_fails() {
        let t = tables(200);
        let r = family("F5").unwrap().flipped().check(2, &t, false).unwrap();
        assert!(!r.passed);
        // every n from the threshold on is strictly positive in the true family
        assert_eq!(r.strict_violations, 201 - 3);
    }

    #[test]
    fn equivalent_families() {
        let t = tables(300);
        assert!(equivalence_check(6, &t).unwrap().passed);
        assert!(weaker_family_consistent(6, &t).unwrap());
    }
}
