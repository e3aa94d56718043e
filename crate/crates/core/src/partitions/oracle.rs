//! Brute-force enumeration against every other source.

use serde::Serialize;

use crate::coeff::Coeff;
use crate::error::Result;
use crate::qseries::bivariate_crank_product;

use super::tables::{rank_counts_enumerated, rank_counts_ferrers};
use super::{
    crank_tables, ge_table, mk_table, nonneg_rank_table, p3_table, p_enumerated, p_table,
    pos_rank_table, rank_column_series, StatGrid, TableSet,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleMismatch {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    pub oracle: String,
    pub other: String,
    pub other_method: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleCheck {
    pub name: String,
    pub n_min: usize,
    pub n_max: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<OracleMismatch>,
}

impl OracleCheck {
    fn new(name: &str, n_min: usize, n_max: usize, mismatch: Option<OracleMismatch>) -> Self {
        Self {
            name: name.to_owned(),
            n_min,
            n_max,
            passed: mismatch.is_none(),
            mismatch,
        }
    }
}

/// Every table in `set` against its enumerated member.
fn set_check<T: Coeff>(set: &TableSet<T>, limit: usize, excluded: &[usize]) -> OracleCheck {
    let oracle = set
        .tables
        .iter()
        .find(|t| t.source == super::Source::Enumeration)
        .expect("table set carries an enumeration");
    let mut mismatch = None;
    'outer: for other in set
        .tables
        .iter()
        .filter(|t| t.source != super::Source::Enumeration)
    {
        for n in (0..=limit).filter(|n| !excluded.contains(n)) {
            if oracle.values[n] != other.values[n] {
                mismatch = Some(OracleMismatch {
                    n,
                    m: None,
                    oracle: oracle.values[n].to_string(),
                    other: other.values[n].to_string(),
                    other_method: other.method.to_owned(),
                });
                break 'outer;
            }
        }
    }
    OracleCheck::new(&set.name, 0, limit, mismatch)
}

fn grid_check<T: Coeff>(
    name: &str,
    oracle: &StatGrid<T>,
    other: impl Fn(i64, usize) -> T,
    method: &str,
    n_min: usize,
) -> OracleCheck {
    let limit = oracle.n_max();
    let w = limit as i64;
    for n in n_min..=limit {
        for m in -w..=w {
            let (a, b) = (oracle.get(m, n), other(m, n));
            if a != b {
                let mm = OracleMismatch {
                    n,
                    m: Some(m),
                    oracle: a.to_string(),
                    other: b.to_string(),
                    other_method: method.to_owned(),
                };
                return OracleCheck::new(name, n_min, limit, Some(mm));
            }
        }
    }
    OracleCheck::new(name, n_min, limit, None)
}

/// Compares enumeration with the generating-function and recurrence sources
/// for every sequence, for `n ≤ min(n_max, bound)` and `M_k` with `k ≤ k_max`.
///
/// The crank distribution is compared from `n = 2`: at `n = 1` the crank
/// generating function carries the signed values `-1, 1, 1`.
pub fn oracle_checks<T: Coeff>(
    n_max: usize,
    bound: usize,
    k_max: usize,
) -> Result<Vec<OracleCheck>> {
    let limit = n_max.min(bound);
    let mut out = Vec::new();

    let p = p_table::<T>(limit)?;
    let pe = p_enumerated::<T>(limit, bound)?;
    out.push(set_check(
        &TableSet {
            name: "p".into(),
            tables: vec![p, pe],
        },
        limit,
        &[],
    ));

    let rank = rank_counts_enumerated::<T>(limit, bound)?;
    let columns = (-(limit as i64)..=limit as i64)
        .map(|m| rank_column_series::<T>(m, limit))
        .collect::<Result<Vec<_>>>()?;
    out.push(grid_check(
        "N(m,n)",
        &rank,
        |m, n| columns[(m + limit as i64) as usize].coeffs()[n].clone(),
        "rank-column",
        0,
    ));
    let ferrers = rank_counts_ferrers::<T>(limit)?;
    out.push(grid_check(
        "N(m,n) ferrers",
        &rank,
        |m, n| ferrers.get(m, n),
        "ferrers",
        0,
    ));

    out.push(set_check(
        &nonneg_rank_table::<T>(limit, bound)?,
        limit,
        &[],
    ));
    out.push(set_check(&pos_rank_table::<T>(limit, bound)?, limit, &[]));
    out.push(set_check(&ge_table::<T>(limit, bound)?, limit, &[]));

    let crank = crank_tables::<T>(limit, bound)?;
    out.push(set_check(&crank.nonneg, limit, &[]));
    let mut positive = crank.positive.clone();
    positive.tables.push(crank.positive_enumerated.clone());
    out.push(OracleCheck {
        n_min: 2,
        ..set_check(&positive, limit, &[0, 1])
    });

    for k in 1..=k_max {
        out.push(set_check(&mk_table::<T>(k, limit, bound)?, limit, &[]));
    }
    out.push(set_check(&p3_table::<T>(limit, bound)?, limit, &[]));

    let biv = bivariate_crank_product::<T>(limit, limit)?;
    out.push(grid_check(
        "M(m,n)",
        &crank.distribution,
        |m, n| biv.coeff(n, m),
        "crank-product",
        2.min(limit + 1),
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn everything_agrees_to_forty() {
        let checks = oracle_checks::<i128>(40, 45, 6).unwrap();
        for c in &checks {
            assert!(c.passed, "{c:?}");
        }
        assert_eq!(checks.len(), 1 + 2 + 3 + 2 + 6 + 1 + 1);
    }
}
