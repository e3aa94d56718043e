//! Counting sequences, each from at least two independent sources.

use crate::coeff::Coeff;
use crate::error::Result;
use crate::gf;

use super::{enumerate_partitions, Partition, SequenceTable, Source, StatGrid, TableSet};

fn enumerate_upto(limit: usize, mut f: impl FnMut(usize, &Partition) -> Result<()>) -> Result<()> {
    for n in 0..=limit {
        for p in enumerate_partitions(n, limit)? {
            f(n, &p)?;
        }
    }
    Ok(())
}

fn count_enumerated<T: Coeff>(
    name: &str,
    n_max: usize,
    bound: usize,
    keep: impl Fn(&Partition) -> bool,
) -> Result<SequenceTable<T>> {
    let limit = n_max.min(bound);
    let mut values = vec![T::zero(); limit + 1];
    enumerate_upto(limit, |n, p| {
        if keep(p) {
            values[n] = values[n].try_add(&T::one())?;
        }
        Ok(())
    })?;
    Ok(SequenceTable::new(
        name,
        Source::Enumeration,
        "brute-force",
        values,
    ))
}

/// p(n) from `p(n) = Σ_{j≥1} (-1)^{j-1} [p(n - j(3j-1)/2) + p(n - j(3j+1)/2)]`.
pub fn p_table<T: Coeff>(n_max: usize) -> Result<SequenceTable<T>> {
    let mut p: Vec<T> = Vec::with_capacity(n_max + 1);
    p.push(T::one());
    for n in 1..=n_max {
        let mut acc = T::zero();
        for j in 1.. {
            let a = j * (3 * j - 1) / 2;
            if a > n {
                break;
            }
            let b = j * (3 * j + 1) / 2;
            let mut pair = p[n - a].clone();
            if b <= n {
                pair = pair.try_add(&p[n - b])?;
            }
            acc = if j % 2 == 1 {
                acc.try_add(&pair)?
            } else {
                acc.try_sub(&pair)?
            };
        }
        p.push(acc);
    }
    Ok(SequenceTable::new(
        "p",
        Source::Recurrence,
        "pentagonal-recurrence",
        p,
    ))
}

pub fn p_enumerated<T: Coeff>(n_max: usize, bound: usize) -> Result<SequenceTable<T>> {
    count_enumerated("p", n_max, bound, |_| true)
}

// ---- rank ----------------------------------------------------------------

/// N(m, n) from three sources.
#[derive(Debug, Clone)]
pub struct RankCounts<T> {
    /// Brute force, up to `min(n_max, bound)`.
    pub enumeration: StatGrid<T>,
    /// Ferrers-diagram count, up to `n_max`.
    pub ferrers: StatGrid<T>,
    /// Per-column generating functions, up to `n_max`.
    pub generating_function: StatGrid<T>,
}

pub fn rank_counts<T: Coeff>(n_max: usize, bound: usize) -> Result<RankCounts<T>> {
    Ok(RankCounts {
        enumeration: rank_counts_enumerated(n_max, bound)?,
        ferrers: rank_counts_ferrers(n_max)?,
        generating_function: rank_counts_gf(n_max)?,
    })
}

pub(crate) fn rank_counts_enumerated<T: Coeff>(n_max: usize, bound: usize) -> Result<StatGrid<T>> {
    let limit = n_max.min(bound);
    let mut grid = StatGrid::zero(limit);
    enumerate_upto(limit, |n, p| grid.add_to(p.rank(), n, &T::one()))?;
    Ok(grid)
}

/// Counts partitions by (largest part `a`, number of parts `b`).
///
/// Removing the first row and column of the Ferrers diagram leaves an arbitrary
/// partition inside a `(b-1) × (a-1)` box, so the count for `n` is the
/// coefficient of `q^{n-a-b+1}` in `[a+b-2; b-1]`. The Gaussian binomials are
/// generated row by row with the q-Pascal rule.
pub fn rank_counts_ferrers<T: Coeff>(n_max: usize) -> Result<StatGrid<T>> {
    let mut grid = StatGrid::zero(n_max);
    grid.add_to(0, 0, &T::one())?;
    // row[kk][d] = coefficient of q^d in [big; kk], d ≤ n_max - big - 1
    let mut row: Vec<Vec<T>> = Vec::new();
    for big in 0..n_max {
        let deg = n_max - big - 1;
        let next: Vec<Vec<T>> = (0..=big)
            .map(|kk| {
                (0..=deg)
                    .map(|d| {
                        if big == 0 {
                            return Ok(if d == 0 { T::one() } else { T::zero() });
                        }
                        let mut v = if kk >= 1 {
                            row[kk - 1][d].clone()
                        } else {
                            T::zero()
                        };
                        if kk < big && d >= kk {
                            v = v.try_add(&row[kk][d - kk])?;
                        }
                        Ok(v)
                    })
                    .collect::<Result<Vec<T>>>()
            })
            .collect::<Result<_>>()?;
        for (kk, coeffs) in next.iter().enumerate() {
            // b - 1 = kk, a - 1 = big - kk
            let m = big as i64 - 2 * kk as i64;
            for (d, c) in coeffs.iter().enumerate() {
                if !c.is_zero() {
                    grid.add_to(m, big + 1 + d, c)?;
                }
            }
        }
        row = next;
    }
    Ok(grid)
}

fn rank_counts_gf<T: Coeff>(n_max: usize) -> Result<StatGrid<T>> {
    let mut grid = StatGrid::zero(n_max);
    let w = n_max as i64;
    for m in -w..=w {
        let col = gf::rank_column::<T>(m, n_max)?;
        for (n, c) in col.coeffs().iter().enumerate() {
            if !c.is_zero() {
                grid.add_to(m, n, c)?;
            }
        }
    }
    Ok(grid)
}

/// `Σ_n N(m, n) q^n` for one rank value.
pub fn rank_column_series<T: Coeff>(
    m: i64,
    order: usize,
) -> Result<crate::qseries::TruncatedSeries<T>> {
    gf::rank_column(m, order)
}

/// N(n), the number of partitions of n with non-negative rank.
pub fn nonneg_rank_table<T: Coeff>(n_max: usize, bound: usize) -> Result<TableSet<T>> {
    Ok(TableSet {
        name: "N".into(),
        tables: vec![
            SequenceTable::from_series("N", "theta-sum", &gf::rank_nonneg_theta(n_max)?),
            SequenceTable::from_series(
                "N",
                "gaussian-binomial-sum",
                &gf::rank_nonneg_binomial(n_max)?,
            ),
            rank_counts_ferrers::<T>(n_max)?.table_at_least(
                "N",
                Source::Recurrence,
                "ferrers",
                0,
            )?,
            count_enumerated("N", n_max, bound, |p| p.rank() >= 0)?,
        ],
    })
}

/// R(n), the number of partitions of n with positive rank.
pub fn pos_rank_table<T: Coeff>(n_max: usize, bound: usize) -> Result<TableSet<T>> {
    Ok(TableSet {
        name: "R".into(),
        tables: vec![
            SequenceTable::from_series("R", "theta-sum", &gf::rank_pos_theta(n_max)?),
            SequenceTable::from_series(
                "R",
                "gaussian-binomial-sum",
                &gf::rank_pos_binomial(n_max)?,
            ),
            rank_counts_ferrers::<T>(n_max)?.table_at_least(
                "R",
                Source::Recurrence,
                "ferrers",
                1,
            )?,
            count_enumerated("R", n_max, bound, |p| p.rank() >= 1)?,
        ],
    })
}

/// ge(n), partitions with rank at most -2.
pub fn ge_table<T: Coeff>(n_max: usize, bound: usize) -> Result<TableSet<T>> {
    Ok(TableSet {
        name: "ge".into(),
        tables: vec![
            SequenceTable::from_series("ge", "theta-sum", &gf::eden_theta(n_max)?),
            rank_counts_ferrers::<T>(n_max)?.table_at_most(
                "ge",
                Source::Recurrence,
                "ferrers",
                -2,
            )?,
            count_enumerated("ge", n_max, bound, |p| p.rank() <= -2)?,
        ],
    })
}

// ---- crank ---------------------------------------------------------------

/// C(n) and D(n), plus the enumerated crank distribution M(m, n).
///
/// The canonical C and D tables are the generating-function values. For
/// `n = 1` they describe the signed count `M(0,1) = -1`, `M(±1,1) = 1`, so
/// enumerated `{crank ≥ 1}` disagrees with D at `n = 1` and is kept apart
/// in `positive_enumerated`.
#[derive(Debug, Clone)]
pub struct CrankTables<T> {
    pub nonneg: TableSet<T>,
    pub positive: TableSet<T>,
    pub positive_enumerated: SequenceTable<T>,
    pub distribution: StatGrid<T>,
}

pub fn crank_tables<T: Coeff>(n_max: usize, bound: usize) -> Result<CrankTables<T>> {
    let structural = crank_nonneg_structural::<T>(n_max)?;
    let p = p_table::<T>(n_max)?;
    let complement = p
        .values
        .iter()
        .zip(&structural.values)
        .map(|(a, b)| a.try_sub(b))
        .collect::<Result<Vec<T>>>()?;
    Ok(CrankTables {
        nonneg: TableSet {
            name: "C".into(),
            tables: vec![
                SequenceTable::from_series("C", "theta-sum", &gf::crank_nonneg_theta(n_max)?),
                SequenceTable::from_series("C", "squares-sum", &gf::crank_nonneg_squares(n_max)?),
                structural,
                count_enumerated("C", n_max, bound, |p| p.crank() >= 0)?,
            ],
        },
        positive: TableSet {
            name: "D".into(),
            tables: vec![
                SequenceTable::from_series("D", "theta-sum", &gf::crank_pos_theta(n_max)?),
                SequenceTable::from_series("D", "squares-sum", &gf::crank_pos_squares(n_max)?),
                SequenceTable::new("D", Source::Recurrence, "negative-crank", complement),
            ],
        },
        positive_enumerated: count_enumerated("D", n_max, bound, |p| p.crank() >= 1)?,
        distribution: crank_counts_enumerated(n_max, bound)?,
    })
}

pub fn crank_counts_enumerated<T: Coeff>(n_max: usize, bound: usize) -> Result<StatGrid<T>> {
    let limit = n_max.min(bound);
    let mut grid = StatGrid::zero(limit);
    enumerate_upto(limit, |n, p| grid.add_to(p.crank(), n, &T::one()))?;
    Ok(grid)
}

/// Number of partitions with non-negative crank, counted by structure.
///
/// A partition without ones always qualifies. With `w ≥ 1` ones it qualifies
/// when at least `w` of its other parts exceed `w`; those parts minus `w` form a
/// partition into exactly `t ≥ w` parts, and the remaining parts lie in `[2, w]`.
pub fn crank_nonneg_structural<T: Coeff>(n_max: usize) -> Result<SequenceTable<T>> {
    let n1 = n_max + 1;
    // exact[u][t]: partitions of u into exactly t parts
    let mut exact = vec![vec![T::zero(); n1]; n1];
    exact[0][0] = T::one();
    for u in 1..n1 {
        for t in 1..=u {
            let mut v = exact[u - 1][t - 1].clone();
            if u >= t {
                v = v.try_add(&exact[u - t][t])?;
            }
            exact[u][t] = v;
        }
    }
    // parts >= 2, unrestricted
    let mut no_ones = vec![T::zero(); n1];
    no_ones[0] = T::one();
    for part in 2..n1 {
        for s in part..n1 {
            no_ones[s] = no_ones[s].try_add(&no_ones[s - part].clone())?;
        }
    }
    let mut counts = no_ones;
    // small[y]: partitions of y into parts in [2, w]
    let mut small = vec![T::zero(); n1];
    small[0] = T::one();
    for w in 1..n1 {
        if w >= 2 {
            for s in w..n1 {
                small[s] = small[s].try_add(&small[s - w].clone())?;
            }
        }
        // big[x]: partitions of x into at least w parts, all > w
        let mut big = vec![T::zero(); n1];
        for (x, slot) in big.iter_mut().enumerate().take(n1.saturating_sub(w)) {
            let mut t = w;
            while t * w <= x && t <= x {
                *slot = slot.try_add(&exact[x - t * w][t])?;
                t += 1;
            }
        }
        for (rest, count) in counts.iter_mut().skip(w).enumerate() {
            let mut acc = T::zero();
            for x in 0..=rest {
                if big[x].is_zero() || small[rest - x].is_zero() {
                    continue;
                }
                acc = acc.try_add(&big[x].try_mul(&small[rest - x])?)?;
            }
            *count = count.try_add(&acc)?;
        }
    }
    Ok(SequenceTable::new(
        "C",
        Source::Recurrence,
        "crank-structure",
        counts,
    ))
}

// ---- M_k and p₃ ------------------------------------------------------------

/// M_k(n) from `(-1)^{k-1} Σ_{j<k} (-1)^j [p(n - j(3j+1)/2) - p(n - j(3j+5)/2 - 1)]`
/// for `n > 0`, and `M_k(0) = 0`.
pub fn mk_alternating<T: Coeff>(k: usize, p: &SequenceTable<T>) -> Result<SequenceTable<T>> {
    assert!(k >= 1, "M_k needs k >= 1");
    let mut values = vec![T::zero()];
    for n in 1..=p.n_max() as i64 {
        let mut acc = T::zero();
        for j in 0..k as i64 {
            let d = p
                .at(n - j * (3 * j + 1) / 2)
                .try_sub(&p.at(n - j * (3 * j + 5) / 2 - 1))?;
            acc = if j % 2 == 0 {
                acc.try_add(&d)?
            } else {
                acc.try_sub(&d)?
            };
        }
        values.push(if k % 2 == 1 { acc } else { -acc });
    }
    Ok(SequenceTable::new(
        "Mk",
        Source::Recurrence,
        "alternating-sum",
        values,
    ))
}

/// `k` is the least missing part, and parts above `k` outnumber parts below it.
pub fn counts_toward_mk(p: &Partition, k: usize) -> bool {
    if p.least_missing() != k {
        return false;
    }
    let above = p.parts().iter().filter(|&&x| x > k).count();
    let below = p.parts().iter().filter(|&&x| x < k).count();
    above > below
}

pub fn mk_enumerated<T: Coeff>(k: usize, n_max: usize, bound: usize) -> Result<SequenceTable<T>> {
    count_enumerated("Mk", n_max, bound, |p| counts_toward_mk(p, k))
}

pub fn mk_table<T: Coeff>(k: usize, n_max: usize, bound: usize) -> Result<TableSet<T>> {
    let p = p_table(n_max)?;
    Ok(TableSet {
        name: format!("M{k}"),
        tables: vec![mk_alternating(k, &p)?, mk_enumerated(k, n_max, bound)?],
    })
}

/// p₃(n), partitions with no part divisible by 3.
pub fn p3_table<T: Coeff>(n_max: usize, bound: usize) -> Result<TableSet<T>> {
    Ok(TableSet {
        name: "p3".into(),
        tables: vec![
            SequenceTable::from_series("p3", "eta-quotient", &gf::no_multiple_of_three(n_max)?),
            count_enumerated("p3", n_max, bound, |p| p.parts().iter().all(|x| x % 3 != 0))?,
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    type Z = i128;
    const B: usize = super::super::DEFAULT_ORACLE_BOUND;

    fn vals(t: &SequenceTable<Z>) -> Vec<i64> {
        t.values.iter().map(|&v| v as i64).collect()
    }

    #[test]
    fn partition_numbers() {
        let p = p_table::<Z>(10).unwrap();
        assert_eq!(vals(&p), vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(p.at(-3), 0);
        assert_eq!(vals(&p_enumerated::<Z>(10, B).unwrap()), vals(&p));
        assert_eq!(vals(&p_table::<Z>(0).unwrap()), vec![1]);
    }

    #[test]
    fn enumeration_matches_recurrence_to_bound() {
        let p = p_table::<Z>(45).unwrap();
        let e = p_enumerated::<Z>(45, 45).unwrap();
        assert_eq!(
            p,
            SequenceTable {
                method: p.method,
                source: p.source,
                ..e
            }
        );
        assert_eq!(*p.get(45), 89134);
    }

    #[test]
    fn rank_grid_examples() {
        let r = rank_counts::<Z>(30, 30).unwrap();
        assert_eq!(r.enumeration.get(0, 3), 1);
        for n in 0..=30 {
            for m in -30..=30 {
                assert_eq!(r.enumeration.get(m, n), r.enumeration.get(-m, n));
                assert_eq!(
                    r.ferrers.get(m, n),
                    r.enumeration.get(m, n),
                    "ferrers m={m} n={n}"
                );
                assert_eq!(
                    r.generating_function.get(m, n),
                    r.enumeration.get(m, n),
                    "gf m={m} n={n}"
                );
            }
        }
        let p = p_table::<Z>(30).unwrap();
        assert_eq!(r.enumeration.totals().unwrap(), p.values);
    }

    #[test]
    fn nonneg_and_positive_rank() {
        let n = nonneg_rank_table::<Z>(40, B).unwrap();
        let r = pos_rank_table::<Z>(40, B).unwrap();
        assert_eq!(n.agreement(&[]), Ok(()));
        assert_eq!(r.agreement(&[]), Ok(()));
        assert_eq!(vals(n.canonical())[..6], [1, 1, 1, 2, 3, 4]);
        assert_eq!(vals(r.canonical())[..6], [0, 0, 1, 1, 2, 3]);
        let p = p_table::<Z>(40).unwrap();
        let rank = rank_counts_enumerated::<Z>(40, B).unwrap();
        for i in 0..=40 {
            assert_eq!(
                n.canonical().values[i] + r.canonical().values[i],
                p.values[i]
            );
            assert_eq!(
                n.canonical().values[i] - r.canonical().values[i],
                rank.get(0, i)
            );
        }
    }

    #[test]
    fn garden_of_eden() {
        let ge = ge_table::<Z>(40, B).unwrap();
        assert_eq!(ge.agreement(&[]), Ok(()));
        assert_eq!(vals(ge.canonical())[..7], [0, 0, 0, 1, 1, 2, 3]);
        let r = pos_rank_table::<Z>(40, B).unwrap();
        let rank = rank_counts_enumerated::<Z>(40, B).unwrap();
        for n in 0..=40 {
            assert_eq!(
                ge.canonical().values[n],
                r.canonical().values[n] - rank.get(1, n),
                "n={n}"
            );
        }
    }

    #[test]
    fn crank_sequences() {
        let c = crank_tables::<Z>(40, B).unwrap();
        assert_eq!(c.nonneg.agreement(&[]), Ok(()));
        assert_eq!(c.positive.agreement(&[]), Ok(()));
        assert_eq!(c.nonneg.canonical().values[0], 1);
        assert_eq!(c.positive.canonical().values[0], 0);
        assert_eq!(c.positive.canonical().values[1], 1);
        assert_eq!(c.positive_enumerated.values[1], 0);
        for n in 2..=40 {
            assert_eq!(
                c.positive_enumerated.values[n],
                c.positive.canonical().values[n]
            );
        }
    }

    #[test]
    fn crank_complement_to_two_hundred() {
        let c = crank_tables::<Z>(200, 20).unwrap();
        let p = p_table::<Z>(200).unwrap();
        assert_eq!(c.nonneg.agreement(&[]), Ok(()));
        assert_eq!(c.positive.agreement(&[]), Ok(()));
        for n in 0..=200 {
            assert_eq!(
                c.nonneg.canonical().values[n] + c.positive.canonical().values[n],
                p.values[n]
            );
        }
    }

    #[test]
    fn mk_examples() {
        let m1 = mk_table::<Z>(1, 40, B).unwrap();
        assert_eq!(m1.canonical().values[5], 2);
        assert_eq!(m1.tables[1].values[5], 2);
        for k in 1..=6 {
            let t = mk_table::<Z>(k, 40, B).unwrap();
            assert_eq!(t.agreement(&[]), Ok(()), "k={k}");
            assert_eq!(t.canonical().values[0], 0);
            for n in 0..(k * (3 * k + 1) / 2).min(41) {
                assert_eq!(t.canonical().values[n], 0, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn no_multiples_of_three() {
        let t = p3_table::<Z>(40, B).unwrap();
        assert_eq!(t.agreement(&[]), Ok(()));
        assert_eq!(vals(t.canonical())[..7], [1, 1, 2, 2, 4, 5, 7]);
    }
}
