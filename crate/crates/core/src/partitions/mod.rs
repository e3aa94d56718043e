//! Integer partitions and the counting sequences built on them.
//!
//! Every sequence is available from at least two independent sources (a
//! generating function, a recurrence, or brute-force enumeration); a
//! [`TableSet`] holds them side by side so disagreement is detectable.

mod congruences;
mod enumerate;
mod grid;
mod named;
mod oracle;
mod table;
mod tables;

pub use congruences::{crank_parity, ramanujan_congruences, CongruenceCheck, ParityReport};
pub use enumerate::{enumerate_partitions, Partition, Partitions};
pub use grid::StatGrid;
pub use named::{named_sequence, SEQUENCE_NAMES};
pub use oracle::{oracle_checks, OracleCheck, OracleMismatch};
pub use table::{Disagreement, SequenceTable, Source, TableSet};
pub use tables::{
    crank_counts_enumerated, crank_nonneg_structural, crank_tables, ge_table, mk_alternating,
    mk_enumerated, mk_table, nonneg_rank_table, p3_table, p_enumerated, p_table, pos_rank_table,
    rank_column_series, rank_counts, rank_counts_ferrers, CrankTables, RankCounts,
};

/// Default brute-force enumeration bound.
pub const DEFAULT_ORACLE_BOUND: usize = 45;
/// Largest enumeration bound the tools accept.
pub const ORACLE_HARD_CAP: usize = 60;

/// Generalized pentagonal numbers `j(3j±1)/2`, ascending, up to `limit`.
pub fn generalized_pentagonals(limit: usize) -> Vec<usize> {
    let mut out = vec![0];
    for j in 1.. {
        let a = j * (3 * j - 1) / 2;
        if a > limit {
            break;
        }
        out.push(a);
        let b = j * (3 * j + 1) / 2;
        if b <= limit {
            out.push(b);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pentagonals() {
        assert_eq!(
            generalized_pentagonals(26),
            vec![0, 1, 2, 5, 7, 12, 15, 22, 26]
        );
        assert_eq!(generalized_pentagonals(0), vec![0]);
    }
}
