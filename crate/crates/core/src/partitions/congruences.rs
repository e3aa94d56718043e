use serde::Serialize;

use super::{generalized_pentagonals, p_table, SequenceTable};
use crate::coeff::Coeff;
use crate::error::Result;
use crate::gf;

/// Outcome of the crank parity check: `C(n)` is odd exactly at twice a
/// generalized pentagonal number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParityReport {
    pub n_max: usize,
    /// Every `n` with `C(n)` odd.
    pub odd_at: Vec<usize>,
    /// Twice the generalized pentagonal numbers up to `n_max`.
    pub expected: Vec<usize>,
    pub passed: bool,
}

pub fn crank_parity<T: Coeff>(n_max: usize) -> Result<ParityReport> {
    let c = SequenceTable::<T>::from_series("C", "theta-sum", &gf::crank_nonneg_theta(n_max)?);
    let two = T::from(2);
    let odd_at: Vec<usize> = (0..=n_max)
        .filter(|&n| !(c.get(n).clone() % two.clone()).is_zero())
        .collect();
    let expected: Vec<usize> = generalized_pentagonals(n_max / 2)
        .into_iter()
        .map(|g| 2 * g)
        .collect();
    Ok(ParityReport {
        n_max,
        passed: odd_at == expected,
        odd_at,
        expected,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceCheck {
    /// `p(modulus·n + residue) ≡ 0 (mod modulus)`.
    pub modulus: usize,
    pub residue: usize,
    pub n_max: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<usize>,
    pub passed: bool,
}

/// Ramanujan's three congruences for `0 ≤ n ≤ n_max`.
pub fn ramanujan_congruences<T: Coeff>(n_max: usize) -> Result<Vec<CongruenceCheck>> {
    let p = p_table::<T>(11 * n_max + 6)?;
    Ok([(5, 4), (7, 5), (11, 6)]
        .into_iter()
        .map(|(modulus, residue)| {
            let m = T::from(modulus as i64);
            let first_failure = (0..=n_max)
                .find(|&n| !(p.get(modulus * n + residue).clone() % m.clone()).is_zero());
            CongruenceCheck {
                modulus,
                residue,
                n_max,
                first_failure,
                passed: first_failure.is_none(),
            }
        })
        .collect())
}
