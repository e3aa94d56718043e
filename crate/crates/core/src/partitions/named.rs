use super::{mk_alternating, p_table, SequenceTable, Source};
use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::gf;
use crate::qseries::bivariate_crank_product;

/// Names accepted by [`named_sequence`].
pub const SEQUENCE_NAMES: [&str; 10] = ["p", "N", "R", "C", "D", "ge", "p3", "Mk", "rank", "crank"];

fn missing(id: &str, what: &str, domain: &str) -> Error {
    Error::OutOfDomain {
        id: id.to_owned(),
        params: format!("{what} missing"),
        domain: domain.to_owned(),
    }
}

/// The canonical table for a sequence name, for `0 ≤ n ≤ n_max`.
///
/// `Mk` needs `k ≥ 1`; `rank` and `crank` need `m`. For `crank` the values at
/// `n ≤ 1` are the generating function's coefficients, not partition counts.
pub fn named_sequence<T: Coeff>(
    name: &str,
    n_max: usize,
    k: Option<usize>,
    m: Option<i64>,
) -> Result<SequenceTable<T>> {
    let from = |label: &str, method, s: Result<_>| -> Result<SequenceTable<T>> {
        Ok(SequenceTable::from_series(label, method, &s?))
    };
    match name {
        "p" => p_table(n_max),
        "N" => from("N", "theta-sum", gf::rank_nonneg_theta(n_max)),
        "R" => from("R", "theta-sum", gf::rank_pos_theta(n_max)),
        "C" => from("C", "theta-sum", gf::crank_nonneg_theta(n_max)),
        "D" => from("D", "theta-sum", gf::crank_pos_theta(n_max)),
        "ge" => from("ge", "theta-sum", gf::eden_theta(n_max)),
        "p3" => from("p3", "eta-quotient", gf::no_multiple_of_three(n_max)),
        "Mk" | "mk" => {
            let k = k.ok_or_else(|| missing("Mk", "k", "k >= 1"))?;
            if k == 0 {
                return Err(Error::OutOfDomain {
                    id: "Mk".into(),
                    params: "k=0".into(),
                    domain: "k >= 1".into(),
                });
            }
            let mut t = mk_alternating(k, &p_table(n_max)?)?;
            t.name = format!("M{k}");
            Ok(t)
        }
        "rank" => {
            let m = m.ok_or_else(|| missing("rank", "m", "any integer m"))?;
            from(&format!("N({m},n)"), "theta-sum", gf::rank_column(m, n_max))
        }
        "crank" => {
            let m = m.ok_or_else(|| missing("crank", "m", "any integer m"))?;
            let product = bivariate_crank_product::<T>(n_max, n_max)?;
            Ok(SequenceTable::new(
                &format!("M({m},n)"),
                Source::GeneratingFunction,
                "crank-product",
                product.z_column(m).into_coeffs(),
            ))
        }
        other => Err(Error::UnknownSequence(other.to_owned())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn text(name: &str, n: usize, k: Option<usize>, m: Option<i64>) -> Vec<i128> {
        named_sequence::<i128>(name, n, k, m).unwrap().values
    }

    #[test]
    fn examples() {
        assert_eq!(
            text("p", 10, None, None),
            vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
        );
        assert_eq!(text("ge", 6, None, None), vec![0, 0, 0, 1, 1, 2, 3]);
        assert_eq!(text("p", 0, None, None), vec![1]);
        assert_eq!(text("crank", 5, None, Some(0)), vec![1, -1, 0, 1, 1, 1]);
        assert_eq!(text("Mk", 7, Some(2), None), vec![0, 0, 0, 0, 0, 0, 0, 1]);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            named_sequence::<i128>("Mk", 5, None, None),
            Err(Error::OutOfDomain { .. })
        ));
        assert!(matches!(
            named_sequence::<i128>("q", 5, None, None),
            Err(Error::UnknownSequence(_))
        ));
    }
}
