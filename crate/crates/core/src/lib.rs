//! Exact q-series arithmetic for partition statistics.
//!
//! The crate is organised bottom-up:
//!
//! - [`qseries`]: truncated power series over an exact integer ring, q-Pochhammer
//!   products, Gaussian binomials and the bivariate crank product.
//! - [`gf`]: generating functions and remainder series built from those pieces.
//! - [`partitions`]: the brute-force partition oracle and every counting sequence
//!   (p, rank and crank counts, Garden of Eden partitions, M_k, p₃).
//! - [`identities`]: a registry of truncated theta identities, each side built
//!   independently and compared coefficient by coefficient.
//! - [`inequalities`]: the linear partition inequality families.
//! - [`suite`]: runs everything above and aggregates one report.
//!
//! All arithmetic is exact. Series are generic over the coefficient ring; the
//! aliases below fix it to `i128` (overflow is reported, never wrapped) or to
//! [`BigInt`] for orders beyond what `i128` can hold.

pub mod coeff;
pub mod error;
pub mod gf;
pub mod identities;
pub mod inequalities;
pub mod partitions;
pub mod qseries;
pub mod suite;

pub use coeff::Coeff;
pub use error::{Error, Result};
pub use num_bigint::BigInt;

/// Power series with `i128` coefficients.
pub type Series = qseries::TruncatedSeries<i128>;
/// Power series with arbitrary-precision coefficients.
pub type BigSeries = qseries::TruncatedSeries<BigInt>;
/// Bivariate crank series with `i128` coefficients.
pub type Bivariate = qseries::BivariateLaurent<i128>;
/// Sequence table with `i128` values.
pub type Table = partitions::SequenceTable<i128>;
/// Identity registry over `i128`.
pub type Registry = identities::IdentityRegistry<i128>;
/// Identity registry over [`BigInt`].
pub type BigRegistry = identities::IdentityRegistry<BigInt>;
/// Statistic tables over `i128`.
pub type StatTables = inequalities::StatTables<i128>;
