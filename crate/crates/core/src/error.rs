use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("constant term is not a unit; series cannot be inverted")]
    NonUnit,
    #[error("coefficient overflow (try the arbitrary-precision backend)")]
    Overflow,
    #[error("invalid q-Pochhammer product: {0}")]
    InvalidPochhammer(String),
    #[error("z bound {z_bound} is smaller than q order {q_order}")]
    ZBoundTooSmall { q_order: usize, z_bound: usize },
    #[error("n = {n} exceeds the enumeration bound {bound}")]
    OracleBoundExceeded { n: usize, bound: usize },
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("unknown inequality family `{0}`")]
    UnknownFamily(String),
    #[error("unknown sequence `{0}`")]
    UnknownSequence(String),
    #[error("{id}: parameters {params} outside domain {domain}")]
    OutOfDomain {
        id: String,
        params: String,
        domain: String,
    },
    #[error("series must have at least one coefficient")]
    Empty,
}

pub type Result<T> = std::result::Result<T, Error>;
