//! Registry of q-series identities, each verified coefficient by coefficient.
//!
//! Every entry lists two or more independently built sides. Verification
//! builds all of them modulo `q^(order+1)` and compares the first side with
//! each of the others.

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::gf;
use crate::partitions::{self, crank_counts_enumerated, StatGrid};
use crate::qseries::{bivariate_crank_product, BivariateLaurent, TruncatedSeries};

type S<T> = TruncatedSeries<T>;

/// Largest bivariate q-order used for the crank-product identity.
pub const CRANK_PRODUCT_ORDER_CAP: usize = 25;
/// Rank values covered by the per-rank generating function entry.
pub const RANK_COLUMN_BOUND: i64 = 5;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
}

impl Params {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn k(k: usize) -> Self {
        Self {
            k: Some(k),
            m: None,
        }
    }

    pub fn m(m: i64) -> Self {
        Self {
            k: None,
            m: Some(m),
        }
    }

    fn k_val(&self) -> usize {
        self.k.expect("domain check guarantees k")
    }

    fn m_val(&self) -> i64 {
        self.m.expect("domain check guarantees m")
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.k, self.m) {
            (Some(k), _) => write!(f, "k={k}"),
            (None, Some(m)) => write!(f, "m={m}"),
            (None, None) => write!(f, "-"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// No parameters.
    Fixed,
    /// `k ≥ min`.
    KAtLeast(usize),
    /// `|m| ≤ bound`.
    RankValue(i64),
}

impl Domain {
    pub fn contains(&self, p: &Params) -> bool {
        match *self {
            Domain::Fixed => p.k.is_none() && p.m.is_none(),
            Domain::KAtLeast(min) => p.m.is_none() && p.k.is_some_and(|k| k >= min),
            Domain::RankValue(b) => p.k.is_none() && p.m.is_some_and(|m| m.abs() <= b),
        }
    }

    /// Parameter values covered by a suite run with the given `k_max`.
    pub fn instances(&self, k_max: usize) -> Vec<Params> {
        match *self {
            Domain::Fixed => vec![Params::none()],
            Domain::KAtLeast(min) => (min..=k_max).map(Params::k).collect(),
            Domain::RankValue(b) => (-b..=b).map(Params::m).collect(),
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Domain::Fixed => write!(f, "no parameters"),
            Domain::KAtLeast(0) => write!(f, "k >= 0"),
            Domain::KAtLeast(1) => write!(f, "k >= 1"),
            Domain::KAtLeast(min) => write!(f, "k > {}", min - 1),
            Domain::RankValue(b) => write!(f, "|m| <= {b}"),
        }
    }
}

pub type Builder<T> = fn(&Params, usize) -> Result<TruncatedSeries<T>>;

#[derive(Clone, Copy)]
pub struct Side<T> {
    pub label: &'static str,
    pub build: Builder<T>,
}

#[derive(Clone)]
pub enum Check<T> {
    /// All sides must agree modulo `q^(order+1)`.
    Series(Vec<Side<T>>),
    /// Crank product against enumerated crank counts, bivariate.
    CrankProduct,
}

/// How the requested order maps to the order actually compared.
#[derive(Debug, Clone, Copy)]
pub enum OrderRule {
    AsRequested,
    /// Capped (bivariate entry).
    AtMost(usize),
    /// Raised to the full polynomial degree so the comparison is exact.
    AtLeastDegree(fn(&Params) -> usize),
}

#[derive(Clone)]
pub struct IdentityDescriptor<T> {
    pub id: &'static str,
    pub domain: Domain,
    pub locus: &'static str,
    pub check: Check<T>,
    pub order_rule: OrderRule,
}

impl<T> fmt::Debug for IdentityDescriptor<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityDescriptor")
            .field("id", &self.id)
            .field("domain", &self.domain)
            .field("locus", &self.locus)
            .finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Mismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MismatchDetail {
    #[serde(rename = "exp")]
    pub exponent: usize,
    /// Power of z, for the bivariate entry.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<i64>,
    pub lhs: String,
    pub rhs: String,
    pub lhs_side: String,
    pub rhs_side: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub params: Params,
    pub order: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<MismatchDetail>,
    /// Wall time; kept out of the serialized payload so reports are reproducible.
    #[serde(skip)]
    pub millis: u64,
}

impl IdentityReport {
    pub fn verified(&self) -> bool {
        self.status == Status::Verified
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<4} {:<6} order {:<4} {}",
            self.id,
            self.params.to_string(),
            self.order,
            match self.status {
                Status::Verified => "verified",
                Status::Mismatch => "MISMATCH",
            }
        )?;
        if let Some(m) = &self.mismatch {
            write!(f, " at q^{}", m.exponent)?;
            if let Some(z) = m.z {
                write!(f, " z^{z}")?;
            }
            write!(
                f,
                ": {} = {} vs {} = {}",
                m.lhs_side, m.lhs, m.rhs_side, m.rhs
            )?;
        }
        Ok(())
    }
}

pub struct IdentityRegistry<T> {
    entries: Vec<IdentityDescriptor<T>>,
    oracle_bound: usize,
}

impl<T: Coeff> Default for IdentityRegistry<T> {
    fn default() -> Self {
        Self::standard()
    }
}

impl<T: Coeff> IdentityRegistry<T> {
    pub fn standard() -> Self {
        Self {
            entries: registry(),
            oracle_bound: partitions::DEFAULT_ORACLE_BOUND,
        }
    }

    pub fn with_oracle_bound(mut self, bound: usize) -> Self {
        self.oracle_bound = bound;
        self
    }

    pub fn entries(&self) -> &[IdentityDescriptor<T>] {
        &self.entries
    }

    pub fn get(&self, id: &str) -> Result<&IdentityDescriptor<T>> {
        self.entries
            .iter()
            .find(|d| d.id.eq_ignore_ascii_case(id))
            .ok_or_else(|| Error::UnknownIdentity(id.to_owned()))
    }

    /// Swaps in a different descriptor with the same id.
    pub fn replace(&mut self, desc: IdentityDescriptor<T>) -> Result<()> {
        let slot = self
            .entries
            .iter_mut()
            .find(|d| d.id == desc.id)
            .ok_or_else(|| Error::UnknownIdentity(desc.id.to_owned()))?;
        *slot = desc;
        Ok(())
    }

    pub fn effective_order(
        &self,
        desc: &IdentityDescriptor<T>,
        params: &Params,
        order: usize,
    ) -> usize {
        match desc.order_rule {
            OrderRule::AsRequested => order,
            OrderRule::AtMost(cap) => order.min(cap).min(self.oracle_bound),
            OrderRule::AtLeastDegree(deg) => order.max(deg(params)),
        }
    }

    pub fn verify(&self, id: &str, params: Params, order: usize) -> Result<IdentityReport> {
        let desc = self.get(id)?;
        if !desc.domain.contains(&params) {
            return Err(Error::OutOfDomain {
                id: desc.id.to_owned(),
                params: params.to_string(),
                domain: desc.domain.to_string(),
            });
        }
        let order = self.effective_order(desc, &params, order);
        let start = Instant::now();
        let mismatch = match &desc.check {
            Check::Series(sides) => compare_sides(sides, &params, order)?,
            Check::CrankProduct => compare_crank_product::<T>(order, self.oracle_bound)?,
        };
        Ok(IdentityReport {
            id: desc.id.to_owned(),
            params,
            order,
            status: if mismatch.is_none() {
                Status::Verified
            } else {
                Status::Mismatch
            },
            mismatch,
            millis: start.elapsed().as_millis() as u64,
        })
    }

    /// Every entry over its parameter range, `k` up to `k_max`. Reports come
    /// back in registry order, then parameter order.
    pub fn run_suite(&self, order: usize, k_max: usize) -> Result<Vec<IdentityReport>> {
        let jobs: Vec<(&'static str, Params)> = self
            .entries
            .iter()
            .flat_map(|d| {
                d.domain
                    .instances(k_max)
                    .into_iter()
                    .map(move |p| (d.id, p))
            })
            .collect();
        jobs.par_iter()
            .map(|&(id, p)| self.verify(id, p, order))
            .collect()
    }
}

fn compare_sides<T: Coeff>(
    sides: &[Side<T>],
    params: &Params,
    order: usize,
) -> Result<Option<MismatchDetail>> {
    let first = (sides[0].build)(params, order)?;
    for side in &sides[1..] {
        let other = (side.build)(params, order)?;
        if let Some(m) = first.first_mismatch(&other)? {
            return Ok(Some(MismatchDetail {
                exponent: m.exponent,
                z: None,
                lhs: m.lhs.to_string(),
                rhs: m.rhs.to_string(),
                lhs_side: sides[0].label.to_owned(),
                rhs_side: side.label.to_owned(),
            }));
        }
    }
    Ok(None)
}

/// Enumerated crank counts for `n ≥ 2`, with the generating function's signed
/// values at `n ≤ 1`.
pub fn crank_counts_with_low_terms<T: Coeff>(
    q_order: usize,
    bound: usize,
) -> Result<BivariateLaurent<T>> {
    let grid: StatGrid<T> = crank_counts_enumerated(q_order, bound)?;
    let mut out = BivariateLaurent::zero(q_order, q_order);
    let w = q_order as i64;
    for n in 2..=q_order {
        for m in -w..=w {
            out.set(n, m, grid.get(m, n));
        }
    }
    out.set(0, 0, T::one());
    if q_order >= 1 {
        out.set(1, -1, T::one());
        out.set(1, 0, -T::one());
        out.set(1, 1, T::one());
    }
    Ok(out)
}

fn compare_crank_product<T: Coeff>(q_order: usize, bound: usize) -> Result<Option<MismatchDetail>> {
    let product = bivariate_crank_product::<T>(q_order, q_order)?;
    let counts = crank_counts_with_low_terms::<T>(q_order, bound)?;
    Ok(product
        .first_mismatch(&counts)?
        .map(|(n, m, a, b)| MismatchDetail {
            exponent: n,
            z: Some(m),
            lhs: a.to_string(),
            rhs: b.to_string(),
            lhs_side: "crank-product".into(),
            rhs_side: "enumerated-crank".into(),
        }))
}

// ---- side builders ------------------------------------------------------

fn alt(j: usize) -> i64 {
    if j.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn partial_theta<T: Coeff>(order: usize, terms: Vec<(usize, i64)>) -> Result<S<T>> {
    gf::over_euler(order, terms)
}

fn rank_ferrers_table<T: Coeff>(order: usize) -> Result<StatGrid<T>> {
    partitions::rank_counts_ferrers(order)
}

fn lhs_pentagonal_pairs<T: Coeff>(p: &Params, order: usize) -> Result<S<T>> {
    let k = p.k_val();
    let mut terms = Vec::new();
    for j in 0..k {
        let e = j * (3 * j + 1) / 2;
        terms.push((e, alt(j)));
        terms.push((e + 2 * j + 1, -alt(j)));
    }
    partial_theta(order, terms)
}

fn lhs_nonneg_rank_partial<T: Coeff>(p: &Params, order: usize) -> Result<S<T>> {
    let terms = (0..p.k_val())
        .map(|j| (j * (3 * j + 1) / 2, alt(j)))
        .collect();
    partial_theta(order, terms)
}

fn lhs_shifted_rank_partial<T: Coeff>(p: &Params, order: usize) -> Result<S<T>> {
    let terms = (0..p.k_val())
        .map(|j| (j * (3 * j + 5) / 2 + 1, alt(j)))
        .collect();
    partial_theta(order, terms)
}

fn lhs_pos_rank_partial<T: Coeff>(p: &Params, order: usize) -> Result<S<T>> {
    let terms = (1..p.k_val())
        .map(|j| (j * (3 * j + 1) / 2, -alt(j)))
        .collect();
    partial_theta(order, terms)
}

fn lhs_one_minus_shifted_partial<T: Coeff>(p: &Params, order: usize) -> Result<S<T>> {
    let mut terms = vec![(0, 1)];
    terms.extend((0..p.k_val()).map(|j| (j * (3 * j + 5) / 2 + 1, -alt(j))));
    partial_theta(order, terms)
}

fn lhs_crank_nonneg_partial<T: Coeff>(p: &Params, order: usize) -> Result<S<T>> {
    let terms = (0..p.k_val()).map(|n| (n * (n + 1) / 2, alt(n))).collect();
    partial_theta(order, terms)
}

fn lhs_eden_partial<T: Coeff>(p: &Params, order: usize) -> Result<S<T>> {
    let terms = (1..=p.k_val())
        .map(|n| (3 * n * (n + 1) / 2, -alt(n)))
        .collect();
    partial_theta(order, terms)
}

fn lhs_crank_pos_partial<T: Coeff>(p: &Params, order: usize) -> Result<S<T>> {
    let terms = (1..=p.k_val())
        .map(|n| (n * (n + 1) / 2, -alt(n)))
        .collect();
    partial_theta(order, terms)
}

fn lead_nonneg_rank(k: usize) -> usize {
    k * (3 * k + 1) / 2
}

fn lead_shifted_rank(k: usize) -> usize {
    k * (3 * k + 5) / 2 + 1
}

fn lead_crank_nonneg(k: usize) -> usize {
    k * (k + 1) / 2
}

fn lead_eden(k: usize) -> usize {
    3 * (k + 1) * (k + 2) / 2
}

fn lead_crank_pos(k: usize) -> usize {
    (k + 1) * (k + 2) / 2
}

/// `main + (-1)^e · tail`.
fn with_tail<T: Coeff>(main: S<T>, tail: S<T>, sign_exp: usize) -> Result<S<T>> {
    main.add(&tail.signed(sign_exp))
}

fn rhs_i5<T: Coeff>(p: &Params, order: usize, shift: usize) -> Result<S<T>> {
    let k = p.k_val();
    with_tail(
        gf::rank_nonneg_binomial(order)?,
        gf::tail_two_mod_three(lead_nonneg_rank(k) + shift, k, order)?,
        k - 1,
    )
}

fn rhs_i6<T: Coeff>(p: &Params, order: usize) -> Result<S<T>> {
    let k = p.k_val();
    let main = gf::rank_nonneg_binomial::<T>(order)?.sub(&S::one(order))?;
    with_tail(
        main,
        gf::tail_one_mod_three(lead_shifted_rank(k), k, order)?,
        k - 1,
    )
}

fn registry<T: Coeff>() -> Vec<IdentityDescriptor<T>> {
    use Domain::*;
    let series = |id, domain, locus, sides: Vec<Side<T>>| IdentityDescriptor {
        id,
        domain,
        locus,
        check: Check::Series(sides),
        order_rule: OrderRule::AsRequested,
    };
    let side = |label, build: Builder<T>| Side { label, build };

    vec![
        series(
            "I1",
            RankValue(RANK_COLUMN_BOUND),
            "rank generating function N(m,n)",
            vec![
                side("rank-column", |p, o| gf::rank_column(p.m_val(), o)),
                side("ferrers-count", |p, o| {
                    S::from_coeffs(rank_ferrers_table::<T>(o)?.column(p.m_val()))
                }),
            ],
        ),
        series(
            "I2",
            Fixed,
            "non-negative rank generating function",
            vec![
                side("theta-sum", |_, o| gf::rank_nonneg_theta(o)),
                side("gaussian-binomial-sum", |_, o| gf::rank_nonneg_binomial(o)),
                side("ferrers-count", |_, o| {
                    let t = rank_ferrers_table::<T>(o)?.table_at_least(
                        "N",
                        partitions::Source::Recurrence,
                        "ferrers",
                        0,
                    )?;
                    t.to_series(o)
                }),
            ],
        ),
        series(
            "I3",
            Fixed,
            "positive rank generating function",
            vec![
                side("theta-sum", |_, o| gf::rank_pos_theta(o)),
                side("gaussian-binomial-sum", |_, o| gf::rank_pos_binomial(o)),
                side("ferrers-count", |_, o| {
                    let t = rank_ferrers_table::<T>(o)?.table_at_least(
                        "R",
                        partitions::Source::Recurrence,
                        "ferrers",
                        1,
                    )?;
                    t.to_series(o)
                }),
            ],
        ),
        series(
            "I4",
            KAtLeast(1),
            "truncated pentagonal number theorem",
            vec![
                side("truncated-theta", lhs_pentagonal_pairs),
                side("least-gap-sum", |p, o| {
                    let k = p.k_val();
                    with_tail(S::one(o), gf::least_gap_sum(k, o)?, k - 1)
                }),
            ],
        ),
        series(
            "I5",
            KAtLeast(1),
            "truncated non-negative rank identity, first form",
            vec![
                side("truncated-theta", lhs_nonneg_rank_partial),
                side("binomial-plus-tail", |p, o| rhs_i5(p, o, 0)),
            ],
        ),
        series(
            "I6",
            KAtLeast(1),
            "truncated non-negative rank identity, second form",
            vec![
                side("truncated-theta", lhs_shifted_rank_partial),
                side("binomial-plus-tail", rhs_i6),
            ],
        ),
        series(
            "I7",
            KAtLeast(2),
            "truncated positive rank identity, first form",
            vec![
                side("truncated-theta", lhs_pos_rank_partial),
                side("binomial-plus-tail", |p, o| {
                    let k = p.k_val();
                    with_tail(
                        gf::rank_pos_binomial(o)?,
                        gf::tail_two_mod_three(lead_nonneg_rank(k), k, o)?,
                        k,
                    )
                }),
            ],
        ),
        series(
            "I8",
            KAtLeast(2),
            "truncated positive rank identity, second form",
            vec![
                side("truncated-theta", lhs_one_minus_shifted_partial),
                side("binomial-plus-tail", |p, o| {
                    let k = p.k_val();
                    let main = gf::rank_pos_binomial::<T>(o)?.add(&S::one(o))?;
                    with_tail(main, gf::tail_one_mod_three(lead_shifted_rank(k), k, o)?, k)
                }),
            ],
        ),
        IdentityDescriptor {
            id: "I9",
            domain: Fixed,
            locus: "crank generating function M(m,n)",
            check: Check::CrankProduct,
            order_rule: OrderRule::AtMost(CRANK_PRODUCT_ORDER_CAP),
        },
        series(
            "I10",
            Fixed,
            "non-negative crank generating function",
            vec![
                side("theta-sum", |_, o| gf::crank_nonneg_theta(o)),
                side("crank-structure", |_, o| {
                    partitions::crank_nonneg_structural::<T>(o)?.to_series(o)
                }),
            ],
        ),
        series(
            "I11",
            Fixed,
            "non-negative crank theta identity",
            vec![
                side("theta-sum", |_, o| gf::crank_nonneg_theta(o)),
                side("squares-sum", |_, o| gf::crank_nonneg_squares(o)),
            ],
        ),
        series(
            "I12",
            KAtLeast(1),
            "truncated non-negative crank identity",
            vec![
                side("truncated-theta", lhs_crank_nonneg_partial),
                side("squares-plus-tail", |p, o| {
                    let k = p.k_val();
                    with_tail(
                        gf::crank_nonneg_squares(o)?,
                        gf::tail_squares(lead_crank_nonneg(k), k, o)?,
                        k - 1,
                    )
                }),
            ],
        ),
        series(
            "I13",
            Fixed,
            "Garden of Eden generating function",
            vec![
                side("theta-sum", |_, o| gf::eden_theta(o)),
                side("ferrers-count", |_, o| {
                    let t = rank_ferrers_table::<T>(o)?.table_at_most(
                        "ge",
                        partitions::Source::Recurrence,
                        "ferrers",
                        -2,
                    )?;
                    t.to_series(o)
                }),
            ],
        ),
        series(
            "I14",
            Fixed,
            "Garden of Eden theta identity",
            vec![
                side("theta-sum", |_, o| gf::eden_theta(o)),
                side("product-sum", |_, o| gf::eden_product(o)),
            ],
        ),
        series(
            "I15",
            Fixed,
            "positive crank generating function",
            vec![
                side("theta-sum", |_, o| gf::crank_pos_theta(o)),
                side("squares-sum", |_, o| gf::crank_pos_squares(o)),
                side("negative-crank-count", |_, o| {
                    let c = partitions::crank_nonneg_structural::<T>(o)?.to_series(o)?;
                    gf::partition_gf::<T>(o)?.sub(&c)
                }),
            ],
        ),
        series(
            "I16",
            KAtLeast(1),
            "truncated Garden of Eden identity",
            vec![
                side("truncated-theta", lhs_eden_partial),
                side("product-plus-tail", |p, o| {
                    let k = p.k_val();
                    with_tail(
                        gf::eden_product(o)?,
                        gf::tail_eden(lead_eden(k), k, o)?,
                        k - 1,
                    )
                }),
            ],
        ),
        series(
            "I17",
            KAtLeast(1),
            "truncated positive crank identity",
            vec![
                side("truncated-theta", lhs_crank_pos_partial),
                side("squares-plus-tail", |p, o| {
                    let k = p.k_val();
                    with_tail(
                        gf::crank_pos_squares(o)?,
                        gf::tail_squares(lead_crank_pos(k), k + 1, o)?,
                        k - 1,
                    )
                }),
            ],
        ),
        series(
            "I18",
            KAtLeast(1),
            "least-gap sum as a difference of tails",
            vec![
                side("least-gap-sum", |p, o| gf::least_gap_sum(p.k_val(), o)),
                side("tail-difference", |p, o| {
                    let k = p.k_val();
                    gf::tail_two_mod_three::<T>(lead_nonneg_rank(k), k, o)?
                        .sub(&gf::tail_one_mod_three(lead_shifted_rank(k), k, o)?)
                }),
            ],
        ),
        IdentityDescriptor {
            order_rule: OrderRule::AtLeastDegree(|p| lead_nonneg_rank(p.k_val())),
            ..series(
                "I19",
                KAtLeast(0),
                "finite pentagonal truncation (Shanks)",
                vec![
                    side("theta-polynomial", |p, o| {
                        gf::shanks_theta_side(p.k_val(), o)
                    }),
                    side("product-polynomial", |p, o| {
                        gf::shanks_product_side(p.k_val(), o)
                    }),
                ],
            )
        },
        series(
            "I20",
            KAtLeast(0),
            "Shanks truncation over (q;q)_inf as two tails",
            vec![
                side("signed-shanks-quotient", |p, o| {
                    let k = p.k_val();
                    let q = gf::shanks_product_side::<T>(k, o)?.mul(&gf::partition_gf(o)?)?;
                    Ok(q.sub(&S::one(o))?.signed(k))
                }),
                side("tail-sum", |p, o| {
                    let k = p.k_val();
                    gf::tail_two_mod_three::<T>(k * (3 * k + 7) / 2 + 2, k + 1, o)?
                        .add(&gf::tail_one_mod_three(lead_shifted_rank(k), k, o)?)
                }),
            ],
        ),
        series(
            "I21",
            Fixed,
            "Garden of Eden as a convolution with p3",
            vec![
                side("ferrers-count", |_, o| {
                    let t = rank_ferrers_table::<T>(o)?.table_at_most(
                        "ge",
                        partitions::Source::Recurrence,
                        "ferrers",
                        -2,
                    )?;
                    t.to_series(o)
                }),
                side("dilated-crank-times-p3", |_, o| {
                    gf::crank_pos_theta::<T>(o)?
                        .dilate(3)
                        .mul(&gf::no_multiple_of_three(o)?)
                }),
            ],
        ),
    ]
}

/// I5 with the tail prefactor exponent raised by one. Used as a negative control.
pub fn perturbed_i5<T: Coeff>() -> IdentityDescriptor<T> {
    IdentityDescriptor {
        id: "I5",
        domain: Domain::KAtLeast(1),
        locus: "truncated non-negative rank identity, perturbed prefactor",
        check: Check::Series(vec![
            Side {
                label: "truncated-theta",
                build: lhs_nonneg_rank_partial,
            },
            Side {
                label: "perturbed-binomial-plus-tail",
                build: |p, o| rhs_i5(p, o, 1),
            },
        ]),
        order_rule: OrderRule::AsRequested,
    }
}

// ---- remainder checks ---------------------------------------------------

/// Leading term of `LHS - main part` for a truncated identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TailCheck {
    pub id: String,
    pub k: usize,
    pub order: usize,
    pub expected_exponent: usize,
    pub expected_sign: i8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub found_exponent: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub found_coeff: Option<String>,
    pub passed: bool,
}

/// Ids whose remainder leading term is checked by [`tail_check`].
pub const TAIL_IDS: [&str; 5] = ["I5", "I6", "I12", "I16", "I17"];

/// `LHS` minus the untruncated main series for one of [`TAIL_IDS`].
pub fn residual<T: Coeff>(id: &str, k: usize, order: usize) -> Result<S<T>> {
    let p = Params::k(k);
    let (lhs, main) = match id {
        "I5" => (
            lhs_nonneg_rank_partial(&p, order)?,
            gf::rank_nonneg_binomial(order)?,
        ),
        "I6" => (
            lhs_shifted_rank_partial(&p, order)?,
            gf::rank_nonneg_binomial::<T>(order)?.sub(&S::one(order))?,
        ),
        "I12" => (
            lhs_crank_nonneg_partial(&p, order)?,
            gf::crank_nonneg_squares(order)?,
        ),
        "I16" => (lhs_eden_partial(&p, order)?, gf::eden_product(order)?),
        "I17" => (
            lhs_crank_pos_partial(&p, order)?,
            gf::crank_pos_squares(order)?,
        ),
        _ => return Err(Error::UnknownIdentity(id.to_owned())),
    };
    lhs.sub(&main)
}

/// Where the remainder of a truncated identity must start.
pub fn expected_tail_exponent(id: &str, k: usize) -> Result<usize> {
    Ok(match id {
        "I5" => lead_nonneg_rank(k),
        "I6" => lead_shifted_rank(k),
        "I12" => lead_crank_nonneg(k),
        "I16" => lead_eden(k),
        "I17" => lead_crank_pos(k),
        _ => return Err(Error::UnknownIdentity(id.to_owned())),
    })
}

/// The remainder's first nonzero coefficient sits at the expected exponent and
/// has sign `(-1)^{k-1}`.
pub fn tail_check<T: Coeff>(id: &str, k: usize, order: usize) -> Result<TailCheck> {
    if k == 0 {
        return Err(Error::OutOfDomain {
            id: id.to_owned(),
            params: Params::k(k).to_string(),
            domain: Domain::KAtLeast(1).to_string(),
        });
    }
    let expected_exponent = expected_tail_exponent(id, k)?;
    let expected_sign: i8 = if k % 2 == 1 { 1 } else { -1 };
    let r = residual::<T>(id, k, order)?;
    let found = r.leading_term().map(|(e, c)| (e, c.clone()));
    let passed = match &found {
        Some((e, c)) => *e == expected_exponent && c.signum() == T::from(expected_sign as i64),
        // remainder lies entirely beyond the order
        None => expected_exponent > order,
    };
    Ok(TailCheck {
        id: id.to_owned(),
        k,
        order,
        expected_exponent,
        expected_sign,
        found_exponent: found.as_ref().map(|f| f.0),
        found_coeff: found.map(|f| f.1.to_string()),
        passed,
    })
}

/// The unsigned second remainder series (the one behind the `N(n)` inequality)
/// has no negative coefficient.
pub fn shifted_rank_tail_nonnegative<T: Coeff>(k: usize, order: usize) -> Result<bool> {
    let tail = gf::tail_one_mod_three::<T>(lead_shifted_rank(k), k, order)?;
    Ok(tail.coeffs().iter().all(|c| !c.is_negative()))
}

#[cfg(test)]
mod tests {
    use super::*;

    type R = IdentityRegistry<i128>;

    #[test]
    fn registry_has_all_entries() {
        let r = R::standard();
        let ids: Vec<_> = r.entries().iter().map(|d| d.id).collect();
        let expected: Vec<String> = (1..=21).map(|i| format!("I{i}")).collect();
        assert_eq!(ids, expected);
    }

    #[test]
    fn examples() {
        let r = R::standard();
        assert!(r.verify("I5", Params::k(1), 100).unwrap().verified());
        let rep = r.verify("I19", Params::k(5), 0).unwrap();
        assert!(rep.verified());
        assert_eq!(rep.order, 40);
        assert!(r.verify("I19", Params::k(0), 0).unwrap().verified());
    }

    #[test]
    fn domain_guards() {
        let r = R::standard();
        assert!(matches!(
            r.verify("I5", Params::k(0), 10),
            Err(Error::OutOfDomain { .. })
        ));
        assert!(matches!(
            r.verify("I7", Params::k(1), 10),
            Err(Error::OutOfDomain { .. })
        ));
        assert!(matches!(
            r.verify("I2", Params::k(1), 10),
            Err(Error::OutOfDomain { .. })
        ));
        assert!(matches!(
            r.verify("I1", Params::m(6), 10),
            Err(Error::OutOfDomain { .. })
        ));
        assert!(matches!(
            r.verify("I99", Params::none(), 10),
            Err(Error::UnknownIdentity(_))
        ));
    }

    #[test]
    fn perturbed_prefactor_is_caught() {
        let mut r = R::standard();
        r.replace(perturbed_i5()).unwrap();
        for k in 1..=4 {
            let rep = r.verify("I5", Params::k(k), 100).unwrap();
            assert_eq!(rep.status, Status::Mismatch);
            assert_eq!(rep.mismatch.unwrap().exponent, k * (3 * k + 1) / 2);
        }
    }

    #[test]
    fn order_zero_suite() {
        let reports = R::standard().run_suite(0, 1).unwrap();
        assert!(reports.iter().all(|r| r.verified()), "{reports:#?}");
    }

    #[test]
    fn suite_is_ordered() {
        let reports = R::standard().run_suite(12, 3).unwrap();
        assert!(reports.iter().all(|r| r.verified()));
        assert_eq!(reports[0].params, Params::m(-5));
        assert_eq!(reports.last().unwrap().id, "I21");
        let i19: Vec<_> = reports
            .iter()
            .filter(|r| r.id == "I19")
            .map(|r| r.params.k)
            .collect();
        assert_eq!(i19, vec![Some(0), Some(1), Some(2), Some(3)]);
    }

    #[test]
    fn tails_start_where_expected() {
        for id in TAIL_IDS {
            for k in 1..=4 {
                let t = tail_check::<i128>(id, k, 80).unwrap();
                assert!(t.passed, "{t:?}");
            }
        }
        assert!(shifted_rank_tail_nonnegative::<i128>(2, 80).unwrap());
    }

    #[test]
    fn bigint_backend_agrees() {
        let r = IdentityRegistry::<num_bigint::BigInt>::standard();
        assert!(r.verify("I12", Params::k(3), 60).unwrap().verified());
        assert!(r.verify("I9", Params::none(), 10).unwrap().verified());
    }
}
