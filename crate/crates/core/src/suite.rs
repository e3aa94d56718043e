//! The full verification run: oracle cross-checks, every identity, remainder
//! checks, every inequality family and the arithmetic properties, collected
//! into one deterministic report.

use std::time::Instant;

use serde::Serialize;

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::identities::{
    perturbed_i5, shifted_rank_tail_nonnegative, tail_check, IdentityRegistry, IdentityReport,
    Params, TailCheck, TAIL_IDS,
};
use crate::inequalities::{
    self, check_families, equivalence_check, weaker_family_consistent, EquivalenceReport,
    InequalityReport, StatTables,
};
use crate::partitions::{
    self, crank_parity, mk_enumerated, oracle_checks, ramanujan_congruences, CongruenceCheck,
    OracleCheck, ParityReport,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    /// Truncation order for the identities.
    pub order: usize,
    /// Largest `k` for identities and remainder checks.
    pub k_max: usize,
    /// Largest `k` for the inequality families.
    pub ineq_k_max: usize,
    /// Range of `n` for the inequality families.
    pub n_max: usize,
    /// Range of `n` for enumeration cross-checks.
    pub oracle_n_max: usize,
    /// Refuse to enumerate partitions of anything larger.
    pub oracle_bound: usize,
    /// Largest `k` for the exact finite Shanks identity.
    pub shanks_k_max: usize,
    pub parity_n_max: usize,
    pub congruence_n_max: usize,
    /// Swap in a perturbed identity and a sign-flipped inequality family.
    pub negative_control: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            order: 200,
            k_max: 6,
            ineq_k_max: 8,
            n_max: 1000,
            oracle_n_max: 40,
            oracle_bound: partitions::DEFAULT_ORACLE_BOUND,
            shanks_k_max: 10,
            parity_n_max: 500,
            congruence_n_max: 100,
            negative_control: false,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.oracle_bound > partitions::ORACLE_HARD_CAP {
            return Err(Error::OracleBoundExceeded {
                n: self.oracle_bound,
                bound: partitions::ORACLE_HARD_CAP,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MkInterpretation {
    pub k_max: usize,
    pub n_max: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<(usize, usize)>,
    pub passed: bool,
}

/// The first family's value equals the enumerated `M_k(n)` for `1 ≤ n ≤ n_max`.
pub fn mk_interpretation<T: Coeff>(
    k_max: usize,
    n_max: usize,
    bound: usize,
    tables: &StatTables<T>,
) -> Result<MkInterpretation> {
    let f1 = inequalities::family("F1")?;
    let mut first_mismatch = None;
    'outer: for k in 1..=k_max {
        let enumerated = mk_enumerated::<T>(k, n_max, bound)?;
        for row in f1.values(k, tables)?.iter().take_while(|r| r.n <= n_max) {
            if &row.value != enumerated.get(row.n) {
                first_mismatch = Some((k, row.n));
                break 'outer;
            }
        }
    }
    Ok(MkInterpretation {
        k_max,
        n_max,
        passed: first_mismatch.is_none(),
        first_mismatch,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TailSection {
    pub checks: Vec<TailCheck>,
    /// The second rank remainder has non-negative coefficients for every `k`.
    pub shifted_rank_tail_nonnegative: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Timing {
    pub section: &'static str,
    pub millis: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub oracle_checks: usize,
    pub identity_reports: usize,
    pub identity_mismatches: usize,
    pub tail_checks: usize,
    pub tail_failures: usize,
    pub inequality_reports: usize,
    pub inequality_failures: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub passed: bool,
    pub summary: SuiteSummary,
    pub oracle: Vec<OracleCheck>,
    pub identities: Vec<IdentityReport>,
    pub shanks_exact: Vec<IdentityReport>,
    pub tails: TailSection,
    pub inequalities: Vec<InequalityReport>,
    pub equivalence: EquivalenceReport,
    pub weaker_family_consistent: bool,
    pub mk_interpretation: MkInterpretation,
    pub crank_parity: ParityReport,
    pub congruences: Vec<CongruenceCheck>,
    /// Wall time per section, reported separately from the payload.
    #[serde(skip)]
    pub timings: Vec<Timing>,
}

fn timed<R>(
    timings: &mut Vec<Timing>,
    section: &'static str,
    f: impl FnOnce() -> Result<R>,
) -> Result<R> {
    let start = Instant::now();
    let r = f()?;
    timings.push(Timing {
        section,
        millis: start.elapsed().as_millis() as u64,
    });
    Ok(r)
}

pub fn run<T: Coeff>(cfg: &SuiteConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let mut timings = Vec::new();

    let oracle = timed(&mut timings, "oracle", || {
        oracle_checks::<T>(cfg.oracle_n_max, cfg.oracle_bound, cfg.k_max)
    })?;

    let mut registry = IdentityRegistry::<T>::standard().with_oracle_bound(cfg.oracle_bound);
    let mut families = inequalities::families();
    if cfg.negative_control {
        registry.replace(perturbed_i5())?;
        for f in families.iter_mut().filter(|f| f.id == "F5") {
            *f = f.flipped();
        }
    }

    let identities = timed(&mut timings, "identities", || {
        registry.run_suite(cfg.order, cfg.k_max)
    })?;
    let shanks_exact = timed(&mut timings, "shanks-exact", || {
        (0..=cfg.shanks_k_max)
            .map(|k| registry.verify("I19", Params::k(k), 0))
            .collect::<Result<Vec<_>>>()
    })?;

    let tails = timed(&mut timings, "tails", || {
        let mut checks = Vec::new();
        for id in TAIL_IDS {
            for k in 1..=cfg.k_max {
                checks.push(tail_check::<T>(id, k, cfg.order)?);
            }
        }
        let mut nonneg = true;
        for k in 1..=cfg.k_max {
            nonneg &= shifted_rank_tail_nonnegative::<T>(k, cfg.order)?;
        }
        Ok(TailSection {
            checks,
            shifted_rank_tail_nonnegative: nonneg,
        })
    })?;

    let tables = timed(&mut timings, "tables", || StatTables::<T>::new(cfg.n_max))?;
    let inequalities = timed(&mut timings, "inequalities", || {
        check_families(&families, cfg.ineq_k_max, &tables)
    })?;
    let equivalence = equivalence_check(cfg.ineq_k_max, &tables)?;
    let weaker = weaker_family_consistent(cfg.k_max, &tables)?;
    let mk = timed(&mut timings, "mk-interpretation", || {
        let n = cfg.oracle_n_max.min(cfg.oracle_bound).min(cfg.n_max);
        mk_interpretation(cfg.k_max, n, cfg.oracle_bound, &tables)
    })?;
    let parity = crank_parity::<T>(cfg.parity_n_max)?;
    let congruences = ramanujan_congruences::<T>(cfg.congruence_n_max)?;

    let summary = SuiteSummary {
        oracle_checks: oracle.len(),
        identity_reports: identities.len() + shanks_exact.len(),
        identity_mismatches: identities
            .iter()
            .chain(&shanks_exact)
            .filter(|r| !r.verified())
            .count(),
        tail_checks: tails.checks.len(),
        tail_failures: tails.checks.iter().filter(|t| !t.passed).count(),
        inequality_reports: inequalities.len(),
        inequality_failures: inequalities.iter().filter(|r| !r.passed).count(),
    };
    let passed = oracle.iter().all(|c| c.passed)
        && summary.identity_mismatches == 0
        && summary.tail_failures == 0
        && tails.shifted_rank_tail_nonnegative
        && summary.inequality_failures == 0
        && equivalence.passed
        && weaker
        && mk.passed
        && parity.passed
        && congruences.iter().all(|c| c.passed);

    Ok(SuiteReport {
        config: cfg.clone(),
        passed,
        summary,
        oracle,
        identities,
        shanks_exact,
        tails,
        inequalities,
        equivalence,
        weaker_family_consistent: weaker,
        mk_interpretation: mk,
        crank_parity: parity,
        congruences,
        timings,
    })
}

impl SuiteReport {
    /// Human-readable digest, one line per failing item plus section totals.
    pub fn text(&self) -> String {
        let mut out = String::new();
        let ok = |b: bool| if b { "pass" } else { "FAIL" };
        let s = &self.summary;
        out += &format!(
            "oracle        {} ({} checks)\n",
            ok(self.oracle.iter().all(|c| c.passed)),
            s.oracle_checks
        );
        out += &format!(
            "identities    {} ({} reports, {} mismatches)\n",
            ok(s.identity_mismatches == 0),
            s.identity_reports,
            s.identity_mismatches
        );
        for r in self
            .identities
            .iter()
            .chain(&self.shanks_exact)
            .filter(|r| !r.verified())
        {
            out += &format!("  {r}\n");
        }
        out += &format!(
            "tails         {} ({} checks)\n",
            ok(s.tail_failures == 0 && self.tails.shifted_rank_tail_nonnegative),
            s.tail_checks
        );
        out += &format!(
            "inequalities  {} ({} reports, {} failing)\n",
            ok(s.inequality_failures == 0),
            s.inequality_reports,
            s.inequality_failures
        );
        for r in self.inequalities.iter().filter(|r| !r.passed) {
            out += &format!("  {r}\n");
        }
        out += &format!("equivalence   {}\n", ok(self.equivalence.passed));
        out += &format!("F1 = M_k      {}\n", ok(self.mk_interpretation.passed));
        out += &format!("crank parity  {}\n", ok(self.crank_parity.passed));
        out += &format!(
            "congruences   {}\n",
            ok(self.congruences.iter().all(|c| c.passed))
        );
        out += &format!("overall       {}\n", ok(self.passed));
        out
    }
}
