//! Acceptance run: one line per criterion, non-zero exit if any fails.

use std::process::ExitCode;
use std::time::Instant;

use theta_trunc::identities::{perturbed_i5, tail_check, Params, Status, TAIL_IDS};
use theta_trunc::inequalities::{check_all, family};
use theta_trunc::partitions::{crank_parity, oracle_checks, ramanujan_congruences};
use theta_trunc::suite::mk_interpretation;
use theta_trunc::{Registry, StatTables};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn identity_suite() -> Outcome {
    let start = Instant::now();
    let reg = Registry::standard();
    let reports = reg.run_suite(200, 6).expect("identity suite");
    let shanks: Vec<_> = (0..=10)
        .map(|k| reg.verify("I19", Params::k(k), 0).expect("I19"))
        .collect();
    let secs = start.elapsed().as_secs_f64();
    let failing: Vec<String> = reports
        .iter()
        .chain(&shanks)
        .filter(|r| !r.verified())
        .map(ToString::to_string)
        .collect();
    let crank_order = reports.iter().find(|r| r.id == "I9").map(|r| r.order);
    let shanks_exact = shanks
        .iter()
        .all(|r| r.order >= r.params.k.unwrap() * (3 * r.params.k.unwrap() + 1) / 2);
    let ids: std::collections::BTreeSet<_> = reports.iter().map(|r| r.id.clone()).collect();
    let passed = failing.is_empty()
        && ids.len() == 21
        && crank_order == Some(25)
        && shanks_exact
        && secs < 60.0;
    outcome(
        passed,
        format!(
            "{} reports over 21 identities at order 200, I9 at q-order {:?}, I19 exact for k<=10, {:.1}s{}",
            reports.len() + shanks.len(),
            crank_order,
            secs,
            if failing.is_empty() {
                String::new()
            } else {
                format!("; failing: {}", failing.join(" | "))
            }
        ),
    )
}

fn oracle_equivalence() -> Outcome {
    let checks = oracle_checks::<i128>(40, 45, 6).expect("oracle");
    let names: Vec<&str> = checks.iter().map(|c| c.name.as_str()).collect();
    let required = ["N(m,n)", "N", "R", "ge", "M1", "M6", "p3", "M(m,n)"];
    let missing: Vec<_> = required.iter().filter(|r| !names.contains(r)).collect();
    let failing: Vec<String> = checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| format!("{} {:?}", c.name, c.mismatch))
        .collect();
    outcome(
        missing.is_empty() && failing.is_empty() && checks.iter().all(|c| c.n_max == 40),
        format!(
            "{} enumeration checks to n=40 [{}]{}{}",
            checks.len(),
            names.join(", "),
            if missing.is_empty() {
                String::new()
            } else {
                format!("; missing {missing:?}")
            },
            if failing.is_empty() {
                String::new()
            } else {
                format!("; failing {failing:?}")
            },
        ),
    )
}

fn inequality_families(tables: &StatTables) -> Outcome {
    let reports = check_all(8, tables).expect("families");
    let failing: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed)
        .map(ToString::to_string)
        .collect();
    // strictness must already hold at the boundary point itself
    let boundary_ok = reports.iter().all(|r| {
        let f = family(&r.family).unwrap();
        let t = f.threshold.first_strict(r.k);
        f.values(r.k, tables)
            .unwrap()
            .iter()
            .find(|row| row.n == t)
            .is_some_and(|row| row.margin > 0)
    });
    outcome(
        failing.is_empty() && boundary_ok && reports.len() == 8 * 8 - 1,
        format!(
            "{} (family, k) reports, k<=8, n<=1000, boundary strict: {}{}",
            reports.len(),
            boundary_ok,
            if failing.is_empty() {
                String::new()
            } else {
                format!("; failing: {}", failing.join(" | "))
            }
        ),
    )
}

fn mk_margin(tables: &StatTables) -> Outcome {
    let r = mk_interpretation(6, 40, 45, tables).expect("mk");
    outcome(
        r.passed,
        format!(
            "F1 value = enumerated M_k(n) for k<=6, n<=40, first mismatch {:?}",
            r.first_mismatch
        ),
    )
}

fn parity() -> Outcome {
    let r = crank_parity::<i128>(500).expect("parity");
    outcome(
        r.passed,
        format!(
            "C(n) odd at {} values of n<=500, all twice a generalized pentagonal number",
            r.odd_at.len()
        ),
    )
}

fn congruences() -> Outcome {
    let r = ramanujan_congruences::<i128>(100).expect("congruences");
    let bad: Vec<_> = r
        .iter()
        .filter(|c| !c.passed)
        .map(|c| (c.modulus, c.first_failure))
        .collect();
    outcome(
        bad.is_empty() && r.len() == 3,
        format!(
            "p(5n+4), p(7n+5), p(11n+6) for n<=100{}",
            if bad.is_empty() {
                String::new()
            } else {
                format!("; failing {bad:?}")
            }
        ),
    )
}

fn tails() -> Outcome {
    let mut failing = Vec::new();
    let mut count = 0;
    for id in TAIL_IDS {
        for k in 1..=6 {
            let t = tail_check::<i128>(id, k, 200).expect("tail");
            count += 1;
            if !t.passed {
                failing.push(format!(
                    "{id} k={k} found {:?} expected {}",
                    t.found_exponent, t.expected_exponent
                ));
            }
        }
    }
    outcome(
        failing.is_empty(),
        format!(
            "{count} remainder leading terms for I5/I6/I12/I16/I17, k<=6{}",
            if failing.is_empty() {
                String::new()
            } else {
                format!("; {failing:?}")
            }
        ),
    )
}

fn negative_controls(tables: &StatTables) -> Outcome {
    let mut reg = Registry::standard();
    reg.replace(perturbed_i5()).unwrap();
    let mut located = true;
    for k in 1..=6 {
        let r = reg.verify("I5", Params::k(k), 200).unwrap();
        let at = r.mismatch.as_ref().map(|m| m.exponent);
        located &= r.status == Status::Mismatch && at == Some(k * (3 * k + 1) / 2);
    }

    let mut counted = true;
    for k in 1..=8 {
        let original = family("F5").unwrap();
        let t = original.threshold.first_strict(k);
        let r = original.flipped().check(k, tables, false).unwrap();
        let expected = tables.n_max() + 1 - t;
        counted &= !r.passed
            && r.nonneg_violations == expected
            && r.strict_violations == expected
            && r.first_nonneg_violation == Some(t);
    }
    outcome(
        located && counted,
        format!(
            "perturbed I5 fails at q^(k(3k+1)/2) for k<=6: {located}; flipped F5 violation counts match for k<=8: {counted}"
        ),
    )
}

fn main() -> ExitCode {
    let tables = StatTables::new(1000).expect("tables");
    let results = [
        ("identity suite", identity_suite()),
        ("oracle equivalence", oracle_equivalence()),
        ("inequality families", inequality_families(&tables)),
        ("F1 margin equals M_k", mk_margin(&tables)),
        ("crank parity", parity()),
        ("Ramanujan congruences", congruences()),
        ("remainder leading terms", tails()),
        ("negative controls", negative_controls(&tables)),
    ];
    let mut all = true;
    for (i, (name, o)) in results.iter().enumerate() {
        all &= o.passed;
        println!(
            "criterion {} [{}] {}: {}",
            i + 1,
            if o.passed { "PASS" } else { "FAIL" },
            name,
            o.detail
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
