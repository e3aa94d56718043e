use std::fs;
use std::io::Write;

use anyhow::{bail, Context, Result};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};
use theta_trunc::identities::{perturbed_i5, Domain, IdentityRegistry, IdentityReport, Params};
use theta_trunc::inequalities::{families, family, InequalityFamily, StatTables};
use theta_trunc::partitions::{named_sequence, ORACLE_HARD_CAP};
use theta_trunc::suite::{self, SuiteConfig};
use theta_trunc::Coeff;

use crate::args::{Cli, Command, ComputeArgs, Format, Global, IneqArgs, SuiteArgs, VerifyArgs};
use crate::Outcome;

pub fn dispatch(cli: &Cli) -> Result<Outcome> {
    if cli.global.bigint {
        run::<BigInt>(cli)
    } else {
        run::<i128>(cli)
    }
}

fn run<T: Coeff>(cli: &Cli) -> Result<Outcome> {
    let g = &cli.global;
    match &cli.command {
        Command::Compute(a) => compute::<T>(a, g),
        Command::Verify(a) => verify::<T>(a, g),
        Command::Ineq(a) => ineq::<T>(a, g),
        Command::Suite(a) => run_suite::<T>(a, g),
    }
}

fn emit(g: &Global, text: &str) -> Result<()> {
    match &g.output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn json_text(v: &Value) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn outcome(passed: bool) -> Outcome {
    if passed {
        Outcome::Pass
    } else {
        Outcome::Violation
    }
}

fn check_bound(bound: usize) -> Result<()> {
    if bound > ORACLE_HARD_CAP {
        bail!("oracle bound {bound} exceeds the hard cap {ORACLE_HARD_CAP}");
    }
    Ok(())
}

fn compute<T: Coeff>(a: &ComputeArgs, g: &Global) -> Result<Outcome> {
    let table = named_sequence::<T>(&a.sequence, a.n_max, a.k, a.m)?;
    let text = match g.format {
        Format::Text => {
            let values: Vec<String> = table.values.iter().map(ToString::to_string).collect();
            values.join(",") + "\n"
        }
        Format::Json => json_text(&serde_json::to_value(&table)?)?,
        Format::Csv => {
            let mut buf = Vec::new();
            table.write_csv(&mut buf)?;
            String::from_utf8(buf)?
        }
    };
    emit(g, &text)?;
    Ok(Outcome::Pass)
}

fn verify_params<T: Coeff>(reg: &IdentityRegistry<T>, a: &VerifyArgs) -> Result<Vec<Params>> {
    let desc = reg.get(&a.id)?;
    Ok(match (a.k, a.m) {
        (Some(_), Some(_)) => bail!("give either --k or --m, not both"),
        (Some(k), None) => vec![Params::k(k)],
        (None, Some(m)) => vec![Params::m(m)],
        (None, None) => match desc.domain {
            Domain::KAtLeast(min) => {
                let lo = a.k_min.unwrap_or(min);
                if lo > a.k_max {
                    bail!("empty k range {lo}..={}", a.k_max);
                }
                (lo..=a.k_max).map(Params::k).collect()
            }
            other => other.instances(a.k_max),
        },
    })
}

fn verify<T: Coeff>(a: &VerifyArgs, g: &Global) -> Result<Outcome> {
    check_bound(a.oracle_bound)?;
    let mut reg = IdentityRegistry::<T>::standard().with_oracle_bound(a.oracle_bound);
    if a.negative_control {
        reg.replace(perturbed_i5())?;
    }
    let reports: Vec<IdentityReport> = if a.id.eq_ignore_ascii_case("all") {
        if a.k.is_some() || a.m.is_some() {
            bail!("`verify all` takes --k-min/--k-max, not --k or --m");
        }
        let mut r = reg.run_suite(a.order, a.k_max)?;
        if let Some(lo) = a.k_min {
            r.retain(|x| x.params.k.is_none_or(|k| k >= lo));
        }
        r
    } else {
        let id = reg.get(&a.id)?.id;
        verify_params(&reg, a)?
            .par_iter()
            .map(|p| reg.verify(id, *p, a.order))
            .collect::<theta_trunc::Result<_>>()?
    };
    let passed = reports.iter().all(IdentityReport::verified);
    let text = match g.format {
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                s += &r.to_string();
                if g.timings {
                    s += &format!("  ({} ms)", r.millis);
                }
                s.push('\n');
            }
            let bad = reports.iter().filter(|r| !r.verified()).count();
            s += &format!("{} verified, {} mismatched\n", reports.len() - bad, bad);
            s
        }
        Format::Json => {
            let mut v = json!({ "passed": passed, "reports": reports });
            if g.timings {
                let t: Vec<Value> = reports
                    .iter()
                    .map(|r| json!({ "id": r.id, "params": r.params, "millis": r.millis }))
                    .collect();
                v["timings"] = Value::Array(t);
            }
            json_text(&v)?
        }
        Format::Csv => bail!("CSV output is available for `compute` and `ineq` only"),
    };
    emit(g, &text)?;
    Ok(outcome(passed))
}

fn ineq<T: Coeff>(a: &IneqArgs, g: &Global) -> Result<Outcome> {
    let all = a.id.eq_ignore_ascii_case("all");
    let mut fams: Vec<InequalityFamily> = if all {
        families()
    } else {
        vec![family(&a.id)?]
    };
    if a.negative_control {
        fams = fams.iter().map(InequalityFamily::flipped).collect();
    }
    let mut jobs = Vec::new();
    for f in &fams {
        match a.k {
            Some(k) if all && k < f.k_min => {}
            Some(k) => jobs.push((f, k)),
            None => jobs.extend((f.k_min..=a.k_max).map(|k| (f, k))),
        }
    }
    let tables = StatTables::<T>::new(a.n_max)?;
    let keep_rows = a.rows || g.format == Format::Csv;
    let reports = jobs
        .par_iter()
        .map(|(f, k)| f.check(*k, &tables, keep_rows))
        .collect::<theta_trunc::Result<Vec<_>>>()?;
    let passed = reports.iter().all(|r| r.passed);
    let text = match g.format {
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                s += &format!("{r}\n");
                for row in r.rows.iter().flatten() {
                    s += &format!(
                        "  n={:<5} S={:<24} baseline={:<20} margin={}{}\n",
                        row.n,
                        row.value,
                        row.baseline,
                        row.margin,
                        if row.strict { " *" } else { "" }
                    );
                }
            }
            let bad = reports.iter().filter(|r| !r.passed).count();
            s += &format!("{} passed, {} failed\n", reports.len() - bad, bad);
            s
        }
        Format::Json => json_text(&json!({ "passed": passed, "reports": reports }))?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["family", "k", "n", "value", "baseline", "margin", "strict"])?;
            for r in &reports {
                r.write_rows_csv(&mut w)?;
            }
            String::from_utf8(w.into_inner()?)?
        }
    };
    emit(g, &text)?;
    Ok(outcome(passed))
}

fn run_suite<T: Coeff>(a: &SuiteArgs, g: &Global) -> Result<Outcome> {
    check_bound(a.oracle_bound)?;
    let cfg = SuiteConfig {
        order: a.order,
        k_max: a.k_max,
        ineq_k_max: a.ineq_k_max,
        n_max: a.n_max,
        oracle_bound: a.oracle_bound,
        negative_control: a.negative_control,
        ..SuiteConfig::default()
    };
    let report = suite::run::<T>(&cfg)?;
    let mut v = serde_json::to_value(&report)?;
    if g.timings {
        v["timings"] = serde_json::to_value(&report.timings)?;
    }
    let json = json_text(&v)?;
    if let Some(dir) = &a.out_dir {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        let path = dir.join("suite-report.json");
        fs::write(&path, &json).with_context(|| format!("writing {}", path.display()))?;
    }
    let text = match g.format {
        Format::Text => report.text(),
        Format::Json => json,
        Format::Csv => bail!("CSV output is available for `compute` and `ineq` only"),
    };
    emit(g, &text)?;
    Ok(outcome(report.passed))
}
