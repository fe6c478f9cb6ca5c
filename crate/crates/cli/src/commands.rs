use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use macdo_core::identities::{self, enumerate, enumerate_by_coding, FamilySpec, Identity, Params, VerificationReport};
use macdo_core::littlewood::{core_vector, decompose};
use macdo_core::vcoding::{vcoding, weight_from_beta, Family};
use macdo_core::{BoundaryWord, Partition};
use serde::Serialize;
use serde_json::json;

use crate::config::resolve;
use crate::{Command, FamilyArg, Format};

fn partition(s: &str) -> Result<Partition> {
    Ok(s.parse()?)
}

fn print_json(v: &impl Serialize) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, v)?;
    writeln!(out)?;
    Ok(())
}

pub fn dispatch(cmd: Command) -> Result<ExitCode> {
    match cmd {
        Command::Decompose { partition: p, t } => {
            let p = partition(&p)?;
            if t < 2 {
                bail!("modulus t must be at least 2");
            }
            let d = decompose(&p, t);
            let vector = core_vector(&d.core, t)?;
            print_json(&json!({
                "partition": p.to_string(),
                "t": t,
                "core": d.core.to_string(),
                "quotient": d.quotient.iter().map(|q| q.to_string()).collect::<Vec<_>>(),
                "vector": vector.n,
                "weights": {
                    "partition": p.weight(),
                    "core": d.core.weight(),
                    "quotient": d.quotient.iter().map(Partition::weight).collect::<Vec<_>>(),
                },
            }))?;
        }
        Command::Vector { partition: p, t } => {
            let p = partition(&p)?;
            print_json(&json!({ "partition": p.to_string(), "t": t, "vector": core_vector(&p, t)?.n }))?;
        }
        Command::Word { partition: p } => {
            let p = partition(&p)?;
            let w = BoundaryWord::encode(&p);
            print_json(&json!({
                "partition": p.to_string(),
                "word": w.render(),
                "durfee": w.ones_left(),
            }))?;
        }
        Command::Vcoding { partition: p, t, g, family } => {
            let p = partition(&p)?;
            let family = match family {
                FamilyArg::Dd => Family::Dd,
                FamilyArg::Sc => Family::Sc,
            };
            let g = g.unwrap_or_else(|| family.modulus(t));
            let c = vcoding(&p, g, t, family)?;
            let beta = c.beta()?;
            let weight = weight_from_beta(&beta);
            print_json(&json!({
                "partition": p.to_string(),
                "g": g,
                "t": t,
                "family": family,
                "beta": beta,
                "v": c.v,
                "r": c.shifted(),
                "mu": c.mu()?.to_string(),
                "weight": weight.to_string(),
                "weight_check": weight == (p.weight() as i64).into(),
            }))?;
        }
        Command::Enumerate { family, max, g, t, format } => {
            let spec = family_spec(&family, g, t)?;
            let parts = match spec {
                FamilySpec::DdCore(_) | FamilySpec::ScCore(_) => enumerate_by_coding(spec, max)?,
                _ => enumerate(spec, max),
            };
            match format {
                Format::Lines => {
                    let mut out = io::stdout().lock();
                    for p in &parts {
                        writeln!(out, "{p}")?;
                    }
                }
                Format::Json => print_json(&json!({
                    "family": spec.to_string(),
                    "max_weight": max,
                    "count": parts.len(),
                    "partitions": parts.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                }))?,
            }
        }
        Command::Verify { identity, run, out, text, json: _ } => {
            let id: Identity = identity.parse()?;
            let cfg = resolve(&run)?;
            let report = run_one(id, &cfg.params, cfg.workers)?;
            let rendered = if text { render_text(&report) } else { report_json(&report)? };
            match out {
                Some(path) => fs::write(&path, &rendered).with_context(|| format!("writing {}", path.display()))?,
                None => io::stdout().lock().write_all(rendered.as_bytes())?,
            }
            return Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
        Command::Golden { dir, write, check, only, workers } => {
            if write == check {
                bail!("pass exactly one of --write or --check");
            }
            let only: Option<Identity> = only.map(|s| s.parse()).transpose()?;
            return golden(&dir, write, only, workers);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn family_spec(name: &str, g: Option<u32>, t: Option<u32>) -> Result<FamilySpec> {
    let modulus = |by_rank: fn(u32) -> u32| -> Result<u32> {
        match (g, t) {
            (Some(g), _) => Ok(g),
            (None, Some(t)) => Ok(by_rank(t)),
            (None, None) => bail!("family {name:?} needs --g or --t"),
        }
    };
    Ok(match name {
        "core" => FamilySpec::Core(modulus(|t| t)?),
        "dd-core" => FamilySpec::DdCore(modulus(|t| 2 * t + 2)?),
        "sc-core" => FamilySpec::ScCore(modulus(|t| 2 * t)?),
        other => other.parse()?,
    })
}

fn run_one(id: Identity, params: &Params, workers: Option<usize>) -> Result<VerificationReport> {
    Ok(match workers {
        Some(w) => identities::run_with_workers(id, params, w)?,
        None => identities::run(id, params)?,
    })
}

fn report_json(r: &VerificationReport) -> Result<String> {
    let mut s = serde_json::to_string_pretty(r)?;
    s.push('\n');
    Ok(s)
}

fn render_text(r: &VerificationReport) -> String {
    let mut s = r.summary();
    for (k, n) in &r.terms_enumerated {
        s.push_str(&format!("\n  {k}: {n}"));
    }
    for (k, v) in &r.notes {
        s.push_str(&format!("\n  {k}: {v}"));
    }
    s.push('\n');
    s
}

fn golden(dir: &Path, write: bool, only: Option<Identity>, workers: Option<usize>) -> Result<ExitCode> {
    let mut drift = 0;
    for (id, params) in identities::acceptance_suite() {
        if only.is_some_and(|o| o != id) {
            continue;
        }
        let path = dir.join(id.name()).join(format!("{}.json", params.slug()));
        let report = report_json(&run_one(id, &params, workers)?)?;
        if write {
            fs::create_dir_all(path.parent().expect("joined path"))?;
            fs::write(&path, &report).with_context(|| format!("writing {}", path.display()))?;
            println!("wrote {}", path.display());
            continue;
        }
        match fs::read_to_string(&path) {
            Ok(old) if old == report => println!("same    {}", path.display()),
            Ok(_) => {
                drift += 1;
                println!("CHANGED {}", path.display());
            }
            Err(_) => {
                drift += 1;
                println!("MISSING {}", path.display());
            }
        }
    }
    Ok(if drift == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
