//! `key=value` run configuration, merged under command-line flags.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use macdo_core::identities::{HalfCap, Params};

use crate::RunArgs;

/// Resolved verifier parameters plus the worker count.
pub struct RunConfig {
    pub params: Params,
    pub workers: Option<usize>,
}

fn parse_file(path: &Path) -> Result<RunArgs> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut out = RunArgs::default();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            bail!("{}:{}: expected key=value", path.display(), n + 1);
        };
        let (key, value) = (key.trim().replace('-', "_"), value.trim());
        let bad = || format!("{}:{}: bad value for {key}", path.display(), n + 1);
        match key.as_str() {
            "t" => out.t = Some(value.parse().with_context(bad)?),
            "T_cap" => out.t_cap = Some(value.to_string()),
            "q_cap" => out.q_cap = Some(value.parse().with_context(bad)?),
            "max_core_weight" => out.max_core_weight = Some(value.parse().with_context(bad)?),
            "seed" => out.seed = Some(value.parse().with_context(bad)?),
            "tau_trials" => out.tau_trials = Some(value.parse().with_context(bad)?),
            "memory_budget_mb" => out.memory_budget_mb = Some(value.parse().with_context(bad)?),
            "workers" => out.workers = Some(value.parse().with_context(bad)?),
            _ => bail!("{}:{}: unknown key {key:?}", path.display(), n + 1),
        }
    }
    Ok(out)
}

pub fn resolve(flags: &RunArgs) -> Result<RunConfig> {
    let file = match &flags.config {
        Some(p) => parse_file(p)?,
        None => RunArgs::default(),
    };
    let defaults = Params::default();
    let t_cap = match flags.t_cap.as_ref().or(file.t_cap.as_ref()) {
        Some(s) => Some(s.parse::<HalfCap>()?),
        None => None,
    };
    let params = Params {
        t: flags.t.or(file.t),
        t_cap,
        q_cap: flags.q_cap.or(file.q_cap),
        max_core_weight: flags.max_core_weight.or(file.max_core_weight),
        seed: flags.seed.or(file.seed).unwrap_or(defaults.seed),
        tau_trials: flags.tau_trials.or(file.tau_trials).unwrap_or(defaults.tau_trials),
        memory_budget_mb: flags.memory_budget_mb.or(file.memory_budget_mb).unwrap_or(defaults.memory_budget_mb),
    };
    Ok(RunConfig {
        params,
        workers: flags.workers.or(file.workers),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_file() {
        let dir = std::env::temp_dir().join(format!("macdo-config-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("run.conf");
        fs::write(&path, "# caps\nt = 2\nT_cap = 7/2\nq-cap=5\nseed=9\n").unwrap();
        let flags = RunArgs {
            q_cap: Some(12),
            config: Some(path),
            ..RunArgs::default()
        };
        let c = resolve(&flags).unwrap();
        assert_eq!(c.params.t, Some(2));
        assert_eq!(c.params.t_cap, Some(HalfCap(7)));
        assert_eq!(c.params.q_cap, Some(12));
        assert_eq!(c.params.seed, 9);
        fs::remove_dir_all(dir).unwrap();
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let dir = std::env::temp_dir().join(format!("macdo-config-bad-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("run.conf");
        fs::write(&path, "colour=blue\n").unwrap();
        assert!(parse_file(&path).is_err());
        fs::remove_dir_all(dir).unwrap();
    }
}
