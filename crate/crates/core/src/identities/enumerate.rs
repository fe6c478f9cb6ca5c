//! Generators for the partition families used by the verifiers.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::vcoding::{codings_up_to, core_from_vcoding, Family};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FamilySpec {
    All,
    SelfConjugate,
    DoubledDistinct,
    Core(u32),
    DdCore(u32),
    ScCore(u32),
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::All => write!(f, "p"),
            FamilySpec::SelfConjugate => write!(f, "sc"),
            FamilySpec::DoubledDistinct => write!(f, "dd"),
            FamilySpec::Core(t) => write!(f, "core({t})"),
            FamilySpec::DdCore(g) => write!(f, "dd-core({g})"),
            FamilySpec::ScCore(g) => write!(f, "sc-core({g})"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Accepts `p`, `sc`, `dd`, `core(5)`, `dd-core(6)`, `sc-core(4)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let arg = |prefix: &str| -> Option<Result<u32>> {
            let rest = s.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
            Some(rest.trim().parse().map_err(|_| Error::Parse(format!("bad modulus in {s:?}"))))
        };
        match s {
            "p" => return Ok(FamilySpec::All),
            "sc" => return Ok(FamilySpec::SelfConjugate),
            "dd" => return Ok(FamilySpec::DoubledDistinct),
            _ => {}
        }
        if let Some(g) = arg("dd-core") {
            return Ok(FamilySpec::DdCore(g?));
        }
        if let Some(g) = arg("sc-core") {
            return Ok(FamilySpec::ScCore(g?));
        }
        if let Some(t) = arg("core") {
            return Ok(FamilySpec::Core(t?));
        }
        Err(Error::Parse(format!("unknown family {s:?}")))
    }
}

fn canonical_order(v: &mut [Partition]) {
    v.sort_by(|a, b| a.weight().cmp(&b.weight()).then_with(|| b.cmp(a)));
}

/// Doubled distinct partitions of weight at most `max`, by doubling strict
/// partitions.
pub fn doubled_distinct(max: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    for n in 0..=(max / 2) as u32 {
        for s in Partition::strict_of_weight(n) {
            out.push(Partition::double(&s).expect("strict input"));
        }
    }
    canonical_order(&mut out);
    out
}

/// Self-conjugate partitions of weight at most `max`, from sets of distinct
/// odd diagonal hooks.
pub fn self_conjugate(max: u64) -> Vec<Partition> {
    // `cur` holds decreasing odd hooks; each call extends it by smaller ones.
    fn rec(below: u32, left: u64, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition::from_diagonal_hooks(cur).expect("distinct odd hooks"));
        let mut h = 1;
        while h < below && h as u64 <= left {
            cur.push(h);
            rec(h, left - h as u64, cur, out);
            cur.pop();
            h += 2;
        }
    }
    let mut out = Vec::new();
    rec(max as u32 + 1, max, &mut Vec::new(), &mut out);
    canonical_order(&mut out);
    out
}

pub fn all_partitions(max: u64) -> Vec<Partition> {
    (0..=max as u32).flat_map(Partition::of_weight).collect()
}

/// Members of the family with weight at most `max_weight`, by predicate.
pub fn enumerate(family: FamilySpec, max_weight: u64) -> Vec<Partition> {
    let mut out = match family {
        FamilySpec::All => all_partitions(max_weight),
        FamilySpec::SelfConjugate => self_conjugate(max_weight),
        FamilySpec::DoubledDistinct => doubled_distinct(max_weight),
        FamilySpec::Core(t) => all_partitions(max_weight).into_iter().filter(|p| p.is_core(t)).collect(),
        FamilySpec::DdCore(g) => doubled_distinct(max_weight).into_iter().filter(|p| p.is_core(g)).collect(),
        FamilySpec::ScCore(g) => self_conjugate(max_weight).into_iter().filter(|p| p.is_core(g)).collect(),
    };
    canonical_order(&mut out);
    out
}

/// Rank attached to a symmetric core family: `g = 2t+2` or `g = 2t`.
pub fn coding_rank(family: FamilySpec) -> Result<(Family, usize)> {
    match family {
        FamilySpec::DdCore(g) if g >= 4 && g % 2 == 0 => Ok((Family::Dd, (g as usize - 2) / 2)),
        FamilySpec::ScCore(g) if g >= 2 && g % 2 == 0 => Ok((Family::Sc, g as usize / 2)),
        other => Err(Error::Modulus(format!("{other} has no coding parametrisation"))),
    }
}

/// Members of a symmetric core family built from their codings.
pub fn enumerate_by_coding(family: FamilySpec, max_weight: u64) -> Result<Vec<Partition>> {
    let (fam, t) = coding_rank(family)?;
    let mut out = codings_up_to(fam, t, max_weight)
        .iter()
        .map(core_from_vcoding)
        .collect::<Result<Vec<_>>>()?;
    canonical_order(&mut out);
    Ok(out)
}
