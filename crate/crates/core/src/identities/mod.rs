//! Verifiers: each expands both sides of an identity (or both routes of a
//! combinatorial statement) exactly and reports the first disagreement.

mod checks;
pub mod enumerate;
mod hook_series;
mod macdonald;
mod q_analogues;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::algebra::{SeriesMismatch, SeriesSpace, TruncatedSeries};
use crate::error::{Error, Result};

pub use checks::{
    verify_lemma35, verify_lemma36, verify_schurinter, verify_structure_dd, verify_tau_product,
};
pub use enumerate::{enumerate, enumerate_by_coding, FamilySpec};
pub use hook_series::{verify_hande, verify_nekrasov_okounkov, verify_petreolle};
pub use macdonald::{verify_macdonald_c, verify_thm11, verify_thm12};
pub use q_analogues::{noc_ladder, verify_noc, verify_nosc, LadderRung};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    NekrasovOkounkov,
    Hande,
    Petreolle,
    MacdonaldC,
    Thm11,
    Thm12,
    Noc,
    Nosc,
    Schurinter,
    TauProduct,
    Lemma35,
    Lemma36,
    StructureDd,
}

impl Identity {
    pub const ALL: [Identity; 13] = [
        Identity::NekrasovOkounkov,
        Identity::Hande,
        Identity::Petreolle,
        Identity::MacdonaldC,
        Identity::Thm11,
        Identity::Thm12,
        Identity::Noc,
        Identity::Nosc,
        Identity::Schurinter,
        Identity::TauProduct,
        Identity::Lemma35,
        Identity::Lemma36,
        Identity::StructureDd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::NekrasovOkounkov => "no",
            Identity::Hande => "hande",
            Identity::Petreolle => "petreolle",
            Identity::MacdonaldC => "macdonald-c",
            Identity::Thm11 => "thm11",
            Identity::Thm12 => "thm12",
            Identity::Noc => "noc",
            Identity::Nosc => "nosc",
            Identity::Schurinter => "schurinter",
            Identity::TauProduct => "tau-product",
            Identity::Lemma35 => "lemma35",
            Identity::Lemma36 => "lemma36",
            Identity::StructureDd => "structure-dd",
        }
    }

    /// Whether the identity is parametrised by a rank `t`.
    pub fn needs_rank(self) -> bool {
        matches!(
            self,
            Identity::MacdonaldC
                | Identity::Thm11
                | Identity::Thm12
                | Identity::Schurinter
                | Identity::TauProduct
                | Identity::Lemma35
                | Identity::Lemma36
                | Identity::StructureDd
        )
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown identity {s:?}")))
    }
}

/// A non-negative multiple of one half, written `7/2` or `3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HalfCap(pub u32);

impl HalfCap {
    pub fn whole(n: u32) -> Self {
        HalfCap(2 * n)
    }

    pub fn halves(self) -> u32 {
        self.0
    }

    /// Largest whole number not above the cap.
    pub fn floor(self) -> u32 {
        self.0 / 2
    }
}

impl fmt::Display for HalfCap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for HalfCap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("cap {s:?} is not n or n/2"));
        match s.trim().split_once('/') {
            None => Ok(HalfCap::whole(s.trim().parse().map_err(|_| bad())?)),
            Some((n, "2")) => Ok(HalfCap(n.trim().parse().map_err(|_| bad())?)),
            Some(_) => Err(bad()),
        }
    }
}

impl Serialize for HalfCap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parameters of one verification run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(rename = "T_cap", skip_serializing_if = "Option::is_none")]
    pub t_cap: Option<HalfCap>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_cap: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_core_weight: Option<u64>,
    pub seed: u64,
    /// Random `tau` maps per core.
    pub tau_trials: usize,
    /// Estimated memory ceiling; larger runs are refused.
    pub memory_budget_mb: u64,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            t: None,
            t_cap: None,
            q_cap: None,
            max_core_weight: None,
            seed: 0x5eed,
            tau_trials: 20,
            memory_budget_mb: 2048,
        }
    }
}

impl Params {
    pub fn rank(&self, lo: usize, hi: usize) -> Result<usize> {
        match self.t {
            Some(t) if (lo..=hi).contains(&t) => Ok(t),
            Some(t) => Err(Error::Config(format!("rank {t} outside {lo}..={hi}"))),
            None => Err(Error::Config("a rank t is required".into())),
        }
    }

    /// File-name fragment naming the explicitly set parameters, e.g.
    /// `t2_T7-2_q12`. The seed is included only when it differs from the
    /// default.
    pub fn slug(&self) -> String {
        let mut parts = Vec::new();
        if let Some(t) = self.t {
            parts.push(format!("t{t}"));
        }
        if let Some(c) = self.t_cap {
            parts.push(format!("T{}", c.to_string().replace('/', "-")));
        }
        if let Some(c) = self.q_cap {
            parts.push(format!("q{c}"));
        }
        if let Some(w) = self.max_core_weight {
            parts.push(format!("w{w}"));
        }
        if self.seed != Params::default().seed {
            parts.push(format!("seed{}", self.seed));
        }
        if parts.is_empty() {
            "default".into()
        } else {
            parts.join("_")
        }
    }

    pub(crate) fn t_cap_or(&self, d: HalfCap) -> HalfCap {
        self.t_cap.unwrap_or(d)
    }

    pub(crate) fn q_cap_or(&self, d: u32) -> u32 {
        self.q_cap.unwrap_or(d)
    }

    pub(crate) fn core_weight_or(&self, d: u64) -> u64 {
        self.max_core_weight.unwrap_or(d)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub at: String,
    pub lhs: String,
    pub rhs: String,
}

impl From<SeriesMismatch> for Mismatch {
    fn from(m: SeriesMismatch) -> Self {
        Mismatch {
            at: m.grade,
            lhs: m.lhs,
            rhs: m.rhs,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub params: Params,
    pub status: Status,
    pub first_mismatch: Option<Mismatch>,
    pub mismatch_count: usize,
    pub terms_enumerated: BTreeMap<String, u64>,
    /// Extra per-run facts (e.g. secondary checks), in a fixed key order.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub notes: BTreeMap<String, String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn summary(&self) -> String {
        let mut s = format!(
            "{} {}: {} mismatches, {:.2?}",
            self.identity,
            match self.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            },
            self.mismatch_count,
            self.elapsed
        );
        if let Some(m) = &self.first_mismatch {
            s.push_str(&format!("\n  first mismatch at {}\n  lhs: {}\n  rhs: {}", m.at, m.lhs, m.rhs));
        }
        s
    }
}

/// Accumulates counts and mismatches while a verifier runs.
pub(crate) struct Tally {
    identity: Identity,
    params: Params,
    start: Instant,
    first: Option<Mismatch>,
    count: usize,
    terms: BTreeMap<String, u64>,
    notes: BTreeMap<String, String>,
}

impl Tally {
    pub(crate) fn new(identity: Identity, params: &Params) -> Self {
        Tally {
            identity,
            params: params.clone(),
            start: Instant::now(),
            first: None,
            count: 0,
            terms: BTreeMap::new(),
            notes: BTreeMap::new(),
        }
    }

    pub(crate) fn count(&mut self, what: &str, n: u64) {
        *self.terms.entry(what.to_string()).or_insert(0) += n;
    }

    pub(crate) fn note(&mut self, key: &str, value: impl Into<String>) {
        self.notes.insert(key.to_string(), value.into());
    }

    pub(crate) fn mismatch(&mut self, at: impl Into<String>, lhs: impl Into<String>, rhs: impl Into<String>) {
        self.count += 1;
        if self.first.is_none() {
            self.first = Some(Mismatch {
                at: at.into(),
                lhs: lhs.into(),
                rhs: rhs.into(),
            });
        }
    }

    pub(crate) fn compare_series(&mut self, lhs: &TruncatedSeries, rhs: &TruncatedSeries) {
        let (first, n) = lhs.compare(rhs);
        self.count += n;
        if self.first.is_none() {
            self.first = first.map(Mismatch::from);
        }
    }

    pub(crate) fn finish(self) -> VerificationReport {
        VerificationReport {
            identity: self.identity.name().to_string(),
            params: self.params,
            status: if self.count == 0 { Status::Pass } else { Status::Fail },
            first_mismatch: self.first,
            mismatch_count: self.count,
            terms_enumerated: self.terms,
            notes: self.notes,
            elapsed: self.start.elapsed(),
        }
    }
}

/// Refuses spaces whose dense storage would exceed the budget. Each cell is
/// charged a flat estimate per Laurent coefficient.
pub(crate) fn check_budget(space: &SeriesSpace, monomials_per_cell: u64, params: &Params) -> Result<()> {
    const BYTES_PER_MONOMIAL: u64 = 96;
    let bytes = space.cells() as u64 * monomials_per_cell * BYTES_PER_MONOMIAL;
    let budget = params.memory_budget_mb * 1024 * 1024;
    if bytes > budget {
        return Err(Error::Config(format!(
            "estimated {} MiB exceeds the {} MiB budget",
            bytes / (1024 * 1024),
            params.memory_budget_mb
        )));
    }
    Ok(())
}

/// Maps in parallel and sums the resulting series in input order, so the
/// result does not depend on scheduling.
pub(crate) fn ordered_sum<T, F>(space: &SeriesSpace, items: &[T], f: F) -> Result<TruncatedSeries>
where
    T: Sync,
    F: Fn(&T) -> Result<TruncatedSeries> + Sync,
{
    let parts: Vec<TruncatedSeries> = items.par_iter().map(&f).collect::<Result<_>>()?;
    let mut acc = TruncatedSeries::zero(space);
    for p in &parts {
        acc.add_assign(p);
    }
    Ok(acc)
}

/// The verifier runs at the caps the acceptance criteria name, in a fixed
/// order.
pub fn acceptance_suite() -> Vec<(Identity, Params)> {
    let caps = |t: Option<usize>, t_cap: Option<u32>, q_cap: Option<u32>, w: Option<u64>| Params {
        t,
        t_cap: t_cap.map(HalfCap),
        q_cap,
        max_core_weight: w,
        ..Params::default()
    };
    let mut out = vec![
        (Identity::NekrasovOkounkov, caps(None, Some(24), None, None)),
        (Identity::Hande, caps(None, Some(8), Some(8), None)),
        (Identity::Petreolle, caps(None, Some(16), None, None)),
    ];
    for t in 1..=2 {
        out.push((Identity::MacdonaldC, caps(Some(t), Some(16), None, None)));
    }
    for t in 1..=2 {
        out.push((Identity::Thm11, caps(Some(t), Some(12), None, None)));
    }
    for t in 1..=2 {
        out.push((Identity::Thm12, caps(Some(t), Some(6), None, None)));
    }
    out.push((Identity::Noc, caps(None, Some(10), Some(12), None)));
    out.push((Identity::Nosc, caps(None, Some(7), Some(12), None)));
    for t in 1..=3 {
        out.push((Identity::Schurinter, caps(Some(t), None, None, Some(40))));
    }
    for t in 1..=2 {
        out.push((Identity::TauProduct, caps(Some(t), None, None, Some(60))));
        out.push((Identity::Lemma35, caps(Some(t), None, None, Some(60))));
        out.push((Identity::Lemma36, caps(Some(t), None, None, Some(60))));
    }
    for t in 3..=5 {
        out.push((Identity::StructureDd, caps(Some(t), None, None, Some(24))));
    }
    out
}

/// Runs one verifier with caps defaulting to the acceptance settings.
pub fn run(identity: Identity, params: &Params) -> Result<VerificationReport> {
    match identity {
        Identity::NekrasovOkounkov => verify_nekrasov_okounkov(params),
        Identity::Hande => verify_hande(params),
        Identity::Petreolle => verify_petreolle(params),
        Identity::MacdonaldC => verify_macdonald_c(params),
        Identity::Thm11 => verify_thm11(params),
        Identity::Thm12 => verify_thm12(params),
        Identity::Noc => verify_noc(params),
        Identity::Nosc => verify_nosc(params),
        Identity::Schurinter => verify_schurinter(params),
        Identity::TauProduct => verify_tau_product(params),
        Identity::Lemma35 => verify_lemma35(params),
        Identity::Lemma36 => verify_lemma36(params),
        Identity::StructureDd => verify_structure_dd(params),
    }
}

/// Runs on a dedicated pool of `workers` threads.
pub fn run_with_workers(identity: Identity, params: &Params, workers: usize) -> Result<VerificationReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    pool.install(|| run(identity, params))
}
