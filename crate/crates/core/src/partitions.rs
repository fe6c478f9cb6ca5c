//! Integer partitions and their hook statistics.
//!
//! Cells use 1-based `(row, col)` coordinates. The sign `eps` of a cell is
//! `-1` strictly below the main diagonal and `+1` on or above it.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

/// One cell of a Ferrers diagram together with its hook length and sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
    pub hook: u32,
    pub eps: i8,
    pub on_diagonal: bool,
}

/// Counts of cells with hook `< g` and sign `+1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HPlusStats {
    pub g: u32,
    pub h_plus: u32,
    pub h_plus_diag: u32,
    /// `alpha[i]` counts cells with hook `g - i` and sign `+1`, for `1 <= i <= g - 1`.
    pub alpha: BTreeMap<u32, u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if !ok {
            return Err(Error::NotAPartition(parts.iter().map(|&p| p as i64).collect()));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts that may contain trailing zeros.
    pub(crate) fn from_padded(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// `lambda_i` with 1-based `i`; zero past the last part.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0) as usize;
        let mut cols = vec![0u32; width];
        for &p in &self.parts {
            for c in cols.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition { parts: cols }
    }

    /// Side of the Durfee square.
    pub fn durfee(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p as usize > *i)
            .count()
    }

    /// All cells in row-major order. Hooks are O(1) per cell once the
    /// conjugate has been computed.
    pub fn cells(&self) -> Vec<Cell> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.weight() as usize);
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 0..len as usize {
                let arm = len - c as u32 - 1;
                let leg = conj.parts[c] - r as u32 - 1;
                out.push(Cell {
                    row: r as u32 + 1,
                    col: c as u32 + 1,
                    hook: arm + leg + 1,
                    eps: if r > c { -1 } else { 1 },
                    on_diagonal: r == c,
                });
            }
        }
        out
    }

    /// The multiset `H(lambda)` as a sorted vector.
    pub fn hooks(&self) -> Vec<u32> {
        let mut h: Vec<u32> = self.cells().iter().map(|c| c.hook).collect();
        h.sort_unstable();
        h
    }

    /// Hooks divisible by `t`, sorted.
    pub fn hooks_mod(&self, t: u32) -> Vec<u32> {
        assert!(t >= 1, "modulus must be positive");
        let mut h: Vec<u32> = self
            .cells()
            .iter()
            .map(|c| c.hook)
            .filter(|h| h % t == 0)
            .collect();
        h.sort_unstable();
        h
    }

    pub fn is_core(&self, t: u32) -> bool {
        self.cells().iter().all(|c| c.hook % t != 0)
    }

    pub fn diagonal_hooks(&self) -> Vec<u32> {
        self.cells()
            .iter()
            .filter(|c| c.on_diagonal)
            .map(|c| c.hook)
            .collect()
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// `lambda_i = lambda'_i + 1` for every `i` up to the Durfee size.
    pub fn is_doubled_distinct(&self) -> bool {
        let conj = self.conjugate();
        (1..=self.durfee()).all(|i| self.part(i) == conj.part(i) + 1)
    }

    /// Shifted doubling of a strict partition: row `i` gets `mu_i + i` cells
    /// and column `i` gets `mu_i + i - 1`, for `i <= len(mu)`.
    pub fn double(strict: &Partition) -> Result<Partition> {
        if strict.parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::NotStrict(strict.parts.clone()));
        }
        let d = strict.len();
        let rows: Vec<u32> = (0..d).map(|i| strict.parts[i] + i as u32 + 1).collect();
        let cols: Vec<u32> = (0..d).map(|i| strict.parts[i] + i as u32).collect();
        Ok(Self::from_frobenius_arms(&rows, &cols))
    }

    /// Inverse of [`Partition::double`].
    pub fn undouble(dd: &Partition) -> Result<Partition> {
        if !dd.is_doubled_distinct() {
            return Err(Error::NotDoubledDistinct(dd.to_string()));
        }
        let parts = (1..=dd.durfee()).map(|i| dd.part(i) - i as u32).collect();
        Ok(Partition { parts })
    }

    /// Self-conjugate partition whose diagonal hooks are the given distinct
    /// odd numbers.
    pub fn from_diagonal_hooks(hooks: &[u32]) -> Result<Partition> {
        let bad = hooks.iter().any(|h| h % 2 == 0) || hooks.windows(2).any(|w| w[0] <= w[1]);
        if bad {
            return Err(Error::NotStrict(hooks.to_vec()));
        }
        let rows: Vec<u32> = hooks
            .iter()
            .enumerate()
            .map(|(i, h)| (h - 1) / 2 + i as u32 + 1)
            .collect();
        Ok(Self::from_frobenius_arms(&rows, &rows))
    }

    /// Rebuilds a partition from its first `d` row lengths and first `d`
    /// column lengths, `d` being the Durfee size.
    fn from_frobenius_arms(rows: &[u32], cols: &[u32]) -> Partition {
        let d = rows.len();
        let mut parts = rows.to_vec();
        let height = cols.first().copied().unwrap_or(0);
        for r in (d as u32 + 1)..=height {
            parts.push(cols.iter().filter(|&&c| c >= r).count() as u32);
        }
        Partition::from_padded(parts)
    }

    pub fn h_plus_stats(&self, g: u32) -> HPlusStats {
        let mut alpha: BTreeMap<u32, u32> = (1..g).map(|i| (i, 0)).collect();
        let mut h_plus = 0;
        let mut h_plus_diag = 0;
        for c in self.cells() {
            if c.eps == 1 && c.hook < g {
                h_plus += 1;
                if c.on_diagonal {
                    h_plus_diag += 1;
                }
                *alpha.get_mut(&(g - c.hook)).expect("hook in range") += 1;
            }
        }
        HPlusStats {
            g,
            h_plus,
            h_plus_diag,
            alpha,
        }
    }

    /// Every partition of `n`, in reverse lexicographic order.
    pub fn of_weight(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(n, n, &mut cur, &mut out);
        out
    }

    /// Every strict partition of `n`.
    pub fn strict_of_weight(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill_strict(n, n, &mut cur, &mut out);
        out
    }
}

fn fill(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=rest.min(max)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}

fn fill_strict(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=rest.min(max)).rev() {
        cur.push(p);
        fill_strict(rest - p, p - 1, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::MalformedPartition(s.to_string()))?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        if v.iter().any(|&p| p <= 0 || p > u32::MAX as i64) {
            return Err(Error::NotAPartition(v));
        }
        Partition::new(v.into_iter().map(|p| p as u32).collect())
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}
