//! Littlewood decomposition `lambda -> (core, quotient)` through residue
//! subwords, and the integer-vector parametrisation of `t`-cores.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::words::{BoundaryWord, Word};

/// `t`-core and `t`-quotient of a partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub t: usize,
    pub core: Partition,
    pub quotient: Vec<Partition>,
}

/// `n_i` is the index of the first `1` in the residue-`i` subword of a core.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CoreVector {
    pub t: usize,
    pub n: Vec<i64>,
}

impl CoreVector {
    pub fn new(n: Vec<i64>) -> Result<Self> {
        if n.iter().sum::<i64>() != 0 {
            return Err(Error::UnbalancedVector(n));
        }
        Ok(CoreVector { t: n.len(), n })
    }
}

impl Decomposition {
    pub fn weight(&self) -> u64 {
        self.core.weight() + self.t as u64 * self.quotient.iter().map(Partition::weight).sum::<u64>()
    }
}

/// Residue subwords of `s(lambda)`, each decoded after moving its median;
/// the core comes from sorting every subword to `0...01...1` while keeping
/// its charge.
pub fn decompose(p: &Partition, t: usize) -> Decomposition {
    assert!(t >= 2, "modulus must be at least 2");
    let word = BoundaryWord::encode(p);
    let mut quotient = Vec::with_capacity(t);
    let mut charges = Vec::with_capacity(t);
    for k in 0..t {
        let sub = word.word().subword(t as i64, k as i64);
        charges.push(sub.charge());
        quotient.push(sub.normalized().decode());
    }
    let core = core_from_charges(&charges);
    Decomposition { t, core, quotient }
}

fn core_from_charges(charges: &[i64]) -> Partition {
    let subs: Vec<Word> = charges.iter().map(|&n| Word::new(n, [])).collect();
    BoundaryWord::from_word(Word::interleave(&subs))
        .expect("charges sum to zero")
        .decode()
}

pub fn core(p: &Partition, t: usize) -> Partition {
    decompose(p, t).core
}

/// Inverse of [`decompose`].
pub fn compose(d: &Decomposition) -> Result<Partition> {
    let t = d.t;
    if !d.core.is_core(t as u32) {
        return Err(Error::NotACore {
            partition: d.core.to_string(),
            t,
        });
    }
    if d.quotient.len() != t {
        return Err(Error::Modulus(format!(
            "quotient has {} entries, expected {t}",
            d.quotient.len()
        )));
    }
    let n = core_vector(&d.core, t)?.n;
    let subs: Vec<Word> = d
        .quotient
        .iter()
        .zip(&n)
        .map(|(nu, &charge)| BoundaryWord::encode(nu).word().shifted(-charge))
        .collect();
    Ok(BoundaryWord::from_word(Word::interleave(&subs))
        .expect("charges of a core vector sum to zero")
        .decode())
}

/// Core vector of a `t`-core.
pub fn core_vector(core: &Partition, t: usize) -> Result<CoreVector> {
    if !core.is_core(t as u32) {
        return Err(Error::NotACore {
            partition: core.to_string(),
            t,
        });
    }
    let word = BoundaryWord::encode(core);
    let n = (0..t)
        .map(|k| word.word().subword(t as i64, k as i64).floor())
        .collect();
    Ok(CoreVector { t, n })
}

pub fn core_from_vector(v: &CoreVector) -> Result<Partition> {
    if v.n.iter().sum::<i64>() != 0 {
        return Err(Error::UnbalancedVector(v.n.clone()));
    }
    Ok(core_from_charges(&v.n))
}

/// `|core| = t/2 * sum n_i^2 + sum i * n_i`.
pub fn weight_from_core_vector(v: &CoreVector) -> u64 {
    let t = v.t as i64;
    let sq: i64 = v.n.iter().map(|n| n * n).sum();
    let lin: i64 = v.n.iter().enumerate().map(|(i, n)| i as i64 * n).sum();
    let twice = t * sq + 2 * lin;
    debug_assert!(twice >= 0 && twice % 2 == 0);
    (twice / 2) as u64
}

/// Reduced weight formula for a doubled distinct `(2t+2)`-core, in terms of
/// `n_1..n_t`. Requires `n_0 = n_{t+1} = 0` and `n_i = -n_{2t+2-i}`.
pub fn dd_reduced_weight(v: &CoreVector) -> Result<u64> {
    let g = v.t;
    if g < 4 || g % 2 != 0 {
        return Err(Error::Modulus(format!("doubled distinct cores need g = 2t+2 >= 4, got {g}")));
    }
    let t = (g - 2) / 2;
    let n = &v.n;
    let symmetric = n[0] == 0 && n[t + 1] == 0 && (1..g).all(|i| n[i] == -n[g - i]);
    if !symmetric {
        return Err(Error::AsymmetricVector(n.clone()));
    }
    let t1 = t as i64 + 1;
    let s: i64 = (1..=t)
        .map(|i| t1 * n[i] * n[i] + (i as i64 - t1) * n[i])
        .sum();
    Ok((2 * s) as u64)
}

/// Reduced weight formula for a self-conjugate `2t`-core, in terms of
/// `n_0..n_{t-1}`. Requires `n_i = -n_{2t-1-i}`.
pub fn sc_reduced_weight(v: &CoreVector) -> Result<u64> {
    let g = v.t;
    if g < 2 || g % 2 != 0 {
        return Err(Error::Modulus(format!("self-conjugate cores need g = 2t >= 2, got {g}")));
    }
    let t = g / 2;
    let n = &v.n;
    if !(0..g).all(|i| n[i] == -n[g - 1 - i]) {
        return Err(Error::AsymmetricVector(n.clone()));
    }
    let tt = t as i64;
    let s: i64 = (0..t)
        .map(|i| 2 * tt * n[i] * n[i] + (2 * (i as i64 - tt) + 1) * n[i])
        .sum();
    Ok(s as u64)
}

/// Per-clause outcome of the structure check on a doubled distinct
/// partition's decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DdStructureReport {
    pub t: usize,
    pub core_is_dd: bool,
    pub nu0_is_dd: bool,
    /// `nu^(k) == conj(nu^(t-k))` for each `1 <= k <= t-1`.
    pub conjugate_pairs: Vec<bool>,
    /// `nu^(t/2)` self-conjugate; `None` for odd `t`.
    pub middle_is_sc: Option<bool>,
}

impl DdStructureReport {
    pub fn all_pass(&self) -> bool {
        self.core_is_dd
            && self.nu0_is_dd
            && self.conjugate_pairs.iter().all(|&b| b)
            && self.middle_is_sc.unwrap_or(true)
    }
}

pub fn check_dd_structure(p: &Partition, t: usize) -> Result<DdStructureReport> {
    if !p.is_doubled_distinct() {
        return Err(Error::NotDoubledDistinct(p.to_string()));
    }
    let d = decompose(p, t);
    let q = &d.quotient;
    Ok(DdStructureReport {
        t,
        core_is_dd: d.core.is_doubled_distinct(),
        nu0_is_dd: q[0].is_doubled_distinct(),
        conjugate_pairs: (1..t).map(|k| q[k] == q[t - k].conjugate()).collect(),
        middle_is_sc: (t % 2 == 0).then(|| q[t / 2].is_self_conjugate()),
    })
}
