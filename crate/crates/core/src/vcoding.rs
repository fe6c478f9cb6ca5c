//! V-codings of doubled distinct `(2t+2)`-cores and self-conjugate
//! `2t`-cores: the `t` largest of the per-residue values
//! `beta_i = (last zero in residue i) + g`.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::algebra::FieldElem;
use crate::error::{Error, Result};
use crate::littlewood::{core_from_vector, CoreVector};
use crate::partitions::Partition;
use crate::words::{box_index_pairs, BoundaryWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Dd,
    Sc,
}

impl Family {
    /// Modulus attached to rank `t`.
    pub fn modulus(self, t: usize) -> usize {
        match self {
            Family::Dd => 2 * t + 2,
            Family::Sc => 2 * t,
        }
    }

    /// Value paired with `v` by the diagonal symmetry.
    fn partner(self, g: i64, v: i64) -> i64 {
        match self {
            Family::Dd => g - v,
            Family::Sc => g - 1 - v,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct VCoding {
    pub g: usize,
    pub t: usize,
    pub family: Family,
    pub v: Vec<i64>,
}

/// `beta_i` for `i = 0..g`.
pub fn beta_vector(p: &Partition, g: usize) -> Vec<i64> {
    let word = BoundaryWord::encode(p);
    (0..g as i64)
        .map(|i| {
            let sub = word.word().subword(g as i64, i);
            let last_zero = sub.top() - 1;
            last_zero * g as i64 + i + g as i64
        })
        .collect()
}

fn check_family(p: &Partition, t: usize, g: usize, family: Family) -> Result<()> {
    if t == 0 || g != family.modulus(t) {
        return Err(Error::Modulus(format!("{family:?} codings of rank {t} need g = {}", family.modulus(t))));
    }
    let ok = match family {
        Family::Dd => p.is_doubled_distinct(),
        Family::Sc => p.is_self_conjugate(),
    };
    if !ok {
        return Err(match family {
            Family::Dd => Error::NotDoubledDistinct(p.to_string()),
            Family::Sc => Error::NotSelfConjugate(p.to_string()),
        });
    }
    if !p.is_core(g as u32) {
        return Err(Error::NotACore {
            partition: p.to_string(),
            t: g,
        });
    }
    Ok(())
}

/// Residues of `beta` sorted by decreasing value.
fn sorting_permutation(beta: &[i64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..beta.len()).collect();
    order.sort_by(|&a, &b| beta[b].cmp(&beta[a]));
    order
}

pub fn vcoding(core: &Partition, g: usize, t: usize, family: Family) -> Result<VCoding> {
    check_family(core, t, g, family)?;
    let beta = beta_vector(core, g);
    let distinct: BTreeSet<i64> = beta.iter().copied().collect();
    assert_eq!(distinct.len(), g, "beta values of a core are pairwise distinct");
    let order = sorting_permutation(&beta);
    let v = order[..t].iter().map(|&i| beta[i]).collect();
    Ok(VCoding { g, t, family, v })
}

impl VCoding {
    /// Validates the defining conditions of a coding.
    pub fn new(g: usize, t: usize, family: Family, v: Vec<i64>) -> Result<Self> {
        let c = VCoding { g, t, family, v };
        c.validate()?;
        Ok(c)
    }

    fn invalid(&self, reason: &str) -> Error {
        Error::InvalidCoding {
            v: self.v.clone(),
            reason: reason.to_string(),
        }
    }

    fn validate(&self) -> Result<()> {
        let (g, t) = (self.g as i64, self.t as i64);
        if self.t == 0 || self.g != self.family.modulus(self.t) {
            return Err(Error::Modulus(format!("g = {g} does not match rank {t}")));
        }
        if self.v.len() != self.t {
            return Err(self.invalid("wrong length"));
        }
        if self.v.windows(2).any(|w| w[0] <= w[1]) {
            return Err(self.invalid("not strictly decreasing"));
        }
        let res: Vec<i64> = self.v.iter().map(|x| x.rem_euclid(g)).collect();
        let target = match self.family {
            Family::Dd => 0,
            Family::Sc => g - 1,
        };
        for (a, &ra) in res.iter().enumerate() {
            if self.family == Family::Dd && (ra == 0 || ra == t + 1) {
                return Err(self.invalid("residue fixed by the symmetry"));
            }
            for &rb in &res[a + 1..] {
                if ra == rb {
                    return Err(self.invalid("repeated residue"));
                }
                if (ra + rb).rem_euclid(g) == target {
                    return Err(self.invalid("complementary residues"));
                }
            }
        }
        let floor = match self.family {
            Family::Dd => t + 2,
            Family::Sc => t,
        };
        if self.v[self.t - 1] < floor {
            return Err(self.invalid("smallest entry too small"));
        }
        Ok(())
    }

    /// The full `beta` vector recovered from the symmetry.
    pub fn beta(&self) -> Result<Vec<i64>> {
        self.validate()?;
        let g = self.g as i64;
        let mut beta: Vec<Option<i64>> = vec![None; self.g];
        if self.family == Family::Dd {
            beta[0] = Some(0);
            beta[self.t + 1] = Some(self.t as i64 + 1);
        }
        for &v in &self.v {
            let w = self.family.partner(g, v);
            for x in [v, w] {
                let slot = &mut beta[x.rem_euclid(g) as usize];
                if slot.is_some() {
                    return Err(self.invalid("residue clash"));
                }
                *slot = Some(x);
            }
        }
        beta.into_iter()
            .map(|b| b.ok_or_else(|| self.invalid("unfilled residue")))
            .collect()
    }

    /// `v_i - t - 1` for doubled distinct codings and `v_i - t` for
    /// self-conjugate ones.
    pub fn shifted(&self) -> Vec<i64> {
        let s = match self.family {
            Family::Dd => self.t as i64 + 1,
            Family::Sc => self.t as i64,
        };
        self.v.iter().map(|v| v - s).collect()
    }

    /// Highest weight indexing the character attached to the core.
    pub fn mu(&self) -> Result<Partition> {
        let s = match self.family {
            Family::Dd => 2 * self.t as i64 + 2,
            Family::Sc => 2 * self.t as i64,
        };
        let mut parts: Vec<i64> = self.v.iter().enumerate().map(|(k, v)| v + k as i64 + 1 - s).collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::try_from(parts)
    }
}

pub fn core_from_vcoding(c: &VCoding) -> Result<Partition> {
    let beta = c.beta()?;
    let g = c.g as i64;
    let n: Vec<i64> = beta.iter().enumerate().map(|(i, b)| (b - i as i64) / g).collect();
    core_from_vector(&CoreVector::new(n)?)
}

/// `|core| = (1/g) sum r_i^2 - (g/2 - 1)(g - 1)/12` for doubled distinct
/// codings.
pub fn weight_from_vcoding(c: &VCoding) -> Result<Rational64> {
    if c.family != Family::Dd {
        return Err(Error::Modulus("weight formula applies to doubled distinct codings".into()));
    }
    let g = c.g as i64;
    let sq: i64 = c.shifted().iter().map(|r| r * r).sum();
    Ok(Rational64::new(sq, g) - Rational64::new((g / 2 - 1) * (g - 1), 12))
}

/// `|core| = (sum beta_i^2 - sum i^2) / 2g`, valid for any `g`-core.
pub fn weight_from_beta(beta: &[i64]) -> Rational64 {
    let g = beta.len() as i64;
    let s: i64 = beta.iter().enumerate().map(|(i, b)| b * b - (i * i) as i64).sum();
    Rational64::new(s, 2 * g)
}

/// Every valid coding of rank `t` whose core has weight at most `max_weight`.
pub fn codings_up_to(family: Family, t: usize, max_weight: u64) -> Vec<VCoding> {
    let g = family.modulus(t) as i64;
    let floor = match family {
        Family::Dd => t as i64 + 2,
        Family::Sc => t as i64,
    };
    // Each entry satisfies (2v - c)^2 <= 4g W + sum (2k - e)^2 with the
    // constants matching the two weight formulas.
    let (c, base): (i64, i64) = match family {
        Family::Dd => (2 * t as i64 + 2, (1..=t as i64).map(|k| 4 * k * k).sum()),
        Family::Sc => (2 * t as i64 - 1, (1..=t as i64).map(|k| (2 * k - 1) * (2 * k - 1)).sum()),
    };
    let bound = 4 * g * max_weight as i64 + base;
    let mut top = floor;
    while (2 * (top + 1) - c).pow(2) <= bound {
        top += 1;
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(t);
    fn rec(
        cur: &mut Vec<i64>,
        hi: i64,
        floor: i64,
        t: usize,
        g: usize,
        family: Family,
        max_weight: u64,
        out: &mut Vec<VCoding>,
    ) {
        if cur.len() == t {
            if let Ok(c) = VCoding::new(g, t, family, cur.clone()) {
                let w = weight_from_beta(&c.beta().expect("validated"));
                if w <= Rational64::from_integer(max_weight as i64) {
                    out.push(c);
                }
            }
            return;
        }
        let need = (t - cur.len() - 1) as i64;
        for v in (floor + need..=hi).rev() {
            cur.push(v);
            rec(cur, v - 1, floor, t, g, family, max_weight, out);
            cur.pop();
        }
    }
    rec(&mut cur, top, floor, t, g as usize, family, max_weight, &mut out);
    out
}

/// Exponent of each `tau(a)` in a product of powers of `tau`.
pub type TauExponents = BTreeMap<i64, i64>;

fn bump(m: &mut TauExponents, a: i64, e: i64) {
    let slot = m.entry(a).or_insert(0);
    *slot += e;
    if *slot == 0 {
        m.remove(&a);
    }
}

/// Hook-side exponents: `prod tau(h - eps g) / tau(h)` over all cells.
pub fn hook_side_exponents(core: &Partition, g: usize) -> TauExponents {
    let mut m = TauExponents::new();
    for c in core.cells() {
        bump(&mut m, c.hook as i64 - c.eps as i64 * g as i64, 1);
        bump(&mut m, c.hook as i64, -1);
    }
    m
}

/// Coding-side exponents of the product formula for a doubled distinct core.
pub fn coding_side_exponents(core: &Partition, c: &VCoding) -> TauExponents {
    let g = c.g as i64;
    let mut m = TauExponents::new();
    for (&i, &a) in &core.h_plus_stats(c.g as u32).alpha {
        bump(&mut m, -(i as i64), a as i64);
        bump(&mut m, i as i64, -(a as i64));
    }
    let r = c.shifted();
    for (k, &ri) in r.iter().enumerate() {
        let i = k as i64 + 1;
        bump(&mut m, ri, 1);
        bump(&mut m, i, -1);
        for (l, &rj) in r.iter().enumerate().skip(k + 1) {
            let j = l as i64 + 1;
            bump(&mut m, ri - rj, 1);
            bump(&mut m, j - i, -1);
            bump(&mut m, ri + rj, 1);
            bump(&mut m, g - i - j, -1);
        }
    }
    m
}

fn eval_exponents<F: FieldElem>(m: &TauExponents, one: &F, tau: &impl Fn(i64) -> F) -> Result<F> {
    let mut acc = one.clone();
    for (&a, &e) in m {
        let x = tau(a);
        if x.is_zero_elem() {
            return Err(Error::TauZero(a));
        }
        acc = acc.mul(&x.powi(e));
    }
    Ok(acc)
}

/// Both sides of the `tau`-product formula for a doubled distinct core,
/// each evaluated factor by factor.
pub fn tau_product_identity<F: FieldElem>(core: &Partition, t: usize, one: &F, tau: impl Fn(i64) -> F) -> Result<(F, F)> {
    let g = 2 * t + 2;
    let c = vcoding(core, g, t, Family::Dd)?;
    let mut lhs = one.clone();
    for cell in core.cells() {
        let a = cell.hook as i64 - cell.eps as i64 * g as i64;
        let (x, y) = (tau(a), tau(cell.hook as i64));
        for (arg, val) in [(a, &x), (cell.hook as i64, &y)] {
            if val.is_zero_elem() {
                return Err(Error::TauZero(arg));
            }
        }
        lhs = lhs.mul(&x).mul(&y.inv());
    }
    let rhs = eval_exponents(&coding_side_exponents(core, &c), one, &tau)?;
    Ok((lhs, rhs))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum IntervalKind {
    Plus,
    Minus,
}

/// Arithmetic progression of step `g` clipped to a half-open range:
/// anchored at `m` and excluding `hi` for `Plus`, anchored at `hi` and
/// excluding `m` for `Minus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GInterval {
    pub kind: IntervalKind,
    pub m: i64,
    pub hi: i64,
    pub g: i64,
}

impl GInterval {
    pub fn plus(m: i64, hi: i64, g: i64) -> Self {
        GInterval { kind: IntervalKind::Plus, m, hi, g }
    }

    pub fn minus(m: i64, hi: i64, g: i64) -> Self {
        GInterval { kind: IntervalKind::Minus, m, hi, g }
    }

    pub fn elements(&self) -> Vec<i64> {
        match self.kind {
            IntervalKind::Plus => (self.m..self.hi).step_by(self.g as usize).collect(),
            IntervalKind::Minus => {
                let mut v: Vec<i64> = (self.m + 1..=self.hi)
                    .rev()
                    .step_by(self.g as usize)
                    .collect();
                v.reverse();
                v
            }
        }
    }
}

/// Index sets of the first hook as unions of `g`-intervals: the plus set
/// holds the `i`-indices of first-row cells, the minus set the `j`-indices
/// of first-column cells below the corner.
pub fn first_hook_intervals(c: &VCoding) -> Result<(BTreeSet<i64>, BTreeSet<i64>)> {
    if c.family != Family::Dd {
        return Err(Error::Modulus("first-hook intervals are stated for doubled distinct cores".into()));
    }
    c.validate()?;
    let g = c.g as i64;
    let v1 = c.v[0];
    if core_from_vcoding(c)?.is_empty() {
        return Err(Error::EmptyCore(format!("{:?}", c.v)));
    }
    let mut plus = vec![
        GInterval::plus(-v1 + g, v1 - g, g),
        GInterval::plus(0, v1 - g, g),
        GInterval::plus(g / 2, v1 - g, g),
    ];
    let mut minus = vec![
        GInterval::minus(-v1 + g, v1 - 2 * g, g),
        GInterval::minus(-v1 + g, -g, g),
        GInterval::minus(-v1 + g, -g / 2, g),
    ];
    for &vi in &c.v[1..] {
        plus.push(GInterval::plus(vi, v1 - g, g));
        plus.push(GInterval::plus(-vi + g, v1 - g, g));
        minus.push(GInterval::minus(-v1 + g, vi - g, g));
        minus.push(GInterval::minus(-v1 + g, -vi, g));
    }
    let collect = |xs: &[GInterval]| xs.iter().flat_map(GInterval::elements).collect::<BTreeSet<_>>();
    Ok((collect(&plus), collect(&minus)))
}

/// First-hook index sets read off the diagram.
pub fn first_hook_indices(p: &Partition) -> (BTreeSet<i64>, BTreeSet<i64>) {
    let mut plus = BTreeSet::new();
    let mut minus = BTreeSet::new();
    for (cell, pair) in box_index_pairs(p) {
        if cell.row == 1 {
            plus.insert(pair.i);
        } else if cell.col == 1 {
            minus.insert(pair.j);
        }
    }
    (plus, minus)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParityCheck {
    pub h_plus_parity: u8,
    pub durfee_plus_sign_parity: u8,
}

impl ParityCheck {
    pub fn holds(&self) -> bool {
        self.h_plus_parity == self.durfee_plus_sign_parity
    }
}

/// Parity of the signed permutation carried by the coding: each residue
/// `rho` of `v_k` becomes `rho` when `rho <= t` and `-(g - rho)` otherwise;
/// the parity is the inversion count of the absolute values plus the number
/// of positive entries.
pub fn coding_parity(c: &VCoding) -> u8 {
    let g = c.g as i64;
    let t = c.t as i64;
    let signed: Vec<i64> = c
        .v
        .iter()
        .map(|v| {
            let rho = v.rem_euclid(g);
            if rho <= t {
                rho
            } else {
                -(g - rho)
            }
        })
        .collect();
    let mut inv = 0usize;
    for a in 0..signed.len() {
        for b in a + 1..signed.len() {
            if signed[a].abs() > signed[b].abs() {
                inv += 1;
            }
        }
    }
    let pos = signed.iter().filter(|&&x| x > 0).count();
    ((inv + pos) % 2) as u8
}

pub fn parity_check(core: &Partition, t: usize) -> Result<ParityCheck> {
    let g = 2 * t + 2;
    let c = vcoding(core, g, t, Family::Dd)?;
    let h_plus = core.h_plus_stats(g as u32).h_plus;
    Ok(ParityCheck {
        h_plus_parity: (h_plus % 2) as u8,
        durfee_plus_sign_parity: ((core.durfee() as u8) + coding_parity(&c)) % 2,
    })
}
