//! Per-core checks: the principal specialisation of `sp`, the `tau`-product
//! formula, the first-hook description, the sign parity and the doubled
//! distinct quotient structure.

use std::collections::BTreeMap;

use num_traits::{One, Pow, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::enumerate::doubled_distinct;
use super::{Identity, Params, Tally, VerificationReport};
use crate::algebra::{principal_sp, LaurentPoly, Monomial, RatFunc, Q};
use crate::error::Result;
use crate::littlewood::check_dd_structure;
use crate::partitions::Partition;
use crate::vcoding::{
    codings_up_to, coding_side_exponents, core_from_vcoding, first_hook_indices, first_hook_intervals,
    hook_side_exponents, parity_check, tau_product_identity, Family, TauExponents,
};

/// `+- q^shift prod (1 - q^a)^{e_a}` in one variable, with factors kept
/// symbolic so that cancellation happens before any polynomial is built.
#[derive(Debug, Clone, Default)]
pub(crate) struct FactorProduct {
    negative: bool,
    shift: i64,
    /// Exponent of `(1 - q^a)` for `a > 0`.
    factors: BTreeMap<i64, i64>,
    /// Net power of the vanishing factor `1 - q^0`.
    zero_power: i64,
    /// Net power of `1 + q^0 = 2`.
    two_power: i64,
}

impl FactorProduct {
    pub(crate) fn negate_if(&mut self, b: bool) {
        self.negative ^= b;
    }

    pub(crate) fn shift_by(&mut self, s: i64) {
        self.shift += s;
    }

    fn bump(&mut self, a: i64, e: i64) {
        let slot = self.factors.entry(a).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.factors.remove(&a);
        }
    }

    /// Multiplies by `(1 - q^a)^e`.
    pub(crate) fn one_minus(&mut self, a: i64, e: i64) {
        match a {
            0 => self.zero_power += e,
            a if a > 0 => self.bump(a, e),
            a => {
                // 1 - q^a = -q^a (1 - q^-a)
                self.negate_if(e % 2 != 0);
                self.shift += a * e;
                self.bump(-a, e);
            }
        }
    }

    /// Multiplies by `(1 + q^a)^e`, rewritten as `(1 - q^2a) / (1 - q^a)`.
    pub(crate) fn one_plus(&mut self, a: i64, e: i64) {
        if a == 0 {
            self.two_power += e;
            return;
        }
        let (a, e) = if a > 0 {
            (a, e)
        } else {
            // 1 + q^a = q^a (1 + q^-a)
            self.shift += a * e;
            (-a, e)
        };
        self.bump(2 * a, e);
        self.bump(a, -e);
    }

    /// The product as an exact Laurent polynomial, or `None` when it is not
    /// one (a vanishing denominator or a non-polynomial quotient).
    pub(crate) fn to_poly(&self) -> Option<LaurentPoly> {
        if self.zero_power > 0 {
            return Some(LaurentPoly::zero(1));
        }
        if self.zero_power < 0 {
            return None;
        }
        let one = LaurentPoly::one(1);
        let mut num = one.clone();
        let mut den = one.clone();
        let two = Q::from_integer(2.into()).pow(self.two_power as i32);
        let scalar = if self.negative { -two } else { two };
        for (&a, &e) in &self.factors {
            let f = &one - &LaurentPoly::var(1, 0, a as i32);
            let target = if e > 0 { &mut num } else { &mut den };
            *target = &*target * &f.pow(e.unsigned_abs() as u32);
        }
        let quotient = num.exact_div(&den).ok()?;
        Some(quotient.shift(Monomial::var(0, self.shift as i32)).scale(&scalar))
    }

    pub(crate) fn equals_poly(&self, p: &LaurentPoly) -> bool {
        self.to_poly().is_some_and(|x| &x == p)
    }
}

/// Right side of the principal specialisation formula for a doubled
/// distinct `(2t+2)`-core.
fn principal_product(core: &Partition, t: usize) -> FactorProduct {
    let g = 2 * t as i64 + 2;
    let shift = t as i64 + 1;
    let mut f = FactorProduct::default();
    f.negate_if(core.h_plus_stats(g as u32).h_plus % 2 == 1);
    f.shift_by(shift * core.durfee() as i64);
    for c in core.cells() {
        let h = c.hook as i64;
        f.one_minus(h - g * c.eps as i64, 1);
        f.one_minus(h, -1);
        if c.on_diagonal {
            f.one_plus(shift + h / 2, 1);
            f.one_plus(h / 2 - shift, -1);
        }
    }
    f
}

/// `sp_mu(q, ..., q^t)` against its hook product over every doubled
/// distinct `(2t+2)`-core of bounded weight.
pub fn verify_schurinter(params: &Params) -> Result<VerificationReport> {
    let t = params.rank(1, 3)?;
    let max_weight = params.core_weight_or(40);
    let mut tally = Tally::new(Identity::Schurinter, params);
    let codings = codings_up_to(Family::Dd, t, max_weight);
    tally.count("cores", codings.len() as u64);
    for c in &codings {
        let core = core_from_vcoding(c)?;
        let lhs = principal_sp(&c.mu()?, t)?;
        match principal_product(&core, t).to_poly() {
            Some(rhs) if rhs == lhs => {}
            Some(rhs) => tally.mismatch(core.to_string(), lhs.render(&["q"]), rhs.render(&["q"])),
            None => tally.mismatch(core.to_string(), lhs.render(&["q"]), "not a Laurent polynomial"),
        }
    }
    Ok(tally.finish())
}

fn exponent_bound(a: &TauExponents, b: &TauExponents) -> i64 {
    a.keys().chain(b.keys()).map(|k| k.abs()).max().unwrap_or(0)
}

/// A random nonzero rational for every integer in `[-bound, bound]` except 0.
fn random_tau(rng: &mut ChaCha8Rng, bound: i64) -> BTreeMap<i64, Q> {
    (-bound..=bound)
        .filter(|&a| a != 0)
        .map(|a| {
            let num: i64 = rng.gen_range(1..=1000) * if rng.gen_bool(0.5) { 1 } else { -1 };
            let den: i64 = rng.gen_range(1..=1000);
            (a, Q::new(num.into(), den.into()))
        })
        .collect()
}

/// The `tau`-product formula over doubled distinct `(2t+2)`-cores, checked
/// three ways: as formal exponent maps, under seeded random rational `tau`,
/// and under `tau(x) = 1 - q^x`.
pub fn verify_tau_product(params: &Params) -> Result<VerificationReport> {
    let t = params.rank(1, 3)?;
    let g = 2 * t + 2;
    let max_weight = params.core_weight_or(60);
    let mut tally = Tally::new(Identity::TauProduct, params);
    let codings = codings_up_to(Family::Dd, t, max_weight);
    tally.count("cores", codings.len() as u64);
    let one_q = RatFunc::poly(LaurentPoly::one(1));
    for (idx, c) in codings.iter().enumerate() {
        let core = core_from_vcoding(c)?;
        let at = core.to_string();
        let hooks = hook_side_exponents(&core, g);
        let coding = coding_side_exponents(&core, c);
        if hooks != coding {
            tally.mismatch(format!("{at} (formal)"), format!("{hooks:?}"), format!("{coding:?}"));
        }

        let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
        rng.set_stream(idx as u64);
        // Cell-by-cell evaluation touches arguments that cancel in the maps.
        let r_max = c.shifted().iter().map(|r| r.abs()).max().unwrap_or(0);
        let h_max = core.hooks().into_iter().max().unwrap_or(0) as i64;
        let bound = exponent_bound(&hooks, &coding).max(h_max + g as i64).max(2 * r_max + g as i64);
        for trial in 0..params.tau_trials {
            let table = random_tau(&mut rng, bound);
            let (lhs, rhs) =
                tau_product_identity(&core, t, &Q::one(), |a| table.get(&a).cloned().unwrap_or_else(Q::zero))?;
            tally.count("random evaluations", 1);
            if lhs != rhs {
                tally.mismatch(format!("{at} (trial {trial})"), lhs.to_string(), rhs.to_string());
            }
        }

        let (lhs, rhs) = tau_product_identity(&core, t, &one_q, |a| {
            RatFunc::poly(&LaurentPoly::one(1) - &LaurentPoly::var(1, 0, a as i32))
        })?;
        if lhs != rhs {
            tally.mismatch(format!("{at} (tau = 1 - q^x)"), format!("{lhs:?}"), format!("{rhs:?}"));
        }
    }
    Ok(tally.finish())
}

/// First-hook cells read from the coding against those read from the
/// diagram, over nonempty doubled distinct `(2t+2)`-cores.
pub fn verify_lemma35(params: &Params) -> Result<VerificationReport> {
    let t = params.rank(1, 3)?;
    let max_weight = params.core_weight_or(60);
    let mut tally = Tally::new(Identity::Lemma35, params);
    let codings = codings_up_to(Family::Dd, t, max_weight);
    let mut checked = 0;
    for c in &codings {
        let core = core_from_vcoding(c)?;
        if core.is_empty() {
            continue;
        }
        checked += 1;
        let from_coding = first_hook_intervals(c)?;
        let from_diagram = first_hook_indices(&core);
        if from_coding != from_diagram {
            tally.mismatch(core.to_string(), format!("{from_coding:?}"), format!("{from_diagram:?}"));
        }
    }
    tally.count("cores", checked);
    Ok(tally.finish())
}

/// `|H+|` parity against `d` plus the sign of the coding's signed
/// permutation, over doubled distinct `(2t+2)`-cores.
pub fn verify_lemma36(params: &Params) -> Result<VerificationReport> {
    let t = params.rank(1, 3)?;
    let max_weight = params.core_weight_or(60);
    let mut tally = Tally::new(Identity::Lemma36, params);
    let codings = codings_up_to(Family::Dd, t, max_weight);
    tally.count("cores", codings.len() as u64);
    for c in &codings {
        let core = core_from_vcoding(c)?;
        let p = parity_check(&core, t)?;
        if !p.holds() {
            tally.mismatch(
                core.to_string(),
                format!("|H+| parity {}", p.h_plus_parity),
                format!("d + sign parity {}", p.durfee_plus_sign_parity),
            );
        }
    }
    Ok(tally.finish())
}

/// Quotient structure of every doubled distinct partition of bounded
/// weight under the Littlewood decomposition with modulus `t`.
pub fn verify_structure_dd(params: &Params) -> Result<VerificationReport> {
    let t = params.rank(2, 8)?;
    let max_weight = params.core_weight_or(24);
    let mut tally = Tally::new(Identity::StructureDd, params);
    let parts = doubled_distinct(max_weight);
    tally.count("partitions", parts.len() as u64);
    for p in &parts {
        let r = check_dd_structure(p, t)?;
        if !r.all_pass() {
            tally.mismatch(p.to_string(), format!("{r:?}"), "all clauses pass");
        }
    }
    Ok(tally.finish())
}
