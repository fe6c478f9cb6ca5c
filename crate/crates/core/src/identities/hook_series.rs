//! Hook-length series over all partitions and over doubled distinct ones.

use super::enumerate::{all_partitions, doubled_distinct};
use super::{check_budget, ordered_sum, HalfCap, Identity, Params, Tally, VerificationReport};
use crate::algebra::{pochhammer, q, Grading, LaurentPoly, SeriesSpace, TruncatedSeries, Q};
use crate::error::Result;
use crate::partitions::Partition;

/// `prod_h (1 - z / h^2)` in the single variable `z`.
fn no_weight(p: &Partition) -> LaurentPoly {
    let one = LaurentPoly::one(1);
    let mut acc = one.clone();
    for h in p.hooks() {
        let h = h as i64;
        let f = &one - &LaurentPoly::monomial(1, &[1], Q::new((1).into(), (h * h).into()));
        acc = &acc * &f;
    }
    acc
}

/// `sum_{|lambda| <= N} T^|lambda| prod_h (1 - z/h^2)` against
/// `prod_k (1 - T^k)^(z - 1)`, over rational polynomials in `z`.
pub fn verify_nekrasov_okounkov(params: &Params) -> Result<VerificationReport> {
    let cap = params.t_cap_or(HalfCap::whole(12)).floor();
    let space = SeriesSpace::new(vec![Grading::new("T", cap, 1)], &["z"]);
    check_budget(&space, cap as u64 + 1, params)?;
    let mut tally = Tally::new(Identity::NekrasovOkounkov, params);
    let parts = all_partitions(cap as u64);
    tally.count("partitions", parts.len() as u64);
    let lhs = ordered_sum(&space, &parts, |p| {
        Ok(TruncatedSeries::term(&space, no_weight(p), [p.weight() as u32, 0]))
    })?;
    let euler = pochhammer(&space, &LaurentPoly::one(1), [1, 0], [1, 0])?;
    let exponent = &LaurentPoly::var(1, 0, 1) - &LaurentPoly::one(1);
    let rhs = euler.pow_poly(&exponent)?;
    tally.compare_series(&lhs, &rhs);
    Ok(tally.finish())
}

/// `sum T^|lambda| prod_h (1-uq^h)(1-u^-1 q^h)/(1-q^h)^2` against the
/// quadruple product, jointly truncated in `T` and `q`.
pub fn verify_hande(params: &Params) -> Result<VerificationReport> {
    let t_cap = params.t_cap_or(HalfCap::whole(4)).floor();
    let q_cap = params.q_cap_or(8);
    let space = SeriesSpace::new(vec![Grading::new("T", t_cap, 1), Grading::new("q", q_cap, 1)], &["u"]);
    check_budget(&space, 2 * q_cap as u64 + 1, params)?;
    let mut tally = Tally::new(Identity::Hande, params);
    let u = LaurentPoly::var(1, 0, 1);
    let u_inv = LaurentPoly::var(1, 0, -1);
    let one = LaurentPoly::one(1);
    let parts = all_partitions(t_cap as u64);
    tally.count("partitions", parts.len() as u64);
    let lhs = ordered_sum(&space, &parts, |p| {
        let mut s = TruncatedSeries::term(&space, one.clone(), [p.weight() as u32, 0]);
        for h in p.hooks() {
            s.mul_binomial(&u, [0, h], 1)?;
            s.mul_binomial(&u_inv, [0, h], 1)?;
            s.mul_binomial(&one, [0, h], -2)?;
        }
        Ok(s)
    })?;
    let mut rhs = TruncatedSeries::one(&space);
    for k in 1..=t_cap {
        for r in 1..=q_cap + 1 {
            let e = r as i64;
            rhs.mul_binomial(&u, [k, r], e)?;
            rhs.mul_binomial(&u_inv, [k, r], e)?;
            rhs.mul_binomial(&one, [k, r - 1], -e)?;
            rhs.mul_binomial(&one, [k, r + 1], -e)?;
        }
    }
    tally.compare_series(&lhs, &rhs);
    Ok(tally.finish())
}

/// `prod_s (1 - (2z+2) / (h_s eps_s))` in the variable `z`.
fn dd_weight(p: &Partition) -> LaurentPoly {
    let one = LaurentPoly::one(1);
    let two_z_two = &LaurentPoly::monomial(1, &[1], q(2)) + &LaurentPoly::constant(1, q(2));
    let mut acc = one.clone();
    for c in p.cells() {
        let d = c.hook as i64 * c.eps as i64;
        let f = &one - &two_z_two.scale(&Q::new(1.into(), d.into()));
        acc = &acc * &f;
    }
    if p.durfee() % 2 == 1 {
        acc = -&acc;
    }
    acc
}

/// `sum_{DD} (-1)^d T^{|lambda|/2} prod (1 - (2z+2)/(h eps))` against
/// `prod_k (1 - T^k)^(2z^2 + z)`. Doubled distinct weights are even, so the
/// grade is half the weight.
pub fn verify_petreolle(params: &Params) -> Result<VerificationReport> {
    let cap = params.t_cap_or(HalfCap::whole(8)).floor();
    let space = SeriesSpace::new(vec![Grading::new("T", cap, 1)], &["z"]);
    check_budget(&space, 2 * cap as u64 + 1, params)?;
    let mut tally = Tally::new(Identity::Petreolle, params);
    let parts = doubled_distinct(2 * cap as u64);
    tally.count("partitions", parts.len() as u64);
    let lhs = ordered_sum(&space, &parts, |p| {
        Ok(TruncatedSeries::term(&space, dd_weight(p), [(p.weight() / 2) as u32, 0]))
    })?;
    let euler = pochhammer(&space, &LaurentPoly::one(1), [1, 0], [1, 0])?;
    let exponent = &LaurentPoly::monomial(1, &[2], q(2)) + &LaurentPoly::var(1, 0, 1);
    let rhs = euler.pow_poly(&exponent)?;
    tally.compare_series(&lhs, &rhs);
    Ok(tally.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(t_cap: u32) -> Params {
        Params {
            t_cap: Some(HalfCap::whole(t_cap)),
            q_cap: Some(4),
            ..Params::default()
        }
    }

    #[test]
    fn small_caps_pass() {
        {
            let r = verify_nekrasov_okounkov(&params(6)).unwrap();
            assert!(r.passed(), "{}", r.summary());
        }
        {
            let r = verify_hande(&params(2)).unwrap();
            assert!(r.passed(), "{}", r.summary());
        }
        {
            let r = verify_petreolle(&params(6)).unwrap();
            assert!(r.passed(), "{}", r.summary());
        }
    }

    #[test]
    fn slices_of_the_hook_weights() {
        // z = 0 leaves 1 per partition; z = 1 kills every partition with a
        // hook of length 1, i.e. every nonempty one.
        for p in all_partitions(6) {
            let w = no_weight(&p);
            assert_eq!(w.eval_var(0, &q(0)).unwrap().constant_term(), q(1));
            let at_one = w.eval_var(0, &q(1)).unwrap().constant_term();
            assert_eq!(at_one == q(0), !p.is_empty());
        }
    }

    #[test]
    fn budget_refuses_huge_caps() {
        let p = Params {
            t_cap: Some(HalfCap::whole(10_000)),
            q_cap: Some(10_000),
            memory_budget_mb: 1,
            ..Params::default()
        };
        assert!(verify_hande(&p).is_err());
    }
}
