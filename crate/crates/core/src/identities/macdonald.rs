//! The type C Macdonald identity as a lattice sum, and its rewritings as
//! sums of characters over symmetric cores.

use super::{check_budget, ordered_sum, HalfCap, Identity, Params, Tally, VerificationReport};
use crate::algebra::{
    mul_k_t, mul_pochhammer, q, so_odd, sp, weyl_denominator_c, Grade, Grading, LaurentPoly, SeriesSpace,
    TruncatedSeries,
};
use crate::error::Result;
use crate::vcoding::{codings_up_to, core_from_vcoding, Family, VCoding};

fn x_space(t: usize, cap: u32, den: u32) -> SeriesSpace {
    let names: Vec<String> = (1..=t).map(|i| format!("x{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    SeriesSpace::new(vec![Grading::new("T", cap, den)], &refs)
}

/// `(T;T)^n prod_i (T x_i^2, T x_i^-2; T) K_T` with `T^1` at grade `unit`.
fn type_c_product(space: &SeriesSpace, t: usize, euler_power: usize, unit: Grade) -> Result<TruncatedSeries> {
    let mut s = TruncatedSeries::one(space);
    let one = LaurentPoly::one(t);
    for _ in 0..euler_power {
        mul_pochhammer(&mut s, &one, unit, unit)?;
    }
    for i in 0..t {
        mul_pochhammer(&mut s, &LaurentPoly::var(t, i, 2), unit, unit)?;
        mul_pochhammer(&mut s, &LaurentPoly::var(t, i, -2), unit, unit)?;
    }
    mul_k_t(&mut s, t, unit)?;
    Ok(s)
}

fn permutations(t: usize) -> Vec<(Vec<usize>, bool)> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for k in 0..used.len() {
            if !used[k] {
                used[k] = true;
                cur.push(k + 1);
                rec(cur, used, out);
                cur.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; t], &mut out);
    out.into_iter()
        .map(|p| {
            let inv = (0..t).flat_map(|a| (a + 1..t).map(move |b| (a, b))).filter(|&(a, b)| p[a] > p[b]).count();
            (p, inv % 2 == 1)
        })
        .collect()
}

/// Lattice side of the type C Macdonald identity, truncated at `T^cap`.
fn macdonald_lattice_sum(space: &SeriesSpace, t: usize, cap: u32) -> (TruncatedSeries, u64) {
    let ti = t as i64;
    // Per coordinate the T exponent is (t+1)m^2 + m a with |a| <= t, so any
    // m with (t+1)m^2 - t|m| > cap contributes nothing.
    let mut ms = vec![0i64];
    let mut m = 1i64;
    while (ti + 1) * m * m - ti * m <= cap as i64 {
        ms.push(m);
        ms.push(-m);
        m += 1;
    }
    let mut out = TruncatedSeries::zero(space);
    let mut terms = 0u64;
    let perms = permutations(t);
    let mut idx = vec![0usize; t];
    loop {
        let mv: Vec<i64> = idx.iter().map(|&k| ms[k]).collect();
        for (sigma, odd) in &perms {
            // Expand prod_i (A_i - B_i) term by term.
            for mask in 0u32..(1 << t) {
                let mut exps = vec![0i32; t];
                let mut tdeg = 0i64;
                let mut neg = *odd;
                for i in 0..t {
                    let a = sigma[i] as i64 - ti - 1;
                    let e = if mask >> i & 1 == 0 {
                        a
                    } else {
                        neg = !neg;
                        -a
                    };
                    let mi = mv[i];
                    exps[i] = ((2 * ti + 2) * mi + e) as i32;
                    tdeg += (ti + 1) * mi * mi + mi * e;
                }
                if tdeg < 0 || tdeg > cap as i64 {
                    continue;
                }
                terms += 1;
                let c = LaurentPoly::monomial(t, &exps, q(if neg { -1 } else { 1 }));
                *out.coeff_mut([tdeg as u32, 0]) += &c;
            }
        }
        let mut k = 0;
        loop {
            if k == t {
                return (out, terms);
            }
            idx[k] += 1;
            if idx[k] < ms.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// `Delta_C (T;T)^t prod (Tx_i^2, Tx_i^-2;T) K_T` against the signed lattice
/// sum over `Z^t x S_t`.
pub fn verify_macdonald_c(params: &Params) -> Result<VerificationReport> {
    let t = params.rank(1, 3)?;
    let cap = params.t_cap_or(HalfCap::whole(8)).floor();
    let space = x_space(t, cap, 1);
    check_budget(&space, (4 * cap as u64 + 8).pow(t as u32), params)?;
    let mut tally = Tally::new(Identity::MacdonaldC, params);
    let prod = type_c_product(&space, t, t, [1, 0])?;
    let lhs = prod.scale(&weyl_denominator_c(t));
    let (rhs, terms) = macdonald_lattice_sum(&space, t, cap);
    tally.count("lattice terms", terms);
    tally.compare_series(&lhs, &rhs);
    Ok(tally.finish())
}

/// Character sums over the codings of one symmetric family.
fn character_sum(
    space: &SeriesSpace,
    codings: &[VCoding],
    character: impl Fn(&VCoding) -> Result<LaurentPoly> + Sync,
    odd_sign: impl Fn(&VCoding) -> Result<bool> + Sync,
    grade_of: impl Fn(u64) -> Grade + Sync,
) -> Result<TruncatedSeries> {
    ordered_sum(space, codings, |c| {
        let core = core_from_vcoding(c)?;
        let mut chi = character(c)?;
        if odd_sign(c)? {
            chi = -&chi;
        }
        Ok(TruncatedSeries::term(space, chi, grade_of(core.weight())))
    })
}

/// `sum_{DD_(2t+2)} (-1)^{d + |H+|} T^{|w|/2} sp_mu(x)` against
/// `(T;T)^t K_T prod (T x_i^2, T x_i^-2; T)`.
pub fn verify_thm11(params: &Params) -> Result<VerificationReport> {
    let t = params.rank(1, 3)?;
    let cap = params.t_cap_or(HalfCap::whole(6)).floor();
    let space = x_space(t, cap, 1);
    check_budget(&space, (4 * cap as u64 + 8).pow(t as u32), params)?;
    let mut tally = Tally::new(Identity::Thm11, params);
    let g = 2 * t as u32 + 2;
    let codings = codings_up_to(Family::Dd, t, 2 * cap as u64);
    tally.count("cores", codings.len() as u64);
    let lhs = character_sum(
        &space,
        &codings,
        |c| sp(&c.mu()?, t),
        |c| {
            let core = core_from_vcoding(c)?;
            Ok((core.durfee() as u32 + core.h_plus_stats(g).h_plus) % 2 == 1)
        },
        |w| [(w / 2) as u32, 0],
    )?;
    let rhs = type_c_product(&space, t, t, [1, 0])?;
    tally.compare_series(&lhs, &rhs);
    Ok(tally.finish())
}

/// `sum_{SC_(2t)} (-1)^{|H+| + |H+ on the diagonal| + d} T^{|w|/2} so_mu(x)`
/// against `(T^1/2;T^1/2)(T;T)^{t-1} K_T prod (T^1/2 x_i, T^1/2 x_i^-1; T^1/2)`.
pub fn verify_thm12(params: &Params) -> Result<VerificationReport> {
    let t = params.rank(1, 3)?;
    let cap = params.t_cap_or(HalfCap::whole(3)).halves();
    let space = x_space(t, cap, 2);
    check_budget(&space, (2 * cap as u64 + 8).pow(t as u32), params)?;
    let mut tally = Tally::new(Identity::Thm12, params);
    let g = 2 * t as u32;
    let codings = codings_up_to(Family::Sc, t, cap as u64);
    tally.count("cores", codings.len() as u64);
    let lhs = character_sum(
        &space,
        &codings,
        |c| so_odd(&c.mu()?, t),
        |c| {
            let core = core_from_vcoding(c)?;
            let st = core.h_plus_stats(g);
            Ok((st.h_plus + st.h_plus_diag + core.durfee() as u32) % 2 == 1)
        },
        |w| [w as u32, 0],
    )?;
    let one = LaurentPoly::one(t);
    let mut rhs = TruncatedSeries::one(&space);
    mul_pochhammer(&mut rhs, &one, [1, 0], [1, 0])?;
    for _ in 1..t {
        mul_pochhammer(&mut rhs, &one, [2, 0], [2, 0])?;
    }
    mul_k_t(&mut rhs, t, [2, 0])?;
    for i in 0..t {
        mul_pochhammer(&mut rhs, &LaurentPoly::var(t, i, 1), [1, 0], [1, 0])?;
        mul_pochhammer(&mut rhs, &LaurentPoly::var(t, i, -1), [1, 0], [1, 0])?;
    }
    tally.compare_series(&lhs, &rhs);
    Ok(tally.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(t: usize, cap: &str) -> Params {
        Params {
            t: Some(t),
            t_cap: Some(cap.parse().unwrap()),
            ..Params::default()
        }
    }

    #[test]
    fn low_order_instances() {
        assert!(verify_macdonald_c(&params(1, "4")).unwrap().passed());
        assert!(verify_thm11(&params(1, "3")).unwrap().passed());
        assert!(verify_thm12(&params(1, "3/2")).unwrap().passed());
    }

    #[test]
    fn permutation_signs() {
        let p = permutations(3);
        assert_eq!(p.len(), 6);
        assert_eq!(p.iter().filter(|(_, odd)| *odd).count(), 3);
    }

    #[test]
    fn rank_is_required() {
        assert!(verify_thm11(&Params::default()).is_err());
        assert!(verify_thm11(&params(5, "1")).is_err());
    }
}
