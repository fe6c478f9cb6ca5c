//! Multivariate Laurent polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use crate::algebra::{q, Q};
use crate::error::{Error, Result};

pub const MAX_VARS: usize = 4;

/// Exponent vector; unused trailing slots stay zero. Ordered lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct Monomial(pub [i32; MAX_VARS]);

impl Monomial {
    pub fn var(i: usize, e: i32) -> Self {
        let mut m = Monomial::default();
        m.0[i] = e;
        m
    }

    fn mul(self, o: Monomial) -> Monomial {
        let mut r = self;
        for (a, b) in r.0.iter_mut().zip(o.0) {
            *a += b;
        }
        r
    }

    fn div(self, o: Monomial) -> Monomial {
        let mut r = self;
        for (a, b) in r.0.iter_mut().zip(o.0) {
            *a -= b;
        }
        r
    }
}

/// Finite map from exponent vectors to nonzero rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Q>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables");
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Q::one())
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        Self::term(nvars, Monomial::default(), c)
    }

    pub fn term(nvars: usize, m: Monomial, c: Q) -> Self {
        let mut p = Self::zero(nvars);
        debug_assert!(m.0[nvars..].iter().all(|&e| e == 0));
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// `c * prod x_i^{e_i}`.
    pub fn monomial(nvars: usize, exps: &[i32], c: Q) -> Self {
        assert!(exps.len() <= nvars);
        let mut m = Monomial::default();
        m.0[..exps.len()].copy_from_slice(exps);
        Self::term(nvars, m, c)
    }

    /// The variable `x_i` raised to `e`.
    pub fn var(nvars: usize, i: usize, e: i32) -> Self {
        Self::term(nvars, Monomial::var(i, e), Q::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::default())
                .is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn constant_term(&self) -> Q {
        self.coeff(&Monomial::default())
    }

    pub fn as_monomial(&self) -> Option<(Monomial, &Q)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (*m, c))
        } else {
            None
        }
    }

    fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// Adds `c * self` into `acc`.
    pub fn add_scaled_into(&self, c: &LaurentPoly, acc: &mut LaurentPoly) {
        for (m1, c1) in &c.terms {
            for (m2, c2) in &self.terms {
                acc.add_term(m1.mul(*m2), c1 * c2);
            }
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplies by the monomial `prod x_i^{e_i}`.
    pub fn shift(&self, m: Monomial) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect(),
        }
    }

    /// Per-variable minimum and maximum exponent.
    fn bounds(&self) -> Option<(Monomial, Monomial)> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        let (mut lo, mut hi) = (first, first);
        for m in it {
            for i in 0..self.nvars {
                lo.0[i] = lo.0[i].min(m.0[i]);
                hi.0[i] = hi.0[i].max(m.0[i]);
            }
        }
        Some((lo, hi))
    }

    /// Exact division; fails with the residual when `b` does not divide `self`.
    pub fn exact_div(&self, b: &LaurentPoly) -> Result<LaurentPoly> {
        assert_eq!(self.nvars, b.nvars, "ring mismatch");
        if b.is_zero() {
            return Err(Error::InexactDivision("division by zero".into()));
        }
        if let Some((m, c)) = b.as_monomial() {
            return Ok(LaurentPoly {
                nvars: self.nvars,
                terms: self.terms.iter().map(|(k, v)| (k.div(m), v / c)).collect(),
            });
        }
        let Some((alo, ahi)) = self.bounds() else {
            return Ok(Self::zero(self.nvars));
        };
        let (blo, bhi) = b.bounds().expect("nonzero");
        // Any quotient term lies in [alo - blo, ahi - bhi] coordinate-wise.
        let qlo = alo.div(blo);
        let qhi = ahi.div(bhi);
        let (lead_m, lead_c) = b.terms.iter().next_back().map(|(m, c)| (*m, c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((m, c)) = rem.terms.iter().next_back().map(|(m, c)| (*m, c.clone())) {
            let qm = m.div(lead_m);
            let inside = (0..self.nvars).all(|i| qlo.0[i] <= qm.0[i] && qm.0[i] <= qhi.0[i]);
            if !inside {
                return Err(Error::InexactDivision(rem.to_string()));
            }
            let qc = c / &lead_c;
            for (bm, bc) in &b.terms {
                rem.add_term(bm.mul(qm), -(bc * &qc));
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// Substitutes `x_i -> images[i]` (each a monomial of the target ring).
    pub fn substitute_monomials(&self, target_nvars: usize, images: &[Monomial]) -> LaurentPoly {
        assert_eq!(images.len(), self.nvars);
        let mut out = LaurentPoly::zero(target_nvars);
        for (m, c) in &self.terms {
            let mut img = Monomial::default();
            for (i, &e) in m.0[..self.nvars].iter().enumerate() {
                for (slot, d) in img.0.iter_mut().zip(images[i].0) {
                    *slot += e * d;
                }
            }
            out.add_term(img, c.clone());
        }
        out
    }

    /// Evaluates variable `i` at the rational `value`; the variable remains
    /// in the ring with exponent zero.
    pub fn eval_var(&self, i: usize, value: &Q) -> Result<LaurentPoly> {
        if value.is_zero() && self.terms.keys().any(|m| m.0[i] < 0) {
            return Err(Error::InexactDivision(format!("negative power evaluated at 0 in {self}")));
        }
        let mut out = LaurentPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            let mut m2 = *m;
            m2.0[i] = 0;
            out.add_term(m2, c * rational_pow(value, e));
        }
        Ok(out)
    }

    /// `x_i -> x_i^{-1}`.
    pub fn invert_var(&self, i: usize) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m2 = *m;
                    m2.0[i] = -m2.0[i];
                    (m2, c.clone())
                })
                .collect(),
        }
    }

    /// Value at `x_1 = ... = x_n = 1`.
    pub fn coefficient_sum(&self) -> Q {
        self.terms.values().fold(Q::zero(), |a, c| a + c)
    }

    /// Canonical rendering with the given variable names, largest monomial
    /// (lexicographically) first.
    pub fn render(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> = (0..self.nvars)
                .filter(|&i| m.0[i] != 0)
                .map(|i| {
                    let name = names.get(i).copied().unwrap_or("?");
                    if m.0[i] == 1 {
                        name.to_string()
                    } else {
                        format!("{name}^{}", m.0[i])
                    }
                })
                .collect();
            if mono.is_empty() {
                s.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    s.push_str(&abs.to_string());
                    s.push('*');
                }
                s.push_str(&mono.join("*"));
            }
        }
        s
    }
}

pub(crate) fn rational_pow(v: &Q, e: i32) -> Q {
    let mut r = Q::one();
    for _ in 0..e.unsigned_abs() {
        r *= v;
    }
    if e < 0 {
        r.recip()
    } else {
        r
    }
}

const DEFAULT_NAMES: [&str; MAX_VARS] = ["x1", "x2", "x3", "x4"];

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&DEFAULT_NAMES))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, o: &LaurentPoly) {
        debug_assert_eq!(self.nvars, o.nvars);
        for (m, c) in &o.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, o: &LaurentPoly) {
        debug_assert_eq!(self.nvars, o.nvars);
        for (m, c) in &o.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        r += o;
        r
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        r -= o;
        r
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&q(-1))
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        debug_assert_eq!(self.nvars, o.nvars);
        let mut r = LaurentPoly::zero(self.nvars);
        o.add_scaled_into(self, &mut r);
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(e: i32) -> LaurentPoly {
        LaurentPoly::var(1, 0, e)
    }

    #[test]
    fn products_and_division() {
        let a = &x(1) - &x(-1);
        let b = &x(1) + &x(-1);
        assert_eq!(&a * &b, &x(2) - &x(-2));
        let num = &x(3) - &x(-3);
        let sp2 = &(&x(2) + &LaurentPoly::one(1)) + &x(-2);
        assert_eq!(num.exact_div(&a).unwrap(), sp2);
        assert_eq!(x(2).exact_div(&x(3)).unwrap(), x(-1));
    }

    #[test]
    fn inexact_division_reports_residual() {
        let a = &x(2) + &LaurentPoly::one(1);
        let b = &x(1) + &LaurentPoly::one(1);
        assert!(matches!(a.exact_div(&b), Err(Error::InexactDivision(_))));
    }

    #[test]
    fn multivariate_division() {
        let n = 2;
        let x1 = LaurentPoly::var(n, 0, 1);
        let x2 = LaurentPoly::var(n, 1, -1);
        let a = &(&x1 + &x2) * &(&x1 - &LaurentPoly::constant(n, q(3)));
        let b = &x1 - &LaurentPoly::constant(n, q(3));
        assert_eq!(a.exact_div(&b).unwrap(), &x1 + &x2);
    }

    #[test]
    fn rendering_is_canonical() {
        let p = &(&x(2).scale(&q(3)) - &x(-1)) + &LaurentPoly::constant(1, Q::new(1.into(), 2.into()));
        assert_eq!(p.render(&["q"]), "3*q^2 + 1/2 - q^-1");
        assert_eq!(LaurentPoly::zero(2).to_string(), "0");
    }

    #[test]
    fn substitution_and_evaluation() {
        let n = 2;
        let p = &LaurentPoly::monomial(n, &[2, -1], q(1)) + &LaurentPoly::monomial(n, &[0, 1], q(2));
        let sub = p.substitute_monomials(1, &[Monomial::var(0, 1), Monomial::var(0, 2)]);
        assert_eq!(sub, &x(0) + &x(2).scale(&q(2)));
        let ev = p.eval_var(1, &q(2)).unwrap();
        assert_eq!(ev, &LaurentPoly::monomial(n, &[2], Q::new(1.into(), 2.into())) + &LaurentPoly::constant(n, q(4)));
        assert_eq!(p.coefficient_sum(), q(3));
    }
}
