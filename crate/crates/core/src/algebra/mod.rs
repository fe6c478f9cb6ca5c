//! Exact arithmetic: rationals, Laurent polynomials, truncated series and
//! classical group characters.

mod laurent;
mod schur;
mod series;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use laurent::{LaurentPoly, Monomial, MAX_VARS};
pub use schur::{
    determinant, k_t, mul_k_t, principal_sp, so_odd, so_odd_dimension, sp, sp_dimension, weyl_denominator_c,
};
pub use series::{
    mul_pochhammer, pochhammer, Grade, Grading, SeriesMismatch, SeriesSpace, TruncatedSeries, VerificationGrid,
};

use crate::error::{Error, Result};

pub type Q = num_rational::BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Quotient of two Laurent polynomials, compared by cross multiplication.
#[derive(Clone)]
pub struct RatFunc {
    pub num: LaurentPoly,
    pub den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::NotInvertible("zero denominator".into()));
        }
        Ok(RatFunc { num, den })
    }

    pub fn poly(p: LaurentPoly) -> Self {
        let den = LaurentPoly::one(p.nvars());
        RatFunc { num: p, den }
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, o: &Self) -> bool {
        &self.num * &o.den == &o.num * &self.den
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// The operations needed to evaluate products of powers of a function.
pub trait FieldElem: Clone + PartialEq + fmt::Debug {
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn mul(&self, o: &Self) -> Self;
    fn inv(&self) -> Self;

    fn powi(&self, e: i64) -> Self {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut acc = self.one_like();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }
}

impl FieldElem for Q {
    fn one_like(&self) -> Self {
        Q::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Self {
        self.recip()
    }
}

impl FieldElem for RatFunc {
    fn one_like(&self) -> Self {
        RatFunc::poly(LaurentPoly::one(self.num.nvars()))
    }
    fn is_zero_elem(&self) -> bool {
        self.num.is_zero()
    }
    fn mul(&self, o: &Self) -> Self {
        RatFunc {
            num: &self.num * &o.num,
            den: &self.den * &o.den,
        }
    }
    fn inv(&self) -> Self {
        RatFunc {
            num: self.den.clone(),
            den: self.num.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratfunc_equality_and_powers() {
        let x = LaurentPoly::var(1, 0, 1);
        let one = LaurentPoly::one(1);
        let a = RatFunc::new(&one - &x, one.clone()).unwrap();
        let b = RatFunc::new(&one - &(&x * &x), &one + &x).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.powi(3).mul(&a.powi(-3)), a.one_like());
        assert!(RatFunc::new(one.clone(), LaurentPoly::zero(1)).is_err());
        assert_eq!(q(2).powi(-2), Q::new(1.into(), 4.into()));
    }
}
