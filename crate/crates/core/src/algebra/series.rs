//! Truncated formal series in one or two grading variables whose
//! coefficients are Laurent polynomials in the remaining variables.
//!
//! Grades are stored in integer units of `1/den` per grading variable, so
//! `T^{1/2}` is one unit of a `den = 2` grading. All products truncate
//! eagerly at the caps.

use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::{q, LaurentPoly, Q};
use crate::error::{Error, Result};

/// One grading variable with its cap (in units) and unit denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Grading {
    pub name: String,
    pub cap: u32,
    pub den: u32,
}

impl Grading {
    pub fn new(name: &str, cap: u32, den: u32) -> Self {
        assert!(den == 1 || den == 2, "grade denominators are 1 or 2");
        Grading {
            name: name.into(),
            cap,
            den,
        }
    }

    fn render_exp(&self, units: u32) -> String {
        if self.den == 1 || units % self.den == 0 {
            format!("{}", units / self.den)
        } else {
            format!("{units}/{}", self.den)
        }
    }
}

/// Shape shared by every series taking part in one computation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SeriesSpace {
    pub gradings: Vec<Grading>,
    pub nvars: usize,
    pub var_names: Vec<String>,
}

/// Grade in units, one entry per grading variable (second entry 0 if unused).
pub type Grade = [u32; 2];

impl SeriesSpace {
    pub fn new(gradings: Vec<Grading>, var_names: &[&str]) -> Self {
        assert!(!gradings.is_empty() && gradings.len() <= 2);
        SeriesSpace {
            gradings,
            nvars: var_names.len(),
            var_names: var_names.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn dims(&self) -> [usize; 2] {
        let a = self.gradings[0].cap as usize + 1;
        let b = self.gradings.get(1).map_or(1, |g| g.cap as usize + 1);
        [a, b]
    }

    pub fn cells(&self) -> usize {
        let [a, b] = self.dims();
        a * b
    }

    pub fn contains(&self, g: Grade) -> bool {
        let [a, b] = self.dims();
        (g[0] as usize) < a && (g[1] as usize) < b
    }

    fn index(&self, g: Grade) -> usize {
        let [_, b] = self.dims();
        g[0] as usize * b + g[1] as usize
    }

    fn grade_of(&self, idx: usize) -> Grade {
        let [_, b] = self.dims();
        [(idx / b) as u32, (idx % b) as u32]
    }

    pub fn grades(&self) -> impl Iterator<Item = Grade> + '_ {
        (0..self.cells()).map(|i| self.grade_of(i))
    }

    pub fn render_grade(&self, g: Grade) -> String {
        self.gradings
            .iter()
            .zip(g)
            .map(|(gr, u)| format!("{}^{}", gr.name, gr.render_exp(u)))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn names(&self) -> Vec<&str> {
        self.var_names.iter().map(String::as_str).collect()
    }
}

/// Dense truncated series over a [`SeriesSpace`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    space: SeriesSpace,
    coeffs: Vec<LaurentPoly>,
}

/// Location and values of the first differing coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesMismatch {
    pub grade: String,
    pub lhs: String,
    pub rhs: String,
}

impl TruncatedSeries {
    pub fn zero(space: &SeriesSpace) -> Self {
        TruncatedSeries {
            space: space.clone(),
            coeffs: vec![LaurentPoly::zero(space.nvars); space.cells()],
        }
    }

    pub fn one(space: &SeriesSpace) -> Self {
        Self::term(space, LaurentPoly::one(space.nvars), [0, 0])
    }

    /// `coef * grading monomial`; zero when the grade exceeds the caps.
    pub fn term(space: &SeriesSpace, coef: LaurentPoly, grade: Grade) -> Self {
        let mut s = Self::zero(space);
        if space.contains(grade) {
            let i = space.index(grade);
            s.coeffs[i] = coef;
        }
        s
    }

    pub fn space(&self) -> &SeriesSpace {
        &self.space
    }

    pub fn coeff(&self, g: Grade) -> &LaurentPoly {
        &self.coeffs[self.space.index(g)]
    }

    pub fn coeff_mut(&mut self, g: Grade) -> &mut LaurentPoly {
        let i = self.space.index(g);
        &mut self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LaurentPoly::is_zero)
    }

    pub fn add_assign(&mut self, o: &TruncatedSeries) {
        debug_assert_eq!(self.space, o.space);
        for (a, b) in self.coeffs.iter_mut().zip(&o.coeffs) {
            *a += b;
        }
    }

    pub fn add(&self, o: &TruncatedSeries) -> TruncatedSeries {
        let mut r = self.clone();
        r.add_assign(o);
        r
    }

    pub fn sub(&self, o: &TruncatedSeries) -> TruncatedSeries {
        let mut r = self.clone();
        for (a, b) in r.coeffs.iter_mut().zip(&o.coeffs) {
            *a -= b;
        }
        r
    }

    /// Adds `coef * G^grade * o` into `self`.
    pub fn add_shifted(&mut self, o: &TruncatedSeries, coef: &LaurentPoly, grade: Grade) {
        for g in self.space.grades().collect::<Vec<_>>() {
            let src = &o.coeffs[o.space.index(g)];
            if src.is_zero() {
                continue;
            }
            let dst = [g[0] + grade[0], g[1] + grade[1]];
            if self.space.contains(dst) {
                let i = self.space.index(dst);
                src.add_scaled_into(coef, &mut self.coeffs[i]);
            }
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> TruncatedSeries {
        TruncatedSeries {
            space: self.space.clone(),
            coeffs: self.coeffs.iter().map(|p| p * c).collect(),
        }
    }

    pub fn mul(&self, o: &TruncatedSeries) -> TruncatedSeries {
        debug_assert_eq!(self.space, o.space);
        let mut r = Self::zero(&self.space);
        let grades: Vec<Grade> = self.space.grades().collect();
        for &ga in &grades {
            let a = self.coeff(ga);
            if a.is_zero() {
                continue;
            }
            for &gb in &grades {
                let dst = [ga[0] + gb[0], ga[1] + gb[1]];
                if !self.space.contains(dst) {
                    continue;
                }
                let b = o.coeff(gb);
                if b.is_zero() {
                    continue;
                }
                let i = self.space.index(dst);
                b.add_scaled_into(a, &mut r.coeffs[i]);
            }
        }
        r
    }

    /// Multiplies in place by `(1 - a * G^grade)^power`. Negative powers use
    /// the geometric expansion and need a positive grade.
    pub fn mul_binomial(&mut self, a: &LaurentPoly, grade: Grade, power: i64) -> Result<()> {
        if a.is_zero() || power == 0 {
            return Ok(());
        }
        if !self.space.contains(grade) {
            return Ok(());
        }
        let zero_grade = grade == [0, 0];
        if power > 0 {
            for _ in 0..power {
                if zero_grade {
                    for c in self.coeffs.iter_mut() {
                        let prod = &*c * a;
                        *c -= &prod;
                    }
                    continue;
                }
                // Descending order so each source coefficient is still unmodified.
                for idx in (0..self.coeffs.len()).rev() {
                    let g = self.space.grade_of(idx);
                    if g[0] < grade[0] || g[1] < grade[1] {
                        continue;
                    }
                    let src = self.space.index([g[0] - grade[0], g[1] - grade[1]]);
                    if self.coeffs[src].is_zero() {
                        continue;
                    }
                    let prod = &self.coeffs[src] * a;
                    self.coeffs[idx] -= &prod;
                }
            }
        } else {
            if zero_grade {
                return Err(Error::NotInvertible(format!("1 - ({a}) at grade zero")));
            }
            for _ in 0..(-power) {
                for idx in 0..self.coeffs.len() {
                    let g = self.space.grade_of(idx);
                    if g[0] < grade[0] || g[1] < grade[1] {
                        continue;
                    }
                    let src = self.space.index([g[0] - grade[0], g[1] - grade[1]]);
                    if self.coeffs[src].is_zero() {
                        continue;
                    }
                    let prod = &self.coeffs[src] * a;
                    self.coeffs[idx] += &prod;
                }
            }
        }
        Ok(())
    }

    /// Truncated inverse; the constant coefficient must be a monomial.
    pub fn inverse(&self) -> Result<TruncatedSeries> {
        let c0 = self.coeff([0, 0]);
        let Some((m, c)) = c0.as_monomial() else {
            return Err(Error::NotInvertible(c0.to_string()));
        };
        let inv0 = LaurentPoly::term(self.space.nvars, Default::default(), c.recip())
            .shift(negate(m));
        let mut r = Self::zero(&self.space);
        let grades: Vec<Grade> = self.space.grades().collect();
        // Grades are visited in an order where every proper divisor precedes.
        for &g in &grades {
            let mut acc = if g == [0, 0] {
                LaurentPoly::one(self.space.nvars)
            } else {
                LaurentPoly::zero(self.space.nvars)
            };
            for &h in &grades {
                if h == [0, 0] || h[0] > g[0] || h[1] > g[1] {
                    continue;
                }
                let f = self.coeff(h);
                if f.is_zero() {
                    continue;
                }
                let rest = r.coeff([g[0] - h[0], g[1] - h[1]]);
                let prod = f * rest;
                acc -= &prod;
            }
            *r.coeff_mut(g) = &acc * &inv0;
        }
        Ok(r)
    }

    pub fn pow_int(&self, n: i64) -> Result<TruncatedSeries> {
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one(&self.space);
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    fn euler_weight(g: Grade) -> u32 {
        g[0] + g[1]
    }

    /// `exp(self)`; the constant coefficient must vanish.
    pub fn exp(&self) -> Result<TruncatedSeries> {
        if !self.coeff([0, 0]).is_zero() {
            return Err(Error::ExpConstant);
        }
        let grades: Vec<Grade> = self.space.grades().collect();
        let mut r = Self::one(&self.space);
        // With E the Euler operator, E(exp f) = E(f) exp f.
        for &g in &grades {
            if g == [0, 0] {
                continue;
            }
            let mut acc = LaurentPoly::zero(self.space.nvars);
            for &h in &grades {
                if h == [0, 0] || h[0] > g[0] || h[1] > g[1] {
                    continue;
                }
                let f = self.coeff(h);
                if f.is_zero() {
                    continue;
                }
                let rest = r.coeff([g[0] - h[0], g[1] - h[1]]);
                rest.add_scaled_into(&f.scale(&q(Self::euler_weight(h) as i64)), &mut acc);
            }
            *r.coeff_mut(g) = acc.scale(&Q::new(1.into(), (Self::euler_weight(g) as i64).into()));
        }
        Ok(r)
    }

    /// `log(self)`; the constant coefficient must be exactly 1.
    pub fn log(&self) -> Result<TruncatedSeries> {
        let c0 = self.coeff([0, 0]);
        if !c0.is_one() {
            return Err(Error::LogConstant(c0.to_string()));
        }
        let grades: Vec<Grade> = self.space.grades().collect();
        let mut r = Self::zero(&self.space);
        // E(f) = E(log f) * f, solved for E(log f) grade by grade.
        for &g in &grades {
            if g == [0, 0] {
                continue;
            }
            let w = Self::euler_weight(g) as i64;
            let mut acc = self.coeff(g).scale(&q(w));
            for &h in &grades {
                if h == [0, 0] || h == g || h[0] > g[0] || h[1] > g[1] {
                    continue;
                }
                let lh = r.coeff(h);
                if lh.is_zero() {
                    continue;
                }
                let rest = self.coeff([g[0] - h[0], g[1] - h[1]]);
                let prod = &lh.scale(&q(Self::euler_weight(h) as i64)) * rest;
                acc -= &prod;
            }
            *r.coeff_mut(g) = acc.scale(&Q::new(1.into(), w.into()));
        }
        Ok(r)
    }

    /// `self^e = exp(e * log self)` for a Laurent-polynomial exponent.
    pub fn pow_poly(&self, e: &LaurentPoly) -> Result<TruncatedSeries> {
        self.log()?.scale(e).exp()
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, mut f: impl FnMut(&LaurentPoly) -> Result<LaurentPoly>) -> Result<TruncatedSeries> {
        let coeffs = self.coeffs.iter().map(&mut f).collect::<Result<Vec<_>>>()?;
        Ok(TruncatedSeries {
            space: self.space.clone(),
            coeffs,
        })
    }

    /// First grade where the two series differ, and the number of differing grades.
    pub fn compare(&self, o: &TruncatedSeries) -> (Option<SeriesMismatch>, usize) {
        let names = self.space.names();
        let mut first = None;
        let mut count = 0;
        for g in self.space.grades() {
            let (a, b) = (self.coeff(g), o.coeff(g));
            if a != b {
                count += 1;
                if first.is_none() {
                    first = Some(SeriesMismatch {
                        grade: self.space.render_grade(g),
                        lhs: a.render(&names),
                        rhs: b.render(&names),
                    });
                }
            }
        }
        (first, count)
    }

    /// One line per nonzero grade: `T^a q^b : <poly>`.
    pub fn dump(&self) -> String {
        let names = self.space.names();
        let mut s = String::new();
        for g in self.space.grades() {
            let c = self.coeff(g);
            if !c.is_zero() {
                let _ = writeln!(s, "{} : {}", self.space.render_grade(g), c.render(&names));
            }
        }
        s
    }
}

fn negate(m: crate::algebra::Monomial) -> crate::algebra::Monomial {
    let mut r = m;
    for e in r.0.iter_mut() {
        *e = -*e;
    }
    r
}

/// `(a G^{grade}; G^{base})_inf = prod_{j>=0} (1 - a G^{grade + j*base})`.
pub fn pochhammer(space: &SeriesSpace, a: &LaurentPoly, grade: Grade, base: Grade) -> Result<TruncatedSeries> {
    let mut s = TruncatedSeries::one(space);
    mul_pochhammer(&mut s, a, grade, base)?;
    Ok(s)
}

/// Multiplies `s` in place by a Pochhammer product.
pub fn mul_pochhammer(s: &mut TruncatedSeries, a: &LaurentPoly, grade: Grade, base: Grade) -> Result<()> {
    if base == [0, 0] {
        return Err(Error::DegeneratePochhammer);
    }
    let mut g = grade;
    while s.space().contains(g) {
        s.mul_binomial(a, g, 1)?;
        g = [g[0] + base[0], g[1] + base[1]];
    }
    Ok(())
}

/// Caps and rational evaluation points for one verification run.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct VerificationGrid {
    /// Cap per grading variable, as a rendered grade (`"7/2"`).
    pub caps: Vec<(String, String)>,
    /// Variables replaced by rationals on both sides before comparing.
    pub eval_points: Vec<(String, String)>,
}

impl VerificationGrid {
    pub fn from_space(space: &SeriesSpace) -> Self {
        VerificationGrid {
            caps: space
                .gradings
                .iter()
                .map(|g| (g.name.clone(), g.render_exp(g.cap)))
                .collect(),
            eval_points: Vec::new(),
        }
    }
}
