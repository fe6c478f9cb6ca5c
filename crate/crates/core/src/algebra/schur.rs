//! Symplectic and odd orthogonal characters as bialternant quotients, plus
//! the products `K_T` and the type C Weyl denominator.

use num_traits::One;

use crate::algebra::series::{mul_pochhammer, Grade, SeriesSpace, TruncatedSeries};
use crate::algebra::{LaurentPoly, Monomial, Q};
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Fraction-free (Bareiss) determinant over the Laurent ring.
pub fn determinant(mut m: Vec<Vec<LaurentPoly>>) -> Result<LaurentPoly> {
    let n = m.len();
    let nvars = m.first().map_or(0, |r| r.first().map_or(0, LaurentPoly::nvars));
    if n == 0 {
        return Ok(LaurentPoly::one(nvars));
    }
    let mut sign = false;
    let mut prev = LaurentPoly::one(nvars);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Ok(LaurentPoly::zero(nvars));
            };
            m.swap(k, r);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = &m[i][j] * &m[k][k];
                let b = &m[i][k] * &m[k][j];
                m[i][j] = (&a - &b).exact_div(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if sign { -&d } else { d })
}

fn check_len(mu: &Partition, t: usize) -> Result<()> {
    if mu.len() > t {
        return Err(Error::TooManyParts { mu: mu.to_string(), t });
    }
    Ok(())
}

/// `x_j^{a} - x_j^{-b}` in `t` variables.
fn alt_entry(t: usize, j: usize, a: i64, b: i64) -> LaurentPoly {
    &LaurentPoly::var(t, j, a as i32) - &LaurentPoly::var(t, j, -(b as i32))
}

fn bialternant(t: usize, num_exp: impl Fn(usize) -> (i64, i64), den_exp: impl Fn(usize) -> (i64, i64)) -> Result<LaurentPoly> {
    let build = |f: &dyn Fn(usize) -> (i64, i64)| -> Vec<Vec<LaurentPoly>> {
        (1..=t)
            .map(|i| {
                let (a, b) = f(i);
                (0..t).map(|j| alt_entry(t, j, a, b)).collect()
            })
            .collect()
    };
    let num = determinant(build(&num_exp))?;
    let den = determinant(build(&den_exp))?;
    num.exact_div(&den)
}

/// Symplectic character `sp_mu(x_1..x_t)`:
/// `det(x_j^{l_i} - x_j^{-l_i}) / det(x_j^{t-i+1} - x_j^{-(t-i+1)})` with
/// `l_i = mu_i + t - i + 1`.
pub fn sp(mu: &Partition, t: usize) -> Result<LaurentPoly> {
    check_len(mu, t)?;
    if t == 0 {
        return Ok(LaurentPoly::one(0));
    }
    let ti = t as i64;
    bialternant(
        t,
        |i| {
            let l = mu.part(i) as i64 + ti - i as i64 + 1;
            (l, l)
        },
        |i| {
            let l = ti - i as i64 + 1;
            (l, l)
        },
    )
}

/// Odd orthogonal character `so_mu(x_1..x_t)` with half powers cleared:
/// `det(x_j^{mu_i+t-i+1} - x_j^{-(mu_i+t-i)}) / det(x_j^{t-i+1} - x_j^{-(t-i)})`.
pub fn so_odd(mu: &Partition, t: usize) -> Result<LaurentPoly> {
    check_len(mu, t)?;
    if t == 0 {
        return Ok(LaurentPoly::one(0));
    }
    let ti = t as i64;
    bialternant(
        t,
        |i| {
            let l = mu.part(i) as i64 + ti - i as i64;
            (l + 1, l)
        },
        |i| {
            let l = ti - i as i64;
            (l + 1, l)
        },
    )
}

/// `sp_mu(q, q^2, ..., q^t)` as a Laurent polynomial in `q`, computed from
/// specialised determinants.
pub fn principal_sp(mu: &Partition, t: usize) -> Result<LaurentPoly> {
    check_len(mu, t)?;
    let ti = t as i64;
    let build = |l: &dyn Fn(usize) -> i64| -> Vec<Vec<LaurentPoly>> {
        (1..=t)
            .map(|i| {
                (1..=t)
                    .map(|j| {
                        let e = (j as i64 * l(i)) as i32;
                        &LaurentPoly::var(1, 0, e) - &LaurentPoly::var(1, 0, -e)
                    })
                    .collect()
            })
            .collect()
    };
    let num = determinant(build(&|i| mu.part(i) as i64 + ti - i as i64 + 1))?;
    let den = determinant(build(&|i| ti - i as i64 + 1))?;
    if t == 0 {
        return Ok(LaurentPoly::one(1));
    }
    num.exact_div(&den)
}

/// `prod_i x_i^{-t}(1 - x_i^2) prod_{i<j} (x_j - x_i)(1 - x_i x_j)`.
pub fn weyl_denominator_c(t: usize) -> LaurentPoly {
    let one = LaurentPoly::one(t);
    let mut d = one.clone();
    for i in 0..t {
        let f = &LaurentPoly::var(t, i, -(t as i32)) - &LaurentPoly::var(t, i, 2 - t as i32);
        d = &d * &f;
    }
    for i in 0..t {
        for j in i + 1..t {
            let a = &LaurentPoly::var(t, j, 1) - &LaurentPoly::var(t, i, 1);
            let mut m = Monomial::default();
            m.0[i] = 1;
            m.0[j] = 1;
            let b = &one - &LaurentPoly::term(t, m, Q::one());
            d = &(&d * &a) * &b;
        }
    }
    d
}

/// Multiplies `s` by `K_T(t, x)`; the x-variables are the first `t` of the
/// ring and `t_grade` is the grade of `T^1`.
pub fn mul_k_t(s: &mut TruncatedSeries, t: usize, t_grade: Grade) -> Result<()> {
    let nvars = s.space().nvars;
    for i in 0..t {
        for j in i + 1..t {
            for (ei, ej) in [(1, 1), (-1, -1), (1, -1), (-1, 1)] {
                let mut m = Monomial::default();
                m.0[i] = ei;
                m.0[j] = ej;
                let a = LaurentPoly::term(nvars, m, Q::one());
                mul_pochhammer(s, &a, t_grade, t_grade)?;
            }
        }
    }
    Ok(())
}

pub fn k_t(space: &SeriesSpace, t: usize, t_grade: Grade) -> Result<TruncatedSeries> {
    let mut s = TruncatedSeries::one(space);
    mul_k_t(&mut s, t, t_grade)?;
    Ok(s)
}

/// Weyl dimension of the symplectic representation with highest weight `mu`.
pub fn sp_dimension(mu: &Partition, t: usize) -> Q {
    let ti = t as i64;
    let l: Vec<i64> = (1..=t).map(|i| mu.part(i) as i64 + ti - i as i64 + 1).collect();
    let r: Vec<i64> = (1..=t).map(|i| ti - i as i64 + 1).collect();
    type_bc_dimension(&l, &r)
}

/// Weyl dimension of the odd orthogonal representation, computed with
/// doubled (integral) weights.
pub fn so_odd_dimension(mu: &Partition, t: usize) -> Q {
    let ti = t as i64;
    let l: Vec<i64> = (1..=t).map(|i| 2 * (mu.part(i) as i64 + ti - i as i64) + 1).collect();
    let r: Vec<i64> = (1..=t).map(|i| 2 * (ti - i as i64) + 1).collect();
    type_bc_dimension(&l, &r)
}

fn type_bc_dimension(l: &[i64], r: &[i64]) -> Q {
    let mut d = Q::one();
    for i in 0..l.len() {
        d *= Q::new(l[i].into(), r[i].into());
        for j in i + 1..l.len() {
            d *= Q::new((l[i] * l[i] - l[j] * l[j]).into(), (r[i] * r[i] - r[j] * r[j]).into());
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, MAX_VARS};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn x(e: i32) -> LaurentPoly {
        LaurentPoly::var(1, 0, e)
    }

    #[test]
    fn small_characters() {
        assert!(sp(&Partition::empty(), 3).unwrap().is_one());
        let expected = &(&x(2) + &LaurentPoly::one(1)) + &x(-2);
        assert_eq!(sp(&p("2"), 1).unwrap(), expected);
        assert_eq!(principal_sp(&p("2"), 1).unwrap(), expected);
        assert!(principal_sp(&Partition::empty(), 2).unwrap().is_one());
        let so1 = &(&x(1) + &LaurentPoly::one(1)) + &x(-1);
        assert_eq!(so_odd(&p("1"), 1).unwrap(), so1);
        assert!(matches!(sp(&p("1,1"), 1), Err(Error::TooManyParts { .. })));
    }

    #[test]
    fn weyl_denominator_t1() {
        assert_eq!(weyl_denominator_c(1), &x(-1) - &x(1));
    }

    #[test]
    fn k_t_examples() {
        use crate::algebra::series::Grading;
        let sp1 = SeriesSpace::new(vec![Grading::new("T", 3, 1)], &["x1"]);
        assert_eq!(k_t(&sp1, 1, [1, 0]).unwrap(), TruncatedSeries::one(&sp1));
        let sp2 = SeriesSpace::new(vec![Grading::new("T", 1, 1)], &["x1", "x2"]);
        let k = k_t(&sp2, 2, [1, 0]).unwrap();
        let m = |a: i32, b: i32| LaurentPoly::monomial(2, &[a, b], q(1));
        let sum = &(&(&m(1, 1) + &m(-1, -1)) + &m(1, -1)) + &m(-1, 1);
        assert_eq!(k.coeff([1, 0]), &(-&sum));
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let n = 2;
        let v = |a: i32, b: i32, c: i64| LaurentPoly::monomial(n, &[a, b], q(c));
        let m = vec![
            vec![&v(1, 0, 1) + &v(0, 0, 2), v(0, 1, 3), v(-1, 0, 1)],
            vec![v(0, 0, 0), &v(1, 1, 1) - &v(0, 0, 1), v(0, -1, 2)],
            vec![v(2, 0, 1), v(0, 0, 4), &v(0, 1, 1) + &v(1, 0, 1)],
        ];
        let cof = |a: &LaurentPoly, b: &LaurentPoly, c: &LaurentPoly, d: &LaurentPoly| &(a * d) - &(b * c);
        let expected = &(&(&m[0][0] * &cof(&m[1][1], &m[1][2], &m[2][1], &m[2][2]))
            - &(&m[0][1] * &cof(&m[1][0], &m[1][2], &m[2][0], &m[2][2])))
            + &(&m[0][2] * &cof(&m[1][0], &m[1][1], &m[2][0], &m[2][1]));
        assert_eq!(determinant(m).unwrap(), expected);
    }

    /// Symplectic tableaux: rows weakly increase, columns strictly increase
    /// in the alphabet `1 < 1' < 2 < 2' < ...`, and row `i` starts at `i`.
    fn king_tableaux(mu: &Partition, t: usize) -> LaurentPoly {
        let shape: Vec<usize> = mu.parts().iter().map(|&x| x as usize).collect();
        let cells: Vec<(usize, usize)> = shape
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
            .collect();
        let mut grid: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
        let mut out = LaurentPoly::zero(t);
        fn fill(
            k: usize,
            cells: &[(usize, usize)],
            grid: &mut Vec<Vec<usize>>,
            t: usize,
            out: &mut LaurentPoly,
        ) {
            if k == cells.len() {
                let mut e = [0i32; MAX_VARS];
                for row in grid.iter() {
                    for &l in row {
                        e[l / 2] += if l % 2 == 0 { 1 } else { -1 };
                    }
                }
                *out += &LaurentPoly::monomial(t, &e[..t], q(1));
                return;
            }
            let (r, c) = cells[k];
            let mut lo = 2 * r;
            if c > 0 {
                lo = lo.max(grid[r][c - 1]);
            }
            if r > 0 {
                lo = lo.max(grid[r - 1][c] + 1);
            }
            for l in lo..2 * t {
                grid[r][c] = l;
                fill(k + 1, cells, grid, t, out);
            }
        }
        fill(0, &cells, &mut grid, t, &mut out);
        out
    }

    #[test]
    fn sp_matches_tableaux_and_dimension() {
        for t in 1..=3 {
            for n in 0..=6u32 {
                for mu in Partition::of_weight(n) {
                    if mu.len() > t {
                        continue;
                    }
                    let s = sp(&mu, t).unwrap();
                    assert_eq!(s, king_tableaux(&mu, t), "sp {mu:?} t={t}");
                    assert_eq!(s.coefficient_sum(), sp_dimension(&mu, t));
                    let principal = s.substitute_monomials(
                        1,
                        &(1..=t as i32).map(|i| Monomial::var(0, i)).collect::<Vec<_>>(),
                    );
                    assert_eq!(principal_sp(&mu, t).unwrap(), principal);
                }
            }
        }
    }

    #[test]
    fn characters_are_invariant_under_inversion() {
        for t in 1..=3 {
            for n in 0..=5u32 {
                for mu in Partition::of_weight(n).into_iter().filter(|m| m.len() <= t) {
                    let s = sp(&mu, t).unwrap();
                    let o = so_odd(&mu, t).unwrap();
                    assert_eq!(o.coefficient_sum(), so_odd_dimension(&mu, t));
                    for i in 0..t {
                        assert_eq!(s.invert_var(i), s);
                        assert_eq!(o.invert_var(i), o);
                    }
                }
            }
        }
    }
}
