//! Jacobians, ranks and determinants, and the characteristic-zero Jacobian
//! test for algebraic independence.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{check_arity, Poly};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

const SCREEN_TRIALS: usize = 8;
const SCREEN_MAX_COORD: i64 = 10_000;
const SCREEN_SEED: u64 = 0x1d1f_0a11;

/// Entry `(i, j)` is `∂ polys[i] / ∂ x_{j+1}`.
pub fn jacobian<S: Scalar>(polys: &[Poly<S>]) -> Result<Vec<Vec<Poly<S>>>> {
    let Some(first) = polys.first() else {
        return Ok(Vec::new());
    };
    let m = first.nvars();
    for p in polys {
        check_arity(m, p.nvars())?;
    }
    Ok(polys.iter().map(|p| (0..m).map(|j| p.derivative(j)).collect()).collect())
}

/// Rank of a matrix over the coefficient field.
pub fn rank<S: Scalar>(rows: &[Vec<S>]) -> usize {
    let mut a: Vec<Vec<S>> = rows.to_vec();
    let ncols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        let Some(pivot) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, pivot);
        let inv = S::one() / a[r][col].clone();
        for i in (r + 1)..a.len() {
            if a[i][col].is_zero() {
                continue;
            }
            let factor = a[i][col].clone() * inv.clone();
            for j in col..ncols {
                let t = a[r][j].clone() * factor.clone();
                a[i][j] = a[i][j].clone() - t;
            }
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    r
}

/// Determinant of a square matrix of polynomials (fraction-free Bareiss
/// elimination; every intermediate division is exact).
pub fn determinant<S: Scalar>(matrix: &[Vec<Poly<S>>]) -> Poly<S> {
    let n = matrix.len();
    let nvars = matrix.first().and_then(|r| r.first()).map_or(0, Poly::nvars);
    if n == 0 {
        return Poly::one(nvars);
    }
    let mut a: Vec<Vec<Poly<S>>> = matrix.to_vec();
    let mut prev = Poly::one(nvars);
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Poly::zero(nvars);
            };
            a.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .exact_div(&prev)
                    .expect("same arity")
                    .expect("Bareiss step divides exactly");
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Decides whether `polys` (all in the same `m` variables) are algebraically
/// independent over the rationals, via the Jacobian criterion.
///
/// Eight evaluations at random points of `[1, 10^4]^m` are tried first; a
/// full-rank numeric Jacobian proves independence. Otherwise every maximal
/// minor is expanded symbolically, so the answer never depends on the draw.
/// With fixed-width scalars such as `Rational64` the screen can overflow on
/// high-degree input; use `BigRational` there.
pub fn algebraically_independent<S: Scalar>(polys: &[Poly<S>]) -> Result<bool> {
    let Some(first) = polys.first() else {
        return Ok(true);
    };
    let m = first.nvars();
    let n = polys.len();
    if n > m {
        return Err(Error::TooManyPolys { count: n, nvars: m });
    }
    let jac = jacobian(polys)?;

    let mut rng = ChaCha8Rng::seed_from_u64(SCREEN_SEED);
    for _ in 0..SCREEN_TRIALS {
        let point: Vec<S> = (0..m).map(|_| S::from_int(rng.gen_range(1..=SCREEN_MAX_COORD))).collect();
        let numeric: Vec<Vec<S>> =
            jac.iter().map(|row| row.iter().map(|p| p.eval(&point)).collect()).collect();
        if rank(&numeric) == n {
            return Ok(true);
        }
    }

    for cols in combinations(m, n) {
        let minor: Vec<Vec<Poly<S>>> =
            jac.iter().map(|row| cols.iter().map(|&j| row[j].clone()).collect()).collect();
        if !determinant(&minor).is_zero() {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::super::parse_poly;
    use super::*;
    use num_rational::BigRational;

    type P = Poly<BigRational>;

    fn ps(items: &[&str], m: usize) -> Vec<P> {
        items.iter().map(|s| parse_poly(s, m).unwrap()).collect()
    }

    #[test]
    fn jacobian_termwise() {
        let j = jacobian(&ps(&["x1 + x2^2", "x2"], 2)).unwrap();
        assert_eq!(j[0], ps(&["1", "2*x2"], 2));
        assert_eq!(j[1], ps(&["0", "1"], 2));
    }

    #[test]
    fn jacobian_of_constants_and_products() {
        let j = jacobian(&ps(&["3", "-1/2"], 2)).unwrap();
        assert!(j.iter().flatten().all(Poly::is_zero));
        let j = jacobian(&ps(&["x1*x2"], 2)).unwrap();
        assert_eq!(j[0], ps(&["x2", "x1"], 2));
    }

    #[test]
    fn independence_examples() {
        assert!(algebraically_independent(&ps(&["x1 + x2^2", "x2"], 2)).unwrap());
        assert!(!algebraically_independent(&ps(&["x1", "x1^2"], 2)).unwrap());
        assert!(!algebraically_independent(&ps(&["x1", "x2", "x1 + x2"], 3)).unwrap());
        assert_eq!(
            algebraically_independent(&ps(&["x1", "x2", "x1*x2"], 2)),
            Err(Error::TooManyPolys { count: 3, nvars: 2 })
        );
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let m = vec![
            ps(&["x1", "1", "x2"], 2),
            ps(&["0", "x2", "x1"], 2),
            ps(&["x1*x2", "x1", "1"], 2),
        ];
        // cofactor expansion along the first row
        let det2 = |a: &P, b: &P, c: &P, d: &P| &(a * d) - &(b * c);
        let expected = &(&(&m[0][0] * &det2(&m[1][1], &m[1][2], &m[2][1], &m[2][2]))
            - &(&m[0][1] * &det2(&m[1][0], &m[1][2], &m[2][0], &m[2][2])))
            + &(&m[0][2] * &det2(&m[1][0], &m[1][1], &m[2][0], &m[2][1]));
        assert_eq!(determinant(&m), expected);
    }

    #[test]
    fn determinant_needs_row_swap() {
        let m = vec![ps(&["0", "1"], 1), ps(&["1", "0"], 1)];
        assert_eq!(determinant(&m), parse_poly("-1", 1).unwrap());
    }

    #[test]
    fn rank_over_field() {
        let q = |n: i64| BigRational::from_int(n);
        assert_eq!(rank(&[vec![q(1), q(2)], vec![q(2), q(4)]]), 1);
        assert_eq!(rank(&[vec![q(0), q(1)], vec![q(1), q(0)]]), 2);
        assert_eq!(rank::<BigRational>(&[]), 0);
    }
}
