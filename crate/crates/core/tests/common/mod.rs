//! Oracles shared by the integration tests. None of them calls into the
//! library's own linear algebra, LP or division code.
#![allow(dead_code)]

use std::collections::BTreeMap;

use initforms::{Exponent, QPoly, Rational, Scalar};
use num_traits::{One, Signed, Zero};

pub type Q = Rational;

pub fn q(n: i64) -> Q {
    Q::from_int(n)
}

pub fn p(s: &str, n: usize) -> QPoly {
    initforms::poly::parse_poly(s, n).unwrap()
}

/// Row-reduces `a` in place and returns the pivot columns.
fn row_reduce(a: &mut [Vec<Q>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(k) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, k);
        let inv = Q::one() / a[r][c].clone();
        for v in a[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..a[i].len() {
                    let t = &a[r][j] * &f;
                    a[i][j] = &a[i][j] - &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Some solution of `A x = b`, if one exists.
pub fn solve(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let ncols = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Q>> = a.iter().zip(b).map(|(row, bi)| {
        let mut r = row.clone();
        r.push(bi.clone());
        r
    }).collect();
    let pivots = row_reduce(&mut aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Q::zero(); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][ncols].clone();
    }
    Some(x)
}

pub fn has_nontrivial_kernel(a: &[Vec<Q>], ncols: usize) -> bool {
    let mut m = a.to_vec();
    row_reduce(&mut m, ncols).len() < ncols
}

/// Every exponent vector in `nvars` variables of total degree at most `d`.
pub fn monomials(nvars: usize, d: u32) -> Vec<Exponent> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Exponent>) {
        if i == cur.len() {
            out.push(Exponent::new(cur.clone()));
            return;
        }
        for k in 0..=left {
            cur[i] = k;
            rec(i + 1, left - k, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, d, &mut vec![0; nvars], &mut out);
    out
}

/// Coefficient matrix whose columns are the given polynomials, over the
/// union of their supports plus `extra`'s support. Returns the rows and the
/// right-hand side read off `extra`.
pub fn coefficient_system(columns: &[QPoly], extra: &QPoly) -> (Vec<Vec<Q>>, Vec<Q>) {
    let mut index: BTreeMap<Exponent, usize> = BTreeMap::new();
    for c in columns.iter().chain(std::iter::once(extra)) {
        for (e, _) in c.terms() {
            let k = index.len();
            index.entry(e.clone()).or_insert(k);
        }
    }
    let mut rows = vec![vec![Q::zero(); columns.len()]; index.len()];
    for (j, c) in columns.iter().enumerate() {
        for (e, v) in c.terms() {
            rows[index[e]][j] = v.clone();
        }
    }
    let mut rhs = vec![Q::zero(); index.len()];
    for (e, v) in extra.terms() {
        rhs[index[e]] = v.clone();
    }
    (rows, rhs)
}

/// Divisibility by undetermined coefficients: `g | f` iff `f = g q` for some
/// `q` of degree at most `deg f - deg g`.
pub fn divides_by_undetermined(g: &QPoly, f: &QPoly) -> bool {
    if f.is_zero() {
        return true;
    }
    let (df, dg) = (f.total_degree().unwrap(), g.total_degree().unwrap());
    if dg > df {
        return false;
    }
    let n = f.nvars();
    let cols: Vec<QPoly> = monomials(n, (df - dg) as u32)
        .into_iter()
        .map(|e| g * &QPoly::monomial(n, e, q(1)))
        .collect();
    let (a, b) = coefficient_system(&cols, f);
    solve(&a, &b).is_some()
}

/// Whether some nonzero polynomial `R` of degree `<= d` has `R(ps) = 0`.
pub fn has_annihilator(ps: &[QPoly], d: u32) -> bool {
    let n = ps[0].nvars();
    let cols: Vec<QPoly> = monomials(ps.len(), d)
        .into_iter()
        .map(|e| {
            let mut acc = QPoly::one(n);
            for (i, &k) in e.entries().iter().enumerate() {
                acc = &acc * &ps[i].pow(k);
            }
            acc
        })
        .collect();
    let (a, _) = coefficient_system(&cols, &QPoly::zero(n));
    has_nontrivial_kernel(&a, cols.len())
}

/// Whether `p` is a convex combination of `others`, by Carathéodory: try
/// every affinely independent subset of at most `dim + 1` points. Any
/// superset of a dependent subset is dependent, so those are pruned.
pub fn in_hull_bruteforce(p: &[u32], others: &[Vec<u32>]) -> bool {
    fn rec(start: usize, left: usize, p: &[u32], others: &[Vec<u32>], subset: &mut Vec<usize>) -> bool {
        for i in start..others.len() {
            subset.push(i);
            let (independent, inside) = barycentric(p, others, subset);
            if inside || (independent && left > 1 && rec(i + 1, left - 1, p, others, subset)) {
                return true;
            }
            subset.pop();
        }
        false
    }
    rec(0, (p.len() + 1).min(others.len()), p, others, &mut Vec::new())
}

/// Solves `Σ λ_i q_i = p`, `Σ λ_i = 1` over the subset. Returns whether the
/// subset is affinely independent and whether a solution with `λ >= 0`
/// exists. Small integer data, so 64-bit rationals are exact here.
fn barycentric(p: &[u32], others: &[Vec<u32>], subset: &[usize]) -> (bool, bool) {
    type R = num_rational::Rational64;
    let k = subset.len();
    let mut a: Vec<Vec<R>> = (0..p.len())
        .map(|d| {
            let mut row: Vec<R> = subset.iter().map(|&i| R::from_integer(others[i][d] as i64)).collect();
            row.push(R::from_integer(p[d] as i64));
            row
        })
        .collect();
    let mut ones = vec![R::one(); k];
    ones.push(R::one());
    a.push(ones);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..=k {
        let Some(piv) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, piv);
        let inv = a[r][c].recip();
        for v in a[r].iter_mut() {
            *v *= inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c];
                for j in 0..=k {
                    let t = a[r][j] * f;
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let independent = pivots.iter().filter(|&&c| c < k).count() == k;
    if !independent || pivots.contains(&k) {
        return (independent, false);
    }
    (true, (0..k).all(|row| !a[row][k].is_negative()))
}

/// Hull vertices of a finite point set by the brute-force oracle.
pub fn vertices_bruteforce(points: &[Vec<u32>]) -> Vec<Vec<u32>> {
    points
        .iter()
        .enumerate()
        .filter(|(i, pt)| {
            let others: Vec<Vec<u32>> =
                points.iter().enumerate().filter(|(j, _)| j != i).map(|(_, o)| o.clone()).collect();
            !in_hull_bruteforce(pt, &others)
        })
        .map(|(_, pt)| pt.clone())
        .collect()
}

/// `max_{a ∈ supp f} a·w` and the terms attaining it, computed term by term
/// with lexicographic comparison of plain vectors.
pub fn naive_initial(f: &QPoly, w: &[Vec<Q>]) -> Option<(Vec<Q>, QPoly)> {
    let n = f.nvars();
    let dim = w.first().map_or(1, Vec::len);
    let mut best: Option<Vec<Q>> = None;
    let mut terms: Vec<(Exponent, Q)> = Vec::new();
    for (e, c) in f.terms() {
        let mut d = vec![Q::zero(); dim];
        for (i, &k) in e.entries().iter().enumerate() {
            for t in 0..dim {
                d[t] = &d[t] + &(&w[i][t] * q(k as i64));
            }
        }
        match &best {
            Some(b) if *b > d => continue,
            Some(b) if *b == d => terms.push((e.clone(), c.clone())),
            _ => {
                best = Some(d);
                terms = vec![(e.clone(), c.clone())];
            }
        }
    }
    best.map(|b| (b, QPoly::from_terms(n, terms).unwrap()))
}

pub fn weight_rows(w: &initforms::QWeight) -> Vec<Vec<Q>> {
    w.entries().iter().map(|g| g.coords().to_vec()).collect()
}
