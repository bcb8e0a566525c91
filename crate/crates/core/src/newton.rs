//! Newton polytopes: supports, certified hull vertices, intruders.
//!
//! A support point is a vertex of the convex hull iff it is not a convex
//! combination of the other points, which is an exact LP feasibility
//! question. When it is a vertex, the Farkas certificate of infeasibility is
//! a rational weight strictly maximized at that point. Rational weights are
//! enough: strict separation of finitely many lattice points by a real
//! functional implies separation by a rational one.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::lp::{phase_one, Feasibility};
use crate::poly::{Exponent, Poly};
use crate::report::Status;
use crate::scalar::Scalar;
use crate::weights::{initial_form, GroupElem, Weight};

/// A finite set of lattice points with nonnegative entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    dim: usize,
    points: BTreeSet<Exponent>,
}

impl PointSet {
    pub fn new(dim: usize, points: impl IntoIterator<Item = Exponent>) -> Result<Self> {
        let points: BTreeSet<Exponent> = points.into_iter().collect();
        for p in &points {
            if p.len() != dim {
                return Err(Error::DimMismatch { expected: dim, found: p.len() });
            }
        }
        Ok(PointSet { dim, points })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &Exponent) -> bool {
        self.points.contains(p)
    }

    /// Points in ascending graded-lex order.
    pub fn iter(&self) -> impl Iterator<Item = &Exponent> {
        self.points.iter()
    }
}

/// `supp(f)`: exponents of the nonzero terms.
pub fn support<S: Scalar>(f: &Poly<S>) -> PointSet {
    PointSet { dim: f.nvars(), points: f.support().cloned().collect() }
}

/// Witness that `vertex` is a hull vertex: `vertex·weight >= q·weight + margin`
/// for every other point `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCertificate<S> {
    pub vertex: Exponent,
    pub weight: Vec<S>,
    pub margin: S,
}

fn dot<S: Scalar>(p: &Exponent, w: &[S]) -> S {
    p.entries()
        .iter()
        .zip(w)
        .fold(S::zero(), |acc, (&a, c)| acc + S::from_int(a as i64) * c.clone())
}

impl<S: Scalar> VertexCertificate<S> {
    /// Re-checks the separation inequalities by direct arithmetic.
    pub fn verify(&self, points: &PointSet) -> bool {
        if !self.margin.is_positive() || !points.contains(&self.vertex) {
            return false;
        }
        let top = dot(&self.vertex, &self.weight);
        points
            .iter()
            .filter(|q| **q != self.vertex)
            .all(|q| top.clone() - dot(q, &self.weight) >= self.margin)
    }

    /// The certificate weight as a one-dimensional [`Weight`].
    pub fn as_weight(&self) -> Weight<S> {
        Weight::new(1, self.weight.iter().map(|c| GroupElem::new(vec![c.clone()])).collect())
            .expect("one-dimensional entries")
    }
}

/// A weight strictly maximized over `points` at `p`, or `None` when `p` lies
/// in the convex hull of the other points.
///
/// The returned weight is scaled so that the margin is exactly 1. When `p`
/// is the only point the zero weight is returned (vacuously separating).
pub fn separating_weight<S: Scalar>(p: &Exponent, points: &PointSet) -> Result<Option<VertexCertificate<S>>> {
    if !points.contains(p) {
        return Err(Error::PointNotInSet);
    }
    let others: Vec<&Exponent> = points.iter().filter(|q| *q != p).collect();
    let n = points.dim();
    if others.is_empty() {
        return Ok(Some(VertexCertificate {
            vertex: p.clone(),
            weight: vec![S::zero(); n],
            margin: S::one(),
        }));
    }
    // columns (q, 1); right-hand side (p, 1)
    let mut a: Vec<Vec<S>> = (0..n)
        .map(|k| others.iter().map(|q| S::from_int(q[k] as i64)).collect())
        .collect();
    a.push(vec![S::one(); others.len()]);
    let mut b: Vec<S> = p.entries().iter().map(|&v| S::from_int(v as i64)).collect();
    b.push(S::one());

    match phase_one(&a, &b) {
        Feasibility::Feasible(_) => Ok(None),
        Feasibility::Infeasible(y) => {
            let w: Vec<S> = y[..n].to_vec();
            let top = dot(p, &w);
            let margin = others
                .iter()
                .map(|q| top.clone() - dot(q, &w))
                .min()
                .expect("at least one competitor");
            assert!(margin.is_positive(), "Farkas certificate must separate strictly");
            let weight = w.into_iter().map(|c| c / margin.clone()).collect();
            Ok(Some(VertexCertificate { vertex: p.clone(), weight, margin: S::one() }))
        }
    }
}

/// Hull vertices of `points`, each with a separating weight.
pub fn hull_vertices<S: Scalar>(points: &PointSet) -> Result<Vec<VertexCertificate<S>>> {
    if points.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut out = Vec::new();
    for p in points.iter() {
        if let Some(cert) = separating_weight(p, points)? {
            out.push(cert);
        }
    }
    Ok(out)
}

pub fn is_intruder(p: &Exponent) -> bool {
    p.entries().iter().all(|&a| a != 0)
}

/// Hull vertices of `New(f)` with every coordinate nonzero.
pub fn intruders<S: Scalar>(f: &Poly<S>) -> Result<Vec<Exponent>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(hull_vertices::<S>(&support(f))?
        .into_iter()
        .map(|c| c.vertex)
        .filter(is_intruder)
        .collect())
}

pub fn has_intruder<S: Scalar>(f: &Poly<S>) -> Result<bool> {
    Ok(!intruders(f)?.is_empty())
}

/// What went wrong at one vertex when the monomial criterion is inconsistent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CriterionMismatch<S: Scalar> {
    /// `f^w` at the vertex's separating weight is not the vertex monomial.
    NotMonomial { vertex: Exponent, initial: Poly<S> },
    /// The vertex-wise divisibility pattern disagrees with intruder status.
    Divisibility { vertex: Exponent, divisible_by_all: bool, intruder: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialCriterionReport<S: Scalar> {
    /// `Verified` when consistent, `Failed` with a mismatch otherwise.
    pub status: Status,
    pub has_intruder: bool,
    pub vertices: Vec<VertexCertificate<S>>,
    pub mismatch: Option<CriterionMismatch<S>>,
}

/// Cross-checks intruder detection against divisibility of monomial initial
/// forms: `f` has no intruder iff every monomial `f^w` misses some variable.
/// Divisibility is decided by exact polynomial division, independently of
/// the exponent inspection used by [`intruders`].
pub fn check_monomial_criterion<S: Scalar>(f: &Poly<S>) -> Result<MonomialCriterionReport<S>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let vertices = hull_vertices::<S>(&support(f))?;
    let has_intr = has_intruder(f)?;
    let n = f.nvars();
    let mut mismatch = None;
    let mut every_vertex_misses_a_variable = true;
    for cert in &vertices {
        let init = initial_form(f, &cert.as_weight())?;
        let expected = Poly::monomial(n, cert.vertex.clone(), f.coeff(&cert.vertex));
        if init != expected {
            mismatch = Some(CriterionMismatch::NotMonomial { vertex: cert.vertex.clone(), initial: init });
            break;
        }
        let mut all = true;
        for i in 0..n {
            if !init.is_divisible_by(&Poly::var(n, i))? {
                all = false;
                break;
            }
        }
        if all {
            every_vertex_misses_a_variable = false;
            if !has_intr {
                mismatch = Some(CriterionMismatch::Divisibility {
                    vertex: cert.vertex.clone(),
                    divisible_by_all: true,
                    intruder: is_intruder(&cert.vertex),
                });
                break;
            }
        }
    }
    if mismatch.is_none() && has_intr && every_vertex_misses_a_variable {
        let v = vertices.iter().find(|c| is_intruder(&c.vertex)).expect("intruder is a vertex");
        mismatch = Some(CriterionMismatch::Divisibility {
            vertex: v.vertex.clone(),
            divisible_by_all: false,
            intruder: true,
        });
    }
    let status = if mismatch.is_some() { Status::Failed } else { Status::Verified };
    Ok(MonomialCriterionReport { status, has_intruder: has_intr, vertices, mismatch })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use num_rational::BigRational;

    type Q = BigRational;

    fn pts(dim: usize, ps: &[&[u32]]) -> PointSet {
        PointSet::new(dim, ps.iter().map(|p| Exponent::new(p.to_vec()))).unwrap()
    }

    fn vertex_set(ps: &PointSet) -> Vec<Vec<u32>> {
        let mut v: Vec<Vec<u32>> = hull_vertices::<Q>(ps)
            .unwrap()
            .into_iter()
            .map(|c| {
                assert!(c.verify(ps));
                c.vertex.entries().to_vec()
            })
            .collect();
        v.sort();
        v
    }

    #[test]
    fn support_examples() {
        let f: Poly<Q> = parse_poly("x1*x2 + x1 + x2", 2).unwrap();
        assert_eq!(support(&f), pts(2, &[&[1, 1], &[1, 0], &[0, 1]]));
        assert!(support(&Poly::<Q>::zero(2)).is_empty());
        let g: Poly<Q> = parse_poly("x1 + x2", 2).unwrap().pow(2);
        assert_eq!(support(&g), pts(2, &[&[2, 0], &[1, 1], &[0, 2]]));
    }

    #[test]
    fn square_with_midpoint() {
        let ps = pts(2, &[&[0, 0], &[2, 0], &[0, 2], &[1, 1]]);
        assert_eq!(vertex_set(&ps), vec![vec![0, 0], vec![0, 2], vec![2, 0]]);
    }

    #[test]
    fn singleton() {
        let ps = pts(2, &[&[3, 5]]);
        let v = hull_vertices::<Q>(&ps).unwrap();
        assert_eq!(v.len(), 1);
        assert!(v[0].weight.iter().all(|c| c == &Q::from_int(0)));
        assert!(v[0].verify(&ps));
    }

    #[test]
    fn triangle_all_vertices() {
        let ps = pts(2, &[&[1, 1], &[1, 0], &[0, 1]]);
        assert_eq!(vertex_set(&ps).len(), 3);
    }

    #[test]
    fn empty_set() {
        assert_eq!(hull_vertices::<Q>(&pts(2, &[])), Err(Error::EmptySet));
    }

    #[test]
    fn separating_weight_examples() {
        let ps = pts(2, &[&[1, 1], &[1, 0], &[0, 1]]);
        let p = Exponent::new(vec![1, 1]);
        let cert = separating_weight::<Q>(&p, &ps).unwrap().unwrap();
        assert!(cert.verify(&ps));

        let ps2 = pts(2, &[&[0, 0], &[2, 0], &[0, 2], &[1, 1]]);
        assert_eq!(separating_weight::<Q>(&p, &ps2).unwrap(), None);
        assert_eq!(
            separating_weight::<Q>(&Exponent::new(vec![5, 5]), &ps2),
            Err(Error::PointNotInSet)
        );
    }

    #[test]
    fn intruder_examples() {
        let f: Poly<Q> = parse_poly("x1*x2 + x1 + x2", 2).unwrap();
        assert_eq!(intruders(&f).unwrap(), vec![Exponent::new(vec![1, 1])]);
        let g: Poly<Q> = parse_poly("x2^2 - 2*x1*x3", 3).unwrap();
        assert!(intruders(&g).unwrap().is_empty());
        let h: Poly<Q> = parse_poly("x1", 2).unwrap();
        assert!(intruders(&h).unwrap().is_empty());
        let h1: Poly<Q> = parse_poly("x1", 1).unwrap();
        assert_eq!(intruders(&h1).unwrap(), vec![Exponent::new(vec![1])]);
        assert_eq!(intruders(&Poly::<Q>::zero(2)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn intruders_recomputed_after_multiplication() {
        let f: Poly<Q> = parse_poly("x2^2 - 2*x1*x3", 3).unwrap();
        assert!(!has_intruder(&f).unwrap());
        let shifted = &f * &parse_poly("x1*x2*x3", 3).unwrap();
        assert!(has_intruder(&shifted).unwrap());
    }

    #[test]
    fn monomial_criterion_examples() {
        for (s, n, intr) in [("x1*x2 + x1 + x2", 2, true), ("x2^2 - 2*x1*x3", 3, false), ("x1", 2, false)] {
            let f: Poly<Q> = parse_poly(s, n).unwrap();
            let r = check_monomial_criterion(&f).unwrap();
            assert_eq!(r.status, Status::Verified, "{s}");
            assert_eq!(r.has_intruder, intr, "{s}");
        }
    }
}
