//! Exact multivariate polynomials.
//!
//! A [`Poly`] is a canonical map from [`Exponent`] to nonzero coefficient.
//! Terms are kept in graded-lexicographic order, so the leading term is the
//! last entry of the map. The zero polynomial is the empty map; the variable
//! count is kept on the wrapper so arity checks still apply to it.
//!
//! The binary operators (`+`, `-`, `*`) on references panic when the two
//! operands live in rings of different arity. The `checked_*` methods report
//! [`Error::ArityMismatch`] instead.

mod divide;
mod exponent;
mod format;
mod hom;
mod linalg;
mod parse;
mod zpoly;

use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

pub use exponent::Exponent;
pub use format::format_with_names;
pub use hom::AlgebraHom;
pub use linalg::{algebraically_independent, determinant, jacobian, rank};
pub use parse::{max_var_index, parse_poly, parse_zpoly};
pub use zpoly::ZPoly;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<S> {
    nvars: usize,
    terms: BTreeMap<Exponent, S>,
}

pub(crate) fn check_arity(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::ArityMismatch { expected, found })
    }
}

impl<S: Scalar> Poly<S> {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, S::one())
    }

    pub fn constant(nvars: usize, c: S) -> Self {
        Self::monomial(nvars, Exponent::zero(nvars), c)
    }

    /// The variable `x_{var+1}` (indices are 0-based here, 1-based in text).
    pub fn var(nvars: usize, var: usize) -> Self {
        assert!(var < nvars, "variable index {var} out of range for {nvars} variables");
        Self::monomial(nvars, Exponent::unit(nvars, var), S::one())
    }

    pub fn monomial(nvars: usize, exp: Exponent, c: S) -> Self {
        assert_eq!(exp.len(), nvars);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Poly { nvars, terms }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, S)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            check_arity(nvars, e.len())?;
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, exp: Exponent, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(existing) => {
                *existing = existing.clone() + c;
                if existing.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Exponent::is_zero)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &S)> + ExactSizeIterator {
        self.terms.iter()
    }

    /// The exponent set of the nonzero terms.
    pub fn support(&self) -> impl Iterator<Item = &Exponent> {
        self.terms.keys()
    }

    pub fn coeff(&self, exp: &Exponent) -> S {
        self.terms.get(exp).cloned().unwrap_or_else(S::zero)
    }

    pub fn leading_term(&self) -> Option<(&Exponent, &S)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Exponent::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    /// True when only variables with 0-based index `< bound` occur.
    pub fn uses_only_first(&self, bound: usize) -> bool {
        self.terms.keys().all(|e| e.entries()[bound.min(self.nvars)..].iter().all(|&a| a == 0))
    }

    /// Highest variable (0-based) with a nonzero exponent in some term.
    pub fn max_var(&self) -> Option<usize> {
        self.terms
            .keys()
            .filter_map(|e| e.entries().iter().rposition(|&a| a != 0))
            .max()
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a.clone() * c.clone())).collect(),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_arity(self.nvars, other.nvars)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        check_arity(self.nvars, other.nvars)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        check_arity(self.nvars, other.nvars)?;
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.add(eb), ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Partial derivative with respect to `x_{var+1}`.
    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let a = e[var];
            if a == 0 {
                continue;
            }
            let mut d = e.entries().to_vec();
            d[var] -= 1;
            out.add_term(Exponent::new(d), c.clone() * S::from_int(a as i64));
        }
        out
    }

    /// The same polynomial viewed in `nvars >= self.nvars()` variables.
    pub fn embed(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars);
        Poly {
            nvars,
            terms: self.terms.iter().map(|(e, c)| (e.embed(nvars), c.clone())).collect(),
        }
    }

    /// Drops trailing variables, provided they do not occur.
    pub fn restrict(&self, nvars: usize) -> Option<Self> {
        if !self.uses_only_first(nvars) {
            return None;
        }
        Some(Poly {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (Exponent::new(e.entries()[..nvars].to_vec()), c.clone()))
                .collect(),
        })
    }

    pub fn eval(&self, point: &[S]) -> S {
        assert_eq!(point.len(), self.nvars);
        let mut acc = S::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &a) in point.iter().zip(e.entries()) {
                for _ in 0..a {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Replaces `x_i` by `images[i]`, all images living in one target ring.
    pub fn compose(&self, images: &[Poly<S>]) -> Result<Self> {
        check_arity(self.nvars, images.len())?;
        let target = match images.first() {
            Some(p) => p.nvars,
            None => {
                // zero source variables: only constants
                return Ok(Self::constant(0, self.coeff(&Exponent::zero(0))));
            }
        };
        for p in images {
            check_arity(target, p.nvars)?;
        }
        let mut powers: Vec<HashMap<u32, Poly<S>>> = vec![HashMap::new(); self.nvars];
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (i, &a) in e.entries().iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let p = powers[i].entry(a).or_insert_with(|| images[i].pow(a));
                t = &t * p;
            }
            for (te, tc) in t.terms {
                out.add_term(te, tc);
            }
        }
        Ok(out)
    }
}

impl<S: Scalar> Add for &Poly<S> {
    type Output = Poly<S>;
    fn add(self, rhs: Self) -> Poly<S> {
        self.checked_add(rhs).expect("polynomial arity mismatch")
    }
}

impl<S: Scalar> Sub for &Poly<S> {
    type Output = Poly<S>;
    fn sub(self, rhs: Self) -> Poly<S> {
        self.checked_sub(rhs).expect("polynomial arity mismatch")
    }
}

impl<S: Scalar> Mul for &Poly<S> {
    type Output = Poly<S>;
    fn mul(self, rhs: Self) -> Poly<S> {
        self.checked_mul(rhs).expect("polynomial arity mismatch")
    }
}

impl<S: Scalar> Add for Poly<S> {
    type Output = Poly<S>;
    fn add(self, rhs: Self) -> Poly<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for Poly<S> {
    type Output = Poly<S>;
    fn sub(self, rhs: Self) -> Poly<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Mul for Poly<S> {
    type Output = Poly<S>;
    fn mul(self, rhs: Self) -> Poly<S> {
        &self * &rhs
    }
}

impl<S: Scalar> Neg for &Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

impl<S: Scalar> Neg for Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = Poly<BigRational>;

    fn p(s: &str, n: usize) -> P {
        parse_poly(s, n).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let f = p("x1 + x2", 2);
        let g = p("x1 - x2", 2);
        assert_eq!(&f * &g, p("x1^2 - x2^2", 2));
    }

    #[test]
    fn zero_absorbs() {
        let f = p("x1*x2 + 3", 2);
        assert!((&f * &P::zero(2)).is_zero());
    }

    /// Term-by-term convolution written out directly.
    #[test]
    fn product_matches_convolution() {
        let f = p("x1*x2 + x1 + x2", 2);
        let g = p("x1", 2);
        let mut expected = P::zero(2);
        for (ea, ca) in f.terms() {
            for (eb, cb) in g.terms() {
                let e: Vec<u32> = ea.entries().iter().zip(eb.entries()).map(|(a, b)| a + b).collect();
                expected.add_term(Exponent::new(e), ca * cb);
            }
        }
        assert_eq!(&f * &g, expected);
        assert_eq!(&f * &g, p("x1^2*x2 + x1^2 + x1*x2", 2));
    }

    #[test]
    fn arity_mismatch() {
        let f = p("x1", 1);
        let g = p("x1", 2);
        assert_eq!(
            f.checked_mul(&g),
            Err(Error::ArityMismatch { expected: 1, found: 2 })
        );
        assert!(f.checked_add(&g).is_err());
    }

    #[test]
    fn pow_and_derivative() {
        let f = p("x1 + x2", 2);
        assert_eq!(f.pow(2), p("x1^2 + 2*x1*x2 + x2^2", 2));
        assert_eq!(f.pow(0), P::one(2));
        assert_eq!(p("x1^3*x2 + 5", 2).derivative(0), p("3*x1^2*x2", 2));
    }

    #[test]
    fn leading_term_is_grlex_max() {
        let f = p("x1 + x2^2 + x1*x2", 2);
        let (e, _) = f.leading_term().unwrap();
        assert_eq!(e.entries(), &[1, 1]);
    }

    #[test]
    fn compose_expands() {
        let f = p("x1 + x2^2", 2);
        let imgs = vec![p("x1 + x2^2", 2), p("x2", 2)];
        assert_eq!(f.compose(&imgs).unwrap(), p("x1 + 2*x2^2", 2));
    }

    #[test]
    fn embed_and_restrict() {
        let f = p("x1*x2 - 1", 2);
        let g = f.embed(4);
        assert_eq!(g.nvars(), 4);
        assert_eq!(g.restrict(2).unwrap(), f);
        assert!(p("x3", 3).restrict(2).is_none());
        assert_eq!(p("x2*x3 + x1", 3).max_var(), Some(2));
    }
}
