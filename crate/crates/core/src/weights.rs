//! The ordered group `Q^d` (lexicographic order), weights, weighted degrees
//! and initial forms.
//!
//! Every finitely generated totally ordered abelian group embeds in some
//! `Q^d` with the lexicographic order, and the constructions here (including
//! division by positive integers) never leave it.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{check_arity, Exponent, Poly};
use crate::report::Status;
use crate::scalar::Scalar;

/// An element of `Q^d`, compared lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElem<S> {
    coords: Vec<S>,
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimMismatch { expected, found })
    }
}

impl<S: Scalar> GroupElem<S> {
    pub fn new(coords: Vec<S>) -> Self {
        assert!(!coords.is_empty(), "group elements have dimension at least 1");
        GroupElem { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(vec![S::zero(); dim])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| S::from_int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(S::is_zero)
    }

    pub fn try_cmp(&self, other: &Self) -> Result<Ordering> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.cmp(other))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.zip(other, |a, b| a - b))
    }

    pub fn neg(&self) -> Self {
        GroupElem { coords: self.coords.iter().map(|c| -c.clone()).collect() }
    }

    /// Rational multiple, e.g. `(1/j)·γ`.
    pub fn scale(&self, c: &S) -> Self {
        GroupElem { coords: self.coords.iter().map(|a| a.clone() * c.clone()).collect() }
    }

    fn zip(&self, other: &Self, op: impl Fn(S, S) -> S) -> Self {
        GroupElem {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| op(a.clone(), b.clone())).collect(),
        }
    }
}

impl<S: Scalar> fmt::Debug for GroupElem<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<S: Scalar> fmt::Display for GroupElem<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A weight `w = (w_1, ..., w_n)`, one group element per variable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Weight<S> {
    dim: usize,
    per_var: Vec<GroupElem<S>>,
}

impl<S: Scalar> Weight<S> {
    /// `dim` is only consulted when `per_var` is empty.
    pub fn new(dim: usize, per_var: Vec<GroupElem<S>>) -> Result<Self> {
        let dim = per_var.first().map_or(dim, GroupElem::dim);
        for g in &per_var {
            check_dim(dim, g.dim())?;
        }
        Ok(Weight { dim, per_var })
    }

    /// One-dimensional weight from integers, e.g. `(1, 1)`.
    pub fn from_ints(ws: &[i64]) -> Self {
        Weight { dim: 1, per_var: ws.iter().map(|&w| GroupElem::from_ints(&[w])).collect() }
    }

    /// Weight from integer rows, one row per variable.
    pub fn from_rows(rows: &[&[i64]]) -> Result<Self> {
        let dim = rows.first().map_or(1, |r| r.len());
        Self::new(dim, rows.iter().map(|r| GroupElem::from_ints(r)).collect())
    }

    pub fn zero(nvars: usize, dim: usize) -> Self {
        Weight { dim, per_var: vec![GroupElem::zero(dim); nvars] }
    }

    pub fn len(&self) -> usize {
        self.per_var.len()
    }

    pub fn is_empty(&self) -> bool {
        self.per_var.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize) -> &GroupElem<S> {
        &self.per_var[i]
    }

    pub fn entries(&self) -> &[GroupElem<S>] {
        &self.per_var
    }

    /// `a · w = Σ a_i w_i`.
    pub fn dot(&self, a: &Exponent) -> GroupElem<S> {
        debug_assert_eq!(a.len(), self.len());
        let mut acc = vec![S::zero(); self.dim];
        for (&ai, wi) in a.entries().iter().zip(&self.per_var) {
            if ai == 0 {
                continue;
            }
            let k = S::from_int(ai as i64);
            for (slot, c) in acc.iter_mut().zip(wi.coords()) {
                *slot = slot.clone() + k.clone() * c.clone();
            }
        }
        GroupElem { coords: acc }
    }

    /// `(w_1, ..., w_n, extra...)`.
    pub fn extended(&self, extra: &[GroupElem<S>]) -> Result<Self> {
        let mut per_var = self.per_var.clone();
        per_var.extend_from_slice(extra);
        Self::new(self.dim, per_var)
    }

    /// `(w_1, ..., w_n, 0, ..., 0)` with `total` entries.
    pub fn padded(&self, total: usize) -> Self {
        let mut per_var = self.per_var.clone();
        per_var.resize(total.max(self.len()), GroupElem::zero(self.dim));
        Weight { dim: self.dim, per_var }
    }

    pub fn prefix(&self, n: usize) -> Self {
        Weight { dim: self.dim, per_var: self.per_var[..n].to_vec() }
    }

    fn check_poly(&self, f: &Poly<S>) -> Result<()> {
        check_arity(self.len(), f.nvars())
    }
}

impl<S: Scalar> fmt::Debug for Weight<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.per_var).finish()
    }
}

/// A weighted degree: `-∞` (for the zero polynomial) or a group element.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum DegValue<S: Scalar> {
    MinusInfinity,
    Finite(GroupElem<S>),
}

impl<S: Scalar> DegValue<S> {
    pub fn finite(&self) -> Option<&GroupElem<S>> {
        match self {
            DegValue::MinusInfinity => None,
            DegValue::Finite(g) => Some(g),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, DegValue::Finite(_))
    }

    /// `-∞ + x = -∞`.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (DegValue::Finite(a), DegValue::Finite(b)) => Ok(DegValue::Finite(a.try_add(b)?)),
            _ => Ok(DegValue::MinusInfinity),
        }
    }
}

impl<S: Scalar> fmt::Display for DegValue<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegValue::MinusInfinity => f.write_str("-inf"),
            DegValue::Finite(g) => write!(f, "{g}"),
        }
    }
}

/// `deg_w f` together with the initial form `f^w`.
pub fn weighted_initial<S: Scalar>(f: &Poly<S>, w: &Weight<S>) -> Result<(DegValue<S>, Poly<S>)> {
    w.check_poly(f)?;
    let scored: Vec<(GroupElem<S>, &Exponent, &S)> = f.terms().map(|(e, c)| (w.dot(e), e, c)).collect();
    let Some(top) = scored.iter().map(|(s, _, _)| s).max().cloned() else {
        return Ok((DegValue::MinusInfinity, Poly::zero(f.nvars())));
    };
    let initial = Poly::from_terms(
        f.nvars(),
        scored
            .into_iter()
            .filter(|(s, _, _)| *s == top)
            .map(|(_, e, c)| (e.clone(), c.clone())),
    )?;
    Ok((DegValue::Finite(top), initial))
}

/// `deg_w f = max { a·w | a ∈ supp(f) }`, or `-∞` for `f = 0`.
pub fn wdeg<S: Scalar>(f: &Poly<S>, w: &Weight<S>) -> Result<DegValue<S>> {
    Ok(weighted_initial(f, w)?.0)
}

/// The sum of the terms of `f` whose exponents attain `deg_w f`. Ties are
/// all kept.
pub fn initial_form<S: Scalar>(f: &Poly<S>, w: &Weight<S>) -> Result<Poly<S>> {
    Ok(weighted_initial(f, w)?.1)
}

/// Result of checking the initial form of a sum against the sum of the
/// top-degree initial forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumInitialReport<S: Scalar> {
    pub status: Status,
    /// Maximal degree among the summands.
    pub delta: GroupElem<S>,
    /// 0-based indices of the summands attaining `delta`.
    pub argmax: Vec<usize>,
    /// `Σ_{i ∈ argmax} f_i^w`.
    pub top_sum: Poly<S>,
    /// `(Σ f_i)^w`.
    pub sum_initial: Poly<S>,
}

/// For summands `f_1..f_l`, compares `(f_1 + ... + f_l)^w` with the sum of
/// the initial forms of the summands of maximal degree. When that sum
/// cancels to zero the premise is absent and the report says so.
pub fn check_sum_initial<S: Scalar>(fs: &[Poly<S>], w: &Weight<S>) -> Result<SumInitialReport<S>> {
    let first = fs.first().ok_or(Error::EmptyList)?;
    for f in fs {
        check_arity(first.nvars(), f.nvars())?;
    }
    let parts: Vec<(DegValue<S>, Poly<S>)> =
        fs.iter().map(|f| weighted_initial(f, w)).collect::<Result<_>>()?;
    let delta = parts
        .iter()
        .filter_map(|(d, _)| d.finite())
        .max()
        .cloned()
        .ok_or(Error::AllZero)?;
    let argmax: Vec<usize> = parts
        .iter()
        .enumerate()
        .filter(|(_, (d, _))| d.finite() == Some(&delta))
        .map(|(i, _)| i)
        .collect();
    let mut top_sum = Poly::zero(first.nvars());
    for &i in &argmax {
        top_sum = &top_sum + &parts[i].1;
    }
    let mut total = Poly::zero(first.nvars());
    for f in fs {
        total = &total + f;
    }
    let sum_initial = initial_form(&total, w)?;
    let status = if top_sum.is_zero() {
        Status::HypothesisFails
    } else if sum_initial == top_sum {
        Status::Verified
    } else {
        Status::Failed
    };
    Ok(SumInitialReport { status, delta, argmax, top_sum, sum_initial })
}
