use std::collections::BTreeMap;
use std::fmt;

use super::{check_arity, format_with_names, Exponent, Poly};
use crate::error::Result;
use crate::scalar::Scalar;

/// An element `Σ_j p_j z^j` of `k[x1..xn][z]`, stored by z-power.
///
/// Arithmetic goes through the flat view: a [`Poly`] in `nvars + 1`
/// variables whose last variable is z.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZPoly<S> {
    nvars: usize,
    coeffs: BTreeMap<u32, Poly<S>>,
}

impl<S: Scalar> ZPoly<S> {
    pub fn zero(nvars: usize) -> Self {
        ZPoly { nvars, coeffs: BTreeMap::new() }
    }

    /// `z` itself.
    pub fn z(nvars: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(1, Poly::one(nvars));
        ZPoly { nvars, coeffs }
    }

    pub fn from_poly(p: Poly<S>) -> Self {
        let nvars = p.nvars();
        let mut coeffs = BTreeMap::new();
        if !p.is_zero() {
            coeffs.insert(0, p);
        }
        ZPoly { nvars, coeffs }
    }

    /// Builds from z-power coefficients, dropping zero ones.
    pub fn from_coeffs<I>(nvars: usize, coeffs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, Poly<S>)>,
    {
        let mut out = Self::zero(nvars);
        for (j, p) in coeffs {
            check_arity(nvars, p.nvars())?;
            let merged = match out.coeffs.remove(&j) {
                Some(q) => &q + &p,
                None => p,
            };
            if !merged.is_zero() {
                out.coeffs.insert(j, merged);
            }
        }
        Ok(out)
    }

    /// Splits a polynomial in `nvars + 1` variables by its last variable.
    pub fn from_flat(flat: &Poly<S>) -> Self {
        let nvars = flat.nvars() - 1;
        let mut coeffs: BTreeMap<u32, Poly<S>> = BTreeMap::new();
        for (e, c) in flat.terms() {
            let j = e[nvars];
            let x = Exponent::new(e.entries()[..nvars].to_vec());
            coeffs.entry(j).or_insert_with(|| Poly::zero(nvars)).add_term(x, c.clone());
        }
        ZPoly { nvars, coeffs }
    }

    pub fn to_flat(&self) -> Poly<S> {
        let mut out = Poly::zero(self.nvars + 1);
        for (&j, p) in &self.coeffs {
            for (e, c) in p.terms() {
                let mut v = e.entries().to_vec();
                v.push(j);
                out.add_term(Exponent::new(v), c.clone());
            }
        }
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_z_free(&self) -> bool {
        self.coeffs.keys().all(|&j| j == 0)
    }

    /// The coefficient `p_j` of `z^j` (zero when absent).
    pub fn coeff(&self, j: u32) -> Poly<S> {
        self.coeffs.get(&j).cloned().unwrap_or_else(|| Poly::zero(self.nvars))
    }

    /// Nonzero coefficients in increasing z-power.
    pub fn coeffs(&self) -> impl Iterator<Item = (u32, &Poly<S>)> {
        self.coeffs.iter().map(|(&j, p)| (j, p))
    }

    /// `p(0)`.
    pub fn constant_term(&self) -> Poly<S> {
        self.coeff(0)
    }

    pub fn z_degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// The z-free element, if there is no z-term.
    pub fn as_poly(&self) -> Option<Poly<S>> {
        self.is_z_free().then(|| self.constant_term())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_arity(self.nvars, other.nvars)?;
        Ok(Self::from_flat(&self.to_flat().checked_add(&other.to_flat())?))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        check_arity(self.nvars, other.nvars)?;
        Ok(Self::from_flat(&self.to_flat().checked_mul(&other.to_flat())?))
    }

    /// Substitutes `z := value`.
    pub fn eval_z(&self, value: &Poly<S>) -> Result<Poly<S>> {
        check_arity(self.nvars, value.nvars())?;
        let mut out = Poly::zero(self.nvars);
        for (&j, p) in &self.coeffs {
            out = &out + &(p * &value.pow(j));
        }
        Ok(out)
    }
}

impl<S: Scalar> fmt::Display for ZPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.nvars;
        let name = move |i: usize| if i == n { "z".to_string() } else { format!("x{}", i + 1) };
        f.write_str(&format_with_names(&self.to_flat(), &name))
    }
}

impl<S: Scalar> fmt::Debug for ZPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZPoly[{}]({})", self.nvars, self)
    }
}
