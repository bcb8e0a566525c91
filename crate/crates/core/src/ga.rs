//! Additive-group actions on `k[x1..xm]`, given as coactions
//! `σ: k[x] -> k[x][z]`.
//!
//! A [`GaAction`] can only be obtained through [`GaAction::new`] (or the
//! constructors built on it), which checks the counit law `σ(x_i)|_{z=0} = x_i`
//! and coassociativity. Coassociativity is checked in `k[x, z1, z2]` by
//! comparing `Σ_j σ(p_ij)(z1) z2^j` with `σ(x_i)(z1 + z2)`, where
//! `σ(x_i) = Σ_j p_ij z^j`.

use crate::error::{Error, Result};
use crate::poly::{check_arity, format_with_names, AlgebraHom, Poly, ZPoly};
use crate::scalar::Scalar;

pub const DEFAULT_NILPOTENCY_CAP: usize = 64;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GaAction<S: Scalar> {
    hom: AlgebraHom<S>,
}

fn names_z1_z2(m: usize) -> impl Fn(usize) -> String {
    move |i| match i {
        _ if i < m => format!("x{}", i + 1),
        _ if i == m => "z1".to_string(),
        _ => "z2".to_string(),
    }
}

impl<S: Scalar> GaAction<S> {
    /// Validates `images[i] = σ(x_{i+1})` as a coaction on `k[x1..xm]`,
    /// `m = images.len()`.
    pub fn new(images: Vec<ZPoly<S>>) -> Result<Self> {
        let m = images.len();
        let hom = AlgebraHom::new(m, images)?;
        for i in 0..m {
            if hom.image(i).constant_term() != Poly::var(m, i) {
                return Err(Error::CounitFails(i + 1));
            }
        }
        let z1 = Poly::var(m + 2, m);
        let z2 = Poly::var(m + 2, m + 1);
        let mut shift: Vec<Poly<S>> = (0..m).map(|k| Poly::var(m + 2, k)).collect();
        shift.push(&z1 + &z2);
        for i in 0..m {
            let image = hom.image(i);
            let mut lhs = Poly::zero(m + 2);
            for (j, p) in image.coeffs() {
                let acted = hom.substitute(p)?.to_flat().embed(m + 2);
                lhs = &lhs + &(&acted * &z2.pow(j));
            }
            let rhs = image.to_flat().compose(&shift)?;
            if lhs != rhs {
                let names = names_z1_z2(m);
                return Err(Error::CoassocFails {
                    index: i + 1,
                    lhs: format_with_names(&lhs, &names),
                    rhs: format_with_names(&rhs, &names),
                });
            }
        }
        Ok(GaAction { hom })
    }

    /// The trivial action `σ(x_i) = x_i`.
    pub fn trivial(m: usize) -> Self {
        GaAction { hom: AlgebraHom::identity(m) }
    }

    pub fn nvars(&self) -> usize {
        self.hom.src_nvars()
    }

    pub fn images(&self) -> &[ZPoly<S>] {
        self.hom.images()
    }

    pub fn image(&self, i: usize) -> &ZPoly<S> {
        self.hom.image(i)
    }

    pub fn as_hom(&self) -> &AlgebraHom<S> {
        &self.hom
    }

    /// `σ|_{k[x1..xn]}` as a map `k[x1..xn] -> k[x1..xm][z]`.
    pub fn restrict(&self, n: usize) -> AlgebraHom<S> {
        self.hom.restrict_source(n)
    }

    pub fn apply(&self, f: &Poly<S>) -> Result<ZPoly<S>> {
        self.hom.substitute(f)
    }

    /// `σ(f) = f`, equivalently `σ(f)` is free of z.
    pub fn is_invariant(&self, f: &Poly<S>) -> Result<bool> {
        let image = self.apply(f)?;
        let z_free = image.is_z_free();
        let fixed = image == ZPoly::from_poly(f.clone());
        assert_eq!(z_free, fixed, "counit law forces z-free images to be fixed points");
        Ok(fixed)
    }

    pub fn is_trivial(&self) -> bool {
        self.images().iter().all(ZPoly::is_z_free)
    }

    /// Every generator `x_i` is invariant; equivalent to [`is_trivial`](Self::is_trivial).
    pub fn fixes_all_generators(&self) -> Result<bool> {
        for i in 0..self.nvars() {
            if !self.is_invariant(&Poly::var(self.nvars(), i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// A derivation `D` of `k[x1..xm]` with `D^k(x_i) = 0` for some `k` within
/// the cap, for every `i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Lnd<S: Scalar> {
    images: Vec<Poly<S>>,
    /// `iterates[i][k] = D^k(x_i)`, up to the last nonzero one.
    iterates: Vec<Vec<Poly<S>>>,
}

impl<S: Scalar> Lnd<S> {
    pub fn new(images: Vec<Poly<S>>) -> Result<Self> {
        Self::with_cap(images, DEFAULT_NILPOTENCY_CAP)
    }

    pub fn with_cap(images: Vec<Poly<S>>, cap: usize) -> Result<Self> {
        let m = images.len();
        for p in &images {
            check_arity(m, p.nvars())?;
        }
        let mut lnd = Lnd { images, iterates: Vec::with_capacity(m) };
        for i in 0..m {
            let mut chain = vec![Poly::var(m, i)];
            loop {
                let next = lnd.apply(chain.last().expect("nonempty"))?;
                if next.is_zero() {
                    break;
                }
                if chain.len() >= cap {
                    return Err(Error::NotLocallyNilpotentWithinCap { index: i + 1, cap });
                }
                chain.push(next);
            }
            lnd.iterates.push(chain);
        }
        Ok(lnd)
    }

    pub fn nvars(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Poly<S>] {
        &self.images
    }

    /// `D(f) = Σ_i ∂f/∂x_i · D(x_i)`.
    pub fn apply(&self, f: &Poly<S>) -> Result<Poly<S>> {
        check_arity(self.nvars(), f.nvars())?;
        let mut out = Poly::zero(self.nvars());
        for (i, d) in self.images.iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            out = &out + &(&f.derivative(i) * d);
        }
        Ok(out)
    }

    /// The images `σ(x_i) = Σ_j D^j(x_i) z^j / j!` of `exp(zD)`, unvalidated.
    pub fn exp_images(&self) -> Vec<ZPoly<S>> {
        let m = self.nvars();
        self.iterates
            .iter()
            .map(|chain| {
                ZPoly::from_coeffs(
                    m,
                    chain.iter().enumerate().map(|(j, p)| (j as u32, p.scale(&S::inv_factorial(j as u32)))),
                )
                .expect("iterates share the arity")
            })
            .collect()
    }

    /// `exp(zD)` as a validated action.
    pub fn exp(&self) -> GaAction<S> {
        GaAction::new(self.exp_images()).expect("exponential of a locally nilpotent derivation is a coaction")
    }
}

/// Mutually inverse polynomial maps: `x_i ↦ F_i` and `x_i ↦ G_i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AutomorphismPair<S: Scalar> {
    forward: Vec<Poly<S>>,
    inverse: Vec<Poly<S>>,
}

impl<S: Scalar> AutomorphismPair<S> {
    pub fn new(forward: Vec<Poly<S>>, inverse: Vec<Poly<S>>) -> Result<Self> {
        let m = forward.len();
        check_arity(m, inverse.len())?;
        for p in forward.iter().chain(&inverse) {
            check_arity(m, p.nvars())?;
        }
        for j in 0..m {
            let x = Poly::var(m, j);
            if inverse[j].compose(&forward)? != x {
                return Err(Error::NotInverse(format!("G_{}(F) != x{}", j + 1, j + 1)));
            }
            if forward[j].compose(&inverse)? != x {
                return Err(Error::NotInverse(format!("F_{}(G) != x{}", j + 1, j + 1)));
            }
        }
        Ok(AutomorphismPair { forward, inverse })
    }

    pub fn identity(m: usize) -> Self {
        let id: Vec<Poly<S>> = (0..m).map(|i| Poly::var(m, i)).collect();
        AutomorphismPair { forward: id.clone(), inverse: id }
    }

    pub fn nvars(&self) -> usize {
        self.forward.len()
    }

    pub fn forward(&self) -> &[Poly<S>] {
        &self.forward
    }

    pub fn inverse(&self) -> &[Poly<S>] {
        &self.inverse
    }

    /// The same coordinate system with `F_a` and `F_b` exchanged (0-based).
    pub fn swap_coordinates(&self, a: usize, b: usize) -> Result<Self> {
        let m = self.nvars();
        if a >= m || b >= m {
            return Err(Error::VarOutOfRange { index: a.max(b) + 1, nvars: m });
        }
        let mut forward = self.forward.clone();
        forward.swap(a, b);
        let mut perm: Vec<Poly<S>> = (0..m).map(|k| Poly::var(m, k)).collect();
        perm.swap(a, b);
        let inverse = self.inverse.iter().map(|g| g.compose(&perm)).collect::<Result<Vec<_>>>()?;
        Ok(AutomorphismPair { forward, inverse })
    }

    /// The action translating the first coordinate: `f_1 ↦ f_1 + z`,
    /// `f_i ↦ f_i` for `i >= 2`. On variables,
    /// `σ(x_j) = G_j(F_1 + z, F_2, ..., F_m)`.
    pub fn translation_action(&self) -> GaAction<S> {
        let m = self.nvars();
        let mut shifted: Vec<Poly<S>> = self.forward.iter().map(|f| f.embed(m + 1)).collect();
        if m > 0 {
            shifted[0] = &shifted[0] + &Poly::var(m + 1, m);
        }
        let images = self
            .inverse
            .iter()
            .map(|g| ZPoly::from_flat(&g.compose(&shifted).expect("arity checked at construction")))
            .collect();
        let action = GaAction::new(images).expect("conjugated translation is a coaction");
        for f in &self.forward[1.min(m)..] {
            assert!(action.is_invariant(f).expect("same arity"), "untranslated coordinates are invariant");
        }
        action
    }
}

/// Outcome of checking that `f ∈ k[x1..xn]` is a stable invariant via a given action on
/// `k[x1..xm]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StableWitness {
    /// `f` is invariant and `x_{moved}` (1-based, `<= n`) is not.
    Verified { moved: usize },
    NotInvariant,
    /// Every `x_i` with `i <= n` is invariant, so `k[x1..xn]` lies in the invariant ring.
    NotProper,
}

/// Checks that `action` witnesses `f` as a stable invariant of `k[x1..xn]`:
/// `f` (embedded by index) is invariant, while some `x_i`, `i <= n`, is not.
pub fn stable_invariant_witness<S: Scalar>(action: &GaAction<S>, f: &Poly<S>, n: usize) -> Result<StableWitness> {
    let m = action.nvars();
    check_arity(n, f.nvars())?;
    if n > m {
        return Err(Error::ArityMismatch { expected: m, found: n });
    }
    if !action.is_invariant(&f.embed(m))? {
        return Ok(StableWitness::NotInvariant);
    }
    for i in 0..n {
        if !action.is_invariant(&Poly::var(m, i))? {
            return Ok(StableWitness::Verified { moved: i + 1 });
        }
    }
    Ok(StableWitness::NotProper)
}
