use super::{check_arity, Poly, ZPoly};
use crate::error::Result;
use crate::scalar::Scalar;

/// A k-algebra homomorphism `k[x1..xn] -> k[y1..ym][z]`, given by the images
/// of the variables. When no image mentions z it is a map into `k[y1..ym]`.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraHom<S> {
    target_nvars: usize,
    images: Vec<ZPoly<S>>,
}

impl<S: Scalar> AlgebraHom<S> {
    pub fn new(target_nvars: usize, images: Vec<ZPoly<S>>) -> Result<Self> {
        for img in &images {
            check_arity(target_nvars, img.nvars())?;
        }
        Ok(AlgebraHom { target_nvars, images })
    }

    pub fn from_polys(target_nvars: usize, images: Vec<Poly<S>>) -> Result<Self> {
        Self::new(target_nvars, images.into_iter().map(ZPoly::from_poly).collect())
    }

    pub fn identity(n: usize) -> Self {
        AlgebraHom {
            target_nvars: n,
            images: (0..n).map(|i| ZPoly::from_poly(Poly::var(n, i))).collect(),
        }
    }

    pub fn src_nvars(&self) -> usize {
        self.images.len()
    }

    pub fn target_nvars(&self) -> usize {
        self.target_nvars
    }

    pub fn images(&self) -> &[ZPoly<S>] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &ZPoly<S> {
        &self.images[i]
    }

    pub fn is_z_free(&self) -> bool {
        self.images.iter().all(ZPoly::is_z_free)
    }

    /// z-free images, or `None` if some image involves z.
    pub fn z_free_images(&self) -> Option<Vec<Poly<S>>> {
        self.images.iter().map(ZPoly::as_poly).collect()
    }

    /// The first `n` images: the restriction to `k[x1..xn]`.
    pub fn restrict_source(&self, n: usize) -> Self {
        AlgebraHom { target_nvars: self.target_nvars, images: self.images[..n].to_vec() }
    }

    /// Images in the flat ring `k[y1..ym, z]`.
    pub fn flat_images(&self) -> Vec<Poly<S>> {
        self.images.iter().map(ZPoly::to_flat).collect()
    }

    /// `h(f)`: every `x_i` replaced by its image and expanded.
    pub fn substitute(&self, f: &Poly<S>) -> Result<ZPoly<S>> {
        check_arity(self.src_nvars(), f.nvars())?;
        if self.images.is_empty() {
            let c = f.coeff(&super::Exponent::zero(0));
            return Ok(ZPoly::from_poly(Poly::constant(self.target_nvars, c)));
        }
        let flat = f.compose(&self.flat_images())?;
        Ok(ZPoly::from_flat(&flat))
    }
}

impl<S: Scalar> std::fmt::Debug for AlgebraHom<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AlgebraHom")
            .field("target_nvars", &self.target_nvars)
            .field("images", &self.images)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::super::{parse_poly, parse_zpoly};
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn hom(imgs: &[&str], m: usize) -> AlgebraHom<Q> {
        AlgebraHom::new(m, imgs.iter().map(|s| parse_zpoly(s, m).unwrap()).collect()).unwrap()
    }

    #[test]
    fn substitution_by_hand() {
        let h = hom(&["x1 + x2^2", "x2"], 2);
        let f = parse_poly("x1 + x2^2", 2).unwrap();
        let got = h.substitute(&f).unwrap();
        assert_eq!(got.as_poly().unwrap(), parse_poly("x1 + 2*x2^2", 2).unwrap());
    }

    #[test]
    fn identity_is_identity() {
        let f: Poly<Q> = parse_poly("x1^3*x2 - 2/3*x2 + 5", 2).unwrap();
        let got = AlgebraHom::identity(2).substitute(&f).unwrap();
        assert_eq!(got, ZPoly::from_poly(f));
    }

    #[test]
    fn fixed_variable_stays_z_free() {
        let h = hom(&["x1", "x2 + x1*z"], 2);
        let got = h.substitute(&parse_poly("x1", 2).unwrap()).unwrap();
        assert!(got.is_z_free());
        let moved = h.substitute(&parse_poly("x2", 2).unwrap()).unwrap();
        assert!(!moved.is_z_free());
    }

    #[test]
    fn arity_errors() {
        let h = hom(&["x1", "x2"], 2);
        assert!(h.substitute(&parse_poly("x1", 3).unwrap()).is_err());
        assert!(AlgebraHom::new(2, vec![parse_zpoly::<Q>("x1", 3).unwrap()]).is_err());
    }
}
