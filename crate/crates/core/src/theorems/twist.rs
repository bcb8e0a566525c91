use crate::error::{Error, Result};
use crate::poly::{check_arity, AlgebraHom, Poly};
use crate::report::Status;
use crate::scalar::Scalar;
use crate::weights::{weighted_initial, initial_form, Weight};

/// A homomorphism `ψ: k[x1..xn] -> k[y1..ym]` with nonzero images, a weight
/// `u` on the target, and what they induce: `u_ψ = (deg_u ψ(x_i))_i` and the
/// twisted map `ψ^u(x_i) = ψ(x_i)^u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistData<S: Scalar> {
    psi: Vec<Poly<S>>,
    u: Weight<S>,
    u_psi: Weight<S>,
    psi_u: Vec<Poly<S>>,
}

impl<S: Scalar> TwistData<S> {
    pub fn new(psi: &AlgebraHom<S>, u: &Weight<S>) -> Result<Self> {
        let images = psi
            .z_free_images()
            .ok_or_else(|| Error::PreconditionFails("the homomorphism must not involve z".into()))?;
        check_arity(psi.target_nvars(), u.len())?;
        let mut degs = Vec::with_capacity(images.len());
        let mut psi_u = Vec::with_capacity(images.len());
        for (i, img) in images.iter().enumerate() {
            let (deg, init) = weighted_initial(img, u)?;
            let deg = deg.finite().cloned().ok_or(Error::ZeroImage(i + 1))?;
            degs.push(deg);
            psi_u.push(init);
        }
        let u_psi = Weight::new(u.dim(), degs)?;
        Ok(TwistData { psi: images, u: u.clone(), u_psi, psi_u })
    }

    pub fn src_nvars(&self) -> usize {
        self.psi.len()
    }

    pub fn target_nvars(&self) -> usize {
        self.u.len()
    }

    pub fn psi(&self) -> &[Poly<S>] {
        &self.psi
    }

    pub fn u(&self) -> &Weight<S> {
        &self.u
    }

    pub fn u_psi(&self) -> &Weight<S> {
        &self.u_psi
    }

    pub fn psi_u(&self) -> &[Poly<S>] {
        &self.psi_u
    }

    pub fn apply_psi(&self, f: &Poly<S>) -> Result<Poly<S>> {
        self.compose(f, &self.psi)
    }

    pub fn apply_psi_u(&self, f: &Poly<S>) -> Result<Poly<S>> {
        self.compose(f, &self.psi_u)
    }

    fn compose(&self, f: &Poly<S>, images: &[Poly<S>]) -> Result<Poly<S>> {
        check_arity(self.src_nvars(), f.nvars())?;
        if images.is_empty() {
            return Ok(Poly::constant(self.target_nvars(), f.coeff(&crate::Exponent::zero(0))));
        }
        f.compose(images)
    }
}

/// See [`TwistData::new`].
pub fn build_twist<S: Scalar>(psi: &AlgebraHom<S>, u: &Weight<S>) -> Result<TwistData<S>> {
    TwistData::new(psi, u)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatReport<S: Scalar> {
    pub status: Status,
    /// `f^{u_ψ}`.
    pub source_initial: Poly<S>,
    /// `ψ^u(f^{u_ψ})`.
    pub twisted: Poly<S>,
    /// `ψ(f)^u`.
    pub image_initial: Poly<S>,
}

/// Compares `ψ(f)^u` with `ψ^u(f^{u_ψ})`. The equality is only claimed when
/// the right-hand side is nonzero; otherwise the report is `HypothesisFails`.
pub fn check_initial_compat<S: Scalar>(t: &TwistData<S>, f: &Poly<S>) -> Result<CompatReport<S>> {
    check_arity(t.src_nvars(), f.nvars())?;
    let source_initial = initial_form(f, t.u_psi())?;
    let twisted = t.apply_psi_u(&source_initial)?;
    let image_initial = initial_form(&t.apply_psi(f)?, t.u())?;
    let status = if twisted.is_zero() {
        Status::HypothesisFails
    } else if image_initial == twisted {
        Status::Verified
    } else {
        Status::Failed
    };
    Ok(CompatReport { status, source_initial, twisted, image_initial })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipReport<S: Scalar> {
    pub status: Status,
    /// `ψ^u(f^{u_ψ})`.
    pub twisted: Poly<S>,
    /// A variable (1-based, `> l`) occurring in `twisted`, when membership fails.
    pub witness_var: Option<usize>,
}

/// For `f` with `ψ(f) ∈ k[y1..yl]`, checks that `ψ^u(f^{u_ψ}) ∈ k[y1..yl]`
/// too, i.e. `f^{u_ψ}` lies in the preimage of `k[y1..yl]` under `ψ^u`.
pub fn check_initial_membership<S: Scalar>(t: &TwistData<S>, l: usize, f: &Poly<S>) -> Result<MembershipReport<S>> {
    check_arity(t.src_nvars(), f.nvars())?;
    if l > t.target_nvars() {
        return Err(Error::ArityMismatch { expected: t.target_nvars(), found: l });
    }
    let image = t.apply_psi(f)?;
    if !image.uses_only_first(l) {
        return Err(Error::PreconditionFails(format!(
            "image {image} involves variables beyond y{l}"
        )));
    }
    let twisted = t.apply_psi_u(&initial_form(f, t.u_psi())?)?;
    let witness_var = twisted.max_var().filter(|&v| v >= l).map(|v| v + 1);
    let status = if witness_var.is_some() { Status::Failed } else { Status::Verified };
    Ok(MembershipReport { status, twisted, witness_var })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use num_rational::BigRational;

    type Q = BigRational;

    fn hom(imgs: &[&str], m: usize) -> AlgebraHom<Q> {
        AlgebraHom::from_polys(m, imgs.iter().map(|s| parse_poly(s, m).unwrap()).collect()).unwrap()
    }

    fn p(s: &str, n: usize) -> Poly<Q> {
        parse_poly(s, n).unwrap()
    }

    #[test]
    fn twist_by_hand() {
        let t = build_twist(&hom(&["x1 + x2^2", "x2"], 2), &Weight::from_ints(&[1, 1])).unwrap();
        assert_eq!(t.u_psi(), &Weight::from_ints(&[2, 1]));
        assert_eq!(t.psi_u(), &[p("x2^2", 2), p("x2", 2)]);
    }

    #[test]
    fn identity_twist() {
        let u = Weight::from_rows(&[&[1, -2], &[0, 3], &[5, 5]]).unwrap();
        let t = build_twist(&AlgebraHom::<Q>::identity(3), &u).unwrap();
        assert_eq!(t.u_psi(), &u);
        assert_eq!(t.psi_u(), &[p("x1", 3), p("x2", 3), p("x3", 3)]);
    }

    #[test]
    fn twist_keeps_ties() {
        let t = build_twist(&hom(&["x1 + x2"], 2), &Weight::from_ints(&[1, 1])).unwrap();
        assert_eq!(t.psi_u(), &[p("x1 + x2", 2)]);
    }

    #[test]
    fn twist_errors() {
        assert_eq!(
            build_twist(&hom(&["x1", "0"], 2), &Weight::from_ints(&[1, 1])),
            Err(Error::ZeroImage(2))
        );
        assert!(matches!(
            build_twist(&hom(&["x1"], 2), &Weight::from_ints(&[1])),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn compat_examples() {
        let t = build_twist(&hom(&["x1 + x2^2", "x2"], 2), &Weight::from_ints(&[1, 1])).unwrap();
        let r = check_initial_compat(&t, &p("x1 + x2^2", 2)).unwrap();
        assert_eq!(r.status, Status::Verified);
        assert_eq!(r.source_initial, p("x1 + x2^2", 2));
        assert_eq!(r.twisted, p("2*x2^2", 2));

        let u = Weight::from_ints(&[3, -1, 2]);
        let t = build_twist(&AlgebraHom::<Q>::identity(3), &u).unwrap();
        let r = check_initial_compat(&t, &p("x1*x2 + x3^2 - x2", 3)).unwrap();
        assert_eq!(r.status, Status::Verified);

        let t = build_twist(&hom(&["x1", "-x1"], 1), &Weight::from_ints(&[1])).unwrap();
        let r = check_initial_compat(&t, &p("x1 + x2", 2)).unwrap();
        assert_eq!(r.status, Status::HypothesisFails);
        assert!(r.twisted.is_zero());
    }

    #[test]
    fn membership_examples() {
        let t = build_twist(&hom(&["x1", "x2 + x1^2"], 2), &Weight::from_ints(&[2, -1])).unwrap();
        let r = check_initial_membership(&t, 1, &p("x1", 2)).unwrap();
        assert_eq!(r.status, Status::Verified);
        assert_eq!(r.twisted, p("x1", 2));

        let t = build_twist(&AlgebraHom::<Q>::identity(2), &Weight::from_ints(&[1, 7])).unwrap();
        assert_eq!(check_initial_membership(&t, 2, &p("x1^2*x2 + x2^9", 2)).unwrap().status, Status::Verified);

        let t = build_twist(&hom(&["x1 + x2", "x2"], 2), &Weight::from_ints(&[1, 1])).unwrap();
        let r = check_initial_membership(&t, 1, &p("x1 - x2", 2)).unwrap();
        assert_eq!(r.status, Status::Verified);
        assert_eq!(r.twisted, p("x1", 2));
    }

    #[test]
    fn membership_precondition() {
        let t = build_twist(&hom(&["x1 + x2", "x2"], 2), &Weight::from_ints(&[1, 1])).unwrap();
        assert!(matches!(
            check_initial_membership(&t, 1, &p("x1", 2)),
            Err(Error::PreconditionFails(_))
        ));
    }
}
