use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{algebraically_independent, check_arity, AlgebraHom, Poly, ZPoly};
use crate::report::Status;
use crate::scalar::Scalar;
use crate::weights::{wdeg, weighted_initial, DegValue, GroupElem, Weight};

fn check_shapes<S: Scalar>(phi: &AlgebraHom<S>, v: &Weight<S>, w: &Weight<S>) -> Result<()> {
    check_arity(phi.target_nvars(), v.len())?;
    check_arity(phi.src_nvars(), w.len())?;
    if v.dim() != w.dim() {
        return Err(Error::DimMismatch { expected: v.dim(), found: w.dim() });
    }
    Ok(())
}

type Maximizers<S> = (GroupElem<S>, Vec<(usize, u32)>);

/// The maximum together with every pair `(i, j)` (1-based `i`, `j >= 1`)
/// attaining it.
fn z_degree_with_maximizers<S: Scalar>(
    phi: &AlgebraHom<S>,
    v: &Weight<S>,
    w: &Weight<S>,
) -> Result<Maximizers<S>> {
    check_shapes(phi, v, w)?;
    let mut best: Option<Maximizers<S>> = None;
    for (i, image) in phi.images().iter().enumerate() {
        for (j, p) in image.coeffs() {
            if j == 0 {
                continue;
            }
            let Some(deg) = wdeg(p, v)?.finite().cloned() else { continue };
            let cand = deg.try_sub(w.get(i))?.scale(&(S::one() / S::from_int(j as i64)));
            match &mut best {
                Some((top, at)) if *top == cand => at.push((i + 1, j)),
                Some((top, _)) if *top > cand => {}
                _ => best = Some((cand, vec![(i + 1, j)])),
            }
        }
    }
    best.ok_or(Error::NoZTerms)
}

/// `deg_v φ = max { (deg_v p_ij - w_i) / j : j >= 1 }` where
/// `φ(x_i) = Σ_j p_ij z^j`.
pub fn phi_z_degree<S: Scalar>(phi: &AlgebraHom<S>, v: &Weight<S>, w: &Weight<S>) -> Result<GroupElem<S>> {
    Ok(z_degree_with_maximizers(phi, v, w)?.0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StarFailure<S: Scalar> {
    /// The initial forms `p_i(0)^v` are algebraically dependent.
    Dependent,
    /// `deg_v p_i(0) != w_i` (1-based index).
    Degree { index: usize, found: DegValue<S>, expected: GroupElem<S> },
}

impl<S: Scalar> fmt::Display for StarFailure<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StarFailure::Dependent => write!(f, "initial forms of the constant terms are dependent"),
            StarFailure::Degree { index, found, expected } => {
                write!(f, "deg_v p_{index}(0) = {found}, expected {expected}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarReport<S: Scalar> {
    pub status: Status,
    /// `p_i(0)^v`.
    pub initial_forms: Vec<Poly<S>>,
    pub degrees: Vec<DegValue<S>>,
    pub failure: Option<StarFailure<S>>,
}

/// Condition (*): the `p_i(0)^v` are algebraically independent and
/// `deg_v p_i(0) = w_i` for every `i`. Independence is checked first.
pub fn check_star<S: Scalar>(phi: &AlgebraHom<S>, v: &Weight<S>, w: &Weight<S>) -> Result<StarReport<S>> {
    check_shapes(phi, v, w)?;
    let mut initial_forms = Vec::new();
    let mut degrees = Vec::new();
    for image in phi.images() {
        let (deg, init) = weighted_initial(&image.constant_term(), v)?;
        degrees.push(deg);
        initial_forms.push(init);
    }
    let independent = match algebraically_independent(&initial_forms) {
        Ok(b) => b,
        Err(Error::TooManyPolys { .. }) => false,
        Err(e) => return Err(e),
    };
    let failure = if !independent {
        Some(StarFailure::Dependent)
    } else {
        degrees
            .iter()
            .zip(w.entries())
            .position(|(d, wi)| d.finite() != Some(wi))
            .map(|i| StarFailure::Degree { index: i + 1, found: degrees[i].clone(), expected: w.get(i).clone() })
    };
    let status = if failure.is_some() { Status::Failed } else { Status::Verified };
    Ok(StarReport { status, initial_forms, degrees, failure })
}

/// `φ: k[x1..xn] -> k[y1..ym][z]` with weights `v` on the `y` and `w` on the
/// `x`, and the weight `u = (v, -deg_v φ)` on `(y, z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiData<S: Scalar> {
    pub phi: AlgebraHom<S>,
    pub v: Weight<S>,
    pub w: Weight<S>,
    pub deg_v_phi: GroupElem<S>,
    pub u: Weight<S>,
    /// `φ^u(x_i)`, the `u`-initial forms of the images.
    pub phi_u: Vec<ZPoly<S>>,
    /// Pairs `(i, j)` attaining `deg_v φ`.
    pub maximizers: Vec<(usize, u32)>,
}

/// Builds `u` and checks that `u_φ = w`, that `z^j` occurs in `φ^u(x_i)` for
/// every maximizing pair, and that the `φ^u(x_i)` are algebraically
/// independent (equivalently, `φ^u` is injective).
pub fn build_u<S: Scalar>(phi: &AlgebraHom<S>, v: &Weight<S>, w: &Weight<S>) -> Result<PhiData<S>> {
    let (deg_v_phi, maximizers) = z_degree_with_maximizers(phi, v, w)?;
    let star = check_star(phi, v, w)?;
    if let Some(failure) = star.failure {
        return Err(Error::StarFails(failure.to_string()));
    }
    let u = v.extended(&[deg_v_phi.neg()])?;

    let mut phi_u = Vec::with_capacity(phi.src_nvars());
    let mut flat_initials = Vec::with_capacity(phi.src_nvars());
    for (i, image) in phi.images().iter().enumerate() {
        let (deg, init) = weighted_initial(&image.to_flat(), &u)?;
        if deg.finite() != Some(w.get(i)) {
            return Err(Error::PostconditionViolated(format!(
                "deg_u phi(x{}) = {deg}, expected {}",
                i + 1,
                w.get(i)
            )));
        }
        phi_u.push(ZPoly::from_flat(&init));
        flat_initials.push(init);
    }
    for &(i, j) in &maximizers {
        if phi_u[i - 1].coeff(j).is_zero() {
            return Err(Error::PostconditionViolated(format!("z^{j} does not occur in phi^u(x{i})")));
        }
    }
    if !algebraically_independent(&flat_initials)? {
        return Err(Error::PostconditionViolated("phi^u images are dependent".into()));
    }
    Ok(PhiData { phi: phi.clone(), v: v.clone(), w: w.clone(), deg_v_phi, u, phi_u, maximizers })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_zpoly;
    use crate::GaAction;
    use num_rational::BigRational;

    type Q = BigRational;

    fn hom(imgs: &[&str], m: usize) -> AlgebraHom<Q> {
        AlgebraHom::new(m, imgs.iter().map(|s| parse_zpoly(s, m).unwrap()).collect()).unwrap()
    }

    fn w(ws: &[i64]) -> Weight<Q> {
        Weight::from_ints(ws)
    }

    #[test]
    fn z_degree_examples() {
        assert_eq!(phi_z_degree(&hom(&["x1 + x1^3*z^2"], 1), &w(&[1]), &w(&[1])), Ok(GroupElem::from_ints(&[1])));
        let phi = hom(&["x1 + x3*z", "x2 + x3*z^3"], 3);
        assert_eq!(phi_z_degree(&phi, &w(&[1, 1, 1]), &w(&[1, 1])), Ok(GroupElem::from_ints(&[0])));
        assert_eq!(phi_z_degree(&hom(&["x1 + z"], 1), &w(&[1]), &w(&[1])), Ok(GroupElem::from_ints(&[-1])));
    }

    #[test]
    fn z_degree_is_rational() {
        // (1/2)(0 - 1) and (1/3)(0 - 1)
        let phi = hom(&["x1 + z^2", "x2 + z^3"], 2);
        let d = phi_z_degree(&phi, &w(&[1, 1]), &w(&[1, 1])).unwrap();
        assert_eq!(d.coords()[0], Q::new(1.into(), (-3).into()));
    }

    #[test]
    fn z_degree_errors() {
        assert_eq!(phi_z_degree(&hom(&["x1"], 2), &w(&[1, 1]), &w(&[1])), Err(Error::NoZTerms));
        assert!(matches!(phi_z_degree(&hom(&["x1 + z"], 1), &w(&[1, 1]), &w(&[1])), Err(Error::ArityMismatch { .. })));
        let v2 = Weight::from_rows(&[&[1, 0]]).unwrap();
        assert!(matches!(phi_z_degree(&hom(&["x1 + z"], 1), &v2, &w(&[1])), Err(Error::DimMismatch { .. })));
    }

    #[test]
    fn build_u_single_variable() {
        let d = build_u(&hom(&["x1 + x1^3*z^2"], 1), &w(&[1]), &w(&[1])).unwrap();
        assert_eq!(d.u, w(&[1, -1]));
        assert_eq!(d.phi_u[0], parse_zpoly("x1 + x1^3*z^2", 1).unwrap());
        assert_eq!(d.maximizers, vec![(1, 2)]);
    }

    #[test]
    fn build_u_two_variables() {
        let d = build_u(&hom(&["x1 + x3*z", "x2 + x3*z^3"], 3), &w(&[1, 1, 1]), &w(&[1, 1])).unwrap();
        assert_eq!(d.u, w(&[1, 1, 1, 0]));
        assert_eq!(d.phi_u[0], parse_zpoly("x1 + x3*z", 3).unwrap());
        assert_eq!(d.phi_u[1], parse_zpoly("x2 + x3*z^3", 3).unwrap());
    }

    #[test]
    fn build_u_on_translation_restrictions() {
        let sigma = GaAction::<Q>::new(vec![parse_zpoly("x1", 2).unwrap(), parse_zpoly("x2 + z", 2).unwrap()]).unwrap();
        // restricted to k[x1] the image has no z at all
        assert_eq!(build_u(&sigma.restrict(1), &w(&[3, 0]), &w(&[3])), Err(Error::NoZTerms));
        let d = build_u(&sigma.restrict(2), &w(&[3, 2]), &w(&[3, 2])).unwrap();
        assert_eq!(d.u, w(&[3, 2, 2]));
        assert_eq!(d.phi_u[1], parse_zpoly("x2 + z", 2).unwrap());
    }

    #[test]
    fn build_u_star_failure() {
        let phi = hom(&["x1 + x2^2 + z", "x2"], 2);
        assert!(matches!(build_u(&phi, &w(&[1, 1]), &w(&[2, 1])), Err(Error::StarFails(_))));
    }

    #[test]
    fn star_examples() {
        let sigma = GaAction::<Q>::new(vec![
            parse_zpoly("x1", 3).unwrap(),
            parse_zpoly("x2 + x1*z", 3).unwrap(),
            parse_zpoly("x3 + x2*z + 1/2*x1*z^2", 3).unwrap(),
        ])
        .unwrap();
        let r = check_star(&sigma.restrict(2), &w(&[4, -1, 0]), &w(&[4, -1])).unwrap();
        assert_eq!(r.status, Status::Verified);

        let r = check_star(&hom(&["x1", "x1^2"], 2), &w(&[5, 1]), &w(&[5, 10])).unwrap();
        assert_eq!(r.failure, Some(StarFailure::Dependent));

        let r = check_star(&hom(&["x1 + x2^2", "x2"], 2), &w(&[1, 1]), &w(&[2, 1])).unwrap();
        assert_eq!(r.degrees[0], DegValue::Finite(GroupElem::from_ints(&[2])));
        assert_eq!(r.failure, Some(StarFailure::Dependent));
        assert_eq!(r.status, Status::Failed);
    }

    #[test]
    fn star_degree_clause() {
        let r = check_star(&hom(&["x1 + z", "x2"], 2), &w(&[1, 1]), &w(&[1, 2])).unwrap();
        assert_eq!(
            r.failure,
            Some(StarFailure::Degree { index: 2, found: DegValue::Finite(GroupElem::from_ints(&[1])), expected: GroupElem::from_ints(&[2]) })
        );
    }
}
