//! Weighted initial forms, Newton polytopes and additive-group actions on
//! polynomial rings, with executable checkers for the statements relating
//! them.
//!
//! All types are generic over an exact [`Scalar`] coefficient field. The
//! aliases at the crate root fix the usual choice, arbitrary-precision
//! rationals.

pub mod error;
pub mod fuzz;
pub mod ga;
pub mod lp;
pub mod newton;
pub mod poly;
pub mod report;
pub mod scalar;
pub mod theorems;
pub mod weights;

pub use error::{Error, Result};
pub use ga::{AutomorphismPair, GaAction, Lnd, StableWitness};
pub use poly::{AlgebraHom, Exponent, Poly, ZPoly};
pub use report::Status;
pub use scalar::Scalar;
pub use theorems::{PhiData, TwistData};
pub use weights::{DegValue, GroupElem, Weight};

pub use num_bigint::BigInt;
pub use num_rational::{BigRational, Rational64};

/// Arbitrary-precision rationals, the default coefficient field.
pub type Rational = BigRational;

pub type QPoly = Poly<Rational>;
pub type QZPoly = ZPoly<Rational>;
pub type QAlgebraHom = AlgebraHom<Rational>;
pub type QGroupElem = GroupElem<Rational>;
pub type QWeight = Weight<Rational>;
pub type QGaAction = GaAction<Rational>;
pub type QLnd = Lnd<Rational>;
pub type QAutomorphismPair = AutomorphismPair<Rational>;
pub type QTwistData = TwistData<Rational>;
pub type QPhiData = PhiData<Rational>;
