//! Exact coefficient fields.
//!
//! Everything in this crate is generic over [`Scalar`], a blanket trait over
//! the `num-traits` bounds an exact ordered field needs. Both
//! [`num_rational::BigRational`] and [`num_rational::Rational64`] qualify.
//! Floating-point types do not: initial forms depend on exact zero tests and
//! exact ties, so `Ord` is required.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_traits::{FromPrimitive, Num, Signed};

pub trait Scalar:
    Num + Signed + FromPrimitive + FromStr + Clone + Ord + Hash + Debug + Display + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("every i64 is representable")
    }

    /// Inverse of the factorial `j!`, used by exponentials of derivations.
    fn inv_factorial(j: u32) -> Self {
        let mut acc = Self::one();
        for k in 2..=j {
            acc = acc * Self::from_int(k as i64);
        }
        Self::one() / acc
    }
}

impl<T> Scalar for T where
    T: Num
        + Signed
        + FromPrimitive
        + FromStr
        + Clone
        + Ord
        + Hash
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}
