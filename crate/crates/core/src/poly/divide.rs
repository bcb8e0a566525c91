use super::{check_arity, Poly};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

impl<S: Scalar> Poly<S> {
    /// Exact quotient `self / divisor`, or `None` when the divisor does not
    /// divide `self` over the coefficient field.
    ///
    /// Single-divisor division with graded-lex leading terms: `{divisor}` is
    /// a Gröbner basis of the principal ideal it generates, so the remainder
    /// is zero iff the division is exact. The first leading term of the
    /// running remainder not divisible by `LT(divisor)` would land in the
    /// remainder, which settles the answer early.
    pub fn exact_div(&self, divisor: &Poly<S>) -> Result<Option<Poly<S>>> {
        check_arity(self.nvars(), divisor.nvars())?;
        let (lead_exp, lead_coeff) = match divisor.leading_term() {
            Some((e, c)) => (e.clone(), c.clone()),
            None => return Err(Error::DivisionByZeroPoly),
        };
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.nvars());
        while let Some((e, c)) = rem.leading_term() {
            let Some(shift) = e.checked_sub(&lead_exp) else {
                return Ok(None);
            };
            let factor = c.clone() / lead_coeff.clone();
            let step = Poly::monomial(self.nvars(), shift, factor);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        Ok(Some(quot))
    }

    pub fn is_divisible_by(&self, divisor: &Poly<S>) -> Result<bool> {
        Ok(self.exact_div(divisor)?.is_some())
    }
}
