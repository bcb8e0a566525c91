use std::fmt;



use super::{Exponent, Poly};
use crate::scalar::Scalar;

fn write_monomial(out: &mut String, e: &Exponent, name: &dyn Fn(usize) -> String) {
    let mut first = true;
    for (i, &a) in e.entries().iter().enumerate() {
        if a == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(&name(i));
        if a > 1 {
            out.push('^');
            out.push_str(&a.to_string());
        }
    }
}

/// Renders `p` highest graded-lex term first, e.g. `x1^2*x2 - 1/2*x1 + 3`.
pub fn format_with_names<S: Scalar>(p: &Poly<S>, name: &dyn Fn(usize) -> String) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (e, c)) in p.terms().rev().enumerate() {
        let negative = c.is_negative();
        let abs = c.abs();
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if e.is_zero() {
            out.push_str(&abs.to_string());
        } else {
            if !abs.is_one() {
                out.push_str(&abs.to_string());
                out.push('*');
            }
            write_monomial(&mut out, e, name);
        }
    }
    debug_assert!(!out.is_empty() || p.terms().all(|(_, c)| c.is_zero()));
    out
}

impl<S: Scalar> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_with_names(self, &|i| format!("x{}", i + 1)))
    }
}

impl<S: Scalar> fmt::Debug for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.nvars(), self)
    }
}
