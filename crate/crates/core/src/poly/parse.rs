//! Expression front-end.
//!
//! ```text
//! poly   := ['-'] term (('+'|'-') term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! factor := var ('^' nat)?
//! var    := 'x' nat | 'z'
//! coeff  := int ('/' nat)?
//! ```
//!
//! Whitespace between tokens is ignored. Variables are 1-indexed.


use super::{Exponent, Poly, ZPoly};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    X(usize),
    Z,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { pos, msg: msg.into() }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Num(text[start..i].to_string())));
                continue;
            }
            b'x' => {
                i += 1;
                let digits = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if digits == i {
                    return Err(syntax(start, "expected variable index after 'x'"));
                }
                let idx: usize = text[digits..i]
                    .parse()
                    .map_err(|_| syntax(digits, "variable index too large"))?;
                out.push((start, Tok::X(idx)));
                continue;
            }
            b'z' => out.push((start, Tok::Z)),
            b'+' => out.push((start, Tok::Plus)),
            b'-' => out.push((start, Tok::Minus)),
            b'*' => out.push((start, Tok::Star)),
            b'^' => out.push((start, Tok::Caret)),
            b'/' => out.push((start, Tok::Slash)),
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(syntax(start, format!("unexpected character '{ch}'")));
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    at: usize,
    end: usize,
    nvars: usize,
    allow_z: bool,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn nat(&mut self) -> Result<String> {
        match self.toks.get(self.at) {
            Some((_, Tok::Num(s))) => {
                self.at += 1;
                Ok(s.clone())
            }
            _ => Err(syntax(self.pos(), "expected a natural number")),
        }
    }

    /// Exponent vector has `nvars + 1` slots; the last one is z.
    fn factor(&mut self, exp: &mut [u32]) -> Result<()> {
        let pos = self.pos();
        let slot = match self.peek() {
            Some(Tok::X(i)) => {
                let i = *i;
                if i == 0 || i > self.nvars {
                    return Err(Error::VarOutOfRange { index: i, nvars: self.nvars });
                }
                i - 1
            }
            Some(Tok::Z) => {
                if !self.allow_z {
                    return Err(Error::ZNotAllowed { pos });
                }
                self.nvars
            }
            _ => return Err(syntax(pos, "expected a variable")),
        };
        self.at += 1;
        let mut power = 1u32;
        if self.peek() == Some(&Tok::Caret) {
            self.at += 1;
            let p = self.pos();
            power = self.nat()?.parse().map_err(|_| syntax(p, "exponent too large"))?;
        }
        exp[slot] = exp[slot]
            .checked_add(power)
            .ok_or_else(|| syntax(pos, "exponent overflow"))?;
        Ok(())
    }

    fn term<S: Scalar>(&mut self) -> Result<(Exponent, S)> {
        let mut exp = vec![0u32; self.nvars + 1];
        let mut coeff = S::one();
        if let Some(Tok::Num(_)) = self.peek() {
            let p = self.pos();
            let num = self.nat()?;
            let mut text = num;
            if self.peek() == Some(&Tok::Slash) {
                self.at += 1;
                let dp = self.pos();
                let den = self.nat()?;
                if den.trim_start_matches('0').is_empty() {
                    return Err(syntax(dp, "zero denominator"));
                }
                text = format!("{text}/{den}");
            }
            coeff = S::from_str(&text).map_err(|_| syntax(p, "coefficient out of range"))?;
        } else {
            self.factor(&mut exp)?;
        }
        while self.peek() == Some(&Tok::Star) {
            self.at += 1;
            self.factor(&mut exp)?;
        }
        Ok((Exponent::new(exp), coeff))
    }

    fn poly<S: Scalar>(&mut self) -> Result<Poly<S>> {
        let mut out = Poly::zero(self.nvars + 1);
        let mut negate = false;
        if self.peek() == Some(&Tok::Minus) {
            self.at += 1;
            negate = true;
        }
        loop {
            let (e, c) = self.term::<S>()?;
            out.add_term(e, if negate { -c } else { c });
            match self.peek() {
                Some(Tok::Plus) => negate = false,
                Some(Tok::Minus) => negate = true,
                None => break,
                Some(_) => return Err(syntax(self.pos(), "expected '+', '-' or end of input")),
            }
            self.at += 1;
        }
        Ok(out)
    }
}

fn parse_flat<S: Scalar>(text: &str, nvars: usize, allow_z: bool) -> Result<Poly<S>> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(syntax(0, "empty expression"));
    }
    let mut parser = Parser { toks: &toks, at: 0, end: text.len(), nvars, allow_z };
    parser.poly()
}

/// Parses an element of `k[x1..x_nvars]`.
pub fn parse_poly<S: Scalar>(text: &str, nvars: usize) -> Result<Poly<S>> {
    let flat = parse_flat::<S>(text, nvars, false)?;
    Ok(flat.restrict(nvars).expect("z rejected by the parser"))
}

/// Parses an element of `k[x1..x_nvars][z]`.
pub fn parse_zpoly<S: Scalar>(text: &str, nvars: usize) -> Result<ZPoly<S>> {
    let flat = parse_flat::<S>(text, nvars, true)?;
    Ok(ZPoly::from_flat(&flat))
}

/// Largest `k` such that `xk` occurs in `text` (0 when none does).
pub fn max_var_index(text: &str) -> Result<usize> {
    Ok(tokenize(text)?
        .into_iter()
        .filter_map(|(_, t)| match t {
            Tok::X(i) => Some(i),
            _ => None,
        })
        .max()
        .unwrap_or(0))
}
