//! Conversions between JSON values and library types. Rationals travel as
//! `"p/q"` strings, exponent vectors as integer arrays.

use std::str::FromStr;

use initforms::poly::{parse_poly, parse_zpoly};
use initforms::{DegValue, Exponent, QGroupElem, QPoly, QWeight, QZPoly, Rational};
use serde_json::{json, Value};

use crate::CliError;

pub fn rational(q: &Rational) -> Value {
    Value::String(q.to_string())
}

pub fn group(g: &QGroupElem) -> Value {
    Value::Array(g.coords().iter().map(rational).collect())
}

pub fn weight(w: &QWeight) -> Value {
    Value::Array(w.entries().iter().map(group).collect())
}

pub fn deg(d: &DegValue<Rational>) -> Value {
    match d.finite() {
        Some(g) => group(g),
        None => Value::Null,
    }
}

pub fn exponent(e: &Exponent) -> Value {
    json!(e.entries())
}

pub fn poly(p: &QPoly) -> Value {
    Value::String(p.to_string())
}

pub fn zpoly(p: &QZPoly) -> Value {
    Value::String(p.to_string())
}

pub fn polys(ps: &[QPoly]) -> Value {
    Value::Array(ps.iter().map(poly).collect())
}

fn parse_rational_text(s: &str) -> Result<Rational, CliError> {
    Rational::from_str(s.trim()).map_err(|_| CliError::invalid(format!("'{s}' is not a rational number")))
}

fn scalar(v: &Value) -> Result<Rational, CliError> {
    match v {
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(Rational::from_integer(i.into())),
            None => Err(CliError::invalid(format!("weight entry {n} is not an integer; write it as \"p/q\""))),
        },
        Value::String(s) => parse_rational_text(s),
        other => Err(CliError::invalid(format!("weight entry {other} is not a number"))),
    }
}

/// A weight given as one entry per variable; an entry is a number, a
/// rational string, or an array of those (a vector in `Q^d`).
pub fn parse_weight(v: &Value) -> Result<QWeight, CliError> {
    let items = v.as_array().ok_or_else(|| CliError::invalid("a weight must be a JSON array"))?;
    let mut per_var = Vec::with_capacity(items.len());
    for item in items {
        let coords = match item {
            Value::Array(cs) => cs.iter().map(scalar).collect::<Result<Vec<_>, _>>()?,
            other => vec![scalar(other)?],
        };
        if coords.is_empty() {
            return Err(CliError::invalid("a weight entry must have at least one coordinate"));
        }
        per_var.push(QGroupElem::new(coords));
    }
    Ok(QWeight::new(1, per_var)?)
}

pub fn parse_weight_text(s: &str) -> Result<QWeight, CliError> {
    let v: Value = serde_json::from_str(s).map_err(|e| CliError::invalid(format!("weight is not valid JSON: {e}")))?;
    parse_weight(&v)
}

pub fn str_field<'a>(job: &'a Value, key: &str) -> Result<&'a str, CliError> {
    job.get(key)
        .ok_or_else(|| CliError::invalid(format!("missing field '{key}'")))?
        .as_str()
        .ok_or_else(|| CliError::invalid(format!("field '{key}' must be a string")))
}

pub fn usize_field(job: &Value, key: &str) -> Result<usize, CliError> {
    job.get(key)
        .ok_or_else(|| CliError::invalid(format!("missing field '{key}'")))?
        .as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| CliError::invalid(format!("field '{key}' must be a nonnegative integer")))
}

pub fn str_list<'a>(job: &'a Value, key: &str) -> Result<Vec<&'a str>, CliError> {
    let items = job
        .get(key)
        .ok_or_else(|| CliError::invalid(format!("missing field '{key}'")))?
        .as_array()
        .ok_or_else(|| CliError::invalid(format!("field '{key}' must be an array of strings")))?;
    items
        .iter()
        .map(|v| v.as_str().ok_or_else(|| CliError::invalid(format!("field '{key}' must be an array of strings"))))
        .collect()
}

pub fn weight_field(job: &Value, key: &str) -> Result<QWeight, CliError> {
    parse_weight(job.get(key).ok_or_else(|| CliError::invalid(format!("missing field '{key}'")))?)
        .map_err(|e| e.context(key))
}

pub fn poly_in(text: &str, nvars: usize, what: &str) -> Result<QPoly, CliError> {
    parse_poly(text, nvars).map_err(|e| CliError::from(e).context(what))
}

pub fn zpoly_in(text: &str, nvars: usize, what: &str) -> Result<QZPoly, CliError> {
    parse_zpoly(text, nvars).map_err(|e| CliError::from(e).context(what))
}

pub fn poly_list(job: &Value, key: &str, nvars: usize) -> Result<Vec<QPoly>, CliError> {
    str_list(job, key)?
        .into_iter()
        .enumerate()
        .map(|(i, s)| poly_in(s, nvars, &format!("{key}[{i}]")))
        .collect()
}

pub fn zpoly_list(job: &Value, key: &str, nvars: usize) -> Result<Vec<QZPoly>, CliError> {
    str_list(job, key)?
        .into_iter()
        .enumerate()
        .map(|(i, s)| zpoly_in(s, nvars, &format!("{key}[{i}]")))
        .collect()
}

/// A comma-separated list of images, as taken on the command line.
pub fn split_list(s: &str) -> Vec<&str> {
    s.split(',').map(str::trim).collect()
}
