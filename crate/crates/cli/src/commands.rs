use initforms::fuzz::{run_suite, Suite};
use initforms::newton::{check_monomial_criterion, hull_vertices, intruders, support, CriterionMismatch};
use initforms::poly::max_var_index;
use initforms::weights::weighted_initial;
use initforms::{ga, Error, QGaAction, QLnd, QPoly, Rational, StableWitness};
use serde_json::{json, Value};

use crate::json::{self, poly_in, split_list};
use crate::{exit_code, CliError, EXIT_FAILED, EXIT_OK, SCHEMA};

type CmdResult = Result<(i32, Value), CliError>;

fn arity(texts: &[&str], nvars: Option<usize>) -> Result<usize, CliError> {
    if let Some(n) = nvars {
        return Ok(n);
    }
    let mut n = 0;
    for t in texts {
        n = n.max(max_var_index(t)?);
    }
    Ok(n)
}

pub fn poly_parse(expr: &str, nvars: Option<usize>) -> CmdResult {
    let n = arity(&[expr], nvars)?;
    let p = poly_in(expr, n, "expr")?;
    let terms: Vec<Value> = p
        .terms()
        .rev()
        .map(|(e, c)| json!({"exp": json::exponent(e), "coeff": json::rational(c)}))
        .collect();
    Ok((EXIT_OK, json!({"nvars": n, "poly": json::poly(&p), "terms": terms})))
}

pub fn poly_mul(a: &str, b: &str, nvars: Option<usize>) -> CmdResult {
    let n = arity(&[a, b], nvars)?;
    let product = &poly_in(a, n, "a")? * &poly_in(b, n, "b")?;
    Ok((EXIT_OK, json!({"product": json::poly(&product)})))
}

pub fn poly_divides(g: &str, f: &str, nvars: Option<usize>) -> CmdResult {
    let n = arity(&[g, f], nvars)?;
    let (g, f) = (poly_in(g, n, "g")?, poly_in(f, n, "f")?);
    let quotient = f.exact_div(&g)?;
    Ok((
        EXIT_OK,
        json!({"divides": quotient.is_some(), "quotient": quotient.as_ref().map(json::poly)}),
    ))
}

pub fn initform(w: &str, expr: &str) -> CmdResult {
    let w = json::parse_weight_text(w)?;
    let p = poly_in(expr, w.len(), "expr")?;
    let (deg, init) = weighted_initial(&p, &w)?;
    Ok((EXIT_OK, json!({"deg": json::deg(&deg), "initial": json::poly(&init)})))
}

fn newton_input(expr: &str) -> Result<QPoly, CliError> {
    let n = arity(&[expr], None)?.max(1);
    let p = poly_in(expr, n, "expr")?;
    if p.is_zero() {
        return Err(Error::ZeroPolynomial.into());
    }
    Ok(p)
}

fn certificates(p: &QPoly) -> Result<Vec<Value>, CliError> {
    Ok(hull_vertices::<Rational>(&support(p))?
        .iter()
        .map(|c| {
            json!({
                "vertex": json::exponent(&c.vertex),
                "weight": c.weight.iter().map(json::rational).collect::<Vec<_>>(),
                "margin": json::rational(&c.margin),
            })
        })
        .collect())
}

pub fn newton_vertices(expr: &str) -> CmdResult {
    let p = newton_input(expr)?;
    Ok((EXIT_OK, json!({"vertices": certificates(&p)?})))
}

pub fn newton_intruders(expr: &str) -> CmdResult {
    let p = newton_input(expr)?;
    let found: Vec<Value> = intruders(&p)?.iter().map(json::exponent).collect();
    Ok((EXIT_OK, json!({"intruders": found})))
}

pub fn newton_criterion(expr: &str) -> CmdResult {
    let p = newton_input(expr)?;
    let r = check_monomial_criterion(&p)?;
    let mismatch = r.mismatch.as_ref().map(|m| match m {
        CriterionMismatch::NotMonomial { vertex, initial } => {
            json!({"kind": "not_monomial", "vertex": json::exponent(vertex), "initial": json::poly(initial)})
        }
        CriterionMismatch::Divisibility { vertex, divisible_by_all, intruder } => json!({
            "kind": "divisibility",
            "vertex": json::exponent(vertex),
            "divisible_by_all": divisible_by_all,
            "intruder": intruder,
        }),
    });
    Ok((
        exit_code(r.status),
        json!({
            "status": r.status.as_str(),
            "has_intruder": r.has_intruder,
            "vertices": r.vertices.iter().map(|c| json::exponent(&c.vertex)).collect::<Vec<_>>(),
            "mismatch": mismatch,
        }),
    ))
}

/// Images `σ(x_1), .., σ(x_m)` in `k[x1..xm][z]`, `m` the list length.
pub fn parse_action_images(list: &str) -> Result<Vec<initforms::QZPoly>, CliError> {
    let items = split_list(list);
    let m = items.len();
    items
        .iter()
        .enumerate()
        .map(|(i, s)| json::zpoly_in(s, m, &format!("image {}", i + 1)))
        .collect()
}

pub fn parse_action(list: &str) -> Result<QGaAction, CliError> {
    Ok(QGaAction::new(parse_action_images(list)?)?)
}

fn axiom_error(e: &Error) -> Option<Value> {
    match e {
        Error::CounitFails(i) => Some(json!({"axiom": "counit", "index": i})),
        Error::CoassocFails { index, lhs, rhs } => {
            Some(json!({"axiom": "coassociativity", "index": index, "lhs": lhs, "rhs": rhs}))
        }
        _ => None,
    }
}

pub fn action_validate(list: &str) -> CmdResult {
    let images = parse_action_images(list)?;
    match QGaAction::new(images) {
        Ok(a) => Ok((EXIT_OK, json!({"valid": true, "trivial": a.is_trivial()}))),
        Err(e) => match axiom_error(&e) {
            Some(detail) => Ok((EXIT_FAILED, json!({"valid": false, "violation": detail, "message": e.to_string()}))),
            None => Err(e.into()),
        },
    }
}

pub fn action_exp(list: &str) -> CmdResult {
    let items = split_list(list);
    let m = items.len();
    let images = items
        .iter()
        .enumerate()
        .map(|(i, s)| poly_in(s, m, &format!("D(x{})", i + 1)))
        .collect::<Result<Vec<_>, _>>()?;
    let lnd = QLnd::with_cap(images, ga::DEFAULT_NILPOTENCY_CAP)?;
    let action = lnd.exp();
    Ok((EXIT_OK, json!({"action": action.images().iter().map(json::zpoly).collect::<Vec<_>>()})))
}

pub fn action_invariant(list: &str, f: &str) -> CmdResult {
    let action = parse_action(list)?;
    let f = poly_in(f, action.nvars(), "f")?;
    let image = action.apply(&f)?;
    Ok((EXIT_OK, json!({"invariant": action.is_invariant(&f)?, "image": json::zpoly(&image)})))
}

pub fn action_stable_witness(list: &str, n: usize, f: &str) -> CmdResult {
    let action = parse_action(list)?;
    let f = poly_in(f, n, "f")?;
    let out = match initforms::ga::stable_invariant_witness(&action, &f, n)? {
        StableWitness::Verified { moved } => (EXIT_OK, json!({"status": "verified", "moved": format!("x{moved}")})),
        StableWitness::NotInvariant => (EXIT_FAILED, json!({"status": "not_invariant", "moved": null})),
        StableWitness::NotProper => (EXIT_FAILED, json!({"status": "not_proper", "moved": null})),
    };
    Ok(out)
}

pub fn fuzz(suite: &str, seed: u64, count: u64) -> CmdResult {
    let suite: Suite = suite.parse().map_err(CliError::invalid)?;
    let r = run_suite(suite, seed, count);
    let failures: Vec<Value> = r.failures.iter().map(|f| json!({"index": f.index, "detail": f.detail})).collect();
    Ok((
        exit_code(r.status()),
        json!({
            "schema": SCHEMA,
            "suite": suite.name(),
            "seed": seed,
            "count": count,
            "passed": r.passed,
            "hypothesis_fails": r.hypothesis_fails,
            "failed": r.failures.len(),
            "failures": failures,
            "status": r.status().as_str(),
            "reproducer": format!("initforms fuzz --suite {} --seed {seed} --count {count}", suite.name()),
        }),
    ))
}
