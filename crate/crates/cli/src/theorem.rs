//! Theorem jobs: one JSON object naming a `check` plus its inputs.

use initforms::theorems::{
    build_twist, build_u, check_coords_instance, check_initial_compat, check_initial_membership,
    check_no_intruder_stable, check_stable_coordinate, check_star, find_nondividing, find_nondividing_twist,
    NondividingReport, StarFailure,
};
use initforms::{
    Error, QAlgebraHom, QAutomorphismPair, QGaAction, QLnd, QPoly, QWeight, Rational, Status,
};
use serde_json::{json, Value};

use crate::json::{self, poly_in, poly_list, str_field, usize_field, weight_field, zpoly_list};
use crate::{CliError, SCHEMA};

pub const CHECKS: &[&str] = &["prop23", "thm24i", "thm24ii", "star", "build_u", "thm12", "thm11", "thm14"];

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub check: String,
    pub status: Status,
    pub witness: Value,
    pub details: Value,
    /// The job that produced this report; running it again reproduces it.
    pub reproducer: Value,
}

impl Report {
    pub fn to_json(&self) -> Value {
        json!({
            "schema": SCHEMA,
            "check": self.check,
            "status": self.status.as_str(),
            "witness": self.witness,
            "details": self.details,
            "reproducer": self.reproducer,
        })
    }
}

/// Library errors that mean "the instance does not satisfy the hypotheses"
/// become reports; the rest are input errors.
fn classify(e: Error) -> Result<(Status, Value), CliError> {
    match e {
        Error::StarFails(_)
        | Error::NoZTerms
        | Error::PreconditionFails(_)
        | Error::HypothesisFails(_)
        | Error::WitnessInvalid(_)
        | Error::SNotFullRank { .. } => Ok((Status::HypothesisFails, json!({"reason": e.to_string()}))),
        Error::PostconditionViolated(_) => Ok((Status::Failed, json!({"reason": e.to_string()}))),
        other => Err(other.into()),
    }
}

type Outcome = Result<(Status, Value, Value), Error>;

pub fn run_job(job: &Value) -> Result<Report, CliError> {
    if !job.is_object() {
        return Err(CliError::invalid("a job must be a JSON object"));
    }
    let check = str_field(job, "check")?;
    log::debug!("theorem job: {check}");
    let result = match check {
        "prop23" => prop23(job)?,
        "thm24i" => thm24i(job)?,
        "thm24ii" => thm24ii(job)?,
        "star" => star(job)?,
        "build_u" => build_u_job(job)?,
        "thm12" => thm12(job)?,
        "thm11" => thm11(job)?,
        "thm14" => thm14(job)?,
        other => {
            return Err(CliError::invalid(format!(
                "unknown check '{other}' (expected one of {})",
                CHECKS.join(", ")
            )))
        }
    };
    let (status, witness, details) = match result {
        Ok(triple) => triple,
        Err(e) => {
            let (status, details) = classify(e)?;
            (status, Value::Null, details)
        }
    };
    Ok(Report { check: check.to_string(), status, witness, details, reproducer: job.clone() })
}

fn var(i: usize) -> Value {
    Value::String(format!("x{i}"))
}

/// `ψ: k[x1..xn] -> k[x1..xm]`, `n` the number of images, `m = |u|`.
fn psi_and_u(job: &Value) -> Result<(QAlgebraHom, QWeight), CliError> {
    let u = weight_field(job, "u")?;
    let images = zpoly_list(job, "psi", u.len())?;
    Ok((QAlgebraHom::new(u.len(), images)?, u))
}

fn prop23(job: &Value) -> Result<Outcome, CliError> {
    let (psi, u) = psi_and_u(job)?;
    let f = poly_in(str_field(job, "f")?, psi.src_nvars(), "f")?;
    Ok((|| {
        let t = build_twist(&psi, &u)?;
        let r = check_initial_compat(&t, &f)?;
        let details = json!({
            "u_psi": json::weight(t.u_psi()),
            "psi_u": json::polys(t.psi_u()),
            "source_initial": json::poly(&r.source_initial),
            "twisted": json::poly(&r.twisted),
            "image_initial": json::poly(&r.image_initial),
        });
        Ok((r.status, Value::Null, details))
    })())
}

fn thm24i(job: &Value) -> Result<Outcome, CliError> {
    let (psi, u) = psi_and_u(job)?;
    let l = usize_field(job, "l")?;
    let f = poly_in(str_field(job, "f")?, psi.src_nvars(), "f")?;
    Ok((|| {
        let t = build_twist(&psi, &u)?;
        let r = check_initial_membership(&t, l, &f)?;
        let witness = r.witness_var.map(var).unwrap_or(Value::Null);
        Ok((r.status, witness, json!({"u_psi": json::weight(t.u_psi()), "twisted": json::poly(&r.twisted)})))
    })())
}

fn nondividing_outcome(s: &[QPoly], r: NondividingReport<Rational>) -> (Status, Value, Value) {
    let witness = r.witness.map(|k| json::poly(&s[k])).unwrap_or(Value::Null);
    let details = json!({
        "witnesses": r.witnesses.iter().map(|&k| json::poly(&s[k])).collect::<Vec<_>>(),
        "basis": r.basis.iter().map(|&k| json::poly(&s[k])).collect::<Vec<_>>(),
        "initial_forms": json::polys(&r.initial_forms),
        "divides": r.divides,
        "hypothesis": r.hypothesis,
    });
    (r.status, witness, details)
}

fn thm24ii(job: &Value) -> Result<Outcome, CliError> {
    let (psi, u) = psi_and_u(job)?;
    let l = usize_field(job, "l")?;
    let n = psi.src_nvars();
    let s = poly_list(job, "S", n)?;
    let fs = poly_list(job, "fs", n)?;
    Ok((|| {
        let t = build_twist(&psi, &u)?;
        Ok(nondividing_outcome(&s, find_nondividing_twist(&t, l, &s, &fs)?))
    })())
}

/// `φ: k[x1..xn] -> k[x1..xm][z]` with `m = |v|` and `n = |w|`.
fn phi_v_w(job: &Value) -> Result<(QAlgebraHom, QWeight, QWeight), CliError> {
    let v = weight_field(job, "v")?;
    let w = weight_field(job, "w")?;
    let images = zpoly_list(job, "phi", v.len())?;
    Ok((QAlgebraHom::new(v.len(), images)?, v, w))
}

fn degs(ds: &[initforms::DegValue<Rational>]) -> Value {
    Value::Array(ds.iter().map(json::deg).collect())
}

fn star(job: &Value) -> Result<Outcome, CliError> {
    let (phi, v, w) = phi_v_w(job)?;
    Ok((|| {
        let r = check_star(&phi, &v, &w)?;
        let failure = r.failure.as_ref().map(|f| match f {
            StarFailure::Dependent => json!({"kind": "dependent"}),
            StarFailure::Degree { index, found, expected } => json!({
                "kind": "degree",
                "index": index,
                "found": json::deg(found),
                "expected": json::group(expected),
            }),
        });
        let details = json!({
            "initial_forms": json::polys(&r.initial_forms),
            "degrees": degs(&r.degrees),
            "failure": failure,
        });
        Ok((r.status, Value::Null, details))
    })())
}

fn build_u_job(job: &Value) -> Result<Outcome, CliError> {
    let (phi, v, w) = phi_v_w(job)?;
    Ok((|| {
        let d = build_u(&phi, &v, &w)?;
        let details = json!({
            "deg_v_phi": json::group(&d.deg_v_phi),
            "u": json::weight(&d.u),
            "phi_u": d.phi_u.iter().map(json::zpoly).collect::<Vec<_>>(),
            "maximizers": d.maximizers.iter().map(|&(i, j)| json!({"index": i, "z_power": j})).collect::<Vec<_>>(),
        });
        Ok((Status::Verified, Value::Null, details))
    })())
}

/// An action given either by its images (`"action"`) or by a locally
/// nilpotent derivation (`"derivation"`, exponentiated).
fn action_field(job: &Value) -> Result<QGaAction, CliError> {
    if job.get("derivation").is_some() {
        let m = json::str_list(job, "derivation")?.len();
        let lnd = QLnd::new(poly_list(job, "derivation", m)?)?;
        return Ok(lnd.exp());
    }
    let m = json::str_list(job, "action")?.len();
    Ok(QGaAction::new(zpoly_list(job, "action", m)?)?)
}

fn thm12(job: &Value) -> Result<Outcome, CliError> {
    let (phi, v, w) = if job.get("phi").is_some() {
        phi_v_w(job)?
    } else {
        let action = action_field(job)?;
        let n = usize_field(job, "n")?;
        if n == 0 || n > action.nvars() {
            return Err(CliError::invalid(format!("n must lie in 1..={}", action.nvars())));
        }
        let w = weight_field(job, "w")?;
        let v = match job.get("v") {
            Some(_) => weight_field(job, "v")?,
            None => w.padded(action.nvars()),
        };
        (action.restrict(n), v, w)
    };
    let n = phi.src_nvars();
    let s = poly_list(job, "S", n)?;
    let fs = poly_list(job, "fs", n)?;
    Ok(find_nondividing(&phi, &v, &w, &s, &fs).map(|r| nondividing_outcome(&s, r)))
}

fn thm11(job: &Value) -> Result<Outcome, CliError> {
    let action = action_field(job)?;
    let n = usize_field(job, "n")?;
    let f = poly_in(str_field(job, "f")?, n, "f")?;
    Ok(check_no_intruder_stable(&f, &action, n).map(|r| {
        let details = json!({
            "moved": var(r.moved),
            "intruders": r.intruders.iter().map(json::exponent).collect::<Vec<_>>(),
        });
        (r.status, Value::Null, details)
    }))
}

fn thm14(job: &Value) -> Result<Outcome, CliError> {
    let ap_json = job.get("ap").ok_or_else(|| CliError::invalid("missing field 'ap'"))?;
    let m = json::str_list(ap_json, "F")?.len();
    let ap = QAutomorphismPair::new(poly_list(ap_json, "F", m)?, poly_list(ap_json, "G", m)?)?;
    let n = usize_field(job, "n")?;
    let s = poly_list(job, "S", n)?;
    let w = weight_field(job, "w")?;
    let report = if job.get("fs").is_some() {
        let fs = poly_list(job, "fs", n)?;
        check_coords_instance(&ap, n, &s, &w, &fs)
    } else {
        check_stable_coordinate(&ap, n, &s, &w)
    };
    Ok(report.map(|r| nondividing_outcome(&s, r)))
}
