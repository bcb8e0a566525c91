//! Instance checkers for the non-divisibility statements. Every checker first
//! re-verifies the hypotheses on the supplied data and reports
//! `HypothesisFails` (with the reason) when one does not hold; only then is a
//! missing witness reported as `Failed`.

use crate::error::{Error, Result};
use crate::ga::{stable_invariant_witness, AutomorphismPair, GaAction, StableWitness};
use crate::newton::intruders;
use crate::poly::{algebraically_independent, check_arity, AlgebraHom, Exponent, Poly};
use crate::report::Status;
use crate::scalar::Scalar;
use crate::weights::{initial_form, Weight};

use super::phi::{build_u, check_star};
use super::twist::TwistData;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NondividingReport<S: Scalar> {
    pub status: Status,
    /// Index into `S` of the first element dividing none of the initial forms.
    pub witness: Option<usize>,
    /// All such indices.
    pub witnesses: Vec<usize>,
    /// Indices into `S` of `n` algebraically independent elements.
    pub basis: Vec<usize>,
    /// The initial form of each supplied invariant.
    pub initial_forms: Vec<Poly<S>>,
    /// `divides[g][f]`: whether `S[g]` divides `initial_forms[f]`.
    pub divides: Vec<Vec<bool>>,
    /// The hypothesis that failed, for `HypothesisFails` reports.
    pub hypothesis: Option<String>,
}

impl<S: Scalar> NondividingReport<S> {
    fn hypothesis_fails(basis: Vec<usize>, reason: String) -> Self {
        NondividingReport {
            status: Status::HypothesisFails,
            witness: None,
            witnesses: Vec::new(),
            basis,
            initial_forms: Vec::new(),
            divides: Vec::new(),
            hypothesis: Some(reason),
        }
    }
}

/// Greedily picks algebraically independent elements of `s`. Algebraic
/// independence is a matroid, so greedy selection reaches the full rank.
pub fn independent_subset<S: Scalar>(s: &[Poly<S>]) -> Result<Vec<usize>> {
    let nvars = s.first().map_or(0, Poly::nvars);
    let mut chosen: Vec<usize> = Vec::new();
    for (i, g) in s.iter().enumerate() {
        if chosen.len() == nvars {
            break;
        }
        let mut trial: Vec<Poly<S>> = chosen.iter().map(|&k| s[k].clone()).collect();
        trial.push(g.clone());
        if algebraically_independent(&trial)? {
            chosen.push(i);
        }
    }
    Ok(chosen)
}

fn validate_inputs<S: Scalar>(n: usize, s: &[Poly<S>], fs: &[Poly<S>]) -> Result<Vec<usize>> {
    if fs.is_empty() {
        return Err(Error::EmptyInvariantList);
    }
    for p in s.iter().chain(fs) {
        check_arity(n, p.nvars())?;
    }
    if s.iter().any(Poly::is_zero) {
        return Err(Error::PreconditionFails("S contains the zero polynomial".into()));
    }
    let basis = independent_subset(s)?;
    if basis.len() < n {
        return Err(Error::SNotFullRank { needed: n });
    }
    Ok(basis)
}

fn search<S: Scalar>(s: &[Poly<S>], initial_forms: Vec<Poly<S>>, basis: Vec<usize>) -> Result<NondividingReport<S>> {
    let mut divides = Vec::with_capacity(s.len());
    for g in s {
        let row = initial_forms.iter().map(|f| f.is_divisible_by(g)).collect::<Result<Vec<_>>>()?;
        divides.push(row);
    }
    let witnesses: Vec<usize> = (0..s.len()).filter(|&g| divides[g].iter().all(|d| !d)).collect();
    let witness = witnesses.first().copied();
    let status = if witness.is_some() { Status::Verified } else { Status::Failed };
    Ok(NondividingReport { status, witness, witnesses, basis, initial_forms, divides, hypothesis: None })
}

/// For `φ: k[x1..xn] -> k[y1..ym][z]` satisfying (*) for `(v, w)` and not
/// mapping into `k[y]`, finds `g ∈ S` dividing no `f^w` with `f` among the
/// supplied invariants (`φ(f)` free of z).
pub fn find_nondividing<S: Scalar>(
    phi: &AlgebraHom<S>,
    v: &Weight<S>,
    w: &Weight<S>,
    s: &[Poly<S>],
    fs: &[Poly<S>],
) -> Result<NondividingReport<S>> {
    let n = phi.src_nvars();
    check_arity(n, w.len())?;
    check_arity(phi.target_nvars(), v.len())?;
    let basis = validate_inputs(n, s, fs)?;
    if phi.is_z_free() {
        return Ok(NondividingReport::hypothesis_fails(basis, "phi(k[x]) is contained in k[y]".into()));
    }
    let star = check_star(phi, v, w)?;
    if let Some(failure) = star.failure {
        return Ok(NondividingReport::hypothesis_fails(basis, format!("condition (*) fails: {failure}")));
    }
    for (k, f) in fs.iter().enumerate() {
        if f.is_zero() {
            return Ok(NondividingReport::hypothesis_fails(basis, format!("invariant {} is zero", k + 1)));
        }
        if !phi.substitute(f)?.is_z_free() {
            return Ok(NondividingReport::hypothesis_fails(basis, format!("invariant {} is not invariant: {f}", k + 1)));
        }
    }
    // u_φ = w, so the twisted statement is about f^w.
    build_u(phi, v, w)?;
    let initial_forms = fs.iter().map(|f| initial_form(f, w)).collect::<Result<Vec<_>>>()?;
    search(s, initial_forms, basis)
}

/// The twisted form: for `ψ^u` injective with image not inside
/// `k[y1..yl]`, finds `g ∈ S` dividing no `f^{u_ψ}` with `ψ(f) ∈ k[y1..yl]`.
pub fn find_nondividing_twist<S: Scalar>(
    t: &TwistData<S>,
    l: usize,
    s: &[Poly<S>],
    fs: &[Poly<S>],
) -> Result<NondividingReport<S>> {
    let n = t.src_nvars();
    let basis = validate_inputs(n, s, fs)?;
    let injective = match algebraically_independent(t.psi_u()) {
        Ok(b) => b,
        Err(Error::TooManyPolys { .. }) => false,
        Err(e) => return Err(e),
    };
    if !injective {
        return Ok(NondividingReport::hypothesis_fails(basis, "psi^u is not injective".into()));
    }
    if t.psi_u().iter().all(|p| p.uses_only_first(l)) {
        return Ok(NondividingReport::hypothesis_fails(basis, format!("psi^u(k[x]) is contained in k[y1..y{l}]")));
    }
    for (k, f) in fs.iter().enumerate() {
        if f.is_zero() {
            return Ok(NondividingReport::hypothesis_fails(basis, format!("invariant {} is zero", k + 1)));
        }
        if !t.apply_psi(f)?.uses_only_first(l) {
            return Ok(NondividingReport::hypothesis_fails(
                basis,
                format!("psi(f) leaves k[y1..y{l}] for invariant {}", k + 1),
            ));
        }
    }
    let initial_forms = fs.iter().map(|f| initial_form(f, t.u_psi())).collect::<Result<Vec<_>>>()?;
    search(s, initial_forms, basis)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NoIntruderReport {
    pub status: Status,
    /// `x_moved` (1-based) is moved by the witnessing action.
    pub moved: usize,
    pub intruders: Vec<Exponent>,
}

/// For `f ∈ k[x1..xn]` witnessed stable by `action`, checks that `New(f)`
/// has no intruder.
pub fn check_no_intruder_stable<S: Scalar>(f: &Poly<S>, action: &GaAction<S>, n: usize) -> Result<NoIntruderReport> {
    let moved = match stable_invariant_witness(action, f, n)? {
        StableWitness::Verified { moved } => moved,
        StableWitness::NotInvariant => return Err(Error::WitnessInvalid("f is not invariant".into())),
        StableWitness::NotProper => {
            return Err(Error::WitnessInvalid(format!("every x_i with i <= {n} is invariant")))
        }
    };
    let found = intruders(f)?;
    let status = if found.is_empty() { Status::Verified } else { Status::Failed };
    Ok(NoIntruderReport { status, moved, intruders: found })
}

/// Translating `f_1` in the coordinate system `ap`: when `k[x1..xn]` is not
/// inside `k[f_2..f_m]`, some `g ∈ S` divides no `f^w` for the supplied
/// invariants `f ∈ k[x1..xn] ∩ k[f_2..f_m]`. Uses `v = (w, 0, ..., 0)`.
pub fn check_coords_instance<S: Scalar>(
    ap: &AutomorphismPair<S>,
    n: usize,
    s: &[Poly<S>],
    w: &Weight<S>,
    fs: &[Poly<S>],
) -> Result<NondividingReport<S>> {
    let m = ap.nvars();
    if n == 0 || n > m {
        return Err(Error::ArityMismatch { expected: m, found: n });
    }
    check_arity(n, w.len())?;
    let basis = validate_inputs(n, s, fs)?;
    let action = ap.translation_action();
    if (0..n).all(|i| action.is_invariant(&Poly::var(m, i)).unwrap_or(true)) {
        return Ok(NondividingReport::hypothesis_fails(
            basis,
            format!("k[x1..x{n}] is contained in k[f2..f{m}]"),
        ));
    }
    for (k, f) in fs.iter().enumerate() {
        if !action.is_invariant(&f.embed(m))? {
            return Ok(NondividingReport::hypothesis_fails(basis, format!("invariant {} is not in k[f2..f{m}]", k + 1)));
        }
    }
    find_nondividing(&action.restrict(n), &w.padded(m), w, s, fs)
}

/// `f_1` of `ap` as the sole invariant sample, in the coordinate system
/// where another coordinate is translated. The translated coordinate is the
/// first `f_j`, `j >= 2`, whose translation moves some `x_i`, `i <= n`.
pub fn check_stable_coordinate<S: Scalar>(
    ap: &AutomorphismPair<S>,
    n: usize,
    s: &[Poly<S>],
    w: &Weight<S>,
) -> Result<NondividingReport<S>> {
    let m = ap.nvars();
    if n == 0 || n > m {
        return Err(Error::ArityMismatch { expected: m, found: n });
    }
    let f = ap.forward()[0]
        .restrict(n)
        .ok_or_else(|| Error::PreconditionFails(format!("f1 is not in k[x1..x{n}]")))?;
    let mut fallback = None;
    for j in 1..m {
        let swapped = ap.swap_coordinates(0, j)?;
        let report = check_coords_instance(&swapped, n, s, w, std::slice::from_ref(&f))?;
        if report.status != Status::HypothesisFails {
            return Ok(report);
        }
        fallback.get_or_insert(report);
    }
    match fallback {
        Some(r) => Ok(r),
        None => {
            let basis = validate_inputs(n, s, std::slice::from_ref(&f))?;
            Ok(NondividingReport::hypothesis_fails(basis, "no other coordinate to translate".into()))
        }
    }
}
