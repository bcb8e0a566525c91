//! Seeded generators, a curated corpus of actions and invariants, and the
//! randomized suites behind `initforms fuzz`.
//!
//! Instance `i` of a suite run with seed `s` draws from ChaCha8 seeded with
//! `s` on stream `i`, so any single instance can be regenerated on its own.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::ga::{AutomorphismPair, GaAction, Lnd};
use crate::lp::{phase_one, Feasibility};
use crate::newton::{hull_vertices, PointSet};
use crate::poly::{parse_poly, AlgebraHom, Exponent, Poly, ZPoly};
use crate::report::Status;
use crate::scalar::Scalar;
use crate::theorems::{
    build_twist, build_u, check_initial_compat, check_initial_membership, check_no_intruder_stable,
    find_nondividing,
};
use crate::weights::{check_sum_initial, initial_form, weighted_initial, GroupElem, Weight};
use crate::Rational as Q;

pub type FuzzRng = ChaCha8Rng;

/// The generator for instance `index` of a run seeded with `seed`.
pub fn instance_rng(seed: u64, index: u64) -> FuzzRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// A small nonzero rational, an integer three times out of four.
pub fn random_coeff<R: Rng>(rng: &mut R) -> Q {
    let mut num = rng.gen_range(1..=6i64);
    if rng.gen_bool(0.5) {
        num = -num;
    }
    let den = if rng.gen_bool(0.75) { 1 } else { rng.gen_range(2..=3i64) };
    Q::from_int(num) / Q::from_int(den)
}

pub fn random_exponent<R: Rng>(rng: &mut R, nvars: usize, max_deg: u32) -> Exponent {
    let mut budget = rng.gen_range(0..=max_deg);
    let mut order: Vec<usize> = (0..nvars).collect();
    order.shuffle(rng);
    let mut e = vec![0u32; nvars];
    for i in order {
        let k = rng.gen_range(0..=budget);
        e[i] = k;
        budget -= k;
    }
    Exponent::new(e)
}

/// A nonzero polynomial with at most `max_terms` terms of total degree at
/// most `max_deg`.
pub fn random_poly<R: Rng>(rng: &mut R, nvars: usize, max_deg: u32, max_terms: usize) -> Poly<Q> {
    loop {
        let count = rng.gen_range(1..=max_terms.max(1));
        let terms: Vec<(Exponent, Q)> =
            (0..count).map(|_| (random_exponent(rng, nvars, max_deg), random_coeff(rng))).collect();
        let p = Poly::from_terms(nvars, terms).expect("arity matches");
        if !p.is_zero() {
            return p;
        }
    }
}

/// Entries in `[-3, 3]`, occasionally halved.
pub fn random_weight<R: Rng>(rng: &mut R, nvars: usize, dim: usize) -> Weight<Q> {
    let per_var = (0..nvars)
        .map(|_| {
            GroupElem::new(
                (0..dim)
                    .map(|_| {
                        let v = Q::from_int(rng.gen_range(-3..=3i64));
                        if rng.gen_bool(0.2) {
                            v / Q::from_int(2)
                        } else {
                            v
                        }
                    })
                    .collect(),
            )
        })
        .collect();
    Weight::new(dim, per_var).expect("uniform dimension")
}

pub fn random_psi<R: Rng>(rng: &mut R, n: usize, m: usize, max_deg: u32, max_terms: usize) -> AlgebraHom<Q> {
    let images = (0..n).map(|_| random_poly(rng, m, max_deg, max_terms)).collect();
    AlgebraHom::from_polys(m, images).expect("arity matches")
}

/// `D(x1)` constant, `D(x_i) ∈ k[x1..x_{i-1}]` of degree at most `max_deg`.
pub fn random_triangular_lnd<R: Rng>(rng: &mut R, m: usize, max_deg: u32, max_terms: usize) -> Lnd<Q> {
    let mut images = Vec::with_capacity(m);
    for i in 0..m {
        let img = if i == 0 {
            if rng.gen_bool(0.5) {
                Poly::constant(m, random_coeff(rng))
            } else {
                Poly::zero(m)
            }
        } else if rng.gen_bool(0.15) {
            Poly::zero(m)
        } else {
            random_poly(rng, i, max_deg, max_terms).embed(m)
        };
        images.push(img);
    }
    Lnd::new(images).expect("triangular derivations are locally nilpotent")
}

pub fn random_point_set<R: Rng>(rng: &mut R, dim: usize, max_points: usize, max_coord: u32) -> PointSet {
    let count = rng.gen_range(1..=max_points);
    let points = (0..count).map(|_| Exponent::new((0..dim).map(|_| rng.gen_range(0..=max_coord)).collect()));
    PointSet::new(dim, points).expect("uniform dimension")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MutantKind {
    /// A z-free term added to one image.
    Counit,
    /// `c z^k`, `k >= 2`, added to the last image.
    Coassoc,
}

/// Breaks one axiom of a triangular coaction. Returns the mutated images and
/// the 1-based index the validator must report.
pub fn mutate<R: Rng>(rng: &mut R, images: &[ZPoly<Q>], kind: MutantKind) -> (Vec<ZPoly<Q>>, usize) {
    let m = images.len();
    let mut out = images.to_vec();
    match kind {
        MutantKind::Counit => {
            let i = rng.gen_range(0..m);
            let extra = ZPoly::from_poly(random_poly(rng, m, 2, 2));
            out[i] = out[i].checked_add(&extra).expect("same arity");
            (out, i + 1)
        }
        MutantKind::Coassoc => {
            let k = rng.gen_range(2..=3u32);
            let mut flat = vec![0u32; m + 1];
            flat[m] = k;
            let extra = ZPoly::from_flat(&Poly::monomial(m + 1, Exponent::new(flat), random_coeff(rng)));
            out[m - 1] = out[m - 1].checked_add(&extra).expect("same arity");
            (out, m)
        }
    }
}

/// An action on `k[x1..xm]` together with `n` such that some `x_i`,
/// `i <= n`, is moved, and invariants in `k[x1..xn]` generating part of the
/// kernel.
#[derive(Clone, Debug)]
pub struct CorpusAction {
    pub name: &'static str,
    pub action: GaAction<Q>,
    pub n: usize,
    pub kernel: Vec<Poly<Q>>,
}

fn polys(ss: &[&str], n: usize) -> Vec<Poly<Q>> {
    ss.iter().map(|s| parse_poly(s, n).expect("corpus literal")).collect()
}

fn lnd_entry(name: &'static str, d: &[&str], n: usize, kernel: &[&str]) -> CorpusAction {
    let m = d.len();
    let action = Lnd::new(polys(d, m)).expect("corpus derivation").exp();
    CorpusAction { name, action, n, kernel: polys(kernel, n) }
}

fn pair_entry(name: &'static str, f: &[&str], g: &[&str], n: usize, kernel: &[&str]) -> CorpusAction {
    let m = f.len();
    let ap = AutomorphismPair::new(polys(f, m), polys(g, m)).expect("corpus automorphism");
    CorpusAction { name, action: ap.translation_action(), n, kernel: polys(kernel, n) }
}

/// The curated suite: triangular derivations on two and three variables,
/// some viewed inside a larger ring, and conjugated translations.
pub fn curated_actions() -> Vec<CorpusAction> {
    vec![
        lnd_entry("lnd-basic-2", &["0", "x1"], 2, &["x1"]),
        lnd_entry("lnd-swapped-2", &["x2", "0"], 2, &["x2"]),
        lnd_entry("lnd-square-2", &["0", "x1^2 + 1"], 2, &["x1"]),
        lnd_entry("lnd-basic-3", &["0", "x1", "x2"], 3, &["x1", "x2^2 - 2*x1*x3"]),
        lnd_entry("lnd-quadratic-3", &["0", "x1^2", "x2"], 3, &["x1", "x2^2 - 2*x1^2*x3"]),
        lnd_entry("lnd-two-chains-3", &["0", "x1", "x1"], 3, &["x1", "x2 - x3"]),
        lnd_entry("lnd-restricted-3-to-2", &["0", "x1", "x2"], 2, &["x1"]),
        lnd_entry("lnd-restricted-4-to-3", &["0", "x1", "x2", "x3"], 3, &["x1", "x2^2 - 2*x1*x3"]),
        lnd_entry(
            "lnd-basic-4",
            &["0", "x1", "x2", "x3"],
            4,
            &["x1", "x2^2 - 2*x1*x3", "x2^3 - 3*x1*x2*x3 + 3*x1^2*x4"],
        ),
        lnd_entry("lnd-hidden-variable", &["0", "x3", "0"], 2, &["x1"]),
        pair_entry("pair-swap-square", &["x2", "x1 + x2^2"], &["x2 - x1^2", "x1"], 2, &["x1 + x2^2"]),
        pair_entry(
            "pair-triangular-3",
            &["x1", "x2 + x1^2", "x3 + x1*x2"],
            &["x1", "x2 - x1^2", "x3 - x1*x2 + x1^3"],
            3,
            &["x2 + x1^2", "x3 + x1*x2"],
        ),
        pair_entry(
            "pair-chain-3",
            &["x3", "x2 + x3^2", "x1 + x2^2"],
            &["x3 - x2^2 + 2*x1^2*x2 - x1^4", "x2 - x1^2", "x1"],
            2,
            &["x1 + x2^2"],
        ),
        pair_entry(
            "pair-chain-3-full",
            &["x3", "x2 + x3^2", "x1 + x2^2"],
            &["x3 - x2^2 + 2*x1^2*x2 - x1^4", "x2 - x1^2", "x1"],
            3,
            &["x1 + x2^2", "x2 + x3^2"],
        ),
    ]
}

/// The kernel generators and random polynomial combinations of them, each
/// checked invariant.
pub fn corpus_invariants<R: Rng>(rng: &mut R, entry: &CorpusAction, extra: usize) -> Vec<Poly<Q>> {
    let m = entry.action.nvars();
    let mut out = entry.kernel.clone();
    let r = entry.kernel.len();
    while out.len() < entry.kernel.len() + extra {
        let q = random_poly(rng, r, 3, 4);
        let f = q.compose(&entry.kernel).expect("arity matches");
        if f.is_constant() || out.contains(&f) {
            continue;
        }
        out.push(f);
    }
    for f in &out {
        assert!(entry.action.is_invariant(&f.embed(m)).expect("arity"), "{}: {f} is not invariant", entry.name);
    }
    out
}

/// At least five weights on `n` variables, including negative, rational and
/// two-dimensional lexicographic ones.
pub fn corpus_weights(n: usize) -> Vec<Weight<Q>> {
    let cycle = |vals: &[i64]| Weight::from_ints(&(0..n).map(|i| vals[i % vals.len()]).collect::<Vec<_>>());
    let mut ws = vec![
        Weight::from_ints(&vec![1; n]),
        cycle(&[1, 2, 3, 4]),
        cycle(&[3, -1, 2, 0]),
        cycle(&[-2, 5, -1, 1]),
        Weight::zero(n, 1),
    ];
    let half = Weight::new(
        1,
        (0..n).map(|i| GroupElem::new(vec![Q::from_int(2 * i as i64 - 1) / Q::from_int(2)])).collect(),
    )
    .expect("one-dimensional");
    ws.push(half);
    let rows: Vec<Vec<i64>> = (0..n).map(|i| vec![(i % 2) as i64, i as i64 - 1]).collect();
    let row_refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    ws.push(Weight::from_rows(&row_refs).expect("two-dimensional"));
    ws
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Product,
    SumInitial,
    Hull,
    Coaction,
    Prop23,
    Thm24i,
    BuildU,
    Thm11,
    Thm13,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Product,
        Suite::SumInitial,
        Suite::Hull,
        Suite::Coaction,
        Suite::Prop23,
        Suite::Thm24i,
        Suite::BuildU,
        Suite::Thm11,
        Suite::Thm13,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Product => "product",
            Suite::SumInitial => "sum-initial",
            Suite::Hull => "hull",
            Suite::Coaction => "coaction",
            Suite::Prop23 => "prop23",
            Suite::Thm24i => "thm24i",
            Suite::BuildU => "build-u",
            Suite::Thm11 => "thm11",
            Suite::Thm13 => "thm13",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
                format!("unknown suite '{s}' (expected one of {})", names.join(", "))
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzFailure {
    pub index: u64,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub count: u64,
    pub passed: u64,
    pub hypothesis_fails: u64,
    pub failures: Vec<FuzzFailure>,
}

impl SuiteReport {
    pub fn status(&self) -> Status {
        if self.failures.is_empty() {
            Status::Verified
        } else {
            Status::Failed
        }
    }
}

/// What one instance produced.
type Outcome = std::result::Result<Status, String>;

fn err(e: Error) -> String {
    format!("unexpected error: {e}")
}

fn product_instance(rng: &mut FuzzRng) -> Outcome {
    let n = rng.gen_range(1..=4);
    let d = rng.gen_range(1..=2);
    let f = random_poly(rng, n, 3, 12);
    let g = random_poly(rng, n, 3, 12);
    let w = random_weight(rng, n, d);
    let lhs = initial_form(&(&f * &g), &w).map_err(err)?;
    let rhs = &initial_form(&f, &w).map_err(err)? * &initial_form(&g, &w).map_err(err)?;
    if lhs == rhs {
        Ok(Status::Verified)
    } else {
        Err(format!("f = {f}, g = {g}, w = {w:?}: (fg)^w = {lhs}, f^w g^w = {rhs}"))
    }
}

/// A family of up to five summands; a third of the time the last summand
/// cancels the top-degree part of the others.
pub fn random_family<R: Rng>(rng: &mut R) -> (Vec<Poly<Q>>, Weight<Q>) {
    let n = rng.gen_range(1..=3);
    let d = rng.gen_range(1..=2);
    let w = random_weight(rng, n, d);
    let l = rng.gen_range(1..=5);
    let mut fs: Vec<Poly<Q>> = (0..l).map(|_| random_poly(rng, n, 3, 4)).collect();
    if l >= 2 && rng.gen_bool(1.0 / 3.0) {
        let parts: Vec<_> = fs[..l - 1].iter().map(|f| weighted_initial(f, &w).expect("arity")).collect();
        let top = parts.iter().filter_map(|(d, _)| d.finite()).max().cloned().expect("nonzero summands");
        let mut cancel = Poly::zero(n);
        for (d, init) in &parts {
            if d.finite() == Some(&top) {
                cancel = &cancel - init;
            }
        }
        if !cancel.is_zero() {
            fs[l - 1] = cancel;
        }
    }
    (fs, w)
}

fn sum_initial_instance(rng: &mut FuzzRng) -> Outcome {
    let (fs, w) = random_family(rng);
    let r = check_sum_initial(&fs, &w).map_err(err)?;
    match r.status {
        Status::Failed => Err(format!("summands {fs:?}, w = {w:?}: top sum {} vs {}", r.top_sum, r.sum_initial)),
        s => Ok(s),
    }
}

fn hull_instance(rng: &mut FuzzRng) -> Outcome {
    let dim = rng.gen_range(1..=4);
    let ps = random_point_set(rng, dim, 12, 3);
    let certs = hull_vertices::<Q>(&ps).map_err(err)?;
    for c in &certs {
        if !c.verify(&ps) {
            return Err(format!("certificate for {:?} does not separate {ps:?}", c.vertex));
        }
    }
    for p in ps.iter() {
        if certs.iter().any(|c| &c.vertex == p) {
            continue;
        }
        // p must be a convex combination of the other points
        let others: Vec<&Exponent> = ps.iter().filter(|q| *q != p).collect();
        let mut rows: Vec<Vec<Q>> = (0..dim)
            .map(|k| others.iter().map(|q| Q::from_int(q.entries()[k] as i64)).collect())
            .collect();
        rows.push(vec![Q::from_int(1); others.len()]);
        let mut rhs: Vec<Q> = p.entries().iter().map(|&v| Q::from_int(v as i64)).collect();
        rhs.push(Q::from_int(1));
        match phase_one(&rows, &rhs) {
            Feasibility::Feasible(_) => {}
            Feasibility::Infeasible(_) => return Err(format!("{p:?} rejected but not in the hull of the rest of {ps:?}")),
        }
    }
    Ok(Status::Verified)
}

fn coaction_instance(rng: &mut FuzzRng, index: u64) -> Outcome {
    let m = rng.gen_range(1..=4);
    let lnd = random_triangular_lnd(rng, m, 3, 2);
    let images = lnd.exp_images();
    GaAction::new(images.clone()).map_err(|e| format!("D = {:?}: exp rejected: {e}", lnd.images()))?;
    let kind = if index.is_multiple_of(2) { MutantKind::Counit } else { MutantKind::Coassoc };
    let (bad, at) = mutate(rng, &images, kind);
    match (kind, GaAction::new(bad)) {
        (MutantKind::Counit, Err(Error::CounitFails(i))) if i == at => Ok(Status::Verified),
        (MutantKind::Coassoc, Err(Error::CoassocFails { index, .. })) if index == at => Ok(Status::Verified),
        (_, other) => Err(format!("D = {:?}: {kind:?} mutant at x{at} gave {:?}", lnd.images(), other.map(|_| ()))),
    }
}

fn prop23_instance(rng: &mut FuzzRng) -> Outcome {
    let n = rng.gen_range(1..=3);
    let m = rng.gen_range(1..=3);
    let psi = random_psi(rng, n, m, 4, 3);
    let d = rng.gen_range(1..=2);
    let u = random_weight(rng, m, d);
    let f = random_poly(rng, n, 4, 5);
    let t = build_twist(&psi, &u).map_err(err)?;
    let r = check_initial_compat(&t, &f).map_err(err)?;
    match r.status {
        Status::Failed => Err(format!(
            "psi = {psi:?}, u = {u:?}, f = {f}: psi(f)^u = {}, psi^u(f^u_psi) = {}",
            r.image_initial, r.twisted
        )),
        s => Ok(s),
    }
}

fn pick_corpus<R: Rng>(rng: &mut R, corpus: &[CorpusAction]) -> (CorpusAction, Poly<Q>) {
    let entry = corpus.choose(rng).expect("nonempty corpus").clone();
    let invs = corpus_invariants(rng, &entry, 1);
    let f = invs.choose(rng).expect("nonempty").clone();
    (entry, f)
}

fn thm24i_instance(rng: &mut FuzzRng, corpus: &[CorpusAction]) -> Outcome {
    let (entry, f) = pick_corpus(rng, corpus);
    let m = entry.action.nvars();
    let psi = AlgebraHom::from_polys(m + 1, entry.action.as_hom().flat_images()).map_err(err)?;
    let d = rng.gen_range(1..=2);
    let u = random_weight(rng, m + 1, d);
    let t = build_twist(&psi, &u).map_err(err)?;
    let r = check_initial_membership(&t, m, &f.embed(m)).map_err(err)?;
    match r.status {
        Status::Failed => Err(format!("{}: f = {f}, u = {u:?}: {} leaves k[x]", entry.name, r.twisted)),
        s => Ok(s),
    }
}

fn build_u_instance(rng: &mut FuzzRng, corpus: &[CorpusAction]) -> Outcome {
    let entry = corpus.choose(rng).expect("nonempty corpus");
    let ws = corpus_weights(entry.n);
    let w = ws.choose(rng).expect("nonempty");
    let m = entry.action.nvars();
    build_u(&entry.action.restrict(entry.n), &w.padded(m), w)
        .map(|_| Status::Verified)
        .map_err(|e| format!("{}: w = {w:?}: {e}", entry.name))
}

fn thm11_instance(rng: &mut FuzzRng, corpus: &[CorpusAction]) -> Outcome {
    let (entry, f) = pick_corpus(rng, corpus);
    let r = check_no_intruder_stable(&f, &entry.action, entry.n).map_err(|e| format!("{}: f = {f}: {e}", entry.name))?;
    match r.status {
        Status::Failed => Err(format!("{}: f = {f} has intruders {:?}", entry.name, r.intruders)),
        s => Ok(s),
    }
}

fn thm13_instance(rng: &mut FuzzRng, corpus: &[CorpusAction]) -> Outcome {
    let (entry, f) = pick_corpus(rng, corpus);
    let ws = corpus_weights(entry.n);
    let w = ws.choose(rng).expect("nonempty");
    let m = entry.action.nvars();
    let s: Vec<Poly<Q>> = (0..entry.n).map(|i| Poly::var(entry.n, i)).collect();
    let r = find_nondividing(&entry.action.restrict(entry.n), &w.padded(m), w, &s, std::slice::from_ref(&f))
        .map_err(|e| format!("{}: f = {f}: {e}", entry.name))?;
    match r.status {
        Status::Verified => Ok(Status::Verified),
        Status::HypothesisFails => Err(format!("{}: hypothesis failed on corpus data: {:?}", entry.name, r.hypothesis)),
        Status::Failed => Err(format!("{}: f = {f}, w = {w:?}: every x_i divides {}", entry.name, r.initial_forms[0])),
    }
}

/// Runs `count` instances of `suite`.
pub fn run_suite(suite: Suite, seed: u64, count: u64) -> SuiteReport {
    let corpus = match suite {
        Suite::Thm24i | Suite::BuildU | Suite::Thm11 | Suite::Thm13 => curated_actions(),
        _ => Vec::new(),
    };
    let mut report = SuiteReport { suite, seed, count, passed: 0, hypothesis_fails: 0, failures: Vec::new() };
    for index in 0..count {
        let mut rng = instance_rng(seed, index);
        let outcome = match suite {
            Suite::Product => product_instance(&mut rng),
            Suite::SumInitial => sum_initial_instance(&mut rng),
            Suite::Hull => hull_instance(&mut rng),
            Suite::Coaction => coaction_instance(&mut rng, index),
            Suite::Prop23 => prop23_instance(&mut rng),
            Suite::Thm24i => thm24i_instance(&mut rng, &corpus),
            Suite::BuildU => build_u_instance(&mut rng, &corpus),
            Suite::Thm11 => thm11_instance(&mut rng, &corpus),
            Suite::Thm13 => thm13_instance(&mut rng, &corpus),
        };
        match outcome {
            Ok(Status::Verified) => report.passed += 1,
            Ok(Status::HypothesisFails) => {
                log::debug!("{suite} instance {index}: hypothesis fails");
                report.hypothesis_fails += 1
            }
            Ok(Status::Failed) => unreachable!("failures carry a description"),
            Err(detail) => {
                log::warn!("{suite} instance {index}: {detail}");
                report.failures.push(FuzzFailure { index, detail })
            }
        }
    }
    report
}
