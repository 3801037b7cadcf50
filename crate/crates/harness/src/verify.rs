//! Randomized theorem sweeps.

use std::fmt::Write as _;

use collapsibility::homology::{
    is_cohen_macaulay, is_cohen_macaulay_induced, is_shedding_face, leray_brute_force,
    leray_by_links, leray_number, reduced_betti, shedding_leray_inequality_check,
};
use collapsibility::hypergraph::{
    gamma_e, gamma_i, gamma_si, gamma_tilde, mes_equal_check, neighbor_inequality_check,
    RelabeledInstance,
};
use collapsibility::invariants::{
    claim_inequality_check, collapsibility_number, d_of_ordering, tancer_inequality_check, MkSolver,
};
use collapsibility::io::Instance;
use collapsibility::{Budget, Error, Face, FacetOrdering, Field, Hypergraph, SimplicialComplex};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::generate::{generate, GeneratorSpec, Kind};
use crate::report::instance_value;
use crate::HarnessError;

/// Per-trial state handed to a check.
pub struct Ctx {
    pub budget: Budget,
    pub field: Field,
    pub rng: ChaCha8Rng,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(String),
    Skip(String),
}

type Check = fn(&Instance, &mut Ctx) -> Result<Verdict, Error>;

pub struct Theorem {
    pub name: &'static str,
    pub summary: &'static str,
    pub kind: Kind,
    /// Generator parameters other than the vertex count and seed.
    pub count: usize,
    pub max_size: usize,
    pub check: Check,
}

pub const THEOREMS: &[Theorem] = &[
    Theorem {
        name: "nc-bound",
        summary: "C(NC(H)) <= d(NC(H), NC order with the maximizing cover relabelled first) <= n - gamma_i(H) - 1",
        kind: Kind::RandomHypergraph,
        count: 8,
        max_size: 4,
        check: nc_bound,
    },
    Theorem {
        name: "mk-chain",
        summary: "L <= C <= M2 <= M1 <= M0 <= d(X, <) for three random facet orders",
        kind: Kind::RandomComplex,
        count: 7,
        max_size: 4,
        check: mk_chain,
    },
    Theorem {
        name: "kvd-equality",
        summary: "C = M1 = M'1 on 1-vertex-decomposable complexes",
        kind: Kind::RandomKvd,
        count: 8,
        max_size: 4,
        check: kvd_equality,
    },
    Theorem {
        name: "kvd-mk",
        summary: "C = M1 on 1-vertex-decomposable complexes",
        kind: Kind::RandomKvd,
        count: 8,
        max_size: 4,
        check: kvd_mk,
    },
    Theorem {
        name: "gamma-si-eq",
        summary: "gamma_i = gamma_si on graphs",
        kind: Kind::RandomGraph,
        count: 10,
        max_size: 2,
        check: gamma_si_eq,
    },
    Theorem {
        name: "tancer",
        summary: "C(X) <= max(C(del(v)), C(lk(v)) + 1) for every vertex v",
        kind: Kind::RandomComplex,
        count: 7,
        max_size: 4,
        check: tancer,
    },
    Theorem {
        name: "claim",
        summary: "C(X) <= max(C(del(s)), C(lk(s)) + dim s + 1) for faces s of dimension <= 2",
        kind: Kind::RandomComplex,
        count: 7,
        max_size: 4,
        check: claim,
    },
    Theorem {
        name: "link-deletion",
        summary: "lk(t, del(s, X)) = del(s, lk(t, X)) for disjoint nonempty faces",
        kind: Kind::RandomComplex,
        count: 7,
        max_size: 4,
        check: link_deletion,
    },
    Theorem {
        name: "open-faces-simplex",
        summary: "no open k-faces with k <= dim X implies X is a simplex",
        kind: Kind::RandomComplex,
        count: 6,
        max_size: 4,
        check: open_faces_simplex,
    },
    Theorem {
        name: "neighbor-inequality",
        summary: "|N(S) & D'| - |S| <= |D'| - gamma_D'(H) for minimal covers D, S within D, D' = V - D",
        kind: Kind::RandomHypergraph,
        count: 7,
        max_size: 4,
        check: neighbor_inequality,
    },
    Theorem {
        name: "mes-equal",
        summary: "mes agrees on NC faces whose complements agree inside the cover and contain an edge",
        kind: Kind::RandomHypergraph,
        count: 6,
        max_size: 3,
        check: mes_equal,
    },
    Theorem {
        name: "euler",
        summary: "alternating sum of face numbers equals alternating sum of reduced Betti numbers",
        kind: Kind::RandomComplex,
        count: 8,
        max_size: 5,
        check: euler,
    },
    Theorem {
        name: "leray-methods",
        summary: "Leray number from induced subcomplexes equals Leray number from links",
        kind: Kind::RandomComplex,
        count: 8,
        max_size: 5,
        check: leray_methods,
    },
    Theorem {
        name: "cm-agree",
        summary: "the link and induced-subcomplex Cohen-Macaulay predicates agree on pure complexes",
        kind: Kind::RandomPureComplex,
        count: 6,
        max_size: 3,
        check: cm_agree,
    },
    Theorem {
        name: "kim-kim",
        summary: "L(NC(H)) + gamma_E < n; with edges of size <= 3 also L + ceil(gamma_tilde/2) < n; on graphs L + gamma_si < n",
        kind: Kind::RandomHypergraph,
        count: 8,
        max_size: 3,
        check: kim_kim,
    },
    Theorem {
        name: "shedding-leray",
        summary: "L(X) >= max(L(del(s)), L(lk(s)) + |s|) for shedding faces s with Cohen-Macaulay deletion",
        kind: Kind::RandomPureComplex,
        count: 6,
        max_size: 3,
        check: shedding_leray,
    },
];

pub fn theorem(name: &str) -> Result<&'static Theorem, HarnessError> {
    THEOREMS
        .iter()
        .find(|t| t.name == name)
        .ok_or_else(|| HarnessError::UnknownTheorem(name.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub trials: usize,
    pub seed: u64,
    pub max_vertices: u32,
    pub budget: u64,
    pub field: Field,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            trials: 100,
            seed: 0,
            max_vertices: 7,
            budget: Budget::DEFAULT_NODES,
            field: Field::Rational,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum TrialOutcome {
    Pass,
    Fail { detail: String },
    Skip { reason: String },
    BudgetExhausted,
    Error { message: String },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Trial {
    pub index: usize,
    pub seed: u64,
    pub outcome: TrialOutcome,
    /// The instance in its file format.
    pub instance: Option<Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub nodes: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summary {
    pub theorem: &'static str,
    pub statement: &'static str,
    pub generator: Kind,
    pub seed: u64,
    pub trials: usize,
    pub max_vertices: u32,
    pub field: Field,
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
    pub budget_exhausted: usize,
    pub errors: usize,
    /// Trials whose generator output was filtered (isolated vertices removed).
    pub filtered: usize,
    pub nodes: u64,
    /// Failing and erroring trials.
    pub counterexamples: Vec<Trial>,
}

impl Summary {
    pub fn line(&self) -> String {
        let mut s = format!(
            "{}: {} trials, {} pass, {} fail, {} skip",
            self.theorem, self.trials, self.pass, self.fail, self.skip
        );
        if self.budget_exhausted > 0 {
            let _ = write!(s, ", {} budget-exhausted", self.budget_exhausted);
        }
        if self.errors > 0 {
            let _ = write!(s, ", {} errors", self.errors);
        }
        s
    }
}

/// Seed of trial `i`; distinct trials get well-separated seeds.
pub fn trial_seed(seed: u64, index: usize) -> u64 {
    seed.wrapping_add((index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

pub fn generator_for(t: &Theorem, opts: &VerifyOptions) -> GeneratorSpec {
    GeneratorSpec {
        vertices: opts.max_vertices,
        count: t.count,
        max_size: t.max_size,
        ..GeneratorSpec::new(t.kind)
    }
}

pub fn run_trial(t: &Theorem, opts: &VerifyOptions, index: usize) -> Trial {
    let seed = trial_seed(opts.seed, index);
    let spec = generator_for(t, opts).with_seed(seed);
    let generated = match generate(&spec) {
        Ok(g) => g,
        Err(e) => {
            return Trial {
                index,
                seed,
                outcome: TrialOutcome::Error {
                    message: e.to_string(),
                },
                instance: None,
                notes: Vec::new(),
                nodes: 0,
            }
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(1);
    let mut ctx = Ctx {
        budget: Budget::new(opts.budget),
        field: opts.field,
        rng,
    };
    let outcome = match (t.check)(&generated.instance, &mut ctx) {
        Ok(Verdict::Pass) => TrialOutcome::Pass,
        Ok(Verdict::Fail(detail)) => TrialOutcome::Fail { detail },
        Ok(Verdict::Skip(reason)) => TrialOutcome::Skip { reason },
        Err(Error::BudgetExceeded { .. }) => TrialOutcome::BudgetExhausted,
        Err(e) => TrialOutcome::Error {
            message: e.to_string(),
        },
    };
    Trial {
        index,
        seed,
        outcome,
        instance: Some(instance_value(&generated.instance)),
        notes: generated.notes,
        nodes: ctx.budget.used(),
    }
}

/// Runs the trials in parallel; results are merged in trial order.
pub fn run(t: &'static Theorem, opts: &VerifyOptions) -> Summary {
    let trials: Vec<Trial> = (0..opts.trials)
        .into_par_iter()
        .map(|i| run_trial(t, opts, i))
        .collect();
    let mut s = Summary {
        theorem: t.name,
        statement: t.summary,
        generator: t.kind,
        seed: opts.seed,
        trials: opts.trials,
        max_vertices: opts.max_vertices,
        field: opts.field,
        pass: 0,
        fail: 0,
        skip: 0,
        budget_exhausted: 0,
        errors: 0,
        filtered: 0,
        nodes: 0,
        counterexamples: Vec::new(),
    };
    for trial in trials {
        s.nodes += trial.nodes;
        if !trial.notes.is_empty() && t.kind != Kind::RandomKvd {
            s.filtered += 1;
        }
        match &trial.outcome {
            TrialOutcome::Pass => s.pass += 1,
            TrialOutcome::Skip { .. } => s.skip += 1,
            TrialOutcome::BudgetExhausted => s.budget_exhausted += 1,
            TrialOutcome::Fail { .. } => {
                s.fail += 1;
                s.counterexamples.push(trial);
            }
            TrialOutcome::Error { .. } => {
                s.errors += 1;
                s.counterexamples.push(trial);
            }
        }
    }
    s
}

fn complex_of(instance: &Instance) -> Result<&SimplicialComplex, Error> {
    match instance {
        Instance::Complex(x) => Ok(x),
        Instance::Hypergraph(_) => Err(Error::Precondition("expected a complex".to_string())),
    }
}

fn hypergraph_of(instance: &Instance) -> Result<&Hypergraph, Error> {
    match instance {
        Instance::Hypergraph(h) => Ok(h),
        Instance::Complex(_) => Err(Error::Precondition("expected a hypergraph".to_string())),
    }
}

fn verdict(ok: bool, detail: impl FnOnce() -> String) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail(detail())
    }
}

pub fn random_ordering(x: &SimplicialComplex, rng: &mut ChaCha8Rng) -> FacetOrdering {
    let mut facets = x.facets().to_vec();
    facets.shuffle(rng);
    FacetOrdering::new(x, facets).expect("a permutation of the facets")
}

/// `≺` is the NC order after relabelling the cover `V ∖ I` to `1..=|D|`,
/// where `I` attains `γ_i`.
fn nc_bound(instance: &Instance, ctx: &mut Ctx) -> Result<Verdict, Error> {
    let h = hypergraph_of(instance)?;
    let gi = gamma_i(h)?;
    let inst = RelabeledInstance::new(h, h.vertex_set().difference(gi.target))?;
    let c = collapsibility_number(&inst.complex, 0, &mut ctx.budget)?.0;
    let d = d_of_ordering(&inst.complex, &inst.ordering);
    let bound = h.n() as i64 - gi.value as i64 - 1;
    Ok(verdict(c <= d && d as i64 <= bound, || {
        format!(
            "C = {c}, d = {d}, n - gamma_i - 1 = {bound}, relabelled by {:?}",
            inst.perm
        )
    }))
}

fn mk_chain(instance: &Instance, ctx: &mut Ctx) -> Result<Verdict, Error> {
    let x = complex_of(instance)?;
    let l = leray_number(x, ctx.field)?;
    let c = collapsibility_number(x, 0, &mut ctx.budget)?.0;
    let mut solver = MkSolver::new(&mut ctx.budget);
    let m2 = solver.m(x, 2)?;
    let m1 = solver.m(x, 1)?;
    let m0 = solver.m(x, 0)?;
    for _ in 0..3 {
        let ord = random_ordering(x, &mut ctx.rng);
        let d = d_of_ordering(x, &ord);
        if !(l <= c && c <= m2 && m2 <= m1 && m1 <= m0 && m0 <= d) {
            return Ok(Verdict::Fail(format!(
                "L = {l}, C = {c}, M2 = {m2}, M1 = {m1}, M0 = {m0}, d = {d} for order {:?}",
                ord.facets()
            )));
        }
    }
    Ok(Verdict::Pass)
}

fn kvd_equality(instance: &Instance, ctx: &mut Ctx) -> Result<Verdict, Error> {
    let x = complex_of(instance)?;
    let c = collapsibility_number(x, 0, &mut ctx.budget)?.0;
    let mut solver = MkSolver::new(&mut ctx.budget);
    let m1 = solver.m(x, 1)?;
    let mp1 = solver.m_prime(x, 1)?;
    Ok(verdict(c == m1 && m1 == mp1, || {
        format!("C = {c}, M1 = {m1}, M'1 = {mp1}")
    }))
}

fn kvd_mk(instance: &Instance, ctx: &mut Ctx) -> Result<Verdict, Error> {
    let x = complex_of(instance)?;
    let c = collapsibility_number(x, 0, &mut ctx.budget)?.0;
    let m1 = MkSolver::new(&mut ctx.budget).m(x, 1)?;
    Ok(verdict(c == m1, || format!("C = {c}, M1 = {m1}")))
}

fn gamma_si_eq(instance: &Instance, _: &mut Ctx) -> Result<Verdict, Error> {
    let h = hypergraph_of(instance)?;
    let (gi, gsi) = (gamma_i(h)?.value, gamma_si(h)?.value);
    Ok(verdict(gi == gsi, || {
        format!("gamma_i = {gi}, gamma_si = {gsi}")
    }))
}

fn tancer(instance: &Instance, ctx: &mut Ctx) -> Result<Verdict, Error> {
    let x = complex_of(instance)?;
    for v in x.vertices().iter() {
        if !tancer_inequality_check(x, v, &mut ctx.budget)? {
            return Ok(Verdict::Fail(format!("fails at vertex {v}")));
        }
    }
    Ok(Verdict::Pass)
}

fn claim(instance: &Instance, ctx: &mut Ctx) -> Result<Verdict, Error> {
    let x = complex_of(instance)?;
    for sigma in x.all_faces() {
        if sigma.is_empty() || sigma.dim() > 2 {
            continue;
        }
        if !claim_inequality_check(x, sigma, &mut ctx.budget)? {
            return Ok(Verdict::Fail(format!("fails at face {sigma}")));
        }
    }
    Ok(Verdict::Pass)
}

fn link_deletion(instance: &Instance, _: &mut Ctx) -> Result<Verdict, Error> {
    let x = complex_of(instance)?;
    let faces: Vec<Face> = x
        .all_faces()
        .into_iter()
        .filter(|f| !f.is_empty())
        .collect();
    for &s in &faces {
        let del = x.deletion(s)?;
        for &t in faces.iter().filter(|t| t.is_disjoint(s)) {
            if del.link(t)? != x.link(t)?.deletion(s)? {
                return Ok(Verdict::Fail(format!("s = {s}, t = {t}")));
            }
        }
    }
    Ok(Verdict::Pass)
}

fn open_faces_simplex(instance: &Instance, _: &mut Ctx) -> Result<Verdict, Error> {
    let x = complex_of(instance)?;
    if x.is_simplex() {
        return Ok(Verdict::Skip("already a simplex".to_string()));
    }
    for k in 0..=x.dim().max(0) as usize {
        if x.open_k_faces(k).is_empty() {
            return Ok(Verdict::Fail(format!("no open {k}-faces in a non-simplex")));
        }
    }
    Ok(Verdict::Pass)
}

fn neighbor_inequality(instance: &Instance, _: &mut Ctx) -> Result<Verdict, Error> {
    let h = hypergraph_of(instance)?;
    for d in h.minimal_covers() {
        for s in d.subsets() {
            if !neighbor_inequality_check(h, d, s)? {
                return Ok(Verdict::Fail(format!("D = {d}, S = {s}")));
            }
        }
    }
    Ok(Verdict::Pass)
}

fn mes_equal(instance: &Instance, _: &mut Ctx) -> Result<Verdict, Error> {
    let h = hypergraph_of(instance)?;
    let d = h.vertex_set().difference(gamma_i(h)?.target);
    let inst = RelabeledInstance::new(h, d)?;
    let faces = inst.complex.all_faces();
    let mut qualifying = 0usize;
    for &g in &faces {
        for &g2 in &faces {
            match mes_equal_check(&inst, g, g2) {
                Ok(true) => qualifying += 1,
                Ok(false) => {
                    return Ok(Verdict::Fail(format!(
                        "relabelled by {:?}: mes({g}) != mes({g2})",
                        inst.perm
                    )))
                }
                Err(Error::Precondition(_)) => {}
                Err(e) => return Err(e),
            }
        }
    }
    if qualifying == 0 {
        Ok(Verdict::Skip("no qualifying pair".to_string()))
    } else {
        Ok(Verdict::Pass)
    }
}

fn euler(instance: &Instance, ctx: &mut Ctx) -> Result<Verdict, Error> {
    let x = complex_of(instance)?;
    let from_faces: i64 = (-1..=x.dim().max(-1))
        .map(|i| {
            let f = x.faces(i).len() as i64;
            if i.rem_euclid(2) == 0 {
                f
            } else {
                -f
            }
        })
        .sum();
    let from_betti = reduced_betti(x, ctx.field).reduced_euler_characteristic();
    Ok(verdict(from_faces == from_betti, || {
        format!("face count gives {from_faces}, Betti numbers give {from_betti}")
    }))
}

fn leray_methods(instance: &Instance, ctx: &mut Ctx) -> Result<Verdict, Error> {
    let x = complex_of(instance)?;
    let brute = leray_brute_force(x, ctx.field)?;
    let links = leray_by_links(x, ctx.field);
    Ok(verdict(brute == links, || {
        format!("induced subcomplexes give {brute}, links give {links}")
    }))
}

fn cm_agree(instance: &Instance, ctx: &mut Ctx) -> Result<Verdict, Error> {
    let x = complex_of(instance)?;
    let by_links = is_cohen_macaulay(x, ctx.field);
    let induced = is_cohen_macaulay_induced(x, ctx.field)?;
    Ok(verdict(by_links == induced, || {
        format!("link predicate {by_links}, induced predicate {induced}")
    }))
}

fn kim_kim(instance: &Instance, ctx: &mut Ctx) -> Result<Verdict, Error> {
    let h = hypergraph_of(instance)?;
    let n = h.n() as usize;
    let l = leray_number(&h.non_cover_complex(), ctx.field)?;
    let max_edge = h.edges().iter().map(|e| e.len()).max().unwrap_or(0);
    let ge = gamma_e(h)?.value;
    if l + ge >= n {
        return Ok(Verdict::Fail(format!("L = {l}, gamma_E = {ge}, n = {n}")));
    }
    if max_edge <= 3 {
        let gt = gamma_tilde(h)?.value;
        if l + gt.div_ceil(2) >= n {
            return Ok(Verdict::Fail(format!(
                "L = {l}, gamma_tilde = {gt}, n = {n}"
            )));
        }
    }
    if max_edge <= 2 {
        let gsi = gamma_si(h)?.value;
        if l + gsi >= n {
            return Ok(Verdict::Fail(format!("L = {l}, gamma_si = {gsi}, n = {n}")));
        }
    }
    Ok(Verdict::Pass)
}

fn shedding_leray(instance: &Instance, ctx: &mut Ctx) -> Result<Verdict, Error> {
    let x = complex_of(instance)?;
    let mut checked = 0usize;
    for sigma in x.all_faces() {
        if !is_shedding_face(x, sigma) {
            continue;
        }
        match shedding_leray_inequality_check(x, sigma, ctx.field) {
            Ok(true) => checked += 1,
            Ok(false) => return Ok(Verdict::Fail(format!("fails at shedding face {sigma}"))),
            Err(Error::Precondition(_)) => {}
            Err(e) => return Err(e),
        }
    }
    if checked == 0 {
        Ok(Verdict::Skip(
            "no shedding face with Cohen-Macaulay deletion".to_string(),
        ))
    } else {
        Ok(Verdict::Pass)
    }
}
