//! Search for complexes with `M_k(X) < M_{k-1}(X)`.

use collapsibility::invariants::MkSolver;
use collapsibility::io::Instance;
use collapsibility::{named, Budget, Error, SimplicialComplex};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::generate::{generate, GeneratorSpec, Kind};
use crate::report::instance_value;
use crate::verify::trial_seed;
use crate::HarnessError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub k: usize,
    pub trials: usize,
    pub seed: u64,
    pub max_vertices: u32,
    pub max_facets: usize,
    pub budget: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            k: 2,
            trials: 100,
            seed: 0,
            max_vertices: 7,
            max_facets: 8,
            budget: Budget::DEFAULT_NODES,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Candidate {
    /// Trial index, or the example name.
    pub source: String,
    pub seed: Option<u64>,
    pub instance: Value,
    pub m_k: usize,
    pub m_k_minus_1: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchSummary {
    pub k: usize,
    pub seed: u64,
    pub trials: usize,
    pub named_examples: Vec<String>,
    pub examined: usize,
    pub budget_exhausted: usize,
    /// Candidates confirmed by a recomputation with fresh memo tables.
    pub candidates: Vec<Candidate>,
    /// Candidates the recomputation did not confirm.
    pub rejected: Vec<Candidate>,
}

/// `(M_k, M_{k-1})` with one shared memo.
fn pair(x: &SimplicialComplex, k: usize, budget: u64) -> Result<(usize, usize), Error> {
    let mut budget = Budget::new(budget);
    let mut solver = MkSolver::new(&mut budget);
    Ok((solver.m(x, k)?, solver.m(x, k - 1)?))
}

/// Recomputes both values with separate fresh solvers, `M_{k-1}` first.
fn confirm(x: &SimplicialComplex, k: usize, budget: u64) -> Result<(usize, usize), Error> {
    let lower = MkSolver::new(&mut Budget::new(budget)).m(x, k - 1)?;
    let upper = MkSolver::new(&mut Budget::new(budget)).m(x, k)?;
    Ok((upper, lower))
}

enum Probe {
    Plain,
    Exhausted,
    Found(Candidate, bool),
}

fn probe(
    x: &SimplicialComplex,
    k: usize,
    budget: u64,
    source: String,
    seed: Option<u64>,
) -> Result<Probe, HarnessError> {
    let (m_k, m_k_minus_1) = match pair(x, k, budget) {
        Ok(p) => p,
        Err(Error::BudgetExceeded { .. }) => return Ok(Probe::Exhausted),
        Err(e) => return Err(e.into()),
    };
    if m_k >= m_k_minus_1 {
        return Ok(Probe::Plain);
    }
    let candidate = Candidate {
        source,
        seed,
        instance: instance_value(&Instance::Complex(x.clone())),
        m_k,
        m_k_minus_1,
    };
    let confirmed = match confirm(x, k, budget) {
        Ok(again) => again == (m_k, m_k_minus_1),
        Err(Error::BudgetExceeded { .. }) => return Ok(Probe::Exhausted),
        Err(e) => return Err(e.into()),
    };
    Ok(Probe::Found(candidate, confirmed))
}

/// Named examples (only for `k = 1`, as a sanity check of the search) and
/// then `trials` random complexes.
pub fn search(opts: &SearchOptions) -> Result<SearchSummary, HarnessError> {
    if opts.k == 0 {
        return Err(HarnessError::InvalidSpec("search needs k >= 1".to_string()));
    }
    let named_examples: Vec<String> = if opts.k == 1 {
        vec![
            "v6f10-6".to_string(),
            "cycle-4".to_string(),
            "sphere-4".to_string(),
        ]
    } else {
        Vec::new()
    };
    let mut probes = Vec::new();
    for name in &named_examples {
        let x = named::by_name(name).expect("known example");
        probes.push(probe(&x, opts.k, opts.budget, name.clone(), None)?);
    }
    let spec = GeneratorSpec {
        vertices: opts.max_vertices,
        count: opts.max_facets,
        max_size: opts.max_vertices as usize,
        ..GeneratorSpec::new(Kind::RandomComplex)
    };
    let random: Vec<Result<Probe, HarnessError>> = (0..opts.trials)
        .into_par_iter()
        .map(|i| {
            let seed = trial_seed(opts.seed, i);
            let Instance::Complex(x) = generate(&spec.with_seed(seed))?.instance else {
                unreachable!("random-complex yields complexes")
            };
            probe(&x, opts.k, opts.budget, format!("trial {i}"), Some(seed))
        })
        .collect();
    for p in random {
        probes.push(p?);
    }
    let mut summary = SearchSummary {
        k: opts.k,
        seed: opts.seed,
        trials: opts.trials,
        named_examples,
        examined: probes.len(),
        budget_exhausted: 0,
        candidates: Vec::new(),
        rejected: Vec::new(),
    };
    for p in probes {
        match p {
            Probe::Plain => {}
            Probe::Exhausted => summary.budget_exhausted += 1,
            Probe::Found(c, true) => summary.candidates.push(c),
            Probe::Found(c, false) => summary.rejected.push(c),
        }
    }
    Ok(summary)
}
