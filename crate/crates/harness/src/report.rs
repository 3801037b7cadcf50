//! Invariant evaluation and the JSON report.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use collapsibility::homology::{
    is_cohen_macaulay, is_cohen_macaulay_induced, is_k_vertex_decomposable, is_shellable,
    leray_by_links, leray_number, reduced_betti,
};
use collapsibility::hypergraph::{gamma_e, gamma_i, gamma_si, gamma_tilde, RelabeledInstance};
use collapsibility::invariants::{d_of_ordering, is_d_collapsible, MkSolver};
use collapsibility::io::{ComplexFile, HypergraphFile, Instance, LoadReport};
use collapsibility::{Budget, Error, FacetOrdering, Field, SimplicialComplex};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::HarnessError;

pub const SCHEMA: &str = "collapsibility-report/1";

/// A requested invariant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Invariant {
    Collapsibility,
    M(usize),
    MPrime(usize),
    /// `d(X, ≺)` for the canonical ordering. For hypergraphs, the `NC` order
    /// after relabelling the cover `V ∖ I` to `1..=|D|`, with `I` attaining
    /// `γ_i`.
    D,
    Leray,
    Betti,
    CohenMacaulay,
    CohenMacaulayInduced,
    Shellable,
    Kvd(usize),
    Dim,
    FVector,
    GammaI,
    GammaSi,
    GammaTilde,
    GammaE,
    /// `n − γ_i(H) − 1`.
    NcBound,
}

impl Invariant {
    pub const COMPLEX_DEFAULT: &'static [Invariant] = &[
        Invariant::Dim,
        Invariant::FVector,
        Invariant::Betti,
        Invariant::Leray,
        Invariant::Collapsibility,
        Invariant::M(0),
        Invariant::M(1),
        Invariant::M(2),
        Invariant::MPrime(1),
        Invariant::D,
        Invariant::CohenMacaulay,
        Invariant::Shellable,
        Invariant::Kvd(0),
        Invariant::Kvd(1),
    ];

    pub const HYPERGRAPH_EXTRA: &'static [Invariant] = &[
        Invariant::GammaI,
        Invariant::GammaSi,
        Invariant::GammaTilde,
        Invariant::GammaE,
        Invariant::NcBound,
    ];

    pub fn is_hypergraph_only(self) -> bool {
        Self::HYPERGRAPH_EXTRA.contains(&self)
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Invariant::Collapsibility => f.write_str("C"),
            Invariant::M(k) => write!(f, "M{k}"),
            Invariant::MPrime(k) => write!(f, "M'{k}"),
            Invariant::D => f.write_str("d"),
            Invariant::Leray => f.write_str("leray"),
            Invariant::Betti => f.write_str("betti"),
            Invariant::CohenMacaulay => f.write_str("cm"),
            Invariant::CohenMacaulayInduced => f.write_str("cm-induced"),
            Invariant::Shellable => f.write_str("shellable"),
            Invariant::Kvd(k) => write!(f, "kvd{k}"),
            Invariant::Dim => f.write_str("dim"),
            Invariant::FVector => f.write_str("f-vector"),
            Invariant::GammaI => f.write_str("gamma_i"),
            Invariant::GammaSi => f.write_str("gamma_si"),
            Invariant::GammaTilde => f.write_str("gamma_tilde"),
            Invariant::GammaE => f.write_str("gamma_E"),
            Invariant::NcBound => f.write_str("nc-bound"),
        }
    }
}

impl FromStr for Invariant {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || HarnessError::UnknownInvariant(s.to_string());
        let index = |rest: &str| rest.parse::<usize>().map_err(|_| unknown());
        Ok(match s {
            "C" => Invariant::Collapsibility,
            "d" => Invariant::D,
            "leray" | "L" => Invariant::Leray,
            "betti" => Invariant::Betti,
            "cm" => Invariant::CohenMacaulay,
            "cm-induced" => Invariant::CohenMacaulayInduced,
            "shellable" => Invariant::Shellable,
            "dim" => Invariant::Dim,
            "f-vector" => Invariant::FVector,
            "gamma_i" => Invariant::GammaI,
            "gamma_si" => Invariant::GammaSi,
            "gamma_tilde" => Invariant::GammaTilde,
            "gamma_E" | "gamma_e" => Invariant::GammaE,
            "nc-bound" => Invariant::NcBound,
            _ => {
                if let Some(rest) = s.strip_prefix("M'").or_else(|| s.strip_prefix("Mp")) {
                    Invariant::MPrime(index(rest)?)
                } else if let Some(rest) = s.strip_prefix('M') {
                    Invariant::M(index(rest)?)
                } else if let Some(rest) = s.strip_prefix("kvd") {
                    Invariant::Kvd(index(rest)?)
                } else {
                    return Err(unknown());
                }
            }
        })
    }
}

/// Parses a comma-separated list; `all` expands to the defaults for `format`.
pub fn parse_invariants(list: &str, instance: &Instance) -> Result<Vec<Invariant>, HarnessError> {
    let mut out = Vec::new();
    for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if name == "all" {
            out.extend_from_slice(Invariant::COMPLEX_DEFAULT);
            if matches!(instance, Instance::Hypergraph(_)) {
                out.extend_from_slice(Invariant::HYPERGRAPH_EXTRA);
            }
        } else {
            out.push(name.parse()?);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    BudgetExhausted,
    NotApplicable,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Entry {
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    /// Search nodes spent.
    pub nodes: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InstanceDescriptor {
    pub format: &'static str,
    /// SHA-256 of the compact JSON encoding of `data`.
    pub sha256: String,
    pub data: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub load: Option<LoadReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl InstanceDescriptor {
    pub fn new(instance: &Instance, load: Option<LoadReport>, notes: Vec<String>) -> Self {
        let data = instance_value(instance);
        let digest = Sha256::digest(data.to_string().as_bytes());
        Self {
            format: instance.format(),
            sha256: hex::encode(digest),
            data,
            load,
            notes,
        }
    }
}

pub fn instance_value(instance: &Instance) -> Value {
    match instance {
        Instance::Complex(x) => serde_json::to_value(ComplexFile::from_complex(x)),
        Instance::Hypergraph(h) => serde_json::to_value(HypergraphFile::from_hypergraph(h)),
    }
    .expect("plain data serializes")
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub instance: InstanceDescriptor,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub field: Field,
    /// Node limit applied to each invariant separately.
    pub budget: u64,
    pub values: BTreeMap<String, Entry>,
}

impl Report {
    pub fn any_budget_exhausted(&self) -> bool {
        self.values
            .values()
            .any(|e| e.status == Status::BudgetExhausted)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComputeOptions {
    pub field: Field,
    pub budget: u64,
}

impl Default for ComputeOptions {
    fn default() -> Self {
        Self {
            field: Field::Rational,
            budget: Budget::DEFAULT_NODES,
        }
    }
}

pub fn compute(
    instance: &Instance,
    invariants: &[Invariant],
    opts: ComputeOptions,
    descriptor: InstanceDescriptor,
    seed: Option<u64>,
) -> Report {
    let complex = match instance {
        Instance::Complex(x) => x.clone(),
        Instance::Hypergraph(h) => h.non_cover_complex(),
    };
    let values = invariants
        .iter()
        .map(|&inv| {
            let mut budget = Budget::new(opts.budget);
            let outcome = evaluate(inv, instance, &complex, opts.field, &mut budget);
            (inv.to_string(), outcome.into_entry(budget.used()))
        })
        .collect();
    Report {
        schema: SCHEMA,
        instance: descriptor,
        seed,
        field: opts.field,
        budget: opts.budget,
        values,
    }
}

struct Outcome {
    value: Result<Value, Error>,
    witness: Option<Value>,
    partial: Option<Value>,
}

impl Outcome {
    fn ok(value: Value, witness: Option<Value>) -> Self {
        Self {
            value: Ok(value),
            witness,
            partial: None,
        }
    }

    fn err(e: Error) -> Self {
        Self {
            value: Err(e),
            witness: None,
            partial: None,
        }
    }

    fn into_entry(self, nodes: u64) -> Entry {
        match self.value {
            Ok(value) => Entry {
                status: Status::Ok,
                value: Some(value),
                witness: self.witness,
                message: None,
                nodes,
            },
            Err(e) => {
                let status = match e {
                    Error::BudgetExceeded { .. } => Status::BudgetExhausted,
                    Error::NotPure | Error::IsolatedVertex(_) | Error::TooManyVertices { .. } => {
                        Status::NotApplicable
                    }
                    _ => Status::Error,
                };
                Entry {
                    status,
                    value: self.partial,
                    witness: None,
                    message: Some(e.to_string()),
                    nodes,
                }
            }
        }
    }
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("plain data serializes")
}

fn hypergraph_only() -> Outcome {
    Outcome::err(Error::Precondition(
        "defined for hypergraphs only".to_string(),
    ))
}

fn evaluate(
    inv: Invariant,
    instance: &Instance,
    x: &SimplicialComplex,
    field: Field,
    budget: &mut Budget,
) -> Outcome {
    let hypergraph = match instance {
        Instance::Hypergraph(h) => Some(h),
        Instance::Complex(_) => None,
    };
    let catch = |r: Result<Outcome, Error>| r.unwrap_or_else(Outcome::err);
    match inv {
        Invariant::Collapsibility => collapsibility(x, budget),
        Invariant::M(k) => catch(
            MkSolver::new(budget)
                .m(x, k)
                .map(|v| Outcome::ok(json!(v), None)),
        ),
        Invariant::MPrime(k) => catch((|| {
            let mut solver = MkSolver::new(budget);
            let v = solver.m_prime(x, k)?;
            let pivot = solver.m_prime_pivot(x, k)?;
            Ok(Outcome::ok(json!(v), pivot.map(|p| json!({ "pivot": p }))))
        })()),
        Invariant::D => match hypergraph {
            None => {
                let ordering = FacetOrdering::canonical(x);
                Outcome::ok(
                    json!(d_of_ordering(x, &ordering)),
                    Some(json!({ "ordering": ordering })),
                )
            }
            Some(h) => catch((|| {
                let gi = gamma_i(h)?;
                let inst = RelabeledInstance::new(h, h.vertex_set().difference(gi.target))?;
                let d = d_of_ordering(&inst.complex, &inst.ordering);
                Ok(Outcome::ok(json!(d), Some(to_value(&inst))))
            })()),
        },
        Invariant::Leray => match leray_number(x, field) {
            Ok(l) => Outcome::ok(json!(l), Some(json!({ "method": "induced-and-links" }))),
            Err(Error::TooManyVertices { .. }) => Outcome::ok(
                json!(leray_by_links(x, field)),
                Some(json!({ "method": "links" })),
            ),
            Err(e) => Outcome::err(e),
        },
        Invariant::Betti => Outcome::ok(to_value(&reduced_betti(x, field)), None),
        Invariant::CohenMacaulay => Outcome::ok(json!(is_cohen_macaulay(x, field)), None),
        Invariant::CohenMacaulayInduced => {
            catch(is_cohen_macaulay_induced(x, field).map(|b| Outcome::ok(json!(b), None)))
        }
        Invariant::Shellable => catch(is_shellable(x, budget).map(|order| {
            let found = order.is_some();
            Outcome::ok(json!(found), order.map(|o| json!({ "order": o })))
        })),
        Invariant::Kvd(k) => catch(is_k_vertex_decomposable(x, k, budget).map(|d| {
            let found = d.is_some();
            Outcome::ok(
                json!(found),
                d.map(|d| json!({ "sequence": d.sequence(k), "decomposition": d })),
            )
        })),
        Invariant::Dim => Outcome::ok(json!(x.dim()), None),
        Invariant::FVector => {
            let top = x.dim().max(-1);
            let f: Vec<usize> = (-1..=top).map(|i| x.faces(i).len()).collect();
            Outcome::ok(json!(f), None)
        }
        Invariant::GammaI
        | Invariant::GammaSi
        | Invariant::GammaTilde
        | Invariant::GammaE
        | Invariant::NcBound => {
            let Some(h) = hypergraph else {
                return hypergraph_only();
            };
            let r = match inv {
                Invariant::GammaI | Invariant::NcBound => gamma_i(h),
                Invariant::GammaSi => gamma_si(h),
                Invariant::GammaTilde => gamma_tilde(h),
                _ => gamma_e(h),
            };
            catch(r.map(|r| {
                if inv == Invariant::NcBound {
                    Outcome::ok(json!(h.n() as i64 - r.value as i64 - 1), None)
                } else {
                    Outcome::ok(json!(r.value), Some(to_value(&r)))
                }
            }))
        }
    }
}

/// Scans `d = 0, 1, ...`; on exhaustion reports the first undecided `d` as a
/// lower bound.
fn collapsibility(x: &SimplicialComplex, budget: &mut Budget) -> Outcome {
    let top = (x.dim() + 1).max(0) as usize;
    for d in 0..=top {
        match is_d_collapsible(x, d, budget) {
            Ok(Some(cert)) => return Outcome::ok(json!(d), Some(to_value(&cert))),
            Ok(None) => {}
            Err(e) => {
                return Outcome {
                    value: Err(e),
                    witness: None,
                    partial: Some(json!({ "lower_bound": d })),
                }
            }
        }
    }
    unreachable!("complexes of dimension r are (r+1)-collapsible")
}
