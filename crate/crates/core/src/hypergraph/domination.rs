//! Exact domination parameters by increasing-cardinality search.

use serde::Serialize;

use super::Hypergraph;
use crate::error::{Error, Result};
use crate::face::Face;

/// An optimal value together with a set attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominationResult {
    pub value: usize,
    /// The dominating vertex set (for `γ_E`, the union of the chosen edges).
    pub witness: Face,
    /// The chosen edges, for `γ_E` only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_edges: Option<Vec<Face>>,
    /// The set being dominated.
    pub target: Face,
}

impl DominationResult {
    fn vertices(value: usize, witness: Face, target: Face) -> Self {
        Self {
            value,
            witness,
            witness_edges: None,
            target,
        }
    }
}

/// Index masks with exactly `k` of the low `n` bits set, in increasing order.
fn index_combinations(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut next = if k > n {
        None
    } else if k == 0 {
        Some(0u64)
    } else {
        Some(u64::MAX >> (64 - k))
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack.
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let n = (((r ^ cur) >> 2) / c) | r;
                (n <= limit && n > cur).then_some(n)
            }
        };
        Some(cur)
    })
}

/// The `k`-element subsets of `pool`.
fn k_subsets(pool: Face, k: usize) -> impl Iterator<Item = Face> {
    let verts = pool.to_vec();
    index_combinations(verts.len(), k).map(move |mask| {
        let mut f = Face::EMPTY;
        let mut m = mask;
        while m != 0 {
            f = f.with(verts[m.trailing_zeros() as usize]);
            m &= m - 1;
        }
        f
    })
}

/// Smallest subset of `pool` accepted by `ok`, searching by size.
fn smallest(pool: Face, mut ok: impl FnMut(Face) -> bool) -> Option<Face> {
    (0..=pool.len()).find_map(|k| k_subsets(pool, k).find(|&w| ok(w)))
}

/// `γ_A(H)`: the least `|W|` with `W ⊆ V ∖ A` and `A ⊆ N(W)`.
pub fn gamma_a(h: &Hypergraph, a: Face) -> Result<DominationResult> {
    h.check_subset(a)?;
    let pool = h.vertex_set().difference(a);
    let reach = h.neighbors_set(pool)?;
    if !a.is_subset(reach) {
        return Err(Error::Undominatable(a.difference(reach)));
    }
    let w = smallest(pool, |w| a.is_subset(h.neighbors_set(w).expect("w ⊆ [n]")))
        .expect("pool itself dominates a");
    Ok(DominationResult::vertices(w.len(), w, a))
}

/// `γ_i(H)`: the largest `γ_I(H)` over independent sets `I`. Since `γ_A` is
/// monotone in `A`, only maximal independent sets (complements of minimal
/// covers) are examined. The target of the result is the maximizing `I`.
pub fn gamma_i(h: &Hypergraph) -> Result<DominationResult> {
    h.require_no_isolated()?;
    let all = h.vertex_set();
    let mut best: Option<DominationResult> = None;
    for d in h.minimal_covers() {
        let r = gamma_a(h, all.difference(d))?;
        if best.as_ref().is_none_or(|b| r.value > b.value) {
            best = Some(r);
        }
    }
    Ok(best.unwrap_or_else(|| DominationResult::vertices(0, Face::EMPTY, Face::EMPTY)))
}

/// Some edge `e ∋ v` has `e ∖ {v} ⊆ B`, for every `v ∈ w`.
pub fn strongly_dominates(h: &Hypergraph, b: Face, w: Face) -> bool {
    w.iter().all(|v| {
        h.edges()
            .iter()
            .any(|e| e.contains(v) && e.without(v).is_subset(b))
    })
}

/// `γ(H; W)`: the least `|B|` with `B` strongly dominating `W`.
pub fn gamma_strong(h: &Hypergraph, w: Face) -> Result<DominationResult> {
    h.check_subset(w)?;
    let all = h.vertex_set();
    if !strongly_dominates(h, all, w) {
        let bad = w
            .iter()
            .filter(|&v| !strongly_dominates(h, all, Face::EMPTY.with(v)));
        return Err(Error::Undominatable(Face::from_vertices(bad)?));
    }
    let b = smallest(all, |b| strongly_dominates(h, b, w)).expect("[n] dominates w");
    Ok(DominationResult::vertices(b.len(), b, w))
}

/// Strong total domination number `γ̃(H) = γ(H; V)`.
pub fn gamma_tilde(h: &Hypergraph) -> Result<DominationResult> {
    h.require_no_isolated()?;
    gamma_strong(h, h.vertex_set())
}

/// `γ_si(H)`: the largest `γ(H; I)` over strongly independent sets `I`,
/// found among the maximal ones.
pub fn gamma_si(h: &Hypergraph) -> Result<DominationResult> {
    h.require_no_isolated()?;
    let verts = h.vertex_set().to_vec();
    let mut maximal = Vec::new();
    collect_maximal_si(h, &verts, 0, Face::EMPTY, &mut maximal);
    let mut best: Option<DominationResult> = None;
    for i in maximal {
        let r = gamma_strong(h, i)?;
        if best.as_ref().is_none_or(|b| r.value > b.value) {
            best = Some(r);
        }
    }
    Ok(best.unwrap_or_else(|| DominationResult::vertices(0, Face::EMPTY, Face::EMPTY)))
}

fn collect_maximal_si(h: &Hypergraph, verts: &[u32], idx: usize, cur: Face, out: &mut Vec<Face>) {
    if idx == verts.len() {
        let maximal = verts
            .iter()
            .all(|&v| cur.contains(v) || !h.is_strongly_independent(cur.with(v)));
        if maximal {
            out.push(cur);
        }
        return;
    }
    let v = verts[idx];
    let with = cur.with(v);
    if h.is_strongly_independent(with) {
        collect_maximal_si(h, verts, idx + 1, with, out);
    }
    collect_maximal_si(h, verts, idx + 1, cur, out);
}

/// Edgewise-domination number: the fewest edges whose union strongly
/// dominates `V`.
pub fn gamma_e(h: &Hypergraph) -> Result<DominationResult> {
    h.require_no_isolated()?;
    let edges = h.edges();
    let all = h.vertex_set();
    for k in 0..=edges.len() {
        for mask in index_combinations(edges.len(), k) {
            let chosen: Vec<Face> = (0..edges.len())
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| edges[i])
                .collect();
            let union = chosen.iter().fold(Face::EMPTY, |acc, e| acc.union(*e));
            if strongly_dominates(h, union, all) {
                return Ok(DominationResult {
                    value: k,
                    witness: union,
                    witness_edges: Some(chosen),
                    target: all,
                });
            }
        }
    }
    Err(Error::Undominatable(all))
}
