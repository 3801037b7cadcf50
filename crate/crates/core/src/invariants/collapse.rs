//! `d`-collapsibility search.
//!
//! Depth-first backtracking over free pairs with a transposition table of
//! complexes already shown not to be `d`-collapsible. Before branching, every
//! facet with at most `d` vertices is removed as its own free face: such a
//! removal preserves `d`-collapsibility in both directions, so the search only
//! branches on free faces of facets with more than `d` vertices.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::Budget;
use crate::complex::{FreePair, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::Face;

/// A replayable sequence of elementary `d`-collapses ending at the empty complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseCertificate {
    pub claimed_d: usize,
    pub steps: Vec<FreePair>,
}

impl CollapseCertificate {
    /// Replays the steps from `x` with the checked collapse of
    /// [`SimplicialComplex::elementary_collapse`].
    pub fn replay(&self, x: &SimplicialComplex) -> Result<()> {
        let mut cur = x.clone();
        for (i, step) in self.steps.iter().enumerate() {
            if step.free_face.len() > self.claimed_d {
                return Err(Error::Precondition(format!(
                    "step {i}: free face {} has more than {} vertices",
                    step.free_face, self.claimed_d
                )));
            }
            cur = cur.elementary_collapse(*step)?;
        }
        if !cur.is_empty() {
            return Err(Error::Precondition(format!(
                "certificate ends at {cur}, not the empty complex"
            )));
        }
        Ok(())
    }
}

struct Search<'b> {
    d: usize,
    budget: &'b mut Budget,
    dead: HashSet<SimplicialComplex>,
    path: Vec<FreePair>,
}

impl Search<'_> {
    /// Strips facets with at most `d` vertices, recording each removal.
    fn reduce(&mut self, mut x: SimplicialComplex) -> SimplicialComplex {
        loop {
            if let [sigma] = x.facets() {
                self.path.push(FreePair {
                    free_face: Face::EMPTY,
                    maximal_face: *sigma,
                });
                return SimplicialComplex::empty();
            }
            let Some(&small) = x.facets().iter().find(|f| f.len() <= self.d) else {
                return x;
            };
            let pair = FreePair {
                free_face: small,
                maximal_face: small,
            };
            self.path.push(pair);
            x = x.collapse_unchecked(pair);
        }
    }

    fn run(&mut self, x: SimplicialComplex) -> Result<bool> {
        self.budget.tick()?;
        if x.is_empty() {
            return Ok(true);
        }
        if self.dead.contains(&x) {
            return Ok(false);
        }
        let moves: Vec<FreePair> = x
            .free_pairs(self.d)
            .into_iter()
            .filter(|p| !p.free_face.is_empty())
            .collect();
        for m in moves {
            let mark = self.path.len();
            self.path.push(m);
            let next = self.reduce(x.collapse_unchecked(m));
            if self.run(next)? {
                return Ok(true);
            }
            self.path.truncate(mark);
        }
        self.dead.insert(x);
        Ok(false)
    }
}

/// Decides `d`-collapsibility; `Some(certificate)` when collapsible.
pub fn is_d_collapsible(
    x: &SimplicialComplex,
    d: usize,
    budget: &mut Budget,
) -> Result<Option<CollapseCertificate>> {
    let mut search = Search {
        d,
        budget,
        dead: HashSet::new(),
        path: Vec::new(),
    };
    let start = search.reduce(x.clone());
    if search.run(start)? {
        Ok(Some(CollapseCertificate {
            claimed_d: d,
            steps: search.path,
        }))
    } else {
        Ok(None)
    }
}

/// The least `d` for which `x` is `d`-collapsible, starting the scan at
/// `lower_bound` (pass 0, or a proven lower bound such as the Leray number).
pub fn collapsibility_number(
    x: &SimplicialComplex,
    lower_bound: usize,
    budget: &mut Budget,
) -> Result<(usize, CollapseCertificate)> {
    // Every complex of dimension r is (r+1)-collapsible.
    let top = (x.dim() + 1).max(0) as usize;
    for d in lower_bound.min(top)..=top {
        if let Some(cert) = is_d_collapsible(x, d, budget)? {
            return Ok((d, cert));
        }
    }
    unreachable!("complexes of dimension r are (r+1)-collapsible")
}

/// Checks `C(X) ≤ max{C(del(σ, X)), C(lk(σ, X)) + dim σ + 1}` by exact search.
pub fn claim_inequality_check(
    x: &SimplicialComplex,
    sigma: Face,
    budget: &mut Budget,
) -> Result<bool> {
    if sigma.is_empty() || !x.contains(sigma) {
        return Err(Error::FaceNotInComplex(sigma));
    }
    let lhs = collapsibility_number(x, 0, budget)?.0;
    let del = collapsibility_number(&x.deletion(sigma)?, 0, budget)?.0;
    let lk = collapsibility_number(&x.link(sigma)?, 0, budget)?.0;
    Ok(lhs <= del.max(lk + sigma.len()))
}

/// The vertex case of [`claim_inequality_check`].
pub fn tancer_inequality_check(x: &SimplicialComplex, v: u32, budget: &mut Budget) -> Result<bool> {
    claim_inequality_check(x, Face::singleton(v)?, budget)
}
