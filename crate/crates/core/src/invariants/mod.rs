//! Collapsibility and its upper bounds.
//!
//! - [`collapse`]: `d`-collapsibility by certified backtracking and the
//!   collapsibility number `C(X)`;
//! - [`mes`]: minimal exclusion sequences and the bound `d(X, ≺)`;
//! - [`mk`]: the recursive bounds `M_0 = M` and `M_k`, `M'_k`.
//!
//! Every search takes an explicit [`Budget`]. Running out of budget is an
//! error distinct from a negative answer.

pub mod collapse;
pub mod mes;
pub mod mk;

pub use collapse::{
    claim_inequality_check, collapsibility_number, is_d_collapsible, tancer_inequality_check,
    CollapseCertificate,
};
pub use mes::{d_of_ordering, mes, FacetOrdering};
pub use mk::{m0, mk, mk_prime, MkMemo, MkSolver};

use crate::error::{Error, Result};

/// Node budget shared by the searches of one top-level evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub const DEFAULT_NODES: u64 = 10_000_000;

    pub fn new(limit: u64) -> Self {
        Self { limit, used: 0 }
    }

    pub fn unlimited() -> Self {
        Self::new(u64::MAX)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn tick(&mut self) -> Result<()> {
        if self.used >= self.limit {
            return Err(Error::BudgetExceeded { budget: self.limit });
        }
        self.used += 1;
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::new(Self::DEFAULT_NODES)
    }
}
