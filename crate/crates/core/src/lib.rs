//! Exact combinatorial invariants of small simplicial complexes and
//! hypergraphs.
//!
//! The crate computes the collapsibility number `C(X)` by certified search,
//! the recursive upper bounds `M_k(X)`, the minimal-exclusion bound
//! `d(X, ≺)`, reduced homology and Leray numbers, shellability and
//! `k`-vertex decomposability, and the domination parameters of hypergraphs
//! that bound `C` of their non-cover complexes.
//!
//! All values are immutable and all operations are pure, so instances can be
//! processed on independent threads without coordination.

pub mod complex;
pub mod error;
pub mod face;
pub mod homology;
pub mod hypergraph;
pub mod invariants;
pub mod io;
pub mod named;

pub use complex::{boundary, CanonicalizeReport, FreePair, SimplicialComplex};
pub use error::{Error, Result};
pub use face::Face;
pub use homology::{BettiVector, Field};
pub use hypergraph::Hypergraph;
pub use invariants::{Budget, CollapseCertificate, FacetOrdering};
