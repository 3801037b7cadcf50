//! Minimal exclusion sequences.

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;

/// A linear order `γ_1 ≺ … ≺ γ_m` on the facets of one complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetOrdering {
    facets: Vec<Face>,
}

impl FacetOrdering {
    /// Validates that `order` lists every facet of `x` exactly once.
    pub fn new(x: &SimplicialComplex, order: Vec<Face>) -> Result<Self> {
        let mut sorted = order.clone();
        sorted.sort_unstable();
        if sorted != x.facets() {
            return Err(Error::InvalidOrdering);
        }
        Ok(Self { facets: order })
    }

    /// Facets in canonical (lexicographic) order.
    pub fn canonical(x: &SimplicialComplex) -> Self {
        Self {
            facets: x.facets().to_vec(),
        }
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }
}

fn mes_unchecked(gamma: Face, facets: &[Face]) -> Vec<u32> {
    let j = facets
        .iter()
        .position(|f| gamma.is_subset(*f))
        .expect("face lies in some facet");
    let mut seq = Vec::with_capacity(j);
    let mut seen = Face::EMPTY;
    for facet in &facets[..j] {
        let excluded = gamma.difference(*facet);
        let v = seen
            .intersection(excluded)
            .min()
            .or_else(|| excluded.min())
            .expect("γ is not contained in an earlier facet");
        seq.push(v);
        seen = seen.with(v);
    }
    seq
}

/// The minimal exclusion sequence of `gamma` under `ord`; empty when `gamma`
/// lies in the first facet.
pub fn mes(gamma: Face, x: &SimplicialComplex, ord: &FacetOrdering) -> Result<Vec<u32>> {
    if !x.contains(gamma) {
        return Err(Error::FaceNotInComplex(gamma));
    }
    if ord.facets.len() != x.facets().len() {
        return Err(Error::InvalidOrdering);
    }
    Ok(mes_unchecked(gamma, &ord.facets))
}

/// `d(X, ≺)`: the largest number of distinct vertices in any face's minimal
/// exclusion sequence.
pub fn d_of_ordering(x: &SimplicialComplex, ord: &FacetOrdering) -> usize {
    x.all_faces()
        .into_iter()
        .map(|g| {
            mes_unchecked(g, &ord.facets)
                .into_iter()
                .fold(Face::EMPTY, |acc, v| acc.with(v))
                .len()
        })
        .max()
        .unwrap_or(0)
}
