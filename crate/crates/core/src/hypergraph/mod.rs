//! Hypergraphs on `[n] = {1, ..., n}`, their covers and non-cover complexes.

mod domination;

use std::collections::BTreeSet;

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::invariants::{mes, FacetOrdering};

pub use domination::{
    gamma_a, gamma_e, gamma_i, gamma_si, gamma_strong, gamma_tilde, strongly_dominates,
    DominationResult,
};

/// A hypergraph with vertex set `[n]` and a duplicate-free family of
/// nonempty edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Hypergraph {
    n: u32,
    edges: Vec<Face>,
}

impl Hypergraph {
    /// Validates labels, rejects empty edges and drops duplicate edges.
    pub fn new<I: IntoIterator<Item = Face>>(n: u32, edges: I) -> Result<Self> {
        if n > Face::MAX_LABEL {
            return Err(Error::LabelOutOfRange(n as u64));
        }
        let all = Face::range(1, n)?;
        let mut set = BTreeSet::new();
        for e in edges {
            if e.is_empty() {
                return Err(Error::EmptyEdge);
            }
            if let Some(v) = e.difference(all).min() {
                return Err(Error::VertexOutOfRange {
                    vertex: v as u64,
                    n,
                });
            }
            set.insert(e);
        }
        Ok(Self {
            n,
            edges: set.into_iter().collect(),
        })
    }

    /// Builds a hypergraph from edges given as vertex lists.
    pub fn from_edge_lists<L, V>(n: u32, lists: L) -> Result<Self>
    where
        L: IntoIterator<Item = V>,
        V: IntoIterator<Item = u32>,
    {
        let mut edges = Vec::new();
        for list in lists {
            let list: Vec<u32> = list.into_iter().collect();
            if let Some(&v) = list.iter().find(|&&v| v == 0 || v > n) {
                return Err(Error::VertexOutOfRange {
                    vertex: v as u64,
                    n,
                });
            }
            edges.push(Face::from_vertices(list)?);
        }
        Self::new(n, edges)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn edges(&self) -> &[Face] {
        &self.edges
    }

    /// `[n]` as a face.
    pub fn vertex_set(&self) -> Face {
        Face::range(1, self.n).expect("n is at most 63")
    }

    /// Vertices sharing an edge with `v`, excluding `v` itself.
    pub fn neighbors(&self, v: u32) -> Result<Face> {
        if v == 0 || v > self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v as u64,
                n: self.n,
            });
        }
        Ok(self.neighbors_unchecked(v))
    }

    pub(crate) fn neighbors_unchecked(&self, v: u32) -> Face {
        self.edges
            .iter()
            .filter(|e| e.contains(v))
            .fold(Face::EMPTY, |acc, e| acc.union(*e))
            .without(v)
    }

    /// `N(A)`, the union of `N(v)` over `v ∈ A`.
    pub fn neighbors_set(&self, a: Face) -> Result<Face> {
        self.check_subset(a)?;
        Ok(a.iter()
            .fold(Face::EMPTY, |acc, v| acc.union(self.neighbors_unchecked(v))))
    }

    pub(crate) fn check_subset(&self, a: Face) -> Result<()> {
        match a.difference(self.vertex_set()).min() {
            Some(v) => Err(Error::VertexOutOfRange {
                vertex: v as u64,
                n: self.n,
            }),
            None => Ok(()),
        }
    }

    pub fn isolated_vertices(&self) -> Vec<u32> {
        self.vertex_set()
            .iter()
            .filter(|&v| self.neighbors_unchecked(v).is_empty())
            .collect()
    }

    pub(crate) fn require_no_isolated(&self) -> Result<()> {
        match self.isolated_vertices().first() {
            Some(&v) => Err(Error::IsolatedVertex(v)),
            None => Ok(()),
        }
    }

    /// Every edge meets `b`.
    pub fn is_cover(&self, b: Face) -> bool {
        self.edges.iter().all(|e| !e.is_disjoint(b))
    }

    /// No edge lies inside `i`.
    pub fn is_independent(&self, i: Face) -> bool {
        self.edges.iter().all(|e| !e.is_subset(i))
    }

    /// Independent, and every edge holds at most one vertex of `i`.
    pub fn is_strongly_independent(&self, i: Face) -> bool {
        self.is_independent(i) && self.edges.iter().all(|e| e.intersection(i).len() <= 1)
    }

    /// Edges with no other edge strictly inside them.
    pub fn minimal_edges(&self) -> Vec<Face> {
        self.edges
            .iter()
            .copied()
            .filter(|e| !self.edges.iter().any(|f| f != e && f.is_subset(*e)))
            .collect()
    }

    /// The edges contained in `s`, i.e. the edges of `H[s]`.
    pub fn induced_edges(&self, s: Face) -> Vec<Face> {
        self.edges
            .iter()
            .copied()
            .filter(|e| e.is_subset(s))
            .collect()
    }

    /// All inclusion-minimal covers, in canonical face order.
    pub fn minimal_covers(&self) -> Vec<Face> {
        let mut found = BTreeSet::new();
        self.extend_cover(Face::EMPTY, &mut found);
        found.into_iter().collect()
    }

    /// Branches on the vertices of the first edge missed by `b`, pruning as
    /// soon as some vertex of `b` has no private edge.
    fn extend_cover(&self, b: Face, found: &mut BTreeSet<Face>) {
        let private_ok = b.iter().all(|v| {
            let rest = b.without(v);
            self.edges
                .iter()
                .any(|e| e.contains(v) && e.is_disjoint(rest))
        });
        if !private_ok {
            return;
        }
        match self.edges.iter().find(|e| e.is_disjoint(b)) {
            None => {
                found.insert(b);
            }
            Some(e) => {
                for v in e.iter() {
                    self.extend_cover(b.with(v), found);
                }
            }
        }
    }

    /// `NC(H)`: the sets containing no edge. Its facets are the complements
    /// of the inclusion-minimal edges; an edgeless hypergraph gives the empty
    /// complex.
    pub fn non_cover_complex(&self) -> SimplicialComplex {
        let all = self.vertex_set();
        SimplicialComplex::from_faces(self.minimal_edges().into_iter().map(|e| all.difference(e)))
    }

    /// Facets of `NC(H)` ordered by their complementary edges, each read as a
    /// decreasing vertex sequence and compared lexicographically.
    pub fn nc_facet_order(&self) -> Result<FacetOrdering> {
        let nc = self.non_cover_complex();
        let all = self.vertex_set();
        let mut facets = nc.facets().to_vec();
        facets.sort_by_key(|f| {
            let mut seq = all.difference(*f).to_vec();
            seq.reverse();
            seq
        });
        FacetOrdering::new(&nc, facets)
    }

    /// The image of this hypergraph under the vertex map `v ↦ perm[v - 1]`.
    pub fn relabel(&self, perm: &[u32]) -> Result<Self> {
        let map = |f: Face| Face::from_vertices(f.iter().map(|v| perm[v as usize - 1]));
        let edges = self
            .edges
            .iter()
            .map(|e| map(*e))
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.n, edges)
    }
}

/// `H` relabelled so that a chosen cover `D` becomes `{1, ..., |D|}`, with
/// the relative order inside `D` and inside its complement preserved.
#[derive(Clone, Debug, Serialize)]
pub struct RelabeledInstance {
    pub original_cover: Face,
    /// `perm[v - 1]` is the new label of original vertex `v`.
    pub perm: Vec<u32>,
    pub hypergraph: Hypergraph,
    pub cover: Face,
    #[serde(skip)]
    pub complex: SimplicialComplex,
    pub ordering: FacetOrdering,
}

impl RelabeledInstance {
    pub fn new(h: &Hypergraph, d: Face) -> Result<Self> {
        h.check_subset(d)?;
        if !h.is_cover(d) {
            return Err(Error::Precondition(format!("{d} is not a cover")));
        }
        let all = h.vertex_set();
        let mut perm = vec![0u32; h.n() as usize];
        for (i, v) in d.iter().chain(all.difference(d).iter()).enumerate() {
            perm[v as usize - 1] = i as u32 + 1;
        }
        let hypergraph = h.relabel(&perm)?;
        let cover = Face::range(1, d.len() as u32)?;
        let complex = hypergraph.non_cover_complex();
        let ordering = hypergraph.nc_facet_order()?;
        Ok(Self {
            original_cover: d,
            perm,
            hypergraph,
            cover,
            complex,
            ordering,
        })
    }

    /// Maps a face in original labels to the relabelled instance.
    pub fn map_face(&self, f: Face) -> Face {
        Face::from_vertices(f.iter().map(|v| self.perm[v as usize - 1]))
            .expect("labels stay in [n]")
    }
}

/// `|N(S) ∩ D̄| − |S| ≤ |D̄| − γ_{D̄}(H)` for a minimal cover `D` and `S ⊆ D`.
pub fn neighbor_inequality_check(h: &Hypergraph, d: Face, s: Face) -> Result<bool> {
    h.check_subset(d)?;
    if !h.minimal_covers().contains(&d) {
        return Err(Error::Precondition(format!("{d} is not a minimal cover")));
    }
    if !s.is_subset(d) {
        return Err(Error::Precondition(format!("{s} is not contained in {d}")));
    }
    let d_bar = h.vertex_set().difference(d);
    let lhs = h.neighbors_set(s)?.intersection(d_bar).len() as i64 - s.len() as i64;
    let gamma = gamma_a(h, d_bar)?.value as i64;
    Ok(lhs <= d_bar.len() as i64 - gamma)
}

/// For faces `γ, γ'` of the relabelled `NC(H)` (given in relabelled
/// vertices) with `γ̄ ∩ D = γ̄' ∩ D` and an edge inside `γ̄ ∩ D`, checks
/// `mes(γ) = mes(γ')`. Faces that do not meet the hypotheses are reported as
/// [`Error::Precondition`].
pub fn mes_equal_check(inst: &RelabeledInstance, gamma: Face, gamma_prime: Face) -> Result<bool> {
    let h = &inst.hypergraph;
    let d = inst.cover;
    let all = h.vertex_set();
    for f in [gamma, gamma_prime] {
        if !inst.complex.contains(f) {
            return Err(Error::Precondition(format!("{f} is not a face of NC(H)")));
        }
    }
    let comp = all.difference(gamma).intersection(d);
    if comp != all.difference(gamma_prime).intersection(d) {
        return Err(Error::Precondition(
            "complements differ inside the cover".to_string(),
        ));
    }
    if h.induced_edges(comp).is_empty() {
        return Err(Error::Precondition(format!("H[{comp}] has no edge")));
    }
    Ok(mes(gamma, &inst.complex, &inst.ordering)?
        == mes(gamma_prime, &inst.complex, &inst.ordering)?)
}
