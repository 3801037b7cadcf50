//! Finite simplicial complexes stored as canonical facet lists.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::face::Face;

/// A finite simplicial complex given by its facets.
///
/// Invariants:
/// - `facets` is an antichain sorted in [`Face`] order and never contains the
///   empty face;
/// - `vertices` is the union of the facets (isolated vertices are singleton
///   facets).
///
/// The complex with no facets is the empty complex. It is identified with
/// `{∅}`, the complex whose only face is the empty face; this is the terminal
/// state of every collapse and the link of every facet.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SimplicialComplex {
    vertices: Face,
    facets: Vec<Face>,
}

/// What [`SimplicialComplex::canonicalize`] dropped from its input.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalizeReport {
    pub duplicates: Vec<Face>,
    pub non_maximal: Vec<Face>,
    pub empty: usize,
}

impl CanonicalizeReport {
    pub fn is_clean(&self) -> bool {
        self.duplicates.is_empty() && self.non_maximal.is_empty() && self.empty == 0
    }
}

/// `(free_face, maximal_face)` where `maximal_face` is the only facet
/// containing `free_face`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FreePair {
    pub free_face: Face,
    pub maximal_face: Face,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        Self::default()
    }

    /// The full simplex on `face`. The empty face gives the empty complex.
    pub fn simplex(face: Face) -> Self {
        Self::from_faces([face])
    }

    /// Builds the complex generated by `faces`.
    pub fn from_faces<I: IntoIterator<Item = Face>>(faces: I) -> Self {
        Self::canonicalize(faces).0
    }

    /// Builds a complex from raw vertex lists, rejecting labels above 63.
    pub fn from_vertex_lists<L, V>(lists: L) -> Result<Self>
    where
        L: IntoIterator<Item = V>,
        V: IntoIterator<Item = u32>,
    {
        let faces = lists
            .into_iter()
            .map(Face::from_vertices)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_faces(faces))
    }

    /// Reduces `faces` to the sorted antichain of its maximal members.
    pub fn canonicalize<I: IntoIterator<Item = Face>>(faces: I) -> (Self, CanonicalizeReport) {
        let mut report = CanonicalizeReport::default();
        let mut raw: Vec<Face> = Vec::new();
        for f in faces {
            if f.is_empty() {
                report.empty += 1;
            } else {
                raw.push(f);
            }
        }
        raw.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        let mut kept: Vec<Face> = Vec::with_capacity(raw.len());
        for (i, f) in raw.iter().enumerate() {
            if i > 0 && raw[i - 1] == *f {
                report.duplicates.push(*f);
            } else if kept.iter().any(|k| f.is_subset(*k)) {
                report.non_maximal.push(*f);
            } else {
                kept.push(*f);
            }
        }
        (Self::from_antichain(kept), report)
    }

    /// Wraps a list already known to be an antichain without empty members.
    fn from_antichain(mut facets: Vec<Face>) -> Self {
        facets.sort_unstable();
        let vertices = facets.iter().fold(Face::EMPTY, |acc, f| acc.union(*f));
        Self { vertices, facets }
    }

    pub fn vertices(&self) -> Face {
        self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// At most one facet. The empty complex counts as the simplex on `∅`.
    pub fn is_simplex(&self) -> bool {
        self.facets.len() <= 1
    }

    /// Dimension of the largest facet, -1 for the empty complex.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.dim()).max().unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn contains(&self, face: Face) -> bool {
        if face.is_empty() {
            return !self.is_empty();
        }
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// Facets containing `face`.
    pub fn facets_containing(&self, face: Face) -> impl Iterator<Item = Face> + '_ {
        self.facets
            .iter()
            .copied()
            .filter(move |f| face.is_subset(*f))
    }

    /// Every face, the empty face included when the complex is nonempty, in
    /// increasing dimension and lexicographic order within a dimension.
    pub fn all_faces(&self) -> Vec<Face> {
        let mut seen: HashSet<Face> = HashSet::new();
        for f in &self.facets {
            for s in f.subsets() {
                seen.insert(s);
            }
        }
        let mut faces: Vec<Face> = seen.into_iter().collect();
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        faces
    }

    /// Faces of dimension exactly `k` (`k = -1` yields `{∅}` unless empty).
    pub fn faces(&self, k: isize) -> Vec<Face> {
        if k < -1 {
            return Vec::new();
        }
        let len = (k + 1) as usize;
        let mut seen: HashSet<Face> = HashSet::new();
        for f in &self.facets {
            if f.len() >= len {
                seen.extend(f.subsets_of_len(len));
            }
        }
        let mut faces: Vec<Face> = seen.into_iter().collect();
        faces.sort_unstable();
        faces
    }

    /// Number of faces including the empty face (0 for the empty complex).
    pub fn face_count(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            self.all_faces().len()
        }
    }

    /// `lk(σ, X) = {τ ∈ X : σ ∩ τ = ∅, σ ∪ τ ∈ X}`.
    pub fn link(&self, sigma: Face) -> Result<Self> {
        if sigma.is_empty() {
            return Ok(self.clone());
        }
        if !self.contains(sigma) {
            return Err(Error::FaceNotInComplex(sigma));
        }
        Ok(Self::from_faces(
            self.facets_containing(sigma).map(|f| f.difference(sigma)),
        ))
    }

    /// `del(σ, X) = {τ ∈ X : σ ⊄ τ}`.
    pub fn deletion(&self, sigma: Face) -> Result<Self> {
        if sigma.is_empty() {
            return Err(Error::EmptyDeletion);
        }
        let mut faces = Vec::with_capacity(self.facets.len() + sigma.len());
        for &f in &self.facets {
            if sigma.is_subset(f) {
                faces.extend(sigma.iter().map(|v| f.without(v)));
            } else {
                faces.push(f);
            }
        }
        Ok(Self::from_faces(faces))
    }

    /// `X[A] = {σ ∈ X : σ ⊆ A}`.
    pub fn induced(&self, subset: Face) -> Self {
        Self::from_faces(self.facets.iter().map(|f| f.intersection(subset)))
    }

    /// `k`-faces whose link differs from the subcomplex induced on the
    /// remaining vertices. For `k = 0` these are the non-cone vertices.
    pub fn open_k_faces(&self, k: usize) -> Vec<Face> {
        self.faces(k as isize)
            .into_iter()
            .filter(|&sigma| !self.is_cone_face(sigma))
            .collect()
    }

    /// Whether `lk(σ) = X[V ∖ σ]`, i.e. `X` is the join of `σ` with that link.
    pub fn is_cone_face(&self, sigma: Face) -> bool {
        let link = self
            .link(sigma)
            .expect("is_cone_face called with a face outside the complex");
        link == self.induced(self.vertices.difference(sigma))
    }

    /// All free pairs `(γ, σ)` with `|γ| ≤ d`, smallest free face first.
    pub fn free_pairs(&self, d: usize) -> Vec<FreePair> {
        let mut pairs = Vec::new();
        for (i, &sigma) in self.facets.iter().enumerate() {
            for gamma in sigma.subsets_up_to(d) {
                let shared = self
                    .facets
                    .iter()
                    .enumerate()
                    .any(|(j, f)| j != i && gamma.is_subset(*f));
                if !shared {
                    pairs.push(FreePair {
                        free_face: gamma,
                        maximal_face: sigma,
                    });
                }
            }
        }
        pairs.sort_by(|a, b| {
            a.free_face
                .len()
                .cmp(&b.free_face.len())
                .then(a.free_face.cmp(&b.free_face))
                .then(a.maximal_face.cmp(&b.maximal_face))
        });
        pairs
    }

    pub fn is_free_pair(&self, pair: FreePair) -> bool {
        let FreePair {
            free_face,
            maximal_face,
        } = pair;
        free_face.is_subset(maximal_face)
            && self.facets.binary_search(&maximal_face).is_ok()
            && self
                .facets
                .iter()
                .all(|f| *f == maximal_face || !free_face.is_subset(*f))
    }

    /// Removes every face `τ` with `γ ⊆ τ ⊆ σ`.
    pub fn elementary_collapse(&self, pair: FreePair) -> Result<Self> {
        if !self.is_free_pair(pair) {
            return Err(Error::NotFree {
                free_face: pair.free_face,
                maximal_face: pair.maximal_face,
            });
        }
        Ok(self.collapse_unchecked(pair))
    }

    pub(crate) fn collapse_unchecked(&self, pair: FreePair) -> Self {
        let FreePair {
            free_face,
            maximal_face,
        } = pair;
        let mut faces: Vec<Face> = self
            .facets
            .iter()
            .copied()
            .filter(|f| *f != maximal_face)
            .collect();
        // The faces of σ surviving the collapse are generated by σ ∖ {v}, v ∈ γ.
        faces.extend(free_face.iter().map(|v| maximal_face.without(v)));
        Self::from_faces(faces)
    }

    /// Join of complexes on disjoint vertex sets.
    pub fn join(&self, other: &Self) -> Result<Self> {
        let shared = self.vertices.intersection(other.vertices);
        if !shared.is_empty() {
            return Err(Error::OverlappingJoin(shared));
        }
        if self.is_empty() {
            return Ok(other.clone());
        }
        if other.is_empty() {
            return Ok(self.clone());
        }
        let mut faces = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for g in &other.facets {
                faces.push(f.union(*g));
            }
        }
        Ok(Self::from_antichain(faces))
    }

    fn check_dim(&self, n: isize) -> Result<()> {
        if n > self.dim() {
            Err(Error::DimensionOutOfRange {
                requested: n,
                dim: self.dim(),
            })
        } else {
            Ok(())
        }
    }

    /// Faces of dimension at most `n`.
    pub fn skeleton(&self, n: isize) -> Result<Self> {
        self.check_dim(n)?;
        let len = (n + 1).max(0) as usize;
        let mut faces = Vec::new();
        for &f in &self.facets {
            if f.len() <= len {
                faces.push(f);
            } else {
                faces.extend(f.subsets_of_len(len));
            }
        }
        Ok(Self::from_faces(faces))
    }

    /// The subcomplex generated by the `n`-dimensional faces.
    pub fn pure_skeleton(&self, n: isize) -> Result<Self> {
        self.check_dim(n)?;
        Ok(Self::from_faces(self.faces(n)))
    }
}

/// `∂σ`: the complex of proper subsets of `sigma`.
pub fn boundary(sigma: Face) -> SimplicialComplex {
    SimplicialComplex::from_faces(sigma.iter().map(|v| sigma.without(v)))
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{facet}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex{self}")
    }
}
