//! JSON file formats.
//!
//! Complexes: `{"vertices": [1, 2, 3], "facets": [[1, 2], [2, 3]]}`. Facet
//! lists are canonicalized on load; listed vertices that appear in no facet
//! become 0-dimensional facets.
//!
//! Hypergraphs: `{"n": 3, "edges": [[1, 2], [2, 3]]}` on vertices `1..=n`.

use serde::{Deserialize, Serialize};

use crate::complex::{CanonicalizeReport, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::Face;
use crate::hypergraph::Hypergraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub vertices: Vec<u32>,
    pub facets: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypergraphFile {
    pub n: u32,
    pub edges: Vec<Vec<u32>>,
}

/// What canonicalization removed or added while loading a complex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LoadReport {
    #[serde(flatten)]
    pub canonicalize: CanonicalizeReport,
    /// Listed vertices that were in no facet and were added as singletons.
    pub added_vertices: Vec<u32>,
}

impl LoadReport {
    pub fn is_clean(&self) -> bool {
        self.canonicalize.is_clean() && self.added_vertices.is_empty()
    }
}

impl ComplexFile {
    pub fn into_complex(self) -> Result<(SimplicialComplex, LoadReport)> {
        let listed = Face::from_vertices(self.vertices.iter().copied())?;
        let mut faces = Vec::with_capacity(self.facets.len());
        let mut used = Face::EMPTY;
        for list in &self.facets {
            let f = Face::from_vertices(list.iter().copied())?;
            if let Some(v) = f.difference(listed).min() {
                return Err(Error::Parse(format!(
                    "facet vertex {v} is not listed in \"vertices\""
                )));
            }
            used = used.union(f);
            faces.push(f);
        }
        let added = listed.difference(used);
        faces.extend(added.iter().map(|v| Face::EMPTY.with(v)));
        let (x, canonicalize) = SimplicialComplex::canonicalize(faces);
        Ok((
            x,
            LoadReport {
                canonicalize,
                added_vertices: added.to_vec(),
            },
        ))
    }

    pub fn from_complex(x: &SimplicialComplex) -> Self {
        Self {
            vertices: x.vertices().to_vec(),
            facets: x.facets().iter().map(|f| f.to_vec()).collect(),
        }
    }
}

impl HypergraphFile {
    pub fn into_hypergraph(self) -> Result<Hypergraph> {
        if self.edges.iter().any(|e| e.is_empty()) {
            return Err(Error::EmptyEdge);
        }
        Hypergraph::from_edge_lists(self.n, self.edges)
    }

    pub fn from_hypergraph(h: &Hypergraph) -> Self {
        Self {
            n: h.n(),
            edges: h.edges().iter().map(|e| e.to_vec()).collect(),
        }
    }
}

/// Either kind of input instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Complex(SimplicialComplex),
    Hypergraph(Hypergraph),
}

impl Instance {
    pub fn format(&self) -> &'static str {
        match self {
            Instance::Complex(_) => "complex",
            Instance::Hypergraph(_) => "hypergraph",
        }
    }

    /// Pretty-printed JSON in the matching file format.
    pub fn to_json(&self) -> String {
        let value = match self {
            Instance::Complex(x) => serde_json::to_value(ComplexFile::from_complex(x)),
            Instance::Hypergraph(h) => serde_json::to_value(HypergraphFile::from_hypergraph(h)),
        };
        serde_json::to_string_pretty(&value.expect("plain data serializes"))
            .expect("plain data serializes")
    }
}

/// Parses either file format, distinguished by its keys. The load report is
/// `None` for hypergraphs.
pub fn parse_instance(text: &str) -> Result<(Instance, Option<LoadReport>)> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Parse("expected a JSON object".to_string()))?;
    if obj.contains_key("facets") {
        let file: ComplexFile =
            serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
        let (x, report) = file.into_complex()?;
        Ok((Instance::Complex(x), Some(report)))
    } else if obj.contains_key("edges") {
        let file: HypergraphFile =
            serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
        Ok((Instance::Hypergraph(file.into_hypergraph()?), None))
    } else {
        Err(Error::Parse("expected \"facets\" or \"edges\"".to_string()))
    }
}

pub fn parse_complex(text: &str) -> Result<(SimplicialComplex, LoadReport)> {
    let file: ComplexFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    file.into_complex()
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let file: HypergraphFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    file.into_hypergraph()
}
