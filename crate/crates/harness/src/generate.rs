//! Deterministic instance generators.

use std::fmt;
use std::str::FromStr;

use collapsibility::homology::is_k_vertex_decomposable;
use collapsibility::io::Instance;
use collapsibility::{named, Budget, Face, Hypergraph, SimplicialComplex};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::HarnessError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    RandomComplex,
    RandomPureComplex,
    RandomKvd,
    RandomHypergraph,
    RandomGraph,
    StarFamily,
    NamedExample,
}

impl Kind {
    pub const ALL: [Kind; 7] = [
        Kind::RandomComplex,
        Kind::RandomPureComplex,
        Kind::RandomKvd,
        Kind::RandomHypergraph,
        Kind::RandomGraph,
        Kind::StarFamily,
        Kind::NamedExample,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::RandomComplex => "random-complex",
            Kind::RandomPureComplex => "random-pure-complex",
            Kind::RandomKvd => "random-kvd",
            Kind::RandomHypergraph => "random-hypergraph",
            Kind::RandomGraph => "random-graph",
            Kind::StarFamily => "star-family",
            Kind::NamedExample => "named-example",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| HarnessError::InvalidSpec(format!("unknown generator kind {s:?}")))
    }
}

/// Everything needed to reproduce one instance.
///
/// Random kinds draw the vertex count uniformly from `min_vertices..=vertices`
/// and the number of facets or edges from `1..=count`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorSpec {
    pub kind: Kind,
    pub vertices: u32,
    pub min_vertices: u32,
    pub count: usize,
    /// Largest facet or edge size.
    pub max_size: usize,
    /// For `random-kvd`: the decomposability parameter.
    pub k: usize,
    /// For `star-family`: leaves per star.
    pub leaves: Vec<u32>,
    /// For `named-example`.
    pub name: Option<String>,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(kind: Kind) -> Self {
        Self {
            kind,
            vertices: 7,
            min_vertices: 2,
            count: 8,
            max_size: 4,
            k: 1,
            leaves: vec![1, 1, 1],
            name: None,
            seed: 0,
        }
    }

    pub fn with_seed(&self, seed: u64) -> Self {
        Self {
            seed,
            ..self.clone()
        }
    }
}

/// A generated instance and what the generator did to obtain it.
#[derive(Clone, Debug)]
pub struct Generated {
    pub instance: Instance,
    pub notes: Vec<String>,
}

pub fn generate(spec: &GeneratorSpec) -> Result<Generated, HarnessError> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    if spec.vertices > Face::MAX_LABEL
        || (spec.kind != Kind::StarFamily && spec.kind != Kind::NamedExample && spec.vertices < 1)
    {
        return Err(HarnessError::InvalidSpec(format!(
            "vertex count {} out of range",
            spec.vertices
        )));
    }
    let lo = spec.min_vertices.clamp(1, spec.vertices.max(1));
    match spec.kind {
        Kind::RandomComplex => {
            let n = rng.gen_range(lo..=spec.vertices);
            let x = random_complex(&mut rng, n, spec.count, spec.max_size);
            Ok(plain(Instance::Complex(x)))
        }
        Kind::RandomPureComplex => {
            let n = rng.gen_range(lo.max(2)..=spec.vertices.max(2));
            let x = random_pure_complex(&mut rng, n, spec.count, spec.max_size);
            Ok(plain(Instance::Complex(x)))
        }
        Kind::RandomKvd => random_kvd(&mut rng, spec),
        Kind::RandomHypergraph => random_hypergraph(
            &mut rng,
            lo.max(2),
            spec.vertices.max(2),
            spec.count,
            1,
            spec.max_size,
        ),
        Kind::RandomGraph => {
            random_hypergraph(&mut rng, lo.max(2), spec.vertices.max(2), spec.count, 2, 2)
        }
        Kind::StarFamily => Ok(plain(Instance::Hypergraph(star_family(&spec.leaves)?))),
        Kind::NamedExample => {
            let name = spec.name.as_deref().unwrap_or("v6f10-6");
            let x = named::by_name(name).ok_or_else(|| {
                HarnessError::InvalidSpec(format!(
                    "unknown named example {name:?}; known: {}",
                    named::NAMES.join(", ")
                ))
            })?;
            Ok(plain(Instance::Complex(x)))
        }
    }
}

fn plain(instance: Instance) -> Generated {
    Generated {
        instance,
        notes: Vec::new(),
    }
}

fn random_subset(rng: &mut ChaCha8Rng, n: u32, size: usize) -> Face {
    let mut verts: Vec<u32> = (1..=n).collect();
    verts.shuffle(rng);
    Face::from_vertices(verts.into_iter().take(size)).expect("labels are at most 63")
}

/// `1..=m` facets, each of uniform size in `1..=max_size`, canonicalized.
pub fn random_complex(
    rng: &mut ChaCha8Rng,
    n: u32,
    m: usize,
    max_size: usize,
) -> SimplicialComplex {
    let m = rng.gen_range(1..=m.max(1));
    let top = max_size.clamp(1, n as usize);
    SimplicialComplex::from_faces((0..m).map(|_| {
        let size = rng.gen_range(1..=top);
        random_subset(rng, n, size)
    }))
}

/// `1..=m` facets of one common size drawn from `1..=max_size`.
pub fn random_pure_complex(
    rng: &mut ChaCha8Rng,
    n: u32,
    m: usize,
    max_size: usize,
) -> SimplicialComplex {
    let size = rng.gen_range(1..=max_size.clamp(1, n as usize));
    let m = rng.gen_range(1..=m.max(1));
    SimplicialComplex::from_faces((0..m).map(|_| random_subset(rng, n, size)))
}

const KVD_ATTEMPTS: usize = 100_000;

/// Rejection sampling: random pure complexes that are `k`-vertex decomposable
/// and not a simplex.
fn random_kvd(rng: &mut ChaCha8Rng, spec: &GeneratorSpec) -> Result<Generated, HarnessError> {
    let lo = spec.min_vertices.clamp(2, spec.vertices.max(2));
    for attempt in 1..=KVD_ATTEMPTS {
        let n = rng.gen_range(lo..=spec.vertices.max(2));
        let size = rng.gen_range(2..=spec.max_size.clamp(2, n as usize));
        let m = rng.gen_range(2..=spec.count.max(2));
        let x = SimplicialComplex::from_faces((0..m).map(|_| random_subset(rng, n, size)));
        if x.is_simplex() || !x.is_pure() {
            continue;
        }
        if is_k_vertex_decomposable(&x, spec.k, &mut Budget::default())?.is_some() {
            return Ok(Generated {
                instance: Instance::Complex(x),
                notes: vec![format!("accepted after {attempt} sampled complexes")],
            });
        }
    }
    Err(HarnessError::InvalidSpec(format!(
        "no {}-vertex decomposable complex found in {KVD_ATTEMPTS} samples",
        spec.k
    )))
}

/// Random edges, then isolated vertices removed and the rest relabelled
/// `1..=n'` in increasing order. Resamples when nothing survives.
fn random_hypergraph(
    rng: &mut ChaCha8Rng,
    lo: u32,
    hi: u32,
    m: usize,
    min_size: usize,
    max_size: usize,
) -> Result<Generated, HarnessError> {
    loop {
        let n = rng.gen_range(lo..=hi);
        let m = rng.gen_range(1..=m.max(1));
        let top = max_size.clamp(1, n as usize);
        let bottom = min_size.clamp(1, top);
        let edges: Vec<Face> = (0..m)
            .map(|_| {
                let size = rng.gen_range(bottom..=top);
                random_subset(rng, n, size)
            })
            .collect();
        let h = Hypergraph::new(n, edges)?;
        let isolated = h.isolated_vertices();
        let (h, notes) = if isolated.is_empty() {
            (h, Vec::new())
        } else {
            let h2 = drop_isolated(&h)?;
            (
                h2,
                vec![format!(
                    "removed isolated vertices {isolated:?} and relabelled"
                )],
            )
        };
        if h.n() >= 2 {
            return Ok(Generated {
                instance: Instance::Hypergraph(h),
                notes,
            });
        }
    }
}

pub fn drop_isolated(h: &Hypergraph) -> Result<Hypergraph, HarnessError> {
    let isolated = h.isolated_vertices();
    let keep: Vec<u32> = h
        .vertex_set()
        .iter()
        .filter(|v| !isolated.contains(v))
        .collect();
    let keep_face = Face::from_vertices(keep.iter().copied())?;
    let edges = h
        .edges()
        .iter()
        .filter(|e| e.is_subset(keep_face))
        .map(|e| {
            e.iter()
                .map(|v| keep.iter().position(|&k| k == v).expect("kept vertex") as u32 + 1)
                .collect::<Vec<u32>>()
        });
    Ok(Hypergraph::from_edge_lists(keep.len() as u32, edges)?)
}

/// Stars with centres `a_i = i` and `leaves[i-1]` leaves each (labelled after
/// all centres), joined by the path `a_1 a_2 ... a_n` and the edge
/// `{a_1, ..., a_n}`.
pub fn star_family(leaves: &[u32]) -> Result<Hypergraph, HarnessError> {
    let n = leaves.len() as u32;
    if n < 2 || leaves.contains(&0) {
        return Err(HarnessError::InvalidSpec(
            "star family needs at least two stars with at least one leaf each".to_string(),
        ));
    }
    let total = n + leaves.iter().sum::<u32>();
    if total > Face::MAX_LABEL {
        return Err(HarnessError::InvalidSpec(format!(
            "{total} vertices exceed the cap of 63"
        )));
    }
    let mut edges: Vec<Vec<u32>> = Vec::new();
    let mut next = n + 1;
    for (i, &l) in leaves.iter().enumerate() {
        for _ in 0..l {
            edges.push(vec![i as u32 + 1, next]);
            next += 1;
        }
    }
    for i in 1..n {
        edges.push(vec![i, i + 1]);
    }
    edges.push((1..=n).collect());
    Ok(Hypergraph::from_edge_lists(total, edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_family_shape() {
        let h = star_family(&[1, 1]).unwrap();
        assert_eq!(h.n(), 4);
        assert_eq!(h.edges().len(), 3);
        let h3 = star_family(&[1, 2, 1]).unwrap();
        assert_eq!(h3.n(), 7);
        assert_eq!(h3.edges().len(), 4 + 2 + 1);
        assert!(star_family(&[1]).is_err());
        assert!(star_family(&[1, 0]).is_err());
    }

    #[test]
    fn generation_is_deterministic() {
        for kind in [
            Kind::RandomComplex,
            Kind::RandomHypergraph,
            Kind::RandomGraph,
            Kind::RandomPureComplex,
        ] {
            let spec = GeneratorSpec {
                vertices: 6,
                count: 8,
                ..GeneratorSpec::new(kind)
            }
            .with_seed(7);
            assert_eq!(
                generate(&spec).unwrap().instance,
                generate(&spec).unwrap().instance
            );
        }
    }

    #[test]
    fn random_graphs_are_graphs_without_isolated_vertices() {
        for seed in 0..50 {
            let spec = GeneratorSpec::new(Kind::RandomGraph).with_seed(seed);
            let Instance::Hypergraph(h) = generate(&spec).unwrap().instance else {
                panic!()
            };
            assert!(h.edges().iter().all(|e| e.len() == 2));
            assert!(h.isolated_vertices().is_empty());
        }
    }

    #[test]
    fn kvd_samples_are_decomposable() {
        let spec = GeneratorSpec::new(Kind::RandomKvd).with_seed(3);
        let Instance::Complex(x) = generate(&spec).unwrap().instance else {
            panic!()
        };
        assert!(x.is_pure() && !x.is_simplex());
        assert!(is_k_vertex_decomposable(&x, 1, &mut Budget::default())
            .unwrap()
            .is_some());
    }
}
