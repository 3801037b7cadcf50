//! Small complexes that show up repeatedly in tests and golden cases.

use crate::complex::{boundary, SimplicialComplex};
use crate::face::Face;

const V6F10_6: [[u32; 3]; 10] = [
    [1, 2, 3],
    [1, 2, 4],
    [1, 2, 5],
    [1, 3, 4],
    [1, 3, 6],
    [2, 4, 5],
    [2, 5, 6],
    [3, 4, 6],
    [3, 5, 6],
    [4, 5, 6],
];

/// The six-vertex, ten-triangle complex V6F10-6: 1-vertex decomposable but
/// not 0-vertex decomposable.
pub fn v6f10_6() -> SimplicialComplex {
    SimplicialComplex::from_vertex_lists(V6F10_6).expect("labels are small")
}

/// The simplex on `{1, ..., n}`.
pub fn simplex(n: u32) -> SimplicialComplex {
    SimplicialComplex::simplex(Face::range(1, n).expect("n <= 63"))
}

/// The boundary of the simplex on `{1, ..., n}`, a sphere of dimension `n - 2`.
pub fn sphere(n: u32) -> SimplicialComplex {
    boundary(Face::range(1, n).expect("n <= 63"))
}

/// The cycle graph `1 - 2 - ... - n - 1` as a 1-dimensional complex.
pub fn cycle(n: u32) -> SimplicialComplex {
    assert!((3..=63).contains(&n));
    SimplicialComplex::from_vertex_lists((1..=n).map(|i| [i, i % n + 1])).expect("n <= 63")
}

/// The path graph `1 - 2 - ... - n`.
pub fn path(n: u32) -> SimplicialComplex {
    assert!((2..=63).contains(&n));
    SimplicialComplex::from_vertex_lists((1..n).map(|i| [i, i + 1])).expect("n <= 63")
}

/// Looks up a complex by the names used on the command line.
pub fn by_name(name: &str) -> Option<SimplicialComplex> {
    let lower = name.to_ascii_lowercase();
    if lower == "v6f10-6" {
        return Some(v6f10_6());
    }
    let (kind, n) = lower.split_once('-')?;
    let n: u32 = n.parse().ok()?;
    match kind {
        "simplex" if (1..=63).contains(&n) => Some(simplex(n)),
        "sphere" if (2..=63).contains(&n) => Some(sphere(n)),
        "cycle" if (3..=63).contains(&n) => Some(cycle(n)),
        "path" if (2..=63).contains(&n) => Some(path(n)),
        _ => None,
    }
}

pub const NAMES: &[&str] = &["v6f10-6", "simplex-N", "sphere-N", "cycle-N", "path-N"];
