//! Reduced simplicial homology and the properties built on it.

pub mod decomposable;
pub mod leray;
pub mod rank;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::complex::SimplicialComplex;
use crate::error::Error;
use crate::face::Face;

pub use decomposable::{
    is_k_vertex_decomposable, is_shedding_face, is_shellable, verify_shelling, Decomposition,
    SheddingWitness,
};
pub use leray::{
    is_cohen_macaulay, is_cohen_macaulay_induced, leray_brute_force, leray_by_links, leray_number,
    shedding_leray_inequality_check, LERAY_VERTEX_CAP,
};

/// Coefficient field for homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Rational,
    /// `GF(p)` for a prime `p`.
    Prime(u32),
}

impl Field {
    pub const GF2: Field = Field::Prime(2);

    fn rank(self, rows: &[rank::SparseRow]) -> usize {
        match self {
            Field::Rational => rank::rank_rational(rows),
            Field::Prime(p) => rank::rank_mod_p(rows, p),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => f.write_str("rational"),
            Field::Prime(p) => write!(f, "gf{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let lower = s.to_ascii_lowercase();
        if lower == "rational" || lower == "q" {
            return Ok(Field::Rational);
        }
        let p: u32 = lower
            .strip_prefix("gf")
            .and_then(|n| n.parse().ok())
            .ok_or_else(|| Error::Parse(format!("unknown field {s:?}")))?;
        let is_prime = p >= 2
            && (2..p)
                .take_while(|d| d * d <= p)
                .all(|d| !p.is_multiple_of(d));
        if !is_prime || p > 46_337 {
            return Err(Error::Parse(format!(
                "gf{p}: characteristic must be a prime below 46337"
            )));
        }
        Ok(Field::Prime(p))
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Reduced Betti numbers `b̃_i` for `i = -1, 0, ..., dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiVector {
    pub field: Field,
    /// `b̃_{-1}`: 1 for the empty complex, 0 otherwise.
    pub minus_one: usize,
    /// `ranks[i] = b̃_i` for `0 ≤ i ≤ dim`.
    pub ranks: Vec<usize>,
}

impl BettiVector {
    pub fn get(&self, i: isize) -> usize {
        match i {
            -1 => self.minus_one,
            i if i >= 0 => self.ranks.get(i as usize).copied().unwrap_or(0),
            _ => 0,
        }
    }

    pub fn is_acyclic(&self) -> bool {
        self.minus_one == 0 && self.ranks.iter().all(|&r| r == 0)
    }

    /// Largest `i` with `b̃_i ≠ 0`.
    pub fn top_nonzero(&self) -> Option<isize> {
        self.ranks
            .iter()
            .rposition(|&r| r != 0)
            .map(|i| i as isize)
            .or((self.minus_one != 0).then_some(-1))
    }

    /// `Σ (-1)^i b̃_i` over `i ≥ -1`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        let mut chi = -(self.minus_one as i64);
        for (i, &r) in self.ranks.iter().enumerate() {
            chi += if i % 2 == 0 { r as i64 } else { -(r as i64) };
        }
        chi
    }
}

/// Faces of `x` grouped by size: `by_size[s]` holds the faces with `s` vertices.
fn faces_by_size(faces: &[Face], dim: isize) -> Vec<Vec<Face>> {
    let mut by_size: Vec<Vec<Face>> = vec![Vec::new(); (dim + 2).max(1) as usize];
    by_size[0].push(Face::EMPTY);
    for f in faces {
        if !f.is_empty() {
            by_size[f.len()].push(*f);
        }
    }
    by_size
}

/// Reduced Betti numbers of the complex whose faces are exactly `faces`
/// (closed under subsets; the empty face may be omitted).
pub(crate) fn betti_of_faces(faces: &[Face], field: Field) -> BettiVector {
    let dim = faces.iter().map(|f| f.dim()).max().unwrap_or(-1);
    let by_size = faces_by_size(faces, dim);
    let top = by_size.len() - 1;
    // rank_of[s] = rank of the boundary map from faces of size s to size s-1.
    let mut rank_of = vec![0usize; top + 2];
    for s in 1..=top {
        let index: HashMap<Face, usize> = by_size[s - 1]
            .iter()
            .enumerate()
            .map(|(i, f)| (*f, i))
            .collect();
        let rows: Vec<rank::SparseRow> = by_size[s]
            .iter()
            .map(|f| {
                let mut row: rank::SparseRow = f
                    .iter()
                    .enumerate()
                    .map(|(pos, v)| {
                        let sign = if pos % 2 == 0 { 1 } else { -1 };
                        (index[&f.without(v)], sign)
                    })
                    .collect();
                row.sort_unstable_by_key(|e| e.0);
                row
            })
            .collect();
        rank_of[s] = field.rank(&rows);
    }
    let betti = |s: usize| by_size[s].len() - rank_of[s] - rank_of[s + 1];
    BettiVector {
        field,
        minus_one: betti(0),
        ranks: (1..=top).map(betti).collect(),
    }
}

/// Reduced Betti numbers of `x`; the empty complex has `b̃_{-1} = 1`.
pub fn reduced_betti(x: &SimplicialComplex, field: Field) -> BettiVector {
    betti_of_faces(&x.all_faces(), field)
}

/// `H̃_i(x) = 0` for every `-1 ≤ i ≤ n`.
pub fn is_homologically_connected(x: &SimplicialComplex, n: isize, field: Field) -> bool {
    if n < -1 {
        return true;
    }
    let betti = reduced_betti(x, field);
    (-1..=n).all(|i| betti.get(i) == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::face;
    use crate::named;

    #[test]
    fn spheres_and_simplices() {
        for field in [Field::Rational, Field::GF2, Field::Prime(3)] {
            assert!(reduced_betti(&named::simplex(4), field).is_acyclic());
            let c3 = reduced_betti(&named::cycle(3), field);
            assert_eq!((c3.minus_one, c3.ranks.clone()), (0, vec![0, 1]));
            let s2 = reduced_betti(&named::sphere(4), field);
            assert_eq!((s2.minus_one, s2.ranks.clone()), (0, vec![0, 0, 1]));
        }
        let empty = reduced_betti(&SimplicialComplex::empty(), Field::Rational);
        assert_eq!(empty.minus_one, 1);
        assert!(empty.ranks.is_empty());
        assert_eq!(empty.top_nonzero(), Some(-1));
    }

    #[test]
    fn disjoint_pieces() {
        let x = SimplicialComplex::from_faces([face![1, 2], face![3, 4], face![5]]);
        let b = reduced_betti(&x, Field::Rational);
        assert_eq!(b.ranks, vec![2, 0]);
        assert_eq!(b.reduced_euler_characteristic(), 2);
    }

    #[test]
    fn connectivity() {
        let s = named::simplex(3);
        for n in -1..=2 {
            assert!(is_homologically_connected(&s, n, Field::Rational));
        }
        let c3 = named::cycle(3);
        assert!(is_homologically_connected(&c3, 0, Field::Rational));
        assert!(!is_homologically_connected(&c3, 1, Field::Rational));
        assert!(!is_homologically_connected(
            &SimplicialComplex::empty(),
            -1,
            Field::Rational
        ));
    }

    #[test]
    fn field_parsing() {
        assert_eq!("rational".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("gf2".parse::<Field>().unwrap(), Field::GF2);
        assert_eq!("GF7".parse::<Field>().unwrap(), Field::Prime(7));
        assert!("gf4".parse::<Field>().is_err());
        assert!("reals".parse::<Field>().is_err());
        assert_eq!(serde_json::to_string(&Field::GF2).unwrap(), "\"gf2\"");
    }

    /// The projective plane has 2-torsion: invisible over Q, visible over GF(2).
    #[test]
    fn field_sensitivity_on_projective_plane() {
        let rp2 = SimplicialComplex::from_vertex_lists([
            [1, 2, 4],
            [1, 2, 6],
            [1, 3, 5],
            [1, 3, 6],
            [1, 4, 5],
            [2, 3, 4],
            [2, 3, 5],
            [2, 5, 6],
            [3, 4, 6],
            [4, 5, 6],
        ])
        .unwrap();
        assert_eq!(reduced_betti(&rp2, Field::Rational).ranks, vec![0, 0, 0]);
        assert_eq!(reduced_betti(&rp2, Field::GF2).ranks, vec![0, 1, 1]);
    }
}
