//! Shellability and `k`-vertex decomposability.

use std::collections::{HashMap, HashSet};
use std::rc::Rc;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::invariants::Budget;

/// A nonempty face whose deletion is pure of the same dimension as `x`.
pub fn is_shedding_face(x: &SimplicialComplex, sigma: Face) -> bool {
    if sigma.is_empty() || !x.contains(sigma) {
        return false;
    }
    let del = x.deletion(sigma).expect("sigma is nonempty");
    del.is_pure() && del.dim() == x.dim()
}

/// A shelling order of the facets, if one exists.
pub fn is_shellable(x: &SimplicialComplex, budget: &mut Budget) -> Result<Option<Vec<Face>>> {
    if !x.is_pure() {
        return Err(Error::NotPure);
    }
    let facets = x.facets();
    if facets.len() > 64 {
        return Err(Error::Precondition(format!(
            "{} facets exceed the shelling search limit of 64",
            facets.len()
        )));
    }
    let mut order = Vec::with_capacity(facets.len());
    let mut dead = HashSet::new();
    if shell_from(facets, 0, &mut order, &mut dead, budget)? {
        Ok(Some(order.into_iter().map(|i| facets[i]).collect()))
    } else {
        Ok(None)
    }
}

/// Whether `next` can follow the facets in `used`: the intersection of the
/// complex they generate with `next` is pure of codimension one in `next`.
fn attaches(facets: &[Face], used: &[usize], next: Face) -> bool {
    let meets: Vec<Face> = used.iter().map(|&i| facets[i].intersection(next)).collect();
    let ridges: Vec<Face> = meets
        .iter()
        .copied()
        .filter(|m| m.len() + 1 == next.len())
        .collect();
    meets.iter().all(|m| ridges.iter().any(|r| m.is_subset(*r)))
}

fn shell_from(
    facets: &[Face],
    used_mask: u64,
    order: &mut Vec<usize>,
    dead: &mut HashSet<u64>,
    budget: &mut Budget,
) -> Result<bool> {
    if order.len() == facets.len() {
        return Ok(true);
    }
    if dead.contains(&used_mask) {
        return Ok(false);
    }
    budget.tick()?;
    for i in 0..facets.len() {
        if used_mask & (1 << i) != 0 {
            continue;
        }
        if order.is_empty() || attaches(facets, order, facets[i]) {
            order.push(i);
            if shell_from(facets, used_mask | (1 << i), order, dead, budget)? {
                return Ok(true);
            }
            order.pop();
        }
    }
    dead.insert(used_mask);
    Ok(false)
}

/// Checks a claimed shelling order.
pub fn verify_shelling(x: &SimplicialComplex, order: &[Face]) -> bool {
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != x.facets() || !x.is_pure() {
        return false;
    }
    (1..order.len()).all(|k| {
        let used: Vec<usize> = (0..k).collect();
        attaches(order, &used, order[k])
    })
}

/// One shedding step: `face` with `dim face ≤ dim_bound`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SheddingWitness {
    pub face: Face,
    pub dim_bound: usize,
}

/// Certificate of `k`-vertex decomposability: either a simplex, or a
/// shedding face with certificates for its deletion and link.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Decomposition {
    Simplex,
    Shed {
        face: Face,
        deletion: Rc<Decomposition>,
        link: Rc<Decomposition>,
    },
}

impl Decomposition {
    /// Shedding faces in pre-order (face, then deletion, then link).
    pub fn sequence(&self, k: usize) -> Vec<SheddingWitness> {
        let mut out = Vec::new();
        self.collect(k, &mut out);
        out
    }

    fn collect(&self, k: usize, out: &mut Vec<SheddingWitness>) {
        if let Decomposition::Shed {
            face,
            deletion,
            link,
        } = self
        {
            out.push(SheddingWitness {
                face: *face,
                dim_bound: k,
            });
            deletion.collect(k, out);
            link.collect(k, out);
        }
    }

    /// Re-checks every step against `x`.
    pub fn verify(&self, x: &SimplicialComplex, k: usize) -> Result<()> {
        if !x.is_pure() {
            return Err(Error::NotPure);
        }
        match self {
            Decomposition::Simplex if x.is_simplex() => Ok(()),
            Decomposition::Simplex => Err(Error::Precondition(format!("{x} is not a simplex"))),
            Decomposition::Shed {
                face,
                deletion,
                link,
            } => {
                if face.dim() > k as isize || !is_shedding_face(x, *face) {
                    return Err(Error::Precondition(format!(
                        "{face} is not a shedding face of dimension <= {k} in {x}"
                    )));
                }
                deletion.verify(&x.deletion(*face)?, k)?;
                link.verify(&x.link(*face)?, k)
            }
        }
    }
}

/// `Some(certificate)` when `x` is `k`-vertex decomposable.
pub fn is_k_vertex_decomposable(
    x: &SimplicialComplex,
    k: usize,
    budget: &mut Budget,
) -> Result<Option<Rc<Decomposition>>> {
    if !x.is_pure() {
        return Err(Error::NotPure);
    }
    let mut memo = HashMap::new();
    decompose(x, k, &mut memo, budget)
}

type DecompMemo = HashMap<SimplicialComplex, Option<Rc<Decomposition>>>;

fn decompose(
    x: &SimplicialComplex,
    k: usize,
    memo: &mut DecompMemo,
    budget: &mut Budget,
) -> Result<Option<Rc<Decomposition>>> {
    if x.is_simplex() {
        return Ok(Some(Rc::new(Decomposition::Simplex)));
    }
    if let Some(hit) = memo.get(x) {
        return Ok(hit.clone());
    }
    budget.tick()?;
    let mut found = None;
    // all_faces is ordered by dimension, then lexicographically.
    for sigma in x.all_faces() {
        if sigma.is_empty() {
            continue;
        }
        if sigma.dim() > k as isize {
            break;
        }
        if !is_shedding_face(x, sigma) {
            continue;
        }
        let Some(del) = decompose(&x.deletion(sigma)?, k, memo, budget)? else {
            continue;
        };
        let Some(lk) = decompose(&x.link(sigma)?, k, memo, budget)? else {
            continue;
        };
        found = Some(Rc::new(Decomposition::Shed {
            face: sigma,
            deletion: del,
            link: lk,
        }));
        break;
    }
    memo.insert(x.clone(), found.clone());
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::face;
    use crate::named;

    #[test]
    fn simplices() {
        let s = named::simplex(4);
        assert_eq!(
            is_shellable(&s, &mut Budget::default())
                .unwrap()
                .unwrap()
                .len(),
            1
        );
        for k in 0..3 {
            let d = is_k_vertex_decomposable(&s, k, &mut Budget::default())
                .unwrap()
                .unwrap();
            assert_eq!(*d, Decomposition::Simplex);
        }
    }

    #[test]
    fn shellings() {
        let c3 = named::cycle(3);
        let order = is_shellable(&c3, &mut Budget::default()).unwrap().unwrap();
        assert!(verify_shelling(&c3, &order));
        assert!(verify_shelling(
            &c3,
            &[face![1, 2], face![2, 3], face![1, 3]]
        ));

        let two_edges = SimplicialComplex::from_faces([face![1, 2], face![3, 4]]);
        assert_eq!(
            is_shellable(&two_edges, &mut Budget::default()).unwrap(),
            None
        );

        let mixed = SimplicialComplex::from_faces([face![1, 2, 3], face![3, 4]]);
        assert_eq!(
            is_shellable(&mixed, &mut Budget::default()),
            Err(Error::NotPure)
        );

        let points = SimplicialComplex::from_faces([face![1], face![2]]);
        assert!(is_shellable(&points, &mut Budget::default())
            .unwrap()
            .is_some());
    }

    #[test]
    fn v6f10_6_is_one_but_not_zero_decomposable() {
        let d = named::v6f10_6();
        assert!(is_k_vertex_decomposable(&d, 0, &mut Budget::default())
            .unwrap()
            .is_none());
        let cert = is_k_vertex_decomposable(&d, 1, &mut Budget::default())
            .unwrap()
            .unwrap();
        cert.verify(&d, 1).unwrap();
        assert!(cert.verify(&d, 0).is_err());
        let seq = cert.sequence(1);
        assert!(!seq.is_empty());
        assert!(seq.iter().all(|w| w.face.dim() <= 1));
        assert!(is_shellable(&d, &mut Budget::default()).unwrap().is_some());
    }

    #[test]
    fn graphs() {
        // A pure 1-complex is vertex decomposable iff connected.
        assert!(
            is_k_vertex_decomposable(&named::path(5), 0, &mut Budget::default())
                .unwrap()
                .is_some()
        );
        assert!(
            is_k_vertex_decomposable(&named::cycle(5), 0, &mut Budget::default())
                .unwrap()
                .is_some()
        );
        let two_edges = SimplicialComplex::from_faces([face![1, 2], face![3, 4]]);
        assert!(
            is_k_vertex_decomposable(&two_edges, 1, &mut Budget::default())
                .unwrap()
                .is_none()
        );
    }
}
