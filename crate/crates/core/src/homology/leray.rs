//! Leray numbers and Cohen–Macaulayness.

use super::{betti_of_faces, is_homologically_connected, reduced_betti, Field};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;

/// Largest vertex count for which induced subcomplexes are enumerated.
pub const LERAY_VERTEX_CAP: usize = 14;

fn check_cap(x: &SimplicialComplex) -> Result<()> {
    if x.vertex_count() > LERAY_VERTEX_CAP {
        return Err(Error::TooManyVertices {
            vertices: x.vertex_count(),
            cap: LERAY_VERTEX_CAP,
        });
    }
    Ok(())
}

/// Iterates `X[A]` as face lists over every `A ⊆ V(X)`.
fn for_each_induced(x: &SimplicialComplex, mut f: impl FnMut(Face, &[Face]) -> bool) {
    let faces = x.all_faces();
    let mut sub = Vec::with_capacity(faces.len());
    for a in x.vertices().subsets() {
        sub.clear();
        sub.extend(faces.iter().copied().filter(|g| g.is_subset(a)));
        if !f(a, &sub) {
            return;
        }
    }
}

/// Least `k` with `H̃_i(X[A]) = 0` for all `i ≥ k` and all `A ⊆ V(X)`, by
/// enumerating every induced subcomplex.
pub fn leray_brute_force(x: &SimplicialComplex, field: Field) -> Result<usize> {
    check_cap(x)?;
    let mut leray = 0usize;
    for_each_induced(x, |_, faces| {
        if let Some(top) = betti_of_faces(faces, field).top_nonzero() {
            leray = leray.max((top + 1) as usize);
        }
        true
    });
    Ok(leray)
}

/// Leray number from links: `L(X) ≥ d` iff `H̃_{d-1}(lk(γ, X)) ≠ 0` for some
/// face `γ`, the empty face included.
pub fn leray_by_links(x: &SimplicialComplex, field: Field) -> usize {
    let mut faces = x.all_faces();
    if faces.is_empty() {
        faces.push(Face::EMPTY);
    }
    faces
        .into_iter()
        .filter_map(|g| {
            let lk = x.link(g).expect("faces of x lie in x");
            reduced_betti(&lk, field).top_nonzero()
        })
        .map(|top| (top + 1) as usize)
        .max()
        .unwrap_or(0)
}

/// Leray number, computed by both methods and cross-checked.
pub fn leray_number(x: &SimplicialComplex, field: Field) -> Result<usize> {
    let brute = leray_brute_force(x, field)?;
    let links = leray_by_links(x, field);
    if brute != links {
        return Err(Error::Precondition(format!(
            "Leray methods disagree on {x}: induced subcomplexes give {brute}, links give {links}"
        )));
    }
    Ok(brute)
}

/// Pure, and every link `lk(σ, X)` (σ = ∅ included) is homologically
/// `(dim lk(σ, X) − 1)`-connected.
pub fn is_cohen_macaulay(x: &SimplicialComplex, field: Field) -> bool {
    if !x.is_pure() {
        return false;
    }
    let mut faces = x.all_faces();
    if faces.is_empty() {
        faces.push(Face::EMPTY);
    }
    faces.into_iter().all(|sigma| {
        let lk = x.link(sigma).expect("faces of x lie in x");
        is_homologically_connected(&lk, lk.dim() - 1, field)
    })
}

/// Pure, and every induced subcomplex `X[A]` is homologically
/// `(dim X[A] − 1)`-connected.
pub fn is_cohen_macaulay_induced(x: &SimplicialComplex, field: Field) -> Result<bool> {
    check_cap(x)?;
    if !x.is_pure() {
        return Ok(false);
    }
    let mut ok = true;
    for_each_induced(x, |_, faces| {
        let dim = faces.iter().map(|f| f.dim()).max().unwrap_or(-1);
        let betti = betti_of_faces(faces, field);
        ok = (-1..dim).all(|i| betti.get(i) == 0);
        ok
    });
    Ok(ok)
}

/// Checks `L(X) ≥ max{L(del(σ, X)), L(lk(σ, X)) + k + 1}` for a shedding
/// `k`-face `σ` whose deletion is Cohen–Macaulay.
pub fn shedding_leray_inequality_check(
    x: &SimplicialComplex,
    sigma: Face,
    field: Field,
) -> Result<bool> {
    if !super::is_shedding_face(x, sigma) {
        return Err(Error::Precondition(format!(
            "{sigma} is not a shedding face of {x}"
        )));
    }
    let del = x.deletion(sigma)?;
    if !is_cohen_macaulay(&del, field) {
        return Err(Error::Precondition(format!(
            "deletion of {sigma} is not Cohen-Macaulay"
        )));
    }
    let lhs = leray_number(x, field)?;
    let del_l = leray_number(&del, field)?;
    let lk_l = leray_number(&x.link(sigma)?, field)?;
    Ok(lhs >= del_l.max(lk_l + sigma.len()))
}
