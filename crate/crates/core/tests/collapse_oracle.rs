//! Collapsibility checked against an explicit face-set search.

mod common;

use std::collections::{BTreeSet, HashMap};

use collapsibility::invariants::{collapsibility_number, is_d_collapsible};
use collapsibility::{named, Budget, CollapseCertificate, SimplicialComplex};
use proptest::prelude::*;

type Faces = BTreeSet<Vec<u32>>;

fn closure(x: &SimplicialComplex) -> Faces {
    let mut faces = Faces::new();
    for f in x.facets() {
        let v = f.to_vec();
        for mask in 0u32..(1 << v.len()) {
            faces.insert(
                (0..v.len())
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| v[i])
                    .collect(),
            );
        }
    }
    if faces.is_empty() {
        faces.insert(Vec::new());
    }
    faces
}

fn subset(a: &[u32], b: &[u32]) -> bool {
    a.iter().all(|v| b.contains(v))
}

/// Removes every face between `gamma` and `sigma` if `(gamma, sigma)` is a
/// free pair of `faces` with `|gamma| <= d`.
fn collapse(faces: &Faces, gamma: &[u32], sigma: &[u32], d: usize) -> Option<Faces> {
    if gamma.len() > d || !faces.contains(gamma) || !faces.contains(sigma) || !subset(gamma, sigma)
    {
        return None;
    }
    let above: Vec<&Vec<u32>> = faces.iter().filter(|f| subset(gamma, f)).collect();
    let maximal: Vec<&&Vec<u32>> = above
        .iter()
        .filter(|f| !faces.iter().any(|g| g.len() > f.len() && subset(f, g)))
        .collect();
    if maximal.len() != 1 || maximal[0].as_slice() != sigma {
        return None;
    }
    Some(
        faces
            .iter()
            .filter(|f| !(subset(gamma, f) && subset(f, sigma)))
            .cloned()
            .collect(),
    )
}

fn oracle_collapsible(faces: &Faces, d: usize, memo: &mut HashMap<Faces, bool>) -> bool {
    if faces.is_empty() {
        return true;
    }
    if let Some(&v) = memo.get(faces) {
        return v;
    }
    let mut ok = false;
    'outer: for sigma in faces.iter() {
        for gamma in faces.iter().filter(|g| subset(g, sigma)) {
            if let Some(next) = collapse(faces, gamma, sigma, d) {
                if oracle_collapsible(&next, d, memo) {
                    ok = true;
                    break 'outer;
                }
            }
        }
    }
    memo.insert(faces.clone(), ok);
    ok
}

fn oracle_c(x: &SimplicialComplex) -> usize {
    let faces = closure(x);
    (0..)
        .find(|&d| oracle_collapsible(&faces, d, &mut HashMap::new()))
        .unwrap()
}

fn oracle_replay(x: &SimplicialComplex, cert: &CollapseCertificate) -> bool {
    let mut faces = closure(x);
    for step in &cert.steps {
        match collapse(
            &faces,
            &step.free_face.to_vec(),
            &step.maximal_face.to_vec(),
            cert.claimed_d,
        ) {
            Some(next) => faces = next,
            None => return false,
        }
    }
    faces.is_empty()
}

#[test]
fn named_examples_match_oracle() {
    for x in [
        named::simplex(3),
        named::cycle(3),
        named::cycle(4),
        named::path(4),
        named::sphere(4),
    ] {
        let (c, cert) = collapsibility_number(&x, 0, &mut Budget::default()).unwrap();
        assert_eq!(c, oracle_c(&x), "{x}");
        assert!(oracle_replay(&x, &cert), "{x}");
    }
}

#[test]
fn v6f10_6_certificate_replays_independently() {
    let x = named::v6f10_6();
    let (c, cert) = collapsibility_number(&x, 0, &mut Budget::default()).unwrap();
    assert_eq!(c, 2);
    assert!(oracle_replay(&x, &cert));
    assert!(is_d_collapsible(&x, 1, &mut Budget::default())
        .unwrap()
        .is_none());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn collapsibility_number_matches_oracle(x in common::complex(5, 6)) {
        let (c, cert) = collapsibility_number(&x, 0, &mut Budget::default()).unwrap();
        prop_assert_eq!(c, oracle_c(&x));
        prop_assert!(oracle_replay(&x, &cert));
        cert.replay(&x).unwrap();
    }
}
