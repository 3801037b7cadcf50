#![allow(dead_code)]

use collapsibility::{Face, Hypergraph, SimplicialComplex};
use proptest::prelude::*;

/// Complexes on vertices `1..=n` generated by up to `m` random faces.
pub fn complex(max_n: u32, max_m: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(1u64..(1u64 << n), 1..=max_m).prop_map(|masks| {
            SimplicialComplex::from_faces(masks.into_iter().map(|m| Face::from_bits(m << 1)))
        })
    })
}

/// Pure complexes: `m` random faces of one common size.
pub fn pure_complex(max_n: u32, max_m: usize) -> impl Strategy<Value = SimplicialComplex> {
    (2..=max_n)
        .prop_flat_map(move |n| (Just(n), 1..=n))
        .prop_flat_map(move |(n, size)| {
            prop::collection::vec(
                prop::sample::subsequence((1..=n).collect::<Vec<u32>>(), size as usize),
                1..=max_m,
            )
            .prop_map(|lists| SimplicialComplex::from_vertex_lists(lists).unwrap())
        })
}

/// Hypergraphs on `[n]`, with no isolated vertices after relabelling.
pub fn hypergraph(max_n: u32, max_m: usize, max_edge: usize) -> impl Strategy<Value = Hypergraph> {
    (2..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(
            prop::sample::subsequence((1..=n).collect::<Vec<u32>>(), 1..=max_edge.min(n as usize)),
            1..=max_m,
        )
        .prop_map(move |edges| drop_isolated(&Hypergraph::from_edge_lists(n, edges).unwrap()))
        .prop_filter("needs a non-isolated vertex", |h| h.n() > 0)
    })
}

/// Removes isolated vertices and relabels the rest to `1..=n'` in order.
pub fn drop_isolated(h: &Hypergraph) -> Hypergraph {
    let isolated: Vec<u32> = h.isolated_vertices();
    let keep: Vec<u32> = h
        .vertex_set()
        .iter()
        .filter(|v| !isolated.contains(v))
        .collect();
    let edges = h
        .edges()
        .iter()
        .filter(|e| e.is_subset(Face::from_vertices(keep.iter().copied()).unwrap()))
        .map(|e| {
            e.iter()
                .map(|v| keep.iter().position(|&k| k == v).unwrap() as u32 + 1)
                .collect::<Vec<_>>()
        });
    Hypergraph::from_edge_lists(keep.len() as u32, edges).unwrap()
}

/// Graphs (edges of size two) without isolated vertices.
pub fn graph(max_n: u32) -> impl Strategy<Value = Hypergraph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(u32, u32)> = (1..=n)
            .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
            .collect();
        let len = pairs.len();
        prop::sample::subsequence(pairs, 1..=len).prop_map(move |es| {
            drop_isolated(
                &Hypergraph::from_edge_lists(n, es.into_iter().map(|(a, b)| vec![a, b])).unwrap(),
            )
        })
    })
}
