mod common;

use common::{arb_graph, distances_by_powers, twins_by_distance};
use fixnum_core::families;
use fixnum_core::{Error, Graph};
use proptest::prelude::*;

#[test]
fn construction_errors() {
    assert!(matches!(Graph::from_edge_list(0, &[]), Err(Error::InvalidGraph(_))));
    assert!(matches!(Graph::from_edge_list(3, &[(1, 1)]), Err(Error::SelfLoop(1))));
    assert!(matches!(
        Graph::from_edge_list(3, &[(0, 3)]),
        Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
    ));
    let g = Graph::from_edge_list(3, &[(0, 1), (1, 0)]).unwrap();
    assert_eq!(g.size(), 1);
}

#[test]
fn twin_examples() {
    let k3 = families::complete(3).unwrap();
    assert!(k3.are_twins(0, 1).unwrap());
    let p4 = families::path(4).unwrap();
    assert!(!p4.are_twins(0, 3).unwrap());
    assert_eq!(families::complete(4).unwrap().twin_partition(), vec![vec![0, 1, 2, 3]]);
    let star = families::star(3).unwrap();
    assert_eq!(star.twin_partition(), vec![vec![0], vec![1, 2, 3]]);
    assert!(p4.are_twins(0, 9).is_err());
}

#[test]
fn distances_on_a_path_and_a_disconnected_graph() {
    let p5 = families::path(5).unwrap();
    let d = p5.distance_matrix();
    assert_eq!(d.get(0, 4), Some(4));
    assert_eq!(d.diameter(), Some(4));
    let g = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
    let d = g.distance_matrix();
    assert_eq!(d.get(0, 2), None);
    assert!(!d.is_connected());
    assert_eq!(g.components(), vec![vec![0, 1], vec![2]]);
}

#[test]
fn file_formats_round_trip() {
    let g = families::grid(2, 3).unwrap();
    let json = g.to_json();
    let back = Graph::parse(&json).unwrap();
    assert_eq!(back, g);
    assert_eq!(back.to_json(), json);
    let text = g.to_edge_list_text();
    assert_eq!(Graph::parse(&text).unwrap(), g);
    assert!(Graph::parse("{\"n\":2,\"edges\":[[0,5]]}").is_err());
    assert!(Graph::parse("2 1\n0 x\n").is_err());
}

#[test]
fn vertex_deletion_and_induced_subgraphs() {
    let c5 = families::cycle(5).unwrap();
    let (p4, map) = c5.delete_vertex(2).unwrap();
    assert_eq!(map, vec![0, 1, 3, 4]);
    assert_eq!(p4.size(), 3);
    assert!(p4.is_connected());
    let sub = c5.induced_subgraph(&[0, 1, 2]).unwrap();
    assert_eq!(sub.edges(), vec![(0, 1), (1, 2)]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn distances_agree_with_matrix_powers(g in arb_graph(9)) {
        let want = distances_by_powers(&g);
        let d = g.distance_matrix();
        for u in 0..g.order() {
            for v in 0..g.order() {
                prop_assert_eq!(d.get(u, v), want[u][v]);
            }
        }
        prop_assert_eq!(d.is_connected(), g.components().len() == 1);
    }

    #[test]
    fn twin_relation_is_an_equivalence(g in arb_graph(9)) {
        let n = g.order();
        let twin = |a: usize, b: usize| a == b || g.are_twins(a, b).unwrap();
        prop_assert!(g.are_twins(0, 0).is_err());
        for u in 0..n {
            for v in 0..n {
                let t = twin(u, v);
                prop_assert_eq!(t, twin(v, u));
                if u != v {
                    prop_assert_eq!(t, twins_by_distance(&g, u, v));
                }
                for w in 0..n {
                    if t && twin(v, w) {
                        prop_assert!(twin(u, w));
                    }
                }
            }
        }
    }

    #[test]
    fn twin_partition_matches_pairwise_relation(g in arb_graph(9)) {
        let classes = g.twin_partition();
        let mut seen: Vec<usize> = classes.iter().flatten().copied().collect();
        seen.sort_unstable();
        prop_assert_eq!(seen, (0..g.order()).collect::<Vec<_>>());
        for a in &classes {
            for b in &classes {
                if !std::ptr::eq(a, b) {
                    prop_assert!(!g.are_twins(a[0], b[0]).unwrap());
                }
            }
            prop_assert!(g.induces_clique_or_independent(a));
        }
    }

    #[test]
    fn json_round_trip_is_byte_identical(g in arb_graph(10)) {
        let json = g.to_json();
        let back = Graph::from_json(&json).unwrap();
        prop_assert_eq!(back.to_json(), json);
    }
}
