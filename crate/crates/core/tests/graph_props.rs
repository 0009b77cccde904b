//! Structural properties of the graph type: vertex deletion, named
//! families, and the graph6 codec.

use proptest::prelude::*;

use rqv_core::enumerate::graph6::{read_graph6, write_graph6};
use rqv_core::enumerate::{enumerate_connected, GraphFilter};
use rqv_core::{Family, Graph};

#[test]
fn delete_vertex_removes_exactly_the_incident_edges() {
    for n in 2..=6 {
        for g in enumerate_connected(n, GraphFilter::default()).unwrap() {
            for v in 0..n {
                let h = g.delete_vertex(v);
                assert_eq!(h.n(), n - 1);
                assert_eq!(h.m(), g.m() - g.degree(v), "n = {n}, v = {v}");
                // survivors keep their adjacency; deletion shifts labels
                // above v down by one
                let old = |w: usize| if w < v { w } else { w + 1 };
                for a in 0..n - 1 {
                    for b in 0..n - 1 {
                        assert_eq!(h.has_edge(a, b), g.has_edge(old(a), old(b)));
                    }
                }
            }
        }
    }
}

#[test]
fn named_families_are_connected_with_the_right_shape() {
    for f in [Family::Complete, Family::Star, Family::Cycle, Family::Path, Family::StarPlusEdge] {
        for n in f.min_vertices()..=20 {
            let g = Graph::family(f, n).unwrap();
            assert_eq!(g.n(), n);
            assert!(g.is_connected(), "{} on {n} vertices", f.name());
            match f {
                Family::Complete => assert!(g.is_complete()),
                Family::Star => assert!(g.is_star()),
                Family::Cycle => {
                    assert_eq!(g.m(), n);
                    assert!(g.degrees().iter().all(|&d| d == 2));
                }
                Family::Path => {
                    assert_eq!(g.m(), n - 1);
                    if n >= 2 {
                        assert_eq!(g.degrees().iter().filter(|&&d| d == 1).count(), 2.min(n));
                    }
                }
                Family::StarPlusEdge => {
                    assert_eq!(g.m(), n);
                    assert_eq!(g.max_degree(), n - 1);
                    if n >= 4 {
                        assert_eq!(g.degrees().iter().filter(|&&d| d == 2).count(), 2);
                    }
                }
            }
        }
        assert!(Graph::family(f, f.min_vertices() - 1).is_err());
    }
}

#[test]
fn graph6_roundtrips_every_enumerated_graph() {
    for n in 1..=6 {
        for g in enumerate_connected(n, GraphFilter::default()).unwrap() {
            let s = write_graph6(&g);
            let back = read_graph6(&s).unwrap();
            assert_eq!(back.n(), g.n());
            assert_eq!(back.edges(), g.edges());
        }
    }
}

proptest! {
    #[test]
    fn graph6_roundtrips_arbitrary_graphs(n in 1usize..=12, bits in proptest::collection::vec(any::<bool>(), 66)) {
        let mut edges = Vec::new();
        let mut k = 0;
        for v in 1..n {
            for u in 0..v {
                if bits[k] {
                    edges.push((u, v));
                }
                k += 1;
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        let s = write_graph6(&g);
        let back = read_graph6(&s).unwrap();
        prop_assert_eq!(back.n(), n);
        prop_assert_eq!(back.edges(), g.edges());
    }
}
