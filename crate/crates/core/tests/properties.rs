mod common;

use common::Masks;
use proptest::prelude::*;

use matchkit::census::canonical_code;
use matchkit::connectivity::{independence_number, minimum_vertex_cuts, vertex_connectivity};
use matchkit::decomposition::{equimatchability, gallai_edmonds, is_factor_critical, is_randomly_matchable};
use matchkit::format::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
use matchkit::harness::{check, revalidate};
use matchkit::matching::{
    augmenting_path, bipartite_max_matching, extend_to_maximal, is_maximal, maximum_matching, saturating_matching,
};
use matchkit::verdict::{StatementId, Status};
use matchkit::{Graph, Matching, VertexSet};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        (Just(n), proptest::collection::vec(any::<bool>(), pairs))
    })
    .prop_map(|(n, bits)| {
        let pairs = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
        Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
    })
}

fn permuted(g: &Graph, perm: &[usize]) -> Graph {
    Graph::from_edges(g.order(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn maximum_matching_is_maximum(g in graph(11)) {
        let m = maximum_matching(&g);
        prop_assert!(m.validate(&g).is_ok());
        prop_assert_eq!(m.len(), Masks::new(&g).nu());
        prop_assert!(augmenting_path(&g, &m).is_none());
    }

    #[test]
    fn gallai_edmonds_partition(g in graph(10)) {
        let ge = gallai_edmonds(&g);
        prop_assert_eq!(ge.d.len() + ge.a.len() + ge.c.len(), g.order());
        prop_assert_eq!(ge.component_count_excess(&g), ge.deficiency as isize);
        prop_assert_eq!(ge.deficiency, g.order() - 2 * Masks::new(&g).nu());
        // C has a perfect matching
        let (h, _) = g.induced_subgraph(&ge.c).unwrap();
        prop_assert_eq!(2 * Masks::new(&h).nu(), h.order());
    }

    #[test]
    fn konig_certificate(g in graph(11), split in 0usize..12) {
        let left: VertexSet = g.vertices().filter(|&v| v < split).collect();
        let right = g.vertex_set().difference(&left);
        let cert = bipartite_max_matching(&g, &left, &right).unwrap();
        prop_assert!(cert.verify(&g, &left, &right));
    }

    #[test]
    fn equimatchability_agrees_with_oracle(g in graph(10)) {
        let masks = Masks::new(&g);
        let e = equimatchability(&g);
        prop_assert_eq!(e.equimatchable, masks.equimatchable());
        if let Some(w) = e.witness {
            prop_assert!(g.is_independent(&w.independent));
            prop_assert!(is_maximal(&g, &w.maximal).unwrap());
            prop_assert!(w.maximal.len() < e.nu);
            prop_assert!(w.independent.is_disjoint(&w.maximal.covered()));
        }
    }

    #[test]
    fn factor_critical_and_randomly_matchable(g in graph(9)) {
        let masks = Masks::new(&g);
        prop_assert_eq!(is_factor_critical(&g), masks.factor_critical());
        prop_assert_eq!(is_randomly_matchable(&g), masks.randomly_matchable());
    }

    #[test]
    fn maximal_extension(g in graph(10)) {
        let m = extend_to_maximal(&g, &Matching::empty()).unwrap();
        prop_assert!(is_maximal(&g, &m).unwrap());
        prop_assert!(m.len() >= Masks::new(&g).min_maximal());
    }

    #[test]
    fn connectivity_and_cuts(g in graph(9)) {
        let masks = Masks::new(&g);
        let (kappa, count) = masks.kappa_and_cut_count();
        prop_assert_eq!(vertex_connectivity(&g), kappa);
        if g.order() >= 2 && !g.is_complete() {
            let (cuts, truncated) = minimum_vertex_cuts(&g, None).unwrap();
            prop_assert!(!truncated);
            prop_assert_eq!(cuts.len(), count);
            for c in &cuts {
                prop_assert_eq!(c.cut.len(), kappa);
                prop_assert!(c.is_valid(&g));
            }
        }
    }

    #[test]
    fn independence_number_is_exact(g in graph(12)) {
        let cert = independence_number(&g);
        prop_assert_eq!(cert.alpha, Masks::new(&g).alpha());
        prop_assert_eq!(cert.witness.len(), cert.alpha);
        prop_assert!(g.is_independent(&cert.witness));
    }

    #[test]
    fn saturating_matching_is_sound(g in graph(10), pick in any::<u16>()) {
        let req: VertexSet = g.vertices().filter(|&v| pick >> v & 1 == 1).collect();
        let found = saturating_matching(&g, &req).unwrap();
        if let Some(m) = &found {
            prop_assert!(m.validate(&g).is_ok());
            prop_assert!(req.is_subset(&m.covered()));
        }
        let mask = req.iter().fold(0u32, |m, v| m | 1 << v);
        prop_assert_eq!(found.is_some(), Masks::new(&g).saturable(mask));
    }

    #[test]
    fn formats_round_trip(g in graph(14)) {
        let g6 = emit_graph6(&g).unwrap();
        prop_assert_eq!(&parse_graph6(&g6).unwrap(), &g);
        prop_assert_eq!(&parse_edge_list(&emit_edge_list(&g)).unwrap(), &g);
    }

    #[test]
    fn canonical_code_is_invariant((g, perm) in graph_and_perm(9)) {
        prop_assert_eq!(canonical_code(&g).unwrap(), canonical_code(&permuted(&g, &perm)).unwrap());
    }

    #[test]
    fn checkers_never_fail_and_are_label_invariant((g, perm) in graph_and_perm(8)) {
        let h = permuted(&g, &perm);
        for id in StatementId::GRAPH_CHECKERS {
            let v = check(id, &g);
            if v.status == Status::Fails {
                prop_assert!(revalidate(&g, &v).is_ok(), "{} fails with an invalid certificate", id);
            }
            prop_assert_ne!(v.status, Status::Fails, "{} failed on {:?}", id, g);
            prop_assert_eq!(check(id, &h).status, v.status, "{} not invariant", id);
        }
    }
}
