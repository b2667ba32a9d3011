use berge::hypergraph::EdgeUniverse;
use berge::search::{self, PathQuery};
use berge::weights::{f_r, turan_exact, weight_report};
use berge::{
    check_spanning_cycle_property, enumerate_good_sets, find_good_set, rotation_closure, EdgeRef,
    Hypergraph, Rational, VertexSet,
};
use proptest::prelude::*;

/// A random `r`-uniform hypergraph on `n` vertices, `n <= 7`.
fn hypergraph() -> impl Strategy<Value = Hypergraph> {
    (3usize..=7, 3usize..=4, any::<u64>()).prop_filter_map("r <= n", |(n, r, bits)| {
        if r > n {
            return None;
        }
        let u = EdgeUniverse::new(n, r).unwrap();
        let chosen: Vec<usize> = (0..u.len()).filter(|&i| bits >> (i % 64) & 1 == 1).collect();
        Some(u.instance_from_indices(&chosen))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn deletion_partitions_edges(h in hypergraph(), s in any::<u64>()) {
        let s = VertexSet(s).intersection(h.vertices());
        let sub = h.delete_vertices(s);
        let ns = h.neighborhood_all(s);
        prop_assert_eq!(ns.len() + sub.graph.num_edges(), h.num_edges());
        for e in &sub.edge_map {
            prop_assert!(!ns.contains(e));
        }
    }

    #[test]
    fn neighborhood_distributes_over_union(h in hypergraph(), a in any::<u64>(), b in any::<u64>()) {
        let a = VertexSet(a).intersection(h.vertices());
        let b = VertexSet(b).intersection(h.vertices());
        let all: Vec<EdgeRef> = h.edge_refs().collect();
        let mut lhs = h.neighborhood(&all, a.union(b));
        let mut rhs = h.neighborhood(&all, a);
        rhs.extend(h.neighborhood(&all, b));
        rhs.sort();
        rhs.dedup();
        lhs.sort();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn components_partition(h in hypergraph()) {
        let comps = h.components();
        let mut seen = VertexSet::EMPTY;
        let mut edges = 0;
        for c in &comps {
            let vs = c.parent_vertices();
            prop_assert!(!vs.intersects(seen));
            seen = seen.union(vs);
            for e in &c.edge_map {
                prop_assert!(h.edge(*e).is_subset(vs));
            }
            edges += c.edge_map.len();
        }
        prop_assert_eq!(seen, h.vertices());
        prop_assert_eq!(edges, h.num_edges());
    }

    #[test]
    fn p_monotone_under_deletion(h in hypergraph(), s in any::<u64>()) {
        let s = VertexSet(s).intersection(h.vertices());
        let sub = h.delete_vertices(s);
        for (new, old) in sub.edge_map.iter().enumerate() {
            prop_assert!(search::p_edge(&h, *old) >= search::p_edge(&sub.graph, EdgeRef(new)));
        }
    }

    #[test]
    fn subpaths_exist_at_every_length(h in hypergraph()) {
        let k = search::longest_length(&h);
        for t in 0..=k {
            prop_assert!(search::has_path_of_length(&h, t));
            let w = search::search_witness(&h, &PathQuery::default().with_length(t)).unwrap();
            prop_assert_eq!(w.len(), t);
            prop_assert!(w.validate(&h).is_ok());
        }
        prop_assert!(!search::has_path_of_length(&h, k + 1));
    }

    #[test]
    fn sum_is_additive_and_bounded(h in hypergraph()) {
        let rep = weight_report(&h);
        let parts: Rational = rep.components.iter().map(|c| &c.sum).sum();
        prop_assert_eq!(&parts, &rep.sum);
        prop_assert!(rep.within_bound());
        prop_assert!(rep.classifier_agrees());
        let direct: Rational = h
            .edge_refs()
            .map(|e| f_r(h.r(), search::p_edge(&h, e)).unwrap().recip())
            .sum();
        prop_assert_eq!(direct, rep.sum);
    }

    #[test]
    fn witnesses_are_valid(h in hypergraph()) {
        if let Some((k, w)) = berge::longest_berge_path(&h) {
            prop_assert_eq!(w.len(), k);
            prop_assert!(w.validate(&h).is_ok());
        }
        for e in h.edge_refs() {
            let w = search::search_witness(&h, &PathQuery::through(e)).unwrap();
            prop_assert!(w.uses_edge(e));
            prop_assert_eq!(w.len(), search::p_edge(&h, e));
        }
        for len in 2..=h.num_edges().min(h.n()) {
            if let Some(c) = berge::find_berge_cycle(&h, len) {
                prop_assert_eq!(c.len(), len);
                prop_assert!(c.validate(&h).is_ok());
            }
        }
    }

    #[test]
    fn connected_instances_have_good_sets(h in hypergraph()) {
        prop_assume!(h.is_connected() && h.num_edges() > 0);
        let all = enumerate_good_sets(&h).unwrap();
        prop_assert!(!all.is_empty());
        let (_, c) = find_good_set(&h).unwrap();
        prop_assert!(c.verify(&h));
        prop_assert!(all.contains(&c));
        prop_assert!(check_spanning_cycle_property(&h).unwrap().pass);
    }

    #[test]
    fn rotation_witnesses_are_sound(h in hypergraph()) {
        if let Some((_, p)) = berge::longest_berge_path(&h) {
            for end in [p.start(), p.end()] {
                let fam = rotation_closure(&h, &p, end).unwrap();
                prop_assert!(fam.witnesses_sound(&h));
                prop_assert!(fam.bound_holds());
                prop_assert!(fam.terminals.contains(fam.base.end()));
                prop_assert!(!fam.terminals.contains(end) || p.is_empty());
            }
        }
    }
}

#[test]
fn turan_6_3_4_against_all_subsets() {
    let t = turan_exact(6, 3, 4).unwrap();
    let u = EdgeUniverse::new(6, 3).unwrap();
    let brute = (0u64..1 << u.len())
        .filter(|&s| !search::has_path_of_length(&u.instance(s), 4))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap();
    assert_eq!(t.exact, brute);
    assert_eq!(t.exact, 4);
    assert!(t.within_bound().unwrap());
}

#[test]
fn turan_within_bound_in_both_regimes() {
    for (n, r) in [(4, 3), (5, 3), (6, 3), (5, 4), (6, 4)] {
        for k in 2..=n {
            let t = turan_exact(n, r, k).unwrap();
            assert!(!search::has_path_of_length(&t.witness, k));
            if t.regime.is_some() {
                assert_eq!(t.within_bound(), Some(true), "n={n} r={r} k={k}");
            }
        }
    }
}
