use qdist_core::graph::{complete, complete_bipartite, cycle, path, star};
use qdist_core::verify::{
    check_alpha_sandwich, check_cycle_matching, check_dia3, check_diameter_main, check_domination_bound,
    check_edge_interlacing, check_family_lemmas, check_gn3t1_q5, check_graph, check_high_index_bound,
    check_laplacian_remark, check_m02_bound, check_matching_upper, check_vertex_deletion, enumerate_graphs,
    sample_graphs, search_counterexamples, sweep_exhaustive, Context, EnumerationFilter, Instance, Status,
    TheoremId, VerifyError,
};
use qdist_core::{graph6_encode, make_family, FamilySpec, Graph};

fn count(r: &qdist_core::TheoremReport, key: &str) -> u64 {
    r.witness[key].as_u64().unwrap_or_else(|| panic!("missing {key} in {:?}", r.witness))
}

#[test]
fn enumeration_counts() {
    assert_eq!(enumerate_graphs(&EnumerationFilter::new(3).connected()).unwrap().count(), 4);
    assert_eq!(enumerate_graphs(&EnumerationFilter::new(4).connected()).unwrap().count(), 38);
    let with = enumerate_graphs(&EnumerationFilter::new(5).min_degree(2)).unwrap().count();
    let without = enumerate_graphs(&EnumerationFilter::new(5).min_degree(2).without_k_c5()).unwrap().count();
    assert_eq!(with - without, 12);
    assert!(matches!(
        enumerate_graphs(&EnumerationFilter::new(8)).map(|_| ()),
        Err(VerifyError::TooLarge { n: 8, .. })
    ));
}

#[test]
fn enumeration_is_in_mask_order() {
    let masks: Vec<u64> = enumerate_graphs(&EnumerationFilter::new(4)).unwrap().map(|g| g.edge_mask()).collect();
    assert_eq!(masks, (0..64).collect::<Vec<_>>());
}

#[test]
fn sampling() {
    let f = EnumerationFilter::new(10);
    let a: Vec<String> = sample_graphs(10, 1000, 1, &f).unwrap().map(|g| graph6_encode(&g)).collect();
    let b: Vec<String> = sample_graphs(10, 1000, 1, &f).unwrap().map(|g| graph6_encode(&g)).collect();
    assert_eq!(a.len(), 1000);
    assert_eq!(a, b);
    let d3 = EnumerationFilter::new(9).diameter(3);
    assert!(sample_graphs(9, 300, 2, &d3).unwrap().all(|g| qdist_core::invariants::diameter(&g) == Some(3)));
    // only labelings of P12 have diameter 11
    let none = EnumerationFilter::new(12).diameter(11);
    assert_eq!(sample_graphs(12, 50, 3, &none).unwrap().count(), 0);
    assert!(sample_graphs(7, 1, 1, &f).is_err());
    assert!(sample_graphs(17, 1, 1, &f).is_err());
}

#[test]
fn interlacing_examples() {
    for e in complete(4).edges() {
        let r = check_edge_interlacing(&complete(4), e).unwrap();
        assert!(r.passed);
        assert!(matches!(r.instance, Instance::Graph6(_)));
    }
    // C6 minus an edge is P6
    assert!(check_edge_interlacing(&cycle(6), (2, 3)).unwrap().passed);
    for v in 0..5 {
        assert!(check_vertex_deletion(&complete(5), v).unwrap().passed);
    }
    assert!(check_vertex_deletion(&complete(2), 1).unwrap().passed);
}

#[test]
fn matching_examples() {
    let c5 = check_matching_upper(&cycle(5)).unwrap();
    assert!(c5.passed);
    assert_eq!((count(&c5, "m_0_1"), count(&c5, "nu")), (2, 2));
    assert_eq!(check_graph(TheoremId::Delta2, &cycle(5)).unwrap().status, Status::NotApplicable);
    let k24 = check_graph(TheoremId::Delta2, &complete_bipartite(2, 4)).unwrap();
    assert!(k24.passed);
    assert_eq!((count(&k24, "m_0_1"), count(&k24, "nu")), (1, 2));
    for n in [5, 6, 7, 60] {
        assert!(check_cycle_matching(n).unwrap().passed);
    }
    assert_eq!(count(&check_cycle_matching(5).unwrap(), "m_0_1"), 2);
    assert_eq!(count(&check_cycle_matching(6).unwrap(), "m_0_1"), 1);
}

#[test]
fn bound_examples() {
    let k7 = check_domination_bound(&complete(7)).unwrap();
    assert_eq!((count(&k7, "m_0_1"), count(&k7, "gamma")), (0, 1));
    let c5 = check_domination_bound(&cycle(5)).unwrap();
    assert_eq!((count(&c5, "m_0_1"), count(&c5, "gamma")), (2, 2));
    let p6 = check_m02_bound(&path(6)).unwrap();
    assert_eq!((count(&p6, "m_0_2"), count(&p6, "nu")), (3, 3));
    assert!(p6.passed);
    let k23 = check_alpha_sandwich(&complete_bipartite(2, 3)).unwrap();
    assert!(k23.passed);
    assert_eq!(count(&k23, "alpha"), 3);
    assert!(check_alpha_sandwich(&complete(6)).unwrap().passed);
}

#[test]
fn diameter_examples() {
    for n in 3..=9 {
        let r = check_diameter_main(&complete(n)).unwrap();
        assert!(r.passed);
        assert_eq!(count(&r, "m_0_n_minus_2"), 0);
    }
    let k6e = make_family(&FamilySpec::CompleteMinusEdge { n: 6 }).unwrap();
    assert_eq!(count(&check_diameter_main(&k6e).unwrap(), "m_0_n_minus_2"), 1);
    let p8 = check_diameter_main(&path(8)).unwrap();
    assert!(p8.passed);
    assert_eq!(check_high_index_bound(&complete(6)).unwrap().status, Status::NotApplicable);
    let s = check_high_index_bound(&star(5)).unwrap();
    assert!(s.passed);
}

#[test]
fn family_examples() {
    assert!(check_family_lemmas(9, 3, 2, None).unwrap().passed);
    let r = check_family_lemmas(8, 5, 3, Some(1)).unwrap();
    assert!(r.passed);
    assert_eq!(count(&r, "threshold"), 4);
    assert!(count(&r, "m_0_threshold") >= 5);
    let q5 = check_gn3t1_q5(8, 2).unwrap();
    assert!(q5.passed);
    assert!(count(&q5, "count_lt_4") >= 4);
    assert!(check_family_lemmas(8, 6, 2, None).is_err());
}

#[test]
fn dia3_examples() {
    let r = check_dia3(7, None).unwrap();
    assert!(r.passed);
    assert_eq!(count(&r, "m_0_n_minus_3"), 2);
    assert_eq!(count(&r, "multiplicity_n_minus_3"), 3);
    let r = check_dia3(8, Some(2)).unwrap();
    assert!(r.passed);
    assert_eq!(count(&r, "m_0_n_minus_3"), 2);
    let ctx = Context::direct();
    let f = EnumerationFilter::new(7).diameter(3);
    let s = &sweep_exhaustive(&[TheoremId::Dia3], &f, &ctx).unwrap()[0];
    assert!(s.is_clean());
    assert_eq!(s.not_applicable, 0);
    assert!(s.passed > 0);
}

#[test]
fn laplacian_examples() {
    let r = check_laplacian_remark(10, 5, 3).unwrap();
    assert_eq!(count(&r, "laplacian_count"), 4);
    assert!(count(&r, "signless_count") >= 5);
    assert_eq!(count(&check_laplacian_remark(9, 4, 3).unwrap(), "laplacian_count"), 3);
}

#[test]
fn search_examples() {
    assert!(search_counterexamples(TheoremId::Delta2, 1..=6, 0, 1).unwrap().is_empty());
    assert!(search_counterexamples(TheoremId::EdgeInterlacing, 1..=5, 0, 1).unwrap().is_empty());
    assert!(search_counterexamples(TheoremId::MatchingUpper, 8..=8, 200, 5).unwrap().is_empty());
    assert!(matches!("no_such".parse::<TheoremId>(), Err(VerifyError::UnknownTheorem(_))));
    assert_eq!("diameter-main".parse::<TheoremId>().unwrap(), TheoremId::DiameterMain);
}

#[test]
fn disconnected_delta2_and_json_line() {
    // a disconnected graph with no isolated vertex makes delta2 applicable
    let g = cycle(3).disjoint_union(&cycle(4));
    let r = check_graph(TheoremId::Delta2, &g).unwrap();
    assert!(r.passed);
    let line = r.to_json_line();
    assert!(line.contains("\"theorem_id\":\"delta2\""));
    let empty = Graph::empty(4);
    assert_eq!(check_graph(TheoremId::MatchingUpper, &empty).unwrap().status, Status::NotApplicable);
}
