use proptest::prelude::*;

use local_mds::algos::{
    algo1_mds, algo1_mds_centralized, algo_3round, algo_3round_centralized, algo_mvc, algo_mvc_centralized, Algorithm,
    AlgorithmConfig,
};
use local_mds::cuts::is_local_1_cut;
use local_mds::exact::{self, DominationInstance};
use local_mds::graph::{articulation_points, ball, blocks, connected_components, r_components, remove_true_twins};
use local_mds::{edgelist, Graph, VertexSet};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..=2 * n).prop_map(move |pairs| {
            let edges: Vec<_> = pairs.into_iter().filter(|(u, v)| u != v).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn component_count_without(g: &Graph, v: usize) -> usize {
    let keep: VertexSet = g.vertices().filter(|&w| w != v).collect();
    let (sub, _) = local_mds::graph::induced_subgraph(g, &keep).unwrap();
    connected_components(&sub).len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn articulation_points_match_deletion(g in graph(14)) {
        let base = connected_components(&g).len();
        let brute: VertexSet = g.vertices().filter(|&v| component_count_without(&g, v) > base).collect();
        prop_assert_eq!(articulation_points(&g), brute);
    }

    #[test]
    fn every_edge_lies_in_one_block(g in graph(14)) {
        let bs = blocks(&g);
        for (u, v) in g.edges() {
            let count = bs.iter().filter(|b| b.contains(u) && b.contains(v)).count();
            prop_assert_eq!(count, 1);
        }
        for v in g.vertices() {
            prop_assert!(bs.iter().any(|b| b.contains(v)));
        }
    }

    #[test]
    fn articulation_points_are_local_1_cuts(g in graph(14), r in 1usize..4) {
        let aps = articulation_points(&g);
        for v in aps.iter() {
            prop_assert!(is_local_1_cut(&g, v, r).unwrap().is_some());
        }
        // with the whole component in view the two notions coincide
        for v in g.vertices() {
            prop_assert_eq!(is_local_1_cut(&g, v, g.n()).unwrap().is_some(), aps.contains(v));
        }
    }

    #[test]
    fn balls_grow_with_radius(g in graph(14), r in 0usize..5) {
        for v in g.vertices() {
            prop_assert!(ball(&g, v, r).unwrap().is_subset(&ball(&g, v, r + 1).unwrap()));
        }
    }

    #[test]
    fn one_components_are_connected_components(g in graph(14)) {
        let all = VertexSet::full(g.n());
        prop_assert_eq!(r_components(&g, &all, 1).unwrap(), connected_components(&g));
    }

    #[test]
    fn twin_reduction_is_idempotent_and_keeps_mds(g in graph(12)) {
        let red = remove_true_twins(&g);
        let again = remove_true_twins(&red.reduced);
        prop_assert_eq!(again.reduced.n(), red.reduced.n());
        prop_assert_eq!(exact::mds_exact(&g).unwrap().len(), exact::mds_exact(&red.reduced).unwrap().len());
    }

    #[test]
    fn edge_lists_round_trip(g in graph(14)) {
        let text = edgelist::to_string(&g);
        prop_assert_eq!(edgelist::parse(&text).unwrap(), g);
    }

    #[test]
    fn both_oracles_return_the_same_canonical_optimum(g in graph(11)) {
        prop_assert_eq!(exact::mds_exact(&g).unwrap(), exact::mds_exact_enum(&g).unwrap());
        prop_assert_eq!(exact::mvc_exact(&g).unwrap(), exact::mvc_exact_enum(&g).unwrap());
        let targets: VertexSet = g.vertices().filter(|v| v % 2 == 0).collect();
        let inst = DominationInstance::restricted(&g, targets).unwrap();
        prop_assert_eq!(exact::mds_subset_exact(&inst).unwrap(), exact::mds_subset_enum(&inst).unwrap());
    }

    #[test]
    fn distributed_runs_match_centralized(g in graph(12), r1 in 1usize..4, r2 in 2usize..4, diam_cap in 1usize..5) {
        let cfg = AlgorithmConfig { r1, r2, diam_cap, ..AlgorithmConfig::default() };
        let a = algo1_mds(&g, &cfg).unwrap();
        let b = algo1_mds_centralized(&g, &cfg).unwrap();
        prop_assert_eq!(&a.phase_of, &b.phase_of);
        prop_assert!(a.is_valid(&g));
        prop_assert_eq!(a.rounds.rounds_used, cfg.mds_rounds());
        let c = algo_mvc(&g, &cfg).unwrap();
        prop_assert_eq!(&c.phase_of, &algo_mvc_centralized(&g, &cfg).unwrap().phase_of);
        prop_assert!(c.is_valid(&g));
        prop_assert_eq!(algo_3round(&g).chosen, algo_3round_centralized(&g).chosen);
    }

    #[test]
    fn every_algorithm_is_valid_on_arbitrary_graphs(g in graph(16)) {
        let cfg = AlgorithmConfig::default();
        for alg in Algorithm::ALL.into_iter().filter(|a| a.applies_to(&g)) {
            let r = alg.run(&g, &cfg).unwrap();
            prop_assert!(r.is_valid(&g), "{} on {:?}", alg, g.edges());
        }
    }

    #[test]
    fn reduced_solution_dominates_original(g in graph(12)) {
        // a dominating set of the twin-free graph, mapped back, dominates g
        let red = remove_true_twins(&g);
        let r = algo1_mds(&red.reduced, &AlgorithmConfig::default()).unwrap();
        let mapped = r.chosen.map(|v| red.to_original(v));
        prop_assert!(exact::verify_dominating(&g, &mapped, &VertexSet::full(g.n())));
    }
}
