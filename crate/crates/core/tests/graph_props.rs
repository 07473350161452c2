//! Property tests for the graph and format layers.

use std::collections::BTreeSet;

use proptest::prelude::*;

use crossings_core::constructions::zarankiewicz_drawing;
use crossings_core::graph::{PartitionedGraph, VertexId};
use crossings_core::io::{drawing_from_json, drawing_to_json};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Edge count of a complete multipartite graph is the sum of pairwise
    /// part-size products.
    #[test]
    fn edge_count_matches_products(sizes in prop::collection::vec(1usize..=5, 1..=5)) {
        let g = PartitionedGraph::complete_multipartite(&sizes).unwrap();
        let mut expected = 0;
        for i in 0..sizes.len() {
            for j in (i + 1)..sizes.len() {
                expected += sizes[i] * sizes[j];
            }
        }
        prop_assert_eq!(g.edge_count(), expected);
    }

    /// Induced subgraphs are idempotent and monotone under vertex-set
    /// inclusion.
    #[test]
    fn induced_idempotent_and_monotone(
        sizes in prop::collection::vec(1usize..=4, 2..=4),
        picks in prop::collection::vec(any::<bool>(), 16),
        shrink in prop::collection::vec(any::<bool>(), 16),
    ) {
        let g = PartitionedGraph::complete_multipartite(&sizes).unwrap();
        let vs: BTreeSet<VertexId> = g
            .vertex_ids()
            .enumerate()
            .filter(|(i, _)| picks[i % picks.len()])
            .map(|(_, v)| v)
            .collect();
        let sub = g.induced(&vs).unwrap();
        prop_assert_eq!(sub.vertex_count(), vs.len());

        // Idempotent: inducing on everything changes nothing.
        let again = sub.induced(&sub.vertex_ids().collect()).unwrap();
        prop_assert_eq!(again.edge_count(), sub.edge_count());
        prop_assert_eq!(again.part_sizes(), sub.part_sizes());

        // Monotone: a smaller vertex set never has more edges.
        let smaller: BTreeSet<VertexId> = vs
            .iter()
            .enumerate()
            .filter(|(i, _)| shrink[i % shrink.len()])
            .map(|(_, &v)| v)
            .collect();
        let inner = g.induced(&smaller).unwrap();
        prop_assert!(inner.edge_count() <= sub.edge_count());
    }

    /// Disjoint edge-set unions add cardinalities; intersections with
    /// incident stars behave like the partition says.
    #[test]
    fn edge_set_union_cardinality(sizes in prop::collection::vec(1usize..=4, 2..=4)) {
        let g = PartitionedGraph::complete_multipartite(&sizes).unwrap();
        let a = g.edge_set_between(0, 1).unwrap();
        let rest = g.all_edges().difference(&a);
        prop_assert!(a.is_disjoint(&rest));
        prop_assert_eq!(a.union(&rest).len(), g.edge_count());
        prop_assert_eq!(a.intersection(&rest).len(), 0);
    }

    /// Drawing JSON round-trips bit-identically for generated drawings.
    #[test]
    fn drawing_json_round_trip(m in 1usize..=4, n in 1usize..=5) {
        let d = zarankiewicz_drawing(m, n).unwrap();
        let text = drawing_to_json(&d);
        let d2 = drawing_from_json(&text).unwrap();
        prop_assert_eq!(drawing_to_json(&d2), text);
        prop_assert_eq!(d2.validate().total(), d.validate().total());
    }
}
