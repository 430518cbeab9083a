use proptest::prelude::*;

use ctrl_backbone::distance::{self, PathPolicy};
use ctrl_backbone::io::{self, GraphDocument, ResultRow};
use ctrl_backbone::zero_forcing::{self, ForceOrder};
use ctrl_backbone::graph::UNREACHABLE;
use ctrl_backbone::{Graph, LeaderSet};

fn graph_and_leaders(max_n: usize) -> impl Strategy<Value = (Graph, LeaderSet)> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let k = pairs.len();
        (
            proptest::collection::vec(any::<bool>(), k),
            proptest::sample::subsequence((0..n).collect::<Vec<_>>(), 1..=n),
        )
            .prop_map(move |(mask, ids)| {
                let edges = pairs.iter().zip(&mask).filter(|(_, &b)| b).map(|(&e, _)| e);
                let g = Graph::new(n, edges).unwrap();
                let l = LeaderSet::for_graph(&g, ids).unwrap();
                (g, l)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn derived_set_ignores_force_order((g, l) in graph_and_leaders(12), seed in any::<u64>()) {
        let a = zero_forcing::derived_set(&g, &l).unwrap();
        let b = zero_forcing::derived_set_with(&g, &l, ForceOrder::Shuffled(seed)).unwrap();
        prop_assert_eq!(a.derived(), b.derived());
    }

    #[test]
    fn necessary_edges_are_in_every_backbone((g, l) in graph_and_leaders(10), seed in any::<u64>()) {
        let classes = zero_forcing::classify_edges(&g, &l).unwrap();
        let b = zero_forcing::zfs_backbone_with(&g, &l, ForceOrder::Shuffled(seed)).unwrap();
        prop_assert!(classes.necessary.is_subset(&b.edges));
        prop_assert_eq!(b.len(), b.preserved_bound - l.len());
    }

    #[test]
    fn zeta_range_and_zfs((g, l) in graph_and_leaders(14)) {
        let z = zero_forcing::zeta(&g, &l).unwrap();
        prop_assert!(l.len() <= z && z <= g.n());
        prop_assert_eq!(z == g.n(), zero_forcing::is_zfs(&g, &l).unwrap());
    }

    #[test]
    fn bfs_distances_are_consistent((g, l) in graph_and_leaders(14)) {
        let src = l.get(0);
        let d = g.bfs_distances(src).unwrap();
        prop_assert_eq!(d.get(src), 0);
        for (u, v) in g.edges() {
            let (du, dv) = (d.get(u), d.get(v));
            prop_assert_eq!(du == UNREACHABLE, dv == UNREACHABLE);
            if du != UNREACHABLE {
                prop_assert!(du.abs_diff(dv) <= 1);
            }
        }
        // removing an edge never shortens a distance
        if let Some(e) = g.edges().next() {
            let h = g.without_edge(e);
            let dh = h.bfs_distances(src).unwrap();
            for v in 0..g.n() {
                prop_assert!(dh.get(v) >= d.get(v));
            }
        }
    }

    #[test]
    fn greedy_pmi_is_valid((g, l) in graph_and_leaders(12)) {
        let seq = distance::longest_pmi_greedy(&g, &l).unwrap();
        seq.check_against(&distance::dl_matrix(&g, &l).unwrap()).unwrap();
        prop_assert!(l.len() <= seq.len() && seq.len() <= g.n());
        for policy in [PathPolicy::Reuse, PathPolicy::FirstFound] {
            let b = distance::distance_backbone(&g, &l, &seq, policy).unwrap();
            let bounds = distance::backbone_edge_bounds(seq.len(), l.len()).unwrap();
            prop_assert!(bounds.contains(b.len()));
            prop_assert!(b.edges.iter().all(|&(u, v)| g.has_edge(u, v)));
        }
    }

    #[test]
    fn edge_list_round_trip((g, l) in graph_and_leaders(14)) {
        let doc = GraphDocument::from_graph(&g, Some(&l));
        prop_assert_eq!(&io::parse_edge_list(&io::to_edge_list(&doc)).unwrap(), &doc);
        prop_assert_eq!(&GraphDocument::from_json(&doc.to_json().unwrap()).unwrap(), &doc);
        let b = zero_forcing::zfs_backbone(&g, &l).unwrap();
        let back = io::parse_backbone(&io::write_backbone(g.n(), &b)).unwrap();
        prop_assert_eq!(back.edges, b.edges);
        prop_assert_eq!(back.preserved_bound, b.preserved_bound);
    }

    #[test]
    fn csv_round_trip(rows in proptest::collection::vec(
        (1usize..60, 0.0f64..1.0, any::<u64>(), 1usize..10, 0usize..10, 0usize..20, 0usize..5),
        0..20,
    )) {
        let rows: Vec<ResultRow> = rows
            .into_iter()
            .map(|(n, p, seed, m, extra_z, extra_d, slack)| {
                let zeta = m + extra_z;
                let delta = m + extra_d;
                let bounds = distance::backbone_edge_bounds(delta, m).unwrap();
                ResultRow {
                    n, p, seed, m, zeta, delta,
                    e_bz: zeta - m,
                    e_bd: (bounds.lower + slack).min(bounds.upper),
                    bound_lower: bounds.lower,
                    bound_upper: bounds.upper,
                    min_sampled_rank: zeta.max(delta),
                }
            })
            .collect();
        let text = io::write_csv(&rows).unwrap();
        prop_assert_eq!(io::parse_csv(&text).unwrap(), rows);
    }
}
