mod common;

use common::{independent_check, is_linear_forest_partition};
use oddcover::exact::exact_p2;
use oddcover::graph::{lower_bound, Edge, Graph};
use oddcover::io::{emit_edge_list, parse_edge_list, parse_graph6, Witness};
use oddcover::solver::{
    cover_first_bound, cycle_odd_cover, gen_counterexample, greedy_linear_forests, is_exceptional_family,
    iso_cover_from_forests, iso_cover_general, path_odd_cover, topological_cover, CountingCertificate,
};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let m = n * n.saturating_sub(1) / 2;
        prop::collection::vec(any::<bool>(), m).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p)).unwrap()
        })
    })
}

/// Symmetric difference of random closed walks over vertex sequences.
fn even_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(0..n, 3..=n), 1..5).prop_map(move |walks| {
            let mut g = Graph::new(n);
            for w in walks {
                let mut vs = w;
                vs.dedup();
                while vs.len() > 1 && vs[0] == vs[vs.len() - 1] {
                    vs.pop();
                }
                let mut seen = vec![false; n];
                if vs.len() < 3 || vs.iter().any(|&v| std::mem::replace(&mut seen[v], true)) {
                    continue;
                }
                for i in 0..vs.len() {
                    g.toggle_edge(Edge::new(vs[i], vs[(i + 1) % vs.len()]));
                }
            }
            g
        })
    })
}

fn graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n < 63);
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(Edge::new(i, j)) as u8);
        }
    }
    let mut s = String::from((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let v = chunk.iter().enumerate().fold(0u8, |acc, (k, &b)| acc | b << (5 - k));
        s.push((v + 63) as char);
    }
    s
}

fn path_bound(g: &Graph) -> usize {
    let p = g.profile();
    (p.v_odd / 2).max(2 * p.max_degree.div_ceil(2))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn odd_vertex_count_is_even(g in graph(16)) {
        let p = g.profile();
        prop_assert_eq!(p.v_odd % 2, 0);
        prop_assert_eq!(p.v_odd, (0..g.n()).filter(|&v| g.degree(v) % 2 == 1).count());
    }

    #[test]
    fn first_bound_cover_verifies(g in graph(16)) {
        let c = cover_first_bound(&g).unwrap();
        let p = g.profile();
        prop_assert!(independent_check(&g, &c.members, false));
        prop_assert!(c.count() <= p.v_odd / 2 + p.max_degree);
    }

    #[test]
    fn pipeline_cover_within_bound(g in graph(20)) {
        let c = path_odd_cover(&g).unwrap();
        prop_assert!(c.verify().is_valid());
        prop_assert!(independent_check(&g, &c.members, false));
        prop_assert!(c.count() <= path_bound(&g));
    }

    #[test]
    fn topological_count_is_exact(g in graph(14)) {
        prop_assume!(!is_exceptional_family(&g));
        let t = topological_cover(&g).unwrap();
        let p = g.profile();
        prop_assert_eq!(t.cover.count(), (p.v_odd / 2).max(p.max_degree.div_ceil(2)));
        prop_assert!(independent_check(&t.subdivided, &t.cover.members, false));
    }

    #[test]
    fn greedy_forests_partition_edges(g in graph(16)) {
        let f = greedy_linear_forests(&g);
        prop_assert!(is_linear_forest_partition(&g, &f));
        prop_assert!(f.len() <= g.max_degree().max(1));
    }

    #[test]
    fn forests_give_iso_cover(g in even_graph(14)) {
        let f = greedy_linear_forests(&g);
        let iso = iso_cover_from_forests(&g, &f).unwrap();
        prop_assert_eq!(iso.cover.count(), f.len());
        prop_assert!(iso.added_vertices <= f.len());
        let padded = g.with_isolated(iso.added_vertices);
        prop_assert!(independent_check(&padded, &iso.cover.members, false));
    }

    #[test]
    fn general_iso_cover_verifies(g in graph(14)) {
        let r = iso_cover_general(&g).unwrap();
        let padded = g.with_isolated(r.iso.added_vertices);
        prop_assert!(independent_check(&padded, &r.iso.cover.members, false));
        prop_assert!(r.iso.cover.count() <= path_bound(&g).max(1));
    }

    #[test]
    fn cycle_cover_members_are_cycles(g in even_graph(20)) {
        let c = cycle_odd_cover(&g).unwrap();
        prop_assert!(c.members.iter().all(|m| m.len() >= 3));
        prop_assert!(independent_check(&g, &c.members, true));
        prop_assert!(c.count() <= g.max_degree());
    }

    #[test]
    fn edge_list_round_trip(g in graph(20)) {
        let back = parse_edge_list(&emit_edge_list(&g)).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        prop_assert_eq!(parse_graph6(&graph6(&g)).unwrap(), g);
    }

    #[test]
    fn witness_round_trip(g in graph(14)) {
        let c = path_odd_cover(&g).unwrap();
        let w = Witness::from_cover(&c);
        let back = Witness::from_json(&w.to_json()).unwrap();
        prop_assert!(back.check(&g).unwrap());
        prop_assert_eq!(back, w);
    }

    #[test]
    fn lower_bound_below_exact(g in graph(5)) {
        let lb = lower_bound(&g, true).unwrap();
        let e = exact_p2(&g, usize::MAX).unwrap();
        prop_assert!(lb <= e.k);
    }

    #[test]
    fn certificate_arithmetic(k in 1usize..200) {
        let c = CountingCertificate::new(k);
        let edges = 2 * ((2 * k + 1) * (2 * k) / 2 - k) + k - 1;
        prop_assert_eq!(c.min_total_length, edges + 2);
        prop_assert_eq!(c.min_total_length, 4 * k * k + k + 1);
        prop_assert!(c.holds());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(3))]

    #[test]
    fn counterexample_shape(k in prop::sample::select(vec![3usize, 5, 7])) {
        let c = gen_counterexample(k).unwrap();
        let g = &c.graph;
        prop_assert_eq!(g.n(), 4 * k + 2);
        prop_assert!(g.is_even());
        prop_assert_eq!(g.max_degree(), 2 * k);
        prop_assert_eq!(c.paths.len(), k + 1);
        let members: Vec<Vec<usize>> = c.paths.iter().map(|p| p.vertices().to_vec()).collect();
        prop_assert!(independent_check(g, &members, false));
        prop_assert_eq!(c.paths.iter().map(|p| p.edge_count()).sum::<usize>(), g.edge_count());
        prop_assert_eq!(c.forests.len(), k);
        prop_assert!(is_linear_forest_partition(g, &c.forests));
        let half = 2 * k + 1;
        prop_assert_eq!(g.edges().filter(|e| (e.u() < half) != (e.v() < half)).count(), k - 1);
        let iso = c.iso_cover().unwrap();
        prop_assert_eq!(iso.cover.count(), k);
        prop_assert!(independent_check(&g.with_isolated(iso.added_vertices), &iso.cover.members, false));
    }
}
