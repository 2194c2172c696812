mod common;

use std::collections::{HashMap, VecDeque};

use common::{all_graphs, gnp, independent_check, rng};
use oddcover::error::Error;
use oddcover::exact::{
    arboricity_density, enumerate_cycles, enumerate_paths, exact_c2, exact_linear_forests, exact_p2, exact_p2_iso,
    linear_arboricity, path_layer_sizes,
};
use oddcover::graph::{pair_count, pair_index, Edge, Graph};
use oddcover::solver::gen_counterexample;

fn falling(n: usize, k: usize) -> usize {
    (n - k + 1..=n).product()
}

fn mask(n: usize, edges: impl IntoIterator<Item = Edge>) -> u64 {
    edges.into_iter().fold(0, |m, e| m | 1 << pair_index(n, e))
}

/// Edge masks of every path (or cycle) on `n` vertices, by brute force over
/// vertex sequences, deduplicated.
fn walk_masks(n: usize, closed: bool) -> Vec<u64> {
    fn rec(n: usize, closed: bool, seq: &mut Vec<usize>, out: &mut Vec<u64>) {
        let min = if closed { 3 } else { 2 };
        if seq.len() >= min {
            let mut es: Vec<Edge> = seq.windows(2).map(|w| Edge::new(w[0], w[1])).collect();
            if closed {
                es.push(Edge::new(seq[0], seq[seq.len() - 1]));
            }
            out.push(mask(n, es));
        }
        for v in 0..n {
            if !seq.contains(&v) {
                seq.push(v);
                rec(n, closed, seq, out);
                seq.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, closed, &mut Vec::new(), &mut out);
    out.sort_unstable();
    out.dedup();
    out
}

fn bfs(gens: &[u64]) -> HashMap<u64, usize> {
    let mut dist = HashMap::from([(0u64, 0usize)]);
    let mut q = VecDeque::from([0u64]);
    while let Some(x) = q.pop_front() {
        let d = dist[&x];
        for &g in gens {
            dist.entry(x ^ g).or_insert_with(|| {
                q.push_back(x ^ g);
                d + 1
            });
        }
    }
    dist
}

fn is_linear(n: usize, es: &[Edge], forest_only: bool) -> bool {
    let mut deg = vec![0; n];
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] == x {
            x
        } else {
            let r = find(p, p[x]);
            p[x] = r;
            r
        }
    }
    for e in es {
        deg[e.u()] += 1;
        deg[e.v()] += 1;
        let (a, b) = (find(&mut parent, e.u()), find(&mut parent, e.v()));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    forest_only || deg.iter().all(|&d| d <= 2)
}

/// Fewest classes in an edge colouring where every class is a linear forest
/// (or just a forest).
fn brute_partition(g: &Graph, forest_only: bool) -> usize {
    let edges: Vec<Edge> = g.edges().collect();
    if edges.is_empty() {
        return 0;
    }
    (1..).find(|&k| {
        let total = (k as u64).pow(edges.len() as u32);
        (0..total).any(|mut code| {
            let mut classes = vec![Vec::new(); k];
            for &e in &edges {
                classes[(code % k as u64) as usize].push(e);
                code /= k as u64;
            }
            classes.iter().all(|c| is_linear(g.n(), c, forest_only))
        })
    })
    .unwrap()
}

#[test]
fn path_and_cycle_counts() {
    for n in 2..=7 {
        let expect: usize = (2..=n).map(|k| falling(n, k) / 2).sum();
        assert_eq!(enumerate_paths(n).unwrap().len(), expect, "n = {n}");
    }
    assert_eq!(enumerate_paths(6).unwrap().len(), 975);
    assert_eq!(enumerate_paths(7).unwrap().len(), 6846);
    for n in 3..=7 {
        let expect: usize = (3..=n).map(|k| falling(n, k) / (2 * k)).sum();
        assert_eq!(enumerate_cycles(n).unwrap().len(), expect, "n = {n}");
    }
    assert_eq!(enumerate_cycles(7).unwrap().len(), 1172);
    assert!(matches!(enumerate_paths(8), Err(Error::TooLarge { .. })));
}

#[test]
fn p2_matches_brute_force() {
    for n in 1..=5 {
        let dist = bfs(&walk_masks(n, false));
        assert_eq!(dist.len(), 1 << pair_count(n));
        for g in all_graphs(n) {
            let e = exact_p2(&g, usize::MAX).unwrap();
            assert_eq!(e.k, dist[&mask(n, g.edges())], "{g:?}");
            assert!(independent_check(&g, &e.witness.members, false));
        }
    }
}

#[test]
fn c2_matches_brute_force() {
    for n in 3..=6 {
        let dist = bfs(&walk_masks(n, true));
        for g in all_graphs(n).filter(Graph::is_even) {
            let e = exact_c2(&g, usize::MAX).unwrap();
            assert_eq!(e.k, dist[&mask(n, g.edges())], "{g:?}");
            assert!(independent_check(&g, &e.witness.members, true));
        }
    }
    let odd = Graph::from_edges(3, [(0, 1)]).unwrap();
    assert!(matches!(exact_c2(&odd, 5), Err(Error::OddDegree { .. })));
}

#[test]
fn layer_sizes() {
    for n in 2..=6 {
        let sizes = path_layer_sizes(n).unwrap();
        assert_eq!(sizes[0], 1);
        assert_eq!(sizes[1], walk_masks(n, false).len());
        assert_eq!(sizes.iter().sum::<usize>(), 1 << pair_count(n));
    }
}

#[test]
fn small_named_values() {
    let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    assert_eq!(exact_p2(&k4, 6).unwrap().k, 2);
    let c7 = Graph::from_edges(7, (0..7).map(|i| (i, (i + 1) % 7))).unwrap();
    assert_eq!(exact_p2(&c7, 6).unwrap().k, 2);
    assert_eq!(exact_c2(&c7, 6).unwrap().k, 1);
    let tri_sq = Graph::from_edges(7, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (3, 6)]).unwrap();
    assert_eq!(exact_p2(&tri_sq, 6).unwrap().k, 2);
    assert!(matches!(exact_p2(&k4, 1), Err(Error::BudgetExceeded)));
    assert!(matches!(exact_p2(&Graph::new(8), 6), Err(Error::TooLarge { .. })));
}

#[test]
fn seven_vertices_within_budget() {
    let mut r = rng(77);
    for _ in 0..30 {
        let g = gnp(7, 0.5, &mut r);
        let p = g.profile();
        let floor = (p.v_odd / 2).max(p.max_degree.div_ceil(2));
        match exact_p2(&g, 4) {
            Ok(e) => {
                assert!(e.k >= floor && e.k <= 4);
                assert!(independent_check(&g, &e.witness.members, false));
            }
            Err(Error::BudgetExceeded) => assert!(floor >= 4),
            Err(e) => panic!("{e}"),
        }
    }
}

#[test]
fn iso_never_worse() {
    for n in 1..=5 {
        for g in all_graphs(n) {
            let plain = exact_p2(&g, usize::MAX).unwrap().k;
            let iso = exact_p2_iso(&g, 1, usize::MAX).unwrap();
            assert!(iso.k <= plain);
            assert!(iso.added_vertices <= 1);
            assert!(independent_check(&g.with_isolated(iso.added_vertices), &iso.witness.members, false));
        }
    }
    let big = gen_counterexample(3).unwrap();
    assert!(matches!(exact_p2_iso(&big.graph, 1, 4), Err(Error::TooLarge { .. })));
}

#[test]
fn forests_match_brute_force() {
    let mut r = rng(5);
    let graphs = (1..=4).flat_map(all_graphs).chain((0..40).map(|_| gnp(5, 0.6, &mut r)));
    for g in graphs {
        let (la, forests) = linear_arboricity(&g).unwrap();
        assert_eq!(la, brute_partition(&g, false), "{g:?}");
        assert_eq!(forests.len(), la);
        assert!(common::is_linear_forest_partition(&g, &forests));
        if la > 0 {
            assert!(exact_linear_forests(&g, la - 1).unwrap().is_none());
        }
        assert_eq!(arboricity_density(&g).unwrap(), brute_partition(&g, true), "{g:?}");
    }
}
