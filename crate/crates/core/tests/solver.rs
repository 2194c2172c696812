mod common;

use std::collections::HashSet;

use common::{all_graphs, gnp, random_even, rng, sorted_edges, xor_of};
use oddcover::error::Error;
use oddcover::graph::{Edge, Graph};
use oddcover::solver::{
    cover_first_bound, cycle_top_cover, is_exceptional_family, path_odd_cover, topological_cover,
};

fn distinct(vs: &[usize]) -> bool {
    vs.iter().collect::<HashSet<_>>().len() == vs.len()
}

fn check_paths(g: &Graph, members: &[Vec<usize>]) {
    for p in members {
        assert!(p.len() >= 2 && distinct(p), "not a path: {p:?}");
    }
    assert_eq!(xor_of(members, false), sorted_edges(g.edges()), "xor mismatch on {:?}", g);
}

fn check_cycles(g: &Graph, members: &[Vec<usize>]) {
    for c in members {
        assert!(c.len() >= 3 && distinct(c), "not a cycle: {c:?}");
    }
    assert_eq!(xor_of(members, true), sorted_edges(g.edges()));
}

// Independent reading of a subdivision: every chain joins the ends of its
// edge through fresh vertices, and the chains partition the subdivided graph.
fn check_subdivision(g: &Graph, h: &Graph, chains: &[(Edge, Vec<usize>)]) {
    assert_eq!(chains.len(), g.edge_count());
    let mut inner = HashSet::new();
    let mut count = 0;
    for (e, c) in chains {
        assert!(g.has_edge(*e));
        let ends = [c[0], *c.last().unwrap()];
        assert!(ends == [e.u(), e.v()] || ends == [e.v(), e.u()]);
        for &x in &c[1..c.len() - 1] {
            assert!(x >= g.n() && inner.insert(x));
        }
        for w in c.windows(2) {
            assert!(h.has_edge(Edge::new(w[0], w[1])));
            count += 1;
        }
    }
    assert_eq!(count, h.edge_count());
}

fn topo_bound(g: &Graph) -> usize {
    let p = g.profile();
    (p.v_odd / 2).max(p.max_degree.div_ceil(2))
}

fn exercise(g: &Graph) {
    let p = g.profile();
    let c = cover_first_bound(g).unwrap();
    assert!(c.count() <= p.max_degree + p.v_odd / 2);
    check_paths(g, &c.members);

    let c = path_odd_cover(g).unwrap();
    assert!(c.count() <= (p.v_odd / 2).max(p.delta_even()));
    check_paths(g, &c.members);

    match topological_cover(g) {
        Ok(t) => {
            assert!(!is_exceptional_family(g));
            assert_eq!(t.cover.count(), topo_bound(g));
            let chains: Vec<_> = t.subdivision.chains.clone().into_iter().collect();
            check_subdivision(g, &t.subdivided, &chains);
            check_paths(&t.subdivided, &t.cover.members);
        }
        Err(Error::ExceptionalFamily) => assert!(is_exceptional_family(g)),
        Err(e) => panic!("topological cover failed on {g:?}: {e}"),
    }

    if g.is_even() {
        match cycle_top_cover(g) {
            Ok(t) => {
                assert_eq!(t.cover.count(), p.max_degree / 2);
                let chains: Vec<_> = t.subdivision.chains.clone().into_iter().collect();
                check_subdivision(g, &t.subdivided, &chains);
                check_cycles(&t.subdivided, &t.cover.members);
            }
            Err(Error::ExceptionalFamily) => {
                assert_eq!(p.max_degree, 2);
                assert!(g.nontrivial_components().len() >= 2);
            }
            Err(e) => panic!("cycle topological cover failed on {g:?}: {e}"),
        }
    }
}

#[test]
fn every_graph_up_to_six_vertices() {
    for n in 1..=6 {
        for g in all_graphs(n) {
            exercise(&g);
        }
    }
}

#[test]
fn random_graphs() {
    let mut r = rng(11);
    for i in 0..300 {
        let n = 7 + i % 14;
        let p = [0.15, 0.3, 0.5, 0.8][i % 4];
        exercise(&gnp(n, p, &mut r));
    }
}

#[test]
fn random_even_graphs() {
    let mut r = rng(12);
    for i in 0..200 {
        let n = 6 + i % 15;
        exercise(&random_even(n, 1 + i % 7, &mut r));
    }
}
