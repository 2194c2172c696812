mod common;

use common::{consecutive_cycles, kit_two_edge_scan, pairs, xor_of, SHAPES};
use oddcover::graph::{CycleSet, Edge};
use oddcover::kit::{choose_integrable_pair, integrate_one_edge};

fn target(cs: &CycleSet, extra: &[Edge]) -> Vec<Edge> {
    let mut acc = std::collections::BTreeSet::new();
    for e in cs.edges().chain(extra.iter().copied()) {
        if !acc.remove(&e) {
            acc.insert(e);
        }
    }
    acc.into_iter().collect()
}

#[test]
fn one_edge_exhaustive() {
    for lens in SHAPES.iter().filter(|l| !l.is_empty()) {
        let cs = consecutive_cycles(lens);
        for f in pairs(8) {
            let tp = integrate_one_edge(&cs, f, None).unwrap_or_else(|e| panic!("{lens:?} {f}: {e}"));
            let got = xor_of(&[tp.p.vertices().to_vec(), tp.q.vertices().to_vec()], false);
            assert_eq!(got, target(&cs, &[f]), "{lens:?} {f}");
        }
    }
}

#[test]
fn two_edges_exhaustive() {
    let scan = kit_two_edge_scan();
    assert!(scan.disagreements.is_empty(), "{:?}", &scan.disagreements[..scan.disagreements.len().min(5)]);
    assert!(scan.failures.is_empty(), "{:?}", &scan.failures[..scan.failures.len().min(5)]);
    assert!(scan.exceptional > 0);
}

#[test]
fn pair_choice_never_fails() {
    for lens in [&[4usize, 3][..], &[5, 3], &[4, 4]] {
        let cs = consecutive_cycles(lens);
        let all = pairs(8);
        for (i, &a) in all.iter().enumerate() {
            for (j, &b) in all.iter().enumerate().skip(i + 1) {
                for &c in &all[j + 1..] {
                    if a.shares_vertex(b) || a.shares_vertex(c) || b.shares_vertex(c) {
                        continue;
                    }
                    choose_integrable_pair(&cs, [a, b, c]).unwrap();
                }
            }
        }
    }
}
