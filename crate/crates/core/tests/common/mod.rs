#![allow(dead_code)]

use oddcover::graph::{Cycle, CycleSet, Edge, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gnp(n: usize, p: f64, r: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::new(n);
    for a in 0..n {
        for b in a + 1..n {
            if r.gen_bool(p) {
                g.add_edge(Edge::new(a, b));
            }
        }
    }
    g
}

/// XOR of a few random cycles: always all-even.
pub fn random_even(n: usize, cycles: usize, r: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::new(n);
    for _ in 0..cycles {
        let len = r.gen_range(3..=n);
        let mut vs: Vec<usize> = (0..n).collect();
        for i in 0..len {
            let j = r.gen_range(i..n);
            vs.swap(i, j);
        }
        for i in 0..len {
            g.toggle_edge(Edge::new(vs[i], vs[(i + 1) % len]));
        }
    }
    g
}

/// Every simple graph on `n` labelled vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let m = pairs.len();
    (0u64..1 << m).map(move |mask| {
        Graph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p)).unwrap()
    })
}

/// Cycles on consecutive ids with the given lengths.
pub fn consecutive_cycles(lens: &[usize]) -> CycleSet {
    let mut start = 0;
    let mut cycles = Vec::new();
    for &l in lens {
        cycles.push(Cycle::new((start..start + l).collect()).unwrap());
        start += l;
    }
    CycleSet::new(cycles).unwrap()
}

/// Independent check for the K4 obstruction: walk every cycle, list which
/// edge each endpoint belongs to in cyclic order, and count the gaps.
pub fn brute_exceptional(cs: &CycleSet, f1: Edge, f2: Edge) -> bool {
    if cs.len() < 2 {
        return false;
    }
    for c in cs.cycles() {
        let vs = c.vertices();
        let marks: Vec<(usize, u8)> = vs
            .iter()
            .enumerate()
            .filter_map(|(i, &v)| {
                if f1.contains(v) {
                    Some((i, 1))
                } else if f2.contains(v) {
                    Some((i, 2))
                } else {
                    None
                }
            })
            .collect();
        if marks.len() != 4 {
            continue;
        }
        let alternating = marks[0].1 == marks[2].1 && marks[1].1 == marks[3].1 && marks[0].1 != marks[1].1;
        if !alternating {
            return false;
        }
        let len = vs.len();
        let gaps = (0..4)
            .filter(|&t| {
                let a = marks[t].0;
                let b = marks[(t + 1) % 4].0;
                (b + len - a) % len > 1
            })
            .count();
        return gaps <= 1;
    }
    false
}

/// XOR of the edge sets of the given vertex sequences, as a sorted list.
pub fn xor_of(paths: &[Vec<usize>], closed: bool) -> Vec<Edge> {
    let mut acc = std::collections::BTreeSet::new();
    for p in paths {
        let mut es: Vec<Edge> = p.windows(2).map(|w| Edge::new(w[0], w[1])).collect();
        if closed {
            es.push(Edge::new(p[p.len() - 1], p[0]));
        }
        for e in es {
            if !acc.remove(&e) {
                acc.insert(e);
            }
        }
    }
    acc.into_iter().collect()
}

pub fn sorted_edges(es: impl IntoIterator<Item = Edge>) -> Vec<Edge> {
    let mut v: Vec<Edge> = es.into_iter().collect();
    v.sort_unstable();
    v.dedup();
    v
}

pub const SHAPES: &[&[usize]] = &[
    &[], &[3], &[4], &[5], &[6], &[7], &[8],
    &[3, 3], &[3, 4], &[3, 5], &[4, 4], &[4, 3],
];

pub fn pairs(n: usize) -> Vec<Edge> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| Edge::new(a, b))).collect()
}

/// Outcome of integrating every pair of disjoint edges of K8 into every
/// cycle shape on at most eight vertices.
#[derive(Debug, Default)]
pub struct KitScan {
    pub configurations: usize,
    pub exceptional: usize,
    /// Oracle and library disagree on exceptionality.
    pub disagreements: Vec<String>,
    /// Wrong XOR, or success/failure not matching exceptionality.
    pub failures: Vec<String>,
}

pub fn kit_two_edge_scan() -> KitScan {
    use oddcover::error::Error;
    use oddcover::kit::{integrate_two_edges, is_exceptional_k4};
    let mut scan = KitScan::default();
    for lens in SHAPES {
        let cs = if lens.is_empty() { CycleSet::empty() } else { consecutive_cycles(lens) };
        for f1 in pairs(8) {
            for f2 in pairs(8) {
                if f1.shares_vertex(f2) || f1 == f2 {
                    continue;
                }
                scan.configurations += 1;
                let ex = is_exceptional_k4(&cs, f1, f2);
                if ex != brute_exceptional(&cs, f1, f2) {
                    scan.disagreements.push(format!("{lens:?} {f1} {f2}"));
                }
                let mut want: Vec<Edge> = cs.edges().collect();
                want.extend([f1, f2]);
                let want = xor_of(&want.iter().map(|e| vec![e.u(), e.v()]).collect::<Vec<_>>(), false);
                match integrate_two_edges(&cs, f1, f2) {
                    Ok(tp) => {
                        let got = xor_of(&[tp.p.vertices().to_vec(), tp.q.vertices().to_vec()], false);
                        if ex || got != want {
                            scan.failures.push(format!("{lens:?} {f1} {f2}: ok but exceptional={ex}"));
                        }
                    }
                    Err(Error::Exceptional(_)) if ex => scan.exceptional += 1,
                    Err(e) => scan.failures.push(format!("{lens:?} {f1} {f2}: {e}")),
                }
            }
        }
    }
    scan
}

/// Independent check that `forests` partition `E(g)` into linear forests.
pub fn is_linear_forest_partition(g: &Graph, forests: &[Vec<Edge>]) -> bool {
    let mut all: Vec<Edge> = forests.iter().flatten().copied().collect();
    all.sort_unstable();
    let expect: Vec<Edge> = g.edges().collect();
    if all.len() != expect.len() || all != sorted_edges(expect.iter().copied()) {
        return false;
    }
    forests.iter().all(|f| {
        let mut deg = vec![0; g.n()];
        let mut comp: Vec<usize> = (0..g.n()).collect();
        fn root(c: &[usize], mut x: usize) -> usize {
            while c[x] != x {
                x = c[x];
            }
            x
        }
        for e in f {
            deg[e.u()] += 1;
            deg[e.v()] += 1;
            let (a, b) = (root(&comp, e.u()), root(&comp, e.v()));
            if a == b {
                return false;
            }
            comp[a] = b;
        }
        deg.iter().all(|&d| d <= 2)
    })
}

/// Checks `members` are simple paths (or cycles) with XOR equal to `E(g)`.
pub fn independent_check(g: &Graph, members: &[Vec<usize>], closed: bool) -> bool {
    let min = if closed { 3 } else { 2 };
    let simple = members.iter().all(|m| {
        let mut s = m.clone();
        s.sort_unstable();
        s.dedup();
        m.len() >= min && s.len() == m.len() && m.iter().all(|&v| v < g.n())
    });
    simple && xor_of(members, closed) == sorted_edges(g.edges())
}
