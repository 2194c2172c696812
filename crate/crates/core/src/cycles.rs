//! Eulerization, balanced orientations and disjoint cycle sets through all
//! maximum-degree vertices, peeled layer by layer.

use std::collections::VecDeque;

use crate::error::{internal, precondition, Error, Result};
use crate::graph::{Cycle, CycleSet, Edge, Graph};

/// Vertex-disjoint pairs in the complete graph on the universe.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Matching {
    pairs: Vec<Edge>,
}

impl Matching {
    pub fn new(pairs: Vec<Edge>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for e in &pairs {
            for v in e.ends() {
                if !seen.insert(v) {
                    return Err(Error::NotAMatching(v));
                }
            }
        }
        Ok(Matching { pairs })
    }

    pub fn pairs(&self) -> &[Edge] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Perfect matching on the odd-degree vertices. Prefers existing edges at
/// maximum-degree vertices (removing them lowers Δ), then nonedges away
/// from maximum-degree vertices, then whatever is left, by vertex id.
pub fn odd_matching(g: &Graph) -> Matching {
    let delta = g.max_degree();
    let odd = g.odd_vertices();
    let is_max = |v: usize| g.degree(v) == delta;
    let mut used = vec![false; g.n()];
    let mut pairs = Vec::new();

    for &u in &odd {
        if used[u] {
            continue;
        }
        let pick = odd.iter().copied().find(|&v| {
            v != u && !used[v] && g.has_edge(Edge::new(u, v)) && (is_max(u) || is_max(v))
        });
        if let Some(v) = pick {
            used[u] = true;
            used[v] = true;
            pairs.push(Edge::new(u, v));
        }
    }
    for &u in &odd {
        if used[u] || is_max(u) {
            continue;
        }
        let pick = odd
            .iter()
            .copied()
            .find(|&v| v != u && !used[v] && !is_max(v) && !g.has_edge(Edge::new(u, v)));
        if let Some(v) = pick {
            used[u] = true;
            used[v] = true;
            pairs.push(Edge::new(u, v));
        }
    }
    let rest: Vec<usize> = odd.into_iter().filter(|&v| !used[v]).collect();
    for ch in rest.chunks(2) {
        pairs.push(Edge::new(ch[0], ch[1]));
    }
    pairs.sort_unstable();
    Matching { pairs }
}

/// Arcs of an orientation of an all-even graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Orientation {
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|a| a.0 == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|a| a.1 == v).count()
    }

    pub fn is_balanced(&self) -> bool {
        let mut bal = vec![0i64; self.n];
        for &(a, b) in &self.arcs {
            bal[a] += 1;
            bal[b] -= 1;
        }
        bal.iter().all(|&x| x == 0)
    }
}

/// Orients every edge along closed trails (Hierholzer), so in = out everywhere.
pub fn balanced_orientation(g: &Graph) -> Result<Orientation> {
    g.require_even()?;
    let n = g.n();
    let edges: Vec<Edge> = g.edges().collect();
    let mut inc: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (id, e) in edges.iter().enumerate() {
        inc[e.u()].push((e.v(), id));
        inc[e.v()].push((e.u(), id));
    }
    let mut used = vec![false; edges.len()];
    let mut ptr = vec![0usize; n];
    let mut arcs = Vec::with_capacity(edges.len());
    for s in 0..n {
        let mut stack = vec![s];
        while let Some(&x) = stack.last() {
            while ptr[x] < inc[x].len() && used[inc[x][ptr[x]].1] {
                ptr[x] += 1;
            }
            if ptr[x] == inc[x].len() {
                stack.pop();
            } else {
                let (y, id) = inc[x][ptr[x]];
                used[id] = true;
                arcs.push((x, y));
                stack.push(y);
            }
        }
    }
    Ok(Orientation { n, arcs })
}

/// Hopcroft-Karp on a bipartite graph with `adj[left] = right neighbours`.
/// Returns `mate_of_left`.
fn max_bipartite_matching(adj: &[Vec<usize>], n_right: usize) -> Vec<Option<usize>> {
    let n_left = adj.len();
    let mut ml: Vec<Option<usize>> = vec![None; n_left];
    let mut mr: Vec<Option<usize>> = vec![None; n_right];
    let mut dist = vec![usize::MAX; n_left];

    fn dfs(
        u: usize,
        adj: &[Vec<usize>],
        ml: &mut [Option<usize>],
        mr: &mut [Option<usize>],
        dist: &mut [usize],
    ) -> bool {
        for &v in &adj[u] {
            let ok = match mr[v] {
                None => true,
                Some(w) => dist[w] == dist[u] + 1 && dfs(w, adj, ml, mr, dist),
            };
            if ok {
                ml[u] = Some(v);
                mr[v] = Some(u);
                return true;
            }
        }
        dist[u] = usize::MAX;
        false
    }

    loop {
        let mut q = VecDeque::new();
        for u in 0..n_left {
            if ml[u].is_none() {
                dist[u] = 0;
                q.push_back(u);
            } else {
                dist[u] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = q.pop_front() {
            for &v in &adj[u] {
                match mr[v] {
                    None => found = true,
                    Some(w) if dist[w] == usize::MAX => {
                        dist[w] = dist[u] + 1;
                        q.push_back(w);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            break;
        }
        for u in 0..n_left {
            if ml[u].is_none() {
                dfs(u, adj, &mut ml, &mut mr, &mut dist);
            }
        }
    }
    ml
}

/// Vertex-disjoint cycles of `g` through every vertex of maximum degree.
///
/// Balanced orientation, then a perfect matching of the bipartite graph with
/// an arc `u_out -> v_in` per arc `uv` and a self pair `v_out -> v_in` for
/// each vertex below maximum degree; the matching is a permutation whose
/// nontrivial cycles are the answer.
pub fn max_degree_cycle_cover(g: &Graph) -> Result<CycleSet> {
    g.require_even()?;
    if g.is_empty() {
        return Err(precondition("cycle cover of a graph without edges"));
    }
    let n = g.n();
    let delta = g.max_degree();
    let orient = balanced_orientation(g)?;
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in orient.arcs() {
        adj[a].push(b);
    }
    for (v, out) in adj.iter_mut().enumerate() {
        out.sort_unstable();
        if g.degree(v) < delta {
            out.push(v);
        }
    }
    let mate = max_bipartite_matching(&adj, n);
    let succ: Vec<usize> = mate
        .into_iter()
        .map(|m| m.ok_or_else(|| internal("bipartite graph has no perfect matching")))
        .collect::<Result<_>>()?;

    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for s in 0..n {
        if seen[s] || succ[s] == s {
            continue;
        }
        let mut cyc = Vec::new();
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            cyc.push(x);
            x = succ[x];
        }
        if cyc.len() < 3 {
            return Err(internal("directed 2-cycle in a balanced orientation"));
        }
        cycles.push(Cycle::new(cyc)?);
    }
    CycleSet::new(cycles)
}

/// Repeatedly extracts [`max_degree_cycle_cover`] until no edges remain:
/// exactly Δ/2 layers partitioning E(g).
pub fn peel_cycle_layers(g: &Graph) -> Result<Vec<CycleSet>> {
    g.require_even()?;
    let mut cur = g.clone();
    let mut layers = Vec::with_capacity(g.max_degree() / 2);
    while !cur.is_empty() {
        let delta = cur.max_degree();
        let layer = max_degree_cycle_cover(&cur)?;
        for e in layer.edges() {
            if !cur.remove_edge(e) {
                return Err(internal("cycle layer uses an edge outside the graph"));
            }
        }
        if cur.max_degree() + 2 != delta && !(delta == 2 && cur.is_empty()) {
            return Err(internal("cycle layer missed a maximum-degree vertex"));
        }
        layers.push(layer);
    }
    Ok(layers)
}

/// Components of a graph whose degrees are all 0 or 2.
pub fn two_regular_cycles(g: &Graph) -> Result<CycleSet> {
    let mut cycles = Vec::new();
    for comp in g.nontrivial_components() {
        if comp.iter().any(|&v| g.degree(v) != 2) {
            return Err(precondition("graph is not a disjoint union of cycles"));
        }
        let start = comp[0];
        let mut cyc = vec![start];
        let mut prev = start;
        let mut cur = g.neighbors(start).next().unwrap();
        while cur != start {
            cyc.push(cur);
            let next = g.neighbors(cur).find(|&x| x != prev).unwrap();
            prev = cur;
            cur = next;
        }
        cycles.push(Cycle::new(cyc)?);
    }
    CycleSet::new(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).unwrap()
    }

    #[test]
    fn matching_examples() {
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let m = odd_matching(&path);
        assert_eq!(m.pairs(), &[Edge::new(0, 2)]);
        let tri = path.xor_with(m.pairs().iter().copied());
        assert_eq!(tri.edge_count(), 3);
        assert!(odd_matching(&complete(5)).is_empty());
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let m = odd_matching(&two);
        assert_eq!(m.len(), 2);
        assert!(two.xor_with(m.pairs().iter().copied()).is_even());
    }

    #[test]
    fn orientation_examples() {
        let o = balanced_orientation(&complete(3)).unwrap();
        assert_eq!(o.arcs().len(), 3);
        assert!(o.is_balanced());
        let o = balanced_orientation(&complete(5)).unwrap();
        assert!((0..5).all(|v| o.in_degree(v) == 2 && o.out_degree(v) == 2));
        assert!(balanced_orientation(&Graph::from_edges(2, [(0, 1)]).unwrap()).is_err());
    }

    #[test]
    fn cover_of_single_cycle_is_itself() {
        let c = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let cs = max_degree_cycle_cover(&c).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs.cycles()[0].vertices(), &[0, 1, 2, 3]);
    }

    #[test]
    fn k5_layers() {
        let g = complete(5);
        let cs = max_degree_cycle_cover(&g).unwrap();
        assert_eq!(cs.vertex_count(), 5);
        let layers = peel_cycle_layers(&g).unwrap();
        assert_eq!(layers.len(), 2);
        let total: usize = layers.iter().map(|l| l.edges().count()).sum();
        assert_eq!(total, 10);
    }

    #[test]
    fn two_regular_split() {
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (3, 6)]).unwrap();
        let cs = two_regular_cycles(&g).unwrap();
        assert_eq!(cs.len(), 2);
    }
}
