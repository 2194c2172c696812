//! Plain path odd-covers: the Δ + v_odd/2 bound and the
//! max{v_odd/2, 2 ceil(Δ/2)} bound.

use std::collections::VecDeque;

use crate::cycles::{odd_matching, peel_cycle_layers, two_regular_cycles, Matching};
use crate::error::{internal, precondition, Result};
use crate::graph::{CycleSet, Edge, Graph, OddCover, Path};
use crate::kit::{
    choose_integrable_pair, cover_cycles, integrate_four_edges, integrate_one_edge, integrate_two_edges,
};

/// Parameters of the layered construction for a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveBudget {
    /// Layers that absorb matching edges.
    pub t: usize,
    /// Degree left for the residual all-even part (may be negative).
    pub d: i64,
    pub delta_e: usize,
}

impl SolveBudget {
    /// `t` and `d` as used by the isolated-vertex construction.
    pub fn for_graph(g: &Graph) -> Self {
        let p = g.profile();
        let t = if p.v_odd == 4 && p.max_degree >= 3 { 2 } else { p.v_odd.div_ceil(4) };
        let delta_e = p.delta_even();
        SolveBudget { t, d: delta_e as i64 - 2 * t as i64, delta_e }
    }
}

/// A shortest path between the smallest odd vertex and the next odd vertex
/// of its component; the rest of the graph comes back alongside.
pub fn peel_odd_path(g: &Graph) -> Result<(Path, Graph)> {
    let odd = g.odd_vertices();
    let s = *odd.first().ok_or_else(|| precondition("no odd-degree vertex to peel from"))?;
    let mut pred = vec![usize::MAX; g.n()];
    pred[s] = s;
    let mut q = VecDeque::from([s]);
    while let Some(x) = q.pop_front() {
        for y in g.neighbors(x) {
            if pred[y] == usize::MAX {
                pred[y] = x;
                q.push_back(y);
            }
        }
    }
    let t = odd
        .iter()
        .copied()
        .find(|&v| v != s && pred[v] != usize::MAX)
        .ok_or_else(|| internal("odd vertex alone in its component"))?;
    let mut vs = vec![t];
    while *vs.last().unwrap() != s {
        vs.push(pred[*vs.last().unwrap()]);
    }
    vs.reverse();
    let path = Path::new(vs)?;
    let mut rest = g.clone();
    for e in path.edges() {
        rest.remove_edge(e);
    }
    Ok((path, rest))
}

fn layer_paths(layer: &CycleSet) -> Result<Vec<Path>> {
    if layer.is_empty() {
        Ok(Vec::new())
    } else {
        Ok(cover_cycles(layer)?.into_vec())
    }
}

fn one_edge_paths(layer: &CycleSet, f: Edge) -> Result<Vec<Path>> {
    if layer.is_empty() {
        Ok(vec![Path::from_edge(f)])
    } else {
        Ok(integrate_one_edge(layer, f, None)?.into_vec())
    }
}

fn checked(target: Graph, paths: Vec<Path>, bound: usize, what: &str) -> Result<OddCover> {
    let cover = OddCover::from_paths(target, paths);
    if !cover.verify().is_valid() {
        return Err(internal(format!("{what} produced an invalid cover")));
    }
    if cover.count() > bound {
        return Err(internal(format!("{what} used {} paths, bound is {bound}", cover.count())));
    }
    Ok(cover)
}

/// At most Δ + v_odd/2 paths: peel odd paths until all degrees are even,
/// then two paths per cycle layer.
pub fn cover_first_bound(g: &Graph) -> Result<OddCover> {
    let p = g.profile();
    let mut cur = g.clone();
    let mut paths = Vec::new();
    while !cur.is_even() {
        let (path, rest) = peel_odd_path(&cur)?;
        paths.push(path);
        cur = rest;
    }
    for layer in peel_cycle_layers(&cur)? {
        paths.extend(layer_paths(&layer)?);
    }
    checked(g.clone(), paths, p.max_degree + p.v_odd / 2, "first-bound cover")
}

/// Cover of `g_prime ⊕ m`: the first `t` cycle layers absorb the matching
/// two edges at a time, later layers get two paths each.
pub fn cover_eulerian_plus_matching(g_prime: &Graph, m: &Matching) -> Result<OddCover> {
    let target = g_prime.xor_with(m.pairs().iter().copied());
    let paths = cover_eulerian_plus_matching_paths(g_prime, m)?;
    let bound = 2 * m.len().div_ceil(2).max(2 * usize::from(m.len() == 2)).max(g_prime.max_degree() / 2);
    checked(target, paths, bound, "matching integration")
}

pub(crate) fn cover_eulerian_plus_matching_paths(g_prime: &Graph, m: &Matching) -> Result<Vec<Path>> {
    g_prime.require_even()?;
    let t = match m.len() {
        2 => 2,
        k => k.div_ceil(2),
    };
    let mut layers = peel_cycle_layers(g_prime)?;
    while layers.len() < t {
        layers.push(CycleSet::empty());
    }
    let mut ms: Vec<Edge> = m.pairs().to_vec();
    let mut paths = Vec::new();
    let mut i = 0;
    while i < t {
        match ms.len() {
            0 => {
                paths.extend(layer_paths(&layers[i])?);
                i += 1;
            }
            1 => {
                paths.extend(one_edge_paths(&layers[i], ms[0])?);
                ms.clear();
                i += 1;
            }
            2 => {
                paths.extend(one_edge_paths(&layers[i], ms[0])?);
                paths.extend(one_edge_paths(&layers[i + 1], ms[1])?);
                ms.clear();
                i += 2;
            }
            4 => {
                let fs = [ms[0], ms[1], ms[2], ms[3]];
                paths.extend(integrate_four_edges(&layers[i], &layers[i + 1], fs)?);
                ms.clear();
                i += 2;
            }
            _ => {
                let ((a, b), tp) = choose_integrable_pair(&layers[i], [ms[0], ms[1], ms[2]])?;
                paths.extend(tp.into_vec());
                ms.remove(b);
                ms.remove(a);
                i += 1;
            }
        }
    }
    if !ms.is_empty() {
        return Err(internal("matching edges left after the integration rounds"));
    }
    for layer in &layers[i.min(layers.len())..] {
        paths.extend(layer_paths(layer)?);
    }
    Ok(paths)
}

/// At most max{v_odd/2, 2 ceil(Δ/2)} paths.
pub fn path_odd_cover(g: &Graph) -> Result<OddCover> {
    let p0 = g.profile();
    let bound = (p0.v_odd / 2).max(p0.delta_even());
    let mut cur = g.clone();
    let mut paths = Vec::new();
    loop {
        let p = cur.profile();
        if p.v_odd / 2 <= p.delta_even() {
            break;
        }
        let (path, rest) = peel_odd_path(&cur)?;
        paths.push(path);
        cur = rest;
    }
    let m = odd_matching(&cur);
    let g_prime = cur.xor_with(m.pairs().iter().copied());
    if cur.max_degree() <= 2 && m.len() == 2 {
        let cs = two_regular_cycles(&g_prime)?;
        paths.extend(integrate_two_edges(&cs, m.pairs()[0], m.pairs()[1])?.into_vec());
    } else {
        paths.extend(cover_eulerian_plus_matching_paths(&g_prime, &m)?);
    }
    checked(g.clone(), paths, bound, "path odd-cover")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn peel_examples() {
        let path = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let (p, rest) = peel_odd_path(&path).unwrap();
        assert_eq!(p.vertices(), &[0, 1, 2, 3]);
        assert!(rest.is_empty());
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let (p, rest) = peel_odd_path(&star).unwrap();
        assert_eq!(p.edge_count(), 1);
        assert_eq!(rest.edge_count(), 2);
        assert!(peel_odd_path(&cycle(4)).is_err());
    }

    #[test]
    fn first_bound_examples() {
        assert_eq!(cover_first_bound(&cycle(5)).unwrap().count(), 2);
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(cover_first_bound(&path).unwrap().count(), 1);
        assert!(cover_first_bound(&complete(5)).unwrap().count() <= 4);
    }

    #[test]
    fn eulerian_plus_matching_examples() {
        // 4-regular circulant on 7 vertices, no matching: two layers.
        let g = Graph::from_edges(7, (0..7).flat_map(|i| [(i, (i + 1) % 7), (i, (i + 2) % 7)])).unwrap();
        assert_eq!(cover_eulerian_plus_matching(&g, &Matching::default()).unwrap().count(), 4);
        let m = Matching::new(vec![Edge::new(0, 3)]).unwrap();
        assert_eq!(cover_eulerian_plus_matching(&cycle(6), &m).unwrap().count(), 2);
    }

    #[test]
    fn path_cover_examples() {
        assert_eq!(path_odd_cover(&cycle(6)).unwrap().count(), 2);
        let star = Graph::from_edges(8, (1..8).map(|i| (0, i))).unwrap();
        assert!(path_odd_cover(&star).unwrap().count() <= 8);
        assert!(path_odd_cover(&complete(5)).unwrap().count() <= 4);
        assert_eq!(path_odd_cover(&Graph::new(3)).unwrap().count(), 0);
    }
}
