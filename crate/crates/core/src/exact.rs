//! Exact values on small graphs: breadth-first search over the GF(2) edge
//! space for p2 and c2, backtracking for linear forests, and the density
//! formula for arboricity.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{internal, precondition, Error, Result};
use crate::graph::{pair_count, pair_index, Cycle, CoverKind, Edge, Graph, OddCover, Path};

/// Largest universe for `exact_p2` and `exact_c2`.
pub const MAX_EXACT_N: usize = 7;
/// Largest universe searched exhaustively; n = 7 uses a radius-2 table.
pub const FULL_BFS_N: usize = 6;
pub const MAX_FOREST_N: usize = 10;
pub const MAX_DENSITY_N: usize = 12;
/// Backtracking nodes allowed per `exact_linear_forests` call.
pub const FOREST_NODE_BUDGET: u64 = 20_000_000;

const UNSEEN: u8 = u8::MAX;

/// A minimum-size witness.
#[derive(Clone, Debug)]
pub struct Exact {
    pub k: usize,
    pub witness: OddCover,
}

fn mask_of(n: usize, edges: impl IntoIterator<Item = Edge>) -> u64 {
    edges.into_iter().fold(0, |m, e| m | 1 << pair_index(n, e))
}

fn check_n(n: usize, max: usize) -> Result<()> {
    if n > max {
        Err(Error::TooLarge { n, max })
    } else {
        Ok(())
    }
}

/// Every path on at least two vertices of the complete graph on `n`
/// vertices, each undirected path once (first vertex below last).
pub fn enumerate_paths(n: usize) -> Result<Vec<Path>> {
    check_n(n, MAX_EXACT_N)?;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn grow(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Path>) {
        if cur.len() >= 2 && cur[0] < cur[cur.len() - 1] {
            out.push(Path::new(cur.clone()).expect("distinct vertices"));
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                grow(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    grow(&mut cur, &mut used, &mut out);
    Ok(out)
}

/// Every cycle of the complete graph on `n` vertices, each once: smallest
/// vertex first, second vertex below the last.
pub fn enumerate_cycles(n: usize) -> Result<Vec<Cycle>> {
    check_n(n, MAX_EXACT_N)?;
    let mut out = Vec::new();
    for start in 0..n {
        let mut cur = vec![start];
        let mut used = vec![false; n];
        used[start] = true;
        fn grow(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Cycle>) {
            if cur.len() >= 3 && cur[1] < cur[cur.len() - 1] {
                out.push(Cycle::new(cur.clone()).expect("distinct vertices"));
            }
            for v in cur[0] + 1..used.len() {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    grow(cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        grow(&mut cur, &mut used, &mut out);
    }
    Ok(out)
}

/// Full BFS from the zero vector: distance and the last generator used.
struct FullTable {
    masks: Vec<u64>,
    dist: Vec<u8>,
    pred: Vec<u16>,
}

impl FullTable {
    fn build(masks: Vec<u64>, bits: usize) -> Self {
        let size = 1usize << bits;
        let mut dist = vec![UNSEEN; size];
        let mut pred = vec![0u16; size];
        dist[0] = 0;
        let mut frontier = vec![0u64];
        let mut d = 0u8;
        while !frontier.is_empty() {
            d += 1;
            let mut next = Vec::new();
            for &s in &frontier {
                for (i, &m) in masks.iter().enumerate() {
                    let t = (s ^ m) as usize;
                    if dist[t] == UNSEEN {
                        dist[t] = d;
                        pred[t] = i as u16;
                        next.push(t as u64);
                    }
                }
            }
            frontier = next;
        }
        FullTable { masks, dist, pred }
    }

    fn walk(&self, mut s: u64) -> Vec<usize> {
        let mut out = Vec::new();
        while s != 0 {
            let i = self.pred[s as usize] as usize;
            out.push(i);
            s ^= self.masks[i];
        }
        out
    }
}

/// Cycle-space BFS keyed by vector.
struct SparseTable {
    masks: Vec<u64>,
    seen: HashMap<u64, (u8, u16)>,
}

impl SparseTable {
    fn build(masks: Vec<u64>) -> Self {
        let mut seen = HashMap::new();
        seen.insert(0u64, (0u8, 0u16));
        let mut frontier = vec![0u64];
        let mut d = 0u8;
        while !frontier.is_empty() {
            d += 1;
            let mut next = Vec::new();
            for &s in &frontier {
                for (i, &m) in masks.iter().enumerate() {
                    let t = s ^ m;
                    seen.entry(t).or_insert_with(|| {
                        next.push(t);
                        (d, i as u16)
                    });
                }
            }
            frontier = next;
        }
        SparseTable { masks, seen }
    }

    fn walk(&self, mut s: u64) -> Vec<usize> {
        let mut out = Vec::new();
        while s != 0 {
            let i = self.seen[&s].1 as usize;
            out.push(i);
            s ^= self.masks[i];
        }
        out
    }
}

/// Radius-2 ball around zero for n = 7, plus a lookup back to path indices.
struct BallTable {
    masks: Vec<u64>,
    index: HashMap<u64, u16>,
    dist: Vec<u8>,
    first: Vec<u16>,
}

impl BallTable {
    fn build(masks: Vec<u64>, bits: usize) -> Self {
        let size = 1usize << bits;
        let mut dist = vec![UNSEEN; size];
        let mut first = vec![0u16; size];
        dist[0] = 0;
        let mut index = HashMap::new();
        for (i, &m) in masks.iter().enumerate() {
            index.insert(m, i as u16);
            if dist[m as usize] == UNSEEN {
                dist[m as usize] = 1;
                first[m as usize] = i as u16;
            }
        }
        for (i, &a) in masks.iter().enumerate() {
            for &b in &masks[i + 1..] {
                let t = (a ^ b) as usize;
                if dist[t] == UNSEEN {
                    dist[t] = 2;
                    first[t] = i as u16;
                }
            }
        }
        BallTable { masks, index, dist, first }
    }

    fn within(&self, s: u64) -> Option<u8> {
        let d = self.dist[s as usize];
        (d != UNSEEN).then_some(d)
    }

    fn walk(&self, s: u64) -> Vec<usize> {
        match self.dist[s as usize] {
            0 => vec![],
            1 => vec![self.first[s as usize] as usize],
            _ => {
                let i = self.first[s as usize] as usize;
                vec![i, self.index[&(s ^ self.masks[i])] as usize]
            }
        }
    }
}

fn path_masks(n: usize) -> Result<(Vec<Path>, Vec<u64>)> {
    let paths = enumerate_paths(n)?;
    let masks = paths.iter().map(|p| mask_of(n, p.edges())).collect();
    Ok((paths, masks))
}

fn full_table(n: usize) -> &'static (Vec<Path>, FullTable) {
    static TABLES: [OnceLock<(Vec<Path>, FullTable)>; FULL_BFS_N + 1] = [const { OnceLock::new() }; FULL_BFS_N + 1];
    TABLES[n].get_or_init(|| {
        let (paths, masks) = path_masks(n).expect("n checked");
        (paths, FullTable::build(masks, pair_count(n)))
    })
}

fn ball_table() -> &'static (Vec<Path>, BallTable) {
    static TABLE: OnceLock<(Vec<Path>, BallTable)> = OnceLock::new();
    TABLE.get_or_init(|| {
        let (paths, masks) = path_masks(MAX_EXACT_N).expect("n checked");
        (paths, BallTable::build(masks, pair_count(MAX_EXACT_N)))
    })
}

fn cycle_table(n: usize) -> &'static (Vec<Cycle>, SparseTable) {
    static TABLES: [OnceLock<(Vec<Cycle>, SparseTable)>; MAX_EXACT_N + 1] =
        [const { OnceLock::new() }; MAX_EXACT_N + 1];
    TABLES[n].get_or_init(|| {
        let cycles = enumerate_cycles(n).expect("n checked");
        let masks = cycles.iter().map(|c| mask_of(n, c.edges())).collect();
        (cycles, SparseTable::build(masks))
    })
}

fn finish(g: &Graph, kind: CoverKind, members: Vec<Vec<usize>>, max_k: usize) -> Result<Exact> {
    let k = members.len();
    if k > max_k {
        return Err(Error::BudgetExceeded);
    }
    let witness = OddCover { target: g.clone(), kind, members };
    if !witness.verify().is_valid() {
        return Err(internal("search witness does not verify"));
    }
    Ok(Exact { k, witness })
}

/// Minimum number of paths whose XOR is `E(g)`, with a witness.
/// Fails with `BudgetExceeded` when the answer is larger than `max_k`.
pub fn exact_p2(g: &Graph, max_k: usize) -> Result<Exact> {
    let n = g.n();
    check_n(n, MAX_EXACT_N)?;
    let target = mask_of(n, g.edges());
    let idx = if n <= FULL_BFS_N {
        let (paths, table) = full_table(n);
        let members = table.walk(target);
        return finish(g, CoverKind::Path, members.iter().map(|&i| paths[i].vertices().to_vec()).collect(), max_k);
    } else {
        let (_, ball) = ball_table();
        if ball.within(target).is_some() {
            ball.walk(target)
        } else if max_k < 3 {
            return Err(Error::BudgetExceeded);
        } else if let Some(i) = (0..ball.masks.len()).find(|&i| ball.within(target ^ ball.masks[i]).is_some()) {
            let mut w = ball.walk(target ^ ball.masks[i]);
            w.push(i);
            w
        } else if max_k < 4 {
            return Err(Error::BudgetExceeded);
        } else {
            let m = &ball.masks;
            let hit = (0..m.len()).find_map(|i| {
                (i + 1..m.len()).find(|&j| ball.within(target ^ m[i] ^ m[j]).is_some()).map(|j| (i, j))
            });
            let (i, j) = hit.ok_or(Error::BudgetExceeded)?;
            let mut w = ball.walk(target ^ m[i] ^ m[j]);
            w.extend([i, j]);
            w
        }
    };
    let (paths, _) = ball_table();
    finish(g, CoverKind::Path, idx.iter().map(|&i| paths[i].vertices().to_vec()).collect(), max_k)
}

/// Minimum number of cycles whose XOR is `E(g)` for all-even `g`.
pub fn exact_c2(g: &Graph, max_k: usize) -> Result<Exact> {
    let n = g.n();
    check_n(n, MAX_EXACT_N)?;
    g.require_even()?;
    let (cycles, table) = cycle_table(n);
    let target = mask_of(n, g.edges());
    if !table.seen.contains_key(&target) {
        return Err(internal("all-even graph outside the cycle space"));
    }
    let members: Vec<Vec<usize>> = table.walk(target).iter().map(|&i| cycles[i].vertices().to_vec()).collect();
    if 2 * members.len() < g.max_degree() {
        return Err(internal("cycle count below half the maximum degree"));
    }
    finish(g, CoverKind::Cycle, members, max_k)
}

/// Best `exact_p2` over `g` padded with 0..=extra isolated vertices.
#[derive(Clone, Debug)]
pub struct ExactIso {
    pub k: usize,
    pub added_vertices: usize,
    pub witness: OddCover,
}

pub fn exact_p2_iso(g: &Graph, extra: usize, max_k: usize) -> Result<ExactIso> {
    check_n(g.n() + extra, MAX_EXACT_N)?;
    let mut best: Option<ExactIso> = None;
    let mut last_err = None;
    for a in 0..=extra {
        let cap = best.as_ref().map_or(max_k, |b| b.k.saturating_sub(1));
        match exact_p2(&g.with_isolated(a), cap) {
            Ok(e) => best = Some(ExactIso { k: e.k, added_vertices: a, witness: e.witness }),
            Err(Error::BudgetExceeded) => last_err = Some(Error::BudgetExceeded),
            Err(e) => return Err(e),
        }
    }
    best.ok_or_else(|| last_err.unwrap_or(Error::BudgetExceeded))
}

struct ForestSearch {
    edges: Vec<Edge>,
    k: usize,
    colour: Vec<usize>,
    deg: Vec<Vec<u8>>,
    parent: Vec<Vec<usize>>,
    size: Vec<Vec<usize>>,
    nodes: u64,
}

impl ForestSearch {
    fn root(&self, c: usize, mut x: usize) -> usize {
        while self.parent[c][x] != x {
            x = self.parent[c][x];
        }
        x
    }

    fn go(&mut self, i: usize, used: usize) -> Result<bool> {
        if i == self.edges.len() {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > FOREST_NODE_BUDGET {
            return Err(Error::BudgetExceeded);
        }
        let [a, b] = self.edges[i].ends();
        for c in 0..(used + 1).min(self.k) {
            if self.deg[c][a] >= 2 || self.deg[c][b] >= 2 {
                continue;
            }
            let (ra, rb) = (self.root(c, a), self.root(c, b));
            if ra == rb {
                continue;
            }
            let (big, small) = if self.size[c][ra] >= self.size[c][rb] { (ra, rb) } else { (rb, ra) };
            self.parent[c][small] = big;
            self.size[c][big] += self.size[c][small];
            self.deg[c][a] += 1;
            self.deg[c][b] += 1;
            self.colour[i] = c;
            if self.go(i + 1, used.max(c + 1))? {
                return Ok(true);
            }
            self.deg[c][a] -= 1;
            self.deg[c][b] -= 1;
            self.size[c][big] -= self.size[c][small];
            self.parent[c][small] = small;
        }
        Ok(false)
    }
}

/// An edge colouring with `k` colours whose classes are linear forests, or
/// `None` when none exists.
pub fn exact_linear_forests(g: &Graph, k: usize) -> Result<Option<Vec<Vec<Edge>>>> {
    let n = g.n();
    check_n(n, MAX_FOREST_N)?;
    if g.edge_count() == 0 {
        return Ok(Some(vec![Vec::new(); k]));
    }
    if k == 0 || g.max_degree() > 2 * k {
        return Ok(None);
    }
    let mut edges: Vec<Edge> = g.edges().collect();
    edges.sort_by_key(|e| std::cmp::Reverse(g.degree(e.u()) + g.degree(e.v())));
    let mut s = ForestSearch {
        colour: vec![0; edges.len()],
        edges,
        k,
        deg: vec![vec![0; n]; k],
        parent: vec![(0..n).collect(); k],
        size: vec![vec![1; n]; k],
        nodes: 0,
    };
    if !s.go(0, 0)? {
        return Ok(None);
    }
    let mut out = vec![Vec::new(); k];
    for (e, &c) in s.edges.iter().zip(&s.colour) {
        out[c].push(*e);
    }
    Ok(Some(out))
}

/// Linear arboricity with a witness decomposition.
pub fn linear_arboricity(g: &Graph) -> Result<(usize, Vec<Vec<Edge>>)> {
    let start = g.max_degree().div_ceil(2);
    for k in start..=g.edge_count().max(start) {
        if let Some(f) = exact_linear_forests(g, k)? {
            return Ok((k, f));
        }
    }
    Err(internal("no linear forest decomposition found"))
}

/// Arboricity by the density formula: the maximum over vertex sets S with
/// at least two vertices of ceil(e(S) / (|S| - 1)).
pub fn arboricity_density(g: &Graph) -> Result<usize> {
    let n = g.n();
    check_n(n, MAX_DENSITY_N)?;
    let edges: Vec<(usize, usize)> = g.edges().map(|e| (e.u(), e.v())).collect();
    let mut best = 0;
    for s in 0u32..1 << n {
        let v = s.count_ones() as usize;
        if v < 2 {
            continue;
        }
        let e = edges.iter().filter(|&&(a, b)| s >> a & 1 == 1 && s >> b & 1 == 1).count();
        best = best.max(e.div_ceil(v - 1));
    }
    Ok(best)
}

/// Number of vectors at each BFS distance from zero over the path
/// generators on `n` vertices (n at most 6).
pub fn path_layer_sizes(n: usize) -> Result<Vec<usize>> {
    check_n(n, FULL_BFS_N)?;
    let (_, table) = full_table(n);
    let mut sizes = Vec::new();
    for &d in &table.dist {
        if d == UNSEEN {
            return Err(internal("unreached vector"));
        }
        if sizes.len() <= d as usize {
            sizes.resize(d as usize + 1, 0);
        }
        sizes[d as usize] += 1;
    }
    Ok(sizes)
}

/// Largest value of `exact_p2` minus the simple lower bound over the given
/// graphs, with one graph attaining it.
pub fn bound_gap_scan<I: IntoIterator<Item = Graph>>(graphs: I, with_density: bool) -> Result<(usize, Option<Graph>)> {
    let mut best = (0, None);
    for g in graphs {
        let lb = crate::graph::lower_bound(&g, with_density)?;
        let k = exact_p2(&g, usize::MAX)?.k;
        if k < lb {
            return Err(precondition(format!("exact value {k} below lower bound {lb}")));
        }
        if best.1.is_none() || k - lb > best.0 {
            best = (k - lb, Some(g));
        }
    }
    Ok(best)
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
    fn path_counts() {
        assert_eq!(enumerate_paths(2).unwrap().len(), 1);
        assert_eq!(enumerate_paths(3).unwrap().len(), 6);
        assert_eq!(enumerate_cycles(4).unwrap().len(), 7);
        assert!(enumerate_paths(8).is_err());
    }

    #[test]
    fn small_values() {
        assert_eq!(exact_p2(&Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap(), 9).unwrap().k, 1);
        assert_eq!(exact_p2(&cycle(4), 9).unwrap().k, 2);
        assert!(matches!(exact_p2(&cycle(4), 1), Err(Error::BudgetExceeded)));
        assert_eq!(exact_c2(&cycle(5), 9).unwrap().k, 1);
        assert!(exact_c2(&Graph::from_edges(3, [(0, 1)]).unwrap(), 9).is_err());
    }

    #[test]
    fn forests_and_density() {
        assert!(exact_linear_forests(&cycle(5), 2).unwrap().is_some());
        assert!(exact_linear_forests(&cycle(5), 1).unwrap().is_none());
        assert!(exact_linear_forests(&complete(4), 2).unwrap().is_some());
        assert_eq!(linear_arboricity(&complete(5)).unwrap().0, 3);
        assert_eq!(arboricity_density(&complete(4)).unwrap(), 2);
        assert_eq!(arboricity_density(&complete(5)).unwrap(), 3);
        assert_eq!(arboricity_density(&Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap()).unwrap(), 1);
    }
}
