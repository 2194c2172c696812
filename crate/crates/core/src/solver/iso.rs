//! Covers that may use extra isolated vertices, built from linear-forest
//! decompositions.

use std::collections::BTreeSet;

use crate::cycles::{odd_matching, peel_cycle_layers};
use crate::error::{internal, precondition, Result};
use crate::exact::exact_linear_forests;
use crate::graph::{Cycle, Edge, Graph, OddCover, Path};
use crate::kit::TwoPaths;
use crate::solver::pipeline::{cover_eulerian_plus_matching_paths, path_odd_cover, SolveBudget};
use crate::solver::system::PathKSystem;
use crate::solver::topological::forest_paths;

/// A cover of `g` plus `added_vertices` isolated vertices (ids `n..`).
#[derive(Clone, Debug)]
pub struct IsoCover {
    pub cover: OddCover,
    pub added_vertices: usize,
}

/// Which branch of the general construction produced a cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoMethod {
    /// Few odd vertices relative to degree: the plain path cover.
    PathCover,
    /// Residual covered through an exact linear-forest decomposition.
    ExactForests,
    /// Residual covered through greedy linear forests.
    GreedyForests,
    /// Residual covered two paths per cycle layer.
    LayerPairs,
}

impl IsoMethod {
    pub fn name(self) -> &'static str {
        match self {
            IsoMethod::PathCover => "path-cover",
            IsoMethod::ExactForests => "exact-forests",
            IsoMethod::GreedyForests => "greedy-forests",
            IsoMethod::LayerPairs => "layer-pairs",
        }
    }
}

#[derive(Clone, Debug)]
pub struct GeneralIsoCover {
    pub iso: IsoCover,
    pub method: IsoMethod,
    pub budget: SolveBudget,
}

/// Path components of several linear forests, rewritten by `meet`.
#[derive(Clone, Debug)]
pub struct LinearForestSystem {
    forests: Vec<Vec<Vec<usize>>>,
    next_vertex: usize,
    universe: usize,
}

fn ends(p: &[usize]) -> [usize; 2] {
    [p[0], p[p.len() - 1]]
}

fn xor_paths<'a>(paths: impl IntoIterator<Item = &'a Vec<usize>>) -> BTreeSet<Edge> {
    let mut acc = BTreeSet::new();
    for p in paths {
        for w in p.windows(2) {
            let e = Edge::new(w[0], w[1]);
            if !acc.remove(&e) {
                acc.insert(e);
            }
        }
    }
    acc
}

/// Checks that `forests` partition `E(g)` into linear forests.
fn split_forests(g: &Graph, forests: &[Vec<Edge>]) -> Result<Vec<Vec<Vec<usize>>>> {
    let mut seen = BTreeSet::new();
    for f in forests {
        for &e in f {
            if !g.has_edge(e) {
                return Err(precondition(format!("forest edge {e} is not in the graph")));
            }
            if !seen.insert(e) {
                return Err(precondition(format!("edge {e} lies in two forests")));
            }
        }
    }
    if seen.len() != g.edge_count() {
        return Err(precondition("forests do not cover every edge"));
    }
    forests
        .iter()
        .map(|f| Ok(forest_paths(f)?.into_iter().map(Path::into_vertices).collect()))
        .collect()
}

impl LinearForestSystem {
    /// `forests` must partition the edges of the all-even graph `g`.
    pub fn new(g: &Graph, forests: &[Vec<Edge>]) -> Result<Self> {
        g.require_even()?;
        let forests = split_forests(g, forests)?.into_iter().filter(|f| !f.is_empty()).collect();
        Ok(LinearForestSystem { forests, next_vertex: g.n(), universe: g.n() })
    }

    pub fn forests(&self) -> &[Vec<Vec<usize>>] {
        &self.forests
    }

    pub fn added_vertices(&self) -> usize {
        self.next_vertex - self.universe
    }

    pub fn xor(&self) -> BTreeSet<Edge> {
        xor_paths(self.forests.iter().flatten())
    }

    /// Forest and index of the path ending at `x`, outside forest `skip`.
    fn partners(&self, x: usize, skip: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (f, paths) in self.forests.iter().enumerate() {
            if f == skip {
                continue;
            }
            if let Some(idx) = paths.iter().position(|p| ends(p).contains(&x)) {
                out.push((f, idx));
            }
        }
        out
    }

    /// Merges the paths of forest `i` ending at `u` and at `v` through a new
    /// vertex `w`; the paths of other forests at `u` and `v` absorb `uw`, `vw`.
    /// Returns `w`.
    pub fn meet(&mut self, i: usize, u: usize, v: usize) -> Result<usize> {
        let before = cfg!(debug_assertions).then(|| self.xor());
        let forest = self.forests.get(i).ok_or_else(|| precondition(format!("no forest {i}")))?;
        let p = forest.iter().position(|p| ends(p).contains(&u));
        let p2 = forest.iter().position(|p| ends(p).contains(&v));
        let (p, p2) = match (p, p2) {
            (Some(a), Some(b)) if a != b => (a, b),
            _ => return Err(precondition(format!("meet({u}, {v}) needs ends of two paths of forest {i}"))),
        };
        let qs = self.partners(u, i);
        let rs = self.partners(v, i);
        let (q, r) = qs
            .iter()
            .flat_map(|&q| rs.iter().map(move |&r| (q, r)))
            .find(|(q, r)| q != r)
            .ok_or_else(|| precondition(format!("meet({u}, {v}): no distinct partner paths")))?;
        let w = self.next_vertex;
        self.next_vertex += 1;

        let oriented = |path: &[usize], end: usize| {
            let mut out = path.to_vec();
            if out[0] == end {
                out.reverse();
            }
            out
        };
        // forest i: P ... u w v ... P'
        let mut merged = oriented(&self.forests[i][p], u);
        merged.push(w);
        let mut tail = oriented(&self.forests[i][p2], v);
        tail.reverse();
        merged.extend(tail);

        let mut q_path = oriented(&self.forests[q.0][q.1], u);
        q_path.push(w);
        let mut r_path = oriented(&self.forests[r.0][r.1], v);
        r_path.push(w);
        if q.0 == r.0 {
            q_path.extend(r_path.into_iter().rev().skip(1));
            let f = &mut self.forests[q.0];
            f[q.1] = q_path;
            f.remove(r.1);
        } else {
            self.forests[q.0][q.1] = q_path;
            self.forests[r.0][r.1] = r_path;
        }
        let f = &mut self.forests[i];
        f[p] = merged;
        f.remove(p2);

        if let Some(b) = before {
            debug_assert_eq!(b, self.xor(), "meet changed the XOR");
        }
        Ok(w)
    }

    /// Applies `meet` until every forest is a single path.
    pub fn collapse(&mut self) -> Result<()> {
        while let Some(i) = self.forests.iter().position(|f| f.len() >= 2) {
            let [a, b] = ends(&self.forests[i][0]);
            let [c, d] = ends(&self.forests[i][1]);
            let done = [(a, c), (a, d), (b, c), (b, d)].into_iter().any(|(u, v)| self.meet(i, u, v).is_ok());
            if !done {
                return Err(internal(format!("no meet applies in forest {i}")));
            }
        }
        Ok(())
    }

    pub fn into_paths(self) -> Result<Vec<Path>> {
        self.forests.into_iter().flatten().map(Path::new).collect()
    }
}

/// One path per non-empty forest, over `g` plus added isolated vertices.
pub fn iso_cover_from_forests(g: &Graph, forests: &[Vec<Edge>]) -> Result<IsoCover> {
    let mut sys = LinearForestSystem::new(g, forests)?;
    sys.collapse()?;
    let added = sys.added_vertices();
    let cover = OddCover::from_paths(g.with_isolated(added), sys.into_paths()?);
    if !cover.verify().is_valid() {
        return Err(internal("forest stitching produced an invalid cover"));
    }
    Ok(IsoCover { cover, added_vertices: added })
}

/// Two paths for an all-even graph split into two linear forests, without
/// extra vertices.
pub fn two_path_cover_la2(g: &Graph, f1: &[Edge], f2: &[Edge]) -> Result<TwoPaths> {
    g.require_even()?;
    let forests = split_forests(g, &[f1.to_vec(), f2.to_vec()])?;
    if g.edge_count() == 0 {
        return Err(precondition("empty graph has no two-path cover"));
    }
    let colls = forests
        .into_iter()
        .map(|f| f.into_iter().map(Path::new).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    if colls.iter().any(Vec::is_empty) {
        return Err(precondition("an all-even graph is never a single linear forest"));
    }
    let mut sys = PathKSystem::new(colls, g.n())?;
    while sys.collections[0].len() >= 2 {
        let p = &sys.collections[0][0];
        let [v, u] = ends(p);
        let w = sys.collections[1]
            .iter()
            .find(|q| ends(q).contains(&v))
            .map(|q| if q[0] == v { q[q.len() - 1] } else { q[0] })
            .ok_or_else(|| internal(format!("endpoint {v} has no partner")))?;
        let x = ends(&sys.collections[0][1])
            .into_iter()
            .find(|x| ![u, v, w].contains(x))
            .ok_or_else(|| internal("second path has no free end"))?;
        sys.join(v, x)?;
    }
    if !sys.splits.is_empty() || sys.collections[1].len() != 1 {
        return Err(internal("two-forest reduction left extra paths"));
    }
    let p = Path::new(sys.collections[0][0].clone())?;
    let q = Path::new(sys.collections[1][0].clone())?;
    if xor_paths([p.vertices().to_vec(), q.vertices().to_vec()].iter()) != g.edges().collect() {
        return Err(internal("two-forest reduction changed the XOR"));
    }
    Ok(TwoPaths { p, q })
}

/// Cycles through one apex over `g` plus added vertices, one per forest.
pub fn cycle_iso_cover(g: &Graph, forests: &[Vec<Edge>]) -> Result<IsoCover> {
    let iso = iso_cover_from_forests(g, forests)?;
    let apex = g.n() + iso.added_vertices;
    let cycles = iso
        .cover
        .members
        .into_iter()
        .map(|mut p| {
            p.push(apex);
            Cycle::new(p)
        })
        .collect::<Result<Vec<_>>>()?;
    let added = iso.added_vertices + usize::from(!cycles.is_empty());
    let cover = OddCover::from_cycles(g.with_isolated(added), cycles);
    if !cover.verify().is_valid() {
        return Err(internal("apex closing produced an invalid cycle cover"));
    }
    Ok(IsoCover { cover, added_vertices: added })
}

/// Greedy linear-forest colouring: each edge goes to the first class where
/// it keeps degrees at most two and closes no cycle.
pub fn greedy_linear_forests(g: &Graph) -> Vec<Vec<Edge>> {
    let order: Vec<Edge> = match peel_cycle_layers(g) {
        Ok(layers) => layers.iter().flat_map(|l| l.cycles().iter().flat_map(|c| c.edges()).collect::<Vec<_>>()).collect(),
        Err(_) => g.edges().collect(),
    };
    let mut classes: Vec<(Vec<Edge>, Vec<u8>, Vec<usize>)> = Vec::new();
    fn find(parent: &[usize], mut x: usize) -> usize {
        while parent[x] != x {
            x = parent[x];
        }
        x
    }
    for e in order {
        let [a, b] = e.ends();
        let slot = classes.iter_mut().find(|(_, deg, parent)| {
            deg[a] < 2 && deg[b] < 2 && find(parent, a) != find(parent, b)
        });
        let (edges, deg, parent) = match slot {
            Some(s) => s,
            None => {
                classes.push((Vec::new(), vec![0; g.n()], (0..g.n()).collect()));
                classes.last_mut().unwrap()
            }
        };
        edges.push(e);
        deg[a] += 1;
        deg[b] += 1;
        let (ra, rb) = (find(parent, a), find(parent, b));
        parent[ra] = rb;
    }
    classes.into_iter().map(|(edges, _, _)| edges).collect()
}

const EXACT_FOREST_MAX_N: usize = 10;

/// The general isolated-vertex construction: matching layers take the odd
/// vertices, the residual all-even part goes through linear forests.
pub fn iso_cover_general(g: &Graph) -> Result<GeneralIsoCover> {
    let p = g.profile();
    let budget = SolveBudget::for_graph(g);
    if (p.v_odd == 4 && p.max_degree <= 2) || budget.d < 0 {
        let cover = path_odd_cover(g)?;
        return Ok(GeneralIsoCover { iso: IsoCover { cover, added_vertices: 0 }, method: IsoMethod::PathCover, budget });
    }
    let m = odd_matching(g);
    let g_prime = g.xor_with(m.pairs().iter().copied());
    let layers = peel_cycle_layers(&g_prime)?;
    let split = budget.t.min(layers.len());
    let mut low = Graph::new(g.n());
    let mut high = Graph::new(g.n());
    for (i, layer) in layers.iter().enumerate() {
        let target = if i < split { &mut low } else { &mut high };
        for e in layer.edges() {
            target.add_edge(e);
        }
    }
    let mut paths = cover_eulerian_plus_matching_paths(&low, &m)?;

    let (method, added) = if high.is_empty() {
        (IsoMethod::ExactForests, 0)
    } else {
        let mut forests = None;
        if g.n() <= EXACT_FOREST_MAX_N {
            let start = high.max_degree().div_ceil(2);
            for k in start..=high.max_degree() {
                match exact_linear_forests(&high, k) {
                    Ok(Some(f)) => {
                        forests = Some((IsoMethod::ExactForests, f));
                        break;
                    }
                    Ok(None) => continue,
                    Err(_) => break,
                }
            }
        }
        let (method, forests) = forests.unwrap_or_else(|| (IsoMethod::GreedyForests, greedy_linear_forests(&high)));
        let layer_cost = 2 * (layers.len() - split);
        if forests.len() <= layer_cost {
            let iso = iso_cover_from_forests(&high, &forests)?;
            paths.extend(iso.cover.members.into_iter().map(Path::new).collect::<Result<Vec<_>>>()?);
            (method, iso.added_vertices)
        } else {
            for layer in &layers[split..] {
                paths.extend(crate::kit::cover_cycles(layer)?.into_vec());
            }
            (IsoMethod::LayerPairs, 0)
        }
    };
    let cover = OddCover::from_paths(g.with_isolated(added), paths);
    if !cover.verify().is_valid() {
        return Err(internal("general isolated-vertex construction produced an invalid cover"));
    }
    Ok(GeneralIsoCover { iso: IsoCover { cover, added_vertices: added }, method, budget })
}
