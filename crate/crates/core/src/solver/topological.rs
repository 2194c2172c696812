//! Covers of subdivisions: exactly max{v_odd/2, ceil(Δ/2)} paths, or Δ/2
//! cycles for all-even graphs.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{internal, Error, Result};
use crate::graph::{Cycle, Edge, Graph, OddCover, Path};
use crate::solver::system::{PathKSystem, Split};

/// How each edge of the original graph is realised in the subdivision.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subdivision {
    pub chains: BTreeMap<Edge, Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct ChainEntry {
    edge: Edge,
    chain: Vec<usize>,
}

impl Subdivision {
    pub fn identity(g: &Graph) -> Self {
        Subdivision { chains: g.edges().map(|e| (e, e.ends().to_vec())).collect() }
    }

    /// The subdivided graph on `universe` vertices.
    pub fn graph(&self, universe: usize) -> Result<Graph> {
        let mut h = Graph::new(universe);
        for chain in self.chains.values() {
            for w in chain.windows(2) {
                let e = Edge::try_new(w[0], w[1])?;
                h.check_vertex(e.v())?;
                if !h.add_edge(e) {
                    return Err(Error::DuplicateEdge(e));
                }
            }
        }
        Ok(h)
    }

    /// Checks that every chain runs between the ends of its edge and that
    /// internal vertices are fresh (>= n) and used once.
    pub fn validate(&self, n: usize) -> Result<()> {
        let mut seen = std::collections::HashSet::new();
        for (e, chain) in &self.chains {
            let ok_ends = chain.len() >= 2
                && ((chain[0] == e.u() && chain[chain.len() - 1] == e.v())
                    || (chain[0] == e.v() && chain[chain.len() - 1] == e.u()));
            if !ok_ends {
                return Err(crate::error::precondition(format!("chain for {e} does not join its ends")));
            }
            for &x in &chain[1..chain.len() - 1] {
                if x < n || !seen.insert(x) {
                    return Err(crate::error::precondition(format!("chain vertex {x} for {e} is not fresh")));
                }
            }
        }
        Ok(())
    }

    pub fn to_entries(&self) -> serde_json::Value {
        let v: Vec<ChainEntry> =
            self.chains.iter().map(|(e, c)| ChainEntry { edge: *e, chain: c.clone() }).collect();
        serde_json::to_value(v).expect("chains serialize")
    }

    pub fn from_entries(v: &serde_json::Value) -> Result<Self> {
        let entries: Vec<ChainEntry> = serde_json::from_value(v.clone())
            .map_err(|e| Error::Parse { line: 0, msg: format!("subdivision: {e}") })?;
        Ok(Subdivision { chains: entries.into_iter().map(|c| (c.edge, c.chain)).collect() })
    }
}

/// A cover of a subdivision `subdivided` of the input graph.
#[derive(Clone, Debug)]
pub struct TopologicalCover {
    pub subdivided: Graph,
    pub cover: OddCover,
    pub subdivision: Subdivision,
}

/// Tracks which chain each current edge of the subdivision belongs to.
struct Chains {
    chains: Vec<(Edge, Vec<usize>)>,
    owner: HashMap<Edge, usize>,
}

impl Chains {
    fn new(chains: Vec<(Edge, Vec<usize>)>) -> Self {
        let mut owner = HashMap::new();
        for (i, (_, c)) in chains.iter().enumerate() {
            for w in c.windows(2) {
                owner.insert(Edge::new(w[0], w[1]), i);
            }
        }
        Chains { chains, owner }
    }

    fn apply(&mut self, s: Split) -> Result<()> {
        let e = Edge::new(s.a, s.b);
        let i = self.owner.remove(&e).ok_or_else(|| internal(format!("split of unknown edge {e}")))?;
        let c = &mut self.chains[i].1;
        let pos = c.windows(2).position(|w| Edge::new(w[0], w[1]) == e).unwrap();
        c.insert(pos + 1, s.mid);
        self.owner.insert(Edge::new(s.a, s.mid), i);
        self.owner.insert(Edge::new(s.mid, s.b), i);
        Ok(())
    }

    fn into_subdivision(self) -> Subdivision {
        Subdivision { chains: self.chains.into_iter().collect() }
    }
}

/// Disjoint union of cycles and at most one path, with at least one cycle.
pub fn is_exceptional_family(g: &Graph) -> bool {
    let p = g.profile();
    p.max_degree <= 2
        && p.v_odd <= 2
        && g.nontrivial_components().iter().any(|c| c.iter().all(|&v| g.degree(v) == 2))
}

/// The colour of each of the three segments of every tripled edge.
fn colour_segments(g: &Graph, k: usize) -> Vec<[usize; 3]> {
    let edges: Vec<Edge> = g.edges().collect();
    let idx: HashMap<Edge, usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut col: Vec<[Option<usize>; 3]> = vec![[None; 3]; edges.len()];
    let stub = |e: Edge, at: usize| if e.u() == at { 0 } else { 2 };

    let odd = g.odd_vertices();
    for v in 0..g.n() {
        let d = g.degree(v);
        if d == 0 || d == 2 {
            continue;
        }
        let nb: Vec<usize> = g.neighbors(v).collect();
        let colours: Vec<usize> = if d.is_multiple_of(2) {
            (0..d).map(|j| j / 2).collect()
        } else {
            let i = odd.iter().position(|&x| x == v).unwrap() % k;
            let others: Vec<usize> = (0..k).filter(|&c| c != i).collect();
            std::iter::once(i).chain((0..d - 1).map(|j| others[j / 2])).collect()
        };
        for (w, c) in nb.into_iter().zip(colours) {
            let e = Edge::new(v, w);
            col[idx[&e]][stub(e, v)] = Some(c);
        }
    }

    // Threads between branch vertices, then cyclic components.
    let mut done = vec![false; edges.len()];
    let walk = |start: usize, first: usize, done: &mut Vec<bool>| {
        let mut segs = Vec::new();
        let (mut prev, mut cur) = (start, first);
        loop {
            let e = Edge::new(prev, cur);
            let i = idx[&e];
            done[i] = true;
            let order = if e.u() == prev { [0, 1, 2] } else { [2, 1, 0] };
            segs.extend(order.map(|s| (i, s)));
            if g.degree(cur) != 2 || cur == start {
                break;
            }
            let next = g.neighbors(cur).find(|&x| x != prev).unwrap();
            prev = cur;
            cur = next;
        }
        segs
    };
    let mut threads = Vec::new();
    for v in (0..g.n()).filter(|&v| g.degree(v) != 2) {
        for w in g.neighbors(v) {
            if !done[idx[&Edge::new(v, w)]] {
                threads.push(walk(v, w, &mut done));
            }
        }
    }
    for v in 0..g.n() {
        if let Some(w) = g.neighbors(v).find(|&w| !done[idx[&Edge::new(v, w)]]) {
            threads.push(walk(v, w, &mut done));
        }
    }
    for segs in threads {
        let base = segs.iter().find_map(|&(i, s)| col[i][s]).unwrap_or(0);
        for &(i, s) in &segs {
            col[i][s].get_or_insert(base);
        }
        if segs.iter().all(|&(i, s)| col[i][s] == Some(base)) {
            let &(i, s) = segs.iter().find(|&&(_, s)| s == 1).unwrap();
            col[i][s] = Some((base + 1) % k);
        }
    }
    col.into_iter().map(|c| c.map(|x| x.expect("every segment coloured"))).collect()
}

/// Splits a linear forest (given as an edge list) into its paths.
pub(crate) fn forest_paths(edges: &[Edge]) -> Result<Vec<Path>> {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for e in edges {
        adj.entry(e.u()).or_default().push(e.v());
        adj.entry(e.v()).or_default().push(e.u());
    }
    if adj.values().any(|nb| nb.len() > 2) {
        return Err(internal("linear forest has a vertex of degree above 2"));
    }
    let mut used = std::collections::HashSet::new();
    let mut out = Vec::new();
    let mut covered = 0;
    for (&s, nb) in &adj {
        if nb.len() != 1 || used.contains(&s) {
            continue;
        }
        let mut p = vec![s];
        let (mut prev, mut cur) = (s, nb[0]);
        loop {
            p.push(cur);
            match adj[&cur].iter().copied().find(|&x| x != prev) {
                Some(x) => {
                    prev = cur;
                    cur = x;
                }
                None => break,
            }
        }
        used.insert(cur);
        covered += p.len() - 1;
        out.push(Path::new(p)?);
    }
    if covered != edges.len() {
        return Err(internal("linear forest contains a cycle"));
    }
    Ok(out)
}

/// Builds the well-distributed k-system on the 3-subdivision.
fn coloured_system(g: &Graph, k: usize) -> Result<(PathKSystem, Chains)> {
    let n = g.n();
    let edges: Vec<Edge> = g.edges().collect();
    let colours = colour_segments(g, k);
    let mut chains = Vec::with_capacity(edges.len());
    let mut classes: Vec<Vec<Edge>> = vec![Vec::new(); k];
    for (t, (&e, cols)) in edges.iter().zip(&colours).enumerate() {
        let chain = vec![e.u(), n + 2 * t, n + 2 * t + 1, e.v()];
        for s in 0..3 {
            classes[cols[s]].push(Edge::new(chain[s], chain[s + 1]));
        }
        chains.push((e, chain));
    }
    let universe = n + 2 * edges.len();
    let collections = classes.iter().map(|c| forest_paths(c)).collect::<Result<Vec<_>>>()?;
    let sys = PathKSystem::new(collections, universe).map_err(|e| internal(format!("colouring: {e}")))?;
    if !sys.is_well_distributed() {
        return Err(internal("colouring did not give a well-distributed system"));
    }
    Ok((sys, Chains::new(chains)))
}

fn topo_k(g: &Graph) -> usize {
    let p = g.profile();
    (p.v_odd / 2).max(p.max_degree.div_ceil(2))
}

/// Cover of a subdivision with exactly `max{v_odd/2, ceil(Δ/2)}` paths.
pub fn topological_cover(g: &Graph) -> Result<TopologicalCover> {
    if is_exceptional_family(g) {
        return Err(Error::ExceptionalFamily);
    }
    let k = topo_k(g);
    let (subdivision, paths, universe) = match k {
        0 => (Subdivision::identity(g), Vec::new(), g.n()),
        1 => {
            // A single path component.
            let ends = g.odd_vertices();
            let mut p = vec![ends[0]];
            let mut prev = usize::MAX;
            while let Some(x) = g.neighbors(*p.last().unwrap()).find(|&x| x != prev) {
                prev = *p.last().unwrap();
                p.push(x);
                if g.degree(x) == 1 {
                    break;
                }
            }
            (Subdivision::identity(g), vec![Path::new(p)?], g.n())
        }
        _ => {
            let (mut sys, mut chains) = coloured_system(g, k)?;
            sys.reduce()?;
            for &s in sys.splits() {
                chains.apply(s)?;
            }
            let paths = sys.collections.iter().map(|c| Path::new(c[0].clone())).collect::<Result<Vec<_>>>()?;
            (chains.into_subdivision(), paths, sys.universe())
        }
    };
    let subdivided = subdivision.graph(universe)?;
    let cover = OddCover::from_paths(subdivided.clone(), paths);
    if !cover.verify().is_valid() || cover.count() != k {
        return Err(internal("topological cover failed its self-check"));
    }
    Ok(TopologicalCover { subdivided, cover, subdivision })
}

/// Cycle cover of a subdivision of an all-even graph with Δ/2 cycles.
pub fn cycle_top_cover(g: &Graph) -> Result<TopologicalCover> {
    g.require_even()?;
    let k = g.max_degree() / 2;
    let comps = g.nontrivial_components();
    if k == 1 && comps.len() >= 2 {
        return Err(Error::ExceptionalFamily);
    }
    let (subdivision, cycles, universe) = match k {
        0 => (Subdivision::identity(g), Vec::new(), g.n()),
        1 => {
            let cs = crate::cycles::two_regular_cycles(g)?;
            (Subdivision::identity(g), cs.into_cycles(), g.n())
        }
        _ => {
            let (mut sys, mut chains) = coloured_system(g, k)?;
            sys.reduce()?;
            let cycles = close_into_cycles(&mut sys)?;
            for &s in sys.splits() {
                chains.apply(s)?;
            }
            (chains.into_subdivision(), cycles, sys.universe())
        }
    };
    let subdivided = subdivision.graph(universe)?;
    let cover = OddCover::from_cycles(subdivided.clone(), cycles);
    if !cover.verify().is_valid() || cover.count() > k.max(1) {
        return Err(internal("cycle cover of the subdivision failed its self-check"));
    }
    Ok(TopologicalCover { subdivided, cover, subdivision })
}

/// Turns a reduced system with only type II ends into cycles, one or two
/// collections at a time.
fn close_into_cycles(sys: &mut PathKSystem) -> Result<Vec<Cycle>> {
    let mut out = Vec::new();
    let mut guard = 2 * sys.k() + 2;
    while let Some(c1) = sys.collections.iter().position(|c| !c.is_empty()) {
        guard -= 1;
        if guard == 0 {
            return Err(internal("cycle closing does not terminate"));
        }
        if sys.collections[c1][0].len() == 2 {
            let (u, v) = (sys.collections[c1][0][0], sys.collections[c1][0][1]);
            let mid = sys.next_vertex;
            sys.next_vertex += 1;
            sys.collections[c1][0] = vec![u, mid, v];
            sys.splits.push(Split { a: u, mid, b: v });
        }
        let p1 = sys.collections[c1][0].clone();
        let (u, v) = (p1[0], p1[p1.len() - 1]);
        let holder = |x: usize| {
            (0..sys.k())
                .filter(|&c| c != c1)
                .find(|&c| sys.collections[c].first().is_some_and(|p| p[0] == x || p[p.len() - 1] == x))
        };
        let i = holder(u).ok_or_else(|| internal(format!("{u} is a type I end in a cycle system")))?;
        let j = holder(v).ok_or_else(|| internal(format!("{v} is a type I end in a cycle system")))?;
        sys.collections[c1].clear();
        out.push(Cycle::new(p1)?);
        if i == j {
            let pi = std::mem::take(&mut sys.collections[i]).pop().unwrap();
            if pi.len() > 2 {
                out.push(Cycle::new(pi)?);
            }
            continue;
        }
        // Subdivide the end of P_i at u; P_j absorbs z'-u-v.
        let mut pi = sys.collections[i][0].clone();
        if pi[0] == u {
            pi.reverse();
        }
        let z = pi[pi.len() - 2];
        let mid = sys.next_vertex;
        sys.next_vertex += 1;
        *pi.last_mut().unwrap() = mid;
        sys.collections[i][0] = pi;
        sys.splits.push(Split { a: z, mid, b: u });
        let mut pj = sys.collections[j][0].clone();
        if pj[pj.len() - 1] == v {
            pj.reverse();
        }
        let mut merged = vec![mid, u];
        merged.extend(pj);
        sys.collections[j][0] = merged;
    }
    Ok(out)
}
