//! Two-path odd-covers of a disjoint cycle set, optionally XORed with one or
//! two extra vertex-disjoint edges.
//!
//! Every public entry point checks its own output: the two paths must XOR to
//! the requested target, otherwise an internal error is returned.

mod two;

use std::collections::HashSet;
use std::fmt;

use crate::error::{internal, precondition, Error, Result};
use crate::graph::{Cycle, CycleSet, Edge, Path};

pub use two::{exceptional_case, is_exceptional_k4};

/// Two paths whose edge sets XOR to a requested target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoPaths {
    pub p: Path,
    pub q: Path,
}

impl TwoPaths {
    pub fn into_vec(self) -> Vec<Path> {
        vec![self.p, self.q]
    }
}

/// The K4-subdivision obstruction: cycle `cycle_index` carries all four
/// endpoints in crossing order and at most one of the four arcs between
/// consecutive endpoints has an internal vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalCase {
    pub cycle_index: usize,
    /// Internal vertex counts of the four arcs, in cyclic order.
    pub internal_vertices: [usize; 4],
}

impl fmt::Display for ExceptionalCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "K4 subdivision on cycle {} with arc interiors {:?}",
            self.cycle_index, self.internal_vertices
        )
    }
}

/// Choose the two ends of a cycle's split. Fixed ends are kept; free ones
/// take the first admissible vertex in canonical order (`y` prefers a
/// neighbour of `x`).
fn pick_ends(c: &Cycle, x: Option<usize>, y: Option<usize>, avoid: &[usize]) -> (usize, usize) {
    let vs = c.vertices();
    let n = vs.len();
    let ok = |w: usize| !avoid.contains(&w);
    let x = x.unwrap_or_else(|| {
        vs.iter().copied().find(|&w| ok(w) && Some(w) != y).expect("cycle has a free vertex")
    });
    let y = y.unwrap_or_else(|| {
        let i = c.position(x).unwrap();
        [vs[(i + 1) % n], vs[(i + n - 1) % n]]
            .into_iter()
            .chain(vs.iter().copied())
            .find(|&w| ok(w) && w != x)
            .expect("cycle has a second free vertex")
    });
    (x, y)
}

/// Concatenates the split arcs of the cycles in `order`: the first split
/// starts at `first_x` (if given), the last ends at `last_y`, and every `p`
/// arc avoids `avoid`. Consecutive arcs are joined by the connector edges
/// `y_i x_{i+1}`, which both chains use and so cancel.
pub(crate) fn thread(
    cs: &CycleSet,
    order: &[usize],
    first_x: Option<usize>,
    last_y: Option<usize>,
    avoid: &[usize],
) -> (Vec<usize>, Vec<usize>) {
    let mut p = Vec::new();
    let mut q = Vec::new();
    for (t, &ci) in order.iter().enumerate() {
        let c = &cs.cycles()[ci];
        let fx = if t == 0 { first_x } else { None };
        let ly = if t + 1 == order.len() { last_y } else { None };
        let (x, y) = pick_ends(c, fx, ly, avoid);
        let (fwd, bwd) = c.arcs(x, y);
        let fwd_ok = fwd[1..fwd.len() - 1].iter().all(|w| !avoid.contains(w));
        let (pa, qa) = if fwd_ok { (fwd, bwd) } else { (bwd, fwd) };
        p.extend(pa);
        q.extend(qa);
    }
    (p, q)
}

fn all_cycles(cs: &CycleSet) -> Vec<usize> {
    (0..cs.len()).collect()
}

pub(crate) fn finish(p: Vec<usize>, q: Vec<usize>, target: impl IntoIterator<Item = Edge>) -> Result<TwoPaths> {
    let p = Path::new(p).map_err(|e| internal(format!("kit built a non-path: {e}")))?;
    let q = Path::new(q).map_err(|e| internal(format!("kit built a non-path: {e}")))?;
    let mut acc: HashSet<Edge> = HashSet::new();
    for e in p.edges().chain(q.edges()).chain(target) {
        if !acc.remove(&e) {
            acc.insert(e);
        }
    }
    if !acc.is_empty() {
        return Err(internal(format!("kit paths miss the target on {} pairs", acc.len())));
    }
    Ok(TwoPaths { p, q })
}

/// Two paths sharing both endpoints whose XOR is E(cs).
pub fn cover_cycles(cs: &CycleSet) -> Result<TwoPaths> {
    if cs.is_empty() {
        return Err(precondition("empty cycle set"));
    }
    let (p, q) = thread(cs, &all_cycles(cs), None, None, &[]);
    finish(p, q, cs.edges())
}

/// As [`cover_cycles`], with both paths ending at `z`.
pub fn cover_cycles_with_endpoint(cs: &CycleSet, z: usize) -> Result<TwoPaths> {
    let cz = cs.owner(z).ok_or_else(|| precondition(format!("vertex {z} is on no cycle")))?;
    let mut order: Vec<usize> = (0..cs.len()).filter(|&i| i != cz).collect();
    order.push(cz);
    let (p, q) = thread(cs, &order, None, Some(z), &[]);
    finish(p, q, cs.edges())
}

/// Two paths with XOR `{f} ⊕ E(cs)`. When `f` is not a cycle edge and `z` is
/// given, both paths end at `z`.
pub fn integrate_one_edge(cs: &CycleSet, f: Edge, z: Option<usize>) -> Result<TwoPaths> {
    if cs.is_empty() {
        return Err(precondition("empty cycle set"));
    }
    let (p, q) = if cs.has_edge(f) { minus_edge(cs, f)? } else { plus_edge(cs, f, z)? };
    finish(p, q, cs.edges().chain([f]))
}

fn default_end(cs: &CycleSet, f: Edge) -> Result<usize> {
    let (a, b) = (f.u(), f.v());
    let shared = match (cs.owner(a), cs.owner(b)) {
        (Some(i), Some(j)) if i == j && cs.len() >= 2 => Some(i),
        _ => None,
    };
    let mut all: Vec<usize> = cs.cycles().iter().flat_map(|c| c.vertices().iter().copied()).collect();
    all.sort_unstable();
    all.into_iter()
        .find(|&w| !f.contains(w) && (shared.is_none() || cs.owner(w) != shared))
        .ok_or_else(|| internal("no admissible common endpoint"))
}

/// Cycle plus chord `ab`, as two paths both ending at `z` (z on the cycle,
/// not an end of the chord).
fn chord_split(c: &Cycle, a: usize, b: usize, z: usize) -> (Vec<usize>, Vec<usize>) {
    let (fwd, bwd) = c.arcs(a, b);
    let (a1, a2) = if fwd.contains(&z) { (fwd, bwd) } else { (bwd, fwd) };
    let iz = a1.iter().position(|&w| w == z).unwrap();
    let mut p: Vec<usize> = a2.iter().rev().copied().collect();
    p.extend_from_slice(&a1[1..=iz]);
    let mut q = vec![a];
    q.extend(a1[iz..].iter().rev());
    (p, q)
}

/// `{f} ⊕ E(cs)` for `f` not a cycle edge; both paths end at `z`.
pub(crate) fn plus_edge(cs: &CycleSet, f: Edge, z: Option<usize>) -> Result<(Vec<usize>, Vec<usize>)> {
    let z = match z {
        Some(z) => z,
        None => default_end(cs, f)?,
    };
    if f.contains(z) {
        return Err(precondition(format!("common endpoint {z} lies on the added edge {f}")));
    }
    let cz = cs.owner(z).ok_or_else(|| precondition(format!("vertex {z} is on no cycle")))?;
    let (a, b) = (f.u(), f.v());
    if cs.owner(a) == Some(cz) && cs.owner(b) == Some(cz) {
        if cs.len() >= 2 {
            return Err(precondition(format!("{a}, {b} and {z} share a cycle among several")));
        }
        return Ok(chord_split(&cs.cycles()[cz], a, b, z));
    }
    let off_z: Vec<usize> = [a, b].into_iter().filter(|&w| cs.owner(w) != Some(cz)).collect();
    let v = if off_z.len() == 2 {
        off_z.iter().copied().find(|&w| cs.contains_vertex(w)).unwrap_or(a)
    } else {
        off_z[0]
    };
    let u = f.other(v);
    let cv = cs.owner(v);
    let mut order: Vec<usize> = Vec::with_capacity(cs.len());
    if let Some(cv) = cv {
        order.push(cv);
    }
    order.extend((0..cs.len()).filter(|&i| Some(i) != cv && i != cz));
    order.push(cz);
    let (chain_p, chain_q) = thread(cs, &order, cv.map(|_| v), Some(z), &[u]);
    let mut p = vec![u];
    let mut q = Vec::new();
    if cv.is_none() {
        p.push(v);
        q.push(v);
    }
    p.extend(chain_p);
    q.extend(chain_q);
    Ok((p, q))
}

/// `E(cs) \ {f}` for a cycle edge `f`.
pub(crate) fn minus_edge(cs: &CycleSet, f: Edge) -> Result<(Vec<usize>, Vec<usize>)> {
    let j = cs.edge_owner(f).ok_or_else(|| internal("edge is not on a cycle"))?;
    let s = cs.cycles()[j].without_edge(f, f.u());
    if cs.len() == 1 {
        return Ok((s[..2].to_vec(), s[1..].to_vec()));
    }
    let rest = cs.without(&[j]);
    let (p, q) = plus_edge(&rest, f, None)?;
    substitute(p, q, &s)
}

/// Replaces the edge joining the ends of `seg` by `seg` in whichever of the
/// two walks contains it.
pub(crate) fn substitute(p: Vec<usize>, q: Vec<usize>, seg: &[usize]) -> Result<(Vec<usize>, Vec<usize>)> {
    let (a, b) = (seg[0], seg[seg.len() - 1]);
    if let Some(np) = replace_in(&p, a, b, seg) {
        return Ok((np, q));
    }
    if let Some(nq) = replace_in(&q, a, b, seg) {
        return Ok((p, nq));
    }
    Err(internal(format!("edge {a}-{b} not found for substitution")))
}

fn replace_in(w: &[usize], a: usize, b: usize, seg: &[usize]) -> Option<Vec<usize>> {
    let i = w.windows(2).position(|x| (x[0] == a && x[1] == b) || (x[0] == b && x[1] == a))?;
    let mut out = w[..=i].to_vec();
    let inner = &seg[1..seg.len() - 1];
    if w[i] == a {
        out.extend_from_slice(inner);
    } else {
        out.extend(inner.iter().rev());
    }
    out.extend_from_slice(&w[i + 1..]);
    Some(out)
}

/// Two paths with XOR `{f1, f2} ⊕ E(cs)`, or the K4 obstruction.
pub fn integrate_two_edges(cs: &CycleSet, f1: Edge, f2: Edge) -> Result<TwoPaths> {
    if f1.shares_vertex(f2) {
        return Err(Error::EdgesNotDisjoint(f1, f2));
    }
    let (p, q) = if cs.is_empty() {
        (f1.ends().to_vec(), f2.ends().to_vec())
    } else {
        match (cs.has_edge(f1), cs.has_edge(f2)) {
            (false, false) => two::both_out(cs, f1, f2)?,
            (true, true) => two::both_in(cs, f1, f2)?,
            (true, false) => two::one_in(cs, f1, f2)?,
            (false, true) => two::one_in(cs, f2, f1)?,
        }
    };
    finish(p, q, cs.edges().chain([f1, f2]))
}

fn check_disjoint(fs: &[Edge]) -> Result<()> {
    for i in 0..fs.len() {
        for j in i + 1..fs.len() {
            if fs[i].shares_vertex(fs[j]) {
                return Err(Error::EdgesNotDisjoint(fs[i], fs[j]));
            }
        }
    }
    Ok(())
}

const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

/// A pair out of three disjoint edges that integrates into `cs`, with its
/// two paths. At least two of the three pairs always work.
pub fn choose_integrable_pair(cs: &CycleSet, fs: [Edge; 3]) -> Result<((usize, usize), TwoPaths)> {
    check_disjoint(&fs)?;
    for (a, b) in PAIRS {
        if !is_exceptional_k4(cs, fs[a], fs[b]) {
            return Ok(((a, b), integrate_two_edges(cs, fs[a], fs[b])?));
        }
    }
    Err(internal("every pair of three disjoint edges is exceptional"))
}

/// Four paths with XOR `{f1..f4} ⊕ E(c) ⊕ E(d)`: two edges go with each
/// cycle set, paired so neither side is exceptional.
pub fn integrate_four_edges(c: &CycleSet, d: &CycleSet, fs: [Edge; 4]) -> Result<Vec<Path>> {
    check_disjoint(&fs)?;
    if c.edges().any(|e| d.has_edge(e)) {
        return Err(precondition("cycle sets share an edge"));
    }
    let viable: Vec<(usize, usize)> =
        PAIRS.into_iter().filter(|&(a, b)| !is_exceptional_k4(c, fs[a], fs[b])).collect();
    if viable.len() < 2 {
        return Err(internal("fewer than two integrable pairs"));
    }
    let (p0, p1) = (viable[0], viable[1]);
    let common = [p0.0, p0.1].into_iter().find(|&x| x == p1.0 || x == p1.1).unwrap();
    let others: Vec<usize> = (0..3).filter(|&x| x != common).collect();
    let pick = others
        .iter()
        .copied()
        .find(|&a| !is_exceptional_k4(d, fs[a], fs[3]))
        .ok_or_else(|| internal("no integrable pair for the second cycle set"))?;
    let partner = others.into_iter().find(|&a| a != pick).unwrap();
    let mut out = integrate_two_edges(c, fs[common], fs[partner])?.into_vec();
    out.extend(integrate_two_edges(d, fs[pick], fs[3])?.into_vec());
    Ok(out)
}
