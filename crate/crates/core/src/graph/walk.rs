use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Edge;

fn all_distinct(vs: &[usize]) -> bool {
    let mut s = vs.to_vec();
    s.sort_unstable();
    s.windows(2).all(|w| w[0] != w[1])
}

/// A path: at least two distinct vertices, edges between consecutive ones.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Path(Vec<usize>);

impl Path {
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::InvalidPath(format!("{vertices:?} has fewer than two vertices")));
        }
        if !all_distinct(&vertices) {
            return Err(Error::InvalidPath(format!("{vertices:?} repeats a vertex")));
        }
        Ok(Path(vertices))
    }

    pub fn from_edge(e: Edge) -> Self {
        Path(vec![e.u(), e.v()])
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.0
    }

    pub fn edge_count(&self) -> usize {
        self.0.len() - 1
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    pub fn ends(&self) -> [usize; 2] {
        [self.first(), self.last()]
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.0.windows(2).map(|w| Edge::new(w[0], w[1]))
    }

    pub fn reversed(&self) -> Path {
        let mut v = self.0.clone();
        v.reverse();
        Path(v)
    }

    /// Same path, oriented to end at `v` (which must be an endpoint).
    pub fn ending_at(&self, v: usize) -> Path {
        if self.last() == v {
            self.clone()
        } else {
            debug_assert_eq!(self.first(), v);
            self.reversed()
        }
    }

    /// The path with edge `{a, b}` replaced by `seg`, a walk from `a` to `b`.
    /// Returns `None` if the edge is not on the path.
    pub fn replace_edge(&self, a: usize, b: usize, seg: &[usize]) -> Option<Vec<usize>> {
        debug_assert!(seg.first() == Some(&a) && seg.last() == Some(&b));
        let i = self.0.windows(2).position(|w| (w[0] == a && w[1] == b) || (w[0] == b && w[1] == a))?;
        let mut out = self.0[..=i].to_vec();
        let inner = &seg[1..seg.len() - 1];
        if self.0[i] == a {
            out.extend_from_slice(inner);
        } else {
            out.extend(inner.iter().rev());
        }
        out.extend_from_slice(&self.0[i + 1..]);
        Some(out)
    }
}

impl TryFrom<Vec<usize>> for Path {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Path::new(v)
    }
}

impl From<Path> for Vec<usize> {
    fn from(p: Path) -> Self {
        p.0
    }
}

/// A cycle: at least three distinct vertices in cyclic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Cycle(Vec<usize>);

impl Cycle {
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidCycle(format!("{vertices:?} has fewer than three vertices")));
        }
        if !all_distinct(&vertices) {
            return Err(Error::InvalidCycle(format!("{vertices:?} repeats a vertex")));
        }
        Ok(Cycle(vertices))
    }

    /// Rotated and reflected so the smallest vertex comes first and its
    /// smaller neighbour second.
    pub fn canonical(&self) -> Cycle {
        let n = self.0.len();
        let (i, _) = self.0.iter().enumerate().min_by_key(|&(_, &v)| v).unwrap();
        let next = self.0[(i + 1) % n];
        let prev = self.0[(i + n - 1) % n];
        let vs = if next < prev {
            (0..n).map(|k| self.0[(i + k) % n]).collect()
        } else {
            (0..n).map(|k| self.0[(i + n - k) % n]).collect()
        };
        Cycle(vs)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.0.iter().position(|&x| x == v)
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.0.len();
        (0..n).map(move |i| Edge::new(self.0[i], self.0[(i + 1) % n]))
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        match (self.position(e.u()), self.position(e.v())) {
            (Some(i), Some(j)) => {
                let n = self.0.len();
                (i + 1) % n == j || (j + 1) % n == i
            }
            _ => false,
        }
    }

    /// Vertices met walking from `a` to `b`, forwards or backwards, inclusive.
    pub fn arc(&self, a: usize, b: usize, forward: bool) -> Vec<usize> {
        let n = self.0.len();
        let mut i = self.position(a).expect("arc start on cycle");
        let mut out = vec![a];
        while self.0[i] != b {
            i = if forward { (i + 1) % n } else { (i + n - 1) % n };
            out.push(self.0[i]);
        }
        out
    }

    /// The two arcs from `a` to `b`: (forward, backward).
    pub fn arcs(&self, a: usize, b: usize) -> (Vec<usize>, Vec<usize>) {
        (self.arc(a, b, true), self.arc(a, b, false))
    }

    /// The arc from `a` to `b` whose interior avoids every vertex of `avoid`.
    pub fn arc_avoiding(&self, a: usize, b: usize, avoid: &[usize]) -> Option<Vec<usize>> {
        let (f, r) = self.arcs(a, b);
        [f, r].into_iter().find(|arc| arc[1..arc.len() - 1].iter().all(|x| !avoid.contains(x)))
    }

    /// The cycle with `e` removed, as a path from `from` to the other end of `e`.
    pub fn without_edge(&self, e: Edge, from: usize) -> Vec<usize> {
        let to = e.other(from);
        let (f, r) = self.arcs(from, to);
        if f.len() == 2 {
            r
        } else {
            f
        }
    }
}

impl TryFrom<Vec<usize>> for Cycle {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Cycle::new(v)
    }
}

impl From<Cycle> for Vec<usize> {
    fn from(c: Cycle) -> Self {
        c.0
    }
}

/// Pairwise vertex-disjoint cycles, each stored in canonical form.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CycleSet {
    cycles: Vec<Cycle>,
    owner: HashMap<usize, usize>,
}

impl CycleSet {
    pub fn new(cycles: Vec<Cycle>) -> Result<Self> {
        let mut owner = HashMap::new();
        let cycles: Vec<Cycle> = cycles.iter().map(Cycle::canonical).collect();
        for (i, c) in cycles.iter().enumerate() {
            for &v in c.vertices() {
                if owner.insert(v, i).is_some() {
                    return Err(Error::InvalidCycle(format!("vertex {v} lies on two cycles")));
                }
            }
        }
        Ok(CycleSet { cycles, owner })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn into_cycles(self) -> Vec<Cycle> {
        self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Index of the cycle through `v`.
    pub fn owner(&self, v: usize) -> Option<usize> {
        self.owner.get(&v).copied()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.owner.contains_key(&v)
    }

    /// Index of the cycle having `e` as an edge.
    pub fn edge_owner(&self, e: Edge) -> Option<usize> {
        let i = self.owner(e.u())?;
        (self.owner(e.v()) == Some(i) && self.cycles[i].has_edge(e)).then_some(i)
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.edge_owner(e).is_some()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.cycles.iter().flat_map(Cycle::edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.owner.len()
    }

    /// The cycles with the given indices removed, order otherwise kept.
    pub fn without(&self, drop: &[usize]) -> CycleSet {
        let kept = self
            .cycles
            .iter()
            .enumerate()
            .filter(|(i, _)| !drop.contains(i))
            .map(|(_, c)| c.clone())
            .collect();
        CycleSet::new(kept).expect("subset of disjoint cycles")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_validation() {
        assert!(Path::new(vec![0]).is_err());
        assert!(Path::new(vec![0, 1, 0]).is_err());
        let p = Path::new(vec![2, 0, 1]).unwrap();
        assert_eq!(p.edges().collect::<Vec<_>>(), vec![Edge::new(0, 2), Edge::new(0, 1)]);
    }

    #[test]
    fn replace_edge_either_direction() {
        let p = Path::new(vec![0, 1, 2]).unwrap();
        assert_eq!(p.replace_edge(1, 2, &[1, 7, 2]), Some(vec![0, 1, 7, 2]));
        assert_eq!(p.replace_edge(2, 1, &[2, 7, 8, 1]), Some(vec![0, 1, 8, 7, 2]));
        assert_eq!(p.replace_edge(0, 2, &[0, 5, 2]), None);
    }

    #[test]
    fn canonical_cycle() {
        let c = Cycle::new(vec![4, 2, 9, 7]).unwrap().canonical();
        assert_eq!(c.vertices(), &[2, 4, 7, 9]);
        let c = Cycle::new(vec![5, 3, 8]).unwrap().canonical();
        assert_eq!(c.vertices(), &[3, 5, 8]);
    }

    #[test]
    fn arcs_and_edges() {
        let c = Cycle::new(vec![0, 1, 2, 3, 4]).unwrap();
        assert_eq!(c.arcs(1, 3), (vec![1, 2, 3], vec![1, 0, 4, 3]));
        assert!(c.has_edge(Edge::new(4, 0)));
        assert!(!c.has_edge(Edge::new(1, 3)));
        assert_eq!(c.arc_avoiding(1, 3, &[2]), Some(vec![1, 0, 4, 3]));
        assert_eq!(c.without_edge(Edge::new(0, 1), 0), vec![0, 4, 3, 2, 1]);
    }

    #[test]
    fn cycle_set_rejects_overlap() {
        let a = Cycle::new(vec![0, 1, 2]).unwrap();
        let b = Cycle::new(vec![2, 3, 4]).unwrap();
        assert!(CycleSet::new(vec![a.clone(), b]).is_err());
        let cs = CycleSet::new(vec![a, Cycle::new(vec![3, 4, 5]).unwrap()]).unwrap();
        assert_eq!(cs.owner(4), Some(1));
        assert_eq!(cs.edge_owner(Edge::new(3, 5)), Some(1));
        assert_eq!(cs.edge_owner(Edge::new(2, 3)), None);
    }
}
