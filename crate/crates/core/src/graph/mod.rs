//! Simple undirected graphs over a fixed vertex universe, plus the
//! path/cycle atoms and the GF(2) edge algebra built on top of them.

mod cover;
mod edge_vector;
mod walk;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use cover::{lower_bound, verify_cover, CoverKind, MemberCheck, OddCover, VerificationReport};
pub use edge_vector::{pair_count, pair_index, xor_edges, EdgeVector};
pub use walk::{Cycle, CycleSet, Path};

/// Unordered vertex pair, stored with the smaller id first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct Edge(usize, usize);

impl Edge {
    /// Panics on a self-loop; use [`Edge::try_new`] for untrusted input.
    pub fn new(a: usize, b: usize) -> Self {
        Self::try_new(a, b).expect("self-loop edge")
    }

    pub fn try_new(a: usize, b: usize) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge(a, b)),
            std::cmp::Ordering::Greater => Ok(Edge(b, a)),
            std::cmp::Ordering::Equal => Err(Error::SelfLoop(a)),
        }
    }

    pub fn u(self) -> usize {
        self.0
    }

    pub fn v(self) -> usize {
        self.1
    }

    pub fn ends(self) -> [usize; 2] {
        [self.0, self.1]
    }

    pub fn contains(self, x: usize) -> bool {
        self.0 == x || self.1 == x
    }

    /// The endpoint that is not `x`. Caller guarantees `x` is an endpoint.
    pub fn other(self, x: usize) -> usize {
        if self.0 == x {
            self.1
        } else {
            self.0
        }
    }

    pub fn shares_vertex(self, o: Edge) -> bool {
        self.contains(o.0) || self.contains(o.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.0, e.1]
    }
}

impl TryFrom<[usize; 2]> for Edge {
    type Error = Error;
    fn try_from(p: [usize; 2]) -> Result<Self> {
        Edge::try_new(p[0], p[1])
    }
}

/// Max degree, number of odd vertices and the sorted odd vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub max_degree: usize,
    pub v_odd: usize,
    pub odd_vertices: Vec<usize>,
}

impl DegreeProfile {
    /// `2 * ceil(max_degree / 2)`.
    pub fn delta_even(&self) -> usize {
        self.max_degree + self.max_degree % 2
    }
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![BTreeSet::new(); n], m: 0 }
    }

    /// Builds a graph, rejecting loops, duplicates and out-of-range ids.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (a, b) in edges {
            let e = Edge::try_new(a, b)?;
            g.check_vertex(e.v())?;
            if !g.add_edge(e) {
                return Err(Error::DuplicateEdge(e));
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// Returns false if the edge was already present.
    pub fn add_edge(&mut self, e: Edge) -> bool {
        let fresh = self.adj[e.u()].insert(e.v());
        if fresh {
            self.adj[e.v()].insert(e.u());
            self.m += 1;
        }
        fresh
    }

    /// Returns false if the edge was absent.
    pub fn remove_edge(&mut self, e: Edge) -> bool {
        let had = self.adj[e.u()].remove(&e.v());
        if had {
            self.adj[e.v()].remove(&e.u());
            self.m -= 1;
        }
        had
    }

    /// Adds the edge if absent, removes it if present.
    pub fn toggle_edge(&mut self, e: Edge) {
        if !self.remove_edge(e) {
            self.add_edge(e);
        }
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        e.v() < self.n() && self.adj[e.u()].contains(&e.v())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.range(u + 1..).map(move |&v| Edge(u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn odd_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.degree(v) % 2 == 1).collect()
    }

    pub fn is_even(&self) -> bool {
        self.adj.iter().all(|nb| nb.len() % 2 == 0)
    }

    /// Error naming the first odd vertex, if any.
    pub fn require_even(&self) -> Result<()> {
        match (0..self.n()).find(|&v| self.degree(v) % 2 == 1) {
            None => Ok(()),
            Some(v) => Err(Error::OddDegree { vertex: v, degree: self.degree(v) }),
        }
    }

    pub fn profile(&self) -> DegreeProfile {
        degree_profile(self)
    }

    /// Same edges on a universe enlarged by `extra` isolated vertices.
    pub fn with_isolated(&self, extra: usize) -> Graph {
        let mut adj = self.adj.clone();
        adj.resize(self.n() + extra, BTreeSet::new());
        Graph { adj, m: self.m }
    }

    /// Edge set symmetric difference with `edges`.
    pub fn xor_with<I: IntoIterator<Item = Edge>>(&self, edges: I) -> Graph {
        let mut g = self.clone();
        for e in edges {
            g.toggle_edge(e);
        }
        g
    }

    pub fn edge_vector(&self) -> EdgeVector {
        EdgeVector::from_edges(self.n(), self.edges())
    }

    /// Vertex sets of the connected components that contain at least one edge.
    pub fn nontrivial_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] || self.degree(s) == 0 {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let x = comp[i];
                i += 1;
                for y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

pub fn degree_profile(g: &Graph) -> DegreeProfile {
    let odd_vertices = g.odd_vertices();
    DegreeProfile { max_degree: g.max_degree(), v_odd: odd_vertices.len(), odd_vertices }
}
