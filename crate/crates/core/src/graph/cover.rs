use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{Cycle, Edge, EdgeVector, Graph, Path};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoverKind {
    Path,
    Cycle,
}

/// Candidate odd-cover of `target`. Members are raw vertex sequences so
/// that malformed witnesses can still be represented and reported on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddCover {
    pub target: Graph,
    pub kind: CoverKind,
    pub members: Vec<Vec<usize>>,
}

impl OddCover {
    pub fn from_paths(target: Graph, paths: impl IntoIterator<Item = Path>) -> Self {
        let members = paths.into_iter().map(Path::into_vertices).collect();
        OddCover { target, kind: CoverKind::Path, members }
    }

    pub fn from_cycles(target: Graph, cycles: impl IntoIterator<Item = Cycle>) -> Self {
        let members = cycles.into_iter().map(Vec::from).collect();
        OddCover { target, kind: CoverKind::Cycle, members }
    }

    pub fn count(&self) -> usize {
        self.members.len()
    }

    pub fn verify(&self) -> VerificationReport {
        verify_cover(self)
    }
}

/// Why a single member is malformed, if it is.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum MemberCheck {
    Ok,
    TooShort,
    RepeatedVertex(usize),
    OutOfRange(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub members: Vec<MemberCheck>,
    pub xor_matches: bool,
    /// How many members use each pair, for every pair touched by a member
    /// or present in the target.
    pub parity: BTreeMap<Edge, usize>,
    /// Pairs whose use count has the wrong parity.
    pub mismatched: Vec<Edge>,
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        self.xor_matches && self.members.iter().all(|m| *m == MemberCheck::Ok)
    }
}

fn member_edges(kind: CoverKind, vs: &[usize]) -> Vec<Edge> {
    let mut out: Vec<Edge> = vs.windows(2).filter_map(|w| Edge::try_new(w[0], w[1]).ok()).collect();
    if kind == CoverKind::Cycle && vs.len() >= 3 {
        if let Ok(e) = Edge::try_new(vs[vs.len() - 1], vs[0]) {
            out.push(e);
        }
    }
    out
}

fn check_member(kind: CoverKind, vs: &[usize], n: usize) -> MemberCheck {
    let min_len = match kind {
        CoverKind::Path => 2,
        CoverKind::Cycle => 3,
    };
    if vs.len() < min_len {
        return MemberCheck::TooShort;
    }
    if let Some(&v) = vs.iter().find(|&&v| v >= n) {
        return MemberCheck::OutOfRange(v);
    }
    let mut seen = vec![false; n];
    for &v in vs {
        if seen[v] {
            return MemberCheck::RepeatedVertex(v);
        }
        seen[v] = true;
    }
    MemberCheck::Ok
}

/// Checks member well-formedness and that the members XOR to the target.
pub fn verify_cover(cover: &OddCover) -> VerificationReport {
    let n = cover.target.n();
    let members: Vec<MemberCheck> = cover.members.iter().map(|m| check_member(cover.kind, m, n)).collect();
    let mut acc = EdgeVector::zero(n);
    let mut parity: BTreeMap<Edge, usize> = cover.target.edges().map(|e| (e, 0)).collect();
    for (m, check) in cover.members.iter().zip(&members) {
        if *check != MemberCheck::Ok {
            continue;
        }
        for e in member_edges(cover.kind, m) {
            acc.toggle(e);
            *parity.entry(e).or_insert(0) += 1;
        }
    }
    let xor_matches = acc == cover.target.edge_vector();
    let mismatched = parity
        .iter()
        .filter(|(e, c)| (**c % 2 == 1) != cover.target.has_edge(**e))
        .map(|(e, _)| *e)
        .collect();
    VerificationReport { members, xor_matches, parity, mismatched }
}

/// `max{v_odd/2, ceil(Δ/2)}`, optionally also the Nash-Williams density bound
/// (brute force, `n <= 12`).
pub fn lower_bound(g: &Graph, with_density: bool) -> Result<usize> {
    let p = g.profile();
    let mut lb = (p.v_odd / 2).max(p.max_degree.div_ceil(2));
    if with_density {
        lb = lb.max(crate::exact::arboricity_density(g)?);
    }
    Ok(lb)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_graph(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn single_path_covers_path_graph() {
        let g = path_graph(4);
        let c = OddCover::from_paths(g, [Path::new(vec![0, 1, 2, 3]).unwrap()]);
        assert!(c.verify().is_valid());
    }

    #[test]
    fn repeated_path_cancels() {
        let g = path_graph(3);
        let p = Path::new(vec![0, 1, 2]).unwrap();
        let c = OddCover::from_paths(g, [p.clone(), p]);
        let r = c.verify();
        assert!(!r.is_valid());
        assert_eq!(r.mismatched, vec![Edge::new(0, 1), Edge::new(1, 2)]);
    }

    #[test]
    fn malformed_member_flagged() {
        let g = path_graph(3);
        let c = OddCover { target: g, kind: CoverKind::Path, members: vec![vec![0, 1, 0]] };
        assert_eq!(c.verify().members, vec![MemberCheck::RepeatedVertex(0)]);
    }

    #[test]
    fn cycle_members_close() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let c = OddCover::from_cycles(g, [Cycle::new(vec![0, 1, 2]).unwrap()]);
        assert!(c.verify().is_valid());
    }

    #[test]
    fn lower_bound_examples() {
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(lower_bound(&c5, false).unwrap(), 1);
        let star = Graph::from_edges(6, (1..6).map(|i| (0, i))).unwrap();
        assert_eq!(lower_bound(&star, false).unwrap(), 3);
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(lower_bound(&k4, true).unwrap(), 2);
    }
}
