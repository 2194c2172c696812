//! All-even graphs where one extra isolated vertex lowers the path
//! odd-cover number: two copies of K_{2k+1} minus k Walecki edges, joined
//! by k - 1 edges.

use crate::error::{precondition, Result};
use crate::graph::{Cycle, Edge, Graph, Path};
use crate::solver::iso::{iso_cover_from_forests, IsoCover};

/// The Walecki cycles of K_{2k+1}: vertex `2k` plays infinity and cycle `i`
/// zigzags i, i+1, i-1, i+2, ... around Z_{2k}.
pub fn walecki(k: usize) -> Result<Vec<Cycle>> {
    if k == 0 {
        return Err(precondition("Walecki decomposition needs k >= 1"));
    }
    let m = 2 * k;
    (0..k)
        .map(|i| {
            let mut vs = vec![m, i];
            for s in 1..k {
                vs.push((i + s) % m);
                vs.push((i + m - s) % m);
            }
            vs.push((i + k) % m);
            Cycle::new(vs)
        })
        .collect()
}

/// Pure arithmetic behind `p2 > k`: every path in a k-path cover crosses
/// between the two halves, so the cover has total length at least
/// |E| + 2, but k paths on 4k + 2 vertices have at most k(4k + 1) edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountingCertificate {
    pub k: usize,
    pub crossing_edges: usize,
    pub min_total_length: usize,
    pub max_total_length: usize,
}

impl CountingCertificate {
    pub fn new(k: usize) -> Self {
        let edges = 2 * ((2 * k + 1) * (2 * k) / 2 - k) + (k - 1);
        CountingCertificate {
            k,
            crossing_edges: k - 1,
            min_total_length: edges + 2,
            max_total_length: k * (4 * k + 1),
        }
    }

    /// True when no k-path odd-cover can exist.
    pub fn holds(&self) -> bool {
        self.crossing_edges < self.k && self.min_total_length > self.max_total_length
    }
}

#[derive(Clone, Debug)]
pub struct Counterexample {
    pub k: usize,
    pub graph: Graph,
    /// k + 1 edge-disjoint paths covering the graph.
    pub paths: Vec<Path>,
    /// k linear forests partitioning the edges.
    pub forests: Vec<Vec<Edge>>,
    pub certificate: CountingCertificate,
}

impl Counterexample {
    /// k paths over the graph plus isolated vertices, stitched from the forests.
    pub fn iso_cover(&self) -> Result<IsoCover> {
        iso_cover_from_forests(&self.graph, &self.forests)
    }
}

pub fn gen_counterexample(k: usize) -> Result<Counterexample> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(precondition(format!("k = {k} must be odd and at least 3")));
    }
    let half = 2 * k + 1;
    let removed: Vec<Edge> = (0..k)
        .map(|i| if i + 1 < k { Edge::new(0, 2 * i + 1) } else { Edge::new(1, 2 * k - 2) })
        .collect();
    let hpaths: Vec<Vec<usize>> = walecki(k)?
        .iter()
        .zip(&removed)
        .map(|(c, &e)| c.without_edge(e, e.u()))
        .collect();
    let shift = |p: &[usize]| p.iter().map(|&v| v + half).collect::<Vec<_>>();
    let joints: Vec<usize> = (1..k).map(|i| if i + 1 < k { 2 * i + 1 } else { 2 * k - 2 }).collect();

    let mut paths = vec![Path::new(hpaths[0].clone())?, Path::new(shift(&hpaths[0]))?];
    let mut forests = vec![paths.iter().flat_map(|p| p.edges()).collect::<Vec<_>>()];
    for (i, &j) in (1..k).zip(&joints) {
        let mut q = hpaths[i].clone();
        if q[0] == j {
            q.reverse();
        }
        if *q.last().unwrap() != j {
            return Err(precondition(format!("path {i} does not end at joint {j}")));
        }
        let mut tail = shift(&q);
        tail.reverse();
        q.extend(tail);
        let q = Path::new(q)?;
        forests.push(q.edges().collect());
        paths.push(q);
    }
    let graph = Graph::from_edges(2 * half, paths.iter().flat_map(|p| p.edges()).map(|e| (e.u(), e.v())))?;
    Ok(Counterexample { k, graph, paths, forests, certificate: CountingCertificate::new(k) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn walecki_three() {
        let cs = walecki(3).unwrap();
        assert_eq!(cs[0].vertices(), &[6, 0, 1, 5, 2, 4, 3]);
        let total: usize = cs.iter().map(Cycle::len).sum();
        assert_eq!(total, 21);
    }

    #[test]
    fn three() {
        let c = gen_counterexample(3).unwrap();
        assert_eq!(c.graph.n(), 14);
        assert_eq!(c.graph.max_degree(), 6);
        assert!(c.graph.is_even());
        assert_eq!(c.paths.len(), 4);
        assert_eq!(c.forests.len(), 3);
        assert!(c.certificate.holds());
        assert_eq!(c.iso_cover().unwrap().cover.count(), 3);
        assert!(gen_counterexample(4).is_err());
    }
}
