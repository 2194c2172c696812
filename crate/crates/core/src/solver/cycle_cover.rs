//! Cycle odd-covers of all-even graphs with at most Δ cycles.

use crate::cycles::peel_cycle_layers;
use crate::error::{internal, Result};
use crate::graph::{Cycle, CycleSet, Graph, OddCover};
use crate::kit::cover_cycles;

/// Two cycles (one for a triangle) whose XOR is the layer.
fn layer_cycles(layer: &CycleSet) -> Result<Vec<Cycle>> {
    if let [c] = layer.cycles() {
        let vs = c.vertices();
        if vs.len() == 3 {
            return Ok(vec![c.clone()]);
        }
        // chord between positions 0 and 2
        let mut rest = vec![vs[0]];
        rest.extend_from_slice(&vs[2..]);
        return Ok(vec![Cycle::new(vs[..3].to_vec())?, Cycle::new(rest)?]);
    }
    // P and Q share both ends; the edge between the ends closes each.
    let tp = cover_cycles(layer)?;
    [tp.p, tp.q].into_iter().map(|p| Cycle::new(p.into_vertices())).collect()
}

/// At most Δ cycles: each cycle layer is covered by two paths with common
/// ends, and each path is closed by the edge joining them.
pub fn cycle_odd_cover(g: &Graph) -> Result<OddCover> {
    g.require_even()?;
    let mut cycles = Vec::new();
    for layer in peel_cycle_layers(g)? {
        cycles.extend(layer_cycles(&layer)?);
    }
    let cover = OddCover::from_cycles(g.clone(), cycles);
    if !cover.verify().is_valid() {
        return Err(internal("cycle odd-cover does not verify"));
    }
    if cover.count() > g.max_degree() {
        return Err(internal(format!("{} cycles exceed Δ = {}", cover.count(), g.max_degree())));
    }
    Ok(cover)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let c6 = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert_eq!(cycle_odd_cover(&c6).unwrap().count(), 2);
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(cycle_odd_cover(&k3).unwrap().count(), 1);
        let k5 = Graph::from_edges(5, (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b)))).unwrap();
        assert!(cycle_odd_cover(&k5).unwrap().count() <= 4);
        assert!(cycle_odd_cover(&Graph::from_edges(2, [(0, 1)]).unwrap()).is_err());
    }
}
