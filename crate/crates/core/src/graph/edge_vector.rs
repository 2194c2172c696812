use crate::error::{Error, Result};
use crate::graph::Edge;

/// Number of unordered pairs on `n` vertices.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Bit index of the pair `{u, v}` (u < v): `u*n - u(u+1)/2 + (v - u - 1)`.
pub fn pair_index(n: usize, e: Edge) -> usize {
    let (u, v) = (e.u(), e.v());
    u * n - u * (u + 1) / 2 + (v - u - 1)
}

/// Inverse of [`pair_index`].
fn pair_at(n: usize, mut idx: usize) -> Edge {
    let mut u = 0;
    loop {
        let row = n - u - 1;
        if idx < row {
            return Edge::new(u, u + 1 + idx);
        }
        idx -= row;
        u += 1;
    }
}

/// A subset of the pairs of an `n`-vertex universe, as a packed bitset.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EdgeVector {
    n: usize,
    words: Vec<u64>,
}

impl EdgeVector {
    pub fn zero(n: usize) -> Self {
        EdgeVector { n, words: vec![0; pair_count(n).div_ceil(64)] }
    }

    pub fn from_edges<I: IntoIterator<Item = Edge>>(n: usize, edges: I) -> Self {
        let mut ev = Self::zero(n);
        for e in edges {
            ev.toggle(e);
        }
        ev
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn toggle(&mut self, e: Edge) {
        debug_assert!(e.v() < self.n);
        let i = pair_index(self.n, e);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn contains(&self, e: Edge) -> bool {
        if e.v() >= self.n {
            return false;
        }
        let i = pair_index(self.n, e);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn xor_assign(&mut self, other: &EdgeVector) -> Result<()> {
        if self.n != other.n {
            return Err(Error::UniverseMismatch { left: self.n, right: other.n });
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        Ok(())
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Set pairs in index order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.n;
        self.words.iter().enumerate().flat_map(move |(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(pair_at(n, wi * 64 + b))
            })
        })
    }

    /// Low 64 bits; exact when `C(n,2) <= 64`.
    pub fn to_u64(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    pub fn from_u64(n: usize, bits: u64) -> Self {
        let mut ev = Self::zero(n);
        if let Some(w) = ev.words.first_mut() {
            *w = bits;
        }
        ev
    }
}

/// Symmetric difference of two edge vectors over the same universe.
pub fn xor_edges(a: &EdgeVector, b: &EdgeVector) -> Result<EdgeVector> {
    let mut out = a.clone();
    out.xor_assign(b)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_is_a_bijection() {
        for n in 2..9 {
            let mut seen = vec![false; pair_count(n)];
            for u in 0..n {
                for v in u + 1..n {
                    let i = pair_index(n, Edge::new(u, v));
                    assert!(!seen[i]);
                    seen[i] = true;
                    assert_eq!(pair_at(n, i), Edge::new(u, v));
                }
            }
            assert!(seen.into_iter().all(|s| s));
        }
    }

    #[test]
    fn index_examples() {
        assert_eq!(pair_index(4, Edge::new(0, 1)), 0);
        assert_eq!(pair_index(4, Edge::new(0, 3)), 2);
        assert_eq!(pair_index(4, Edge::new(1, 2)), 3);
        assert_eq!(pair_index(4, Edge::new(2, 3)), 5);
    }

    #[test]
    fn xor_examples() {
        let x = EdgeVector::from_edges(3, [Edge::new(0, 1), Edge::new(1, 2)]);
        assert!(xor_edges(&x, &x).unwrap().is_zero());
        let y = EdgeVector::from_edges(3, [Edge::new(1, 2), Edge::new(0, 2)]);
        let z = xor_edges(&x, &y).unwrap();
        assert_eq!(z.edges().collect::<Vec<_>>(), vec![Edge::new(0, 1), Edge::new(0, 2)]);
        let tri = [Edge::new(0, 1), Edge::new(0, 2), Edge::new(1, 2)]
            .into_iter()
            .map(|e| EdgeVector::from_edges(3, [e]))
            .fold(EdgeVector::zero(3), |acc, v| xor_edges(&acc, &v).unwrap());
        assert_eq!(tri.count(), 3);
    }

    #[test]
    fn universe_mismatch() {
        assert!(xor_edges(&EdgeVector::zero(3), &EdgeVector::zero(4)).is_err());
    }

    #[test]
    fn large_universe_roundtrip() {
        let edges = [Edge::new(0, 39), Edge::new(17, 18), Edge::new(38, 39)];
        let ev = EdgeVector::from_edges(40, edges);
        assert_eq!(ev.edges().collect::<Vec<_>>(), edges.to_vec());
    }
}
