use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{precondition, Error, Result};
use crate::graph::{Edge, Graph};
use crate::solver::{gen_counterexample, walecki};

/// A named graph family, written `name(arg, ...)`.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Gnp { n: usize, p: f64, seed: u64 },
    /// k disjoint cycles of length `len`.
    Cycles { k: usize, len: usize },
    /// A path whose internal edges x1x2, x3x4, ... each lie on a cycle of
    /// length `len`, with a pendant edge at both ends.
    CyclesOnPath { k: usize, len: usize },
    /// K_{2k+1} as the union of its Walecki cycles.
    Walecki { k: usize },
    Counterexample { k: usize },
    /// XOR of random cycles, hence all-even.
    EulerianRandom { n: usize, seed: u64 },
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse { line: 1, msg: msg.into() }
}

fn arg<T: FromStr>(args: &[&str], i: usize) -> Result<T> {
    let s = args.get(i).ok_or_else(|| bad(format!("missing argument {}", i + 1)))?;
    s.parse().map_err(|_| bad(format!("cannot parse argument {s:?}")))
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let open = s.find('(').ok_or_else(|| bad("expected name(args)"))?;
        let inner = s[open + 1..].strip_suffix(')').ok_or_else(|| bad("missing ')'"))?;
        let args: Vec<&str> = inner.split(',').map(str::trim).filter(|a| !a.is_empty()).collect();
        let want = |k: usize| {
            if args.len() == k {
                Ok(())
            } else {
                Err(bad(format!("{} takes {k} arguments", &s[..open])))
            }
        };
        let fam = match &s[..open] {
            "gnp" => {
                want(3)?;
                Family::Gnp { n: arg(&args, 0)?, p: arg(&args, 1)?, seed: arg(&args, 2)? }
            }
            "cycles" => {
                want(2)?;
                Family::Cycles { k: arg(&args, 0)?, len: arg(&args, 1)? }
            }
            "cycles-on-path" => {
                want(2)?;
                Family::CyclesOnPath { k: arg(&args, 0)?, len: arg(&args, 1)? }
            }
            "walecki" => {
                want(1)?;
                Family::Walecki { k: arg(&args, 0)? }
            }
            "counterexample" => {
                want(1)?;
                Family::Counterexample { k: arg(&args, 0)? }
            }
            "eulerian-random" => {
                want(2)?;
                Family::EulerianRandom { n: arg(&args, 0)?, seed: arg(&args, 1)? }
            }
            other => return Err(bad(format!("unknown family {other:?}"))),
        };
        Ok(fam)
    }
}

fn cycles_graph(k: usize, len: usize) -> Result<Graph> {
    if len < 3 {
        return Err(precondition("cycle length must be at least 3"));
    }
    let edges = (0..k).flat_map(|c| (0..len).map(move |i| (c * len + i, c * len + (i + 1) % len)));
    Graph::from_edges(k * len, edges)
}

fn cycles_on_path(k: usize, len: usize) -> Result<Graph> {
    if len < 3 {
        return Err(precondition("cycle length must be at least 3"));
    }
    let spine = 2 * k + 2;
    let n = spine + k * (len - 2);
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|i| (i - 1, i)).collect();
    for c in 0..k {
        let (a, b) = (2 * c + 1, 2 * c + 2);
        let mut ring = vec![b];
        ring.extend((0..len - 2).map(|j| spine + c * (len - 2) + j));
        ring.push(a);
        edges.extend(ring.windows(2).map(|w| (w[0], w[1])));
    }
    Graph::from_edges(n, edges)
}

fn eulerian_random(n: usize, seed: u64) -> Result<Graph> {
    if n < 3 {
        return Ok(Graph::new(n));
    }
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    let mut verts: Vec<usize> = (0..n).collect();
    for _ in 0..n.div_ceil(2) {
        verts.shuffle(&mut r);
        let len = r.gen_range(3..=n);
        for i in 0..len {
            g.toggle_edge(Edge::new(verts[i], verts[(i + 1) % len]));
        }
    }
    Ok(g)
}

pub fn generate(f: &Family) -> Result<Graph> {
    match *f {
        Family::Gnp { n, p, seed } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(precondition(format!("p = {p} outside [0, 1]")));
            }
            let mut r = ChaCha8Rng::seed_from_u64(seed);
            let mut g = Graph::new(n);
            for a in 0..n {
                for b in a + 1..n {
                    if r.gen_bool(p) {
                        g.add_edge(Edge::new(a, b));
                    }
                }
            }
            Ok(g)
        }
        Family::Cycles { k, len } => cycles_graph(k, len),
        Family::CyclesOnPath { k, len } => cycles_on_path(k, len),
        Family::Walecki { k } => {
            let cs = walecki(k)?;
            Graph::from_edges(2 * k + 1, cs.iter().flat_map(|c| c.edges()).map(|e| (e.u(), e.v())))
        }
        Family::Counterexample { k } => Ok(gen_counterexample(k)?.graph),
        Family::EulerianRandom { n, seed } => eulerian_random(n, seed),
    }
}
