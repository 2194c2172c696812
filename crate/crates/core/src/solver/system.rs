//! Path k-systems and the join/insert rewriting that collapses a
//! well-distributed system to one path per collection.

use std::collections::{BTreeSet, HashMap};

use crate::error::{internal, precondition, Result};
use crate::graph::{Edge, Path};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EndpointType {
    /// End of exactly one path.
    I,
    /// End of exactly two paths from different collections.
    II,
}

/// The edge `a-b` was replaced by `a-mid-b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Split {
    pub a: usize,
    pub mid: usize,
    pub b: usize,
}

/// Position of a path end: collection, index within it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Slot {
    coll: usize,
    idx: usize,
}

#[derive(Clone, Debug)]
pub struct PathKSystem {
    pub(crate) collections: Vec<Vec<Vec<usize>>>,
    pub(crate) next_vertex: usize,
    pub(crate) splits: Vec<Split>,
}

fn ends(p: &[usize]) -> [usize; 2] {
    [p[0], p[p.len() - 1]]
}

fn oriented_to_end_at(p: &[usize], v: usize) -> Vec<usize> {
    let mut out = p.to_vec();
    if out[0] == v {
        out.reverse();
    }
    out
}

fn terminal_edge(p: &[usize], v: usize) -> Edge {
    if p[0] == v {
        Edge::new(p[0], p[1])
    } else {
        Edge::new(p[p.len() - 1], p[p.len() - 2])
    }
}

impl PathKSystem {
    /// `universe` is the first vertex id free for subdivision.
    pub fn new(collections: Vec<Vec<Path>>, universe: usize) -> Result<Self> {
        let collections: Vec<Vec<Vec<usize>>> =
            collections.into_iter().map(|c| c.into_iter().map(Path::into_vertices).collect()).collect();
        if collections.iter().any(Vec::is_empty) {
            return Err(precondition("empty collection in a path system"));
        }
        for c in &collections {
            let mut seen = BTreeSet::new();
            for p in c {
                for &v in p {
                    if v >= universe {
                        return Err(precondition(format!("vertex {v} outside universe {universe}")));
                    }
                    if !seen.insert(v) {
                        return Err(precondition(format!("paths of one collection meet at {v}")));
                    }
                }
            }
        }
        let sys = PathKSystem { collections, next_vertex: universe, splits: Vec::new() };
        sys.check_types()?;
        Ok(sys)
    }

    pub fn k(&self) -> usize {
        self.collections.len()
    }

    pub fn total_paths(&self) -> usize {
        self.collections.iter().map(Vec::len).sum()
    }

    pub fn collections(&self) -> &[Vec<Vec<usize>>] {
        &self.collections
    }

    /// One past the largest vertex id in use.
    pub fn universe(&self) -> usize {
        self.next_vertex
    }

    pub fn splits(&self) -> &[Split] {
        &self.splits
    }

    fn end_map(&self) -> HashMap<usize, Vec<Slot>> {
        let mut map: HashMap<usize, Vec<Slot>> = HashMap::new();
        for (coll, c) in self.collections.iter().enumerate() {
            for (idx, p) in c.iter().enumerate() {
                for v in ends(p) {
                    map.entry(v).or_default().push(Slot { coll, idx });
                }
            }
        }
        map
    }

    fn path(&self, s: Slot) -> &[usize] {
        &self.collections[s.coll][s.idx]
    }

    /// Type of `v` if it is a path end.
    pub fn endpoint_type(&self, v: usize) -> Option<EndpointType> {
        let n = self.end_map().get(&v).map_or(0, Vec::len);
        match n {
            0 => None,
            1 => Some(EndpointType::I),
            _ => Some(EndpointType::II),
        }
    }

    fn check_types(&self) -> Result<()> {
        let map = self.end_map();
        for (&v, slots) in &map {
            match slots.as_slice() {
                [_] => {}
                [a, b] => {
                    if a.coll == b.coll {
                        return Err(precondition(format!("{v} ends two paths of one collection")));
                    }
                    if terminal_edge(self.path(*a), v) == terminal_edge(self.path(*b), v) {
                        return Err(precondition(format!("paths meeting at {v} share their last edge")));
                    }
                    let inner = self
                        .collections
                        .iter()
                        .flatten()
                        .filter(|p| p.len() > 2 && p[1..p.len() - 1].contains(&v))
                        .count();
                    if inner > 0 {
                        return Err(precondition(format!("type II endpoint {v} lies inside another path")));
                    }
                }
                _ => return Err(precondition(format!("{v} ends {} paths", slots.len()))),
            }
        }
        Ok(())
    }

    /// Conditions (i)-(iii) on the distribution of type I endpoints.
    pub fn is_well_distributed(&self) -> bool {
        let map = self.end_map();
        let type_one = |v: usize| map[&v].len() == 1;
        let per_coll: Vec<usize> = self
            .collections
            .iter()
            .map(|c| c.iter().map(|p| ends(p).iter().filter(|&&v| type_one(v)).count()).sum())
            .collect();
        if per_coll.iter().any(|&c| c > 2) {
            return false;
        }
        if per_coll.contains(&2) && per_coll.contains(&0) {
            return false;
        }
        self.collections
            .iter()
            .all(|c| c.len() == 1 || c.iter().all(|p| !ends(p).iter().all(|&v| type_one(v))))
    }

    /// XOR of every path's edge set.
    pub fn xor(&self) -> BTreeSet<Edge> {
        let mut acc = BTreeSet::new();
        for p in self.collections.iter().flatten() {
            for w in p.windows(2) {
                let e = Edge::new(w[0], w[1]);
                if !acc.remove(&e) {
                    acc.insert(e);
                }
            }
        }
        acc
    }

    /// `xor()` with every recorded split undone, for consistency checks.
    fn xor_unsplit(&self) -> BTreeSet<Edge> {
        let mut acc = self.xor();
        for s in self.splits.iter().rev() {
            let (e1, e2) = (Edge::new(s.a, s.mid), Edge::new(s.mid, s.b));
            if acc.remove(&e1) && acc.remove(&e2) {
                acc.insert(Edge::new(s.a, s.b));
            }
        }
        acc
    }

    fn partner(&self, map: &HashMap<usize, Vec<Slot>>, v: usize, me: Slot) -> Option<Slot> {
        map.get(&v)?.iter().copied().find(|&s| s != me)
    }

    fn remove_paths(&mut self, coll: usize, mut idxs: Vec<usize>) -> Vec<Vec<usize>> {
        idxs.sort_unstable_by(|a, b| b.cmp(a));
        idxs.into_iter().map(|i| self.collections[coll].swap_remove(i)).collect()
    }

    /// Doubles the pair `uv` to merge the two paths of each shared collection.
    pub fn join(&mut self, u: usize, v: usize) -> Result<()> {
        let before = cfg!(debug_assertions).then(|| self.xor_unsplit());
        let map = self.end_map();
        let at_u = map.get(&u).cloned().unwrap_or_default();
        let at_v = map.get(&v).cloned().unwrap_or_default();
        if at_u.len() != 2 || at_v.len() != 2 {
            return Err(precondition(format!("join({u}, {v}) needs two type II endpoints")));
        }
        let mut colls = [at_u[0].coll, at_u[1].coll];
        colls.sort_unstable();
        let mut colls_v = [at_v[0].coll, at_v[1].coll];
        colls_v.sort_unstable();
        if colls != colls_v {
            return Err(precondition(format!("{u} and {v} are shared by different collections")));
        }
        for c in colls {
            let su = at_u.iter().find(|s| s.coll == c).unwrap();
            let sv = at_v.iter().find(|s| s.coll == c).unwrap();
            if su.idx == sv.idx {
                return Err(precondition(format!("join({u}, {v}) needs four distinct paths")));
            }
        }
        for c in colls {
            let su = *at_u.iter().find(|s| s.coll == c).unwrap();
            let sv = *at_v.iter().find(|s| s.coll == c).unwrap();
            let mut merged = oriented_to_end_at(self.path(su), u);
            let mut tail = oriented_to_end_at(self.path(sv), v);
            tail.reverse();
            merged.extend(tail);
            self.remove_paths(c, vec![su.idx, sv.idx]);
            self.collections[c].push(merged);
        }
        if let Some(b) = before {
            debug_assert_eq!(b, self.xor_unsplit(), "join changed the XOR");
        }
        Ok(())
    }

    /// Subdivides the terminal edge at `u` of the path in collection `i` and
    /// hands the new one-edge piece to collection `r`. Returns the new vertex.
    pub fn insert(&mut self, u: usize, i: usize, r: usize) -> Result<usize> {
        let map = self.end_map();
        let at_u = map.get(&u).cloned().unwrap_or_default();
        if at_u.len() != 2 {
            return Err(precondition(format!("insert at {u}: not a type II endpoint")));
        }
        let mine = *at_u
            .iter()
            .find(|s| s.coll == i)
            .ok_or_else(|| precondition(format!("insert at {u}: collection {i} does not end there")))?;
        let other = at_u.iter().find(|s| s.coll != i).unwrap().coll;
        if r == i || r == other || r >= self.k() {
            return Err(precondition(format!("insert at {u}: target collection {r} not admissible")));
        }
        let r_has_type_two =
            self.collections[r].iter().any(|p| ends(p).iter().any(|v| map.get(v).is_some_and(|s| s.len() == 2)));
        if !r_has_type_two {
            return Err(precondition(format!("insert at {u}: collection {r} has no type II endpoint")));
        }
        let before = cfg!(debug_assertions).then(|| self.xor_unsplit());
        let mut p = oriented_to_end_at(self.path(mine), u);
        let z = p[p.len() - 2];
        let mid = self.next_vertex;
        self.next_vertex += 1;
        *p.last_mut().unwrap() = mid;
        self.collections[i][mine.idx] = p;
        self.collections[r].push(vec![mid, u]);
        self.splits.push(Split { a: z, mid, b: u });
        if let Some(b) = before {
            debug_assert_eq!(b, self.xor_unsplit(), "insert changed the XOR");
        }
        Ok(mid)
    }

    /// One inductive step: at most one insert followed by one join.
    fn reduce_step(&mut self) -> Result<()> {
        let map = self.end_map();
        let type_two = |v: usize| map.get(&v).is_some_and(|s| s.len() == 2);
        let c1 = (0..self.k()).max_by_key(|&c| (self.collections[c].len(), std::cmp::Reverse(c))).unwrap();
        let size = self.collections[c1].len();
        if size >= 3 {
            let p = (0..size)
                .find(|&i| ends(&self.collections[c1][i]).iter().all(|&v| type_two(v)))
                .ok_or_else(|| internal("no path with two type II ends"))?;
            let (q_idx, u) = (0..size)
                .filter(|&i| i != p)
                .find_map(|i| ends(&self.collections[c1][i]).into_iter().find(|&v| type_two(v)).map(|v| (i, v)))
                .ok_or_else(|| internal("no second path with a type II end"))?;
            let [v, v2] = ends(&self.collections[c1][p]);
            let sp = Slot { coll: c1, idx: p };
            let q = self.partner(&map, u, Slot { coll: c1, idx: q_idx }).unwrap();
            let r = self.partner(&map, v, sp).unwrap();
            let r2 = self.partner(&map, v2, sp).unwrap();
            for (w, rr) in [(v, r), (v2, r2)] {
                if rr.coll != q.coll {
                    self.insert(w, rr.coll, q.coll)?;
                    return self.join(u, w);
                }
            }
            let y = ends(self.path(q)).into_iter().find(|&x| x != u).unwrap();
            let pick = if type_two(y) {
                if q != r {
                    v
                } else {
                    v2
                }
            } else {
                let z = ends(self.path(r)).into_iter().find(|&x| x != v).unwrap();
                if type_two(z) {
                    v
                } else {
                    v2
                }
            };
            return self.join(u, pick);
        }
        if size != 2 {
            return Err(internal("reduction called on a reduced system"));
        }
        let pa = Slot { coll: c1, idx: 0 };
        let pb = Slot { coll: c1, idx: 1 };
        let twos = |s: Slot| ends(self.path(s)).into_iter().filter(|&v| type_two(v)).collect::<Vec<_>>();
        let mut same_partner = None;
        for u in twos(pa) {
            for v in twos(pb) {
                let q = self.partner(&map, u, pa).unwrap();
                let r = self.partner(&map, v, pb).unwrap();
                if q == r {
                    same_partner.get_or_insert((u, q));
                    continue;
                }
                if q.coll != r.coll {
                    self.insert(v, r.coll, q.coll)?;
                }
                return self.join(u, v);
            }
        }
        let (u, q) = same_partner.ok_or_else(|| internal("collection of two paths without type II ends"))?;
        let (y, _) = self.collections[q.coll]
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != q.idx)
            .find_map(|(_, path)| {
                let [a, b] = ends(path);
                match (type_two(a), type_two(b)) {
                    (true, false) => Some((a, b)),
                    (false, true) => Some((b, a)),
                    _ => None,
                }
            })
            .ok_or_else(|| internal("no path with exactly one type I end"))?;
        let z = self.insert(y, q.coll, c1)?;
        self.join(u, z)
    }

    /// Runs the reduction until every collection is a single path.
    pub fn reduce(&mut self) -> Result<()> {
        if !self.is_well_distributed() {
            return Err(precondition("path system is not well-distributed"));
        }
        let mut guard = 3 * self.total_paths() + 8;
        while self.total_paths() > self.k() {
            self.reduce_step()?;
            debug_assert!(self.is_well_distributed());
            guard -= 1;
            if guard == 0 {
                return Err(internal("path system reduction does not terminate"));
            }
        }
        Ok(())
    }
}

/// Result of [`reduce_system`]: one path per collection plus the
/// subdivisions performed on the way.
#[derive(Clone, Debug)]
pub struct ReducedSystem {
    pub paths: Vec<Path>,
    pub splits: Vec<Split>,
    pub universe: usize,
}

pub fn reduce_system(mut sys: PathKSystem) -> Result<ReducedSystem> {
    sys.reduce()?;
    let paths = sys
        .collections
        .iter()
        .map(|c| Path::new(c[0].clone()))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| internal(e.to_string()))?;
    Ok(ReducedSystem { paths, splits: sys.splits, universe: sys.next_vertex })
}
