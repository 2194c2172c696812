//! Integration of two disjoint edges, by membership of the edges in E(C).

use crate::error::{internal, Error, Result};
use crate::graph::{Cycle, CycleSet, Edge};
use crate::kit::{plus_edge, substitute, thread, ExceptionalCase};

type Walks = (Vec<usize>, Vec<usize>);

fn rev(s: &[usize]) -> Vec<usize> {
    s.iter().rev().copied().collect()
}

fn cat(parts: &[&[usize]]) -> Vec<usize> {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

/// Smallest interior vertex of an arc, with its index in the arc.
fn min_interior(arc: &[usize]) -> Option<(usize, usize)> {
    arc[1..arc.len() - 1].iter().enumerate().map(|(i, &v)| (v, i + 1)).min()
}

/// The four endpoints in cyclic order along `c`, plus the forward arcs
/// between consecutive ones.
fn demarcate(c: &Cycle, ends: [usize; 4]) -> ([usize; 4], [Vec<usize>; 4]) {
    let mut pos: Vec<(usize, usize)> = ends.iter().map(|&v| (c.position(v).unwrap(), v)).collect();
    pos.sort_unstable();
    let a = [pos[0].1, pos[1].1, pos[2].1, pos[3].1];
    let arcs = [0, 1, 2, 3].map(|i| c.arc(a[i], a[(i + 1) % 4], true));
    (a, arcs)
}

fn partner(f1: Edge, f2: Edge, x: usize) -> usize {
    if f1.contains(x) {
        f1.other(x)
    } else {
        f2.other(x)
    }
}

/// Details of the K4 obstruction, if it applies.
pub fn exceptional_case(cs: &CycleSet, f1: Edge, f2: Edge) -> Option<ExceptionalCase> {
    if cs.len() < 2 || f1.shares_vertex(f2) {
        return None;
    }
    let ends = [f1.u(), f1.v(), f2.u(), f2.v()];
    let j = cs.owner(ends[0])?;
    if ends.iter().any(|&v| cs.owner(v) != Some(j)) {
        return None;
    }
    let (a, arcs) = demarcate(&cs.cycles()[j], ends);
    if partner(f1, f2, a[0]) != a[2] {
        return None;
    }
    let internal_vertices = arcs.each_ref().map(|s| s.len() - 2);
    (internal_vertices.iter().filter(|&&k| k > 0).count() <= 1)
        .then_some(ExceptionalCase { cycle_index: j, internal_vertices })
}

/// True when two-path integration of `f1, f2` into `cs` is impossible.
pub fn is_exceptional_k4(cs: &CycleSet, f1: Edge, f2: Edge) -> bool {
    exceptional_case(cs, f1, f2).is_some()
}

fn rest_chain(rest: &CycleSet) -> Walks {
    thread(rest, &(0..rest.len()).collect::<Vec<_>>(), None, None, &[])
}

/// Both edges outside E(cs).
pub(super) fn both_out(cs: &CycleSet, f1: Edge, f2: Edge) -> Result<Walks> {
    let ends = [f1.u(), f1.v(), f2.u(), f2.v()];
    let mut per_cycle = vec![0usize; cs.len()];
    for &v in &ends {
        if let Some(i) = cs.owner(v) {
            per_cycle[i] += 1;
        }
    }
    if let Some(j) = per_cycle.iter().position(|&k| k == 4) {
        return four_on_one(cs, j, f1, f2);
    }
    if let Some(j) = per_cycle.iter().position(|&k| k == 3) {
        return three_on_one(cs, j, f1, f2);
    }
    if let Some(&u1) = ends.iter().find(|&&v| cs.owner(v).is_none()) {
        return one_end_off(cs, f1, f2, u1);
    }
    let single = ends.iter().copied().find(|&v| per_cycle[cs.owner(v).unwrap()] == 1);
    match single {
        Some(u1) => lone_endpoint(cs, f1, f2, u1),
        None => two_and_two(cs, f1, f2),
    }
}

/// All four endpoints on cycle `j`.
fn four_on_one(cs: &CycleSet, j: usize, f1: Edge, f2: Edge) -> Result<Walks> {
    let c = &cs.cycles()[j];
    let (a, arcs) = demarcate(c, [f1.u(), f1.v(), f2.u(), f2.v()]);
    let crossing = partner(f1, f2, a[0]) == a[2];
    let rest = cs.without(&[j]);
    if !crossing {
        // Relabel so the cyclic order is u1 v1 v2 u2 with f1 = u1v1, f2 = u2v2.
        let s = if partner(f1, f2, a[0]) == a[1] { 0 } else { 3 };
        let r1 = &arcs[s];
        let rv = &arcs[(s + 1) % 4];
        let r2 = &arcs[(s + 2) % 4];
        let ru = &arcs[(s + 3) % 4];
        let (u1, v2) = (r1[0], r2[0]);
        if rest.is_empty() {
            return Ok((cat(&[&[u1], rv, &r2[1..]]), cat(&[&[v2], ru, &r1[1..]])));
        }
        let (pc, qc) = rest_chain(&rest);
        let (_, i1) = min_interior(r1).ok_or_else(|| internal("chord parallel to a cycle edge"))?;
        let (_, i2) = min_interior(r2).ok_or_else(|| internal("chord parallel to a cycle edge"))?;
        let p = cat(&[&[u1], &rev(&r1[i1..]), &pc, &r2[i2..], &[v2]]);
        let q = cat(&[ru, &r1[1..=i1], &qc, &rev(&r2[..=i2]), &rev(rv)[1..]]);
        return Ok((p, q));
    }
    if rest.is_empty() {
        let p = cat(&[&[a[2]], &arcs[0], &[a[3]]]);
        let q = cat(&[&arcs[1], &arcs[2][1..], &arcs[3][1..]]);
        return Ok((p, q));
    }
    let inner = arcs.each_ref().map(|s| s.len() > 2);
    let (pc, qc) = rest_chain(&rest);
    if let Some(i) = (0..2).find(|&i| inner[i] && inner[i + 2]) {
        // u1 = a_i, u2 = a_{i+1}, v1 = a_{i+2}, v2 = a_{i+3}.
        let ru = &arcs[i];
        let r2 = &arcs[i + 1];
        let rv = &arcs[i + 2];
        let r1 = &arcs[(i + 3) % 4];
        let (_, iu) = min_interior(ru).unwrap();
        let (_, iv) = min_interior(rv).unwrap();
        let p = cat(&[&rev(r1), &rev(&ru[iu..]), &pc, &rev(&rv[..=iv])]);
        let q = cat(&[r2, &ru[..=iu], &qc, &rv[iv..]]);
        return Ok((p, q));
    }
    if let Some(i) = (0..4).find(|&i| inner[i] && inner[(i + 1) % 4]) {
        // u1 = a_{i+1}, u2 = a_{i+2}, v1 = a_{i+3}, v2 = a_i.
        let r1 = &arcs[i];
        let ru = &arcs[(i + 1) % 4];
        let r2 = &arcs[(i + 2) % 4];
        let rv = &arcs[(i + 3) % 4];
        let (u1, u2, v1) = (ru[0], r2[0], rv[0]);
        let (_, iu) = min_interior(ru).unwrap();
        let (_, i1) = min_interior(r1).unwrap();
        let p = cat(&[&[v1], &ru[..=iu], &pc, &rev(&r1[..=i1]), &[u2]]);
        let q = cat(&[&rev(rv), &rev(r2)[1..], &rev(&ru[iu..])[1..], &qc, &r1[i1..]]);
        debug_assert_eq!(q.last(), Some(&u1));
        return Ok((p, q));
    }
    let internal_vertices = arcs.each_ref().map(|s| s.len() - 2);
    Err(Error::Exceptional(ExceptionalCase { cycle_index: j, internal_vertices }))
}

/// Exactly three endpoints on cycle `j`.
fn three_on_one(cs: &CycleSet, j: usize, f1: Edge, f2: Edge) -> Result<Walks> {
    let on = |e: Edge| e.ends().iter().all(|&v| cs.owner(v) == Some(j));
    let (inside, across) = if on(f1) { (f1, f2) } else { (f2, f1) };
    let (u2, v2) = (inside.u(), inside.v());
    let u1 = if cs.owner(across.u()) == Some(j) { across.u() } else { across.v() };
    let v1 = across.other(u1);
    let c = &cs.cycles()[j];
    let r2 = c.arc_avoiding(u2, v2, &[u1]).unwrap();
    let ru = c.arc_avoiding(u1, u2, &[v2]).unwrap();
    let rv = c.arc_avoiding(u1, v2, &[u2]).unwrap();
    let (_, iy) = min_interior(&r2).ok_or_else(|| internal("chord parallel to a cycle edge"))?;
    let rest = cs.without(&[j]);
    let cv = rest.owner(v1);
    let mut order: Vec<usize> = (0..rest.len()).filter(|&i| Some(i) != cv).collect();
    order.extend(cv);
    let (pc, qc) = thread(&rest, &order, None, cv.map(|_| v1), &[]);
    let tail: &[usize] = if cv.is_some() { &[] } else { &[v1] };
    let p = cat(&[&[u2], &rev(&r2[iy..]), &pc, tail, &[u1]]);
    let q = cat(&[&rev(&rv), &ru[1..], &r2[1..=iy], &qc, tail]);
    Ok((p, q))
}

/// Every cycle holds at most two endpoints and `u1` is on no cycle.
fn one_end_off(cs: &CycleSet, f1: Edge, f2: Edge, u1: usize) -> Result<Walks> {
    let (fa, fb) = if f1.contains(u1) { (f1, f2) } else { (f2, f1) };
    let v1 = fa.other(u1);
    let on_cycle = cs.contains_vertex(v1);
    let z = if on_cycle { v1 } else { super::default_end(cs, fb)? };
    let (mut p, mut q) = plus_edge(cs, fb, Some(z))?;
    if !on_cycle {
        p.push(v1);
        q.push(v1);
    }
    p.push(u1);
    Ok((p, q))
}

/// All endpoints on cycles, at most two per cycle, and `u1` alone on its cycle.
fn lone_endpoint(cs: &CycleSet, f1: Edge, f2: Edge, u1: usize) -> Result<Walks> {
    let (fa, fb) = if f1.contains(u1) { (f1, f2) } else { (f2, f1) };
    let v1 = fa.other(u1);
    let k = cs.owner(u1).unwrap();
    let rest = cs.without(&[k]);
    let (p, q) = plus_edge(&rest, fb, Some(v1))?;
    let ck = &cs.cycles()[k];
    let (pk, qk) = thread(cs, &[k], None, None, &[u1]);
    debug_assert!(ck.contains(pk[0]));
    let qe: std::collections::HashSet<Edge> = q.windows(2).map(|w| Edge::new(w[0], w[1])).collect();
    let ie = p
        .windows(2)
        .position(|w| qe.contains(&Edge::new(w[0], w[1])))
        .ok_or_else(|| internal("paths share no edge"))?;
    let (x, y) = (p[ie], p[ie + 1]);
    let mut np = cat(&[&p[..=ie], &pk, &p[ie + 1..]]);
    let jx = q.iter().position(|&w| w == x).unwrap();
    let jy = q.iter().position(|&w| w == y).unwrap();
    let nq = if jx < jy {
        cat(&[&q[..=jx], &qk, &q[jy..]])
    } else {
        cat(&[&q[..=jy], &rev(&qk), &q[jx..]])
    };
    np.push(u1);
    Ok((np, nq))
}

/// Two cycles carry two endpoints each.
fn two_and_two(cs: &CycleSet, f1: Edge, f2: Edge) -> Result<Walks> {
    let (c1, c2) = {
        let mut owners: Vec<usize> = [f1.u(), f1.v(), f2.u(), f2.v()].iter().map(|&v| cs.owner(v).unwrap()).collect();
        owners.sort_unstable();
        owners.dedup();
        (owners[0], owners[1])
    };
    let rest = cs.without(&[c1, c2]);
    let cyc1 = &cs.cycles()[c1];
    let cyc2 = &cs.cycles()[c2];
    if cs.owner(f1.u()) != cs.owner(f1.v()) {
        let on1 = |e: Edge| if cs.owner(e.u()) == Some(c1) { (e.u(), e.v()) } else { (e.v(), e.u()) };
        let (u1, v1) = on1(f1);
        let (u2, v2) = on1(f2);
        let pick = |c: &Cycle, a: usize, b: usize| {
            let (f, r) = c.arcs(a, b);
            if f.len() > 2 {
                (f, r)
            } else {
                (r, f)
            }
        };
        let (p1, q1) = pick(cyc1, u1, u2);
        let (p2, q2) = pick(cyc2, v2, v1);
        let merged = Cycle::new(cat(&[&p1, &p2])).map_err(|e| internal(e.to_string()))?;
        let mut cycles = rest.into_cycles();
        cycles.push(merged);
        let ncs = CycleSet::new(cycles)?;
        let (p, q) = both_out(&ncs, Edge::new(u1, u2), Edge::new(v1, v2))?;
        let (p, q) = substitute(p, q, &q1)?;
        return substitute(p, q, &q2);
    }
    let (e1, e2) = if cs.owner(f1.u()) == Some(c1) { (f1, f2) } else { (f2, f1) };
    let z_for = |c: &Cycle, e: Edge| c.vertices().iter().copied().filter(|&w| !e.contains(w)).min().unwrap();
    let z1 = z_for(cyc1, e1);
    let z2 = z_for(cyc2, e2);
    let (p1, q1) = plus_edge(&CycleSet::new(vec![cyc1.clone()])?, e1, Some(z1))?;
    let (p2, q2) = plus_edge(&CycleSet::new(vec![cyc2.clone()])?, e2, Some(z2))?;
    let (pc, qc) = if rest.is_empty() { (Vec::new(), Vec::new()) } else { rest_chain(&rest) };
    Ok((cat(&[&p1, &pc, &rev(&p2)]), cat(&[&q1, &qc, &rev(&q2)])))
}

/// Both edges are cycle edges.
pub(super) fn both_in(cs: &CycleSet, f1: Edge, f2: Edge) -> Result<Walks> {
    let j1 = cs.edge_owner(f1).unwrap();
    let j2 = cs.edge_owner(f2).unwrap();
    let (r1, r2, rest) = if j1 == j2 {
        let s = cs.cycles()[j1].without_edge(f1, f1.u());
        let i = s
            .windows(2)
            .position(|w| Edge::new(w[0], w[1]) == f2)
            .ok_or_else(|| internal("second edge not on the cycle"))?;
        (s[..=i].to_vec(), s[i + 1..].to_vec(), cs.without(&[j1]))
    } else {
        let r1 = cs.cycles()[j1].without_edge(f1, f1.u());
        let r2 = cs.cycles()[j2].without_edge(f2, f2.u());
        (r1, r2, cs.without(&[j1, j2]))
    };
    if rest.is_empty() {
        return Ok((r1, r2));
    }
    let g1 = Edge::new(r1[0], r1[r1.len() - 1]);
    let g2 = Edge::new(r2[0], r2[r2.len() - 1]);
    let (p, q) = both_out(&rest, g1, g2)?;
    let (p, q) = substitute(p, q, &r1)?;
    substitute(p, q, &r2)
}

/// `f1` is a cycle edge, `f2` is not.
pub(super) fn one_in(cs: &CycleSet, f1: Edge, f2: Edge) -> Result<Walks> {
    let j = cs.edge_owner(f1).unwrap();
    let s = cs.cycles()[j].without_edge(f1, f1.u());
    let (u1, v1) = (s[0], s[s.len() - 1]);
    let rest = cs.without(&[j]);
    let pos = |x: usize| s.iter().position(|&w| w == x);
    let (a, b) = (f2.u(), f2.v());
    if pos(a).is_none() && pos(b).is_none() {
        if rest.is_empty() {
            return Ok((s, vec![a, b]));
        }
        let (mut p, mut q) = plus_edge(&rest, f2, None)?;
        p.extend_from_slice(&s);
        q.push(u1);
        return Ok((p, q));
    }
    let (mut u2, mut v2) = if pos(a).is_some() { (a, b) } else { (b, a) };
    if let (Some(i), Some(k)) = (pos(u2), pos(v2)) {
        if i > k {
            std::mem::swap(&mut u2, &mut v2);
        }
    }
    let iu = pos(u2).unwrap();
    if rest.is_empty() {
        return Ok(match pos(v2) {
            Some(iv) => (cat(&[&s[..=iu], &s[iv..]]), s[iu..=iv].to_vec()),
            None => (cat(&[&s[..=iu], &[v2]]), s[iu..].to_vec()),
        });
    }
    if pos(v2).is_some() {
        let (pc, qc) = rest_chain(&rest);
        return Ok((cat(&[&s[iu..], &pc, &[u1]]), cat(&[&[v1], &qc, &s[..=iu], &[v2]])));
    }
    match rest.owner(v2) {
        Some(cv) => {
            let mut order: Vec<usize> = (0..rest.len()).filter(|&i| i != cv).collect();
            order.push(cv);
            let (pc, qc) = thread(&rest, &order, None, Some(v2), &[]);
            Ok((cat(&[&s, &pc]), cat(&[&[v1], &qc, &[u2]])))
        }
        None => {
            let (pc, qc) = rest_chain(&rest);
            Ok((cat(&[&s, &pc, &[v2]]), cat(&[&[v1], &qc, &[v2, u2]])))
        }
    }
}
