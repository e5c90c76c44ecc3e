//! The bounded hole left by a strictly 2-intersecting triple.
//!
//! The three boundaries are overlaid as a planar graph; faces are traced with
//! the usual "turn right" rule and the bounded face covered by no set is the
//! hole. Its boundary splits into three arcs, one per set.

use std::cmp::Ordering;

use super::polygon::ConvexPoly2;
use super::triple::Pairs;
use crate::error::{Error, Result};
use crate::kernel::predicates::{cross2, line_through_intersect, on_segment};
use crate::kernel::scalar::{cmp, sign, Field};
use crate::kernel::Point2;

/// Corners and arcs of the hole `Δ(K1, K2, K3)`.
#[derive(Clone, Debug, PartialEq)]
pub struct HoleDescriptor<T> {
    /// `v12`, `v23`, `v13`.
    pub corners: [Point2<T>; 3],
    /// `γ1 ⊂ ∂K1`, `γ2 ⊂ ∂K2`, `γ3 ⊂ ∂K3`; `γi` runs from its corner with the
    /// lower-indexed neighbour to the other one.
    pub arcs: [Vec<Point2<T>>; 3],
    /// Boundary of the hole, counterclockwise.
    pub boundary: Vec<Point2<T>>,
}

impl<T: Field> HoleDescriptor<T> {
    /// Corner shared by arcs `i` and `j` (0-based, unordered).
    pub fn corner(&self, i: usize, j: usize) -> &Point2<T> {
        match (i.min(j), i.max(j)) {
            (0, 1) => &self.corners[0],
            (1, 2) => &self.corners[1],
            (0, 2) => &self.corners[2],
            _ => panic!("bad corner ({i}, {j})"),
        }
    }
}

struct Graph<T> {
    pts: Vec<Point2<T>>,
    // undirected edges with the bitmask of sets whose boundary carries them
    edges: Vec<(usize, usize, u8)>,
}

impl<T: Field> Graph<T> {
    fn vertex(&mut self, p: &Point2<T>) -> usize {
        if let Some(i) = self.pts.iter().position(|q| q == p) {
            return i;
        }
        self.pts.push(p.clone());
        self.pts.len() - 1
    }

    fn add_edge(&mut self, a: usize, b: usize, label: u8) {
        let (a, b) = (a.min(b), a.max(b));
        if let Some(e) = self.edges.iter_mut().find(|e| e.0 == a && e.1 == b) {
            e.2 |= label;
        } else {
            self.edges.push((a, b, label));
        }
    }
}

/// Points where `e` meets any edge in `others` (with `e`'s endpoints).
fn split_points<T: Field>(e: &(Point2<T>, Point2<T>), others: &[(Point2<T>, Point2<T>)]) -> Vec<Point2<T>> {
    let (a, b) = e;
    let mut pts = vec![a.clone(), b.clone()];
    for (c, d) in others {
        let collinear = cross2(a, b, c).is_zero() && cross2(a, b, d).is_zero();
        if collinear {
            for q in [c, d] {
                if on_segment(q, a, b) {
                    pts.push(q.clone());
                }
            }
        } else if crate::kernel::predicates::segments_intersect(a, b, c, d) {
            if let Some(x) = line_through_intersect(a, b, c, d) {
                pts.push(x);
            }
        }
    }
    let (dx, dy) = b.sub(a);
    let key = |p: &Point2<T>| {
        let (u, v) = p.sub(a);
        u * dx.clone() + v * dy.clone()
    };
    pts.sort_by(|p, q| cmp(&key(p), &key(q)));
    pts.dedup();
    pts
}

/// Half-plane-then-cross comparator for directions around a vertex.
fn angle_cmp<T: Field>(u: &(T, T), v: &(T, T)) -> Ordering {
    let half = |d: &(T, T)| {
        if d.1.is_positive() || (d.1.is_zero() && d.0.is_positive()) {
            0
        } else {
            1
        }
    };
    half(u).cmp(&half(v)).then_with(|| {
        let c = u.0.clone() * v.1.clone() - u.1.clone() * v.0.clone();
        sign(&c).reverse()
    })
}

/// Trace all faces of the graph; each face lies to the left of its half-edges.
fn faces<T: Field>(g: &Graph<T>) -> Vec<Vec<(usize, usize)>> {
    let n = g.pts.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b, _) in &g.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    for (v, list) in adj.iter_mut().enumerate() {
        let o = &g.pts[v];
        list.sort_by(|&a, &b| angle_cmp(&g.pts[a].sub(o), &g.pts[b].sub(o)));
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for &(a, b, _) in &g.edges {
        for start in [(a, b), (b, a)] {
            if seen.contains(&start) {
                continue;
            }
            let mut face = Vec::new();
            let mut cur = start;
            loop {
                seen.insert(cur);
                face.push(cur);
                let (u, v) = cur;
                let list = &adj[v];
                let pos = list.iter().position(|&w| w == u).expect("adjacent");
                let w = list[(pos + list.len() - 1) % list.len()];
                cur = (v, w);
                if cur == start {
                    break;
                }
            }
            out.push(face);
        }
    }
    out
}

fn area2<T: Field>(poly: &[Point2<T>]) -> T {
    let n = poly.len();
    let mut s = T::zero();
    for i in 0..n {
        let (p, q) = (&poly[i], &poly[(i + 1) % n]);
        s = s + p.x.clone() * q.y.clone() - q.x.clone() * p.y.clone();
    }
    s
}

fn in_closed_triangle<T: Field>(p: &Point2<T>, a: &Point2<T>, b: &Point2<T>, c: &Point2<T>) -> bool {
    !cross2(a, b, p).is_negative() && !cross2(b, c, p).is_negative() && !cross2(c, a, p).is_negative()
}

/// A point strictly inside a simple CCW polygon, from an ear.
pub fn interior_sample<T: Field>(poly: &[Point2<T>]) -> Option<Point2<T>> {
    let n = poly.len();
    for i in 0..n {
        let (a, b, c) = (&poly[(i + n - 1) % n], &poly[i], &poly[(i + 1) % n]);
        if !cross2(a, b, c).is_positive() {
            continue;
        }
        let blocked = poly
            .iter()
            .any(|q| q != a && q != b && q != c && in_closed_triangle(q, a, b, c));
        if !blocked {
            let three = T::int(3);
            return Some(Point2::new(
                (a.x.clone() + b.x.clone() + c.x.clone()) / three.clone(),
                (a.y.clone() + b.y.clone() + c.y.clone()) / three,
            ));
        }
    }
    None
}

/// Compute the hole of a strictly 2-intersecting triple.
pub fn hole_region<T: Field>(
    k1: &ConvexPoly2<T>,
    k2: &ConvexPoly2<T>,
    k3: &ConvexPoly2<T>,
) -> Result<HoleDescriptor<T>> {
    Pairs::new(k1, k2, k3)?;
    let sets = [k1, k2, k3];
    let edges: Vec<Vec<(Point2<T>, Point2<T>)>> = sets.iter().map(|k| k.edges()).collect();
    let mut g = Graph { pts: Vec::new(), edges: Vec::new() };
    for (s, es) in edges.iter().enumerate() {
        let others: Vec<(Point2<T>, Point2<T>)> = edges
            .iter()
            .enumerate()
            .filter(|(t, _)| *t != s)
            .flat_map(|(_, e)| e.iter().cloned())
            .collect();
        for e in es {
            let pts = split_points(e, &others);
            for w in pts.windows(2) {
                let (a, b) = (g.vertex(&w[0]), g.vertex(&w[1]));
                g.add_edge(a, b, 1 << s);
            }
        }
    }
    let mut holes = Vec::new();
    let mut undecided = false;
    for face in faces(&g) {
        let poly: Vec<Point2<T>> = face.iter().map(|&(u, _)| g.pts[u].clone()).collect();
        if !area2(&poly).is_positive() {
            continue;
        }
        match interior_sample(&poly) {
            Some(s) if sets.iter().all(|k| !k.contains(&s)) => holes.push(face),
            Some(_) => {}
            None => undecided = true,
        }
    }
    let face = match holes.len() {
        1 => holes.pop().expect("one hole"),
        0 if undecided => return Err(Error::Degenerate("could not sample a face interior".into())),
        0 => return Err(Error::EmptyHole("complement has no bounded component of positive area".into())),
        _ => return Err(Error::Degenerate("more than one bounded hole".into())),
    };
    let label = |&(u, v): &(usize, usize)| {
        let (a, b) = (u.min(v), u.max(v));
        g.edges.iter().find(|e| e.0 == a && e.1 == b).map(|e| e.2).expect("edge")
    };
    let labels: Vec<u8> = face.iter().map(label).collect();
    if labels.iter().any(|l| l.count_ones() != 1) {
        return Err(Error::Degenerate("boundaries overlap along the hole".into()));
    }
    // rotate so that the face starts at a label change
    let m = face.len();
    let Some(start) = (0..m).find(|&i| labels[i] != labels[(i + m - 1) % m]) else {
        return Err(Error::Degenerate("hole bounded by a single set".into()));
    };
    let mut runs: Vec<(usize, Vec<Point2<T>>)> = Vec::new();
    for t in 0..m {
        let i = (start + t) % m;
        let set = labels[i].trailing_zeros() as usize;
        let (u, v) = face[i];
        match runs.last_mut() {
            Some((s, pts)) if *s == set => pts.push(g.pts[v].clone()),
            _ => runs.push((set, vec![g.pts[u].clone(), g.pts[v].clone()])),
        }
    }
    let mut ids: Vec<usize> = runs.iter().map(|r| r.0).collect();
    ids.sort_unstable();
    if ids != [0, 1, 2] {
        return Err(Error::Degenerate(format!("hole boundary has arc sequence {:?}", runs.iter().map(|r| r.0).collect::<Vec<_>>())));
    }
    let boundary: Vec<Point2<T>> = face.iter().map(|&(u, _)| g.pts[u].clone()).collect();
    let mut arcs: [Vec<Point2<T>>; 3] = Default::default();
    let mut corners: [Option<Point2<T>>; 3] = Default::default();
    for r in 0..3 {
        let (s, pts) = &runs[r];
        let (next, _) = &runs[(r + 1) % 3];
        let end = pts.last().expect("nonempty").clone();
        let slot = match (s.min(next), s.max(next)) {
            (0, 1) => 0,
            (1, 2) => 1,
            _ => 2,
        };
        corners[slot] = Some(end);
        arcs[*s] = pts.clone();
    }
    let corners = corners.map(|c| c.expect("three corners"));
    // orient each arc from the corner with its lower-indexed neighbour
    for (i, arc) in arcs.iter_mut().enumerate() {
        let lower = (0..3).find(|&j| j != i).expect("neighbour");
        let c = match (i.min(lower), i.max(lower)) {
            (0, 1) => &corners[0],
            (1, 2) => &corners[1],
            _ => &corners[2],
        };
        if arc.first() != Some(c) {
            arc.reverse();
        }
    }
    Ok(HoleDescriptor { corners, arcs, boundary })
}
