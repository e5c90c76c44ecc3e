//! Deepest points, line crossing counts and stabbing lines within a plane.

use crate::error::{Error, Result};
use crate::kernel::fast;
use crate::kernel::geom::{cross3, dot3, is_zero3};
use crate::kernel::scalar::Field;
use crate::kernel::{AnyLine3, Plane3, Point2, Point3};
use crate::poly2::ConvexPoly2;
use crate::polytope3::polytope::{drop_axis, project_drop};
use crate::polytope3::{line_meets, OrientedLine2, Polytope3};

/// Candidate points where the depth of a polygon family can peak: vertices
/// and crossings of boundary edges.
pub fn depth_candidates<T: Field>(family: &[ConvexPoly2<T>]) -> Vec<Point2<T>> {
    let mut pts: Vec<Point2<T>> = family.iter().flat_map(|p| p.vertices().iter().cloned()).collect();
    let edges: Vec<(Point2<T>, Point2<T>)> = family.iter().flat_map(|p| p.edges()).collect();
    for a in 0..edges.len() {
        for b in a + 1..edges.len() {
            if let Some(x) = segment_crossing(&edges[a], &edges[b]) {
                pts.push(x);
            }
        }
    }
    pts.sort_by(|a, b| a.lex_cmp(b));
    pts.dedup();
    pts
}

fn segment_crossing<T: Field>((p, q): &(Point2<T>, Point2<T>), (r, s): &(Point2<T>, Point2<T>)) -> Option<Point2<T>> {
    let (dx, dy) = q.sub(p);
    let (ex, ey) = s.sub(r);
    let den = dx.clone() * ey.clone() - dy.clone() * ex.clone();
    if den.is_zero() {
        return None;
    }
    let (rx, ry) = r.sub(p);
    let t = (rx.clone() * ey - ry.clone() * ex) / den.clone();
    let u = (rx * dy - ry * dx) / den;
    let unit = |v: &T| !v.is_negative() && v <= &T::one();
    (unit(&t) && unit(&u)).then(|| p.lerp(q, &t))
}

/// Ids of the polygons containing `p`.
pub fn covering<T: Field>(family: &[ConvexPoly2<T>], p: &Point2<T>) -> Vec<usize> {
    (0..family.len()).filter(|&i| family[i].contains(p)).collect()
}

/// A point of maximum depth; ties go to the lexicographically smallest candidate.
pub fn deepest_point2<T: Field>(family: &[ConvexPoly2<T>]) -> Result<(Point2<T>, usize, Vec<usize>)> {
    if family.is_empty() {
        return Err(Error::PreViolated("empty family".into()));
    }
    let mut best: Option<(Point2<T>, Vec<usize>)> = None;
    for p in depth_candidates(family) {
        let ids = covering(family, &p);
        if best.as_ref().is_none_or(|(_, b)| ids.len() > b.len()) {
            best = Some((p, ids));
        }
    }
    let (p, ids) = best.expect("candidates");
    Ok((p, ids.len(), ids))
}

/// Number and ids of polytopes met by a line (tangency counts).
pub fn line_crossing_count3<T: Field>(l: &AnyLine3<T>, family: &[Polytope3<T>]) -> (usize, Vec<usize>) {
    let ids: Vec<usize> = (0..family.len()).filter(|&i| line_meets(l, &family[i])).collect();
    (ids.len(), ids)
}

/// Planar coordinates on a plane by dropping one axis.
#[derive(Clone, Debug)]
pub struct PlaneChart<T> {
    pub plane: Plane3<T>,
    pub axis: usize,
}

impl<T: Field> PlaneChart<T> {
    pub fn new(plane: &Plane3<T>) -> Self {
        PlaneChart { plane: plane.clone(), axis: drop_axis(&plane.normal()) }
    }

    pub fn to2(&self, p: &Point3<T>) -> Point2<T> {
        project_drop(p, self.axis)
    }

    pub fn to3(&self, p: &Point2<T>) -> Point3<T> {
        let n = self.plane.normal();
        let (u, v) = (p.x.clone(), p.y.clone());
        let mut c = match self.axis {
            0 => [T::zero(), u, v],
            1 => [u, T::zero(), v],
            _ => [u, v, T::zero()],
        };
        let rest = dot3(&n, &c);
        c[self.axis] = (self.plane.coef[3].clone() - rest) / n[self.axis].clone();
        Point3::from_coords(c)
    }

    pub fn lift_line(&self, p: &Point2<T>, q: &Point2<T>) -> AnyLine3<T> {
        AnyLine3::through(&self.to3(p), &self.to3(q)).expect("distinct points")
    }

    /// Any line of the plane through `p`.
    pub fn line_through(&self, p: &Point3<T>) -> AnyLine3<T> {
        let n = self.plane.normal();
        let dir = (0..3)
            .map(|e| {
                let mut u = [T::zero(), T::zero(), T::zero()];
                u[e] = T::one();
                cross3(&n, &u)
            })
            .find(|d| !is_zero3(d))
            .expect("nonzero normal");
        AnyLine3::new(p.clone(), dir).expect("nonzero direction")
    }
}

/// `k ∩ h` in the chart of `h`.
pub fn cross_section<T: Field>(k: &Polytope3<T>, chart: &PlaneChart<T>) -> Option<ConvexPoly2<T>> {
    let h = &chart.plane;
    let vals: Vec<T> = k.vertices().iter().map(|v| h.eval(v)).collect();
    let mut pts: Vec<Point2<T>> =
        k.vertices().iter().zip(&vals).filter(|(_, f)| f.is_zero()).map(|(v, _)| chart.to2(v)).collect();
    for &(a, b) in k.edges() {
        let (fa, fb) = (&vals[a], &vals[b]);
        if (fa.is_negative() && fb.is_positive()) || (fa.is_positive() && fb.is_negative()) {
            let t = fa.clone() / (fa.clone() - fb.clone());
            pts.push(chart.to2(&k.vertices()[a].lerp(&k.vertices()[b], &t)));
        }
    }
    ConvexPoly2::hull(&pts)
}

pub fn stabs<T: Field>(l: &OrientedLine2<T>, poly: &ConvexPoly2<T>) -> bool {
    let vals: Vec<T> = poly.vertices().iter().map(|v| l.eval(v)).collect();
    !(vals.iter().all(|v| v.is_positive()) || vals.iter().all(|v| v.is_negative()))
}

fn best_pair<T: Field>(pts: &[Point2<T>], sections: &[(usize, ConvexPoly2<T>)]) -> (usize, usize) {
    let mut best: Option<(usize, usize, usize)> = None;
    for a in 0..pts.len() {
        for b in a + 1..pts.len() {
            let l = OrientedLine2::through(&pts[a], &pts[b]).expect("distinct points");
            let c = sections.iter().filter(|(_, s)| stabs(&l, s)).count();
            if best.is_none_or(|(bc, _, _)| c > bc) {
                best = Some((c, a, b));
            }
        }
    }
    let (_, a, b) = best.expect("two points");
    (a, b)
}

/// [`best_pair`] on integer-scaled points.
fn best_pair_int<T: Field>(pts: &[Point2<T>], ints: &[[i128; 2]], sections: &[(usize, ConvexPoly2<T>)]) -> (usize, usize) {
    let polys: Vec<Vec<[i128; 2]>> = sections
        .iter()
        .map(|(_, s)| {
            s.vertices()
                .iter()
                .map(|v| ints[pts.binary_search_by(|p| p.lex_cmp(v)).expect("section vertex")])
                .collect()
        })
        .collect();
    let mut best: Option<(usize, usize, usize)> = None;
    for a in 0..ints.len() {
        for b in a + 1..ints.len() {
            let (p, q) = (ints[a], ints[b]);
            let (dx, dy) = (q[0] - p[0], q[1] - p[1]);
            let side = |v: &[i128; 2]| (dx * (v[1] - p[1]) - dy * (v[0] - p[0])).signum();
            let c = polys
                .iter()
                .filter(|poly| {
                    let first = side(&poly[0]);
                    first == 0 || poly[1..].iter().any(|v| side(v) != first)
                })
                .count();
            if best.is_none_or(|(bc, _, _)| c > bc) {
                best = Some((c, a, b));
            }
        }
    }
    let (_, a, b) = best.expect("two points");
    (a, b)
}

/// A line within `h` meeting the most polytopes among lines through two
/// cross-section vertices.
pub fn best_line_in_plane<T: Field>(h: &Plane3<T>, family: &[Polytope3<T>]) -> Result<(AnyLine3<T>, usize, Vec<usize>)> {
    let chart = PlaneChart::new(h);
    let sections: Vec<(usize, ConvexPoly2<T>)> =
        family.iter().enumerate().filter_map(|(i, k)| cross_section(k, &chart).map(|s| (i, s))).collect();
    if sections.is_empty() {
        return Err(Error::NoSections);
    }
    let mut pts: Vec<Point2<T>> = sections.iter().flat_map(|(_, s)| s.vertices().iter().cloned()).collect();
    pts.sort_by(|a, b| a.lex_cmp(b));
    pts.dedup();
    if pts.len() == 1 {
        let l = chart.line_through(&chart.to3(&pts[0]));
        let ids: Vec<usize> = sections.iter().map(|(i, _)| *i).collect();
        return Ok((l, ids.len(), ids));
    }
    let (a, b) = match fast::scaled2(&pts) {
        Some(ints) => best_pair_int(&pts, &ints, &sections),
        None => best_pair(&pts, &sections),
    };
    let l2 = OrientedLine2::through(&pts[a], &pts[b]).expect("distinct points");
    let ids: Vec<usize> = sections.iter().filter(|(_, s)| stabs(&l2, s)).map(|(i, _)| *i).collect();
    Ok((chart.lift_line(&pts[a], &pts[b]), ids.len(), ids))
}
