//! Vertical joins `A∼B` and separation of sets by planes.

use crate::kernel::scalar::Field;
use crate::kernel::{Plane3, Point2, Point3};
use crate::poly2::{poly_intersect2, ConvexPoly2, HalfPlane};

use super::polytope::{HalfSpace3, Polytope3};

/// Points spanning `(A∩ĥB) ∪ (B∩ĥA)`; empty when the shadows are disjoint.
pub fn join_points<T: Field>(a: &Polytope3<T>, b: &Polytope3<T>) -> Vec<Point3<T>> {
    let (sa, sb) = (a.shadow(), b.shadow());
    if poly_intersect2(&sa, &sb).is_none() {
        return vec![];
    }
    let mut pts = a.over_points(&sb);
    pts.extend(b.over_points(&sa));
    pts
}

/// Convex hull of all vertical segments joining `a` and `b`.
pub fn vertical_join<T: Field>(a: &Polytope3<T>, b: &Polytope3<T>) -> Option<Polytope3<T>> {
    let pts = join_points(a, b);
    (!pts.is_empty()).then(|| Polytope3::hull(&pts))
}

/// Whether `h` crosses `a∼b`; `false` when the join is empty.
pub fn separates_sets<T: Field>(h: &Plane3<T>, a: &Polytope3<T>, b: &Polytope3<T>) -> bool {
    let pts = join_points(a, b);
    let lo = pts.iter().any(|p| !h.eval(p).is_positive());
    let hi = pts.iter().any(|p| !h.eval(p).is_negative());
    lo && hi
}

fn halves<T: Field>(h: &Plane3<T>) -> (HalfSpace3<T>, HalfSpace3<T>) {
    let up = HalfSpace3::new(h.normal(), h.coef[3].clone());
    let below = if h.coef[2].is_positive() { up } else { up.flip() };
    (below.clone(), below.flip())
}

fn shadow_of<T: Field>(pts: &[Point3<T>]) -> Option<ConvexPoly2<T>> {
    let flat: Vec<Point2<T>> = pts.iter().map(|p| p.xy()).collect();
    ConvexPoly2::hull(&flat)
}

/// A closed vertical segment `[a, b]` with `a ∈ A`, `b ∈ B` crossed by `h`.
///
/// Decided without the join: for a non-vertical `h` such a segment exists
/// exactly when the shadow of the part of one set on or below `h` meets the
/// shadow of the part of the other set on or above `h`.
pub fn vertical_segment_witness<T: Field>(
    h: &Plane3<T>,
    a: &Polytope3<T>,
    b: &Polytope3<T>,
) -> Option<(Point3<T>, Point3<T>)> {
    let over = |p: &Point2<T>, s: &Polytope3<T>, high: bool| {
        s.fiber(&p.x, &p.y).map(|(lo, hi)| p.lift(if high { hi } else { lo }))
    };
    if h.is_vertical() {
        let common = poly_intersect2(&a.shadow(), &b.shadow())?;
        let [u, v, _, d] = h.coef.clone();
        let on = HalfPlane { a: u, b: v, c: -d };
        let off = HalfPlane { a: -on.a.clone(), b: -on.b.clone(), c: -on.c.clone() };
        let trace = ConvexPoly2::hull(&clip_to(&common, &[on, off]))?;
        let p = trace.lexmin().clone();
        return Some((over(&p, a, false)?, over(&p, b, false)?));
    }
    let (below, above) = halves(h);
    // (lower part of first, upper part of second, first is lower)
    for (lo_set, hi_set, swap) in [(a, b, false), (b, a, true)] {
        let low = shadow_of(&lo_set.clip_points(&below));
        let high = shadow_of(&hi_set.clip_points(&above));
        let (Some(low), Some(high)) = (low, high) else { continue };
        if let Some(common) = poly_intersect2(&low, &high) {
            let p = common.lexmin().clone();
            let bottom = over(&p, lo_set, false)?;
            let top = over(&p, hi_set, true)?;
            return Some(if swap { (top, bottom) } else { (bottom, top) });
        }
    }
    None
}

fn clip_to<T: Field>(poly: &ConvexPoly2<T>, planes: &[HalfPlane<T>]) -> Vec<Point2<T>> {
    let mut pts: Vec<Point2<T>> = poly.vertices().to_vec();
    for hp in planes {
        let n = pts.len();
        let mut next = Vec::new();
        for i in 0..n {
            let (p, q) = (&pts[i], &pts[(i + 1) % n]);
            let (fp, fq) = (hp.eval(p), hp.eval(q));
            if !fp.is_negative() {
                next.push(p.clone());
            }
            if (fp.is_negative() && fq.is_positive()) || (fp.is_positive() && fq.is_negative()) {
                let t = fp.clone() / (fp - fq);
                next.push(p.lerp(q, &t));
            }
        }
        pts = next;
        if pts.is_empty() {
            break;
        }
    }
    pts
}

/// A point of `a ∩ b`: first by overlapping fibers over the common shadow,
/// then by exact clipping.
pub fn common_point3<T: Field>(a: &Polytope3<T>, b: &Polytope3<T>) -> Option<Point3<T>> {
    let common = poly_intersect2(&a.shadow(), &b.shadow())?;
    let mut probes = vec![common.centroid()];
    probes.extend(common.vertices().iter().cloned());
    for p in &probes {
        if let (Some((lo1, hi1)), Some((lo2, hi2))) = (a.fiber(&p.x, &p.y), b.fiber(&p.x, &p.y)) {
            let lo = if lo1 > lo2 { lo1 } else { lo2 };
            let hi = if hi1 < hi2 { hi1 } else { hi2 };
            if lo <= hi {
                let z = (lo + hi) / T::int(2);
                return Some(p.lift(z));
            }
        }
    }
    a.intersect(b).map(|c| c.vertices()[0].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;
    fn p(x: i64, y: i64, z: i64) -> Point3<Q> {
        Point3::new(Q::int(x), Q::int(y), Q::int(z))
    }
    fn square(x0: i64, x1: i64, z: i64) -> Polytope3<Q> {
        Polytope3::hull(&[p(x0, 0, z), p(x1, 0, z), p(x0, 1, z), p(x1, 1, z)])
    }
    fn plane(a: i64, b: i64, c: i64, d: Q) -> Plane3<Q> {
        Plane3::new(Q::int(a), Q::int(b), Q::int(c), d).unwrap()
    }

    #[test]
    fn squares_join_to_cube() {
        let j = vertical_join(&square(0, 1, 0), &square(0, 1, 1)).unwrap();
        assert_eq!(j.vertices().len(), 8);
        assert_eq!(j.dim(), 3);
        let k = vertical_join(&square(0, 1, 1), &square(0, 1, 0)).unwrap();
        assert_eq!(j.vertices(), k.vertices());
    }

    #[test]
    fn points_join_to_segment() {
        let j = vertical_join(&Polytope3::hull(&[p(0, 0, 0)]), &Polytope3::hull(&[p(0, 0, 5)])).unwrap();
        assert_eq!(j.vertices(), &[p(0, 0, 0), p(0, 0, 5)]);
    }

    #[test]
    fn disjoint_shadows() {
        assert!(vertical_join(&square(0, 1, 0), &square(2, 3, 0)).is_none());
        assert!(!separates_sets(&Plane3::horizontal(Q::int(0)), &square(0, 1, 0), &square(2, 3, 0)));
    }

    #[test]
    fn cube_separation() {
        let (a, b) = (square(0, 1, 0), square(0, 1, 1));
        let half = Q::frac(1, 2);
        let mid = Plane3::horizontal(half.clone());
        assert!(separates_sets(&mid, &a, &b));
        let (s, t) = vertical_segment_witness(&mid, &a, &b).unwrap();
        assert_eq!((s.x.clone(), s.y.clone()), (t.x.clone(), t.y.clone()));
        assert!(a.contains(&s) && b.contains(&t));
        let high = Plane3::horizontal(Q::int(2));
        assert!(!separates_sets(&high, &a, &b));
        assert!(vertical_segment_witness(&high, &a, &b).is_none());
        let wall = plane(1, 0, 0, half);
        assert!(separates_sets(&wall, &a, &b));
        let (s, t) = vertical_segment_witness(&wall, &a, &b).unwrap();
        assert!(wall.contains(&s) && wall.contains(&t));
    }
}
