//! Convex polygons (possibly segments or points) and exact clipping.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::kernel::predicates::{cross2, on_segment};
use crate::kernel::scalar::{cmp, sign, Field};
use crate::kernel::Point2;

/// Compact convex polygon: CCW vertices in strictly convex position, starting
/// at the lexicographically smallest vertex. One or two vertices encode a
/// point or a segment.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConvexPoly2<T> {
    vertices: Vec<Point2<T>>,
}

/// Closed halfplane `a·x + b·y + c ≥ 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct HalfPlane<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T: Field> HalfPlane<T> {
    /// Points on or left of the directed line `p → q`.
    pub fn left_of(p: &Point2<T>, q: &Point2<T>) -> Self {
        let (dx, dy) = q.sub(p);
        HalfPlane {
            a: -dy.clone(),
            b: dx.clone(),
            c: dy * p.x.clone() - dx * p.y.clone(),
        }
    }

    /// Points whose projection on `p → q` is not behind `p`.
    pub fn ahead_of(p: &Point2<T>, q: &Point2<T>) -> Self {
        let (dx, dy) = q.sub(p);
        HalfPlane {
            a: dx.clone(),
            b: dy.clone(),
            c: -(dx * p.x.clone() + dy * p.y.clone()),
        }
    }

    pub fn eval(&self, p: &Point2<T>) -> T {
        self.a.clone() * p.x.clone() + self.b.clone() * p.y.clone() + self.c.clone()
    }
}

/// Convex hull by the monotone chain, collinear points dropped.
pub fn hull2<T: Field>(points: &[Point2<T>]) -> Vec<Point2<T>> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| a.lex_cmp(b));
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<Point2<T>> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && sign(&cross2(&lower[lower.len() - 2], &lower[lower.len() - 1], p)) != Ordering::Greater {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point2<T>> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && sign(&cross2(&upper[upper.len() - 2], &upper[upper.len() - 1], p)) != Ordering::Greater {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

impl<T: Field> ConvexPoly2<T> {
    /// Convex hull of a point set; `None` for an empty input.
    pub fn hull(points: &[Point2<T>]) -> Option<Self> {
        let vertices = hull2(points);
        (!vertices.is_empty()).then_some(ConvexPoly2 { vertices })
    }

    /// Polygon from a vertex list in convex position, CW or CCW.
    pub fn from_vertices(vertices: Vec<Point2<T>>) -> Result<Self> {
        let hull = hull2(&vertices);
        if hull.is_empty() {
            return Err(Error::Degenerate("empty polygon".into()));
        }
        let n = vertices.len();
        if hull.len() != n {
            return Err(Error::Degenerate("vertices are not in strictly convex position".into()));
        }
        if n >= 3 {
            let start = vertices.iter().position(|v| *v == hull[0]).expect("hull vertex");
            let ccw = (0..n).all(|i| vertices[(start + i) % n] == hull[i]);
            let cw = (0..n).all(|i| vertices[(start + n - i) % n] == hull[i]);
            if !ccw && !cw {
                return Err(Error::Degenerate("vertices are not in boundary order".into()));
            }
        }
        Ok(ConvexPoly2 { vertices: hull })
    }

    pub fn point(p: Point2<T>) -> Self {
        ConvexPoly2 { vertices: vec![p] }
    }

    pub fn segment(a: Point2<T>, b: Point2<T>) -> Self {
        ConvexPoly2::hull(&[a, b]).expect("nonempty")
    }

    pub fn vertices(&self) -> &[Point2<T>] {
        &self.vertices
    }

    /// Intrinsic dimension: 0, 1 or 2.
    pub fn dim(&self) -> usize {
        self.vertices.len().min(3) - 1
    }

    /// The lexicographically smallest vertex.
    pub fn lexmin(&self) -> &Point2<T> {
        &self.vertices[0]
    }

    /// Boundary edges; a segment has one edge and a point none.
    pub fn edges(&self) -> Vec<(Point2<T>, Point2<T>)> {
        let v = &self.vertices;
        match v.len() {
            1 => vec![],
            2 => vec![(v[0].clone(), v[1].clone())],
            n => (0..n).map(|i| (v[i].clone(), v[(i + 1) % n].clone())).collect(),
        }
    }

    /// H-description, including the degenerate cases.
    pub fn halfplanes(&self) -> Vec<HalfPlane<T>> {
        let v = &self.vertices;
        match v.len() {
            1 => {
                let (o, p) = (&v[0], v[0].clone());
                let e1 = Point2::new(p.x.clone() + T::one(), p.y.clone());
                let e2 = Point2::new(p.x.clone(), p.y.clone() + T::one());
                vec![
                    HalfPlane::ahead_of(o, &e1),
                    HalfPlane::ahead_of(o, &e2),
                    HalfPlane::ahead_of(o, &Point2::new(p.x.clone() - T::one(), p.y.clone())),
                    HalfPlane::ahead_of(o, &Point2::new(p.x.clone(), p.y.clone() - T::one())),
                ]
            }
            2 => vec![
                HalfPlane::left_of(&v[0], &v[1]),
                HalfPlane::left_of(&v[1], &v[0]),
                HalfPlane::ahead_of(&v[0], &v[1]),
                HalfPlane::ahead_of(&v[1], &v[0]),
            ],
            n => (0..n).map(|i| HalfPlane::left_of(&v[i], &v[(i + 1) % n])).collect(),
        }
    }

    /// Closed membership.
    pub fn contains(&self, p: &Point2<T>) -> bool {
        match self.vertices.len() {
            1 => self.vertices[0] == *p,
            2 => on_segment(p, &self.vertices[0], &self.vertices[1]),
            _ => self.halfplanes().iter().all(|h| !h.eval(p).is_negative()),
        }
    }

    /// Membership in the interior (always false for segments and points).
    pub fn contains_interior(&self, p: &Point2<T>) -> bool {
        self.vertices.len() >= 3 && self.halfplanes().iter().all(|h| h.eval(p).is_positive())
    }

    pub fn x_range(&self) -> (T, T) {
        let lo = self.vertices[0].x.clone();
        let hi = self
            .vertices
            .iter()
            .map(|v| v.x.clone())
            .fold(lo.clone(), crate::kernel::scalar::max);
        (lo, hi)
    }

    /// Twice the area.
    pub fn area2(&self) -> T {
        let v = &self.vertices;
        let mut s = T::zero();
        for i in 1..v.len().saturating_sub(1) {
            s = s + cross2(&v[0], &v[i], &v[i + 1]);
        }
        s
    }

    /// Image under a coordinate map; orientation is restored by re-hulling.
    pub fn map(&self, f: impl Fn(&Point2<T>) -> Point2<T>) -> Self {
        let pts: Vec<Point2<T>> = self.vertices.iter().map(f).collect();
        ConvexPoly2::hull(&pts).expect("nonempty")
    }

    pub fn reflect_x(&self) -> Self {
        self.map(|p| Point2::new(-p.x.clone(), p.y.clone()))
    }

    pub fn reflect_y(&self) -> Self {
        self.map(|p| Point2::new(p.x.clone(), -p.y.clone()))
    }

    /// A point of the relative interior (the vertex centroid).
    pub fn centroid(&self) -> Point2<T> {
        let n = T::int(self.vertices.len() as i64);
        let (sx, sy) = self
            .vertices
            .iter()
            .fold((T::zero(), T::zero()), |(x, y), p| (x + p.x.clone(), y + p.y.clone()));
        Point2::new(sx / n.clone(), sy / n)
    }
}

/// Clip a cyclic vertex list by a closed halfplane.
fn clip<T: Field>(pts: &[Point2<T>], h: &HalfPlane<T>) -> Vec<Point2<T>> {
    let n = pts.len();
    let vals: Vec<T> = pts.iter().map(|p| h.eval(p)).collect();
    let mut out = Vec::with_capacity(n + 2);
    for i in 0..n {
        let j = (i + 1) % n;
        let (fc, fnx) = (&vals[i], &vals[j]);
        if !fc.is_negative() {
            out.push(pts[i].clone());
        }
        if (fc.is_positive() && fnx.is_negative()) || (fc.is_negative() && fnx.is_positive()) {
            let t = fc.clone() / (fc.clone() - fnx.clone());
            out.push(pts[i].lerp(&pts[j], &t));
        }
    }
    out
}

/// Exact intersection of two compact convex polygons.
pub fn poly_intersect2<T: Field>(p: &ConvexPoly2<T>, q: &ConvexPoly2<T>) -> Option<ConvexPoly2<T>> {
    // quick reject on bounding boxes
    let (plo, phi) = p.x_range();
    let (qlo, qhi) = q.x_range();
    if phi < qlo || qhi < plo {
        return None;
    }
    let mut pts = p.vertices.clone();
    for h in q.halfplanes() {
        pts = clip(&pts, &h);
        if pts.is_empty() {
            return None;
        }
    }
    ConvexPoly2::hull(&pts)
}

/// Intersection of several polygons.
pub fn intersect_all<T: Field>(polys: &[&ConvexPoly2<T>]) -> Option<ConvexPoly2<T>> {
    let mut acc = polys.first().map(|p| (*p).clone())?;
    for p in &polys[1..] {
        acc = poly_intersect2(&acc, p)?;
    }
    Some(acc)
}

/// Lexicographic comparison usable in sorts.
pub fn lex<T: Field>(a: &Point2<T>, b: &Point2<T>) -> Ordering {
    cmp(&a.x, &b.x).then_with(|| cmp(&a.y, &b.y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;
    fn p(x: i64, y: i64) -> Point2<Q> {
        Point2::new(Q::int(x), Q::int(y))
    }
    fn rect(x0: i64, y0: i64, x1: i64, y1: i64) -> ConvexPoly2<Q> {
        ConvexPoly2::from_vertices(vec![p(x0, y0), p(x1, y0), p(x1, y1), p(x0, y1)]).unwrap()
    }

    #[test]
    fn intersect_examples() {
        assert_eq!(poly_intersect2(&rect(0, 0, 2, 2), &rect(1, 1, 3, 3)), Some(rect(1, 1, 2, 2)));
        assert_eq!(poly_intersect2(&rect(0, 0, 1, 1), &rect(2, 0, 3, 1)), None);
        let a = ConvexPoly2::segment(p(0, 0), p(4, 0));
        let b = ConvexPoly2::segment(p(0, 0), p(2, 4));
        assert_eq!(poly_intersect2(&a, &b), Some(ConvexPoly2::point(p(0, 0))));
    }

    #[test]
    fn loading_orders_and_rejects() {
        let cw = ConvexPoly2::from_vertices(vec![p(0, 0), p(0, 1), p(1, 1), p(1, 0)]).unwrap();
        assert_eq!(cw, rect(0, 0, 1, 1));
        assert!(ConvexPoly2::from_vertices(vec![p(0, 0), p(2, 0), p(1, 1), p(2, 2), p(0, 2)]).is_err());
        assert!(ConvexPoly2::from_vertices(vec![p(0, 0), p(1, 1), p(1, 0), p(0, 1)]).is_err());
    }

    #[test]
    fn degenerate_membership() {
        let s = ConvexPoly2::segment(p(0, 0), p(2, 2));
        assert!(s.contains(&p(1, 1)));
        assert!(!s.contains(&p(3, 3)));
        assert_eq!(s.dim(), 1);
        let r = rect(0, 0, 2, 2);
        assert_eq!(poly_intersect2(&r, &s), Some(s.clone()));
        assert_eq!(poly_intersect2(&s, &r), Some(s));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn poly() -> impl Strategy<Value = ConvexPoly2<Q>> {
            proptest::collection::vec((-12i64..12, -12i64..12), 1..7)
                .prop_map(|v| ConvexPoly2::hull(&v.into_iter().map(|(x, y)| p(x, y)).collect::<Vec<_>>()).unwrap())
        }

        proptest! {
            #[test]
            fn intersection_is_contained_and_symmetric(a in poly(), b in poly()) {
                let ab = poly_intersect2(&a, &b);
                let ba = poly_intersect2(&b, &a);
                prop_assert_eq!(&ab, &ba);
                if let Some(i) = ab {
                    for v in i.vertices() {
                        prop_assert!(a.contains(v) && b.contains(v));
                    }
                } else {
                    // no vertex of one lies in the other
                    prop_assert!(a.vertices().iter().all(|v| !b.contains(v)));
                }
            }
        }
    }
}
