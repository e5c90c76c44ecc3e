//! Convex polytopes in space with both vertex and halfspace descriptions.

use std::cmp::Ordering;

use crate::kernel::fast;
use crate::kernel::geom::{cross3, dot3, is_zero3};
use crate::kernel::scalar::{cmp, sign, Field};
use crate::kernel::{Point2, Point3};
use crate::poly2::{hull2, ConvexPoly2};

/// Closed halfspace `n·x ≤ d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfSpace3<T> {
    pub n: [T; 3],
    pub d: T,
}

impl<T: Field> HalfSpace3<T> {
    pub fn new(n: [T; 3], d: T) -> Self {
        let mut v = [n[0].clone(), n[1].clone(), n[2].clone(), d];
        // positive rescaling only, to keep the side
        if let Some(s) = v.iter().find(|x| !x.is_zero()).cloned() {
            let s = s.abs();
            for x in v.iter_mut() {
                *x = x.clone() / s.clone();
            }
        }
        let [a, b, c, d] = v;
        HalfSpace3 { n: [a, b, c], d }
    }

    /// `n·p − d`: nonpositive inside.
    pub fn eval(&self, p: &Point3<T>) -> T {
        dot3(&self.n, &p.coords()) - self.d.clone()
    }

    pub fn flip(&self) -> Self {
        HalfSpace3 { n: [-self.n[0].clone(), -self.n[1].clone(), -self.n[2].clone()], d: -self.d.clone() }
    }
}

/// Compact convex polytope; degenerate (flat, segment, point) inputs allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polytope3<T> {
    vertices: Vec<Point3<T>>,
    facets: Vec<HalfSpace3<T>>,
    edges: Vec<(usize, usize)>,
    dim: usize,
}

fn affine_rank<T: Field>(pts: &[Point3<T>]) -> (usize, Vec<[T; 3]>) {
    // greedy basis of difference vectors
    let mut basis: Vec<[T; 3]> = Vec::new();
    for p in &pts[1..] {
        let d = p.sub(&pts[0]);
        let independent = match basis.len() {
            0 => !is_zero3(&d),
            1 => !is_zero3(&cross3(&basis[0], &d)),
            2 => !dot3(&cross3(&basis[0], &basis[1]), &d).is_zero(),
            _ => false,
        };
        if independent {
            basis.push(d);
            if basis.len() == 3 {
                break;
            }
        }
    }
    (basis.len(), basis)
}

/// Index of a coordinate along which a plane with normal `n` projects injectively.
pub(crate) fn drop_axis<T: Field>(n: &[T; 3]) -> usize {
    (0..3).rev().find(|&i| !n[i].is_zero()).expect("nonzero normal")
}

pub(crate) fn project_drop<T: Field>(p: &Point3<T>, axis: usize) -> Point2<T> {
    match axis {
        0 => Point2::new(p.y.clone(), p.z.clone()),
        1 => Point2::new(p.x.clone(), p.z.clone()),
        _ => Point2::new(p.x.clone(), p.y.clone()),
    }
}

impl<T: Field> Polytope3<T> {
    /// Convex hull of a nonempty point set.
    pub fn hull(points: &[Point3<T>]) -> Self {
        assert!(!points.is_empty(), "hull of no points");
        let mut pts = points.to_vec();
        pts.sort_by(|a, b| a.lex_cmp(b));
        pts.dedup();
        let (dim, basis) = affine_rank(&pts);
        match dim {
            0 => Self::point(pts.swap_remove(0)),
            1 => {
                let d = &basis[0];
                let key = |p: &Point3<T>| dot3(d, &p.coords());
                let lo = pts.iter().min_by(|a, b| cmp(&key(a), &key(b))).expect("nonempty").clone();
                let hi = pts.iter().max_by(|a, b| cmp(&key(a), &key(b))).expect("nonempty").clone();
                Self::segment(lo, hi)
            }
            2 => Self::flat(&pts, cross3(&basis[0], &basis[1])),
            _ => Self::solid(&pts),
        }
    }

    fn point(p: Point3<T>) -> Self {
        let mut facets = Vec::new();
        for i in 0..3 {
            let mut n = [T::zero(), T::zero(), T::zero()];
            n[i] = T::one();
            let c = p.coords()[i].clone();
            facets.push(HalfSpace3::new(n.clone(), c.clone()));
            facets.push(HalfSpace3::new(n, c).flip());
        }
        Polytope3 { vertices: vec![p], facets, edges: vec![], dim: 0 }
    }

    fn segment(a: Point3<T>, b: Point3<T>) -> Self {
        let d = b.sub(&a);
        // two independent normals of the supporting line
        let mut normals = Vec::new();
        for e in 0..3 {
            let mut u = [T::zero(), T::zero(), T::zero()];
            u[e] = T::one();
            let n = cross3(&d, &u);
            if !is_zero3(&n) && normals.iter().all(|m: &[T; 3]| !is_zero3(&cross3(m, &n))) {
                normals.push(n);
            }
        }
        let mut facets = Vec::new();
        for n in normals.into_iter().take(2) {
            let c = dot3(&n, &a.coords());
            facets.push(HalfSpace3::new(n.clone(), c.clone()));
            facets.push(HalfSpace3::new(n, c).flip());
        }
        facets.push(HalfSpace3::new(d.clone(), dot3(&d, &b.coords())));
        facets.push(HalfSpace3::new(d.clone(), dot3(&d, &a.coords())).flip());
        let mut vertices = vec![a, b];
        vertices.sort_by(|p, q| p.lex_cmp(q));
        Polytope3 { vertices, facets, edges: vec![(0, 1)], dim: 1 }
    }

    fn flat(pts: &[Point3<T>], normal: [T; 3]) -> Self {
        let axis = drop_axis(&normal);
        let flat: Vec<Point2<T>> = pts.iter().map(|p| project_drop(p, axis)).collect();
        let ring2 = hull2(&flat);
        let ring: Vec<Point3<T>> = ring2
            .iter()
            .map(|q| pts[flat.iter().position(|f| f == q).expect("hull point")].clone())
            .collect();
        let c = dot3(&normal, &ring[0].coords());
        let mut facets = vec![
            HalfSpace3::new(normal.clone(), c.clone()),
            HalfSpace3::new(normal.clone(), c).flip(),
        ];
        let m = ring.len();
        // orient edge normals outward using the ring centroid side
        for i in 0..m {
            let (a, b) = (&ring[i], &ring[(i + 1) % m]);
            let n = cross3(&b.sub(a), &normal);
            let h = HalfSpace3::new(n, dot3(&cross3(&b.sub(a), &normal), &a.coords()));
            let other = &ring[(i + 2) % m];
            facets.push(if h.eval(other).is_positive() { h.flip() } else { h });
        }
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by(|&i, &j| ring[i].lex_cmp(&ring[j]));
        let mut vertices: Vec<Point3<T>> = order.iter().map(|&i| ring[i].clone()).collect();
        vertices.dedup();
        let pos = |p: &Point3<T>| vertices.iter().position(|v| v == p).expect("vertex");
        let edges = (0..m)
            .map(|i| {
                let (a, b) = (pos(&ring[i]), pos(&ring[(i + 1) % m]));
                (a.min(b), a.max(b))
            })
            .collect();
        Polytope3 { vertices, facets, edges, dim: 2 }
    }

    fn solid(pts: &[Point3<T>]) -> Self {
        let refs: Vec<&Point3<T>> = pts.iter().collect();
        let facets = match fast::scaled(&refs) {
            Some((scale, ints)) => solid_facets_int(&ints, &scale),
            None => solid_facets(pts),
        };
        let n = pts.len();
        let on: Vec<Vec<usize>> = pts
            .iter()
            .map(|p| (0..facets.len()).filter(|&f| facets[f].eval(p).is_zero()).collect())
            .collect();
        let is_vertex = |fs: &[usize]| {
            for a in 0..fs.len() {
                for b in a + 1..fs.len() {
                    let ab = cross3(&facets[fs[a]].n, &facets[fs[b]].n);
                    if is_zero3(&ab) {
                        continue;
                    }
                    if fs[b + 1..].iter().any(|&c| !dot3(&ab, &facets[c].n).is_zero()) {
                        return true;
                    }
                }
            }
            false
        };
        let keep: Vec<usize> = (0..n).filter(|&i| is_vertex(&on[i])).collect();
        let vertices: Vec<Point3<T>> = keep.iter().map(|&i| pts[i].clone()).collect();
        let mut edges = Vec::new();
        for a in 0..keep.len() {
            for b in a + 1..keep.len() {
                let shared = on[keep[a]].iter().filter(|f| on[keep[b]].contains(f)).count();
                if shared >= 2 {
                    edges.push((a, b));
                }
            }
        }
        Polytope3 { vertices, facets, edges, dim: 3 }
    }

    pub fn vertices(&self) -> &[Point3<T>] {
        &self.vertices
    }

    /// Halfspaces whose intersection is the polytope (including equality
    /// pairs for flat inputs).
    pub fn facets(&self) -> &[HalfSpace3<T>] {
        &self.facets
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn contains(&self, p: &Point3<T>) -> bool {
        self.facets.iter().all(|h| !h.eval(p).is_positive())
    }

    /// Vertical projection.
    pub fn shadow(&self) -> ConvexPoly2<T> {
        let pts: Vec<Point2<T>> = self.vertices.iter().map(|v| v.xy()).collect();
        ConvexPoly2::hull(&pts).expect("nonempty")
    }

    /// Heights `[lo, hi]` of the vertical line over `(x, y)` inside the polytope.
    pub fn fiber(&self, x: &T, y: &T) -> Option<(T, T)> {
        let mut lo: Option<T> = None;
        let mut hi: Option<T> = None;
        for h in &self.facets {
            let rest = h.n[0].clone() * x.clone() + h.n[1].clone() * y.clone() - h.d.clone();
            let c = &h.n[2];
            if c.is_zero() {
                if rest.is_positive() {
                    return None;
                }
                continue;
            }
            let z = -rest / c.clone();
            if c.is_positive() {
                hi = Some(match hi {
                    Some(v) if v <= z => v,
                    _ => z,
                });
            } else {
                lo = Some(match lo {
                    Some(v) if v >= z => v,
                    _ => z,
                });
            }
        }
        let (lo, hi) = (lo?, hi?);
        (lo <= hi).then_some((lo, hi))
    }

    /// Points spanning `self ∩ h`: inner vertices and edge crossings.
    pub fn clip_points(&self, h: &HalfSpace3<T>) -> Vec<Point3<T>> {
        let vals: Vec<T> = self.vertices.iter().map(|v| h.eval(v)).collect();
        let mut out: Vec<Point3<T>> = self
            .vertices
            .iter()
            .zip(&vals)
            .filter(|(_, v)| !v.is_positive())
            .map(|(p, _)| p.clone())
            .collect();
        for &(a, b) in &self.edges {
            let (fa, fb) = (&vals[a], &vals[b]);
            if (fa.is_negative() && fb.is_positive()) || (fa.is_positive() && fb.is_negative()) {
                let t = fa.clone() / (fa.clone() - fb.clone());
                out.push(self.vertices[a].lerp(&self.vertices[b], &t));
            }
        }
        out
    }

    /// `self ∩ h`, or `None` when empty.
    pub fn clip(&self, h: &HalfSpace3<T>) -> Option<Self> {
        let pts = self.clip_points(h);
        (!pts.is_empty()).then(|| Polytope3::hull(&pts))
    }

    /// Intersection with another polytope.
    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let mut acc = self.clone();
        for h in other.facets() {
            acc = acc.clip(h)?;
        }
        Some(acc)
    }

    /// Points spanning `self ∩ ĥ(shadow)`, the part of the polytope lying over
    /// a planar convex set.
    pub fn over_points(&self, shadow: &ConvexPoly2<T>) -> Vec<Point3<T>> {
        let mut out: Vec<Point3<T>> = self
            .vertices
            .iter()
            .filter(|v| shadow.contains(&v.xy()))
            .cloned()
            .collect();
        // edges against the vertical planes over shadow edges
        let walls: Vec<(Point2<T>, Point2<T>)> = match shadow.dim() {
            0 => vec![],
            _ => shadow.edges(),
        };
        for (p, q) in &walls {
            let (dx, dy) = q.sub(p);
            let f = |v: &Point3<T>| dx.clone() * (v.y.clone() - p.y.clone()) - dy.clone() * (v.x.clone() - p.x.clone());
            for &(a, b) in &self.edges {
                let (va, vb) = (&self.vertices[a], &self.vertices[b]);
                let (fa, fb) = (f(va), f(vb));
                if (fa.is_negative() && fb.is_positive()) || (fa.is_positive() && fb.is_negative()) {
                    let t = fa.clone() / (fa - fb);
                    let x = va.lerp(vb, &t);
                    if shadow.contains(&x.xy()) {
                        out.push(x);
                    }
                }
            }
        }
        // vertical lines over shadow vertices
        for v in shadow.vertices() {
            if let Some((lo, hi)) = self.fiber(&v.x, &v.y) {
                out.push(v.lift(lo.clone()));
                if hi != lo {
                    out.push(v.lift(hi));
                }
            }
        }
        out.sort_by(|a, b| a.lex_cmp(b));
        out.dedup();
        out
    }

    pub fn translate(&self, d: &[T; 3]) -> Self {
        let pts: Vec<Point3<T>> = self.vertices.iter().map(|p| p.offset(d, &T::one())).collect();
        Polytope3::hull(&pts)
    }
}

fn solid_facets<T: Field>(pts: &[Point3<T>]) -> Vec<HalfSpace3<T>> {
    let n = pts.len();
    let mut facets: Vec<HalfSpace3<T>> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let eij = pts[j].sub(&pts[i]);
            for k in j + 1..n {
                let normal = cross3(&eij, &pts[k].sub(&pts[i]));
                if is_zero3(&normal) {
                    continue;
                }
                let h = HalfSpace3::new(normal, T::zero());
                let h = HalfSpace3::new(h.n.clone(), dot3(&h.n, &pts[i].coords()));
                let mut side = Ordering::Equal;
                let mut support = true;
                for p in pts {
                    let s = sign(&h.eval(p));
                    if s == Ordering::Equal {
                        continue;
                    }
                    if side == Ordering::Equal {
                        side = s;
                    } else if s != side {
                        support = false;
                        break;
                    }
                }
                if !support {
                    continue;
                }
                let h = if side == Ordering::Greater { h.flip() } else { h };
                if !facets.contains(&h) {
                    facets.push(h);
                }
            }
        }
    }
    facets
}

/// The same enumeration on integer-scaled points.
fn solid_facets_int<T: Field>(pts: &[fast::I3], scale: &T) -> Vec<HalfSpace3<T>> {
    let n = pts.len();
    let mut keys: Vec<Vec<i128>> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let eij = fast::sub(&pts[j], &pts[i]);
            for k in j + 1..n {
                let normal = fast::cross(&eij, &fast::sub(&pts[k], &pts[i]));
                if normal == [0, 0, 0] {
                    continue;
                }
                let d = fast::dot(&normal, &pts[i]);
                let mut side = Ordering::Equal;
                let mut support = true;
                for p in pts {
                    let s = (fast::dot(&normal, p) - d).cmp(&0);
                    if s == Ordering::Equal {
                        continue;
                    }
                    if side == Ordering::Equal {
                        side = s;
                    } else if s != side {
                        support = false;
                        break;
                    }
                }
                if !support {
                    continue;
                }
                let sgn = if side == Ordering::Greater { -1 } else { 1 };
                let key = fast::primitive(&[normal[0] * sgn, normal[1] * sgn, normal[2] * sgn, d * sgn]);
                if !keys.contains(&key) {
                    keys.push(key);
                }
            }
        }
    }
    keys.into_iter()
        .map(|k| {
            let n = [fast::to_field(k[0]), fast::to_field(k[1]), fast::to_field(k[2])];
            HalfSpace3::new(n, fast::to_field::<T>(k[3]) / scale.clone())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;
    fn p(x: i64, y: i64, z: i64) -> Point3<Q> {
        Point3::new(Q::int(x), Q::int(y), Q::int(z))
    }
    fn cube() -> Vec<Point3<Q>> {
        let mut v = Vec::new();
        for x in [0, 2] {
            for y in [0, 2] {
                for z in [0, 2] {
                    v.push(p(x, y, z));
                }
            }
        }
        v
    }

    #[test]
    fn cube_with_center() {
        let mut pts = cube();
        pts.push(p(1, 1, 1));
        let c = Polytope3::hull(&pts);
        assert_eq!(c.vertices().len(), 8);
        assert_eq!(c.facets().len(), 6);
        assert_eq!(c.edges().len(), 12);
        assert_eq!(c.dim(), 3);
        assert!(c.contains(&p(1, 1, 1)));
        assert!(!c.contains(&p(3, 1, 1)));
        assert_eq!(c.fiber(&Q::int(1), &Q::int(1)), Some((Q::int(0), Q::int(2))));
    }

    #[test]
    fn low_dimensional_hulls() {
        let s = Polytope3::hull(&[p(0, 0, 0), p(1, 1, 1), p(2, 2, 2)]);
        assert_eq!((s.dim(), s.vertices().len()), (1, 2));
        assert!(s.contains(&p(1, 1, 1)) && !s.contains(&p(1, 1, 0)));
        let f = Polytope3::hull(&[p(0, 0, 0), p(2, 0, 0), p(0, 2, 0), p(2, 2, 0), p(1, 1, 0)]);
        assert_eq!((f.dim(), f.vertices().len(), f.edges().len()), (2, 4, 4));
        assert!(f.contains(&p(1, 1, 0)) && !f.contains(&p(1, 1, 1)));
        let o = Polytope3::hull(&[p(3, 3, 3)]);
        assert_eq!(o.dim(), 0);
        assert!(o.contains(&p(3, 3, 3)) && !o.contains(&p(3, 3, 2)));
    }

    #[test]
    fn clipping_a_cube() {
        let c = Polytope3::hull(&cube());
        let h = HalfSpace3::new([Q::int(1), Q::int(1), Q::int(1)], Q::int(1));
        let t = c.clip(&h).unwrap();
        assert_eq!(t.vertices().len(), 4);
        assert_eq!(t.dim(), 3);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(32))]
            #[test]
            fn hull_contains_its_input(pts in proptest::collection::vec((-9i64..9, -9i64..9, -9i64..9), 1..20)) {
                let pts: Vec<Point3<Q>> = pts.into_iter().map(|(x, y, z)| p(x, y, z)).collect();
                let h = Polytope3::hull(&pts);
                for q in &pts {
                    prop_assert!(h.contains(q));
                }
                for v in h.vertices() {
                    prop_assert!(pts.contains(v));
                }
            }

            #[test]
            fn integer_facets_match(pts in proptest::collection::vec((-9i64..9, -9i64..9, -9i64..9, 1i64..5), 4..14)) {
                let pts: Vec<Point3<Q>> = pts
                    .into_iter()
                    .map(|(x, y, z, d)| Point3::new(Q::frac(x, d), Q::frac(y, d + 1), Q::frac(z, d)))
                    .collect();
                let refs: Vec<&Point3<Q>> = pts.iter().collect();
                let (scale, ints) = fast::scaled(&refs).unwrap();
                prop_assert_eq!(solid_facets_int(&ints, &scale), solid_facets(&pts));
            }
        }
    }
}
