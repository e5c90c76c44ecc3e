//! Common tangents of disjoint polygons and of good triples of polytopes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::fast;
use crate::kernel::geom::{cross3, dot3, is_zero3};
use crate::kernel::scalar::Field;
use crate::kernel::{AnyLine3, OrientedPlane3, Plane3, Point2, Point3};
use crate::poly2::{poly_intersect2, ConvexPoly2};

use super::polytope::Polytope3;

/// Oriented planar line `a·x + b·y + c = 0`, positive side where the form is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrientedLine2<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T: Field> OrientedLine2<T> {
    pub fn through(p: &Point2<T>, q: &Point2<T>) -> Option<Self> {
        let (dx, dy) = q.sub(p);
        if dx.is_zero() && dy.is_zero() {
            return None;
        }
        let (a, b) = (-dy, dx);
        let c = -(a.clone() * p.x.clone() + b.clone() * p.y.clone());
        let s = if a.is_zero() { b.abs() } else { a.abs() };
        Some(OrientedLine2 { a: a / s.clone(), b: b / s.clone(), c: c / s })
    }

    pub fn eval(&self, p: &Point2<T>) -> T {
        self.a.clone() * p.x.clone() + self.b.clone() * p.y.clone() + self.c.clone()
    }

    pub fn flip(&self) -> Self {
        OrientedLine2 { a: -self.a.clone(), b: -self.b.clone(), c: -self.c.clone() }
    }
}

/// Tangents found by enumeration; `nongeneric` marks edge or facet contact.
#[derive(Clone, Debug, PartialEq)]
pub struct Tangents<L> {
    pub items: Vec<L>,
    pub nongeneric: bool,
}

fn one_side<T: Field>(vals: &[T]) -> bool {
    vals.iter().all(|v| !v.is_negative()) || vals.iter().all(|v| !v.is_positive())
}

/// All oriented lines tangent to both polygons.
pub fn common_tangent_lines2<T: Field>(p: &ConvexPoly2<T>, q: &ConvexPoly2<T>) -> Result<Tangents<OrientedLine2<T>>> {
    if p.dim() < 2 || q.dim() < 2 {
        return Err(Error::PreViolated("tangents need full-dimensional polygons".into()));
    }
    if poly_intersect2(p, q).is_some() {
        return Err(Error::NotGood);
    }
    let mut lines: Vec<OrientedLine2<T>> = Vec::new();
    let mut nongeneric = false;
    for u in p.vertices() {
        for v in q.vertices() {
            let Some(l) = OrientedLine2::through(u, v) else { continue };
            if lines.contains(&l) || lines.contains(&l.flip()) {
                continue;
            }
            let fp: Vec<T> = p.vertices().iter().map(|x| l.eval(x)).collect();
            let fq: Vec<T> = q.vertices().iter().map(|x| l.eval(x)).collect();
            if one_side(&fp) && one_side(&fq) {
                let touches = |f: &[T]| f.iter().filter(|v| v.is_zero()).count();
                nongeneric |= touches(&fp) > 1 || touches(&fq) > 1;
                lines.push(l);
            }
        }
    }
    let items = lines.iter().flat_map(|l| [l.clone(), l.flip()]).collect();
    Ok(Tangents { items, nongeneric })
}

/// Verdict on whether a line crosses all members of a triple.
#[derive(Clone, Debug, PartialEq)]
pub enum GoodFamilyCert<T> {
    Good,
    NotGood(AnyLine3<T>),
}

/// Parameter interval of `l` inside `c`, or `None`.
pub fn line_polytope_interval<T: Field>(l: &AnyLine3<T>, c: &Polytope3<T>) -> Option<(Option<T>, Option<T>)> {
    let mut lo: Option<T> = None;
    let mut hi: Option<T> = None;
    for h in c.facets() {
        let slope = dot3(&h.n, &l.dir);
        let at0 = h.eval(&l.base);
        if slope.is_zero() {
            if at0.is_positive() {
                return None;
            }
            continue;
        }
        let t = -at0 / slope.clone();
        if slope.is_positive() {
            hi = Some(match hi {
                Some(v) if v <= t => v,
                _ => t,
            });
        } else {
            lo = Some(match lo {
                Some(v) if v >= t => v,
                _ => t,
            });
        }
    }
    match (&lo, &hi) {
        (Some(a), Some(b)) if a > b => None,
        _ => Some((lo, hi)),
    }
}

pub fn line_meets<T: Field>(l: &AnyLine3<T>, c: &Polytope3<T>) -> bool {
    line_polytope_interval(l, c).is_some()
}

fn separated_on<T: Field>(axis: &[T; 3], p: &Polytope3<T>, q: &Polytope3<T>) -> bool {
    let range = |c: &Polytope3<T>| {
        let vals: Vec<T> = c.vertices().iter().map(|v| dot3(axis, &v.coords())).collect();
        let lo = vals.iter().min_by(|a, b| a.partial_cmp(b).expect("ordered")).cloned().expect("vertex");
        let hi = vals.iter().max_by(|a, b| a.partial_cmp(b).expect("ordered")).cloned().expect("vertex");
        (lo, hi)
    };
    let ((a0, a1), (b0, b1)) = (range(p), range(q));
    a1 < b0 || b1 < a0
}

fn edge_dirs<T: Field>(c: &Polytope3<T>) -> Vec<[T; 3]> {
    let v = c.vertices();
    c.edges().iter().map(|&(a, b)| v[b].sub(&v[a])).collect()
}

fn int_axis<T: Field>(n: &[T; 3]) -> Option<fast::I3> {
    let mut v = n.clone();
    T::normalize_projective(&mut v);
    let mut out = [0i128; 3];
    for a in 0..3 {
        out[a] = v[a].to_small_int().filter(|x| x.abs() < 1 << 84)?;
    }
    Some(out)
}

/// Separating-axis test on integer-scaled vertices; `None` when the
/// coordinates are not small.
fn polytopes_meet_int<T: Field>(p: &Polytope3<T>, q: &Polytope3<T>) -> Option<bool> {
    let refs: Vec<&Point3<T>> = p.vertices().iter().chain(q.vertices()).collect();
    let (_, ints) = fast::scaled(&refs)?;
    let (ip, iq) = ints.split_at(p.vertices().len());
    let mut axes: Vec<fast::I3> = Vec::new();
    for h in p.facets().iter().chain(q.facets()) {
        axes.push(fast::direction_key(&int_axis(&h.n)?));
    }
    let dirs = |c: &Polytope3<T>, v: &[fast::I3]| {
        let mut d: Vec<fast::I3> = c.edges().iter().map(|&(a, b)| fast::direction_key(&fast::sub(&v[b], &v[a]))).collect();
        d.sort_unstable();
        d.dedup();
        d
    };
    let (ep, eq) = (dirs(p, ip), dirs(q, iq));
    for u in &ep {
        for v in &eq {
            let axis = fast::cross(u, v);
            if axis != [0, 0, 0] {
                axes.push(fast::direction_key(&axis));
            }
        }
    }
    axes.sort_unstable();
    axes.dedup();
    let range = |axis: &fast::I3, v: &[fast::I3]| {
        let vals = v.iter().map(|x| fast::dot(axis, x));
        (vals.clone().min().expect("vertex"), vals.max().expect("vertex"))
    };
    Some(!axes.iter().any(|a| {
        let ((a0, a1), (b0, b1)) = (range(a, ip), range(a, iq));
        a1 < b0 || b1 < a0
    }))
}

/// Exact disjointness by separating axes: facet normals and edge cross products.
pub fn polytopes_meet<T: Field>(p: &Polytope3<T>, q: &Polytope3<T>) -> bool {
    polytopes_meet_int(p, q).unwrap_or_else(|| polytopes_meet_field(p, q))
}

fn polytopes_meet_field<T: Field>(p: &Polytope3<T>, q: &Polytope3<T>) -> bool {
    for h in p.facets().iter().chain(q.facets()) {
        if separated_on(&h.n, p, q) {
            return false;
        }
    }
    let (ep, eq) = (edge_dirs(p), edge_dirs(q));
    for u in &ep {
        for v in &eq {
            let axis = cross3(u, v);
            if !is_zero3(&axis) && separated_on(&axis, p, q) {
                return false;
            }
        }
    }
    true
}

fn solve3<T: Field>(m: [[T; 3]; 3], r: [T; 3]) -> Option<[T; 3]> {
    // columns m[0..3]
    let det = dot3(&m[0], &cross3(&m[1], &m[2]));
    if det.is_zero() {
        return None;
    }
    Some([
        dot3(&r, &cross3(&m[1], &m[2])) / det.clone(),
        dot3(&m[0], &cross3(&r, &m[2])) / det.clone(),
        dot3(&m[0], &cross3(&m[1], &r)) / det,
    ])
}

/// Convex weights of `x` over four of `pts`.
fn caratheodory<T: Field>(x: &Point3<T>, pts: &[Point3<T>]) -> Option<Vec<(usize, T)>> {
    let n = pts.len();
    for i in 0..n {
        if &pts[i] == x {
            return Some(vec![(i, T::one())]);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    let m = [pts[j].sub(&pts[i]), pts[k].sub(&pts[i]), pts[l].sub(&pts[i])];
                    let Some(mu) = solve3(m, x.sub(&pts[i])) else { continue };
                    let w0 = T::one() - mu[0].clone() - mu[1].clone() - mu[2].clone();
                    if w0.is_negative() || mu.iter().any(|v| v.is_negative()) {
                        continue;
                    }
                    let [m1, m2, m3] = mu;
                    return Some(vec![(i, w0), (j, m1), (k, m2), (l, m3)]);
                }
            }
        }
    }
    None
}

fn weighted<T: Field>(pts: &[Point3<T>], ws: &[(usize, T)], total: &T) -> Point3<T> {
    let mut c = [T::zero(), T::zero(), T::zero()];
    for (i, w) in ws {
        let p = pts[*i].coords();
        for a in 0..3 {
            c[a] = c[a].clone() + p[a].clone() * w.clone() / total.clone();
        }
    }
    Point3::from_coords(c)
}

fn transversal_through_middle<T: Field>(
    a: &Polytope3<T>,
    b: &Polytope3<T>,
    c: &Polytope3<T>,
) -> Option<AnyLine3<T>> {
    let mut pts: Vec<Point3<T>> = a.vertices().to_vec();
    pts.extend(c.vertices().iter().cloned());
    let outer = Polytope3::hull(&pts);
    if !polytopes_meet(b, &outer) {
        return None;
    }
    let x = b.intersect(&outer)?.vertices()[0].clone();
    let ws = caratheodory(&x, &pts)?;
    let na = a.vertices().len();
    let (wa, wc): (Vec<_>, Vec<_>) = ws.into_iter().filter(|(_, w)| !w.is_zero()).partition(|(i, _)| *i < na);
    let sum = |v: &[(usize, T)]| v.iter().fold(T::zero(), |s, (_, w)| s + w.clone());
    let (la, lc) = (sum(&wa), sum(&wc));
    let pa = if la.is_zero() { a.vertices()[0].clone() } else { weighted(&pts, &wa, &la) };
    let pc = if lc.is_zero() { c.vertices()[0].clone() } else { weighted(&pts, &wc, &lc) };
    let line = AnyLine3::through(&pa, &pc)
        .unwrap_or_else(|_| AnyLine3::new(pa, [T::one(), T::zero(), T::zero()]).expect("nonzero direction"));
    [a, b, c].iter().all(|s| line_meets(&line, s)).then_some(line)
}

/// Decides whether some line crosses all three polytopes.
///
/// A line crosses three convex sets exactly when one of them meets the hull of
/// the other two; the witness is built from convex weights of a common point.
pub fn is_good_family3<T: Field>(c1: &Polytope3<T>, c2: &Polytope3<T>, c3: &Polytope3<T>) -> Result<GoodFamilyCert<T>> {
    if [c1, c2, c3].iter().any(|c| c.dim() < 3) {
        return Err(Error::PreViolated("good-family test needs solid polytopes".into()));
    }
    for (a, b, c) in [(c1, c2, c3), (c2, c1, c3), (c1, c3, c2)] {
        if let Some(l) = transversal_through_middle(a, b, c) {
            return Ok(GoodFamilyCert::NotGood(l));
        }
    }
    Ok(GoodFamilyCert::Good)
}

/// All oriented planes tangent to each member of a good triple.
pub fn common_tangent_planes3<T: Field>(
    c1: &Polytope3<T>,
    c2: &Polytope3<T>,
    c3: &Polytope3<T>,
) -> Result<Tangents<OrientedPlane3<T>>> {
    if let GoodFamilyCert::NotGood(_) = is_good_family3(c1, c2, c3)? {
        return Err(Error::NotGood);
    }
    let sets = [c1, c2, c3];
    let mut planes: Vec<Plane3<T>> = Vec::new();
    let mut nongeneric = false;
    for u in c1.vertices() {
        for v in c2.vertices() {
            for w in c3.vertices() {
                let Ok(h) = Plane3::through(u, v, w) else { continue };
                if planes.contains(&h) {
                    continue;
                }
                let mut ok = true;
                let mut contacts = 0usize;
                for s in &sets {
                    let vals: Vec<T> = s.vertices().iter().map(|x| h.eval(x)).collect();
                    if !one_side(&vals) {
                        ok = false;
                        break;
                    }
                    contacts = contacts.max(vals.iter().filter(|x| x.is_zero()).count());
                }
                if ok {
                    nongeneric |= contacts > 1;
                    planes.push(h);
                }
            }
        }
    }
    planes.sort_by(|a, b| a.canon_cmp(b));
    let items = planes
        .into_iter()
        .flat_map(|p| [OrientedPlane3 { plane: p.clone(), flipped: false }, OrientedPlane3 { plane: p, flipped: true }])
        .collect();
    Ok(Tangents { items, nongeneric })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;
    fn pt(x: i64, y: i64) -> Point2<Q> {
        Point2::new(Q::int(x), Q::int(y))
    }
    fn rect(x0: i64, x1: i64) -> ConvexPoly2<Q> {
        ConvexPoly2::hull(&[pt(x0, 0), pt(x1, 0), pt(x0, 1), pt(x1, 1)]).unwrap()
    }
    fn cube(cx: i64, cy: i64, cz: i64) -> Polytope3<Q> {
        let mut v = Vec::new();
        let h = Q::frac(1, 2);
        for dx in [-1, 1] {
            for dy in [-1, 1] {
                for dz in [-1, 1] {
                    v.push(Point3::new(
                        Q::int(cx) + h.clone() * Q::int(dx),
                        Q::int(cy) + h.clone() * Q::int(dy),
                        Q::int(cz) + h.clone() * Q::int(dz),
                    ));
                }
            }
        }
        Polytope3::hull(&v)
    }

    #[test]
    fn squares_have_four_bitangents() {
        let t = common_tangent_lines2(&rect(0, 1), &rect(3, 4)).unwrap();
        assert_eq!(t.items.len(), 8);
        assert!(t.nongeneric);
        let inner = OrientedLine2::through(&pt(1, 0), &pt(3, 1)).unwrap();
        assert!(t.items.contains(&inner));
        assert_eq!(common_tangent_lines2(&rect(0, 2), &rect(1, 3)), Err(Error::NotGood));
    }

    #[test]
    fn collinear_cubes() {
        match is_good_family3(&cube(0, 0, 0), &cube(4, 0, 0), &cube(8, 0, 0)).unwrap() {
            GoodFamilyCert::NotGood(l) => {
                for c in [cube(0, 0, 0), cube(4, 0, 0), cube(8, 0, 0)] {
                    assert!(line_meets(&l, &c));
                }
            }
            GoodFamilyCert::Good => panic!("collinear cubes have a transversal"),
        }
        assert!(common_tangent_planes3(&cube(0, 0, 0), &cube(4, 0, 0), &cube(8, 0, 0)).is_err());
    }

    #[test]
    fn spread_cubes() {
        let (a, b, c) = (cube(0, 0, 0), cube(8, 0, 0), cube(4, 6, 0));
        assert_eq!(is_good_family3(&a, &b, &c).unwrap(), GoodFamilyCert::Good);
        let t = common_tangent_planes3(&a, &b, &c).unwrap();
        for h in &t.items {
            for s in [&a, &b, &c] {
                let vals: Vec<Q> = s.vertices().iter().map(|v| h.eval(v)).collect();
                assert!(vals.iter().any(|v| v == &Q::int(0)));
                assert!(one_side(&vals));
            }
        }
        assert!(t.nongeneric);
    }

    #[test]
    fn separating_axes() {
        assert!(polytopes_meet(&cube(0, 0, 0), &cube(1, 0, 0)));
        assert!(!polytopes_meet(&cube(0, 0, 0), &cube(2, 0, 0)));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn poly(v: Vec<(i64, i64, i64)>, shift: i64, den: i64) -> Polytope3<Q> {
            let pts: Vec<Point3<Q>> =
                v.into_iter().map(|(x, y, z)| Point3::new(Q::frac(x + shift, den), Q::frac(y, den), Q::frac(z, 3))).collect();
            Polytope3::hull(&pts)
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]
            #[test]
            fn integer_separation_matches(
                a in proptest::collection::vec((-6i64..6, -6i64..6, -6i64..6), 1..9),
                b in proptest::collection::vec((-6i64..6, -6i64..6, -6i64..6), 1..9),
                shift in 0i64..14,
                den in 1i64..4,
            ) {
                let (p, q) = (poly(a, 0, 2), poly(b, shift, den));
                prop_assert_eq!(polytopes_meet_int(&p, &q), Some(polytopes_meet_field(&p, &q)));
            }
        }
    }
}
