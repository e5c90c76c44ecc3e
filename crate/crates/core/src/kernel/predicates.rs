//! Exact orientation and side predicates.

use std::cmp::Ordering;

use super::geom::{Line2, Line3, Plane3, Point2, Point3};
use super::scalar::{sign, Field};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Cw,
    Ccw,
    Collinear,
}

impl Orientation {
    pub fn flip(self) -> Self {
        match self {
            Orientation::Cw => Orientation::Ccw,
            Orientation::Ccw => Orientation::Cw,
            Orientation::Collinear => Orientation::Collinear,
        }
    }

    fn from_sign(s: Ordering) -> Self {
        match s {
            Ordering::Greater => Orientation::Ccw,
            Ordering::Less => Orientation::Cw,
            Ordering::Equal => Orientation::Collinear,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Neg,
    On,
    Pos,
}

impl Side {
    pub fn from_sign(s: Ordering) -> Self {
        match s {
            Ordering::Greater => Side::Pos,
            Ordering::Less => Side::Neg,
            Ordering::Equal => Side::On,
        }
    }
}

/// Twice the signed area of `pqr`.
pub fn cross2<T: Field>(p: &Point2<T>, q: &Point2<T>, r: &Point2<T>) -> T {
    let (ux, uy) = q.sub(p);
    let (vx, vy) = r.sub(p);
    ux * vy - uy * vx
}

pub fn orient2<T: Field>(p: &Point2<T>, q: &Point2<T>, r: &Point2<T>) -> Orientation {
    Orientation::from_sign(sign(&cross2(p, q, r)))
}

pub fn line2_intersect<T: Field>(l1: &Line2<T>, l2: &Line2<T>) -> Result<Point2<T>> {
    let ds = l1.slope.clone() - l2.slope.clone();
    if ds.is_zero() {
        return Err(Error::Parallel);
    }
    let x = (l2.intercept.clone() - l1.intercept.clone()) / ds;
    Ok(l1.point_at(x))
}

pub fn side_of_line<T: Field>(p: &Point2<T>, l: &Line2<T>) -> Side {
    Side::from_sign(sign(&(p.y.clone() - l.eval(&p.x))))
}

pub fn side_of_plane<T: Field>(p: &Point3<T>, h: &Plane3<T>) -> Side {
    Side::from_sign(sign(&h.eval(p)))
}

pub fn project<T: Field>(p: &Point3<T>) -> Point2<T> {
    p.xy()
}

pub fn project_line<T: Field>(l: &Line3<T>) -> Result<Line2<T>> {
    if l.dir[0].is_zero() {
        return Err(Error::Degenerate("projected line is vertical".into()));
    }
    let slope = l.dir[1].clone() / l.dir[0].clone();
    let intercept = l.base.y.clone() - slope.clone() * l.base.x.clone();
    Ok(Line2::new(slope, intercept))
}

/// Whether `p` lies on the closed segment `ab`.
pub fn on_segment<T: Field>(p: &Point2<T>, a: &Point2<T>, b: &Point2<T>) -> bool {
    cross2(a, b, p).is_zero()
        && p.x >= super::scalar::min(a.x.clone(), b.x.clone())
        && p.x <= super::scalar::max(a.x.clone(), b.x.clone())
        && p.y >= super::scalar::min(a.y.clone(), b.y.clone())
        && p.y <= super::scalar::max(a.y.clone(), b.y.clone())
}

/// Whether the closed segments `ab` and `cd` share a point.
pub fn segments_intersect<T: Field>(a: &Point2<T>, b: &Point2<T>, c: &Point2<T>, d: &Point2<T>) -> bool {
    let d1 = sign(&cross2(a, b, c));
    let d2 = sign(&cross2(a, b, d));
    let d3 = sign(&cross2(c, d, a));
    let d4 = sign(&cross2(c, d, b));
    if d1 != d2 && d1 != Ordering::Equal && d2 != Ordering::Equal
        && d3 != d4 && d3 != Ordering::Equal && d4 != Ordering::Equal
    {
        return true;
    }
    on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) || on_segment(b, c, d)
}

/// Intersection point of the supporting lines of `ab` and `cd`.
pub fn line_through_intersect<T: Field>(
    a: &Point2<T>,
    b: &Point2<T>,
    c: &Point2<T>,
    d: &Point2<T>,
) -> Option<Point2<T>> {
    let (ux, uy) = b.sub(a);
    let (vx, vy) = d.sub(c);
    let den = ux.clone() * vy.clone() - uy.clone() * vx.clone();
    if den.is_zero() {
        return None;
    }
    let (wx, wy) = c.sub(a);
    let t = (wx * vy - wy * vx) / den;
    Some(a.lerp(b, &t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::geom::Line3;
    use num_rational::BigRational;

    type Q = BigRational;
    fn q(n: i64) -> Q {
        Q::int(n)
    }
    fn p2(x: i64, y: i64) -> Point2<Q> {
        Point2::new(q(x), q(y))
    }

    #[test]
    fn orient2_examples() {
        assert_eq!(orient2(&p2(0, 0), &p2(1, 0), &p2(0, 1)), Orientation::Ccw);
        assert_eq!(orient2(&p2(0, 0), &p2(1, 1), &p2(2, 2)), Orientation::Collinear);
        assert_eq!(orient2(&p2(0, 0), &p2(0, 1), &p2(1, 0)), Orientation::Cw);
    }

    #[test]
    fn line2_intersect_examples() {
        let l = |m, c| Line2::new(q(m), q(c));
        assert_eq!(line2_intersect(&l(1, 0), &l(0, 0)).unwrap(), p2(0, 0));
        assert_eq!(line2_intersect(&l(1, 1), &l(1, 0)), Err(Error::Parallel));
        assert_eq!(line2_intersect(&l(2, 0), &l(-1, 3)).unwrap(), p2(1, 2));
    }

    #[test]
    fn side_examples() {
        assert_eq!(side_of_line(&p2(0, 1), &Line2::new(q(0), q(0))), Side::Pos);
        assert_eq!(side_of_line(&p2(5, 5), &Line2::new(q(1), q(0))), Side::On);
        assert_eq!(side_of_line(&p2(0, -1), &Line2::new(q(0), q(0))), Side::Neg);
        let h = Plane3::horizontal(q(1));
        assert_eq!(side_of_plane(&Point3::new(q(0), q(0), q(2)), &h), Side::Pos);
        assert_eq!(side_of_plane(&Point3::new(q(3), q(4), q(1)), &h), Side::On);
        assert_eq!(side_of_plane(&Point3::new(q(0), q(0), q(0)), &h), Side::Neg);
    }

    #[test]
    fn projection_examples() {
        assert_eq!(project(&Point3::new(q(1), q(2), q(3))), p2(1, 2));
        let l = Line3::new(Point3::new(q(0), q(0), q(5)), [q(1), q(1), q(0)]).unwrap();
        assert_eq!(project_line(&l).unwrap(), Line2::new(q(1), q(0)));
        let v = Line3::new(Point3::new(q(0), q(0), q(0)), [q(0), q(1), q(1)]).unwrap();
        assert!(matches!(project_line(&v), Err(Error::Degenerate(_))));
    }

    #[test]
    fn floats_share_the_predicates() {
        let p = Point2::new(0.0f64, 0.0);
        let r = Point2::new(0.0f64, 1.0);
        assert_eq!(orient2(&p, &Point2::new(1.0, 0.0), &r), Orientation::Ccw);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn pt() -> impl Strategy<Value = Point2<Q>> {
            (-50i64..50, -50i64..50, 1i64..7, 1i64..7)
                .prop_map(|(x, y, a, b)| Point2::new(Q::frac(x, a), Q::frac(y, b)))
        }

        proptest! {
            #[test]
            fn orient2_antisymmetric(p in pt(), q in pt(), r in pt()) {
                prop_assert_eq!(orient2(&p, &q, &r), orient2(&p, &r, &q).flip());
            }

            #[test]
            fn intersection_symmetric_and_incident(
                m1 in -20i64..20, c1 in -20i64..20, m2 in -20i64..20, c2 in -20i64..20, d in 1i64..5
            ) {
                let a = Line2::new(Q::frac(m1, d), Q::int(c1));
                let b = Line2::new(Q::frac(m2, d), Q::int(c2));
                match (line2_intersect(&a, &b), line2_intersect(&b, &a)) {
                    (Ok(p), Ok(r)) => {
                        prop_assert_eq!(&p, &r);
                        prop_assert_eq!(side_of_line(&p, &a), Side::On);
                        prop_assert_eq!(side_of_line(&p, &b), Side::On);
                    }
                    (Err(e1), Err(e2)) => prop_assert_eq!(e1, e2),
                    _ => prop_assert!(false, "asymmetric result"),
                }
            }

            #[test]
            fn scalar_string_roundtrip(n in any::<i64>(), d in 1i64..i64::MAX) {
                let x = Q::frac(n, d);
                prop_assert_eq!(crate::kernel::scalar::parse_rational(&x.to_string()), Some(x));
            }

            #[test]
            fn scalar_field_laws(a in pt(), b in pt()) {
                let (x, y, z) = (a.x, a.y, b.x);
                prop_assert_eq!((x.clone() + y.clone()) + z.clone(), x.clone() + (y.clone() + z.clone()));
                prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
                prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x * (y * z));
            }
        }
    }
}
