//! Above/below relation of lines, their common vertical and the planes π.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::geom::{cross3, is_zero3};
use crate::kernel::scalar::Field;
use crate::kernel::{Line3, Plane3, Point2, Point3};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Relation {
    Above,
    Below,
    Meet,
}

impl Relation {
    pub fn flip(self) -> Self {
        match self {
            Relation::Above => Relation::Below,
            Relation::Below => Relation::Above,
            Relation::Meet => Relation::Meet,
        }
    }
}

/// Everything attached to an ordered pair of lines with crossing projections.
#[derive(Clone, Debug, PartialEq)]
pub struct LinePairFrame<T> {
    pub l1: Line3<T>,
    pub l2: Line3<T>,
    /// Foot of the common vertical line.
    pub vline: Point2<T>,
    pub p12: Point3<T>,
    pub p21: Point3<T>,
    pub pi12: Plane3<T>,
    pub pi21: Plane3<T>,
    pub relation: Relation,
}

/// Parameters `(t, s)` with `l1(t)* = l2(s)*`.
fn crossing_params<T: Field>(l1: &Line3<T>, l2: &Line3<T>) -> Result<(T, T)> {
    let (d1, d2) = (&l1.dir, &l2.dir);
    let det = d1[0].clone() * d2[1].clone() - d1[1].clone() * d2[0].clone();
    if det.is_zero() {
        return Err(Error::ProjParallel);
    }
    let rx = l2.base.x.clone() - l1.base.x.clone();
    let ry = l2.base.y.clone() - l1.base.y.clone();
    let t = (rx.clone() * d2[1].clone() - ry.clone() * d2[0].clone()) / det.clone();
    let s = (rx * d1[1].clone() - ry * d1[0].clone()) / det;
    Ok((t, s))
}

/// The points `p(l1,l2) ∈ l1` and `p(l2,l1) ∈ l2` on the common vertical.
pub fn vertical_points<T: Field>(l1: &Line3<T>, l2: &Line3<T>) -> Result<(Point3<T>, Point3<T>)> {
    let (t, s) = crossing_params(l1, l2)?;
    Ok((l1.point_at(&t), l2.point_at(&s)))
}

/// `π(l1, l2)`: the plane containing `l1` parallel to `l2`.
pub fn pi_plane<T: Field>(l1: &Line3<T>, l2: &Line3<T>) -> Result<Plane3<T>> {
    let n = cross3(&l1.dir, &l2.dir);
    if is_zero3(&n) {
        return Err(Error::Parallel);
    }
    Plane3::from_normal(n, &l1.base)
}

pub fn relation<T: Field>(l1: &Line3<T>, l2: &Line3<T>) -> Result<Relation> {
    let (p, q) = vertical_points(l1, l2)?;
    Ok(match p.z.partial_cmp(&q.z).expect("ordered") {
        std::cmp::Ordering::Greater => Relation::Above,
        std::cmp::Ordering::Less => Relation::Below,
        std::cmp::Ordering::Equal => Relation::Meet,
    })
}

pub fn pair_frame<T: Field>(l1: &Line3<T>, l2: &Line3<T>) -> Result<LinePairFrame<T>> {
    let (p12, p21) = vertical_points(l1, l2)?;
    let relation = match p12.z.partial_cmp(&p21.z).expect("ordered") {
        std::cmp::Ordering::Greater => Relation::Above,
        std::cmp::Ordering::Less => Relation::Below,
        std::cmp::Ordering::Equal => Relation::Meet,
    };
    Ok(LinePairFrame {
        l1: l1.clone(),
        l2: l2.clone(),
        vline: p12.xy(),
        pi12: pi_plane(l1, l2)?,
        pi21: pi_plane(l2, l1)?,
        p12,
        p21,
        relation,
    })
}

/// Whether `h` meets the closed vertical segment `p(l1,l2) p(l2,l1)`.
pub fn separates_lines<T: Field>(h: &Plane3<T>, l1: &Line3<T>, l2: &Line3<T>) -> Result<bool> {
    let (p, q) = vertical_points(l1, l2)?;
    Ok(crosses_segment(h, &p, &q))
}

pub fn crosses_segment<T: Field>(h: &Plane3<T>, p: &Point3<T>, q: &Point3<T>) -> bool {
    let (a, b) = (h.eval(p), h.eval(q));
    !(a.is_positive() && b.is_positive() || a.is_negative() && b.is_negative())
}

/// Rational rotations of the xy-frame: `(cos, sin)` from Pythagorean triples.
pub fn frame_rotation<T: Field>(k: usize) -> (T, T) {
    const TRIPLES: [(i64, i64, i64); 8] =
        [(1, 0, 1), (3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25), (20, 21, 29), (12, 35, 37), (9, 40, 41)];
    let (a, b, c) = TRIPLES[k % TRIPLES.len()];
    (T::frac(a, c), T::frac(b, c))
}

pub fn rotate_point<T: Field>(p: &Point3<T>, (c, s): &(T, T)) -> Point3<T> {
    Point3::new(
        c.clone() * p.x.clone() - s.clone() * p.y.clone(),
        s.clone() * p.x.clone() + c.clone() * p.y.clone(),
        p.z.clone(),
    )
}

pub fn rotate_line<T: Field>(l: &Line3<T>, r: &(T, T)) -> Line3<T> {
    let d = rotate_point(&Point3::from_coords(l.dir.clone()), r);
    Line3::new(rotate_point(&l.base, r), d.coords()).expect("rotation keeps lines non-vertical")
}

/// Map a plane given in the rotated frame back to the original one.
pub fn unrotate_plane<T: Field>(h: &Plane3<T>, (c, s): &(T, T)) -> Plane3<T> {
    let [a, b, z, d] = h.coef.clone();
    Plane3::new(
        c.clone() * a.clone() + s.clone() * b.clone(),
        c.clone() * b - s.clone() * a,
        z,
        d,
    )
    .expect("rotation keeps normals nonzero")
}

/// First rotation under which no projected line is vertical.
pub fn generic_rotation<T: Field>(lines: &[Line3<T>]) -> Result<(usize, Vec<Line3<T>>)> {
    for k in 0..8 {
        let r = frame_rotation::<T>(k);
        let rotated: Vec<Line3<T>> = lines.iter().map(|l| rotate_line(l, &r)).collect();
        if rotated.iter().all(|l| !l.dir[0].is_zero()) {
            return Ok((k, rotated));
        }
    }
    Err(Error::Degenerate("no frame rotation makes the projections non-vertical".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::Signed;

    type Q = BigRational;
    pub(crate) fn line(b: [i64; 3], d: [i64; 3]) -> Line3<Q> {
        Line3::new(Point3::new(Q::int(b[0]), Q::int(b[1]), Q::int(b[2])), d.map(Q::int)).unwrap()
    }

    #[test]
    fn horizontal_pair() {
        let (l1, l2) = (line([0, 0, 2], [1, 1, 0]), line([0, 0, 1], [1, 0, 0]));
        let f = pair_frame(&l1, &l2).unwrap();
        assert_eq!(f.p12, Point3::new(Q::int(0), Q::int(0), Q::int(2)));
        assert_eq!(f.p21, Point3::new(Q::int(0), Q::int(0), Q::int(1)));
        assert_eq!(f.relation, Relation::Above);
        assert_eq!(f.pi12, Plane3::horizontal(Q::int(2)));
        assert_eq!(f.pi21, Plane3::horizontal(Q::int(1)));
        assert_eq!(relation(&l2, &l1).unwrap(), Relation::Below);
        assert!(separates_lines(&Plane3::horizontal(Q::frac(3, 2)), &l1, &l2).unwrap());
        assert!(!separates_lines(&Plane3::horizontal(Q::int(3)), &l1, &l2).unwrap());
        let wall = Plane3::new(Q::int(1), Q::int(0), Q::int(0), Q::int(0)).unwrap();
        assert!(separates_lines(&wall, &l1, &l2).unwrap());
    }

    #[test]
    fn concurrent_and_parallel() {
        let f = pair_frame(&line([0, 0, 0], [1, 0, 0]), &line([0, 0, 0], [0, 1, 0])).unwrap();
        assert_eq!(f.relation, Relation::Meet);
        assert_eq!(f.p12, f.p21);
        let e = pair_frame(&line([0, 0, 0], [1, 0, 0]), &line([0, 1, 0], [2, 0, 1]));
        assert_eq!(e.unwrap_err(), Error::ProjParallel);
    }

    #[test]
    fn rotation_round_trip() {
        let l = line([0, 1, 2], [0, 1, 3]);
        let (k, rot) = generic_rotation(std::slice::from_ref(&l)).unwrap();
        assert_eq!(k, 1);
        let r = frame_rotation::<Q>(k);
        let h = pi_plane(&rot[0], &line([0, 0, 0], [1, 0, 0])).unwrap();
        let back = unrotate_plane(&h, &r);
        assert!(back.contains(&l.base) && back.contains(&l.point_at(&Q::int(5))));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_line() -> impl Strategy<Value = Line3<Q>> {
            (prop::array::uniform3(-20i64..20), prop::array::uniform3(-9i64..9))
                .prop_filter("non-vertical", |(_, d)| d[0] != 0 || d[1] != 0)
                .prop_map(|(b, d)| line(b, d))
        }

        proptest! {
            #[test]
            fn frame_invariants(l1 in arb_line(), l2 in arb_line(), ts in prop::array::uniform3(-50i64..50)) {
                let Ok(f) = pair_frame(&l1, &l2) else { return Ok(()) };
                let g = pair_frame(&l2, &l1).unwrap();
                prop_assert_eq!(g.relation, f.relation.flip());
                let side: Vec<_> = ts.iter().map(|t| f.pi12.eval(&l2.point_at(&Q::int(*t)))).collect();
                prop_assert!(side.iter().all(|v| v == &side[0]));
                for t in ts {
                    prop_assert!(f.pi12.contains(&l1.point_at(&Q::int(t))));
                }
                // the two planes are parallel, at vertical distance |z(p12) - z(p21)|
                let gap = (f.p12.z.clone() - f.p21.z.clone()).abs();
                for t in ts {
                    let x = Q::int(t);
                    let y = Q::int(t * 3 - 1);
                    let z1 = f.pi12.z_at(&x, &y).unwrap();
                    let z2 = f.pi21.z_at(&x, &y).unwrap();
                    prop_assert_eq!((z1 - z2).abs(), gap.clone());
                }
                let h = Plane3::horizontal(Q::int(ts[0]));
                prop_assert_eq!(separates_lines(&h, &l1, &l2).unwrap(), separates_lines(&h, &l2, &l1).unwrap());
            }
        }
    }
}
