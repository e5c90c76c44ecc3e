//! Machine-integer paths for predicates on points with small coordinates.
//!
//! A point set is rescaled by the common denominator of its coordinates; when
//! every scaled coordinate stays below `2^40`, cross products of differences
//! and their dot products with points fit in `i128`.

use super::geom::{Point2, Point3};
use super::scalar::Field;

const BOUND: i128 = 1 << 40;

pub(crate) type I3 = [i128; 3];

/// Common positive scale and the scaled integer coordinates.
pub(crate) fn scaled<T: Field>(pts: &[&Point3<T>]) -> Option<(T, Vec<I3>)> {
    let coords: Vec<T> = pts.iter().flat_map(|p| p.coords()).collect();
    let l = T::common_denominator(&coords)?;
    let ints = pts
        .iter()
        .map(|p| {
            let c = p.coords();
            let mut out = [0i128; 3];
            for a in 0..3 {
                let v = (c[a].clone() * l.clone()).to_small_int()?;
                if v.abs() >= BOUND {
                    return None;
                }
                out[a] = v;
            }
            Some(out)
        })
        .collect::<Option<Vec<I3>>>()?;
    Some((l, ints))
}

pub(crate) fn sub(a: &I3, b: &I3) -> I3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

/// Cross product of two differences of bounded points.
pub(crate) fn cross(a: &I3, b: &I3) -> I3 {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

/// Dot product of a cross product with a bounded point.
pub(crate) fn dot(a: &I3, b: &I3) -> i128 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Divide out the common factor, keeping the sign.
pub(crate) fn primitive(v: &[i128]) -> Vec<i128> {
    let g = v.iter().fold(0, |g, &x| gcd(g, x));
    if g <= 1 {
        return v.to_vec();
    }
    v.iter().map(|x| x / g).collect()
}

/// Direction up to sign: primitive with the first nonzero entry positive.
pub(crate) fn direction_key(v: &I3) -> I3 {
    let p = primitive(v);
    let s = if p.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) { -1 } else { 1 };
    [p[0] * s, p[1] * s, p[2] * s]
}

pub(crate) fn to_field<T: Field>(v: i128) -> T {
    T::from_i128(v).expect("integer fits the field")
}

/// Planar version of [`scaled`].
pub(crate) fn scaled2<T: Field>(pts: &[Point2<T>]) -> Option<Vec<[i128; 2]>> {
    let coords: Vec<T> = pts.iter().flat_map(|p| [p.x.clone(), p.y.clone()]).collect();
    let l = T::common_denominator(&coords)?;
    pts.iter()
        .map(|p| {
            let x = (p.x.clone() * l.clone()).to_small_int().filter(|v| v.abs() < BOUND)?;
            let y = (p.y.clone() * l.clone()).to_small_int().filter(|v| v.abs() < BOUND)?;
            Some([x, y])
        })
        .collect()
}
