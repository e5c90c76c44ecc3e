//! Primitive geometric values: points, lines and planes.

use std::cmp::Ordering;

use super::scalar::{cmp, Field};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point2<T> {
    pub x: T,
    pub y: T,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point3<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Field> Point2<T> {
    pub fn new(x: T, y: T) -> Self {
        Point2 { x, y }
    }

    pub fn sub(&self, o: &Self) -> (T, T) {
        (self.x.clone() - o.x.clone(), self.y.clone() - o.y.clone())
    }

    /// `self + t·(o − self)`.
    pub fn lerp(&self, o: &Self, t: &T) -> Self {
        Point2 {
            x: self.x.clone() + t.clone() * (o.x.clone() - self.x.clone()),
            y: self.y.clone() + t.clone() * (o.y.clone() - self.y.clone()),
        }
    }

    pub fn midpoint(&self, o: &Self) -> Self {
        self.lerp(o, &T::frac(1, 2))
    }

    pub fn lex_cmp(&self, o: &Self) -> Ordering {
        cmp(&self.x, &o.x).then_with(|| cmp(&self.y, &o.y))
    }

    pub fn lift(&self, z: T) -> Point3<T> {
        Point3::new(self.x.clone(), self.y.clone(), z)
    }
}

impl<T: Field> Point3<T> {
    pub fn new(x: T, y: T, z: T) -> Self {
        Point3 { x, y, z }
    }

    pub fn coords(&self) -> [T; 3] {
        [self.x.clone(), self.y.clone(), self.z.clone()]
    }

    pub fn from_coords(c: [T; 3]) -> Self {
        let [x, y, z] = c;
        Point3 { x, y, z }
    }

    pub fn sub(&self, o: &Self) -> [T; 3] {
        [
            self.x.clone() - o.x.clone(),
            self.y.clone() - o.y.clone(),
            self.z.clone() - o.z.clone(),
        ]
    }

    pub fn offset(&self, d: &[T; 3], t: &T) -> Self {
        Point3 {
            x: self.x.clone() + t.clone() * d[0].clone(),
            y: self.y.clone() + t.clone() * d[1].clone(),
            z: self.z.clone() + t.clone() * d[2].clone(),
        }
    }

    pub fn lerp(&self, o: &Self, t: &T) -> Self {
        self.offset(&o.sub(self), t)
    }

    pub fn xy(&self) -> Point2<T> {
        Point2::new(self.x.clone(), self.y.clone())
    }

    pub fn lex_cmp(&self, o: &Self) -> Ordering {
        cmp(&self.x, &o.x)
            .then_with(|| cmp(&self.y, &o.y))
            .then_with(|| cmp(&self.z, &o.z))
    }
}

pub fn dot3<T: Field>(a: &[T; 3], b: &[T; 3]) -> T {
    a[0].clone() * b[0].clone() + a[1].clone() * b[1].clone() + a[2].clone() * b[2].clone()
}

pub fn cross3<T: Field>(a: &[T; 3], b: &[T; 3]) -> [T; 3] {
    [
        a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
        a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
    ]
}

pub fn is_zero3<T: Field>(a: &[T; 3]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// Non-vertical line `y = slope·x + intercept`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Line2<T> {
    pub slope: T,
    pub intercept: T,
}

impl<T: Field> Line2<T> {
    pub fn new(slope: T, intercept: T) -> Self {
        Line2 { slope, intercept }
    }

    /// Line through two points with distinct x.
    pub fn through(p: &Point2<T>, q: &Point2<T>) -> Result<Self> {
        let dx = q.x.clone() - p.x.clone();
        if dx.is_zero() {
            return Err(Error::Degenerate("vertical line has no slope form".into()));
        }
        let slope = (q.y.clone() - p.y.clone()) / dx;
        let intercept = p.y.clone() - slope.clone() * p.x.clone();
        Ok(Line2 { slope, intercept })
    }

    pub fn eval(&self, x: &T) -> T {
        self.slope.clone() * x.clone() + self.intercept.clone()
    }

    pub fn point_at(&self, x: T) -> Point2<T> {
        let y = self.eval(&x);
        Point2::new(x, y)
    }
}

/// Vertical line `x = const`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VLine2<T> {
    pub x: T,
}

/// Non-vertical line in space, stored canonically.
///
/// `dir` is a primitive integer vector (for exact fields) whose first nonzero
/// entry is positive; `base` is the point with `x = 0` (or `y = 0` when the
/// direction has no x-component).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Line3<T> {
    pub base: Point3<T>,
    pub dir: [T; 3],
}

impl<T: Field> Line3<T> {
    pub fn new(base: Point3<T>, dir: [T; 3]) -> Result<Self> {
        if dir[0].is_zero() && dir[1].is_zero() {
            return Err(Error::Degenerate("vertical or null direction".into()));
        }
        let mut dir = dir;
        T::normalize_projective(&mut dir);
        let t = if !dir[0].is_zero() {
            -base.x.clone() / dir[0].clone()
        } else {
            -base.y.clone() / dir[1].clone()
        };
        let base = base.offset(&dir, &t);
        Ok(Line3 { base, dir })
    }

    pub fn through(p: &Point3<T>, q: &Point3<T>) -> Result<Self> {
        Line3::new(p.clone(), q.sub(p))
    }

    pub fn point_at(&self, t: &T) -> Point3<T> {
        self.base.offset(&self.dir, t)
    }

    pub fn contains(&self, p: &Point3<T>) -> bool {
        is_zero3(&cross3(&p.sub(&self.base), &self.dir))
    }
}

/// A line in space that may be vertical, given by a point and a direction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AnyLine3<T> {
    pub base: Point3<T>,
    pub dir: [T; 3],
}

impl<T: Field> AnyLine3<T> {
    pub fn new(base: Point3<T>, dir: [T; 3]) -> Result<Self> {
        if is_zero3(&dir) {
            return Err(Error::Degenerate("null direction".into()));
        }
        Ok(AnyLine3 { base, dir })
    }

    pub fn through(p: &Point3<T>, q: &Point3<T>) -> Result<Self> {
        AnyLine3::new(p.clone(), q.sub(p))
    }

    pub fn vertical(p: Point2<T>) -> Self {
        AnyLine3 {
            base: p.lift(T::zero()),
            dir: [T::zero(), T::zero(), T::one()],
        }
    }

    pub fn is_vertical(&self) -> bool {
        self.dir[0].is_zero() && self.dir[1].is_zero()
    }

    pub fn point_at(&self, t: &T) -> Point3<T> {
        self.base.offset(&self.dir, t)
    }

    pub fn contains(&self, p: &Point3<T>) -> bool {
        is_zero3(&cross3(&p.sub(&self.base), &self.dir))
    }

    /// Canonical form when the line is not vertical.
    pub fn to_line3(&self) -> Result<Line3<T>> {
        Line3::new(self.base.clone(), self.dir.clone())
    }
}

impl<T: Field> From<Line3<T>> for AnyLine3<T> {
    fn from(l: Line3<T>) -> Self {
        AnyLine3 { base: l.base, dir: l.dir }
    }
}

/// Unoriented plane `a·x + b·y + c·z = d`, stored canonically
/// (primitive integers, `(a, b, c)` lexicographically positive).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Plane3<T> {
    pub coef: [T; 4],
}

impl<T: Field> Plane3<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Result<Self> {
        if a.is_zero() && b.is_zero() && c.is_zero() {
            return Err(Error::Degenerate("plane normal is zero".into()));
        }
        let mut coef = [a, b, c, d];
        T::normalize_projective(&mut coef);
        Ok(Plane3 { coef })
    }

    pub fn from_normal(n: [T; 3], p: &Point3<T>) -> Result<Self> {
        let d = dot3(&n, &p.coords());
        let [a, b, c] = n;
        Plane3::new(a, b, c, d)
    }

    pub fn through(p: &Point3<T>, q: &Point3<T>, r: &Point3<T>) -> Result<Self> {
        let n = cross3(&q.sub(p), &r.sub(p));
        if is_zero3(&n) {
            return Err(Error::Degenerate("collinear points span no plane".into()));
        }
        Plane3::from_normal(n, p)
    }

    /// Horizontal plane `z = h`.
    pub fn horizontal(h: T) -> Self {
        Plane3::new(T::zero(), T::zero(), T::one(), h).expect("nonzero normal")
    }

    pub fn normal(&self) -> [T; 3] {
        [self.coef[0].clone(), self.coef[1].clone(), self.coef[2].clone()]
    }

    /// `a·x + b·y + c·z − d`.
    pub fn eval(&self, p: &Point3<T>) -> T {
        dot3(&self.normal(), &p.coords()) - self.coef[3].clone()
    }

    pub fn is_vertical(&self) -> bool {
        self.coef[2].is_zero()
    }

    /// Height of the plane above `(x, y)`; `None` for vertical planes.
    pub fn z_at(&self, x: &T, y: &T) -> Option<T> {
        if self.is_vertical() {
            return None;
        }
        let [a, b, c, d] = self.coef.clone();
        Some((d - a * x.clone() - b * y.clone()) / c)
    }

    pub fn contains(&self, p: &Point3<T>) -> bool {
        self.eval(p).is_zero()
    }

    pub fn contains_line(&self, l: &AnyLine3<T>) -> bool {
        self.contains(&l.base) && dot3(&self.normal(), &l.dir).is_zero()
    }

    /// Total order on canonical coefficients, used for tie-breaking.
    pub fn canon_cmp(&self, o: &Self) -> Ordering {
        self.coef
            .iter()
            .zip(o.coef.iter())
            .map(|(a, b)| cmp(a, b))
            .find(|c| c.is_ne())
            .unwrap_or(Ordering::Equal)
    }
}

/// A plane with a chosen positive side.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrientedPlane3<T> {
    pub plane: Plane3<T>,
    /// When set, the positive side is where `a·x + b·y + c·z − d < 0`.
    pub flipped: bool,
}

impl<T: Field> OrientedPlane3<T> {
    pub fn eval(&self, p: &Point3<T>) -> T {
        let v = self.plane.eval(p);
        if self.flipped {
            -v
        } else {
            v
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::int(n)
    }

    #[test]
    fn canonical_line3() {
        let a = Line3::new(Point3::new(q(2), q(2), q(4)), [q(-2), q(-2), q(0)]).unwrap();
        let b = Line3::new(Point3::new(q(-1), q(-1), q(4)), [q(3), q(3), q(0)]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.dir, [q(1), q(1), q(0)]);
        assert_eq!(a.base, Point3::new(q(0), q(0), q(4)));
        assert!(Line3::new(Point3::new(q(0), q(0), q(0)), [q(0), q(0), q(1)]).is_err());
    }

    #[test]
    fn canonical_plane3() {
        let a = Plane3::new(q(0), q(0), q(-2), q(-2)).unwrap();
        assert_eq!(a, Plane3::horizontal(q(1)));
        let p = Plane3::through(
            &Point3::new(q(0), q(0), q(1)),
            &Point3::new(q(1), q(0), q(1)),
            &Point3::new(q(0), q(1), q(1)),
        )
        .unwrap();
        assert_eq!(p, a);
        assert_eq!(p.z_at(&q(7), &q(9)), Some(q(1)));
    }
}
