//! Families of planar sets: classification, triple orientation and category.

use serde::{Deserialize, Serialize};

use super::polygon::{intersect_all, poly_intersect2, ConvexPoly2};
use crate::error::{Error, Result};
use crate::kernel::predicates::{orient2, Orientation};
use crate::kernel::scalar::{max, min, Field};
use crate::kernel::Point2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FamilyClass {
    NotPairwise,
    Strict2,
    HasTriple,
}

pub fn family_class2<T: Field>(family: &[ConvexPoly2<T>]) -> FamilyClass {
    let n = family.len();
    let mut inter = vec![vec![None; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            match poly_intersect2(&family[i], &family[j]) {
                Some(x) => inter[i][j] = Some(x),
                None => return FamilyClass::NotPairwise,
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let ij = inter[i][j].as_ref().expect("pairwise");
            for k in j + 1..n {
                if poly_intersect2(ij, &family[k]).is_some() {
                    return FamilyClass::HasTriple;
                }
            }
        }
    }
    FamilyClass::Strict2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Category {
    Cap,
    Cup,
    VLeft,
    VRight,
}

/// A pair of positions inside an ordered triple, e.g. `(0, 2)` for `K1∩K3`.
pub type PairIdx = (usize, usize);

/// Structure of a strictly 2-intersecting ordered triple.
#[derive(Clone, Debug, PartialEq)]
pub struct TripleAnalysis<T> {
    pub orientation: Orientation,
    pub category: Category,
    /// Lexicographically smallest points of `K1∩K2`, `K2∩K3`, `K1∩K3`.
    pub witnesses: [Point2<T>; 3],
    /// For vertical categories: the two intersections crossed by the vertical
    /// line, and its abscissa.
    pub crossed: Option<(PairIdx, PairIdx)>,
    pub vline: Option<T>,
}

/// The three pairwise intersections of a triple, checked to be strictly 2-intersecting.
pub(crate) struct Pairs<T> {
    /// `K1∩K2`, `K2∩K3`, `K1∩K3`.
    pub i12: ConvexPoly2<T>,
    pub i23: ConvexPoly2<T>,
    pub i13: ConvexPoly2<T>,
}

impl<T: Field> Pairs<T> {
    pub fn new(k1: &ConvexPoly2<T>, k2: &ConvexPoly2<T>, k3: &ConvexPoly2<T>) -> Result<Self> {
        let i12 = poly_intersect2(k1, k2).ok_or(Error::NotStrict2)?;
        let i23 = poly_intersect2(k2, k3).ok_or(Error::NotStrict2)?;
        let i13 = poly_intersect2(k1, k3).ok_or(Error::NotStrict2)?;
        if poly_intersect2(&i12, k3).is_some() {
            return Err(Error::NotStrict2);
        }
        Ok(Pairs { i12, i23, i13 })
    }

    pub fn get(&self, p: PairIdx) -> &ConvexPoly2<T> {
        match p {
            (0, 1) => &self.i12,
            (1, 2) => &self.i23,
            (0, 2) => &self.i13,
            _ => unreachable!("pair index {p:?}"),
        }
    }
}

/// Orientation of a witness triple, falling back over all vertex choices when
/// the lexicographic witnesses are collinear.
fn orientation_of<T: Field>(pairs: &Pairs<T>) -> Result<Orientation> {
    let o = orient2(pairs.i12.lexmin(), pairs.i23.lexmin(), pairs.i13.lexmin());
    if o != Orientation::Collinear {
        return Ok(o);
    }
    for a in pairs.i12.vertices() {
        for b in pairs.i23.vertices() {
            for c in pairs.i13.vertices() {
                let o = orient2(a, b, c);
                if o != Orientation::Collinear {
                    return Ok(o);
                }
            }
        }
    }
    Err(Error::Degenerate("all witness triples are collinear".into()))
}

pub fn triple_orientation<T: Field>(
    k1: &ConvexPoly2<T>,
    k2: &ConvexPoly2<T>,
    k3: &ConvexPoly2<T>,
) -> Result<Orientation> {
    orientation_of(&Pairs::new(k1, k2, k3)?)
}

fn overlap<T: Field>(a: &(T, T), b: &(T, T)) -> Option<(T, T)> {
    let lo = max(a.0.clone(), b.0.clone());
    let hi = min(a.1.clone(), b.1.clone());
    (lo <= hi).then_some((lo, hi))
}

fn category_of<T: Field>(pairs: &Pairs<T>) -> Result<(Category, Option<(PairIdx, PairIdx)>, Option<T>)> {
    const ORDER: [PairIdx; 3] = [(0, 1), (0, 2), (1, 2)];
    let ranges: Vec<(T, T)> = ORDER.iter().map(|&p| pairs.get(p).x_range()).collect();
    let mut any_overlap = false;
    for (a, b, c) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
        let Some((lo, hi)) = overlap(&ranges[a], &ranges[b]) else {
            continue;
        };
        any_overlap = true;
        let r = &ranges[c];
        if lo < r.0 {
            return Ok((Category::VLeft, Some((ORDER[a], ORDER[b])), Some(lo)));
        }
        if hi > r.1 {
            return Ok((Category::VRight, Some((ORDER[a], ORDER[b])), Some(hi)));
        }
    }
    if any_overlap {
        return Err(Error::Degenerate("no vertical line separates the third intersection".into()));
    }
    let mut w: Vec<(T, &Point2<T>)> = ORDER
        .iter()
        .zip(&ranges)
        .map(|(&p, r)| (r.0.clone(), pairs.get(p).lexmin()))
        .collect();
    w.sort_by(|a, b| crate::kernel::scalar::cmp(&a.0, &b.0));
    match orient2(w[0].1, w[2].1, w[1].1) {
        Orientation::Ccw => Ok((Category::Cap, None, None)),
        Orientation::Cw => Ok((Category::Cup, None, None)),
        Orientation::Collinear => Err(Error::Degenerate("intersections are collinear".into())),
    }
}

pub fn triple_category<T: Field>(
    k1: &ConvexPoly2<T>,
    k2: &ConvexPoly2<T>,
    k3: &ConvexPoly2<T>,
) -> Result<Category> {
    Ok(category_of(&Pairs::new(k1, k2, k3)?)?.0)
}

/// Orientation and category of an ordered triple in one pass.
pub fn analyze_triple<T: Field>(
    k1: &ConvexPoly2<T>,
    k2: &ConvexPoly2<T>,
    k3: &ConvexPoly2<T>,
) -> Result<TripleAnalysis<T>> {
    let pairs = Pairs::new(k1, k2, k3)?;
    let orientation = orientation_of(&pairs)?;
    let (category, crossed, vline) = category_of(&pairs)?;
    Ok(TripleAnalysis {
        orientation,
        category,
        witnesses: [pairs.i12.lexmin().clone(), pairs.i23.lexmin().clone(), pairs.i13.lexmin().clone()],
        crossed,
        vline,
    })
}

/// [`analyze_triple`] from precomputed `K1∩K2`, `K2∩K3`, `K1∩K3` of a
/// strictly 2-intersecting triple.
pub(crate) fn analyze_intersections<T: Field>(
    i12: &ConvexPoly2<T>,
    i23: &ConvexPoly2<T>,
    i13: &ConvexPoly2<T>,
) -> Result<TripleAnalysis<T>> {
    let pairs = Pairs { i12: i12.clone(), i23: i23.clone(), i13: i13.clone() };
    let orientation = orientation_of(&pairs)?;
    let (category, crossed, vline) = category_of(&pairs)?;
    Ok(TripleAnalysis {
        orientation,
        category,
        witnesses: [pairs.i12.lexmin().clone(), pairs.i23.lexmin().clone(), pairs.i13.lexmin().clone()],
        crossed,
        vline,
    })
}

/// Whether the whole family has a common point.
pub fn common_point<T: Field>(family: &[ConvexPoly2<T>]) -> Option<Point2<T>> {
    let refs: Vec<&ConvexPoly2<T>> = family.iter().collect();
    intersect_all(&refs).map(|p| p.lexmin().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;
    fn p(x: i64, y: i64) -> Point2<Q> {
        Point2::new(Q::int(x), Q::int(y))
    }
    fn seg(a: Point2<Q>, b: Point2<Q>) -> ConvexPoly2<Q> {
        ConvexPoly2::segment(a, b)
    }
    pub(crate) fn triangle_sides() -> [ConvexPoly2<Q>; 3] {
        [seg(p(0, 0), p(4, 0)), seg(p(0, 0), p(2, 4)), seg(p(4, 0), p(2, 4))]
    }
    fn square(cx: i64, cy: i64) -> ConvexPoly2<Q> {
        ConvexPoly2::hull(&[p(cx - 1, cy - 1), p(cx + 1, cy - 1), p(cx + 1, cy + 1), p(cx - 1, cy + 1)]).unwrap()
    }

    #[test]
    fn classes() {
        assert_eq!(family_class2(&triangle_sides()), FamilyClass::Strict2);
        assert_eq!(family_class2(&[square(0, 0), square(1, 0), square(0, 1)]), FamilyClass::HasTriple);
        assert_eq!(family_class2(&[square(0, 0), square(5, 5)]), FamilyClass::NotPairwise);
    }

    #[test]
    fn orientation_examples() {
        let [a, b, c] = triangle_sides();
        assert_eq!(triple_orientation(&a, &b, &c).unwrap(), Orientation::Cw);
        assert_eq!(triple_orientation(&b, &a, &c).unwrap(), Orientation::Ccw);
        assert_eq!(
            triple_orientation(&square(0, 0), &square(1, 0), &square(0, 1)),
            Err(Error::NotStrict2)
        );
    }

    #[test]
    fn category_examples() {
        let [a, b, c] = triangle_sides();
        assert_eq!(triple_category(&a, &b, &c).unwrap(), Category::Cap);
        let [a, b, c] = triangle_sides().map(|k| k.reflect_y());
        assert_eq!(triple_category(&a, &b, &c).unwrap(), Category::Cup);
        let ki = seg(p(0, 0), p(0, 2));
        let kj = seg(p(0, 0), p(3, 0));
        let kk = seg(p(0, 2), p(3, 0));
        let t = analyze_triple(&ki, &kj, &kk).unwrap();
        assert_eq!(t.category, Category::VLeft);
        assert_eq!(t.crossed, Some(((0, 1), (0, 2))));
        assert_eq!(t.vline, Some(Q::int(0)));
        let t = analyze_triple(&ki.reflect_x(), &kj.reflect_x(), &kk.reflect_x()).unwrap();
        assert_eq!(t.category, Category::VRight);
    }
}
