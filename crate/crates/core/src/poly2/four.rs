//! Checking the four-set crossing lemma on concrete families.

use super::hole::hole_region;
use super::polygon::{poly_intersect2, ConvexPoly2};
use super::triple::{family_class2, triple_orientation, FamilyClass};
use crate::error::{Error, Result};
use crate::kernel::predicates::segments_intersect;
use crate::kernel::scalar::Field;
use crate::kernel::Point2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FourSetsHypothesis {
    /// Ordered triples of the sequence have mixed orientations.
    Orientation,
    /// `Δc` and `Δd` do not share their corner on `∂(Ka ∪ Kb)`.
    SharedVertex,
    /// Neither arc `γc`, `γd` meets `Kc ∩ Kd`.
    ArcMeetsIntersection,
}

#[derive(Clone, Debug, PartialEq)]
pub enum FourSetsOutcome<T> {
    ConclusionHolds,
    /// Hypotheses hold but the segments `v_ac v_bc`, `v_ad v_bd` are disjoint.
    ConclusionFails { seg_c: [Point2<T>; 2], seg_d: [Point2<T>; 2] },
    HypothesisFails(FourSetsHypothesis),
}

/// Whether two intersecting sets can be weakly separated by a line.
pub fn mutually_tangent<T: Field>(p: &ConvexPoly2<T>, q: &ConvexPoly2<T>) -> bool {
    if poly_intersect2(p, q).is_none() {
        return false;
    }
    let mut axes: Vec<(T, T)> = Vec::new();
    for k in [p, q] {
        for (a, b) in k.edges() {
            let (dx, dy) = b.sub(&a);
            axes.push((-dy.clone(), dx.clone()));
            if k.dim() == 1 {
                axes.push((dx, dy));
            }
        }
    }
    let span = |k: &ConvexPoly2<T>, ax: &(T, T)| {
        let vals: Vec<T> = k
            .vertices()
            .iter()
            .map(|v| ax.0.clone() * v.x.clone() + ax.1.clone() * v.y.clone())
            .collect();
        let lo = vals.iter().cloned().fold(vals[0].clone(), crate::kernel::scalar::min);
        let hi = vals.iter().cloned().fold(vals[0].clone(), crate::kernel::scalar::max);
        (lo, hi)
    };
    axes.iter().any(|ax| {
        let (plo, phi) = span(p, ax);
        let (qlo, qhi) = span(q, ax);
        phi == qlo || qhi == plo
    })
}

fn polyline_meets<T: Field>(arc: &[Point2<T>], k: &ConvexPoly2<T>) -> bool {
    arc.windows(2)
        .any(|w| poly_intersect2(&ConvexPoly2::segment(w[0].clone(), w[1].clone()), k).is_some())
}

/// Check the lemma for the sequence `sets` with partition `{a, b} ⊎ {c, d}`
/// (0-based indices, `a < b`).
pub fn check_lemma_4sets<T: Field>(sets: &[ConvexPoly2<T>; 4], a: usize, b: usize) -> Result<FourSetsOutcome<T>> {
    assert!(a < b && b < 4, "partition indices");
    if family_class2(sets) != FamilyClass::Strict2 {
        return Err(Error::NotStrict2);
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if mutually_tangent(&sets[i], &sets[j]) {
                return Err(Error::TangentPair(i, j));
            }
        }
    }
    let triples = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)];
    let mut orients = Vec::new();
    for (i, j, k) in triples {
        orients.push(triple_orientation(&sets[i], &sets[j], &sets[k])?);
    }
    if orients.iter().any(|o| *o != orients[0]) {
        return Ok(FourSetsOutcome::HypothesisFails(FourSetsHypothesis::Orientation));
    }
    let mut rest = (0..4).filter(|&i| i != a && i != b);
    let (c, d) = (rest.next().expect("c"), rest.next().expect("d"));
    let (ka, kb) = (&sets[a], &sets[b]);
    let hc = hole_region(ka, kb, &sets[c])?;
    let hd = hole_region(ka, kb, &sets[d])?;
    // Near a proper crossing v of ∂Ka and ∂Kb only one wedge avoids Ka ∪ Kb,
    // so two holes with the same corner v also overlap next to it.
    if hc.corner(0, 1) != hd.corner(0, 1) {
        return Ok(FourSetsOutcome::HypothesisFails(FourSetsHypothesis::SharedVertex));
    }
    let kcd = poly_intersect2(&sets[c], &sets[d]).ok_or(Error::NotStrict2)?;
    if !polyline_meets(&hc.arcs[2], &kcd) && !polyline_meets(&hd.arcs[2], &kcd) {
        return Ok(FourSetsOutcome::HypothesisFails(FourSetsHypothesis::ArcMeetsIntersection));
    }
    let seg_c = [hc.corner(0, 2).clone(), hc.corner(1, 2).clone()];
    let seg_d = [hd.corner(0, 2).clone(), hd.corner(1, 2).clone()];
    if segments_intersect(&seg_c[0], &seg_c[1], &seg_d[0], &seg_d[1]) {
        Ok(FourSetsOutcome::ConclusionHolds)
    } else {
        Ok(FourSetsOutcome::ConclusionFails { seg_c, seg_d })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;
    fn p(x: i64, y: i64) -> Point2<Q> {
        Point2::new(Q::int(x), Q::int(y))
    }
    fn square(x: i64, y: i64, s: i64) -> ConvexPoly2<Q> {
        ConvexPoly2::hull(&[p(x, y), p(x + s, y), p(x + s, y + s), p(x, y + s)]).unwrap()
    }

    #[test]
    fn tangency() {
        assert!(mutually_tangent(&square(0, 0, 2), &square(2, 0, 2)));
        assert!(mutually_tangent(&square(0, 0, 2), &square(2, 2, 2)));
        assert!(!mutually_tangent(&square(0, 0, 2), &square(1, 1, 2)));
        assert!(!mutually_tangent(&square(0, 0, 2), &square(3, 0, 2)));
    }

    #[test]
    fn common_point_is_rejected() {
        let s = [square(0, 0, 4), square(1, 1, 4), square(2, 0, 4), square(0, 2, 4)];
        assert_eq!(check_lemma_4sets(&s, 0, 1), Err(Error::NotStrict2));
    }
}
