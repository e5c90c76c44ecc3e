//! Realizations: one line per set with pairwise crossing chords.

use super::chains::{is_cap_lines, is_cup_lines, ChainKind};
use crate::kernel::predicates::segments_intersect;
use crate::kernel::scalar::{cmp, Field};
use crate::kernel::{Line2, Point2};
use crate::poly2::ConvexPoly2;

#[derive(Clone, Debug, PartialEq)]
pub struct Realization2<T> {
    pub sets: Vec<ConvexPoly2<T>>,
    pub lines: Vec<Line2<T>>,
    pub kind: ChainKind,
    /// `K_i ∩ ℓ_i`, a segment or a point.
    pub segments: Vec<ConvexPoly2<T>>,
    /// Positions of the sets in the family they were extracted from.
    pub set_ids: Vec<usize>,
}

impl<T: Field> Realization2<T> {
    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealizationFailure {
    EmptySegment(usize),
    NoCross(usize, usize),
    NotChain,
}

/// `K ∩ ℓ` as a segment (or point).
pub fn chord<T: Field>(k: &ConvexPoly2<T>, l: &Line2<T>) -> Option<ConvexPoly2<T>> {
    let mut lo: Option<T> = None;
    let mut hi: Option<T> = None;
    for h in k.halfplanes() {
        // a·x + b·(m·x + q) + c ≥ 0
        let coef = h.a.clone() + h.b.clone() * l.slope.clone();
        let rest = h.b.clone() * l.intercept.clone() + h.c.clone();
        if coef.is_zero() {
            if rest.is_negative() {
                return None;
            }
            continue;
        }
        let x = -rest / coef.clone();
        if coef.is_positive() {
            lo = Some(match lo {
                Some(v) if v >= x => v,
                _ => x,
            });
        } else {
            hi = Some(match hi {
                Some(v) if v <= x => v,
                _ => x,
            });
        }
    }
    let (lo, hi) = (lo?, hi?);
    if lo > hi {
        return None;
    }
    Some(ConvexPoly2::segment(l.point_at(lo), l.point_at(hi)))
}

fn endpoints<T: Field>(s: &ConvexPoly2<T>) -> (Point2<T>, Point2<T>) {
    let v = s.vertices();
    (v[0].clone(), v[v.len() - 1].clone())
}

/// Check a candidate realization: chords nonempty and pairwise crossing,
/// lines forming a cap or cup (short sequences are classified by slope).
pub fn check_realization2<T: Field>(
    sets: &[ConvexPoly2<T>],
    lines: &[Line2<T>],
) -> Result<Realization2<T>, RealizationFailure> {
    assert_eq!(sets.len(), lines.len(), "one line per set");
    let mut segments = Vec::with_capacity(sets.len());
    for (i, (k, l)) in sets.iter().zip(lines).enumerate() {
        segments.push(chord(k, l).ok_or(RealizationFailure::EmptySegment(i))?);
    }
    for i in 0..segments.len() {
        let (a, b) = endpoints(&segments[i]);
        for (j, s) in segments.iter().enumerate().skip(i + 1) {
            let (c, d) = endpoints(s);
            if !segments_intersect(&a, &b, &c, &d) {
                return Err(RealizationFailure::NoCross(i, j));
            }
        }
    }
    let kind = if lines.len() >= 3 {
        if is_cap_lines(lines).unwrap_or(false) {
            ChainKind::Cap
        } else if is_cup_lines(lines).unwrap_or(false) {
            ChainKind::Cup
        } else {
            return Err(RealizationFailure::NotChain);
        }
    } else if lines.len() == 2 && lines[0].slope < lines[1].slope {
        ChainKind::Cup
    } else if lines.len() == 2 && lines[0].slope == lines[1].slope {
        return Err(RealizationFailure::NotChain);
    } else {
        ChainKind::Cap
    };
    Ok(Realization2 {
        sets: sets.to_vec(),
        lines: lines.to_vec(),
        kind,
        segments,
        set_ids: (0..sets.len()).collect(),
    })
}

/// Reorder `(set, line, id)` triples along the slope order that makes a
/// valid chain (decreasing for caps, increasing for cups) and re-check.
pub fn order_and_check<T: Field>(
    mut items: Vec<(ConvexPoly2<T>, Line2<T>, usize)>,
) -> Result<Realization2<T>, RealizationFailure> {
    items.sort_by(|a, b| cmp(&b.1.slope, &a.1.slope));
    let attempt = |items: &[(ConvexPoly2<T>, Line2<T>, usize)]| {
        let sets: Vec<_> = items.iter().map(|t| t.0.clone()).collect();
        let lines: Vec<_> = items.iter().map(|t| t.1.clone()).collect();
        check_realization2(&sets, &lines).map(|mut r| {
            r.set_ids = items.iter().map(|t| t.2).collect();
            r
        })
    };
    match attempt(&items) {
        Ok(r) => Ok(r),
        Err(e) => {
            items.reverse();
            attempt(&items).map_err(|_| e)
        }
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
    fn l(m: i64, c: i64) -> Line2<Q> {
        Line2::new(Q::int(m), Q::int(c))
    }

    #[test]
    fn segments_on_cap_lines() {
        let lines = [l(1, 0), l(0, 0), l(-1, 2)];
        let sets = vec![
            ConvexPoly2::segment(p(-1, -1), p(2, 2)),
            ConvexPoly2::segment(p(-1, 0), p(3, 0)),
            ConvexPoly2::segment(p(0, 2), p(3, -1)),
        ];
        let r = check_realization2(&sets, &lines).unwrap();
        assert_eq!(r.kind, ChainKind::Cap);
        let mut moved = sets.clone();
        moved[1] = ConvexPoly2::segment(p(-1, 1), p(3, 1));
        assert!(matches!(
            check_realization2(&moved, &lines),
            Err(RealizationFailure::EmptySegment(1)) | Err(RealizationFailure::NoCross(_, _))
        ));
    }

    #[test]
    fn chord_of_square() {
        let sq = ConvexPoly2::hull(&[p(0, 0), p(2, 0), p(2, 2), p(0, 2)]).unwrap();
        assert_eq!(chord(&sq, &l(1, 0)), Some(ConvexPoly2::segment(p(0, 0), p(2, 2))));
        assert_eq!(chord(&sq, &l(0, 3)), None);
        assert_eq!(chord(&sq, &l(-1, 0)), Some(ConvexPoly2::point(p(0, 0))));
    }
}
