//! Searches for planes separating many pairs of lines.

use serde::{Deserialize, Serialize};

use crate::caps::{longest_cap_or_cup, ChainKind};
use crate::error::{Error, Result};
use crate::kernel::ramsey::monochromatic_subset;
use crate::kernel::scalar::Field;
use crate::kernel::{Line3, Plane3, Point3};

use super::frame::{crosses_segment, generic_rotation, pi_plane, relation, vertical_points, Relation};
use super::monotone::projections;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Candidates {
    PiPlanes,
    PiPlusVertexTriples,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SeparationResult<T> {
    pub plane: Plane3<T>,
    pub count: usize,
    pub pairs: Vec<(usize, usize)>,
}

/// Endpoints of the vertical segment of each pair; meeting pairs are rejected.
pub fn pair_segments<T: Field>(lines: &[Line3<T>], pairs: &[(usize, usize)]) -> Result<Vec<(Point3<T>, Point3<T>)>> {
    pairs
        .iter()
        .map(|&(i, j)| {
            let (p, q) = vertical_points(&lines[i], &lines[j])?;
            if p == q {
                return Err(Error::Degenerate(format!("lines {i} and {j} meet")));
            }
            Ok((p, q))
        })
        .collect()
}

pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Every `π(lk, ll)` over ordered pairs with non-parallel directions.
pub fn pi_candidates<T: Field>(lines: &[Line3<T>]) -> Vec<Plane3<T>> {
    let mut out = Vec::new();
    for k in 0..lines.len() {
        for l in 0..lines.len() {
            if k != l {
                if let Ok(h) = pi_plane(&lines[k], &lines[l]) {
                    out.push(h);
                }
            }
        }
    }
    out
}

fn candidate_planes<T: Field>(
    lines: &[Line3<T>],
    segments: &[(Point3<T>, Point3<T>)],
    candidates: Candidates,
) -> Vec<Plane3<T>> {
    let mut out = pi_candidates(lines);
    if candidates == Candidates::PiPlusVertexTriples {
        let mut verts: Vec<Point3<T>> = segments.iter().flat_map(|(p, q)| [p.clone(), q.clone()]).collect();
        verts.sort_by(|a, b| a.lex_cmp(b));
        verts.dedup();
        for a in 0..verts.len() {
            for b in a + 1..verts.len() {
                for c in b + 1..verts.len() {
                    if let Ok(h) = Plane3::through(&verts[a], &verts[b], &verts[c]) {
                        out.push(h);
                    }
                }
            }
        }
    }
    out.sort_by(|a, b| a.canon_cmp(b));
    out.dedup();
    out
}

/// Indices into `segments` of the pairs separated by `h`.
pub fn separated_pairs<T: Field>(h: &Plane3<T>, segments: &[(Point3<T>, Point3<T>)]) -> Vec<usize> {
    (0..segments.len()).filter(|&s| crosses_segment(h, &segments[s].0, &segments[s].1)).collect()
}

/// A point as a normalized homogeneous vector `[x, y, z, -1]` and the sign
/// lost by normalizing, so that `coef · v` has the sign of the plane equation.
struct Homogeneous<T> {
    v: [T; 4],
    flipped: bool,
}

impl<T: Field> Homogeneous<T> {
    fn new(p: &Point3<T>) -> Self {
        let mut v = [p.x.clone(), p.y.clone(), p.z.clone(), -T::one()];
        T::normalize_projective(&mut v);
        let flipped = v[3].is_positive();
        Homogeneous { v, flipped }
    }

    fn side(&self, coef: &[T; 4]) -> std::cmp::Ordering {
        let s = T::dot_sign(coef, &self.v);
        if self.flipped {
            s.reverse()
        } else {
            s
        }
    }
}

fn crosses_hom<T: Field>(coef: &[T; 4], p: &Homogeneous<T>, q: &Homogeneous<T>) -> bool {
    use std::cmp::Ordering::*;
    !matches!((p.side(coef), q.side(coef)), (Greater, Greater) | (Less, Less))
}

/// Best candidate plane counted over the given pairs only.
pub fn best_separating_plane_pairs<T: Field>(
    lines: &[Line3<T>],
    pairs: &[(usize, usize)],
    candidates: Candidates,
) -> Result<SeparationResult<T>> {
    let segments = pair_segments(lines, pairs)?;
    let planes = candidate_planes(lines, &segments, candidates);
    let hom: Vec<(Homogeneous<T>, Homogeneous<T>)> =
        segments.iter().map(|(p, q)| (Homogeneous::new(p), Homogeneous::new(q))).collect();
    let mut best: Option<(usize, Plane3<T>)> = None;
    for h in planes {
        let c = hom.iter().filter(|(p, q)| crosses_hom(&h.coef, p, q)).count();
        let better = match &best {
            None => true,
            Some((bc, bh)) => c > *bc || (c == *bc && h.canon_cmp(bh).is_lt()),
        };
        if better {
            best = Some((c, h));
        }
    }
    let (count, plane) = best.ok_or_else(|| Error::PreViolated("no candidate planes".into()))?;
    let pairs = separated_pairs(&plane, &segments).into_iter().map(|s| pairs[s]).collect();
    Ok(SeparationResult { plane, count, pairs })
}

/// Best candidate plane over all pairs; ties go to the smallest canonical plane.
pub fn best_separating_plane<T: Field>(lines: &[Line3<T>], candidates: Candidates) -> Result<SeparationResult<T>> {
    best_separating_plane_pairs(lines, &all_pairs(lines.len()), candidates)
}

/// Search on lines in general position, with the monotone structure found on the way.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneralSeparation<T> {
    /// Index of the frame rotation used for the slope order.
    pub rotation: usize,
    pub chain: Vec<usize>,
    pub kind: ChainKind,
    /// Longest part of `chain` ordered by the above/below relation.
    pub monotone: Vec<usize>,
    pub best: SeparationResult<T>,
}

pub fn separate_general<T: Field>(lines: &[Line3<T>], candidates: Candidates, budget: u64) -> Result<GeneralSeparation<T>> {
    let (rotation, rotated) = generic_rotation(lines)?;
    let (chain, kind) = longest_cap_or_cup(&projections(&rotated)?)?;
    let mut monotone = chain.iter().take(2).copied().collect::<Vec<_>>();
    for m in (3..=chain.len()).rev() {
        let color = |idx: &[usize]| relation(&lines[chain[idx[0]]], &lines[chain[idx[1]]]).unwrap_or(Relation::Meet);
        if let Some(sub) = monochromatic_subset(chain.len(), 2, color, m, budget)? {
            monotone = sub.into_iter().map(|s| chain[s]).collect();
            break;
        }
    }
    let best = best_separating_plane(lines, candidates)?;
    Ok(GeneralSeparation { rotation, chain, kind, monotone, best })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;
    fn line(b: [i64; 3], d: [i64; 3]) -> Line3<Q> {
        Line3::new(Point3::new(Q::int(b[0]), Q::int(b[1]), Q::int(b[2])), d.map(Q::int)).unwrap()
    }

    #[test]
    fn toy_triple() {
        let t = vec![line([0, 0, 2], [1, 1, 0]), line([0, 0, 1], [1, 0, 0]), line([0, 2, 0], [1, -1, 0])];
        let r = best_separating_plane(&t, Candidates::PiPlanes).unwrap();
        assert!(r.count >= 1);
        assert_eq!(r.pairs.len(), r.count);
        let wide = best_separating_plane(&t, Candidates::PiPlusVertexTriples).unwrap();
        assert!(wide.count >= r.count);
    }

    #[test]
    fn meeting_pairs_rejected() {
        let t = vec![line([0, 0, 0], [1, 0, 0]), line([0, 0, 0], [0, 1, 0]), line([0, 0, 1], [1, 1, 0])];
        assert!(matches!(best_separating_plane(&t, Candidates::PiPlanes), Err(Error::Degenerate(_))));
    }
}
