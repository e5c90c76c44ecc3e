//! Monotone line sequences and the four-type classification of their triples.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::caps::{is_cap_lines, is_cup_lines, ChainKind};
use crate::error::{Error, Result};
use crate::kernel::geom::dot3;
use crate::kernel::predicates::project_line;
use crate::kernel::scalar::Field;
use crate::kernel::{Line2, Line3, Point3};

use super::frame::{pi_plane, relation, separates_lines, vertical_points, Relation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// `l1 ⪰ l2 ⪰ … ⪰ ln`
    Descending,
    Ascending,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Monotonicity {
    Monotone(ChainKind, Direction),
    /// Projections are neither a cap nor a cup.
    NotChain,
    /// First pair breaking the better of the two directions.
    NotOrdered(usize, usize),
}

/// Projections of a sequence of lines; fails on vertical projections.
pub fn projections<T: Field>(seq: &[Line3<T>]) -> Result<Vec<Line2<T>>> {
    seq.iter().map(project_line).collect()
}

pub fn is_monotone<T: Field>(seq: &[Line3<T>]) -> Result<Monotonicity> {
    if seq.len() < 3 {
        return Err(Error::PreViolated("need at least three lines".into()));
    }
    let proj = projections(seq)?;
    let kind = if is_cap_lines(&proj)? {
        ChainKind::Cap
    } else if is_cup_lines(&proj)? {
        ChainKind::Cup
    } else {
        return Ok(Monotonicity::NotChain);
    };
    let mut bad_desc = Vec::new();
    let mut bad_asc = Vec::new();
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            match relation(&seq[i], &seq[j])? {
                Relation::Above => bad_asc.push((i, j)),
                Relation::Below => bad_desc.push((i, j)),
                Relation::Meet => {}
            }
        }
    }
    Ok(match (bad_desc.first(), bad_asc.first()) {
        (None, _) => Monotonicity::Monotone(kind, Direction::Descending),
        (_, None) => Monotonicity::Monotone(kind, Direction::Ascending),
        (Some(&d), Some(&a)) => {
            let (i, j) = if bad_desc.len() <= bad_asc.len() { d } else { a };
            Monotonicity::NotOrdered(i, j)
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TripleType {
    T1,
    T2,
    T3,
    T4,
}

/// Applicable types of a monotone triple (empty would contradict exhaustiveness).
pub type TripleType3 = BTreeSet<TripleType>;

/// Strict height comparison of `p` against a non-vertical plane.
fn above<T: Field>(p: &Point3<T>, h: &crate::kernel::Plane3<T>) -> std::cmp::Ordering {
    let z = h.z_at(&p.x, &p.y).expect("non-vertical plane");
    p.z.partial_cmp(&z).expect("ordered")
}

pub fn classify_triple3<T: Field>(li: &Line3<T>, lj: &Line3<T>, lk: &Line3<T>) -> Result<TripleType3> {
    let proj = projections(&[li.clone(), lj.clone(), lk.clone()])?;
    if !is_cap_lines(&proj)? {
        return Err(Error::PreViolated("projections do not form a 3-cap".into()));
    }
    for (a, b) in [(li, lj), (lj, lk), (li, lk)] {
        if relation(a, b)? != Relation::Above {
            return Err(Error::PreViolated("lines are not strictly descending".into()));
        }
    }
    let pik = pi_plane(li, lk)?;
    let pki = pi_plane(lk, li)?;
    if dot3(&pik.normal(), &lj.dir).is_zero() {
        return Err(Error::Degenerate("middle line parallel to the prism facets".into()));
    }
    let mut types = TripleType3::new();
    let (pji, _) = vertical_points(lj, li)?;
    if above(&pji, &pki).is_lt() {
        types.insert(TripleType::T1);
    }
    let (pjk, _) = vertical_points(lj, lk)?;
    if above(&pjk, &pik).is_gt() {
        types.insert(TripleType::T2);
    }
    // crossing parameters of lj with the two facet planes
    let hit = |h: &crate::kernel::Plane3<T>| {
        let t = -h.eval(&lj.base) / dot3(&h.normal(), &lj.dir);
        let p = lj.point_at(&t);
        let in_wedge = [&proj[0], &proj[2]].iter().all(|l| p.y <= l.eval(&p.x));
        (t, in_wedge)
    };
    let (t_ik, w_ik) = hit(&pik);
    let (t_ki, w_ki) = hit(&pki);
    if !w_ik && !w_ki {
        // lj runs toward increasing x when its x-component is positive
        let forward = lj.dir[0].is_positive();
        let first_ik = if forward { t_ik < t_ki } else { t_ik > t_ki };
        types.insert(if first_ik { TripleType::T3 } else { TripleType::T4 });
    }
    Ok(types)
}

/// First quadruple `(i, j, k, l)` of distinct indices, in lexicographic
/// order, with `π(lk, ll)` separating `li` and `lj`.
pub fn find_separating_quad<T: Field>(seq: &[Line3<T>]) -> Result<Option<(usize, usize, usize, usize)>> {
    let n = seq.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                for l in 0..n {
                    if k == l || [i, j].contains(&k) || [i, j].contains(&l) {
                        continue;
                    }
                    let h = pi_plane(&seq[k], &seq[l])?;
                    if separates_lines(&h, &seq[i], &seq[j])? {
                        return Ok(Some((i, j, k, l)));
                    }
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::Plane3;
    use num_rational::BigRational;

    type Q = BigRational;
    fn line(b: [i64; 3], d: [i64; 3]) -> Line3<Q> {
        Line3::new(Point3::new(Q::int(b[0]), Q::int(b[1]), Q::int(b[2])), d.map(Q::int)).unwrap()
    }
    fn toy(z2: i64) -> Vec<Line3<Q>> {
        vec![line([0, 0, 2], [1, 1, 0]), line([0, 0, z2], [1, 0, 0]), line([0, 2, 0], [1, -1, 0])]
    }

    #[test]
    fn toy_monotone() {
        assert_eq!(is_monotone(&toy(1)).unwrap(), Monotonicity::Monotone(ChainKind::Cap, Direction::Descending));
        assert_eq!(is_monotone(&toy(3)).unwrap(), Monotonicity::NotOrdered(0, 1));
        let t = toy(1);
        assert!(matches!(classify_triple3(&t[0], &t[1], &t[2]), Err(Error::Degenerate(_))));
    }

    #[test]
    fn toy_separation() {
        let t = toy(1);
        assert!(separates_lines(&Plane3::horizontal(Q::int(1)), &t[0], &t[2]).unwrap());
        assert_eq!(find_separating_quad(&t).unwrap(), None);
    }
}
