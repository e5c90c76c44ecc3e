//! A line within a separating plane that crosses three sets.

use crate::error::{Error, Result};
use crate::kernel::geom::dot3;
use crate::kernel::predicates::segments_intersect;
use crate::kernel::scalar::Field;
use crate::kernel::{Line3, Plane3, Point2, Point3};
use crate::lines3::vertical_points;
use crate::poly2::{family_class2, FamilyClass};
use crate::polytope3::{common_point3, line_polytope_interval, separates_sets, vertical_segment_witness, Polytope3};

use super::stab::line_crossing_count3;

/// Objects attached to one separated pair `{K_i, K_j}`.
#[derive(Clone, Debug, PartialEq)]
pub struct PairTrace<T> {
    pub i: usize,
    pub j: usize,
    /// `y ∈ K_i ∩ K_j`
    pub y: Point3<T>,
    /// Vertical segment `ab`, `a ∈ K_i`, `b ∈ K_j`, crossed by the plane at `x`.
    pub a: Point3<T>,
    pub b: Point3<T>,
    pub x: Point3<T>,
    /// Where the path `a → y → b` crosses the plane.
    pub w: Point3<T>,
    pub w_in_i: bool,
    pub w_in_j: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Lemma3setsTrace<T> {
    /// The separated pairs `Π`.
    pub separated: Vec<PairTrace<T>>,
    /// Vertical projections of the realizing lines onto the plane.
    pub lprime: Vec<Line3<T>>,
    /// `V_i`, as the partners `j` of the vertices `v_{i,j}`.
    pub v_sets: Vec<Vec<usize>>,
    /// Partners `(a_i, b_i)` at the ends of the open interval `I_i`.
    pub intervals: Vec<Option<(usize, usize)>>,
    /// Index `h` of the chosen line.
    pub h: usize,
    /// The `i` whose interval `I_i` is crossed by `ℓ'_h` at `v_{i,h}`.
    pub crossed_intervals: Vec<usize>,
}

impl<T: Field> Lemma3setsTrace<T> {
    /// `v_{i,j} = ℓ'_i ∩ ℓ'_j`.
    pub fn v(&self, i: usize, j: usize) -> Point3<T> {
        vertical_points(&self.lprime[i], &self.lprime[j]).expect("crossing projections").0
    }

    /// `W_i`: crossing points of separated pairs lying in `K_i`.
    pub fn w_set(&self, i: usize) -> Vec<&Point3<T>> {
        self.separated
            .iter()
            .filter(|p| (p.i == i && p.w_in_i) || (p.j == i && p.w_in_j))
            .map(|p| &p.w)
            .collect()
    }
}

/// Vertical projection of `l` onto a non-vertical plane.
pub fn project_onto<T: Field>(l: &Line3<T>, pi: &Plane3<T>) -> Line3<T> {
    let z = pi.z_at(&l.base.x, &l.base.y).expect("non-vertical plane");
    let [a, b, c, _] = pi.coef.clone();
    let dz = -(a * l.dir[0].clone() + b * l.dir[1].clone()) / c;
    Line3::new(Point3::new(l.base.x.clone(), l.base.y.clone(), z), [l.dir[0].clone(), l.dir[1].clone(), dz])
        .expect("non-vertical line")
}

/// Check that `lines` realize `sets`: every line meets its set and the
/// projected chords cross pairwise.
pub fn check_realization3<T: Field>(sets: &[Polytope3<T>], lines: &[Line3<T>]) -> Result<Vec<(Point2<T>, Point2<T>)>> {
    if sets.len() != lines.len() {
        return Err(Error::PreViolated("one line per set".into()));
    }
    let mut chords = Vec::with_capacity(sets.len());
    for (i, (k, l)) in sets.iter().zip(lines).enumerate() {
        let any = l.clone().into();
        match line_polytope_interval(&any, k) {
            Some((Some(lo), Some(hi))) => chords.push((l.point_at(&lo).xy(), l.point_at(&hi).xy())),
            _ => return Err(Error::PreViolated(format!("line {i} misses its set"))),
        }
    }
    for i in 0..chords.len() {
        for j in i + 1..chords.len() {
            let ((a, b), (c, d)) = (&chords[i], &chords[j]);
            if !segments_intersect(a, b, c, d) {
                return Err(Error::PreViolated(format!("chords {i} and {j} do not cross")));
            }
        }
    }
    Ok(chords)
}

fn along<T: Field>(l: &Line3<T>, p: &Point3<T>) -> T {
    dot3(&p.sub(&l.base), &l.dir)
}

/// Follow the proof of the three-set lemma on `(q_sets, lines, pi)`.
///
/// The threshold gate uses the measured number of separated pairs:
/// `(|Π| − 2q)/q ≥ 3`.
pub fn three_crossing_line<T: Field>(
    q_sets: &[Polytope3<T>],
    lines: &[Line3<T>],
    pi: &Plane3<T>,
    c0: &T,
) -> Result<(Line3<T>, Vec<usize>, Lemma3setsTrace<T>)> {
    let q = q_sets.len();
    if pi.is_vertical() {
        return Err(Error::PreViolated("vertical plane".into()));
    }
    let shadows: Vec<_> = q_sets.iter().map(|k| k.shadow()).collect();
    if family_class2(&shadows) != FamilyClass::Strict2 {
        return Err(Error::PreViolated("family is not strictly 2-overlapping".into()));
    }
    check_realization3(q_sets, lines)?;
    let mut pairs = Vec::new();
    for i in 0..q {
        for j in i + 1..q {
            if separates_sets(pi, &q_sets[i], &q_sets[j]) {
                pairs.push((i, j));
            }
        }
    }
    let qq = T::int(q as i64);
    let need = c0.clone() * qq.clone() * qq.clone() / T::int(2);
    if T::int(pairs.len() as i64) < need {
        return Err(Error::PreViolated(format!("separation count: {} pairs separated", pairs.len())));
    }
    if pairs.len() < 5 * q {
        return Err(Error::PreViolated(format!("threshold: {} separated pairs for q = {q}", pairs.len())));
    }
    let mut separated = Vec::with_capacity(pairs.len());
    for &(i, j) in &pairs {
        let (ki, kj) = (&q_sets[i], &q_sets[j]);
        let y = common_point3(ki, kj).ok_or(Error::NotPairwise(i, j))?;
        let (a, b) = vertical_segment_witness(pi, ki, kj)
            .ok_or_else(|| Error::VerifyFailed(format!("no vertical segment for separated pair ({i}, {j})")))?;
        let x = a.xy().lift(pi.z_at(&a.x, &a.y).expect("non-vertical"));
        let (fa, fy, fb) = (pi.eval(&a), pi.eval(&y), pi.eval(&b));
        let w = if fa.is_zero() {
            a.clone()
        } else if !(fa.clone() * fy.clone()).is_positive() {
            a.lerp(&y, &(fa.clone() / (fa - fy)))
        } else if fb.is_zero() {
            b.clone()
        } else {
            y.lerp(&b, &(fy.clone() / (fy - fb)))
        };
        let (w_in_i, w_in_j) = (ki.contains(&w), kj.contains(&w));
        separated.push(PairTrace { i, j, y, a, b, x, w, w_in_i, w_in_j });
    }
    let lprime: Vec<Line3<T>> = lines.iter().map(|l| project_onto(l, pi)).collect();
    let mut v_sets = vec![Vec::new(); q];
    for p in &separated {
        if p.w_in_i {
            v_sets[p.i].push(p.j);
        }
        if p.w_in_j {
            v_sets[p.j].push(p.i);
        }
    }
    let pos = |i: usize, j: usize| {
        let (v, _) = vertical_points(&lprime[i], &lprime[j]).expect("crossing projections");
        along(&lprime[i], &v)
    };
    let mut intervals = vec![None; q];
    for i in 0..q {
        let vs = &mut v_sets[i];
        vs.sort_by(|&a, &b| pos(i, a).partial_cmp(&pos(i, b)).expect("ordered"));
        if vs.len() >= 2 {
            intervals[i] = Some((vs[0], vs[vs.len() - 1]));
        }
    }
    let crossing = |h: usize| -> Vec<usize> {
        (0..q)
            .filter(|&i| {
                i != h
                    && intervals[i].is_some_and(|(a, b)| a != h && b != h)
                    && v_sets[i].contains(&h)
            })
            .collect()
    };
    let (h, crossed_intervals) = (0..q)
        .map(|h| (h, crossing(h)))
        .max_by(|(h1, c1), (h2, c2)| c1.len().cmp(&c2.len()).then(h2.cmp(h1)))
        .expect("nonempty family");
    if crossed_intervals.len() < 3 {
        return Err(Error::VerifyFailed(format!("best line crosses {} intervals", crossed_intervals.len())));
    }
    let line = lprime[h].clone();
    let (_, ids) = line_crossing_count3(&line.clone().into(), q_sets);
    if let Some(i) = crossed_intervals.iter().find(|i| !ids.contains(i)) {
        return Err(Error::VerifyFailed(format!("line {h} misses the section of set {i}")));
    }
    let trace = Lemma3setsTrace { separated, lprime, v_sets, intervals, h, crossed_intervals };
    Ok((line, ids, trace))
}
