//! The staged search for a line crossing many sets of a pairwise
//! intersecting family.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::caps::extract_realizable;
use crate::error::{Error, Result};
use crate::kernel::ramsey::monochromatic_subset;
use crate::kernel::scalar::Field;
use crate::kernel::{AnyLine3, Line3, Plane3, Point3};
use crate::lines3::{best_separating_plane, relation, Candidates, Relation};
use crate::poly2::{family_class2, ConvexPoly2, FamilyClass};
use crate::polytope3::{common_point3, polytopes_meet, Polytope3};

use super::stab::{best_line_in_plane, deepest_point2, line_crossing_count3};
use super::three::three_crossing_line;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Stage {
    VerticalDepth,
    PlaneStab,
    Fallback,
}

#[derive(Clone, Debug)]
pub struct PipelineConfig<T> {
    pub depth_threshold: usize,
    pub c0: T,
    /// Longest monotone subsequence handed to the three-set construction.
    pub q: usize,
    pub budget: u64,
    /// Cap on candidate lines in the fallback stage.
    pub fallback_lines: usize,
}

impl<T: Field> Default for PipelineConfig<T> {
    fn default() -> Self {
        PipelineConfig {
            depth_threshold: 3,
            c0: T::frac(1, 4),
            q: 24,
            budget: crate::kernel::DEFAULT_BUDGET,
            fallback_lines: 20_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TransversalReport<T> {
    pub line: AnyLine3<T>,
    pub crossed: Vec<usize>,
    pub fraction: T,
    pub stage: Stage,
    pub diagnostics: Value,
}

/// Realized, monotone subfamily with a plane separating many of its line pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneStage<T> {
    /// Positions in the input family, in chain order.
    pub ids: Vec<usize>,
    pub lines: Vec<Line3<T>>,
    pub plane: Plane3<T>,
    /// Length of the planar realization before the monotone pass.
    pub realized: usize,
    pub separated_line_pairs: usize,
}

/// Drop sets until the shadows are strictly 2-intersecting.
pub fn strict2_subfamily<T: Field>(shadows: &[ConvexPoly2<T>]) -> Result<Vec<usize>> {
    let mut keep: Vec<usize> = (0..shadows.len()).collect();
    loop {
        let sub: Vec<ConvexPoly2<T>> = keep.iter().map(|&i| shadows[i].clone()).collect();
        match family_class2(&sub) {
            FamilyClass::Strict2 => return Ok(keep),
            FamilyClass::NotPairwise => return Err(Error::NotStrict2),
            FamilyClass::HasTriple => {
                let (_, _, ids) = deepest_point2(&sub)?;
                keep.remove(*ids.last().expect("deep point"));
            }
        }
    }
}

/// Line through two points of `k` above the ends of the chord `seg`.
fn lift_chord<T: Field>(k: &Polytope3<T>, seg: &ConvexPoly2<T>, slope: &T) -> Option<Line3<T>> {
    let mid = |p: &crate::kernel::Point2<T>| k.fiber(&p.x, &p.y).map(|(lo, hi)| p.lift((lo + hi) / T::int(2)));
    let vs = seg.vertices();
    let s = mid(&vs[0])?;
    if vs.len() >= 2 {
        let t = mid(&vs[vs.len() - 1])?;
        Line3::through(&s, &t).ok()
    } else {
        Line3::new(s, [T::one(), slope.clone(), T::zero()]).ok()
    }
}

/// Stage B up to the separating plane: realization, lifting, monotone pass.
pub fn prepare_plane_stage<T: Field>(family: &[Polytope3<T>], config: &PipelineConfig<T>) -> Result<PlaneStage<T>> {
    let shadows: Vec<ConvexPoly2<T>> = family.iter().map(|k| k.shadow()).collect();
    let sub = strict2_subfamily(&shadows)?;
    let sub_shadows: Vec<ConvexPoly2<T>> = sub.iter().map(|&i| shadows[i].clone()).collect();
    let r = extract_realizable(&sub_shadows, 3, config.budget)?
        .ok_or_else(|| Error::PreViolated("no realization of length 3".into()))?;
    let mut ids = Vec::with_capacity(r.len());
    let mut lifted = Vec::with_capacity(r.len());
    for (k, &sid) in r.set_ids.iter().enumerate() {
        let id = sub[sid];
        let l = lift_chord(&family[id], &r.segments[k], &r.lines[k].slope)
            .ok_or_else(|| Error::VerifyFailed(format!("cannot lift the line of set {id}")))?;
        ids.push(id);
        lifted.push(l);
    }
    let n = lifted.len();
    let color = |s: &[usize]| relation(&lifted[s[0]], &lifted[s[1]]).unwrap_or(Relation::Meet);
    let mut chosen: Vec<usize> = (0..n.min(2)).collect();
    for m in (3..=n.min(config.q)).rev() {
        if let Some(s) = monochromatic_subset(n, 2, color, m, config.budget)? {
            chosen = s;
            break;
        }
    }
    if chosen.len() < 3 {
        return Err(Error::PreViolated("no monotone triple among the lifted lines".into()));
    }
    let lines: Vec<Line3<T>> = chosen.iter().map(|&c| lifted[c].clone()).collect();
    let sep = best_separating_plane(&lines, Candidates::PiPlanes)?;
    Ok(PlaneStage {
        ids: chosen.iter().map(|&c| ids[c]).collect(),
        lines,
        plane: sep.plane,
        realized: n,
        separated_line_pairs: sep.count,
    })
}

fn report<T: Field>(line: AnyLine3<T>, family: &[Polytope3<T>], stage: Stage, diagnostics: Value) -> TransversalReport<T> {
    let (count, crossed) = line_crossing_count3(&line, family);
    let fraction = T::int(count as i64) / T::int(family.len() as i64);
    TransversalReport { line, crossed, fraction, stage, diagnostics }
}

fn point_json<T: Field>(p: &Point3<T>) -> Value {
    json!([p.x.to_string(), p.y.to_string(), p.z.to_string()])
}

fn plane_json<T: Field>(h: &Plane3<T>) -> Value {
    json!({"coef": h.coef.iter().map(|c| c.to_string()).collect::<Vec<_>>()})
}

fn x_dir<T: Field>() -> [T; 3] {
    [T::one(), T::zero(), T::zero()]
}

pub fn run_pipeline<T: Field>(family: &[Polytope3<T>], config: &PipelineConfig<T>) -> Result<TransversalReport<T>> {
    let n = family.len();
    if n == 0 {
        return Err(Error::PreViolated("empty family".into()));
    }
    let mut witnesses = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !polytopes_meet(&family[i], &family[j]) {
                return Err(Error::NotPairwise(i, j));
            }
            let y = common_point3(&family[i], &family[j]).ok_or(Error::NotPairwise(i, j))?;
            witnesses.push(y);
        }
    }
    if n <= 2 {
        let p = witnesses.first().cloned().unwrap_or_else(|| family[0].vertices()[0].clone());
        let line = AnyLine3::new(p, x_dir()).expect("nonzero direction");
        return Ok(report(line, family, Stage::Fallback, json!({"small_family": n})));
    }
    let mut diag = serde_json::Map::new();

    // Stage A
    let shadows: Vec<ConvexPoly2<T>> = family.iter().map(|k| k.shadow()).collect();
    let (p, depth, _) = deepest_point2(&shadows)?;
    diag.insert("vertical_depth".into(), json!({"depth": depth, "point": [p.x.to_string(), p.y.to_string()]}));
    if depth >= config.depth_threshold {
        return Ok(report(AnyLine3::vertical(p), family, Stage::VerticalDepth, Value::Object(diag)));
    }

    // Stage B
    let mut best: Option<TransversalReport<T>> = None;
    let consider = |r: TransversalReport<T>, best: &mut Option<TransversalReport<T>>| {
        if best.as_ref().is_none_or(|b| r.crossed.len() > b.crossed.len()) {
            *best = Some(r);
        }
    };
    let mut stage_b = serde_json::Map::new();
    match prepare_plane_stage(family, config) {
        Ok(ps) => {
            stage_b.insert("realized".into(), json!(ps.realized));
            stage_b.insert("monotone".into(), json!(ps.ids));
            stage_b.insert("plane".into(), plane_json(&ps.plane));
            stage_b.insert("separated_line_pairs".into(), json!(ps.separated_line_pairs));
            let q_sets: Vec<Polytope3<T>> = ps.ids.iter().map(|&i| family[i].clone()).collect();
            match three_crossing_line(&q_sets, &ps.lines, &ps.plane, &config.c0) {
                Ok((line, ids, trace)) => {
                    let global: Vec<usize> = ids.iter().map(|&i| ps.ids[i]).collect();
                    stage_b.insert(
                        "three_crossing".into(),
                        json!({"h": ps.ids[trace.h], "crossed": global, "separated_pairs": trace.separated.len()}),
                    );
                    consider(report(line.into(), family, Stage::PlaneStab, Value::Null), &mut best);
                }
                Err(e) => {
                    stage_b.insert("three_crossing".into(), json!({"error": e.to_string()}));
                }
            }
            match best_line_in_plane(&ps.plane, family) {
                Ok((line, count, _)) => {
                    stage_b.insert("plane_stab".into(), json!({"count": count}));
                    consider(report(line, family, Stage::PlaneStab, Value::Null), &mut best);
                }
                Err(e) => {
                    stage_b.insert("plane_stab".into(), json!({"error": e.to_string()}));
                }
            }
        }
        Err(e) => {
            stage_b.insert("error".into(), json!(e.to_string()));
        }
    }
    diag.insert("plane_stab".into(), Value::Object(stage_b));

    // Stage C
    if best.as_ref().is_none_or(|b| b.crossed.len() < 3) {
        let mut pts = witnesses.clone();
        pts.sort_by(|a, b| a.lex_cmp(b));
        pts.dedup();
        let mut tried = 0usize;
        'outer: for a in 0..pts.len() {
            for b in a + 1..pts.len() {
                if tried >= config.fallback_lines {
                    break 'outer;
                }
                tried += 1;
                let line = AnyLine3::through(&pts[a], &pts[b]).expect("distinct points");
                consider(report(line, family, Stage::Fallback, Value::Null), &mut best);
            }
        }
        if pts.len() == 1 {
            consider(report(AnyLine3::new(pts[0].clone(), x_dir()).expect("direction"), family, Stage::Fallback, Value::Null), &mut best);
        }
        diag.insert("fallback".into(), json!({"witness_points": pts.len(), "lines": tried}));
    }
    let mut out = best.ok_or_else(|| Error::VerifyFailed("no candidate line".into()))?;
    if let Some(first) = witnesses.first() {
        diag.insert("first_witness".into(), point_json(first));
    }
    out.diagnostics = Value::Object(diag);
    Ok(out)
}

/// Replace each set by the hull of its pairwise witness points.
pub fn compactify<T: Field>(n: usize, witnesses: &[((usize, usize), Point3<T>)]) -> Vec<Option<Polytope3<T>>> {
    (0..n)
        .map(|i| {
            let pts: Vec<Point3<T>> =
                witnesses.iter().filter(|((a, b), _)| *a == i || *b == i).map(|(_, p)| p.clone()).collect();
            (!pts.is_empty()).then(|| Polytope3::hull(&pts))
        })
        .collect()
}
