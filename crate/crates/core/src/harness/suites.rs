//! Property suites run over seeded generated instances.
//!
//! Trial `i` of a run with base seed `s` draws its instance from
//! `split_seed(s, i)`, so a report is reproducible from `(name, trials, s)`.
//! Trials whose instance misses a precondition (degenerate tangency, failed
//! hypothesis) are excluded: `passes + failures + excluded = trials`.

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use super::gen2::{random_polygon, random_strict2_triple};
use super::gen3::random_polytope;
use super::{gen_cap_family2, gen_monotone_lines3, gen_paraboloid, gen_strict2_family3, json, rng, split_seed, Instance};
use crate::caps::{check_generic_lines, check_realization2, extract_realizable, is_cap_lines, is_cup_lines, longest_cap_or_cup, ChainKind};
use crate::error::{Error, Result};
use crate::kernel::geom::{cross3, dot3};
use crate::kernel::{orient2, Field, Orientation};
use crate::lines3::frame::crosses_segment;
use crate::lines3::{
    best_separating_plane, best_separating_plane_pairs, classify_triple3, separates_lines, Candidates,
};
use crate::poly2::{check_lemma_4sets, hole_region, poly_intersect2, triple_orientation, FourSetsOutcome};
use crate::polytope3::{
    common_tangent_lines2, common_tangent_planes3, is_good_family3, separates_sets, vertical_segment_witness,
    GoodFamilyCert,
};
use crate::transversal::{
    deepest_point2, line_crossing_count3, prepare_plane_stage, run_pipeline, three_crossing_line, PipelineConfig,
};
use crate::{AnyLine3, ConvexPoly2, Line2, Plane3, Point2, Point3, Polytope3, Scalar};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteFailure {
    pub trial: usize,
    pub seed: u64,
    pub reason: String,
    /// The offending instance in loadable JSON form, when there is one.
    pub instance: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub trials: usize,
    pub seed: u64,
    pub passes: usize,
    pub excluded: usize,
    /// Exclusion counts by reason.
    pub exclusions: BTreeMap<String, usize>,
    pub failures: Vec<SuiteFailure>,
    /// A property of the whole run (a rate or growth bound) that did not hold.
    pub aggregate_failure: Option<String>,
    pub metrics: Value,
    pub elapsed_ms: u128,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty() && self.aggregate_failure.is_none()
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("serializable report")
    }
}

enum Trial {
    Pass(Value),
    Excluded(String),
    Fail(String, Option<Instance>),
}

type TrialFn = fn(&mut ChaCha8Rng, u64) -> Trial;
/// Summary of the per-trial metrics of passing trials, plus an aggregate verdict.
type FinishFn = fn(&[Value], usize, &BTreeMap<String, usize>) -> (Value, Option<String>);

struct Suite {
    name: &'static str,
    trial: TrialFn,
    finish: FinishFn,
}

const SUITES: &[Suite] = &[
    Suite { name: "vertical_hull_equiv", trial: vertical_hull_equiv, finish: no_summary },
    Suite { name: "orientation_witness_independence", trial: orientation_witness, finish: no_summary },
    Suite { name: "hole_structure", trial: hole_structure, finish: no_summary },
    Suite { name: "four_sets", trial: four_sets, finish: four_sets_summary },
    Suite { name: "tangent_count_2d", trial: tangent_count_2d, finish: degenerate_rate },
    Suite { name: "tangent_count_3d", trial: tangent_count_3d, finish: degenerate_rate },
    Suite { name: "triple_types", trial: triple_types, finish: no_summary },
    Suite { name: "separation_growth", trial: separation_growth, finish: growth_summary },
    Suite { name: "three_sets", trial: three_sets, finish: precondition_rate },
    Suite { name: "realization", trial: realization, finish: no_summary },
    Suite { name: "paraboloid", trial: paraboloid, finish: paraboloid_summary },
    Suite { name: "pipeline", trial: pipeline, finish: pipeline_summary },
    Suite { name: "cap_cup_oracle", trial: cap_cup_oracle, finish: no_summary },
    Suite { name: "deepest_point_oracle", trial: deepest_point_oracle, finish: no_summary },
    Suite { name: "crossing_count_oracle", trial: crossing_count_oracle, finish: no_summary },
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.name).collect()
}

pub fn verify_suite(name: &str, trials: usize, seed: u64) -> Result<SuiteReport> {
    let suite = SUITES.iter().find(|s| s.name == name).ok_or_else(|| Error::UnknownSuite(name.to_string()))?;
    let start = Instant::now();
    let mut passes = 0;
    let mut exclusions = BTreeMap::new();
    let mut failures = Vec::new();
    let mut metrics = Vec::new();
    for i in 0..trials {
        let s = split_seed(seed, i as u64);
        match (suite.trial)(&mut rng(s), s) {
            Trial::Pass(m) => {
                passes += 1;
                metrics.push(m);
            }
            Trial::Excluded(why) => *exclusions.entry(why).or_insert(0) += 1,
            Trial::Fail(reason, inst) => {
                failures.push(SuiteFailure { trial: i, seed: s, reason, instance: inst.map(|x| x.to_json()) })
            }
        }
    }
    let (summary, aggregate_failure) = (suite.finish)(&metrics, trials, &exclusions);
    Ok(SuiteReport {
        suite: name.to_string(),
        trials,
        seed,
        passes,
        excluded: exclusions.values().sum(),
        exclusions,
        failures,
        aggregate_failure,
        metrics: summary,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

fn no_summary(_: &[Value], _: usize, _: &BTreeMap<String, usize>) -> (Value, Option<String>) {
    (Value::Null, None)
}

fn counterexample(suite: &str, extra: Value) -> Value {
    let mut meta = json!({"generator": "counterexample", "suite": suite});
    if let (Some(m), Value::Object(e)) = (meta.as_object_mut(), extra) {
        m.extend(e);
    }
    meta
}

fn planar(suite: &str, sets: &[ConvexPoly2], seed: u64, extra: Value) -> Instance {
    Instance::planar(sets.to_vec(), seed, counterexample(suite, extra))
}

fn spatial(suite: &str, sets: &[Polytope3], seed: u64, extra: Value) -> Instance {
    Instance::spatial(sets.to_vec(), vec![], seed, counterexample(suite, extra))
}

fn rand_frac(rng: &mut ChaCha8Rng, lo: i64, hi: i64, den: i64) -> Scalar {
    Scalar::frac(rng.gen_range(lo * den..=hi * den), den)
}

/// Random point of a polygon as a random convex combination of its vertices.
fn sample_in(rng: &mut ChaCha8Rng, p: &ConvexPoly2) -> Point2 {
    let vs = p.vertices();
    let mut ws: Vec<i64> = vs.iter().map(|_| rng.gen_range(0..=16)).collect();
    if ws.iter().all(|w| *w == 0) {
        ws[0] = 1;
    }
    let total = Scalar::int(ws.iter().sum());
    let (mut x, mut y) = (Scalar::zero(), Scalar::zero());
    for (v, w) in vs.iter().zip(&ws) {
        x += v.x.clone() * Scalar::int(*w);
        y += v.y.clone() * Scalar::int(*w);
    }
    Point2::new(x / total.clone(), y / total)
}

fn vertical_hull_equiv(rng: &mut ChaCha8Rng, seed: u64) -> Trial {
    let blob = |rng: &mut ChaCha8Rng| {
        let c = [0; 3].map(|_| rng.gen_range(-4..=4));
        let r = rng.gen_range(1..=3);
        let k = rng.gen_range(4..=8);
        random_polytope(rng, c, r, k)
    };
    let a = blob(rng);
    let b = blob(rng);
    let h = loop {
        let mut n = [0; 3].map(|_| rng.gen_range(-4..=4i64));
        if rng.gen_ratio(1, 4) {
            n[2] = 0;
        }
        if n == [0; 3] {
            continue;
        }
        let pa = &a.vertices()[rng.gen_range(0..a.vertices().len())];
        let pb = &b.vertices()[rng.gen_range(0..b.vertices().len())];
        let p = pa.lerp(pb, &Scalar::frac(rng.gen_range(0..=8), 8));
        let n = n.map(Scalar::int);
        break Plane3::from_normal(n, &p).expect("nonzero normal");
    };
    let sep = separates_sets(&h, &a, &b);
    let wit = vertical_segment_witness(&h, &a, &b);
    let fail = |why: String| Trial::Fail(why, Some(spatial("vertical_hull_equiv", &[a.clone(), b.clone()], seed, json!({"plane": json::plane3(&h)}))));
    match (&wit, sep) {
        (Some((p, q)), true) => {
            if !(a.contains(p) && b.contains(q) && p.xy() == q.xy() && crosses_segment(&h, p, q)) {
                return fail("witness segment is not vertical, misses a set or is not crossed".into());
            }
            Trial::Pass(Value::Null)
        }
        (None, false) => Trial::Pass(Value::Null),
        (_, s) => fail(format!("separates_sets = {s} but witness = {}", wit.is_some())),
    }
}

fn orientation_witness(rng: &mut ChaCha8Rng, seed: u64) -> Trial {
    let k = random_strict2_triple(rng);
    let o = match triple_orientation(&k[0], &k[1], &k[2]) {
        Ok(o) => o,
        Err(e) => return Trial::Excluded(e.to_string()),
    };
    let inter = |i: usize, j: usize| poly_intersect2(&k[i], &k[j]).expect("pairwise intersecting");
    let (i12, i23, i13) = (inter(0, 1), inter(1, 2), inter(0, 2));
    let mut collinear = 0;
    for _ in 0..50 {
        let (x, y, z) = (sample_in(rng, &i12), sample_in(rng, &i23), sample_in(rng, &i13));
        match orient2(&x, &y, &z) {
            Orientation::Collinear => collinear += 1,
            w if w != o => {
                let extra = json!({"witnesses": [json::point2(&x), json::point2(&y), json::point2(&z)]});
                return Trial::Fail(format!("orientation {w:?} differs from {o:?}"), Some(planar("orientation_witness_independence", &k, seed, extra)));
            }
            _ => {}
        }
    }
    Trial::Pass(json!(collinear))
}

fn hole_structure(rng: &mut ChaCha8Rng, seed: u64) -> Trial {
    let k = random_strict2_triple(rng);
    let hole = match hole_region(&k[0], &k[1], &k[2]) {
        Ok(h) => h,
        Err(e) => return Trial::Excluded(e.to_string()),
    };
    let fail = |why: String| Trial::Fail(why, Some(planar("hole_structure", &k, seed, Value::Null)));
    for i in 0..3 {
        let (j, l) = ((i + 1) % 3, (i + 2) % 3);
        let (p, q) = (hole.corner(i, j), hole.corner(i, l));
        if p == q {
            return fail(format!("corners of set {i} coincide"));
        }
        if !(k[i].contains(p) && k[i].contains(q)) {
            return fail(format!("corner segment of set {i} leaves it"));
        }
        let seg = ConvexPoly2::segment(p.clone(), q.clone());
        for m in [j, l] {
            if let Some(s) = poly_intersect2(&seg, &k[m]) {
                let at_end = s.dim() == 0 && (&s.vertices()[0] == p || &s.vertices()[0] == q);
                if !at_end {
                    return fail(format!("corner segment of set {i} meets set {m} inside"));
                }
            }
        }
    }
    Trial::Pass(Value::Null)
}

const FOUR_SETS_ATTEMPTS: u64 = 200;

/// Rejection sampling over fattened 4-caps with random partitions; every
/// rejected draw is tallied by the hypothesis it failed.
fn four_sets(_: &mut ChaCha8Rng, seed: u64) -> Trial {
    let mut rejected: BTreeMap<String, usize> = BTreeMap::new();
    for attempt in 0..FOUR_SETS_ATTEMPTS {
        let s = split_seed(seed, attempt);
        let mut r = rng(s);
        let fat = Scalar::frac(1, [2, 4, 10][r.gen_range(0..3)]);
        let Ok(inst) = gen_cap_family2(4, &fat, s) else {
            *rejected.entry("generator".into()).or_insert(0) += 1;
            continue;
        };
        let sets: [ConvexPoly2; 4] = inst.polygons().to_vec().try_into().expect("four sets");
        let (a, b) = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)][r.gen_range(0..6)];
        let key = match check_lemma_4sets(&sets, a, b) {
            Ok(FourSetsOutcome::ConclusionHolds) => {
                return Trial::Pass(json!({"attempts": attempt + 1, "rejected": rejected}));
            }
            Ok(FourSetsOutcome::ConclusionFails { seg_c, seg_d }) => {
                let extra = json!({
                    "partition": [a, b],
                    "seg_c": seg_c.iter().map(json::point2).collect::<Vec<_>>(),
                    "seg_d": seg_d.iter().map(json::point2).collect::<Vec<_>>(),
                });
                return Trial::Fail("segments v_ac v_bc and v_ad v_bd are disjoint".into(), Some(planar("four_sets", &sets, s, extra)));
            }
            Ok(FourSetsOutcome::HypothesisFails(h)) => format!("{h:?}"),
            Err(e) => e.to_string(),
        };
        *rejected.entry(key).or_insert(0) += 1;
    }
    Trial::Excluded("no hypothesis-satisfying family".into())
}

fn four_sets_summary(metrics: &[Value], _: usize, _: &BTreeMap<String, usize>) -> (Value, Option<String>) {
    let mut rejected: BTreeMap<String, u64> = BTreeMap::new();
    for m in metrics {
        if let Some(r) = m["rejected"].as_object() {
            for (k, v) in r {
                *rejected.entry(k.clone()).or_insert(0) += v.as_u64().unwrap_or(0);
            }
        }
    }
    (json!({"rejected_draws": rejected}), None)
}

fn degenerate_rate(metrics: &[Value], trials: usize, ex: &BTreeMap<String, usize>) -> (Value, Option<String>) {
    let degenerate = ex.get("DEGENERATE").copied().unwrap_or(0);
    let verdict = (degenerate * 10 >= trials && trials > 0)
        .then(|| format!("{degenerate} of {trials} trials had non-generic tangency"));
    (json!({"degenerate": degenerate, "counted": metrics.len()}), verdict)
}

fn tangent_count_2d(rng: &mut ChaCha8Rng, seed: u64) -> Trial {
    let (r1, r2) = (rng.gen_range(2..=6), rng.gen_range(2..=6));
    let c = loop {
        let c = (rng.gen_range(-20..=20), rng.gen_range(-20..=20));
        if c.0.abs().max(c.1.abs()) > r1 + r2 {
            break c;
        }
    };
    let (k1, k2) = (rng.gen_range(3..=9), rng.gen_range(3..=9));
    let p = random_polygon(rng, (0, 0), r1, k1);
    let q = random_polygon(rng, c, r2, k2);
    match common_tangent_lines2(&p, &q) {
        Ok(t) if t.nongeneric => Trial::Excluded("DEGENERATE".into()),
        Ok(t) if t.items.len() == 8 => Trial::Pass(json!(8)),
        Ok(t) => Trial::Fail(format!("{} oriented tangents", t.items.len()), Some(planar("tangent_count_2d", &[p, q], seed, Value::Null))),
        Err(e) => Trial::Fail(e.to_string(), Some(planar("tangent_count_2d", &[p, q], seed, Value::Null))),
    }
}

/// Random solid polytope on a fine grid, so that contacts are rarely coplanar.
fn fine_polytope(rng: &mut ChaCha8Rng, center: [i64; 3], radius: i64, k: usize) -> Polytope3 {
    loop {
        let pts: Vec<Point3> = (0..k)
            .map(|_| Point3::from_coords(center.map(|c| Scalar::int(c) + rand_frac(rng, -radius, radius, 64))))
            .collect();
        let p = Polytope3::hull(&pts);
        if p.dim() == 3 {
            return p;
        }
    }
}

fn tangent_count_3d(rng: &mut ChaCha8Rng, seed: u64) -> Trial {
    let sets = loop {
        let sets: Vec<Polytope3> = [[0, 0, 0], [20, 0, 0], [10, 17, 0]]
            .iter()
            .map(|c| {
                let c = c.map(|x| x + rng.gen_range(-3..=3));
                let r = rng.gen_range(1..=3);
                let k = rng.gen_range(4..=8);
                fine_polytope(rng, c, r, k)
            })
            .collect();
        if matches!(is_good_family3(&sets[0], &sets[1], &sets[2]), Ok(GoodFamilyCert::Good)) {
            break sets;
        }
    };
    match common_tangent_planes3(&sets[0], &sets[1], &sets[2]) {
        Ok(t) if t.nongeneric => Trial::Excluded("DEGENERATE".into()),
        Ok(t) if t.items.len() == 16 => Trial::Pass(json!(16)),
        Ok(t) => Trial::Fail(format!("{} oriented tangent planes", t.items.len()), Some(spatial("tangent_count_3d", &sets, seed, Value::Null))),
        Err(e) => Trial::Fail(e.to_string(), Some(spatial("tangent_count_3d", &sets, seed, Value::Null))),
    }
}

fn triple_types(_: &mut ChaCha8Rng, seed: u64) -> Trial {
    let inst = match gen_monotone_lines3(3, seed) {
        Ok(i) => i,
        Err(e) => return Trial::Excluded(e.to_string()),
    };
    let l = &inst.lines;
    match classify_triple3(&l[0], &l[1], &l[2]) {
        Ok(types) if types.is_empty() => Trial::Fail("no type applies".into(), Some(inst)),
        Ok(types) => Trial::Pass(json!(types)),
        Err(Error::Degenerate(_)) => Trial::Excluded("degenerate".into()),
        Err(e) => Trial::Fail(e.to_string(), Some(inst)),
    }
}

pub const GROWTH_SIZES: [usize; 3] = [10, 20, 40];

fn separation_growth(_: &mut ChaCha8Rng, seed: u64) -> Trial {
    let mut counts = Vec::new();
    for n in GROWTH_SIZES {
        let inst = match gen_monotone_lines3(n, seed) {
            Ok(i) => i,
            Err(e) => return Trial::Excluded(e.to_string()),
        };
        let sep = match best_separating_plane(&inst.lines, Candidates::PiPlanes) {
            Ok(s) => s,
            Err(e) => return Trial::Fail(e.to_string(), Some(inst)),
        };
        let recount = sep
            .pairs
            .iter()
            .filter(|&&(i, j)| separates_lines(&sep.plane, &inst.lines[i], &inst.lines[j]).unwrap_or(false))
            .count();
        if recount != sep.count || sep.pairs.len() != sep.count {
            return Trial::Fail(format!("count {} but {recount} pairs recheck", sep.count), Some(inst));
        }
        counts.push(sep.count);
    }
    Trial::Pass(json!(counts))
}

fn growth_summary(metrics: &[Value], _: usize, _: &BTreeMap<String, usize>) -> (Value, Option<String>) {
    let mut sums = [0u64; 3];
    for m in metrics {
        for (s, v) in sums.iter_mut().zip(m.as_array().into_iter().flatten()) {
            *s += v.as_u64().unwrap_or(0);
        }
    }
    let k = metrics.len().max(1) as f64;
    let mean: BTreeMap<String, f64> = GROWTH_SIZES.iter().zip(&sums).map(|(n, s)| (n.to_string(), *s as f64 / k)).collect();
    let mut verdict = None;
    for w in 0..2 {
        if sums[w + 1] < 3 * sums[w] {
            verdict = Some(format!("S({}) < 3·S({})", GROWTH_SIZES[w + 1], GROWTH_SIZES[w]));
        }
    }
    if metrics.is_empty() {
        verdict = Some("no measured families".into());
    }
    (json!({"mean_separated": mean}), verdict)
}

fn three_sets(_: &mut ChaCha8Rng, seed: u64) -> Trial {
    let inst = match gen_strict2_family3(24, &Scalar::one(), seed) {
        Ok(i) => i,
        Err(e) => return Trial::Excluded(format!("generator: {e}")),
    };
    let family = inst.polytopes();
    let config = PipelineConfig { budget: super::budget(), ..PipelineConfig::default() };
    let ps = match prepare_plane_stage(family, &config) {
        Ok(p) => p,
        Err(e) => return Trial::Excluded(format!("plane stage: {e}")),
    };
    let q_sets: Vec<Polytope3> = ps.ids.iter().map(|&i| family[i].clone()).collect();
    match three_crossing_line(&q_sets, &ps.lines, &ps.plane, &config.c0) {
        Ok((line, ids, _)) => {
            let any: AnyLine3 = line.into();
            if !ps.plane.contains_line(&any) {
                return Trial::Fail("line leaves the plane".into(), Some(inst));
            }
            let oracle: Vec<usize> = (0..q_sets.len()).filter(|&i| meets_by_projection(&any, &q_sets[i])).collect();
            if oracle != ids || oracle.len() < 3 {
                return Trial::Fail(format!("line crosses {} sets by the oracle, {} reported", oracle.len(), ids.len()), Some(inst));
            }
            Trial::Pass(json!({"q": q_sets.len(), "crossed": ids.len()}))
        }
        Err(Error::PreViolated(e)) => Trial::Excluded(format!("precondition: {}", e.split(':').next().unwrap_or(&e))),
        Err(e) => Trial::Fail(e.to_string(), Some(inst)),
    }
}

fn precondition_rate(metrics: &[Value], trials: usize, ex: &BTreeMap<String, usize>) -> (Value, Option<String>) {
    let excluded: usize = ex.values().sum();
    let verdict = (2 * excluded >= trials && trials > 0).then(|| format!("{excluded} of {trials} trials failed a precondition"));
    (json!({"verified": metrics.len(), "precondition_failures": excluded}), verdict)
}

fn realization(_: &mut ChaCha8Rng, seed: u64) -> Trial {
    let inst = match gen_cap_family2(8, &Scalar::frac(1, 10), seed) {
        Ok(i) => i,
        Err(e) => return Trial::Excluded(e.to_string()),
    };
    let sets = inst.polygons();
    match extract_realizable(sets, 8, super::budget()) {
        Ok(Some(r)) if r.len() == 8 => {
            let same = r.set_ids.iter().zip(&r.sets).all(|(&i, k)| &sets[i] == k);
            match check_realization2(&r.sets, &r.lines) {
                Ok(_) if same => Trial::Pass(json!(format!("{:?}", r.kind))),
                Ok(_) => Trial::Fail("realized sets are not family members".into(), Some(inst)),
                Err(f) => Trial::Fail(format!("realization check: {f:?}"), Some(inst)),
            }
        }
        Ok(Some(r)) => Trial::Fail(format!("realization of length {}", r.len()), Some(inst)),
        Ok(None) => Trial::Fail("no realization".into(), Some(inst)),
        Err(e) => Trial::Fail(e.to_string(), Some(inst)),
    }
}

/// Perturbation sizes probed by the paraboloid suite; the first is the one checked.
pub const PARABOLOID_EPS: [(i64, i64); 3] = [(1, 1000), (1, 1_000_000), (1, 10)];

/// Best candidate plane over the bicolored pairs, and how many of those pairs
/// it crosses strictly (endpoints on opposite open sides).
fn bicolored_best(inst: &Instance) -> Result<(usize, usize, Plane3)> {
    let lines = &inst.lines;
    let pairs: Vec<(usize, usize)> = (0..lines.len())
        .flat_map(|i| (0..lines.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| inst.line_groups[i] == 0 && inst.line_groups[j] == 1)
        .collect();
    let sep = best_separating_plane_pairs(lines, &pairs, Candidates::PiPlusVertexTriples)?;
    let strict = sep
        .pairs
        .iter()
        .filter(|&&(i, j)| {
            let (p, q) = crate::lines3::vertical_points(&lines[i], &lines[j]).expect("skew pair");
            let (a, b) = (sep.plane.eval(&p), sep.plane.eval(&q));
            (a * b).is_negative()
        })
        .count();
    Ok((sep.count, strict, sep.plane))
}

fn paraboloid(_: &mut ChaCha8Rng, seed: u64) -> Trial {
    let mut by_eps = serde_json::Map::new();
    let mut checked = None;
    for (num, den) in PARABOLOID_EPS {
        let eps = Scalar::frac(num, den);
        let inst = match gen_paraboloid(5, &eps, seed) {
            Ok(i) => i,
            Err(e) => return Trial::Fail(e.to_string(), None),
        };
        match bicolored_best(&inst) {
            Ok((count, strict, plane)) => {
                by_eps.insert(eps.to_string(), json!({"separated": count, "strict": strict}));
                if checked.is_none() {
                    checked = Some((count, strict, plane, inst));
                }
            }
            Err(e) => {
                by_eps.insert(eps.to_string(), json!({"error": e.to_string()}));
                if checked.is_none() {
                    return Trial::Fail(e.to_string(), Some(inst));
                }
            }
        }
    }
    let (count, strict, plane, inst) = checked.expect("first eps measured");
    if count >= 3 {
        let mut inst = inst;
        inst.meta["plane"] = json::plane3(&plane);
        let why = format!(
            "a candidate plane separates {count} bicolored pairs ({strict} strictly); by eps: {}",
            Value::Object(by_eps)
        );
        return Trial::Fail(why, Some(inst));
    }
    Trial::Pass(Value::Object(by_eps))
}

fn paraboloid_summary(metrics: &[Value], _: usize, _: &BTreeMap<String, usize>) -> (Value, Option<String>) {
    // largest eps at which every passing trial kept the bound
    let largest = PARABOLOID_EPS
        .iter()
        .map(|&(num, den)| Scalar::frac(num, den))
        .filter(|eps| {
            let key = eps.to_string();
            !metrics.is_empty() && metrics.iter().all(|m| m[&key]["separated"].as_u64().is_some_and(|c| c <= 2))
        })
        .max();
    (json!({"largest_eps_with_bound": largest.map(|e| e.to_string()), "trials": metrics}), None)
}

fn pipeline(_: &mut ChaCha8Rng, seed: u64) -> Trial {
    let inst = match gen_strict2_family3(20, &Scalar::one(), seed) {
        Ok(i) => i,
        Err(e) => return Trial::Excluded(format!("generator: {e}")),
    };
    let family = inst.polytopes();
    let config = PipelineConfig { budget: super::budget(), ..PipelineConfig::default() };
    let rep = match run_pipeline(family, &config) {
        Ok(r) => r,
        Err(e) => return Trial::Fail(e.to_string(), Some(inst)),
    };
    let oracle: Vec<usize> = (0..family.len()).filter(|&i| meets_by_projection(&rep.line, &family[i])).collect();
    if oracle != rep.crossed {
        return Trial::Fail(format!("oracle counts {} crossings, report {}", oracle.len(), rep.crossed.len()), Some(inst));
    }
    if rep.fraction < Scalar::frac(3, 20) {
        return Trial::Fail(format!("fraction {} below 3/20", rep.fraction), Some(inst));
    }
    Trial::Pass(json!({"fraction": rep.fraction.to_string(), "stage": rep.stage}))
}

fn pipeline_summary(metrics: &[Value], _: usize, _: &BTreeMap<String, usize>) -> (Value, Option<String>) {
    let mut fr: Vec<Scalar> = metrics
        .iter()
        .filter_map(|m| m["fraction"].as_str().and_then(crate::kernel::parse_rational))
        .collect();
    fr.sort();
    let median = match fr.len() {
        0 => Value::Null,
        n if n % 2 == 1 => json!(fr[n / 2].to_string()),
        n => json!(((fr[n / 2 - 1].clone() + fr[n / 2].clone()) / Scalar::int(2)).to_string()),
    };
    let mut stages: BTreeMap<String, usize> = BTreeMap::new();
    for m in metrics {
        *stages.entry(m["stage"].as_str().unwrap_or("?").to_string()).or_insert(0) += 1;
    }
    (json!({"median_fraction": median, "stages": stages}), None)
}

/// Longest cap or cup by trying every subset in slope order.
fn brute_chain(lines: &[Line2]) -> usize {
    let n = lines.len();
    let mut best = n.min(2);
    for mask in 0u32..1 << n {
        let k = mask.count_ones() as usize;
        if k <= best {
            continue;
        }
        let mut sub: Vec<Line2> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| lines[i].clone()).collect();
        sub.sort_by(|a, b| b.slope.cmp(&a.slope));
        let cap = is_cap_lines(&sub).unwrap_or(false);
        sub.reverse();
        if cap || is_cup_lines(&sub).unwrap_or(false) {
            best = k;
        }
    }
    best
}

fn cap_cup_oracle(rng: &mut ChaCha8Rng, _: u64) -> Trial {
    let n = rng.gen_range(3..=10);
    let lines: Vec<Line2> = loop {
        let ls: Vec<Line2> = (0..n).map(|_| Line2::new(rand_frac(rng, -8, 8, 16), rand_frac(rng, -8, 8, 16))).collect();
        if check_generic_lines(&ls).is_ok() {
            break ls;
        }
    };
    let (chain, kind) = match longest_cap_or_cup(&lines) {
        Ok(c) => c,
        Err(e) => return Trial::Excluded(e.to_string()),
    };
    let fail = |why: String| {
        let extra = json!({"lines": lines.iter().map(json::line2).collect::<Vec<_>>()});
        Trial::Fail(why, Some(Instance::planar(vec![], 0, counterexample("cap_cup_oracle", extra))))
    };
    let seq: Vec<Line2> = chain.iter().map(|&i| lines[i].clone()).collect();
    let valid = match kind {
        ChainKind::Cap => is_cap_lines(&seq),
        ChainKind::Cup => is_cup_lines(&seq),
    };
    if chain.len() >= 3 && !valid.unwrap_or(false) {
        return fail(format!("returned {kind:?} chain is not one"));
    }
    let brute = brute_chain(&lines);
    if brute != chain.len() {
        return fail(format!("dynamic program {} vs exhaustive {brute}", chain.len()));
    }
    Trial::Pass(json!(brute))
}

/// Maximum depth over polygon vertices, vertices of pairwise intersections
/// and a half-unit grid over the bounding box.
pub fn depth_oracle(family: &[ConvexPoly2]) -> usize {
    let mut pts: Vec<Point2> = family.iter().flat_map(|p| p.vertices().to_vec()).collect();
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            if let Some(x) = poly_intersect2(&family[i], &family[j]) {
                pts.extend(x.vertices().iter().cloned());
            }
        }
    }
    let xs: Vec<&Scalar> = pts.iter().map(|p| &p.x).collect();
    let ys: Vec<&Scalar> = pts.iter().map(|p| &p.y).collect();
    let lo = |v: &[&Scalar]| v.iter().map(|s| s.floor().to_integer()).min().expect("points");
    let hi = |v: &[&Scalar]| v.iter().map(|s| s.ceil().to_integer()).max().expect("points");
    let (x0, x1, y0, y1) = (lo(&xs), hi(&xs), lo(&ys), hi(&ys));
    let mut gx: num_bigint::BigInt = x0 * 2;
    while gx <= x1.clone() * 2 {
        let mut gy: num_bigint::BigInt = y0.clone() * 2;
        while gy <= y1.clone() * 2 {
            pts.push(Point2::new(Scalar::new(gx.clone(), 2.into()), Scalar::new(gy.clone(), 2.into())));
            gy += 1;
        }
        gx += 1;
    }
    pts.iter().map(|p| family.iter().filter(|k| k.contains(p)).count()).max().unwrap_or(0)
}

fn deepest_point_oracle(rng: &mut ChaCha8Rng, seed: u64) -> Trial {
    let n = rng.gen_range(3..=8);
    let family: Vec<ConvexPoly2> = (0..n)
        .map(|_| {
            let c = (rng.gen_range(-5..=5), rng.gen_range(-5..=5));
            let r = rng.gen_range(2..=5);
            let k = rng.gen_range(3..=7);
            random_polygon(rng, c, r, k)
        })
        .collect();
    let (p, depth, ids) = match deepest_point2(&family) {
        Ok(d) => d,
        Err(e) => return Trial::Fail(e.to_string(), Some(planar("deepest_point_oracle", &family, seed, Value::Null))),
    };
    let covering: Vec<usize> = (0..n).filter(|&i| family[i].contains(&p)).collect();
    let oracle = depth_oracle(&family);
    if covering != ids || depth != ids.len() || depth != oracle {
        let why = format!("depth {depth} at a point covered by {}, oracle {oracle}", covering.len());
        return Trial::Fail(why, Some(planar("deepest_point_oracle", &family, seed, Value::Null)));
    }
    Trial::Pass(json!(depth))
}

/// Whether `l` meets `k`, decided in the plane orthogonal to `l`: the line
/// projects to a point, the polytope to the hull of its projected vertices.
pub fn meets_by_projection(l: &AnyLine3, k: &Polytope3) -> bool {
    let d = &l.dir;
    let axis = (0..3).min_by_key(|&i| d[i].abs()).expect("three axes");
    let mut e = [Scalar::zero(), Scalar::zero(), Scalar::zero()];
    e[axis] = Scalar::one();
    let u = cross3(d, &e);
    let v = cross3(d, &u);
    let to2 = |p: &Point3| {
        let c = p.coords();
        Point2::new(dot3(&c, &u), dot3(&c, &v))
    };
    let shadow: Vec<Point2> = k.vertices().iter().map(to2).collect();
    ConvexPoly2::hull(&shadow).is_some_and(|h| h.contains(&to2(&l.base)))
}

fn crossing_count_oracle(rng: &mut ChaCha8Rng, seed: u64) -> Trial {
    let n = rng.gen_range(2..=6);
    let family: Vec<Polytope3> = (0..n)
        .map(|_| {
            let c = [0; 3].map(|_| rng.gen_range(-6..=6));
            let r = rng.gen_range(1..=3);
            let k = rng.gen_range(4..=8);
            random_polytope(rng, c, r, k)
        })
        .collect();
    let i = rng.gen_range(0..n);
    let j = rng.gen_range(0..n);
    let (vi, vj) = (family[i].vertices(), family[j].vertices());
    let base = vi[rng.gen_range(0..vi.len())].lerp(&vj[rng.gen_range(0..vj.len())], &Scalar::frac(rng.gen_range(0..=4), 4));
    let line = if rng.gen_ratio(1, 5) {
        AnyLine3::vertical(base.xy())
    } else {
        let dir = loop {
            let d = [0; 3].map(|_| rng.gen_range(-3..=3i64));
            if d != [0; 3] {
                break d.map(Scalar::int);
            }
        };
        AnyLine3::new(base, dir).expect("nonzero direction")
    };
    let (count, ids) = line_crossing_count3(&line, &family);
    let oracle: Vec<usize> = (0..n).filter(|&i| meets_by_projection(&line, &family[i])).collect();
    if oracle != ids || count != ids.len() {
        let extra = json!({"line": json::any_line3(&line)});
        return Trial::Fail(format!("count {count} vs oracle {}", oracle.len()), Some(spatial("crossing_count_oracle", &family, seed, extra)));
    }
    Trial::Pass(json!(count))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert_eq!(verify_suite("nope", 1, 0), Err(Error::UnknownSuite("nope".into())));
    }

    #[test]
    fn small_runs_are_reproducible() {
        for name in ["vertical_hull_equiv", "hole_structure", "crossing_count_oracle"] {
            let mut a = verify_suite(name, 5, 3).unwrap();
            let mut b = verify_suite(name, 5, 3).unwrap();
            a.elapsed_ms = 0;
            b.elapsed_ms = 0;
            assert_eq!(a, b);
            assert_eq!(a.passes + a.failures.len() + a.excluded, 5);
        }
    }

    #[test]
    fn projection_oracle_on_a_cube() {
        let pts: Vec<Point3> = (0..8)
            .map(|m| Point3::from_coords([m & 1, m >> 1 & 1, m >> 2 & 1].map(|b| Scalar::int(b * 2))))
            .collect();
        let cube = Polytope3::hull(&pts);
        let through = AnyLine3::new(Point3::from_coords([1, 1, 1].map(Scalar::int)), [1, 2, 3].map(Scalar::int)).unwrap();
        let miss = AnyLine3::new(Point3::from_coords([5, 0, 0].map(Scalar::int)), [0, 1, 0].map(Scalar::int)).unwrap();
        let touch = AnyLine3::vertical(Point2::new(Scalar::int(2), Scalar::int(2)));
        assert!(meets_by_projection(&through, &cube));
        assert!(!meets_by_projection(&miss, &cube));
        assert!(meets_by_projection(&touch, &cube));
    }
}
