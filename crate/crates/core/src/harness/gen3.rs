//! Spatial instance generators: monotone lines, tall boxes around them, and
//! the two rulings of the saddle `z = x·y`.

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::gen2::tangent_line;
use super::instance::Instance;
use super::rng;
use crate::error::{Error, Result};
use crate::kernel::Field;
use crate::lines3::{is_monotone, pair_frame, Direction, Monotonicity, Relation};
use crate::caps::ChainKind;
use crate::poly2::{family_class2, FamilyClass};
use crate::polytope3::polytopes_meet;
use crate::{ConvexPoly2, Line3, Point3, Polytope3, Scalar};

const RETRIES: usize = 50;
const MAX_HALVINGS: usize = 40;

/// Lines over an `n`-cap of parabola tangents with descending heights and
/// small random z-slopes.
pub fn gen_monotone_lines3(n: usize, seed: u64) -> Result<Instance> {
    if n < 3 {
        return Err(Error::PreViolated("need n ≥ 3".into()));
    }
    let mut rng = rng(seed);
    for _ in 0..RETRIES {
        let ts: Vec<Scalar> = (0..n).map(|i| Scalar::frac(i as i64 * 20 + rng.gen_range(-5..=5), 20)).collect();
        let spread = 2 * n as i64;
        let mut h = Scalar::zero();
        let mut heights = Vec::with_capacity(n);
        for _ in 0..n {
            h -= Scalar::frac(rng.gen_range(spread * 8..=spread * 16), 8);
            heights.push(h.clone());
        }
        let lines: Vec<Line3> = (0..n)
            .map(|i| {
                let l2 = tangent_line(&ts[i]);
                let s = Scalar::frac(rng.gen_range(-16..=16), 32);
                let base = Point3::new(Scalar::zero(), l2.intercept.clone(), heights[i].clone());
                Line3::new(base, [Scalar::one(), l2.slope.clone(), s]).expect("non-vertical")
            })
            .collect();
        if certify_monotone(&lines)? {
            let meta = json!({
                "generator": "monotone3",
                "n": n,
                "tangents": ts.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            });
            return Ok(Instance::spatial(vec![], lines, seed, meta));
        }
    }
    Err(Error::GenFailed("no strictly descending monotone sequence".into()))
}

fn certify_monotone(lines: &[Line3]) -> Result<bool> {
    if is_monotone(lines)? != Monotonicity::Monotone(ChainKind::Cap, Direction::Descending) {
        return Ok(false);
    }
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if pair_frame(&lines[i], &lines[j])?.relation == Relation::Meet {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Projected hexagon of a strip around `l*` over `[x0, x1]`, lifted to the
/// heights of `l` shifted by `±height`.
fn tall_box(l: &Line3, x0: &Scalar, x1: &Scalar, w: &Scalar, height: &Scalar) -> Polytope3 {
    let slope = l.dir[1].clone() / l.dir[0].clone();
    let zslope = l.dir[2].clone() / l.dir[0].clone();
    let y = |x: &Scalar| l.base.y.clone() + slope.clone() * x.clone();
    let z = |x: &Scalar| l.base.z.clone() + zslope.clone() * x.clone();
    let hex = [
        (x0.clone() - w.clone(), Scalar::zero()),
        (x0.clone(), -w.clone()),
        (x1.clone(), -w.clone()),
        (x1.clone() + w.clone(), Scalar::zero()),
        (x1.clone(), w.clone()),
        (x0.clone(), w.clone()),
    ];
    let mut pts = Vec::with_capacity(12);
    for (x, dy) in hex {
        for s in [-height.clone(), height.clone()] {
            pts.push(Point3::new(x.clone(), y(&x) + dy.clone(), z(&x) + s));
        }
    }
    Polytope3::hull(&pts)
}

/// Tall thin boxes around monotone lines: pairwise intersecting, with
/// strictly 2-intersecting projections.
pub fn gen_strict2_family3(n: usize, height: &Scalar, seed: u64) -> Result<Instance> {
    if n < 3 || !height.is_positive() {
        return Err(Error::PreViolated("need n ≥ 3 and positive height".into()));
    }
    let base = gen_monotone_lines3(n, seed)?;
    let lines = base.lines.clone();
    // extent of each line over all common verticals
    let mut spans = Vec::with_capacity(n);
    let mut max_gap = Scalar::zero();
    for i in 0..n {
        let mut xs = Vec::new();
        for j in 0..n {
            if i != j {
                let f = pair_frame(&lines[i], &lines[j])?;
                let gap = (f.p12.z.clone() - f.p21.z.clone()).abs();
                if gap > max_gap {
                    max_gap = gap;
                }
                xs.push(f.vline.x.clone());
            }
        }
        let lo = xs.iter().cloned().fold(xs[0].clone(), crate::kernel::scalar::min);
        let hi = xs.iter().cloned().fold(xs[0].clone(), crate::kernel::scalar::max);
        spans.push((lo - Scalar::frac(1, 2), hi + Scalar::frac(1, 2)));
    }
    let used_height = if height > &max_gap { height.clone() } else { max_gap.clone() + Scalar::one() };
    let mut w = Scalar::frac(1, 10);
    for _ in 0..MAX_HALVINGS {
        let sets: Vec<Polytope3> =
            (0..n).map(|i| tall_box(&lines[i], &spans[i].0, &spans[i].1, &w, &used_height)).collect();
        let shadows: Vec<ConvexPoly2> = sets.iter().map(|s| s.shadow()).collect();
        if family_class2(&shadows) == FamilyClass::Strict2 {
            for i in 0..n {
                for j in i + 1..n {
                    if !polytopes_meet(&sets[i], &sets[j]) {
                        return Err(Error::GenFailed(format!("boxes {i} and {j} do not meet")));
                    }
                }
            }
            let meta = json!({
                "generator": "strict2_3d",
                "n": n,
                "height": height.to_string(),
                "height_used": used_height.to_string(),
                "max_gap": max_gap.to_string(),
                "width": w.to_string(),
            });
            return Ok(Instance::spatial(sets, lines, seed, meta));
        }
        w /= Scalar::int(2);
    }
    Err(Error::GenFailed("no strictly 2-overlapping fattening".into()))
}

fn jitter(rng: &mut ChaCha8Rng, eps: &Scalar) -> Scalar {
    eps.clone() * Scalar::frac(rng.gen_range(-100..=100), 100)
}

/// `ℓ_i = (i, t, i·t)` and `ℓ'_j = (t, j, j·t)` for `i, j ∈ 1..=n`, each
/// coordinate of base and direction moved by at most `eps`.
pub fn gen_paraboloid(n: usize, eps: &Scalar, seed: u64) -> Result<Instance> {
    if n < 2 || eps.is_negative() {
        return Err(Error::PreViolated("need n ≥ 2 and eps ≥ 0".into()));
    }
    let mut rng = rng(seed);
    let mut lines = Vec::with_capacity(2 * n);
    let mut groups = Vec::with_capacity(2 * n);
    for (group, first) in [(0usize, true), (1, false)] {
        for i in 1..=n as i64 {
            let k = Scalar::int(i);
            let (base, dir) = if first {
                ([k.clone(), Scalar::zero(), Scalar::zero()], [Scalar::zero(), Scalar::one(), k])
            } else {
                ([Scalar::zero(), k.clone(), Scalar::zero()], [Scalar::one(), Scalar::zero(), k])
            };
            let base = base.map(|c| c + jitter(&mut rng, eps));
            let dir = dir.map(|c| c + jitter(&mut rng, eps));
            lines.push(Line3::new(Point3::from_coords(base), dir)?);
            groups.push(group);
        }
    }
    let delta = Scalar::frac(1, 20);
    let sets = lines
        .iter()
        .map(|l| {
            let ends = [l.point_at(&-Scalar::int(n as i64 + 1)), l.point_at(&Scalar::int(n as i64 + 1))];
            let mut pts = Vec::new();
            for e in &ends {
                for d in [[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]] {
                    pts.push(e.offset(&d.map(Scalar::int), &delta));
                }
            }
            Polytope3::hull(&pts)
        })
        .collect();
    let meta = json!({"generator": "paraboloid", "n": n, "eps": eps.to_string()});
    let mut inst = Instance::spatial(sets, lines, seed, meta);
    inst.line_groups = groups;
    Ok(inst)
}

/// Random solid polytope from `k` points in a cube of half-side `radius`.
pub fn random_polytope(rng: &mut ChaCha8Rng, center: [i64; 3], radius: i64, k: usize) -> Polytope3 {
    loop {
        let pts: Vec<Point3> = (0..k)
            .map(|_| {
                Point3::from_coords(center.map(|c| Scalar::frac(c * 8 + rng.gen_range(-radius * 8..=radius * 8), 8)))
            })
            .collect();
        let p = Polytope3::hull(&pts);
        if p.dim() == 3 {
            return p;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lines3::{relation, vertical_points};

    #[test]
    fn monotone_triple() {
        let inst = gen_monotone_lines3(3, 5).unwrap();
        assert_eq!(is_monotone(&inst.lines).unwrap(), Monotonicity::Monotone(ChainKind::Cap, Direction::Descending));
        assert_eq!(gen_monotone_lines3(3, 5).unwrap(), inst);
    }

    #[test]
    fn monotone_ten_is_skew() {
        let inst = gen_monotone_lines3(10, 1).unwrap();
        for i in 0..10 {
            for j in i + 1..10 {
                assert_ne!(relation(&inst.lines[i], &inst.lines[j]).unwrap(), Relation::Meet);
            }
        }
    }

    #[test]
    fn strict2_family() {
        let inst = gen_strict2_family3(6, &Scalar::frac(1, 100), 2).unwrap();
        inst.verify().unwrap();
        let used: Scalar = crate::kernel::parse_rational(inst.meta["height_used"].as_str().unwrap()).unwrap();
        assert!(used > Scalar::frac(1, 100));
    }

    #[test]
    fn paraboloid_rulings_meet() {
        let inst = gen_paraboloid(2, &Scalar::zero(), 0).unwrap();
        let (p, q) = vertical_points(&inst.lines[0], &inst.lines[2]).unwrap();
        assert_eq!(p, Point3::new(Scalar::int(1), Scalar::int(1), Scalar::int(1)));
        assert_eq!(p, q);
        let inst = gen_paraboloid(3, &Scalar::zero(), 0).unwrap();
        for i in 0..3 {
            for j in 3..6 {
                assert_eq!(relation(&inst.lines[i], &inst.lines[j]).unwrap(), Relation::Meet);
            }
        }
    }
}
