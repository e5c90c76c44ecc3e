//! Planar instance generators.
//!
//! Families are built from tangent lines of the concave parabola
//! `y = -x²/2`: the tangent at `t` is `y = -t·x + t²/2`, consecutive tangents
//! form a cap, and thin hexagonal strips around them are strictly
//! 2-intersecting once thin enough. Every generator certifies its output.

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::instance::Instance;
use super::rng;
use crate::error::{Error, Result};
use crate::kernel::Field;
use crate::caps::eight_color;
use crate::poly2::{family_class2, Category, ConvexPoly2, FamilyClass};
use crate::{Line2, Point2, Scalar};

const MAX_HALVINGS: usize = 40;

/// Distinct increasing tangent parameters `t_i = start + i + jitter`.
fn tangent_params(rng: &mut ChaCha8Rng, n: usize, start: i64) -> Vec<Scalar> {
    (0..n)
        .map(|i| Scalar::frac((start + i as i64) * 20 + rng.gen_range(-5..=5), 20))
        .collect()
}

pub fn tangent_line(t: &Scalar) -> Line2 {
    Line2::new(-t.clone(), t.clone() * t.clone() / Scalar::int(2))
}

/// Hexagonal strip of vertical half-width `w` around `l` over `[x0, x1]`,
/// with pointed ends sticking out by `w`.
pub fn strip(l: &Line2, x0: &Scalar, x1: &Scalar, w: &Scalar) -> ConvexPoly2<Scalar> {
    let at = |x: Scalar, dy: Scalar| {
        let y = l.eval(&x) + dy;
        Point2::new(x, y)
    };
    let z = Scalar::zero();
    let pts = [
        at(x0.clone() - w.clone(), z.clone()),
        at(x0.clone(), -w.clone()),
        at(x1.clone(), -w.clone()),
        at(x1.clone() + w.clone(), z),
        at(x1.clone(), w.clone()),
        at(x0.clone(), w.clone()),
    ];
    ConvexPoly2::hull(&pts).expect("nonempty")
}

fn span_of(ts: &[Scalar], i: usize, margin: &Scalar) -> (Scalar, Scalar) {
    let half = Scalar::frac(1, 2);
    let xs: Vec<Scalar> = ts
        .iter()
        .enumerate()
        .filter(|(j, _)| *j != i)
        .map(|(_, t)| (t.clone() + ts[i].clone()) * half.clone())
        .collect();
    let lo = xs.iter().cloned().fold(xs[0].clone(), crate::kernel::scalar::min);
    let hi = xs.iter().cloned().fold(xs[0].clone(), crate::kernel::scalar::max);
    (lo - margin.clone(), hi + margin.clone())
}

/// Strips around an `n`-cap of tangent lines, thinned until strictly 2-intersecting.
/// Every triple colored as a cap; thick strips near close tangent points
/// can otherwise share a vertical line.
fn all_caps(sets: &[ConvexPoly2<Scalar>]) -> bool {
    let n = sets.len();
    (0..n).all(|i| {
        (i + 1..n).all(|j| {
            (j + 1..n).all(|k| {
                matches!(eight_color(&sets[i], &sets[j], &sets[k]), Ok(c) if c.category == Category::Cap)
            })
        })
    })
}

pub fn gen_cap_family2(n: usize, fatness: &Scalar, seed: u64) -> Result<Instance> {
    if n < 3 || !fatness.is_positive() {
        return Err(Error::PreViolated("need n ≥ 3 and positive fatness".into()));
    }
    let mut rng = rng(seed);
    let ts = tangent_params(&mut rng, n, 0);
    let lines: Vec<Line2> = ts.iter().map(tangent_line).collect();
    let margin = Scalar::frac(1, 2);
    let spans: Vec<(Scalar, Scalar)> = (0..n).map(|i| span_of(&ts, i, &margin)).collect();
    let mut w = fatness.clone();
    for _ in 0..MAX_HALVINGS {
        let sets: Vec<ConvexPoly2<Scalar>> = (0..n).map(|i| strip(&lines[i], &spans[i].0, &spans[i].1, &w)).collect();
        if family_class2(&sets) == FamilyClass::Strict2 && all_caps(&sets) {
            let meta = json!({
                "generator": "cap2",
                "n": n,
                "fatness": fatness.to_string(),
                "fatness_used": w.to_string(),
                "tangents": ts.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            });
            return Ok(Instance::planar(sets, seed, meta));
        }
        w /= Scalar::int(2);
    }
    Err(Error::GenFailed(format!("no strictly 2-intersecting fattening after {MAX_HALVINGS} halvings")))
}

/// A thin vertical set `A` at `x = 0` followed by strips along tangents with
/// `t > 1`, which cross `A` in ascending order and meet pairwise to its right.
/// The first set of the instance is `A`.
pub fn gen_flower2(n: usize, fatness: &Scalar, seed: u64) -> Result<Instance> {
    if n < 2 || !fatness.is_positive() {
        return Err(Error::PreViolated("need n ≥ 2 and positive fatness".into()));
    }
    let mut rng = rng(seed);
    let ts = tangent_params(&mut rng, n, 2);
    let lines: Vec<Line2> = ts.iter().map(tangent_line).collect();
    let x0 = -Scalar::one();
    let mut w = fatness.clone();
    for _ in 0..MAX_HALVINGS {
        let mut sets = Vec::with_capacity(n + 1);
        let ys: Vec<Scalar> = lines.iter().map(|l| l.intercept.clone()).collect();
        let lo = ys.iter().cloned().fold(ys[0].clone(), crate::kernel::scalar::min) - Scalar::one();
        let hi = ys.iter().cloned().fold(ys[0].clone(), crate::kernel::scalar::max) + Scalar::one();
        let a = ConvexPoly2::hull(&[
            Point2::new(-w.clone(), lo.clone()),
            Point2::new(w.clone(), lo),
            Point2::new(w.clone(), hi.clone()),
            Point2::new(-w.clone(), hi),
        ])
        .expect("rectangle");
        sets.push(a);
        for (i, l) in lines.iter().enumerate() {
            let (_, x1) = span_of(&ts, i, &Scalar::frac(1, 2));
            sets.push(strip(l, &x0, &x1, &w));
        }
        if family_class2(&sets) == FamilyClass::Strict2 {
            let meta = json!({
                "generator": "flower2",
                "n": n,
                "fatness": fatness.to_string(),
                "fatness_used": w.to_string(),
                "tangents": ts.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            });
            return Ok(Instance::planar(sets, seed, meta));
        }
        w /= Scalar::int(2);
    }
    Err(Error::GenFailed(format!("no strictly 2-intersecting flower after {MAX_HALVINGS} halvings")))
}

/// Random convex polygon with `k` hull candidates around a center.
pub fn random_polygon(rng: &mut ChaCha8Rng, center: (i64, i64), radius: i64, k: usize) -> ConvexPoly2<Scalar> {
    loop {
        let pts: Vec<Point2> = (0..k)
            .map(|_| {
                Point2::new(
                    Scalar::frac(center.0 * 8 + rng.gen_range(-radius * 8..=radius * 8), 8),
                    Scalar::frac(center.1 * 8 + rng.gen_range(-radius * 8..=radius * 8), 8),
                )
            })
            .collect();
        let p = ConvexPoly2::hull(&pts).expect("nonempty");
        if p.dim() == 2 {
            return p;
        }
    }
}

/// A random strictly 2-intersecting triple: strips around three random lines
/// through the sides of a random triangle.
pub fn random_strict2_triple(rng: &mut ChaCha8Rng) -> [ConvexPoly2<Scalar>; 3] {
    loop {
        let c: Vec<Point2> = (0..3)
            .map(|_| Point2::new(Scalar::int(rng.gen_range(-20..=20)), Scalar::int(rng.gen_range(-20..=20))))
            .collect();
        if crate::kernel::cross2(&c[0], &c[1], &c[2]).is_zero() {
            continue;
        }
        let w = Scalar::frac(rng.gen_range(1..=8), 8);
        let mut sets = Vec::with_capacity(3);
        for (a, b) in [(0, 1), (1, 2), (2, 0)] {
            let (p, q) = (&c[a], &c[b]);
            let ext = Scalar::frac(rng.gen_range(2..=8), 4);
            // a fat segment: hull of two small diamonds around extended endpoints
            let p2 = p.lerp(q, &(-ext.clone() / Scalar::int(4)));
            let q2 = q.lerp(p, &(-ext / Scalar::int(4)));
            let dx = Scalar::frac(rng.gen_range(0..=4), 8) * w.clone();
            let mut pts = Vec::new();
            for e in [&p2, &q2] {
                pts.push(Point2::new(e.x.clone() + w.clone(), e.y.clone() + dx.clone()));
                pts.push(Point2::new(e.x.clone() - w.clone(), e.y.clone() - dx.clone()));
                pts.push(Point2::new(e.x.clone(), e.y.clone() + w.clone()));
                pts.push(Point2::new(e.x.clone(), e.y.clone() - w.clone()));
            }
            sets.push(ConvexPoly2::hull(&pts).expect("nonempty"));
        }
        if family_class2(&sets) == FamilyClass::Strict2 {
            return [sets[0].clone(), sets[1].clone(), sets[2].clone()];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::{eight_color, extract_realizable, realize_case1, realize_case2, ChainKind};
    use crate::kernel::VLine2;
    use crate::poly2::Category;

    #[test]
    fn cap_family_triples_are_caps() {
        let inst = gen_cap_family2(3, &Scalar::frac(1, 10), 1).unwrap();
        let s = inst.polygons();
        let c = eight_color(&s[0], &s[1], &s[2]).unwrap();
        assert_eq!(c.category, Category::Cap);
    }

    #[test]
    fn huge_fatness_is_shrunk() {
        let inst = gen_cap_family2(5, &Scalar::int(1000), 2).unwrap();
        let used = inst.meta["fatness_used"].as_str().unwrap().to_string();
        assert_ne!(used, "1000");
    }

    #[test]
    fn case1_on_cap_family() {
        let inst = gen_cap_family2(5, &Scalar::frac(1, 10), 3).unwrap();
        let s = inst.polygons();
        let r = realize_case1(&s[1..4], &s[0], &s[4]).unwrap();
        assert_eq!(r.len(), 3);
        assert_eq!(r.kind, ChainKind::Cap);
    }

    #[test]
    fn full_extraction_on_cap_family() {
        for seed in 0..3 {
            let inst = gen_cap_family2(8, &Scalar::frac(1, 10), seed).unwrap();
            let r = extract_realizable(inst.polygons(), 8, crate::kernel::DEFAULT_BUDGET).unwrap().unwrap();
            assert_eq!(r.len(), 8, "seed {seed}");
        }
    }

    #[test]
    fn case2_on_flower() {
        let inst = gen_flower2(6, &Scalar::frac(1, 20), 4).unwrap();
        let s = inst.polygons();
        let r = realize_case2(&s[1..], &s[0], &VLine2 { x: Scalar::zero() }).unwrap();
        assert!(r.len() >= 2, "got {}", r.len());
    }
}
