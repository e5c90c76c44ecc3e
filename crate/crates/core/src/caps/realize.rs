//! Extracting realizable subsequences from strictly 2-intersecting families.
//!
//! Case 1 (all triples caps) draws each line through the two corners of the
//! hole left by the set with the two extremes. Case 2 (vertical triples)
//! stacks the sets along a vertical line through a common partner `A` and
//! aims every line at the topmost set. Cups and the mirrored vertical case
//! are reduced to these by reflections.

use std::collections::BTreeMap;

use super::chains::{chain_triple, ChainKind};
use super::realization::{chord, order_and_check, Realization2, RealizationFailure};
use crate::error::{Error, Result};
use crate::kernel::predicates::{segments_intersect, Orientation};
use crate::kernel::ramsey::monochromatic_subset_shared;
use crate::kernel::scalar::{cmp, Field};
use crate::kernel::{Line2, Point2, VLine2};
use crate::poly2::hole::hole_region;
use crate::poly2::triple::analyze_intersections;
use crate::poly2::{analyze_triple, family_class2, poly_intersect2, Category, ConvexPoly2, FamilyClass};

/// One of the eight triple colors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Color8 {
    pub category: Category,
    pub orientation: Orientation,
}

pub fn eight_color<T: Field>(ki: &ConvexPoly2<T>, kj: &ConvexPoly2<T>, kk: &ConvexPoly2<T>) -> Result<Color8> {
    let t = analyze_triple(ki, kj, kk)?;
    Ok(Color8 { category: t.category, orientation: t.orientation })
}

fn failure<T>(r: std::result::Result<Realization2<T>, RealizationFailure>) -> Result<Realization2<T>> {
    r.map_err(|f| Error::VerifyFailed(format!("realization check: {f:?}")))
}

/// Whether `(A, K, B)` is a 3-cap with `A ∩ B` in the middle.
fn is_cap_around<T: Field>(a: &ConvexPoly2<T>, k: &ConvexPoly2<T>, b: &ConvexPoly2<T>) -> Result<Option<Orientation>> {
    let t = analyze_triple(a, k, b)?;
    if t.category != Category::Cap {
        return Ok(None);
    }
    let ak = poly_intersect2(a, k).expect("pairwise").x_range();
    let ab = poly_intersect2(a, b).expect("pairwise").x_range();
    let kb = poly_intersect2(k, b).expect("pairwise").x_range();
    Ok((ak.1 < ab.0 && ab.1 < kb.0).then_some(t.orientation))
}

/// Case 1: every `(A, K_j, B)` is a 3-cap of one orientation.
pub fn realize_case1<T: Field>(
    family: &[ConvexPoly2<T>],
    a: &ConvexPoly2<T>,
    b: &ConvexPoly2<T>,
) -> Result<Realization2<T>> {
    let mut all = vec![a.clone(), b.clone()];
    all.extend(family.iter().cloned());
    if family_class2(&all) != FamilyClass::Strict2 {
        return Err(Error::NotStrict2);
    }
    let mut orientation = None;
    let mut items = Vec::with_capacity(family.len());
    for (j, k) in family.iter().enumerate() {
        match (is_cap_around(a, k, b)?, orientation) {
            (None, _) => return Err(Error::PreViolated(format!("(A, K{j}, B) is not a 3-cap"))),
            (Some(o), Some(prev)) if o != prev => {
                return Err(Error::PreViolated(format!("(A, K{j}, B) has a different orientation")))
            }
            (Some(o), _) => orientation = Some(o),
        }
        let hole = hole_region(a, k, b)?;
        let (aj, bj) = (hole.corner(0, 1), hole.corner(1, 2));
        let line = Line2::through(aj, bj)?;
        items.push((k.clone(), line, j));
    }
    if items.len() <= 1 {
        let sets: Vec<_> = items.iter().map(|t| t.0.clone()).collect();
        let lines: Vec<_> = items.iter().map(|t| t.1.clone()).collect();
        return failure(super::realization::check_realization2(&sets, &lines));
    }
    items.sort_by(|x, y| cmp(&y.1.slope, &x.1.slope));
    let sets: Vec<_> = items.iter().map(|t| t.0.clone()).collect();
    let lines: Vec<_> = items.iter().map(|t| t.1.clone()).collect();
    let mut r = failure(super::realization::check_realization2(&sets, &lines))?;
    r.set_ids = items.iter().map(|t| t.2).collect();
    if r.kind != ChainKind::Cap && r.len() >= 3 {
        return Err(Error::VerifyFailed("case 1 produced a cup".into()));
    }
    Ok(r)
}

/// Lowest point of `K ∩ A` on the vertical line.
fn lowest_on_vline<T: Field>(ka: &ConvexPoly2<T>, v: &VLine2<T>) -> Option<Point2<T>> {
    // intersect with a vertical segment spanning the set
    let ys: Vec<T> = ka.vertices().iter().map(|p| p.y.clone()).collect();
    let lo = ys.iter().cloned().fold(ys[0].clone(), crate::kernel::scalar::min) - T::one();
    let hi = ys.iter().cloned().fold(ys[0].clone(), crate::kernel::scalar::max) + T::one();
    let seg = ConvexPoly2::segment(Point2::new(v.x.clone(), lo), Point2::new(v.x.clone(), hi));
    poly_intersect2(&seg, ka).map(|s| s.lexmin().clone())
}

/// Red/blue color of `j < h < k` (positions in ascending `a` order).
fn secondary_color<T: Field>(
    fam: &[ConvexPoly2<T>],
    a: &[Point2<T>],
    j: usize,
    h: usize,
    k: usize,
) -> Option<bool> {
    let seg = ConvexPoly2::segment(a[j].clone(), a[k].clone());
    let hole = hole_region(&seg, &fam[j], &fam[k]).ok()?;
    let meets = |arc: &[Point2<T>]| {
        arc.windows(2)
            .any(|w| poly_intersect2(&ConvexPoly2::segment(w[0].clone(), w[1].clone()), &fam[h]).is_some())
    };
    match (meets(&hole.arcs[1]), meets(&hole.arcs[2])) {
        (true, false) => Some(true),
        (false, true) => Some(false),
        _ => None,
    }
}

fn check_case2_pre<T: Field>(family: &[ConvexPoly2<T>], a: &ConvexPoly2<T>, v: &VLine2<T>) -> Result<Vec<Point2<T>>> {
    let mut pts = Vec::with_capacity(family.len());
    for (j, k) in family.iter().enumerate() {
        let ka = poly_intersect2(k, a).ok_or_else(|| Error::PreViolated(format!("K{j} misses A")))?;
        pts.push(lowest_on_vline(&ka, v).ok_or_else(|| Error::PreViolated(format!("v misses A ∩ K{j}")))?);
    }
    for j in 0..family.len() {
        for k in j + 1..family.len() {
            let jk = poly_intersect2(&family[j], &family[k])
                .ok_or_else(|| Error::PreViolated(format!("K{j} and K{k} are disjoint")))?;
            if jk.x_range().0 <= v.x {
                return Err(Error::PreViolated(format!("K{j} ∩ K{k} is not strictly right of v")));
            }
        }
    }
    let mut orientation = None;
    for j in 0..family.len() {
        for k in j + 1..family.len() {
            let t = analyze_triple(a, &family[j], &family[k])?;
            if t.category != Category::VLeft {
                return Err(Error::PreViolated(format!("(A, K{j}, K{k}) is not vertical-left")));
            }
            if *orientation.get_or_insert(t.orientation) != t.orientation {
                return Err(Error::PreViolated("mixed orientations".into()));
            }
        }
    }
    Ok(pts)
}

/// Case 2: `v` crosses every `A ∩ K_j` and all `K_j ∩ K_k` lie to its right.
/// Returns a realization of all but the topmost set of the largest
/// monochromatic (red/blue) subfamily found.
pub fn realize_case2<T: Field>(
    family: &[ConvexPoly2<T>],
    a: &ConvexPoly2<T>,
    v: &VLine2<T>,
) -> Result<Realization2<T>> {
    let mut budget = crate::kernel::DEFAULT_BUDGET;
    realize_case2_budgeted(family, a, v, &mut budget)
}

fn realize_case2_budgeted<T: Field>(
    family: &[ConvexPoly2<T>],
    a: &ConvexPoly2<T>,
    v: &VLine2<T>,
    budget: &mut u64,
) -> Result<Realization2<T>> {
    let pts = check_case2_pre(family, a, v)?;
    let mut order: Vec<usize> = (0..family.len()).collect();
    order.sort_by(|&i, &j| cmp(&pts[i].y, &pts[j].y));
    let fam: Vec<ConvexPoly2<T>> = order.iter().map(|&i| family[i].clone()).collect();
    let av: Vec<Point2<T>> = order.iter().map(|&i| pts[i].clone()).collect();
    let m = fam.len();
    if m < 2 {
        return Err(Error::PreViolated("need at least two sets".into()));
    }
    let mut colors = BTreeMap::new();
    for j in 0..m {
        for h in j + 1..m {
            for k in h + 1..m {
                colors.insert((j, h, k), secondary_color(&fam, &av, j, h, k));
            }
        }
    }
    let coloring = |s: &[usize]| colors[&(s[0], s[1], s[2])];
    let mut chosen: Option<(Vec<usize>, bool)> = None;
    if m == 2 {
        chosen = Some((vec![0, 1], true));
    }
    'sizes: for size in (3..=m).rev() {
        if chosen.is_some() {
            break;
        }
        for red in [true, false] {
            if let Some(s) = monochromatic_subset_shared(m, 3, coloring, size, Some(Some(red)), budget)? {
                chosen = Some((s, red));
                break 'sizes;
            }
        }
    }
    let Some((subset, red)) = chosen else {
        return Err(Error::PreViolated("no monochromatic secondary subset".into()));
    };
    if !red {
        // blue is red seen upside down
        let flip = |k: &ConvexPoly2<T>| k.reflect_y();
        let sub: Vec<ConvexPoly2<T>> = subset.iter().map(|&i| flip(&fam[i])).collect();
        let r = realize_red(&sub, &a.reflect_y(), v)?;
        let items = r
            .set_ids
            .iter()
            .zip(&r.lines)
            .map(|(&i, l)| {
                let orig = order[subset[i]];
                (family[orig].clone(), Line2::new(-l.slope.clone(), -l.intercept.clone()), orig)
            })
            .collect();
        return failure(order_and_check(items));
    }
    let sub: Vec<ConvexPoly2<T>> = subset.iter().map(|&i| fam[i].clone()).collect();
    let mut r = realize_red(&sub, a, v)?;
    r.set_ids = r.set_ids.iter().map(|&i| order[subset[i]]).collect();
    Ok(r)
}

/// Lines `a_j b_j` aimed at the topmost set of a red subfamily.
fn realize_red<T: Field>(sub: &[ConvexPoly2<T>], a: &ConvexPoly2<T>, v: &VLine2<T>) -> Result<Realization2<T>> {
    let pts = check_case2_pre(sub, a, v)?;
    let mut order: Vec<usize> = (0..sub.len()).collect();
    order.sort_by(|&i, &j| cmp(&pts[i].y, &pts[j].y));
    let top = *order.last().expect("nonempty");
    let mut items = Vec::new();
    for &j in &order[..order.len() - 1] {
        let bj = poly_intersect2(&sub[top], &sub[j]).expect("pairwise").lexmin().clone();
        items.push((sub[j].clone(), Line2::through(&pts[j], &bj)?, j));
    }
    let sets: Vec<_> = items.iter().map(|t| t.0.clone()).collect();
    let lines: Vec<_> = items.iter().map(|t| t.1.clone()).collect();
    let mut r = failure(super::realization::check_realization2(&sets, &lines))?;
    r.set_ids = items.iter().map(|t| t.2).collect();
    Ok(r)
}

/// Candidate lines through points of `k`, most spread-out pairs first.
fn candidate_lines<T: Field>(pts: &[Point2<T>]) -> Vec<Line2<T>> {
    let mut pairs = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let (dx, dy) = pts[j].sub(&pts[i]);
            pairs.push((dx.clone() * dx + dy.clone() * dy, i, j));
        }
    }
    pairs.sort_by(|x, y| cmp(&y.0, &x.0));
    pairs
        .into_iter()
        .filter_map(|(_, i, j)| Line2::through(&pts[i], &pts[j]).ok())
        .collect()
}

/// Ways to extend a realization by a line for `extra` crossing all chords.
///
/// Lines through points where the existing lines pass through `extra` come
/// first, then lines through corners of the pairwise intersections.
fn augmentations<'a, T: Field>(
    r: &'a Realization2<T>,
    extra: &'a ConvexPoly2<T>,
    extra_id: usize,
) -> impl Iterator<Item = Realization2<T>> + 'a {
    let mut near: Vec<Point2<T>> = Vec::new();
    let mut far: Vec<Point2<T>> = Vec::new();
    for (k, l) in r.sets.iter().zip(&r.lines) {
        if let Some(x) = poly_intersect2(k, extra) {
            if let Some(s) = chord(&x, l) {
                near.push(s.centroid());
                near.extend(s.vertices().iter().cloned());
            }
            far.push(x.centroid());
            far.extend(x.vertices().iter().cloned());
        }
    }
    near.sort_by(|a, b| a.lex_cmp(b));
    near.dedup();
    let mut lines = candidate_lines(&near);
    if lines.len() < 400 {
        near.extend(far);
        near.sort_by(|a, b| a.lex_cmp(b));
        near.dedup();
        lines.extend(candidate_lines(&near));
    }
    lines.into_iter().take(400).filter_map(move |line| extend(r, extra, extra_id, line))
}

/// `r` with one more set and line, checking only the conditions that
/// involve the new line.
fn extend<T: Field>(r: &Realization2<T>, extra: &ConvexPoly2<T>, extra_id: usize, line: Line2<T>) -> Option<Realization2<T>> {
    let seg = chord(extra, &line)?;
    if r.len() < 3 {
        let mut items: Vec<_> = r
            .sets
            .iter()
            .zip(&r.lines)
            .zip(&r.set_ids)
            .map(|((k, l), &id)| (k.clone(), l.clone(), id))
            .collect();
        items.push((extra.clone(), line, extra_id));
        return order_and_check(items).ok();
    }
    let ends = |s: &ConvexPoly2<T>| {
        let v = s.vertices();
        (v[0].clone(), v[v.len() - 1].clone())
    };
    let (a, b) = ends(&seg);
    if !r.segments.iter().all(|s| {
        let (c, d) = ends(s);
        segments_intersect(&a, &b, &c, &d)
    }) {
        return None;
    }
    let pos = match r.kind {
        ChainKind::Cap => r.lines.iter().position(|l| l.slope < line.slope),
        ChainKind::Cup => r.lines.iter().position(|l| l.slope > line.slope),
    }
    .unwrap_or(r.len());
    let mut lines = r.lines.clone();
    lines.insert(pos, line);
    let n = lines.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if (i == pos || j == pos || k == pos) && !chain_triple(&lines[i], &lines[j], &lines[k], r.kind) {
                    return None;
                }
            }
        }
    }
    let mut out = r.clone();
    out.lines = lines;
    out.sets.insert(pos, extra.clone());
    out.segments.insert(pos, seg);
    out.set_ids.insert(pos, extra_id);
    Some(out)
}

/// Add as many of `extras` as possible, backtracking over a few choices
/// for each.
fn augment_all<T: Field>(r: Realization2<T>, fam: &[ConvexPoly2<T>], extras: &[usize]) -> Realization2<T> {
    let Some((&first, rest)) = extras.split_first() else {
        return r;
    };
    let mut best: Option<Realization2<T>> = None;
    for bigger in augmentations(&r, &fam[first], first).take(3) {
        let out = augment_all(bigger, fam, rest);
        if out.len() == r.len() + extras.len() {
            return out;
        }
        if best.as_ref().is_none_or(|b| out.len() > b.len()) {
            best = Some(out);
        }
    }
    let skipped = augment_all(r, fam, rest);
    match best {
        Some(b) if b.len() >= skipped.len() => b,
        _ => skipped,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mirror {
    None,
    Y,
    X,
}

fn mirror<T: Field>(k: &ConvexPoly2<T>, m: Mirror) -> ConvexPoly2<T> {
    match m {
        Mirror::None => k.clone(),
        Mirror::Y => k.reflect_y(),
        Mirror::X => k.reflect_x(),
    }
}

fn unmirror_line<T: Field>(l: &Line2<T>, m: Mirror) -> Line2<T> {
    match m {
        Mirror::None => l.clone(),
        Mirror::Y => Line2::new(-l.slope.clone(), -l.intercept.clone()),
        Mirror::X => Line2::new(-l.slope.clone(), l.intercept.clone()),
    }
}

/// Case 1 on a subfamily whose triples are all caps (in the mirrored frame).
fn dispatch_cap<T: Field>(fam: &[ConvexPoly2<T>], subset: &[usize]) -> Option<Realization2<T>> {
    // count, for each ordered pair (A, B), the sets K with (A, K, B) a cap
    // around A ∩ B; every triple of the subset is a cap, so only the order of
    // the pairwise intersections along x matters
    let mut ranges: BTreeMap<(usize, usize), (T, T)> = BTreeMap::new();
    for (x, &i) in subset.iter().enumerate() {
        for &j in &subset[x + 1..] {
            let r = poly_intersect2(&fam[i], &fam[j])?.x_range();
            ranges.insert((i.min(j), i.max(j)), r);
        }
    }
    let range = |i: usize, j: usize| &ranges[&(i.min(j), i.max(j))];
    let mut counts: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (x, &i) in subset.iter().enumerate() {
        for (y, &j) in subset.iter().enumerate().skip(x + 1) {
            for &k in &subset[y + 1..] {
                for (a, mid, b) in [(i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)] {
                    if range(a, mid).1 < range(a, b).0 && range(a, b).1 < range(mid, b).0 {
                        counts.entry((a, b)).or_default().push(mid);
                    }
                }
            }
        }
    }
    let best = counts.values().map(|v| v.len()).max()?;
    let mut pairs: Vec<_> = counts.into_iter().filter(|(_, v)| v.len() == best).collect();
    pairs.sort_by_key(|((a, b), _)| (*a.min(b), *a.max(b), *a));
    let ((a, b), mut mids) = pairs.into_iter().next()?;
    mids.sort_unstable();
    mids.dedup();
    let sub: Vec<ConvexPoly2<T>> = mids.iter().map(|&i| fam[i].clone()).collect();
    let mut r = realize_case1(&sub, &fam[a], &fam[b]).ok()?;
    r.set_ids = r.set_ids.iter().map(|&i| mids[i]).collect();
    Some(augment_all(r, fam, &[a, b]))
}

/// Case 2 on a vertical-left subfamily: choose `A` and the deepest vertical line.
fn dispatch_vleft<T: Field>(fam: &[ConvexPoly2<T>], subset: &[usize], budget: &mut u64) -> Result<Option<Realization2<T>>> {
    let mut best: Option<(usize, T, Vec<usize>)> = None;
    for &a in subset {
        let others: Vec<(usize, (T, T))> = subset
            .iter()
            .filter(|&&k| k != a)
            .filter_map(|&k| poly_intersect2(&fam[a], &fam[k]).map(|x| (k, x.x_range())))
            .collect();
        let mut xs: Vec<T> = others.iter().map(|(_, r)| r.0.clone()).collect();
        xs.sort_by(cmp);
        xs.dedup();
        for x in xs {
            let mut members: Vec<usize> = others
                .iter()
                .filter(|(_, r)| r.0 <= x && x <= r.1)
                .map(|(k, _)| *k)
                .collect();
            // drop sets whose pairwise intersections reach the line
            loop {
                let conflicts: Vec<usize> = members
                    .iter()
                    .map(|&j| {
                        members
                            .iter()
                            .filter(|&&k| k != j)
                            .filter(|&&k| poly_intersect2(&fam[j], &fam[k]).is_none_or(|p| p.x_range().0 <= x))
                            .count()
                    })
                    .collect();
                match conflicts.iter().enumerate().max_by_key(|(i, c)| (**c, std::cmp::Reverse(*i))) {
                    Some((i, &c)) if c > 0 => {
                        members.remove(i);
                    }
                    _ => break,
                }
            }
            if best.as_ref().is_none_or(|b| members.len() > b.2.len()) {
                best = Some((a, x, members));
            }
        }
    }
    let Some((a, x, members)) = best else {
        return Ok(None);
    };
    if members.len() < 2 {
        return Ok(None);
    }
    let sub: Vec<ConvexPoly2<T>> = members.iter().map(|&i| fam[i].clone()).collect();
    match realize_case2_budgeted(&sub, &fam[a], &VLine2 { x }, budget) {
        Ok(mut r) => {
            r.set_ids = r.set_ids.iter().map(|&i| members[i]).collect();
            Ok(Some(r))
        }
        Err(Error::BudgetExceeded(b)) => Err(Error::BudgetExceeded(b)),
        Err(_) => Ok(None),
    }
}

/// Search the family for a realization of length at least `n`.
pub fn extract_realizable<T: Field>(family: &[ConvexPoly2<T>], n: usize, budget: u64) -> Result<Option<Realization2<T>>> {
    if n < 3 {
        return Err(Error::PreViolated("target length must be at least 3".into()));
    }
    if family_class2(family) != FamilyClass::Strict2 {
        return Err(Error::NotStrict2);
    }
    let size = family.len();
    if size < n {
        return Ok(None);
    }
    let mut table: BTreeMap<(usize, usize, usize), Option<Color8>> = BTreeMap::new();
    let mut tally: BTreeMap<Color8, usize> = BTreeMap::new();
    let mut meets: BTreeMap<(usize, usize), ConvexPoly2<T>> = BTreeMap::new();
    for i in 0..size {
        for j in i + 1..size {
            meets.insert((i, j), poly_intersect2(&family[i], &family[j]).expect("pairwise intersecting"));
        }
    }
    for i in 0..size {
        for j in i + 1..size {
            for k in j + 1..size {
                let c = analyze_intersections(&meets[&(i, j)], &meets[&(j, k)], &meets[&(i, k)])
                    .ok()
                    .map(|t| Color8 { category: t.category, orientation: t.orientation });
                if let Some(c) = c {
                    *tally.entry(c).or_default() += 1;
                }
                table.insert((i, j, k), c);
            }
        }
    }
    let mut colors: Vec<(Color8, usize)> = tally.into_iter().collect();
    colors.sort_by(|x, y| y.1.cmp(&x.1).then(x.0.cmp(&y.0)));
    let coloring = |s: &[usize]| table[&(s[0], s[1], s[2])];
    let mut budget = budget;
    for m in (n..=size).rev() {
        let need = m * (m - 1) * (m - 2) / 6;
        for &(color, count) in &colors {
            if count < need {
                continue;
            }
            let Some(subset) = monochromatic_subset_shared(size, 3, coloring, m, Some(Some(color)), &mut budget)? else {
                continue;
            };
            let mirror_kind = match color.category {
                Category::Cap | Category::VLeft => Mirror::None,
                Category::Cup => Mirror::Y,
                Category::VRight => Mirror::X,
            };
            let fam: Vec<ConvexPoly2<T>> = family.iter().map(|k| mirror(k, mirror_kind)).collect();
            let found = match color.category {
                Category::Cap | Category::Cup => dispatch_cap(&fam, &subset),
                Category::VLeft | Category::VRight => dispatch_vleft(&fam, &subset, &mut budget)?,
            };
            let Some(r) = found else {
                continue;
            };
            let items = r
                .set_ids
                .iter()
                .zip(&r.lines)
                .map(|(&id, l)| (family[id].clone(), unmirror_line(l, mirror_kind), id))
                .collect();
            if let Ok(back) = order_and_check(items) {
                if back.len() >= n {
                    return Ok(Some(back));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;
    fn p(x: i64, y: i64) -> Point2<Q> {
        Point2::new(Q::int(x), Q::int(y))
    }

    #[test]
    fn eight_colors_of_small_families() {
        let k1 = ConvexPoly2::segment(p(0, 0), p(4, 0));
        let k2 = ConvexPoly2::segment(p(0, 0), p(2, 4));
        let k3 = ConvexPoly2::segment(p(4, 0), p(2, 4));
        let c = eight_color(&k1, &k2, &k3).unwrap();
        assert_eq!((c.category, c.orientation), (Category::Cap, Orientation::Cw));
        let c = eight_color(&k1.reflect_y(), &k2.reflect_y(), &k3.reflect_y()).unwrap();
        assert_eq!((c.category, c.orientation), (Category::Cup, Orientation::Ccw));
        let ki = ConvexPoly2::segment(p(0, 0), p(0, 2));
        let kj = ConvexPoly2::segment(p(0, 0), p(3, 0));
        let kk = ConvexPoly2::segment(p(0, 2), p(3, 0));
        let c = eight_color(&ki, &kj, &kk).unwrap();
        // witnesses (0,0), (3,0), (0,2)
        assert_eq!((c.category, c.orientation), (Category::VLeft, Orientation::Ccw));
    }
}
