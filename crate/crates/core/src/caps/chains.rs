//! Caps and cups of points and of lines.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::predicates::{line2_intersect, orient2, side_of_line, Orientation, Side};
use crate::kernel::scalar::{cmp, Field};
use crate::kernel::{Line2, Point2};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainKind {
    Cap,
    Cup,
}

impl ChainKind {
    pub fn flip(self) -> Self {
        match self {
            ChainKind::Cap => ChainKind::Cup,
            ChainKind::Cup => ChainKind::Cap,
        }
    }
}

fn check_points<T: Field>(seq: &[Point2<T>], want: Orientation) -> Result<bool> {
    if seq.len() < 3 {
        return Err(Error::PreViolated("need at least three points".into()));
    }
    if seq.windows(2).any(|w| w[0].x >= w[1].x) {
        return Err(Error::BadOrder);
    }
    let mut ok = true;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            for k in j + 1..seq.len() {
                match orient2(&seq[i], &seq[k], &seq[j]) {
                    Orientation::Collinear => return Err(Error::Degenerate(format!("points {i}, {j}, {k} are collinear"))),
                    o => ok &= o == want,
                }
            }
        }
    }
    Ok(ok)
}

/// Every middle point strictly above the segment of its neighbours.
pub fn is_cap_points<T: Field>(seq: &[Point2<T>]) -> Result<bool> {
    check_points(seq, Orientation::Ccw)
}

pub fn is_cup_points<T: Field>(seq: &[Point2<T>]) -> Result<bool> {
    check_points(seq, Orientation::Cw)
}

/// Reject equal slopes and concurrent triples.
pub fn check_generic_lines<T: Field>(lines: &[Line2<T>]) -> Result<()> {
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let x = line2_intersect(&lines[i], &lines[j])
                .map_err(|_| Error::Degenerate(format!("lines {i} and {j} have equal slopes")))?;
            for (k, l) in lines.iter().enumerate().skip(j + 1) {
                if side_of_line(&x, l) == Side::On {
                    return Err(Error::Degenerate(format!("lines {i}, {j}, {k} are concurrent")));
                }
            }
        }
    }
    Ok(())
}

/// Side of `lj` on which `li ∩ lk` lies; lines assumed generic.
fn triple_side<T: Field>(li: &Line2<T>, lj: &Line2<T>, lk: &Line2<T>) -> Side {
    side_of_line(&line2_intersect(li, lk).expect("distinct slopes"), lj)
}

/// Whether the ordered triple `(li, lj, lk)` satisfies the chain condition
/// of `kind` (slopes in chain order, `li ∩ lk` strictly on the right side of `lj`).
pub(crate) fn chain_triple<T: Field>(li: &Line2<T>, lj: &Line2<T>, lk: &Line2<T>, kind: ChainKind) -> bool {
    let (ordered, want) = match kind {
        ChainKind::Cap => (li.slope > lj.slope && lj.slope > lk.slope, Side::Pos),
        ChainKind::Cup => (li.slope < lj.slope && lj.slope < lk.slope, Side::Neg),
    };
    ordered && triple_side(li, lj, lk) == want
}

fn check_lines<T: Field>(seq: &[Line2<T>], kind: ChainKind) -> Result<bool> {
    if seq.len() < 3 {
        return Err(Error::PreViolated("need at least three lines".into()));
    }
    check_generic_lines(seq)?;
    let (order_ok, want) = match kind {
        ChainKind::Cap => (seq.windows(2).all(|w| w[0].slope > w[1].slope), Side::Pos),
        ChainKind::Cup => (seq.windows(2).all(|w| w[0].slope < w[1].slope), Side::Neg),
    };
    if !order_ok {
        return Ok(false);
    }
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            for k in j + 1..seq.len() {
                if triple_side(&seq[i], &seq[j], &seq[k]) != want {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Slopes strictly decreasing and each `li ∩ lk` strictly above `lj`.
pub fn is_cap_lines<T: Field>(seq: &[Line2<T>]) -> Result<bool> {
    check_lines(seq, ChainKind::Cap)
}

pub fn is_cup_lines<T: Field>(seq: &[Line2<T>]) -> Result<bool> {
    check_lines(seq, ChainKind::Cup)
}

/// Longest chain of one kind over lines pre-sorted along the chain direction.
/// Returns chains as index sequences into `lines`.
fn longest_of_kind<T: Field>(lines: &[Line2<T>], kind: ChainKind) -> Vec<usize> {
    let n = lines.len();
    if n <= 2 {
        let mut v: Vec<usize> = (0..n).collect();
        v.sort_by(|&a, &b| match kind {
            ChainKind::Cap => cmp(&lines[b].slope, &lines[a].slope),
            ChainKind::Cup => cmp(&lines[a].slope, &lines[b].slope),
        });
        return v;
    }
    // positions along the chain direction
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| match kind {
        ChainKind::Cap => cmp(&lines[b].slope, &lines[a].slope),
        ChainKind::Cup => cmp(&lines[a].slope, &lines[b].slope),
    });
    let want = match kind {
        ChainKind::Cap => Side::Pos,
        ChainKind::Cup => Side::Neg,
    };
    let l = |p: usize| &lines[order[p]];
    let valid = |a: usize, b: usize, c: usize| triple_side(l(a), l(b), l(c)) == want;
    // best[a][b]: longest chain starting with positions a < b
    let mut best = vec![vec![2usize; n]; n];
    for b in (0..n).rev() {
        for a in 0..b {
            let mut m = 2;
            for c in b + 1..n {
                if valid(a, b, c) {
                    m = m.max(best[b][c] + 1);
                }
            }
            best[a][b] = m;
        }
    }
    let target = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).map(|(a, b)| best[a][b]).max().unwrap_or(2);
    // greedy reconstruction by smallest original index
    let by_index = |cands: Vec<usize>| cands.into_iter().min_by_key(|&p| order[p]);
    let first = by_index((0..n).filter(|&a| (a + 1..n).any(|b| best[a][b] == target)).collect()).expect("start");
    let second = by_index((first + 1..n).filter(|&b| best[first][b] == target).collect()).expect("second");
    let mut chain = vec![first, second];
    let mut remaining = target - 2;
    while remaining > 0 {
        let (a, b) = (chain[chain.len() - 2], chain[chain.len() - 1]);
        let next = by_index((b + 1..n).filter(|&c| valid(a, b, c) && best[b][c] == remaining + 1).collect())
            .expect("continuation");
        chain.push(next);
        remaining -= 1;
    }
    chain.into_iter().map(|p| order[p]).collect()
}

/// A longest cap or cup among `lines`, as indices in chain order.
///
/// Ties go to the lexicographically smaller index sequence, then to caps.
pub fn longest_cap_or_cup<T: Field>(lines: &[Line2<T>]) -> Result<(Vec<usize>, ChainKind)> {
    check_generic_lines(lines)?;
    let cap = longest_of_kind(lines, ChainKind::Cap);
    let cup = longest_of_kind(lines, ChainKind::Cup);
    if cup.len() > cap.len() || (cup.len() == cap.len() && cup < cap) {
        Ok((cup, ChainKind::Cup))
    } else {
        Ok((cap, ChainKind::Cap))
    }
}

/// Exhaustive longest chain, for testing the dynamic program.
pub fn longest_cap_or_cup_brute<T: Field>(lines: &[Line2<T>]) -> usize {
    let n = lines.len();
    let mut best = n.min(2);
    for mask in 0u32..(1 << n) {
        let k = mask.count_ones() as usize;
        if k <= best {
            continue;
        }
        let mut sub: Vec<Line2<T>> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| lines[i].clone()).collect();
        sub.sort_by(|a, b| cmp(&b.slope, &a.slope));
        let cap = is_cap_lines(&sub).unwrap_or(false);
        sub.reverse();
        if cap || is_cup_lines(&sub).unwrap_or(false) {
            best = k;
        }
    }
    best
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
    fn point_chains() {
        assert!(is_cap_points(&[p(0, 0), p(1, 1), p(2, 0)]).unwrap());
        assert!(is_cup_points(&[p(0, 0), p(1, -1), p(2, 0)]).unwrap());
        assert!(matches!(is_cap_points(&[p(0, 0), p(1, 1), p(2, 2)]), Err(Error::Degenerate(_))));
        assert_eq!(is_cap_points(&[p(0, 0), p(0, 1), p(2, 0)]), Err(Error::BadOrder));
    }

    #[test]
    fn line_chains() {
        assert!(is_cap_lines(&[l(1, 0), l(0, 0), l(-1, 2)]).unwrap());
        assert!(is_cup_lines(&[l(-1, 0), l(0, 0), l(1, -2)]).unwrap());
        assert!(!is_cap_lines(&[l(0, 0), l(1, 0), l(-1, 2)]).unwrap());
        assert!(matches!(is_cap_lines(&[l(1, 0), l(1, 1), l(-1, 2)]), Err(Error::Degenerate(_))));
        assert!(matches!(is_cap_lines(&[l(1, 0), l(0, 0), l(-1, 0)]), Err(Error::Degenerate(_))));
    }

    #[test]
    fn longest_small() {
        let (idx, kind) = longest_cap_or_cup(&[l(1, 0), l(0, 0), l(-1, 2)]).unwrap();
        assert_eq!((idx, kind), (vec![0, 1, 2], ChainKind::Cap));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn lines(n: std::ops::Range<usize>) -> impl Strategy<Value = Vec<Line2<Q>>> {
            proptest::collection::vec((-30i64..30, -30i64..30, 1i64..4), n).prop_map(|v| {
                v.into_iter().map(|(m, c, d)| Line2::new(Q::frac(m, d), Q::frac(c, d + 1))).collect()
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]
            #[test]
            fn dp_matches_brute_force(ls in lines(3..9)) {
                if check_generic_lines(&ls).is_ok() {
                    let (idx, kind) = longest_cap_or_cup(&ls).unwrap();
                    prop_assert_eq!(idx.len(), longest_cap_or_cup_brute(&ls));
                    let chain: Vec<Line2<Q>> = idx.iter().map(|&i| ls[i].clone()).collect();
                    if chain.len() >= 3 {
                        let ok = match kind {
                            ChainKind::Cap => is_cap_lines(&chain).unwrap(),
                            ChainKind::Cup => is_cup_lines(&chain).unwrap(),
                        };
                        prop_assert!(ok);
                    }
                }
            }

            #[test]
            fn seven_generic_lines_have_a_4_chain(ls in lines(7..8)) {
                if check_generic_lines(&ls).is_ok() {
                    prop_assert!(longest_cap_or_cup(&ls).unwrap().0.len() >= 4);
                }
            }
        }
    }
}
