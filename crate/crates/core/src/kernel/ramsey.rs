//! Exhaustive monochromatic-subset search (a desk-scale Ramsey witness).

use crate::error::{Error, Result};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Find an `m`-subset of `0..ground` whose `k`-subsets all share one color.
///
/// Subsets are visited in colex order and a partial subset is only extended
/// while it stays monochromatic. `coloring` receives index sets in ascending
/// order. `budget` bounds the number of visited partial subsets.
pub fn monochromatic_subset<C, F>(
    ground: usize,
    k: usize,
    coloring: F,
    m: usize,
    budget: u64,
) -> Result<Option<Vec<usize>>>
where
    C: PartialEq + Clone,
    F: FnMut(&[usize]) -> C,
{
    search(ground, k, coloring, m, budget, None)
}

/// As [`monochromatic_subset`], but every `k`-subset must have color `target`.
pub fn monochromatic_subset_of_color<C, F>(
    ground: usize,
    k: usize,
    coloring: F,
    m: usize,
    target: C,
    budget: u64,
) -> Result<Option<Vec<usize>>>
where
    C: PartialEq + Clone,
    F: FnMut(&[usize]) -> C,
{
    search(ground, k, coloring, m, budget, Some(target))
}

/// Variant drawing on a shared budget that is decremented by the visits made.
pub fn monochromatic_subset_shared<C, F>(
    ground: usize,
    k: usize,
    coloring: F,
    m: usize,
    target: Option<C>,
    budget: &mut u64,
) -> Result<Option<Vec<usize>>>
where
    C: PartialEq + Clone,
    F: FnMut(&[usize]) -> C,
{
    let (found, visited) = search_counted(ground, k, coloring, m, *budget, target);
    *budget = budget.saturating_sub(visited);
    found
}

struct Search<C, F> {
    k: usize,
    m: usize,
    coloring: F,
    budget: u64,
    visited: u64,
    target: Option<C>,
    // Chosen elements, largest first.
    chosen: Vec<usize>,
}

fn search<C, F>(
    ground: usize,
    k: usize,
    coloring: F,
    m: usize,
    budget: u64,
    target: Option<C>,
) -> Result<Option<Vec<usize>>>
where
    C: PartialEq + Clone,
    F: FnMut(&[usize]) -> C,
{
    search_counted(ground, k, coloring, m, budget, target).0
}

fn search_counted<C, F>(
    ground: usize,
    k: usize,
    coloring: F,
    m: usize,
    budget: u64,
    target: Option<C>,
) -> (Result<Option<Vec<usize>>>, u64)
where
    C: PartialEq + Clone,
    F: FnMut(&[usize]) -> C,
{
    if k == 0 || k > m || m > ground {
        return (Ok(None), 0);
    }
    let mut s = Search { k, m, coloring, budget, visited: 0, target, chosen: Vec::with_capacity(m) };
    let found = s.extend(ground, None);
    let out = found.map(|f| {
        f.then(|| {
            let mut v = s.chosen.clone();
            v.reverse();
            v
        })
    });
    (out, s.visited)
}

impl<C: PartialEq + Clone, F: FnMut(&[usize]) -> C> Search<C, F> {
    /// Try elements below `bound`, in ascending order, as the next (smaller) member.
    fn extend(&mut self, bound: usize, color: Option<C>) -> Result<bool> {
        if self.chosen.len() == self.m {
            return Ok(true);
        }
        let need = self.m - self.chosen.len();
        for e in (need - 1)..bound {
            self.visited += 1;
            if self.visited > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            let mut color = color.clone().or_else(|| self.target.clone());
            if !self.compatible(e, &mut color) {
                continue;
            }
            self.chosen.push(e);
            if self.extend(e, color)? {
                return Ok(true);
            }
            self.chosen.pop();
        }
        Ok(false)
    }

    /// Whether every new `k`-subset through `e` matches `color` (fixing it if unset).
    fn compatible(&mut self, e: usize, color: &mut Option<C>) -> bool {
        let s = self.chosen.len();
        if s + 1 < self.k {
            return true;
        }
        let mut idx: Vec<usize> = (0..self.k - 1).collect();
        let mut subset = vec![0; self.k];
        loop {
            subset[0] = e;
            for (t, &i) in idx.iter().enumerate() {
                // chosen is descending; reverse the picks to keep ascending order
                subset[self.k - 1 - t] = self.chosen[i];
            }
            let c = (self.coloring)(&subset);
            match color {
                Some(want) if *want != c => return false,
                Some(_) => {}
                None => *color = Some(c),
            }
            if !next_combination(&mut idx, s) {
                return true;
            }
        }
    }
}

/// Advance `idx` to the next ascending combination of `0..n`; false when done.
pub fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let r = idx.len();
    if r == 0 {
        return false;
    }
    let mut i = r;
    while i > 0 {
        i -= 1;
        if idx[i] < n - r + i {
            idx[i] += 1;
            for j in i + 1..r {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_subsets(n: usize, m: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut idx: Vec<usize> = (0..m).collect();
        loop {
            out.push(idx.clone());
            if !next_combination(&mut idx, n) {
                return out;
            }
        }
    }

    #[test]
    fn constant_and_single_edge() {
        let r = monochromatic_subset(4, 2, |_| 0u8, 4, DEFAULT_BUDGET).unwrap();
        assert_eq!(r, Some(vec![0, 1, 2, 3]));
        let r = monochromatic_subset(3, 3, |s| s[0] + s[2], 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(r, Some(vec![0, 1, 2]));
    }

    #[test]
    fn parity_coloring() {
        let r = monochromatic_subset(6, 2, |s| (s[0] + s[1]) % 2, 3, DEFAULT_BUDGET)
            .unwrap()
            .unwrap();
        // brute force: the monochromatic triples are exactly the same-parity ones
        for t in all_subsets(6, 3) {
            let same = t.iter().all(|&i| i % 2 == t[0] % 2);
            let mono = all_subsets(3, 2)
                .iter()
                .map(|p| (t[p[0]] + t[p[1]]) % 2)
                .collect::<Vec<_>>()
                .windows(2)
                .all(|w| w[0] == w[1]);
            assert_eq!(same, mono);
        }
        assert!(r.iter().all(|&i| i % 2 == r[0] % 2));
        assert_eq!(r, vec![0, 2, 4]);
    }

    #[test]
    fn none_and_budget() {
        // a 2-coloring of K5 without monochromatic triangles
        let c = |s: &[usize]| {
            let d = (s[1] - s[0]) % 5;
            d == 1 || d == 4
        };
        assert_eq!(monochromatic_subset(5, 2, c, 3, DEFAULT_BUDGET).unwrap(), None);
        assert_eq!(
            monochromatic_subset(40, 2, |s| s[0] % 2 == 0, 30, 1000),
            Err(Error::BudgetExceeded(1000))
        );
    }

    #[test]
    fn target_color() {
        let r = monochromatic_subset_of_color(6, 2, |s| (s[0] + s[1]) % 2, 3, 0, DEFAULT_BUDGET);
        assert_eq!(r.unwrap(), Some(vec![0, 2, 4]));
        let r = monochromatic_subset_of_color(6, 2, |s| (s[0] + s[1]) % 2, 3, 1, DEFAULT_BUDGET);
        assert_eq!(r.unwrap(), None);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn output_is_monochromatic_and_matches_brute_force(
                table in proptest::collection::vec(0u8..2, 120), n in 4usize..8, m in 3usize..5
            ) {
                let col = |s: &[usize]| table[(s[0] * 7 + s[1] * 3 + s[2]) % 120];
                let got = monochromatic_subset(n, 3, col, m, DEFAULT_BUDGET).unwrap();
                let brute = all_subsets(n, m).into_iter().find(|set| {
                    let cols: Vec<u8> = all_subsets(m, 3)
                        .iter()
                        .map(|t| col(&[set[t[0]], set[t[1]], set[t[2]]]))
                        .collect();
                    cols.iter().all(|&c| c == cols[0])
                });
                prop_assert_eq!(got.is_some(), brute.is_some());
                if let Some(set) = got {
                    let cols: Vec<u8> = all_subsets(m, 3)
                        .iter()
                        .map(|t| col(&[set[t[0]], set[t[1]], set[t[2]]]))
                        .collect();
                    prop_assert!(cols.iter().all(|&c| c == cols[0]));
                }
            }
        }
    }
}
