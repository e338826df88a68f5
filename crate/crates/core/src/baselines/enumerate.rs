//! Exhaustive tiling enumeration by backtracking.
//!
//! The lowest-indexed uncovered triangle is always covered next, trying its
//! edges in order. Saliency is checked as soon as both sides of a
//! constrained edge are covered; every emitted tiling is re-validated with
//! [`check_with`].

use std::collections::BTreeSet;

use crate::grid::{Calisson, GridEdge};
use crate::region::Region;
use crate::tiling::{check_with, Rules, Tiling};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub tilings: Vec<Tiling>,
    /// The limit stopped the search before it was exhausted.
    pub truncated: bool,
}

struct Board<'a> {
    region: &'a Region,
    x: &'a BTreeSet<GridEdge>,
    rules: Rules,
    /// Per triangle: candidate calissons and the other triangle they cover.
    options: Vec<Vec<(Calisson, usize)>>,
    /// Per triangle: constrained edges on its border, as triangle pairs.
    watched: Vec<Vec<(usize, usize)>>,
    cover: Vec<Option<Calisson>>,
}

impl<'a> Board<'a> {
    fn new(region: &'a Region, x: &'a BTreeSet<GridEdge>, rules: Rules) -> Self {
        let n = region.triangles().len();
        let mut options = vec![Vec::new(); n];
        let mut watched = vec![Vec::new(); n];
        for (i, t) in region.triangles().iter().enumerate() {
            for e in t.edges() {
                if !region.is_interior_edge(e) {
                    continue;
                }
                let j = region.triangle_index(t.across(e)).unwrap();
                if x.contains(&e) {
                    if rules.saliency {
                        watched[i].push((i, j));
                    }
                    if rules.non_overlap {
                        continue;
                    }
                }
                options[i].push((Calisson::across(e), j));
            }
        }
        Board { region, x, rules, options, watched, cover: vec![None; n] }
    }

    fn salient_around(&self, i: usize) -> bool {
        self.watched[i].iter().all(|&(a, b)| match (self.cover[a], self.cover[b]) {
            (Some(p), Some(q)) => p == q || p.normal != q.normal,
            _ => true,
        })
    }

    /// Returns false once `visit` asks to stop.
    fn search(&mut self, from: usize, visit: &mut dyn FnMut(Tiling) -> bool) -> bool {
        let Some(i) = (from..self.cover.len()).find(|&i| self.cover[i].is_none()) else {
            let t: Tiling = self.cover.iter().map(|c| c.unwrap()).collect();
            debug_assert!(check_with(self.region, self.x, &t, self.rules).is_empty());
            return visit(t);
        };
        for k in 0..self.options[i].len() {
            let (c, j) = self.options[i][k];
            if self.cover[j].is_some() {
                continue;
            }
            self.cover[i] = Some(c);
            self.cover[j] = Some(c);
            let ok = self.salient_around(i) && self.salient_around(j);
            let go_on = !ok || self.search(i + 1, visit);
            self.cover[i] = None;
            self.cover[j] = None;
            if !go_on {
                return false;
            }
        }
        true
    }
}

/// All tilings of `region` satisfying both puzzle conditions for `x`, in
/// deterministic order, up to `limit`.
pub fn enumerate(region: &Region, x: &BTreeSet<GridEdge>, limit: Option<usize>) -> Enumeration {
    enumerate_with(region, x, Rules::ALL, limit)
}

/// As [`enumerate`], enforcing only the chosen conditions.
pub fn enumerate_with(region: &Region, x: &BTreeSet<GridEdge>, rules: Rules, limit: Option<usize>) -> Enumeration {
    let mut board = Board::new(region, x, rules);
    let mut tilings = Vec::new();
    let mut truncated = false;
    board.search(0, &mut |t| {
        if limit.is_some_and(|l| tilings.len() >= l) {
            truncated = true;
            return false;
        }
        tilings.push(t);
        true
    });
    Enumeration { tilings, truncated }
}

/// Number of valid tilings, without storing them.
pub fn count_tilings(region: &Region, x: &BTreeSet<GridEdge>, rules: Rules) -> u64 {
    let mut board = Board::new(region, x, rules);
    let mut n = 0u64;
    board.search(0, &mut |_| {
        n += 1;
        true
    });
    n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{GridVertex, Triangle};
    use crate::tiling::check;

    #[test]
    fn hexagon_counts() {
        let none = BTreeSet::new();
        let one = enumerate(&Region::hexagon(1).unwrap(), &none, None);
        assert_eq!(one.tilings.len(), 2);
        assert!(!one.truncated);
        assert_eq!(count_tilings(&Region::hexagon(2).unwrap(), &none, Rules::ALL), 20);
    }

    #[test]
    fn enclosed_triangle_has_no_tiling() {
        let r = Region::hexagon(2).unwrap();
        let x: BTreeSet<GridEdge> = Triangle::left(0, 0).edges().into_iter().collect();
        assert_eq!(enumerate(&r, &x, None).tilings, vec![]);
    }

    #[test]
    fn limit_truncates() {
        let r = Region::hexagon(2).unwrap();
        let e = enumerate(&r, &BTreeSet::new(), Some(5));
        assert_eq!(e.tilings.len(), 5);
        assert!(e.truncated);
    }

    #[test]
    fn enumerated_tilings_are_distinct_and_valid() {
        let r = Region::hexagon(2).unwrap();
        let x = BTreeSet::from([GridEdge::new(GridVertex::new(0, 0), crate::grid::Axis::Y)]);
        let e = enumerate(&r, &x, None);
        let distinct: BTreeSet<_> = e.tilings.iter().map(Tiling::to_json).collect();
        assert_eq!(distinct.len(), e.tilings.len());
        for t in &e.tilings {
            assert_eq!(check(&r, &x, t), vec![]);
        }
        let loose = count_tilings(&r, &x, Rules::NON_OVERLAP);
        assert!(loose >= e.tilings.len() as u64);
    }
}
