//! Tiling as a perfect matching between left and right triangles.
//!
//! Only the non-overlap condition can be expressed this way: two triangles
//! may be paired when they share an edge that is neither on the boundary nor
//! constrained. The result may well break the saliency condition.

use std::collections::BTreeSet;
use std::fmt;

use crate::grid::{Calisson, Chirality, GridEdge};
use crate::region::Region;
use crate::tiling::Tiling;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NoPerfectMatching {
    pub matched: usize,
    pub needed: usize,
}

impl fmt::Display for NoPerfectMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "maximum matching covers {} of {} triangle pairs", self.matched, self.needed)
    }
}

/// Kuhn's augmenting-path algorithm over left triangles in index order.
pub fn matching_solve(region: &Region, x: &BTreeSet<GridEdge>) -> Result<Tiling, NoPerfectMatching> {
    let tris = region.triangles();
    let (left_count, right_count) = region.chirality_counts();
    let lefts: Vec<usize> = (0..tris.len()).filter(|&i| tris[i].chirality == Chirality::Left).collect();
    let adj: Vec<Vec<(usize, GridEdge)>> = lefts
        .iter()
        .map(|&i| {
            tris[i]
                .edges()
                .into_iter()
                .filter(|e| region.is_interior_edge(*e) && !x.contains(e))
                .map(|e| (region.triangle_index(tris[i].across(e)).unwrap(), e))
                .collect()
        })
        .collect();

    let mut mate: Vec<Option<(usize, GridEdge)>> = vec![None; tris.len()];
    let mut matched = 0;
    for l in 0..lefts.len() {
        let mut seen = vec![false; tris.len()];
        if augment(l, &adj, &mut mate, &mut seen) {
            matched += 1;
        }
    }
    let needed = left_count.max(right_count);
    if matched < needed || left_count != right_count {
        return Err(NoPerfectMatching { matched, needed });
    }
    Ok(mate.into_iter().flatten().map(|(_, e)| Calisson::across(e)).collect())
}

fn augment(l: usize, adj: &[Vec<(usize, GridEdge)>], mate: &mut [Option<(usize, GridEdge)>], seen: &mut [bool]) -> bool {
    for &(r, e) in &adj[l] {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        let free = match mate[r] {
            None => true,
            Some((other, _)) => augment(other, adj, mate, seen),
        };
        if free {
            mate[r] = Some((l, e));
            return true;
        }
    }
    false
}
