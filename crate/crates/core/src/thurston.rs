//! Extreme tilings of a region without constraint edges.
//!
//! Boundary heights are fixed by walking the contour. The highest surface is
//! then the pointwise smallest function reachable from the boundary by
//! ascending steps, which a multi-source Dijkstra computes by always
//! settling a lowest vertex first; the lowest surface is the mirror image.
//! A boundary vertex reached below its own boundary height means no tiling
//! exists.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use crate::error::Error;
use crate::grid::GridVertex;
use crate::region::Region;
use crate::tiling::{tiling_from_distances, HeightField, Tiling};
use crate::Height;

/// Why a region has no tiling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obstruction {
    /// The contour walk does not come back to its starting height.
    Closure { residual: Height },
    /// A boundary vertex is forced both to its boundary height and to a
    /// strictly smaller (or, for the lower pass, larger) one.
    Decimation { at: GridVertex, boundary: Height, reached: Height },
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obstruction::Closure { residual } => {
                write!(f, "boundary heights do not close (residual {residual})")
            }
            Obstruction::Decimation { at, boundary, reached } => {
                write!(f, "boundary vertex {at} has height {boundary} but is reached at {reached}")
            }
        }
    }
}

impl From<Obstruction> for Error {
    fn from(o: Obstruction) -> Self {
        Error::Untilable { reason: o.to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extremes {
    pub min: Tiling,
    pub max: Tiling,
    pub min_heights: HeightField,
    pub max_heights: HeightField,
}

/// Boundary height of every contour vertex copy, indexed by vertex.
fn boundary_sources(region: &Region) -> Result<Vec<Option<Height>>, Obstruction> {
    let (heights, residual) = region.boundary_heights();
    if residual != 0 {
        return Err(Obstruction::Closure { residual });
    }
    let mut fixed = vec![None; region.vertex_count()];
    for (i, &node) in region.contour().iter().enumerate() {
        match fixed[node] {
            Some(h) if h != heights[i] => {
                return Err(Obstruction::Decimation {
                    at: region.vertices()[node],
                    boundary: h,
                    reached: heights[i],
                })
            }
            _ => fixed[node] = Some(heights[i]),
        }
    }
    Ok(fixed)
}

/// Multi-source Dijkstra over ascending arcs (`upward`) or their reversals.
/// Ties are settled in vertex order.
fn sweep(region: &Region, fixed: &[Option<Height>], upward: bool) -> Result<Vec<Height>, Obstruction> {
    let sign = if upward { 1 } else { -1 };
    let n = region.vertex_count();
    let mut dist: Vec<Option<Height>> = vec![None; n];
    let mut heap = BinaryHeap::new();
    for (v, h) in fixed.iter().enumerate() {
        if let Some(h) = h {
            dist[v] = Some(sign * h);
            heap.push(Reverse((sign * h, v)));
        }
    }
    let mut done = vec![false; n];
    while let Some(Reverse((d, v))) = heap.pop() {
        if done[v] {
            continue;
        }
        done[v] = true;
        let next: Vec<usize> = if upward {
            region.out_arcs(v).map(|a| a.to).collect()
        } else {
            region.in_arcs(v).map(|a| a.from).collect()
        };
        for w in next {
            let cand = d + 1;
            if let Some(b) = fixed[w] {
                if cand < sign * b {
                    return Err(Obstruction::Decimation {
                        at: region.vertices()[w],
                        boundary: b,
                        reached: sign * cand,
                    });
                }
                continue;
            }
            if dist[w].is_none_or(|old| cand < old) {
                dist[w] = Some(cand);
                heap.push(Reverse((cand, w)));
            }
        }
    }
    Ok(dist.into_iter().map(|d| sign * d.expect("region is connected")).collect())
}

/// Cube heights of the highest tiling.
pub fn max_heights(region: &Region) -> Result<HeightField, Obstruction> {
    let fixed = boundary_sources(region)?;
    Ok(HeightField::from_indexed(region, &sweep(region, &fixed, true)?))
}

/// Cube heights of the lowest tiling.
pub fn min_heights(region: &Region) -> Result<HeightField, Obstruction> {
    let fixed = boundary_sources(region)?;
    Ok(HeightField::from_indexed(region, &sweep(region, &fixed, false)?))
}

pub fn thurston_extremes(region: &Region) -> Result<Extremes, Obstruction> {
    let fixed = boundary_sources(region)?;
    let hi = sweep(region, &fixed, true)?;
    let lo = sweep(region, &fixed, false)?;
    let max_heights = HeightField::from_indexed(region, &hi);
    let min_heights = HeightField::from_indexed(region, &lo);
    let max = tiling_from_distances(region, &max_heights).expect("consistent sweep yields a tiling");
    let min = tiling_from_distances(region, &min_heights).expect("consistent sweep yields a tiling");
    Ok(Extremes { min, max, min_heights, max_heights })
}
