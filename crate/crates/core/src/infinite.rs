//! Solvability on the whole triangular grid.
//!
//! Only the vertices touched by a constraint carry arcs of weight 0 or −1;
//! everywhere else the projected graph is the uniform +1 ascending lattice,
//! whose shortest paths have a closed form. The reduced graph keeps the
//! touched vertices and joins every ordered pair by the cheaper of a special
//! arc and the closed-form distance. It has a negative cycle exactly when
//! the full graph does.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::{GridEdge, GridVertex};
use crate::paths::{shortest_paths, WeightedArc};
use crate::Height;

/// Length of a shortest ascending path from `a` to `b` in the full grid.
pub fn ascending_distance(a: GridVertex, b: GridVertex) -> Height {
    let dx = b.u - a.u;
    let dy = b.v - a.v;
    dx + dy - 3 * dx.min(dy).min(0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReducedKind {
    Distance,
    XRev,
    Saliency,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ReducedArc {
    pub from: GridVertex,
    pub to: GridVertex,
    pub weight: Height,
    pub kind: ReducedKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedGraph {
    /// Critical vertices, sorted.
    pub vertices: Vec<GridVertex>,
    /// One arc per ordered pair of distinct vertices.
    pub arcs: Vec<ReducedArc>,
}

impl ReducedGraph {
    pub fn index_of(&self, v: GridVertex) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub fn arc(&self, from: GridVertex, to: GridVertex) -> Option<&ReducedArc> {
        let (i, j) = (self.index_of(from)?, self.index_of(to)?);
        if i == j {
            return None;
        }
        let n = self.vertices.len();
        Some(&self.arcs[i * (n - 1) + if j < i { j } else { j - 1 }])
    }
}

fn check_edges(x: &BTreeSet<GridEdge>) -> Result<()> {
    match x.iter().find(|e| e.origin.copy != 0) {
        Some(&edge) => Err(Error::EdgeWithCopy { edge }),
        None => Ok(()),
    }
}

pub fn build_reduced_graph(x: &BTreeSet<GridEdge>) -> Result<ReducedGraph> {
    check_edges(x)?;
    let mut special: Vec<(GridVertex, GridVertex, ReducedKind)> = Vec::new();
    let mut vertices = BTreeSet::new();
    for e in x {
        let [p, q] = e.endpoints();
        let [l, r] = e.opposite_vertices();
        vertices.extend([p, q, l, r]);
        special.push((q, p, ReducedKind::XRev));
        special.push((l, r, ReducedKind::Saliency));
        special.push((r, l, ReducedKind::Saliency));
    }
    let vertices: Vec<GridVertex> = vertices.into_iter().collect();
    let mut arcs = Vec::with_capacity(vertices.len() * vertices.len().saturating_sub(1));
    for &a in &vertices {
        for &b in &vertices {
            if a == b {
                continue;
            }
            let mut best = ReducedArc { from: a, to: b, weight: ascending_distance(a, b), kind: ReducedKind::Distance };
            for &(s, t, kind) in &special {
                let w = if kind == ReducedKind::XRev { -1 } else { 0 };
                if s == a && t == b && w < best.weight {
                    best = ReducedArc { from: a, to: b, weight: w, kind };
                }
            }
            arcs.push(best);
        }
    }
    Ok(ReducedGraph { vertices, arcs })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum InfiniteVerdict {
    Solvable,
    Unsolvable { cycle: Vec<ReducedArc>, total_weight: Height },
}

impl InfiniteVerdict {
    pub fn is_solvable(&self) -> bool {
        matches!(self, InfiniteVerdict::Solvable)
    }
}

pub fn decide_infinite(x: &BTreeSet<GridEdge>) -> Result<InfiniteVerdict> {
    check_edges(x)?;
    if x.is_empty() {
        return Ok(InfiniteVerdict::Solvable);
    }
    let g = build_reduced_graph(x)?;
    let arcs: Vec<WeightedArc<Height>> = g
        .arcs
        .iter()
        .map(|a| WeightedArc::new(g.index_of(a.from).unwrap(), g.index_of(a.to).unwrap(), a.weight))
        .collect();
    // the graph is complete, so any source reaches every cycle
    match shortest_paths(g.vertices.len(), &arcs, 0) {
        Ok(_) => Ok(InfiniteVerdict::Solvable),
        Err(c) => Ok(InfiniteVerdict::Unsolvable {
            cycle: c.arcs.iter().map(|&k| g.arcs[k]).collect(),
            total_weight: c.total,
        }),
    }
}
