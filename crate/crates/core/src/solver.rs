//! Finite-region solvers.
//!
//! Both solvers return one of the two extreme solutions. The advancing
//! surface works on the slab of cubes between the lowest and highest tilings
//! of the bare region: starting from the cubes below the lowest tiling it adds
//! every cube a valid cut is forced to put on the same side, and fails if that
//! reaches the cubes above the highest tiling. The Bellman-Ford solver computes
//! the same extreme as shortest distances in the projected graph.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::constraints::{build_projected_graph, pin_edges, ArcTag, PinnedEdge, ProjectedGraph};
use crate::error::{Error, Result};
use crate::grid::{GridEdge, GridVertex};
use crate::paths::{shortest_paths, WeightedArc};
use crate::region::Region;
use crate::thurston::{thurston_extremes, Extremes, Obstruction};
use crate::tiling::{tiling_from_distances, HeightField, Tiling};
use crate::Height;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Extremal {
    Lowest,
    #[default]
    Highest,
}

/// A cube of the slab: the column over a vertex copy and the height of the
/// cube's lowest corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SlabCube {
    pub v: GridVertex,
    pub height: Height,
}

impl SlabCube {
    pub fn cube(self) -> [i64; 3] {
        self.v.lift(self.height).expect("slab heights match vertex residues")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LinkKind {
    /// `to` is an immediate predecessor of `from` in the cube order.
    Descend,
    /// `to` is an immediate successor of `from`.
    Ascend,
    /// The two cubes sharing the face across a constrained edge.
    Overlap,
    /// The two wing cubes of a constrained edge.
    Saliency,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CubeLink {
    pub from: SlabCube,
    pub to: SlabCube,
    pub kind: LinkKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleArc {
    pub from: GridVertex,
    pub to: GridVertex,
    pub weight: Height,
    pub tag: ArcTag,
}

/// Evidence that an instance has no solution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    /// The bare region has no tiling at all.
    Untilable { reason: String },
    /// Forced links from a cube that must lie below every cut to one that
    /// must lie above it (or the reverse).
    CubePath { links: Vec<CubeLink> },
    /// A cycle of negative weight in the projected graph.
    Cycle { arcs: Vec<CycleArc>, total: Height },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum SolveOutcome {
    Solution { tiling: Tiling, extremal: Extremal },
    Unsolvable { witness: Witness },
}

impl SolveOutcome {
    pub fn is_solution(&self) -> bool {
        matches!(self, SolveOutcome::Solution { .. })
    }

    pub fn tiling(&self) -> Option<&Tiling> {
        match self {
            SolveOutcome::Solution { tiling, .. } => Some(tiling),
            SolveOutcome::Unsolvable { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            SolveOutcome::Solution { .. } => None,
            SolveOutcome::Unsolvable { witness } => Some(witness),
        }
    }

    fn untilable(o: Obstruction) -> Self {
        SolveOutcome::Unsolvable { witness: Witness::Untilable { reason: o.to_string() } }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Zone {
    Back,
    Interior(usize),
    Front,
}

/// The cubes between the lowest and highest tilings of a region.
///
/// A cube over vertex `v` at height `t` is in Back when `t < h_min(v)`, in
/// Front when `t >= h_max(v)`, and interior otherwise. Back and Front are
/// never stored.
#[derive(Clone, Debug)]
pub struct CubeSlab<'a> {
    region: &'a Region,
    extremes: Extremes,
    low: Vec<Height>,
    high: Vec<Height>,
    offset: Vec<usize>,
}

pub fn build_slab(region: &Region) -> std::result::Result<CubeSlab<'_>, Obstruction> {
    let extremes = thurston_extremes(region)?;
    let low: Vec<Height> = extremes.min_heights.to_indexed(region).into_iter().map(Option::unwrap).collect();
    let high: Vec<Height> = extremes.max_heights.to_indexed(region).into_iter().map(Option::unwrap).collect();
    let mut offset = Vec::with_capacity(low.len() + 1);
    let mut total = 0usize;
    for (lo, hi) in low.iter().zip(&high) {
        offset.push(total);
        total += ((hi - lo) / 3) as usize;
    }
    offset.push(total);
    Ok(CubeSlab { region, extremes, low, high, offset })
}

impl<'a> CubeSlab<'a> {
    pub fn region(&self) -> &'a Region {
        self.region
    }

    pub fn extremes(&self) -> &Extremes {
        &self.extremes
    }

    /// Number of interior cubes.
    pub fn interior_len(&self) -> usize {
        *self.offset.last().unwrap()
    }

    pub fn zone(&self, v: usize, t: Height) -> Zone {
        if t < self.low[v] {
            Zone::Back
        } else if t >= self.high[v] {
            Zone::Front
        } else {
            Zone::Interior(self.offset[v] + ((t - self.low[v]) / 3) as usize)
        }
    }

    pub fn cube(&self, v: usize, t: Height) -> SlabCube {
        SlabCube { v: self.region.vertices()[v], height: t }
    }

    /// The interior cube with the given index.
    fn locate(&self, idx: usize) -> (usize, Height) {
        let v = self.offset.partition_point(|&o| o <= idx) - 1;
        (v, self.low[v] + 3 * (idx - self.offset[v]) as Height)
    }
}

/// Which extreme to grow from. `FromBack` yields the lowest solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    FromBack,
    FromFront,
}

/// Forced companions of a cube: `(vertex, height offset, kind)`.
fn partners(region: &Region, pinned: &[PinnedEdge]) -> Vec<Vec<(usize, Height, LinkKind)>> {
    let mut out = vec![Vec::new(); region.vertex_count()];
    for p in pinned {
        out[p.tail].push((p.head, 1, LinkKind::Overlap));
        out[p.head].push((p.tail, -1, LinkKind::Overlap));
        out[p.wings[0]].push((p.wings[1], 0, LinkKind::Saliency));
        out[p.wings[1]].push((p.wings[0], 0, LinkKind::Saliency));
    }
    out
}

struct Search<'s, 'a> {
    slab: &'s CubeSlab<'a>,
    start: Zone,
    goal: Zone,
    taken: Vec<bool>,
    parent: Vec<Option<CubeLink>>,
    queue: VecDeque<usize>,
}

fn same_zone(a: Zone, b: Zone) -> bool {
    std::mem::discriminant(&a) == std::mem::discriminant(&b)
}

impl Search<'_, '_> {
    /// Follow a link into `(w, s)`; returns it if it lands on the far side.
    fn visit(&mut self, from: SlabCube, w: usize, s: Height, kind: LinkKind) -> Option<CubeLink> {
        let link = CubeLink { from, to: self.slab.cube(w, s), kind };
        match self.slab.zone(w, s) {
            Zone::Interior(j) if !self.taken[j] => {
                self.taken[j] = true;
                self.parent[j] = Some(link);
                self.queue.push_back(j);
                None
            }
            z if same_zone(z, self.goal) => Some(link),
            _ => None,
        }
    }

    /// Enter the slab through every forced pair with one cube on the start side.
    fn seed(&mut self, a: usize, b: usize, dt: Height, kind: LinkKind) -> Option<CubeLink> {
        let slab = self.slab;
        let lo = slab.low[a].min(slab.low[b] - dt) - 3;
        let hi = slab.high[a].max(slab.high[b] - dt) + 3;
        let mut t = lo - (lo - slab.low[a]).rem_euclid(3);
        while t <= hi {
            let (za, zb) = (slab.zone(a, t), slab.zone(b, t + dt));
            let found = if same_zone(za, self.start) && !same_zone(zb, self.start) {
                self.visit(slab.cube(a, t), b, t + dt, kind)
            } else if same_zone(zb, self.start) && !same_zone(za, self.start) {
                self.visit(slab.cube(b, t + dt), a, t, kind)
            } else {
                None
            };
            if found.is_some() {
                return found;
            }
            t += 3;
        }
        None
    }
}

pub fn advancing_surface(slab: &CubeSlab<'_>, x: &BTreeSet<GridEdge>, direction: Direction) -> Result<SolveOutcome> {
    let region = slab.region;
    let pinned = pin_edges(region, x)?;
    let links = partners(region, &pinned);
    let (start, goal) = match direction {
        Direction::FromBack => (Zone::Back, Zone::Front),
        Direction::FromFront => (Zone::Front, Zone::Back),
    };
    let mut search = Search {
        slab,
        start,
        goal,
        taken: vec![false; slab.interior_len()],
        parent: vec![None; slab.interior_len()],
        queue: VecDeque::new(),
    };

    let mut hit = None;
    for p in &pinned {
        hit = search
            .seed(p.tail, p.head, 1, LinkKind::Overlap)
            .or_else(|| search.seed(p.wings[0], p.wings[1], 0, LinkKind::Saliency));
        if hit.is_some() {
            break;
        }
    }

    while hit.is_none() {
        let Some(i) = search.queue.pop_front() else { break };
        let (v, t) = slab.locate(i);
        let here = slab.cube(v, t);
        let order: Vec<(usize, Height, LinkKind)> = match direction {
            Direction::FromBack => region.in_arcs(v).map(|a| (a.from, -1, LinkKind::Descend)).collect(),
            Direction::FromFront => region.out_arcs(v).map(|a| (a.to, 1, LinkKind::Ascend)).collect(),
        };
        for (w, dt, kind) in order.into_iter().chain(links[v].iter().copied()) {
            hit = search.visit(here, w, t + dt, kind);
            if hit.is_some() {
                break;
            }
        }
    }

    if let Some(last) = hit {
        let mut path = vec![last];
        let mut cur = last.from;
        while let Zone::Interior(j) = slab.zone(region.vertex_index(cur.v).unwrap(), cur.height) {
            let l = search.parent[j].expect("explored cubes have parents");
            path.push(l);
            cur = l.from;
        }
        path.reverse();
        return Ok(SolveOutcome::Unsolvable { witness: Witness::CubePath { links: path } });
    }

    // each column moves by one cube per cube taken over to the other side
    let heights: Vec<Height> = (0..region.vertex_count())
        .map(|v| {
            let moved = (slab.offset[v]..slab.offset[v + 1]).filter(|&j| search.taken[j]).count() as Height;
            match direction {
                Direction::FromBack => slab.low[v] + 3 * moved,
                Direction::FromFront => slab.high[v] - 3 * moved,
            }
        })
        .collect();
    let tiling = tiling_from_distances(region, &HeightField::from_indexed(region, &heights))
        .map_err(|e| Error::BrokenCut { reason: e.to_string() })?;
    let extremal = match direction {
        Direction::FromBack => Extremal::Lowest,
        Direction::FromFront => Extremal::Highest,
    };
    Ok(SolveOutcome::Solution { tiling, extremal })
}

/// Advancing-surface solver.
pub fn solve_finite(region: &Region, x: &BTreeSet<GridEdge>, extremal: Extremal) -> Result<SolveOutcome> {
    pin_edges(region, x)?;
    let slab = match build_slab(region) {
        Ok(s) => s,
        Err(o) => return Ok(SolveOutcome::untilable(o)),
    };
    let direction = match extremal {
        Extremal::Lowest => Direction::FromBack,
        Extremal::Highest => Direction::FromFront,
    };
    advancing_surface(&slab, x, direction)
}

/// Bellman-Ford solver, with distances measured from the first contour vertex.
pub fn solve_finite_bf(region: &Region, x: &BTreeSet<GridEdge>, extremal: Extremal) -> Result<SolveOutcome> {
    solve_finite_bf_from(region, x, extremal, region.vertices()[region.contour()[0]])
}

pub fn solve_finite_bf_from(
    region: &Region,
    x: &BTreeSet<GridEdge>,
    extremal: Extremal,
    source: GridVertex,
) -> Result<SolveOutcome> {
    let s = region.vertex_index(source).ok_or(Error::VertexOutsideRegion { vertex: source })?;
    let graph = build_projected_graph(region, x)?;
    match graph_heights(&graph, s, extremal) {
        Ok(d) => {
            let base = source.base_height();
            let heights: Vec<Height> = d.iter().map(|h| h + base).collect();
            let tiling = tiling_from_distances(region, &HeightField::from_indexed(region, &heights))?;
            Ok(SolveOutcome::Solution { tiling, extremal })
        }
        Err(witness) => Ok(SolveOutcome::Unsolvable { witness }),
    }
}

/// Extreme heights relative to the source, or a negative cycle. The lowest
/// solution comes from distances in the reversed graph, negated.
fn graph_heights(graph: &ProjectedGraph, source: usize, extremal: Extremal) -> std::result::Result<Vec<Height>, Witness> {
    let n = graph.vertices().len();
    let mut arcs = graph.weighted_arcs();
    if extremal == Extremal::Lowest {
        arcs = arcs.into_iter().map(|a| WeightedArc::new(a.to, a.from, a.weight)).collect();
    }
    match shortest_paths(n, &arcs, source) {
        Ok(p) => {
            let sign = if extremal == Extremal::Lowest { -1 } else { 1 };
            Ok(p.dist.into_iter().map(|d| sign * d.expect("region is connected")).collect())
        }
        Err(cycle) => {
            let mut list: Vec<CycleArc> = cycle
                .arcs
                .iter()
                .map(|&k| {
                    let a = graph.arcs()[k];
                    CycleArc { from: graph.vertices()[a.from], to: graph.vertices()[a.to], weight: a.weight, tag: a.tag }
                })
                .collect();
            if extremal == Extremal::Lowest {
                // the reversed cycle, read backwards, is a cycle of original arcs
                list.reverse();
            }
            Err(Witness::Cycle { arcs: list, total: cycle.total })
        }
    }
}
