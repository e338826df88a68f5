//! Cube-level constraint machinery and the projected weighted graph.
//!
//! A constrained edge forbids two kinds of cut through the cube lattice: the
//! face across the edge may not lie on the stepped surface (pairs `F_k`,
//! `B_{k+1}`), and the two wing cubes `L_k`, `R_k` may not be separated
//! (saliency). Projected to the plane, both collapse to a handful of weighted
//! arcs between region vertices.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{Axis, GridEdge, GridVertex};
use crate::paths::WeightedArc;
use crate::region::Region;
use crate::Height;

/// The unit cube `(x, y, z) + [0,1]^3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cube {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl Cube {
    pub const fn new(x: i64, y: i64, z: i64) -> Self {
        Cube { x, y, z }
    }

    pub const fn height(self) -> Height {
        self.x + self.y + self.z
    }

    pub fn plus(self, axis: Axis) -> Self {
        let [a, b, c] = axis.unit();
        Cube::new(self.x + a, self.y + b, self.z + c)
    }

    pub fn minus(self, axis: Axis) -> Self {
        let [a, b, c] = axis.unit();
        Cube::new(self.x - a, self.y - b, self.z - c)
    }

    /// Translate by `k (1, 1, 1)`.
    pub const fn shifted(self, k: i64) -> Self {
        Cube::new(self.x + k, self.y + k, self.z + k)
    }

    /// Projection of the lowest corner.
    pub fn vertex(self) -> GridVertex {
        GridVertex::new(self.x - self.z, self.y - self.z)
    }

    pub fn successors(self) -> [Cube; 3] {
        Axis::ALL.map(|a| self.plus(a))
    }
}

impl fmt::Display for Cube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// Componentwise order: `a` reaches `b` through ascending arcs.
pub fn cube_leq(a: Cube, b: Cube) -> bool {
    a.x <= b.x && a.y <= b.y && a.z <= b.z
}

/// The periodic pairs of cubes a valid cut may not separate for one
/// constrained edge. Members of index `k` are the base cubes shifted by
/// `k (1, 1, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnbreakableFamily {
    pub source_edge: GridEdge,
    pub l0: Cube,
    pub r0: Cube,
    pub f0: Cube,
    pub b0: Cube,
}

impl UnbreakableFamily {
    pub const PERIOD: [i64; 3] = [1, 1, 1];

    pub fn l(&self, k: i64) -> Cube {
        self.l0.shifted(k)
    }

    pub fn r(&self, k: i64) -> Cube {
        self.r0.shifted(k)
    }

    pub fn f(&self, k: i64) -> Cube {
        self.f0.shifted(k)
    }

    pub fn b(&self, k: i64) -> Cube {
        self.b0.shifted(k)
    }

    /// Non-overlap pair: the face between them projects onto the calisson
    /// whose diagonal is the edge.
    pub fn overlap_pair(&self, k: i64) -> (Cube, Cube) {
        (self.f(k), self.b(k + 1))
    }

    /// Saliency pair.
    pub fn saliency_pair(&self, k: i64) -> (Cube, Cube) {
        (self.l(k), self.r(k))
    }
}

pub fn unbreakable_family(e: GridEdge) -> UnbreakableFamily {
    let p = e.origin.raw();
    let f0 = Cube::new(p.u, p.v, 0);
    let (l_axis, r_axis) = match e.axis {
        Axis::X => (Axis::Y, Axis::Z),
        Axis::Y => (Axis::Z, Axis::X),
        Axis::Z => (Axis::Y, Axis::X),
    };
    UnbreakableFamily {
        source_edge: GridEdge::new(p, e.axis),
        l0: f0.minus(l_axis),
        r0: f0.minus(r_axis),
        f0,
        b0: f0.minus(l_axis).minus(r_axis),
    }
}

/// A constrained edge resolved to region vertex indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PinnedEdge {
    pub edge: GridEdge,
    pub tail: usize,
    pub head: usize,
    /// The vertices opposite the edge, in [`GridEdge::opposite_vertices`] order.
    pub wings: [usize; 2],
}

/// Check that every edge of `x` is an interior edge of `region` and resolve
/// its endpoints and wing vertices to vertex copies.
pub fn pin_edges(region: &Region, x: &BTreeSet<GridEdge>) -> Result<Vec<PinnedEdge>> {
    let mut out = Vec::with_capacity(x.len());
    for &edge in x {
        if edge.origin.copy != 0 {
            return Err(Error::EdgeWithCopy { edge });
        }
        if region.is_boundary_edge(edge) {
            return Err(Error::EdgeOnBoundary { edge });
        }
        if !region.is_interior_edge(edge) {
            return Err(Error::EdgeOutsideRegion { edge });
        }
        let [t0, t1] = edge.triangles().map(|t| region.triangle_index(t).expect("interior edge"));
        let [w0, w1] = edge.opposite_vertices();
        let corner = |t: usize, p: GridVertex| region.corner(t, p).expect("vertex of triangle");
        out.push(PinnedEdge {
            edge,
            tail: corner(t0, edge.origin),
            head: corner(t0, edge.head()),
            wings: [corner(t0, w0), corner(t1, w1)],
        });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ArcTag {
    Ascending,
    BoundaryRev,
    XRev,
    Saliency,
}

impl ArcTag {
    pub const fn weight(self) -> Height {
        match self {
            ArcTag::Ascending => 1,
            ArcTag::BoundaryRev | ArcTag::XRev => -1,
            ArcTag::Saliency => 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProjectedArc {
    pub from: usize,
    pub to: usize,
    pub weight: Height,
    pub tag: ArcTag,
}

/// Weighted digraph on region vertices whose shortest distances, when they
/// exist, are the cube heights of a valid tiling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectedGraph {
    vertices: Vec<GridVertex>,
    arcs: Vec<ProjectedArc>,
}

#[derive(Serialize)]
struct DumpArc {
    from: GridVertex,
    to: GridVertex,
    weight: Height,
    tag: ArcTag,
}

#[derive(Serialize)]
struct Dump<'a> {
    vertices: &'a [GridVertex],
    arcs: Vec<DumpArc>,
}

impl ProjectedGraph {
    pub fn vertices(&self) -> &[GridVertex] {
        &self.vertices
    }

    pub fn arcs(&self) -> &[ProjectedArc] {
        &self.arcs
    }

    pub fn weighted_arcs(&self) -> Vec<WeightedArc<Height>> {
        self.arcs.iter().map(|a| WeightedArc::new(a.from, a.to, a.weight)).collect()
    }

    /// The same graph with the boundary reverse arcs dropped.
    pub fn without_boundary(&self) -> ProjectedGraph {
        ProjectedGraph {
            vertices: self.vertices.clone(),
            arcs: self.arcs.iter().filter(|a| a.tag != ArcTag::BoundaryRev).copied().collect(),
        }
    }

    pub fn count(&self, tag: ArcTag) -> usize {
        self.arcs.iter().filter(|a| a.tag == tag).count()
    }

    /// Vertex list and tagged arc list as JSON.
    pub fn dump(&self) -> serde_json::Value {
        let arcs = self
            .arcs
            .iter()
            .map(|a| DumpArc { from: self.vertices[a.from], to: self.vertices[a.to], weight: a.weight, tag: a.tag })
            .collect();
        serde_json::to_value(Dump { vertices: &self.vertices, arcs }).expect("graph dump serializes")
    }
}

pub fn build_projected_graph(region: &Region, x: &BTreeSet<GridEdge>) -> Result<ProjectedGraph> {
    let pinned = pin_edges(region, x)?;
    Ok(projected_graph_pinned(region, &pinned))
}

pub(crate) fn projected_graph_pinned(region: &Region, pinned: &[PinnedEdge]) -> ProjectedGraph {
    let mut arcs = Vec::with_capacity(region.arcs().len() + region.perimeter() + 3 * pinned.len());
    let mut push = |from, to, tag: ArcTag| arcs.push(ProjectedArc { from, to, weight: tag.weight(), tag });
    for a in region.arcs() {
        push(a.from, a.to, ArcTag::Ascending);
    }
    for a in region.arcs().iter().filter(|a| a.boundary) {
        push(a.to, a.from, ArcTag::BoundaryRev);
    }
    for p in pinned {
        push(p.head, p.tail, ArcTag::XRev);
    }
    for p in pinned {
        push(p.wings[0], p.wings[1], ArcTag::Saliency);
        push(p.wings[1], p.wings[0], ArcTag::Saliency);
    }
    ProjectedGraph { vertices: region.vertices().to_vec(), arcs }
}
