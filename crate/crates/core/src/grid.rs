//! Triangular-grid geometry in canonical homogeneous coordinates.
//!
//! A point `φ(x, y, z)` of the projected grid is stored as `(u, v) = (x - z, y - z)`,
//! i.e. the representative of its `(1,1,1)` class with `z = 0`. Steps along the
//! three axes are `d_x = (1, 0)`, `d_y = (0, 1)` and `d_z = (-1, -1)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::Height;

/// One of the three lattice directions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    /// Step vector in canonical `(u, v)` coordinates.
    pub const fn delta(self) -> (i64, i64) {
        match self {
            Axis::X => (1, 0),
            Axis::Y => (0, 1),
            Axis::Z => (-1, -1),
        }
    }

    /// Unit vector of the axis in cube space.
    pub const fn unit(self) -> [i64; 3] {
        match self {
            Axis::X => [1, 0, 0],
            Axis::Y => [0, 1, 0],
            Axis::Z => [0, 0, 1],
        }
    }

    /// The two other axes, in cyclic order.
    pub const fn others(self) -> (Axis, Axis) {
        match self {
            Axis::X => (Axis::Y, Axis::Z),
            Axis::Y => (Axis::Z, Axis::X),
            Axis::Z => (Axis::X, Axis::Y),
        }
    }

    pub const fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Axis {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "x" | "X" => Ok(Axis::X),
            "y" | "Y" => Ok(Axis::Y),
            "z" | "Z" => Ok(Axis::Z),
            other => Err(format!("unknown axis `{other}`")),
        }
    }
}

/// A signed unit step `±d_axis`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Step {
    pub axis: Axis,
    pub positive: bool,
}

impl Step {
    pub const fn plus(axis: Axis) -> Self {
        Step { axis, positive: true }
    }

    pub const fn minus(axis: Axis) -> Self {
        Step { axis, positive: false }
    }

    pub fn delta(self) -> (i64, i64) {
        let (du, dv) = self.axis.delta();
        if self.positive {
            (du, dv)
        } else {
            (-du, -dv)
        }
    }

    pub fn reversed(self) -> Self {
        Step { axis: self.axis, positive: !self.positive }
    }

    /// Change of cube height along this step (`+1` for a `+axis` step).
    pub fn cube_height_delta(self) -> Height {
        if self.positive {
            1
        } else {
            -1
        }
    }

    /// The six steps in counterclockwise screen order starting from `+x`.
    pub const CCW: [Step; 6] = [
        Step::plus(Axis::X),
        Step::minus(Axis::Y),
        Step::plus(Axis::Z),
        Step::minus(Axis::X),
        Step::plus(Axis::Y),
        Step::minus(Axis::Z),
    ];
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.positive { '+' } else { '-' }, self.axis)
    }
}

impl FromStr for Step {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.chars();
        let positive = match chars.next() {
            Some('+') => true,
            Some('-') => false,
            _ => return Err(format!("step `{s}` must start with `+` or `-`")),
        };
        let axis: Axis = chars.as_str().parse()?;
        Ok(Step { axis, positive })
    }
}

impl Serialize for Step {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Step {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A vertex of the projected grid. `copy` is nonzero only for vertices that
/// a region boundary visits more than once.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GridVertex {
    pub u: i64,
    pub v: i64,
    pub copy: u8,
}

impl GridVertex {
    pub const fn new(u: i64, v: i64) -> Self {
        GridVertex { u, v, copy: 0 }
    }

    pub const fn with_copy(self, copy: u8) -> Self {
        GridVertex { copy, ..self }
    }

    /// The underlying lattice point, copy dropped.
    pub const fn raw(self) -> Self {
        GridVertex::new(self.u, self.v)
    }

    pub fn step(self, step: Step) -> Self {
        let (du, dv) = step.delta();
        GridVertex::new(self.u + du, self.v + dv)
    }

    pub fn plus(self, axis: Axis) -> Self {
        self.step(Step::plus(axis))
    }

    pub fn minus(self, axis: Axis) -> Self {
        self.step(Step::minus(axis))
    }

    /// Height of the lift `(u, v, 0)`; every lift has height congruent to this mod 3.
    pub const fn base_height(self) -> Height {
        self.u + self.v
    }

    /// The cube-space point over this vertex at the given height.
    ///
    /// Returns `None` when `height` is not congruent to `u + v` modulo 3.
    pub fn lift(self, height: Height) -> Option<[i64; 3]> {
        let diff = height - self.base_height();
        if diff.rem_euclid(3) != 0 {
            return None;
        }
        let k = diff / 3;
        Some([self.u + k, self.v + k, k])
    }

    /// Integer screen coordinates `(u - v, -(u + v))`: a positively oriented
    /// affine image of the drawing with `+z` pointing up.
    pub(crate) fn screen(self) -> (i64, i64) {
        (self.u - self.v, -(self.u + self.v))
    }

    /// The step from `self` to an adjacent vertex, if any.
    pub fn step_to(self, other: GridVertex) -> Option<Step> {
        let d = (other.u - self.u, other.v - self.v);
        Step::CCW.into_iter().find(|s| s.delta() == d)
    }
}

impl fmt::Display for GridVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.copy == 0 {
            write!(f, "({}, {})", self.u, self.v)
        } else {
            write!(f, "({}, {})#{}", self.u, self.v, self.copy)
        }
    }
}

impl Serialize for GridVertex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let len = if self.copy == 0 { 2 } else { 3 };
        let mut seq = s.serialize_seq(Some(len))?;
        seq.serialize_element(&self.u)?;
        seq.serialize_element(&self.v)?;
        if self.copy != 0 {
            seq.serialize_element(&self.copy)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for GridVertex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts = Vec::<i64>::deserialize(d)?;
        match parts.as_slice() {
            [u, v] => Ok(GridVertex::new(*u, *v)),
            [u, v, c] => {
                let copy = u8::try_from(*c).map_err(serde::de::Error::custom)?;
                Ok(GridVertex::new(*u, *v).with_copy(copy))
            }
            _ => Err(serde::de::Error::custom("vertex must be [u, v] or [u, v, copy]")),
        }
    }
}

/// Canonical projection `φ(x, y, z)`.
pub fn canonicalize(x: i64, y: i64, z: i64) -> GridVertex {
    GridVertex::new(x - z, y - z)
}

/// Height change along a step with the path convention: a `+axis` step
/// decreases the height, a `-axis` step increases it.
pub fn height_delta(step: Step) -> Height {
    -step.cube_height_delta()
}

/// Prefix sums of [`height_delta`] starting at `start_height`.
pub fn path_heights(start_height: Height, steps: &[Step]) -> Vec<Height> {
    let mut out = Vec::with_capacity(steps.len() + 1);
    let mut h = start_height;
    out.push(h);
    for &s in steps {
        h += height_delta(s);
        out.push(h);
    }
    out
}

/// An undirected grid edge `{origin, origin + d_axis}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GridEdge {
    #[serde(rename = "v")]
    pub origin: GridVertex,
    pub axis: Axis,
}

impl GridEdge {
    pub const fn new(origin: GridVertex, axis: Axis) -> Self {
        GridEdge { origin, axis }
    }

    /// Normalized edge traversed by `step` from `from`.
    pub fn from_step(from: GridVertex, step: Step) -> Self {
        let from = from.raw();
        if step.positive {
            GridEdge::new(from, step.axis)
        } else {
            GridEdge::new(from.step(step), step.axis)
        }
    }

    pub fn head(self) -> GridVertex {
        self.origin.raw().plus(self.axis)
    }

    pub fn endpoints(self) -> [GridVertex; 2] {
        [self.origin.raw(), self.head()]
    }

    pub fn raw(self) -> Self {
        GridEdge::new(self.origin.raw(), self.axis)
    }

    /// The two vertices opposite this edge in its adjacent triangles,
    /// `origin - d_b` and `origin - d_c`.
    pub fn opposite_vertices(self) -> [GridVertex; 2] {
        let (b, c) = self.axis.others();
        let o = self.origin.raw();
        [o.minus(b), o.minus(c)]
    }

    /// The two triangles sharing this edge, in the same order as
    /// [`opposite_vertices`](Self::opposite_vertices).
    pub fn triangles(self) -> [Triangle; 2] {
        let [p, q] = self.endpoints();
        self.opposite_vertices()
            .map(|w| Triangle::from_vertices([p, q, w]).expect("edge + opposite vertex is a triangle"))
    }
}

impl fmt::Display for GridEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-edge at {}", self.axis, self.origin)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Chirality {
    Left,
    Right,
}

/// A unit triangle. `Right(a) = {a, a+d_x, a+d_x+d_y}`, `Left(a) = {a, a+d_y, a+d_x+d_y}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Triangle {
    pub anchor: GridVertex,
    pub chirality: Chirality,
}

impl Triangle {
    pub const fn new(anchor: GridVertex, chirality: Chirality) -> Self {
        Triangle { anchor, chirality }
    }

    pub fn left(u: i64, v: i64) -> Self {
        Triangle::new(GridVertex::new(u, v), Chirality::Left)
    }

    pub fn right(u: i64, v: i64) -> Self {
        Triangle::new(GridVertex::new(u, v), Chirality::Right)
    }

    /// Vertices in counterclockwise screen order, starting at the anchor.
    pub fn vertices(self) -> [GridVertex; 3] {
        let a = self.anchor.raw();
        let far = GridVertex::new(a.u + 1, a.v + 1);
        match self.chirality {
            Chirality::Right => [a, far, a.plus(Axis::X)],
            Chirality::Left => [a, a.plus(Axis::Y), far],
        }
    }

    pub fn contains(self, p: GridVertex) -> bool {
        self.vertices().contains(&p.raw())
    }

    /// Recover a triangle from its three vertices (any order).
    pub fn from_vertices(vs: [GridVertex; 3]) -> Option<Self> {
        let vs = vs.map(GridVertex::raw);
        let min_u = vs.iter().map(|p| p.u).min()?;
        let min_v = vs.iter().map(|p| p.v).min()?;
        let at_min_u = vs.iter().filter(|p| p.u == min_u).count();
        let chirality = if at_min_u == 2 { Chirality::Left } else { Chirality::Right };
        let t = Triangle::new(GridVertex::new(min_u, min_v), chirality);
        let mut want = t.vertices();
        let mut got = vs;
        want.sort();
        got.sort();
        (want == got).then_some(t)
    }

    /// The three edges, each paired with the counterclockwise step that
    /// traverses it with this triangle on the left.
    pub fn oriented_edges(self) -> [(GridVertex, Step); 3] {
        let vs = self.vertices();
        std::array::from_fn(|i| {
            let p = vs[i];
            let q = vs[(i + 1) % 3];
            (p, p.step_to(q).expect("triangle vertices are adjacent"))
        })
    }

    pub fn edges(self) -> [GridEdge; 3] {
        self.oriented_edges().map(|(p, s)| GridEdge::from_step(p, s))
    }

    /// The triangle sharing `edge` with `self`.
    pub fn across(self, edge: GridEdge) -> Triangle {
        let [t0, t1] = edge.triangles();
        if t0 == self {
            t1
        } else {
            t0
        }
    }

    /// The triangle on the left of the directed step `from -> from + step`.
    pub fn left_of(from: GridVertex, step: Step) -> Triangle {
        let from = from.raw();
        let to = from.step(step);
        let edge = GridEdge::from_step(from, step);
        let (fx, fy) = from.screen();
        let (tx, ty) = to.screen();
        edge.triangles()
            .into_iter()
            .find(|t| {
                let w = t.vertices().into_iter().find(|w| *w != from && *w != to).unwrap();
                let (wx, wy) = w.screen();
                (tx - fx) * (wy - fy) - (ty - fy) * (wx - fx) > 0
            })
            .expect("exactly one triangle lies left of a step")
    }

    /// Three times the centroid, in canonical coordinates.
    pub(crate) fn centroid3(self) -> (i64, i64) {
        let a = self.anchor;
        match self.chirality {
            Chirality::Right => (3 * a.u + 2, 3 * a.v + 1),
            Chirality::Left => (3 * a.u + 1, 3 * a.v + 2),
        }
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.chirality {
            Chirality::Left => "L",
            Chirality::Right => "R",
        };
        write!(f, "{c}{}", self.anchor)
    }
}

/// Display color of a calisson, fixed by its face normal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Blue,
    Red,
    Yellow,
}

/// Projection of the lower face with the given normal of the cube
/// `cube + [0,1]^3`. The cube is stored canonically (`z = 0`), so two lifts of
/// the same lozenge compare equal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "RawCalisson")]
pub struct Calisson {
    pub cube: [i64; 3],
    pub normal: Axis,
}

#[derive(Deserialize)]
struct RawCalisson {
    cube: [i64; 3],
    normal: Axis,
}

impl From<RawCalisson> for Calisson {
    fn from(r: RawCalisson) -> Self {
        Calisson::new(r.cube, r.normal)
    }
}

impl Calisson {
    pub fn new(cube: [i64; 3], normal: Axis) -> Self {
        let [x, y, z] = cube;
        Calisson { cube: [x - z, y - z, 0], normal }
    }

    /// The calisson whose interior contains `edge` (its long diagonal).
    pub fn across(edge: GridEdge) -> Self {
        let p = edge.head();
        Calisson::new([p.u, p.v, 0], edge.axis)
    }

    /// The covered grid edge shared by the two triangles.
    pub fn diagonal(self) -> GridEdge {
        let [x, y, z] = self.cube;
        GridEdge::new(canonicalize(x, y, z).minus(self.normal), self.normal)
    }

    pub fn triangles(self) -> [Triangle; 2] {
        self.diagonal().triangles()
    }

    pub fn color(self) -> Color {
        match self.normal {
            Axis::X => Color::Blue,
            Axis::Y => Color::Red,
            Axis::Z => Color::Yellow,
        }
    }

    /// Boundary vertices in counterclockwise screen order.
    pub fn outline(self) -> [GridVertex; 4] {
        let e = self.diagonal();
        let [p, q] = e.endpoints();
        let [w0, w1] = e.opposite_vertices();
        // one opposite vertex is left of p->q, the other right
        let left = Triangle::left_of(p, Step::plus(e.axis));
        let (l, r) = if left.contains(w0) { (w0, w1) } else { (w1, w0) };
        [p, r, q, l]
    }
}

impl fmt::Display for Calisson {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z] = self.cube;
        write!(f, "{}-calisson at ({x}, {y}, {z})", self.normal)
    }
}
