//! Finite simply-connected regions with duplicated boundary vertices.
//!
//! A region is given by a closed counterclockwise contour. Vertices the
//! contour visits more than once are split into copies, one per fan of
//! triangles around them, and edges traversed twice (slits) keep the
//! triangles on their two sides apart.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::grid::{Chirality, GridEdge, GridVertex, Step, Triangle};
use crate::Height;

/// An ascending arc of the region: a region edge oriented along `+axis`,
/// between vertex copies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RegionArc {
    pub from: usize,
    pub to: usize,
    pub edge: GridEdge,
    pub boundary: bool,
}

#[derive(Clone, Debug)]
pub struct Region {
    start: GridVertex,
    steps: Vec<Step>,
    triangles: Vec<Triangle>,
    tri_index: HashMap<Triangle, usize>,
    vertices: Vec<GridVertex>,
    vertex_index: HashMap<GridVertex, usize>,
    corners: Vec<[usize; 3]>,
    contour: Vec<usize>,
    boundary_edges: BTreeMap<GridEdge, u8>,
    arcs: Vec<RegionArc>,
    out_arcs: Vec<Vec<usize>>,
    in_arcs: Vec<Vec<usize>>,
}

impl PartialEq for Region {
    fn eq(&self, other: &Self) -> bool {
        self.triangles == other.triangles && self.vertices == other.vertices && self.same_contour(other)
    }
}

impl Eq for Region {}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Winding number of the closed polygon `pts` around the centroid of `t`,
/// positive for counterclockwise contours on screen.
fn winding(pts: &[GridVertex], t: Triangle) -> i32 {
    // Screen coordinates scaled by 3 and rotated a quarter turn, so the
    // horizontal test ray never passes through a lattice vertex.
    let rot = |u3: i64, v3: i64| {
        let (x, y) = (u3 - v3, -(u3 + v3));
        (-y, x)
    };
    let (cu, cv) = t.centroid3();
    let (px, py) = rot(cu, cv);
    let mut w = 0;
    for i in 0..pts.len() {
        let a = pts[i];
        let b = pts[(i + 1) % pts.len()];
        let (ax, ay) = rot(3 * a.u, 3 * a.v);
        let (bx, by) = rot(3 * b.u, 3 * b.v);
        let side = (bx - ax) * (py - ay) - (px - ax) * (by - ay);
        if ay <= py {
            if by > py && side > 0 {
                w += 1;
            }
        } else if by <= py && side < 0 {
            w -= 1;
        }
    }
    w
}

impl Region {
    /// Regular hexagon `φ([0, n]^3)` with `6n²` triangles.
    pub fn hexagon(n: u32) -> Result<Region> {
        if n == 0 {
            return Err(Error::EmptyHexagon);
        }
        let (start, steps) = hexagon_contour(n);
        Region::from_boundary(start, &steps)
    }

    /// Build a region from a closed counterclockwise contour.
    pub fn from_boundary(start: GridVertex, steps: &[Step]) -> Result<Region> {
        let start = start.raw();
        if steps.is_empty() {
            return Err(Error::EmptyContour);
        }
        let mut pts = Vec::with_capacity(steps.len() + 1);
        pts.push(start);
        for &s in steps {
            let last = *pts.last().unwrap();
            pts.push(last.step(s));
        }
        let end = pts.pop().unwrap();
        if end != start {
            return Err(Error::OpenContour { start, end });
        }

        let umin = pts.iter().map(|p| p.u).min().unwrap();
        let umax = pts.iter().map(|p| p.u).max().unwrap();
        let vmin = pts.iter().map(|p| p.v).min().unwrap();
        let vmax = pts.iter().map(|p| p.v).max().unwrap();
        let mut inside = BTreeSet::new();
        for u in umin - 1..=umax {
            for v in vmin - 1..=vmax {
                for chirality in [Chirality::Left, Chirality::Right] {
                    let t = Triangle::new(GridVertex::new(u, v), chirality);
                    match winding(&pts, t) {
                        0 => {}
                        1 => {
                            inside.insert(t);
                        }
                        w if w < 0 => return Err(Error::BadOrientation { at: t.anchor }),
                        _ => return Err(Error::SelfOverlap { at: t.anchor }),
                    }
                }
            }
        }
        if inside.is_empty() {
            return Err(Error::EmptyInterior);
        }

        let mut traversals: BTreeMap<GridEdge, Vec<usize>> = BTreeMap::new();
        for (i, &s) in steps.iter().enumerate() {
            traversals.entry(GridEdge::from_step(pts[i], s)).or_default().push(i);
        }
        for idx in traversals.values() {
            let twice_same_way = idx.len() == 2 && steps[idx[0]] == steps[idx[1]];
            if idx.len() > 2 || twice_same_way {
                return Err(Error::SelfOverlap { at: pts[idx[0]] });
            }
        }
        let boundary_edges: BTreeMap<GridEdge, u8> =
            traversals.iter().map(|(e, idx)| (*e, idx.len() as u8)).collect();

        let left: Vec<Triangle> = steps.iter().enumerate().map(|(i, &s)| Triangle::left_of(pts[i], s)).collect();
        if let Some(i) = left.iter().position(|t| !inside.contains(t)) {
            return Err(Error::BadOrientation { at: pts[i] });
        }

        let triangles: Vec<Triangle> = inside.into_iter().collect();
        let tri_index: HashMap<Triangle, usize> = triangles.iter().enumerate().map(|(i, t)| (*t, i)).collect();
        let glued = |t: Triangle, e: GridEdge| -> Option<usize> {
            if boundary_edges.contains_key(&e) {
                return None;
            }
            tri_index.get(&t.across(e)).copied()
        };

        // connectivity under gluing
        let mut seen = vec![false; triangles.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(i) = queue.pop_front() {
            for e in triangles[i].edges() {
                if let Some(j) = glued(triangles[i], e) {
                    if !seen[j] {
                        seen[j] = true;
                        queue.push_back(j);
                    }
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Disconnected);
        }

        // corners glued across interior edges belong to the same vertex copy
        let corner_slot = |t: usize, p: GridVertex| -> usize {
            let k = triangles[t].vertices().iter().position(|q| *q == p).expect("corner of triangle");
            3 * t + k
        };
        let mut uf = UnionFind::new(3 * triangles.len());
        let mut interior_edges = 0usize;
        for (i, &t) in triangles.iter().enumerate() {
            for e in t.edges() {
                if let Some(j) = glued(t, e) {
                    if i < j {
                        interior_edges += 1;
                        for p in e.endpoints() {
                            uf.union(corner_slot(i, p), corner_slot(j, p));
                        }
                    }
                }
            }
        }

        let mut classes: BTreeMap<GridVertex, BTreeSet<usize>> = BTreeMap::new();
        for (i, &t) in triangles.iter().enumerate() {
            for p in t.vertices() {
                let root = uf.find(corner_slot(i, p));
                classes.entry(p).or_default().insert(root);
            }
        }

        let boundary_root: Vec<usize> =
            (0..steps.len()).map(|i| uf.find(corner_slot(tri_index[&left[i]], pts[i]))).collect();
        for i in 0..steps.len() {
            let prev = (i + steps.len() - 1) % steps.len();
            let arriving = uf.find(corner_slot(tri_index[&left[prev]], pts[i]));
            if arriving != boundary_root[i] {
                return Err(Error::SelfCrossing { at: pts[i] });
            }
        }

        let mut copy_of: HashMap<usize, u8> = HashMap::new();
        let mut next_copy: HashMap<GridVertex, u8> = HashMap::new();
        for i in 0..steps.len() {
            if classes[&pts[i]].len() > 1 && !copy_of.contains_key(&boundary_root[i]) {
                let c = next_copy.entry(pts[i]).or_insert(0);
                *c += 1;
                copy_of.insert(boundary_root[i], *c);
            }
        }
        let mut root_vertex: HashMap<usize, GridVertex> = HashMap::new();
        for (p, roots) in &classes {
            for r in roots {
                let copy = if roots.len() == 1 {
                    0
                } else {
                    *copy_of.get(r).ok_or(Error::NotSimplyConnected)?
                };
                root_vertex.insert(*r, p.with_copy(copy));
            }
        }
        let mut vertices: Vec<GridVertex> = root_vertex.values().copied().collect();
        vertices.sort();
        let vertex_index: HashMap<GridVertex, usize> = vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let corners: Vec<[usize; 3]> = (0..triangles.len())
            .map(|i| std::array::from_fn(|k| vertex_index[&root_vertex[&uf.find(3 * i + k)]]))
            .collect();
        let contour: Vec<usize> = boundary_root.iter().map(|r| vertex_index[&root_vertex[r]]).collect();

        let node = |t: usize, p: GridVertex| corners[t][corner_slot(t, p) - 3 * t];
        let mut arcs = Vec::with_capacity(interior_edges + steps.len());
        for (i, &t) in triangles.iter().enumerate() {
            for e in t.edges() {
                if let Some(j) = glued(t, e) {
                    if i < j {
                        arcs.push(RegionArc { from: node(i, e.origin), to: node(i, e.head()), edge: e, boundary: false });
                    }
                }
            }
        }
        for (i, &s) in steps.iter().enumerate() {
            let t = tri_index[&left[i]];
            let e = GridEdge::from_step(pts[i], s);
            arcs.push(RegionArc { from: node(t, e.origin), to: node(t, e.head()), edge: e, boundary: true });
        }
        arcs.sort_by_key(|a| (a.from, a.to, a.edge));
        if arcs.windows(2).any(|w| w[0].from == w[1].from && w[0].to == w[1].to) {
            return Err(Error::NotSimplyConnected);
        }

        let euler = vertices.len() as i64 - arcs.len() as i64 + triangles.len() as i64;
        if euler != 1 {
            return Err(Error::NotSimplyConnected);
        }

        let mut out_arcs = vec![Vec::new(); vertices.len()];
        let mut in_arcs = vec![Vec::new(); vertices.len()];
        for (k, a) in arcs.iter().enumerate() {
            out_arcs[a.from].push(k);
            in_arcs[a.to].push(k);
        }

        Ok(Region {
            start,
            steps: steps.to_vec(),
            triangles,
            tri_index,
            vertices,
            vertex_index,
            corners,
            contour,
            boundary_edges,
            arcs,
            out_arcs,
            in_arcs,
        })
    }

    /// Build the region covered by a set of triangles by tracing its boundary.
    pub fn from_triangles(set: &BTreeSet<Triangle>) -> Result<Region> {
        if set.is_empty() {
            return Err(Error::EmptyInterior);
        }
        let is_boundary = |t: Triangle, e: GridEdge| !set.contains(&t.across(e));
        let total: usize = set
            .iter()
            .map(|&t| t.edges().into_iter().filter(|&e| is_boundary(t, e)).count())
            .sum();
        let (start, start_step) = set
            .iter()
            .flat_map(|&t| t.oriented_edges().into_iter().filter(move |&(p, s)| is_boundary(t, GridEdge::from_step(p, s))))
            .min()
            .ok_or(Error::NotSimplyConnected)?;

        let mut steps = vec![start_step];
        let mut p = start;
        let mut s = start_step;
        let mut tri = Triangle::left_of(p, s);
        loop {
            let q = p.step(s);
            let mut entering = GridEdge::from_step(p, s);
            // rotate around q through the fan until the next boundary edge
            let out = loop {
                let next = tri
                    .edges()
                    .into_iter()
                    .find(|&e| e != entering && e.endpoints().contains(&q))
                    .expect("two triangle edges meet at each corner");
                if is_boundary(tri, next) {
                    let [a, b] = next.endpoints();
                    let far = if a == q { b } else { a };
                    break q.step_to(far).expect("adjacent");
                }
                tri = tri.across(next);
                entering = next;
            };
            if q == start && out == start_step {
                break;
            }
            if steps.len() > total {
                return Err(Error::NotSimplyConnected);
            }
            steps.push(out);
            p = q;
            s = out;
            tri = Triangle::left_of(p, s);
        }
        if steps.len() != total {
            return Err(Error::NotSimplyConnected);
        }
        let region = Region::from_boundary(start, &steps)?;
        if region.triangles.len() != set.len() {
            return Err(Error::NotSimplyConnected);
        }
        Ok(region)
    }

    pub fn start(&self) -> GridVertex {
        self.start
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    pub fn triangle_index(&self, t: Triangle) -> Option<usize> {
        self.tri_index.get(&t).copied()
    }

    pub fn contains_triangle(&self, t: Triangle) -> bool {
        self.tri_index.contains_key(&t)
    }

    /// Region vertices including boundary copies, sorted.
    pub fn vertices(&self) -> &[GridVertex] {
        &self.vertices
    }

    pub fn vertex_index(&self, v: GridVertex) -> Option<usize> {
        self.vertex_index.get(&v).copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// The vertex copy at corner `p` of triangle `tri`.
    pub fn corner(&self, tri: usize, p: GridVertex) -> Option<usize> {
        let k = self.triangles[tri].vertices().iter().position(|q| *q == p.raw())?;
        Some(self.corners[tri][k])
    }

    pub fn corners(&self, tri: usize) -> [usize; 3] {
        self.corners[tri]
    }

    pub fn arcs(&self) -> &[RegionArc] {
        &self.arcs
    }

    pub fn out_arcs(&self, node: usize) -> impl Iterator<Item = &RegionArc> {
        self.out_arcs[node].iter().map(move |&k| &self.arcs[k])
    }

    pub fn in_arcs(&self, node: usize) -> impl Iterator<Item = &RegionArc> {
        self.in_arcs[node].iter().map(move |&k| &self.arcs[k])
    }

    pub fn is_boundary_edge(&self, e: GridEdge) -> bool {
        self.boundary_edges.contains_key(&e.raw())
    }

    /// Edges visited twice by the contour.
    pub fn duplicated_edges(&self) -> impl Iterator<Item = GridEdge> + '_ {
        self.boundary_edges.iter().filter(|(_, &n)| n > 1).map(|(e, _)| *e)
    }

    /// Both neighbouring triangles in the region and glued across `e`.
    pub fn is_interior_edge(&self, e: GridEdge) -> bool {
        !self.is_boundary_edge(e) && e.triangles().iter().all(|t| self.contains_triangle(*t))
    }

    /// Number of boundary steps, `|∂R|`.
    pub fn perimeter(&self) -> usize {
        self.steps.len()
    }

    /// Vertex copy at each position of the contour.
    pub fn contour(&self) -> &[usize] {
        &self.contour
    }

    pub fn is_boundary_vertex(&self, node: usize) -> bool {
        self.contour.contains(&node)
    }

    /// Contour steps as `(from, to, step)` between vertex copies.
    pub fn boundary_steps(&self) -> impl Iterator<Item = (usize, usize, Step)> + '_ {
        let n = self.contour.len();
        (0..n).map(move |i| (self.contour[i], self.contour[(i + 1) % n], self.steps[i]))
    }

    /// Cube heights along the contour, starting from the base height of the
    /// start vertex. Returns the heights by position and the height mismatch
    /// after closing the loop (0 for tilable regions).
    pub fn boundary_heights(&self) -> (Vec<Height>, Height) {
        let mut h = self.start.base_height();
        let mut out = Vec::with_capacity(self.steps.len());
        for s in &self.steps {
            out.push(h);
            h += s.cube_height_delta();
        }
        (out, h - self.start.base_height())
    }

    pub fn chirality_counts(&self) -> (usize, usize) {
        let left = self.triangles.iter().filter(|t| t.chirality == Chirality::Left).count();
        (left, self.triangles.len() - left)
    }

    fn same_contour(&self, other: &Region) -> bool {
        let n = self.steps.len();
        if n != other.steps.len() {
            return false;
        }
        let mut pts = Vec::with_capacity(n);
        let mut p = self.start;
        for s in &self.steps {
            pts.push((p, *s));
            p = p.step(*s);
        }
        let mut q = other.start;
        let mut theirs = HashSet::with_capacity(n);
        for s in &other.steps {
            theirs.insert((q, *s));
            q = q.step(*s);
        }
        pts.iter().all(|x| theirs.contains(x))
    }
}

/// Counterclockwise contour of the regular hexagon of side `n`, from `(n, 0)`.
pub fn hexagon_contour(n: u32) -> (GridVertex, Vec<Step>) {
    use crate::grid::Axis::*;
    let n = n as usize;
    let order = [Step::plus(Z), Step::minus(X), Step::plus(Y), Step::minus(Z), Step::plus(X), Step::minus(Y)];
    let steps = order.iter().flat_map(|&s| std::iter::repeat_n(s, n)).collect();
    (GridVertex::new(n as i64, 0), steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Axis::*;

    fn parse(steps: &str) -> Vec<Step> {
        steps.split_whitespace().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn hexagon_counts() {
        for n in 1..=4u32 {
            let r = Region::hexagon(n).unwrap();
            let n = n as usize;
            assert_eq!(r.triangles().len(), 6 * n * n);
            assert_eq!(r.chirality_counts(), (3 * n * n, 3 * n * n));
            assert_eq!(r.perimeter(), 6 * n);
            assert!(r.vertices().iter().all(|v| v.copy == 0));
            let (_, closure) = r.boundary_heights();
            assert_eq!(closure, 0);
        }
        assert_eq!(Region::hexagon(0).unwrap_err(), Error::EmptyHexagon);
    }

    #[test]
    fn unit_hexagon_triangles_match_brute_force() {
        // every triangle whose vertices all lie in φ([0,1]^3)
        let mut pts = BTreeSet::new();
        for x in 0..=1 {
            for y in 0..=1 {
                for z in 0..=1 {
                    pts.insert(crate::grid::canonicalize(x, y, z));
                }
            }
        }
        let mut brute = Vec::new();
        for u in -2..=2 {
            for v in -2..=2 {
                for c in [Chirality::Left, Chirality::Right] {
                    let t = Triangle::new(GridVertex::new(u, v), c);
                    if t.vertices().iter().all(|p| pts.contains(p)) {
                        brute.push(t);
                    }
                }
            }
        }
        brute.sort();
        assert_eq!(brute.len(), 6);
        assert_eq!(Region::hexagon(1).unwrap().triangles(), brute.as_slice());
    }

    #[test]
    fn unit_hexagon_contour_equals_hexagon() {
        let r = Region::from_boundary(GridVertex::new(1, 0), &parse("+z -x +y -z +x -y")).unwrap();
        assert_eq!(r, Region::hexagon(1).unwrap());
        // starting elsewhere on the same loop gives the same region
        let r2 = Region::from_boundary(GridVertex::new(0, -1), &parse("-x +y -z +x -y +z")).unwrap();
        assert_eq!(r2, r);
    }

    #[test]
    fn clockwise_contour_is_rejected() {
        let err = Region::from_boundary(GridVertex::new(1, 0), &parse("+y -x +z -y +x -z")).unwrap_err();
        assert_eq!(err.code(), "bad_orientation");
    }

    #[test]
    fn open_and_empty_contours() {
        assert_eq!(Region::from_boundary(GridVertex::new(0, 0), &[]).unwrap_err(), Error::EmptyContour);
        assert!(matches!(
            Region::from_boundary(GridVertex::new(0, 0), &parse("+x +y")),
            Err(Error::OpenContour { .. })
        ));
        // there and back encloses nothing
        assert_eq!(
            Region::from_boundary(GridVertex::new(0, 0), &parse("+x -x")).unwrap_err(),
            Error::EmptyInterior
        );
    }

    #[test]
    fn triangles_touching_at_a_vertex_are_disconnected() {
        // Right(0,0) then Left(-1,-1), which meet only at (0,0)
        let steps = parse("-z -y -x +y +x +z");
        let err = Region::from_boundary(GridVertex::new(0, 0), &steps).unwrap_err();
        assert_eq!(err, Error::Disconnected);
    }

    /// hexagon(2) minus its six central triangles and the two triangles on the
    /// radial edge (1,0)-(2,0): a ring closed except at the vertex (1,0).
    pub(crate) fn pinched_ring() -> BTreeSet<Triangle> {
        let hex = Region::hexagon(2).unwrap();
        let cut = GridEdge::new(GridVertex::new(1, 0), X).triangles();
        hex.triangles()
            .iter()
            .copied()
            .filter(|t| !t.contains(GridVertex::new(0, 0)) && !cut.contains(t))
            .collect()
    }

    #[test]
    fn pinched_vertex_gets_two_copies() {
        let set = pinched_ring();
        assert_eq!(set.len(), 16);
        let r = Region::from_triangles(&set).unwrap();
        let copies: Vec<_> = r.vertices().iter().filter(|v| v.copy > 0).copied().collect();
        let p = GridVertex::new(1, 0);
        assert_eq!(copies, vec![p.with_copy(1), p.with_copy(2)]);
        // the same region from its explicit contour
        let again = Region::from_boundary(r.start(), r.steps()).unwrap();
        assert_eq!(again, r);
        // the pinch vertex is visited twice by the contour
        let visits = r.contour().iter().filter(|&&n| r.vertices()[n].raw() == p).count();
        assert_eq!(visits, 2);
    }

    #[test]
    fn from_triangles_matches_hexagon() {
        let hex = Region::hexagon(2).unwrap();
        let set: BTreeSet<Triangle> = hex.triangles().iter().copied().collect();
        let traced = Region::from_triangles(&set).unwrap();
        assert_eq!(traced.triangles(), hex.triangles());
        assert_eq!(traced.vertices(), hex.vertices());
        assert_eq!(traced.perimeter(), hex.perimeter());
    }

    #[test]
    fn ring_with_hole_is_rejected() {
        let hex = Region::hexagon(2).unwrap();
        let mut set: BTreeSet<Triangle> = hex.triangles().iter().copied().collect();
        // remove the six triangles around the center
        for t in hex.triangles() {
            if t.contains(GridVertex::new(0, 0)) {
                set.remove(t);
            }
        }
        assert_eq!(Region::from_triangles(&set).unwrap_err(), Error::NotSimplyConnected);
    }

    #[test]
    fn slit_keeps_sides_apart() {
        // hexagon(2) with a slit from the boundary corner (2,0) to the center
        let (start, mut steps) = hexagon_contour(2);
        // insert "-x -x +x +x" ... the slit runs along -x from (2,0) to (0,0)
        let mut with_slit = vec![Step::minus(X), Step::minus(X), Step::plus(X), Step::plus(X)];
        with_slit.append(&mut steps);
        let r = Region::from_boundary(start, &with_slit).unwrap();
        assert_eq!(r.triangles().len(), 24);
        let dup: Vec<_> = r.vertices().iter().filter(|v| v.copy > 0).collect();
        // (1,0) is split in two; (2,0) too; the tip (0,0) stays single
        assert_eq!(dup.len(), 4, "{dup:?}");
        assert!(r.vertex_index(GridVertex::new(0, 0)).is_some());
        assert!(r.is_boundary_edge(GridEdge::new(GridVertex::new(0, 0), X)));
        assert!(!r.is_interior_edge(GridEdge::new(GridVertex::new(0, 0), X)));
        assert_eq!(r.duplicated_edges().count(), 2);
    }

    #[test]
    fn copy_ids_follow_first_traversal() {
        let (start, mut steps) = hexagon_contour(2);
        let mut with_slit = vec![Step::minus(X), Step::minus(X), Step::plus(X), Step::plus(X)];
        with_slit.append(&mut steps);
        let r = Region::from_boundary(start, &with_slit).unwrap();
        let first = r.vertices()[r.contour()[0]];
        assert_eq!(first, GridVertex::new(2, 0).with_copy(1));
        let second = r.vertices()[r.contour()[1]];
        assert_eq!(second, GridVertex::new(1, 0).with_copy(1));
        let back = r.vertices()[r.contour()[3]];
        assert_eq!(back, GridVertex::new(1, 0).with_copy(2));
    }
}
