//! Tilings, height fields and the rule checker.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::constraints::Cube;
use crate::error::{Error, Result};
use crate::grid::{Axis, Calisson, GridEdge, GridVertex, Triangle};
use crate::region::Region;
use crate::Height;

/// A set of calissons. Serializes as a list of `{"cube": [x, y, z], "normal": "x"}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tiling {
    calissons: BTreeSet<Calisson>,
}

impl Tiling {
    pub fn new(calissons: impl IntoIterator<Item = Calisson>) -> Self {
        Tiling { calissons: calissons.into_iter().collect() }
    }

    pub fn calissons(&self) -> &BTreeSet<Calisson> {
        &self.calissons
    }

    pub fn len(&self) -> usize {
        self.calissons.len()
    }

    pub fn is_empty(&self) -> bool {
        self.calissons.is_empty()
    }

    pub fn contains(&self, c: Calisson) -> bool {
        self.calissons.contains(&c)
    }

    pub fn iter(&self) -> impl Iterator<Item = Calisson> + '_ {
        self.calissons.iter().copied()
    }

    pub fn insert(&mut self, c: Calisson) -> bool {
        self.calissons.insert(c)
    }

    /// Diagonals of all calissons, i.e. the grid edges this tiling covers.
    pub fn covered_edges(&self) -> BTreeSet<GridEdge> {
        self.iter().map(Calisson::diagonal).collect()
    }

    /// Compact JSON, stable across runs.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tiling serializes")
    }

    pub fn from_json(text: &str) -> Result<Tiling> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            message: e.to_string(),
            location: Some(format!("line {}, column {}", e.line(), e.column())),
        })
    }
}

impl FromIterator<Calisson> for Tiling {
    fn from_iter<I: IntoIterator<Item = Calisson>>(iter: I) -> Self {
        Tiling::new(iter)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    Gap,
    Overlap,
    XOverlapped,
    SaliencySameColor,
    OffRegion,
}

impl ViolationKind {
    pub fn name(self) -> &'static str {
        match self {
            ViolationKind::Gap => "gap",
            ViolationKind::Overlap => "overlap",
            ViolationKind::XOverlapped => "x_overlapped",
            ViolationKind::SaliencySameColor => "saliency_same_color",
            ViolationKind::OffRegion => "off_region",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Location {
    Triangle(Triangle),
    Edge(GridEdge),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Triangle(t) => write!(f, "triangle {t}"),
            Location::Edge(e) => write!(f, "{e}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub location: Location,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}", self.kind.name(), self.location)
    }
}

/// Which puzzle conditions [`check_with`] enforces besides exact coverage.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rules {
    pub non_overlap: bool,
    pub saliency: bool,
}

impl Rules {
    pub const ALL: Rules = Rules { non_overlap: true, saliency: true };
    pub const COVER_ONLY: Rules = Rules { non_overlap: false, saliency: false };
    pub const NON_OVERLAP: Rules = Rules { non_overlap: true, saliency: false };
}

/// All violations of `t` as a tiling of `region` under constraint edges `x`,
/// sorted. Empty iff `t` is a valid solution.
pub fn check(region: &Region, x: &BTreeSet<GridEdge>, t: &Tiling) -> Vec<Violation> {
    check_with(region, x, t, Rules::ALL)
}

pub fn check_with(region: &Region, x: &BTreeSet<GridEdge>, t: &Tiling, rules: Rules) -> Vec<Violation> {
    let mut out = BTreeSet::new();
    let mut cover: HashMap<Triangle, Vec<Calisson>> = HashMap::new();
    for c in t.iter() {
        let diag = c.diagonal();
        let tris = c.triangles();
        let mut inside = true;
        for tri in tris {
            if !region.contains_triangle(tri) {
                inside = false;
                out.insert(Violation { kind: ViolationKind::OffRegion, location: Location::Triangle(tri) });
            }
        }
        if inside && region.is_boundary_edge(diag) {
            // both halves are in the region but on opposite sides of a slit
            out.insert(Violation { kind: ViolationKind::OffRegion, location: Location::Edge(diag) });
        }
        for tri in tris {
            cover.entry(tri).or_default().push(c);
        }
    }
    for &tri in region.triangles() {
        let n = cover.get(&tri).map_or(0, Vec::len);
        if n == 0 {
            out.insert(Violation { kind: ViolationKind::Gap, location: Location::Triangle(tri) });
        } else if n > 1 {
            out.insert(Violation { kind: ViolationKind::Overlap, location: Location::Triangle(tri) });
        }
    }
    for &e in x {
        let e = e.raw();
        if rules.non_overlap && t.contains(Calisson::across(e)) {
            out.insert(Violation { kind: ViolationKind::XOverlapped, location: Location::Edge(e) });
            continue;
        }
        if !rules.saliency {
            continue;
        }
        let [t0, t1] = e.triangles();
        let (Some([c0]), Some([c1])) = (cover.get(&t0).map(Vec::as_slice), cover.get(&t1).map(Vec::as_slice)) else {
            continue;
        };
        if c0 != c1 && c0.normal == c1.normal {
            out.insert(Violation { kind: ViolationKind::SaliencySameColor, location: Location::Edge(e) });
        }
    }
    out.into_iter().collect()
}

/// Cube heights on region vertices (copies included).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HeightField {
    values: BTreeMap<GridVertex, Height>,
}

#[derive(Serialize, Deserialize)]
struct HeightEntry {
    v: GridVertex,
    h: Height,
}

impl Serialize for HeightField {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.values.iter().map(|(&v, &h)| HeightEntry { v, h }))
    }
}

impl<'de> Deserialize<'de> for HeightField {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<HeightEntry>::deserialize(d)?;
        Ok(HeightField { values: entries.into_iter().map(|e| (e.v, e.h)).collect() })
    }
}

impl HeightField {
    pub fn new(values: BTreeMap<GridVertex, Height>) -> Self {
        HeightField { values }
    }

    /// Field from values indexed like `region.vertices()`.
    pub fn from_indexed(region: &Region, heights: &[Height]) -> Self {
        assert_eq!(heights.len(), region.vertex_count());
        HeightField { values: region.vertices().iter().copied().zip(heights.iter().copied()).collect() }
    }

    /// Values in `region.vertices()` order, `None` where missing.
    pub fn to_indexed(&self, region: &Region) -> Vec<Option<Height>> {
        region.vertices().iter().map(|v| self.values.get(v).copied()).collect()
    }

    pub fn get(&self, v: GridVertex) -> Option<Height> {
        self.values.get(&v).copied()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (GridVertex, Height)> + '_ {
        self.values.iter().map(|(&v, &h)| (v, h))
    }

    pub fn shifted(&self, by: Height) -> Self {
        HeightField { values: self.values.iter().map(|(&v, &h)| (v, h + by)).collect() }
    }

    /// Shift so that `v` has height `h`.
    pub fn aligned_at(&self, v: GridVertex, h: Height) -> Option<Self> {
        Some(self.shifted(h - self.get(v)?))
    }

    /// `self <= other` at every vertex of `self`.
    pub fn below(&self, other: &HeightField) -> bool {
        self.values.iter().all(|(v, h)| other.get(*v).is_some_and(|o| *h <= o))
    }
}

/// Heights of the stepped surface of `t`, with `source` at `source_height`.
///
/// The `source_height` must be congruent to the base height of `source`
/// modulo 3 for the field to be a true cube height; other values give the
/// same field shifted by a constant.
pub fn heights_from_tiling(region: &Region, t: &Tiling, source: GridVertex, source_height: Height) -> Result<HeightField> {
    let s = region.vertex_index(source).ok_or(Error::VertexOutsideRegion { vertex: source })?;
    let covered = t.covered_edges();
    let diff = |e: GridEdge| if covered.contains(&e) { -2 } else { 1 };
    let n = region.vertex_count();
    let mut h: Vec<Option<Height>> = vec![None; n];
    h[s] = Some(source_height);
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        let hv = h[v].unwrap();
        let steps = region
            .out_arcs(v)
            .map(|a| (a.to, hv + diff(a.edge)))
            .chain(region.in_arcs(v).map(|a| (a.from, hv - diff(a.edge))));
        for (w, hw) in steps {
            match h[w] {
                None => {
                    h[w] = Some(hw);
                    queue.push_back(w);
                }
                Some(old) if old != hw => {
                    return Err(Error::InconsistentField {
                        at: region.vertices()[w],
                        reason: format!("tiling gives heights {old} and {hw}"),
                    });
                }
                Some(_) => {}
            }
        }
    }
    let heights: Vec<Height> = h.into_iter().map(|x| x.expect("region is connected")).collect();
    Ok(HeightField::from_indexed(region, &heights))
}

/// Read the tiling off a height field: in every triangle the single edge with
/// an ascending difference of −2 is the diagonal of its calisson.
pub fn tiling_from_distances(region: &Region, h: &HeightField) -> Result<Tiling> {
    let values = h.to_indexed(region);
    let at = |i: usize| -> Result<Height> {
        values[i].ok_or_else(|| Error::InconsistentField {
            at: region.vertices()[i],
            reason: "no height given".into(),
        })
    };
    let mut out = BTreeSet::new();
    for (ti, &tri) in region.triangles().iter().enumerate() {
        let mut diag = None;
        for e in tri.edges() {
            let p = region.corner(ti, e.origin).unwrap();
            let q = region.corner(ti, e.head()).unwrap();
            match at(q)? - at(p)? {
                1 => {}
                -2 if diag.is_none() => diag = Some(e),
                d => {
                    return Err(Error::InconsistentField {
                        at: region.vertices()[p],
                        reason: format!("ascending difference {d} along {e}"),
                    })
                }
            }
        }
        let Some(e) = diag else {
            return Err(Error::InconsistentField {
                at: tri.anchor,
                reason: format!("triangle {tri} is not covered"),
            });
        };
        if region.is_boundary_edge(e) {
            return Err(Error::InconsistentField {
                at: e.origin,
                reason: format!("calisson across boundary edge {e}"),
            });
        }
        out.insert(Calisson::across(e));
    }
    Ok(Tiling { calissons: out })
}

/// An ascending arc of the cube lattice, from `lower` to `lower + e_axis`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CubeArc {
    pub lower: Cube,
    pub axis: Axis,
}

impl CubeArc {
    pub fn upper(self) -> Cube {
        self.lower.plus(self.axis)
    }

    /// The common face, projected.
    pub fn face(self) -> Calisson {
        let c = self.upper();
        Calisson::new([c.x, c.y, c.z], self.axis)
    }
}

/// Project the frontier of a cut (arcs from its low side to its high side)
/// onto `region`.
pub fn tiling_from_cut(region: &Region, frontier: &BTreeSet<CubeArc>) -> Result<Tiling> {
    let t: Tiling = frontier.iter().map(|a| a.face()).collect();
    if t.len() != frontier.len() {
        return Err(Error::BrokenCut { reason: "two frontier faces project to the same calisson".into() });
    }
    match check_with(region, &BTreeSet::new(), &t, Rules::COVER_ONLY).first() {
        None => Ok(t),
        Some(v) => Err(Error::BrokenCut { reason: v.to_string() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: i64, y: i64, z: i64, n: Axis) -> Calisson {
        Calisson::new([x, y, z], n)
    }

    /// The three lower faces of the cube at the origin: an empty corner.
    fn hollow() -> Tiling {
        Tiling::new([c(0, 0, 0, Axis::X), c(0, 0, 0, Axis::Y), c(0, 0, 0, Axis::Z)])
    }

    /// The three upper faces of the cube at the origin.
    fn raised() -> Tiling {
        Tiling::new([c(1, 0, 0, Axis::X), c(0, 1, 0, Axis::Y), c(0, 0, 1, Axis::Z)])
    }

    #[test]
    fn both_unit_tilings_are_valid() {
        let r = Region::hexagon(1).unwrap();
        assert_ne!(raised(), hollow());
        assert_eq!(check(&r, &BTreeSet::new(), &hollow()), vec![]);
        assert_eq!(check(&r, &BTreeSet::new(), &raised()), vec![]);
    }

    #[test]
    fn overlapped_constraint_is_reported() {
        let r = Region::hexagon(1).unwrap();
        for t in [hollow(), raised()] {
            let under = t.iter().next().unwrap().diagonal();
            let v = check(&r, &BTreeSet::from([under]), &t);
            assert_eq!(v, vec![Violation { kind: ViolationKind::XOverlapped, location: Location::Edge(under) }]);
        }
    }

    #[test]
    fn gaps_overlaps_and_strays() {
        let r = Region::hexagon(1).unwrap();
        let mut t = hollow();
        let first = t.iter().next().unwrap();
        t.calissons.remove(&first);
        let v = check(&r, &BTreeSet::new(), &t);
        assert_eq!(v.len(), 2);
        assert!(v.iter().all(|x| x.kind == ViolationKind::Gap));

        let mut t = hollow();
        t.insert(raised().iter().next().unwrap());
        let v = check(&r, &BTreeSet::new(), &t);
        assert!(v.iter().any(|x| x.kind == ViolationKind::Overlap));

        let mut t = hollow();
        t.insert(c(5, 0, 0, Axis::Z));
        let v = check(&r, &BTreeSet::new(), &t);
        assert_eq!(v.iter().filter(|x| x.kind == ViolationKind::OffRegion).count(), 2);
    }

    #[test]
    fn saliency_needs_different_colors() {
        let r = Region::hexagon(1).unwrap();
        let spoke = GridEdge::new(GridVertex::new(0, 0), Axis::X);
        assert_eq!(check(&r, &BTreeSet::from([spoke]), &hollow()), vec![]);

        // two yellow calissons side by side, constrained along their common edge
        let pair = Tiling::new([c(0, 0, 0, Axis::Z), c(1, 0, 0, Axis::Z)]);
        let tris: BTreeSet<Triangle> = pair.iter().flat_map(|k| k.triangles()).collect();
        let r = Region::from_triangles(&tris).unwrap();
        let shared = GridEdge::new(GridVertex::new(1, 0), Axis::Y);
        assert_eq!(check(&r, &BTreeSet::new(), &pair), vec![]);
        let v = check(&r, &BTreeSet::from([shared]), &pair);
        assert_eq!(v, vec![Violation { kind: ViolationKind::SaliencySameColor, location: Location::Edge(shared) }]);
        assert_eq!(check_with(&r, &BTreeSet::from([shared]), &pair, Rules::NON_OVERLAP), vec![]);
    }

    #[test]
    fn heights_of_unit_tilings() {
        let r = Region::hexagon(1).unwrap();
        let corner = GridVertex::new(1, 0);
        let center = GridVertex::new(0, 0);
        let hh = heights_from_tiling(&r, &hollow(), corner, 1).unwrap();
        let hr = heights_from_tiling(&r, &raised(), corner, 1).unwrap();
        assert_eq!(hh.get(center), Some(0));
        assert_eq!(hr.get(center), Some(3));
        // tiling edges change the height by 1, covered diagonals by 2
        let mut gaps: Vec<Height> = hr.iter().filter(|(v, _)| *v != center).map(|(_, h)| (h - 3).abs()).collect();
        gaps.sort();
        assert_eq!(gaps, vec![1, 1, 1, 2, 2, 2]);
        for (v, h) in hr.iter() {
            if v != center {
                assert_eq!(hh.get(v), Some(h));
            }
        }
        assert!(hh.below(&hr));
        assert!(!hr.below(&hh));
    }

    #[test]
    fn round_trip_through_heights() {
        let r = Region::hexagon(1).unwrap();
        for t in [hollow(), raised()] {
            let h = heights_from_tiling(&r, &t, GridVertex::new(0, 1), 1).unwrap();
            assert_eq!(tiling_from_distances(&r, &h).unwrap(), t);
        }
    }

    #[test]
    fn bad_fields_are_rejected() {
        let r = Region::hexagon(1).unwrap();
        let mut h = heights_from_tiling(&r, &hollow(), GridVertex::new(0, 1), 1).unwrap();
        h.values.insert(GridVertex::new(0, 0), 3 + 3);
        assert_eq!(tiling_from_distances(&r, &h).unwrap_err().code(), "inconsistent_field");
        h.values.remove(&GridVertex::new(0, 0));
        assert!(tiling_from_distances(&r, &h).is_err());
    }

    #[test]
    fn cuts_of_the_unit_box() {
        let r = Region::hexagon(1).unwrap();
        let origin = Cube::new(0, 0, 0);
        // everything at or above the origin cube is high
        let low_empty: BTreeSet<CubeArc> =
            Axis::ALL.into_iter().map(|a| CubeArc { lower: origin.minus(a), axis: a }).collect();
        assert_eq!(tiling_from_cut(&r, &low_empty).unwrap(), hollow());
        // the origin cube alone is low
        let low_one: BTreeSet<CubeArc> = Axis::ALL.into_iter().map(|a| CubeArc { lower: origin, axis: a }).collect();
        assert_eq!(tiling_from_cut(&r, &low_one).unwrap(), raised());
        let broken = BTreeSet::from([CubeArc { lower: origin, axis: Axis::X }]);
        assert_eq!(tiling_from_cut(&r, &broken).unwrap_err().code(), "broken_cut");
    }

    #[test]
    fn serialization_format() {
        let t = Tiling::new([c(1, 2, 1, Axis::Z)]);
        assert_eq!(t.to_json(), r#"[{"cube":[0,1,0],"normal":"z"}]"#);
        let back = Tiling::from_json(r#"[{"cube":[2,3,2],"normal":"z"}]"#).unwrap();
        assert_eq!(back, t);
        assert_eq!(Tiling::from_json("[{").unwrap_err().code(), "parse_error");
        let v = Violation { kind: ViolationKind::XOverlapped, location: Location::Edge(GridEdge::new(GridVertex::new(0, 0), Axis::X)) };
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"kind":"x_overlapped","location":{"edge":{"v":[0,0],"axis":"x"}}}"#);
    }
}
