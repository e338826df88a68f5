//! Puzzle documents: a region description plus the constrained edges.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::constraints::pin_edges;
use crate::error::{Error, Result};
use crate::grid::{GridEdge, GridVertex, Step};
use crate::region::Region;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum RegionSpec {
    Hexagon { n: u32 },
    Boundary { start: GridVertex, steps: Vec<Step> },
    Infinite,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PuzzleDocument {
    pub region: RegionSpec,
    #[serde(default)]
    pub edges: Vec<GridEdge>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub title: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub author: Option<String>,
}

impl RegionSpec {
    /// The boundary description of a built region.
    pub fn of(region: &Region) -> Self {
        RegionSpec::Boundary { start: region.start().raw(), steps: region.steps().to_vec() }
    }
}

/// A validated document.
#[derive(Clone, Debug)]
pub struct Puzzle {
    /// `None` for the whole grid.
    pub region: Option<Region>,
    pub x: BTreeSet<GridEdge>,
}

impl Puzzle {
    pub fn finite(&self) -> Option<&Region> {
        self.region.as_ref()
    }
}

pub(crate) fn parse_error(e: serde_json::Error) -> Error {
    Error::Parse { message: e.to_string(), location: Some(format!("line {}, column {}", e.line(), e.column())) }
}

impl PuzzleDocument {
    pub fn new(region: RegionSpec, x: &BTreeSet<GridEdge>) -> Self {
        PuzzleDocument { region, edges: x.iter().copied().collect(), title: None, author: None }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(parse_error)
    }

    pub fn from_value(value: serde_json::Value) -> Result<Self> {
        serde_json::from_value(value).map_err(|e| Error::Parse { message: e.to_string(), location: None })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    /// Builds the region and checks the edge set against it.
    pub fn resolve(&self) -> Result<Puzzle> {
        let x: BTreeSet<GridEdge> = self.edges.iter().copied().collect();
        if x.len() != self.edges.len() {
            let dup = self.edges.iter().enumerate().find(|(i, e)| self.edges[..*i].contains(e)).unwrap().1;
            return Err(Error::Parse { message: format!("edge {dup} is listed twice"), location: Some(dup.to_string()) });
        }
        if let Some(&edge) = x.iter().find(|e| e.origin.copy != 0) {
            return Err(Error::EdgeWithCopy { edge });
        }
        let region = match &self.region {
            RegionSpec::Hexagon { n } => Some(Region::hexagon(*n)?),
            RegionSpec::Boundary { start, steps } => Some(Region::from_boundary(*start, steps)?),
            RegionSpec::Infinite => None,
        };
        if let Some(r) = &region {
            pin_edges(r, &x)?;
        }
        Ok(Puzzle { region, x })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Axis;

    #[test]
    fn parses_each_region_kind() {
        let d = PuzzleDocument::from_json(r#"{"region":{"type":"hexagon","n":2},"edges":[{"v":[0,0],"axis":"x"}]}"#)
            .unwrap();
        let p = d.resolve().unwrap();
        assert_eq!(p.finite().unwrap().triangles().len(), 24);
        assert_eq!(p.x, BTreeSet::from([GridEdge::new(GridVertex::new(0, 0), Axis::X)]));

        let d = PuzzleDocument::from_json(
            r#"{"region":{"type":"boundary","start":[0,0],"steps":["+y","+x","-y","-x"]},"edges":[],"title":"box"}"#,
        )
        .unwrap();
        assert_eq!(d.title.as_deref(), Some("box"));
        assert_eq!(d.resolve().unwrap().finite().unwrap().triangles().len(), 2);

        let d = PuzzleDocument::from_json(r#"{"region":{"type":"infinite"},"edges":[{"v":[5,-3],"axis":"z"}]}"#).unwrap();
        assert!(d.resolve().unwrap().region.is_none());
    }

    #[test]
    fn round_trip() {
        let x = BTreeSet::from([GridEdge::new(GridVertex::new(1, 0), Axis::Y)]);
        let d = PuzzleDocument::new(RegionSpec::Hexagon { n: 3 }, &x);
        assert_eq!(PuzzleDocument::from_json(&d.to_json()).unwrap(), d);
    }

    #[test]
    fn boundary_of_a_region_rebuilds_it() {
        let r = crate::generate::random_polyiamond(&mut crate::generate::seeded(11), 20);
        let d = PuzzleDocument::new(RegionSpec::of(&r), &BTreeSet::new());
        assert_eq!(d.resolve().unwrap().region.unwrap(), r);
    }

    #[test]
    fn malformed_documents_carry_locations() {
        let err = PuzzleDocument::from_json("{\"region\": {\"type\": \"hexagon\"}\n}").unwrap_err();
        assert_eq!(err.code(), "parse_error");
        assert!(err.location().unwrap().starts_with("line "));
        let err = PuzzleDocument::from_json(r#"{"region":{"type":"hexagon","n":1},"edges":[{"v":[0,0],"axis":"w"}]}"#)
            .unwrap_err();
        assert_eq!(err.code(), "parse_error");
    }

    #[test]
    fn rule_level_rejections() {
        let on_boundary = r#"{"region":{"type":"hexagon","n":1},"edges":[{"v":[1,0],"axis":"y"}]}"#;
        let err = PuzzleDocument::from_json(on_boundary).unwrap().resolve().unwrap_err();
        assert_eq!(err.code(), "edge_on_boundary");
        assert!(err.is_rule_violation());
        let outside = r#"{"region":{"type":"hexagon","n":1},"edges":[{"v":[7,7],"axis":"x"}]}"#;
        assert_eq!(PuzzleDocument::from_json(outside).unwrap().resolve().unwrap_err().code(), "edge_outside_region");
        let open = r#"{"region":{"type":"boundary","start":[0,0],"steps":["+x","+y"]}}"#;
        assert_eq!(PuzzleDocument::from_json(open).unwrap().resolve().unwrap_err().code(), "open_contour");
    }
}
