use thiserror::Error;

use crate::grid::{GridEdge, GridVertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("hexagon size must be at least 1")]
    EmptyHexagon,
    #[error("boundary contour is empty")]
    EmptyContour,
    #[error("boundary contour does not close: it ends at {end} instead of {start}")]
    OpenContour { start: GridVertex, end: GridVertex },
    #[error("boundary contour encloses no triangle")]
    EmptyInterior,
    #[error("boundary contour is not counterclockwise or crosses itself near {at}")]
    BadOrientation { at: GridVertex },
    #[error("boundary contour overlaps itself near {at}")]
    SelfOverlap { at: GridVertex },
    #[error("boundary contour crosses itself at {at}")]
    SelfCrossing { at: GridVertex },
    #[error("region interior is disconnected")]
    Disconnected,
    #[error("region is not simply connected")]
    NotSimplyConnected,
    #[error("constraint edge {edge} lies outside the region")]
    EdgeOutsideRegion { edge: GridEdge },
    #[error("constraint edge {edge} lies on the region boundary")]
    EdgeOnBoundary { edge: GridEdge },
    #[error("constraint edge {edge} must not carry a copy index")]
    EdgeWithCopy { edge: GridEdge },
    #[error("vertex {vertex} is not a vertex of the region")]
    VertexOutsideRegion { vertex: GridVertex },
    #[error("region cannot be tiled: {reason}")]
    Untilable { reason: String },
    #[error("height field is inconsistent at {at}: {reason}")]
    InconsistentField { at: GridVertex, reason: String },
    #[error("cut frontier does not project to a tiling: {reason}")]
    BrokenCut { reason: String },
    #[error("tiling does not match the region: {reason}")]
    TilingMismatch { reason: String },
    #[error("formula has {vars} variables, above the solver guard of {guard}")]
    GuardExceeded { vars: usize, guard: usize },
    #[error("this operation needs {expected} region")]
    WrongRegionKind { expected: &'static str },
    #[error("malformed document: {message}")]
    Parse { message: String, location: Option<String> },
}

impl Error {
    /// Stable machine-readable code for diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyHexagon => "empty_hexagon",
            Error::EmptyContour => "empty_contour",
            Error::OpenContour { .. } => "open_contour",
            Error::EmptyInterior => "empty_interior",
            Error::BadOrientation { .. } => "bad_orientation",
            Error::SelfOverlap { .. } => "self_overlap",
            Error::SelfCrossing { .. } => "self_crossing",
            Error::Disconnected => "disconnected_region",
            Error::NotSimplyConnected => "not_simply_connected",
            Error::EdgeOutsideRegion { .. } => "edge_outside_region",
            Error::EdgeOnBoundary { .. } => "edge_on_boundary",
            Error::EdgeWithCopy { .. } => "edge_with_copy",
            Error::VertexOutsideRegion { .. } => "vertex_outside_region",
            Error::Untilable { .. } => "untilable_region",
            Error::InconsistentField { .. } => "inconsistent_field",
            Error::BrokenCut { .. } => "broken_cut",
            Error::TilingMismatch { .. } => "tiling_mismatch",
            Error::GuardExceeded { .. } => "guard_exceeded",
            Error::WrongRegionKind { .. } => "wrong_region_kind",
            Error::Parse { .. } => "parse_error",
        }
    }

    /// Where the problem sits, when it has a position.
    pub fn location(&self) -> Option<String> {
        match self {
            Error::OpenContour { end, .. } => Some(end.to_string()),
            Error::BadOrientation { at } | Error::SelfOverlap { at } | Error::SelfCrossing { at } => {
                Some(at.to_string())
            }
            Error::EdgeOutsideRegion { edge } | Error::EdgeOnBoundary { edge } | Error::EdgeWithCopy { edge } => {
                Some(edge.to_string())
            }
            Error::VertexOutsideRegion { vertex } => Some(vertex.to_string()),
            Error::InconsistentField { at, .. } => Some(at.to_string()),
            Error::Parse { location, .. } => location.clone(),
            _ => None,
        }
    }

    /// Errors caused by puzzle rules rather than by malformed input.
    pub fn is_rule_violation(&self) -> bool {
        matches!(
            self,
            Error::EdgeOutsideRegion { .. } | Error::EdgeOnBoundary { .. } | Error::EdgeWithCopy { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
