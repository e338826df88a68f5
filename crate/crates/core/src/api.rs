//! Request handling shared by the command line and the HTTP service.
//!
//! Every operation maps a [`Request`] to a [`Response`] whose text is what
//! both front ends emit, so their outputs agree byte for byte.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::baselines::{enumerate, sat_encode};
use crate::constraints::build_projected_graph;
use crate::document::{parse_error, Puzzle, PuzzleDocument};
use crate::error::{Error, Result};
use crate::infinite::decide_infinite;
use crate::region::Region;
use crate::render::{render, Format};
use crate::solver::{solve_finite, solve_finite_bf, Extremal, SolveOutcome};
use crate::tiling::{check, heights_from_tiling, Tiling};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    #[default]
    Advancing,
    BellmanFord,
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "advancing" => Ok(Method::Advancing),
            "bellman-ford" => Ok(Method::BellmanFord),
            _ => Err(Error::Parse { message: format!("unknown method `{s}`"), location: None }),
        }
    }
}

/// A document plus per-operation options. Over HTTP the body is either a bare
/// document or this envelope.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Request {
    pub document: PuzzleDocument,
    #[serde(default)]
    pub tiling: Option<Tiling>,
    #[serde(default)]
    pub extremal: Extremal,
    #[serde(default)]
    pub method: Method,
    #[serde(default)]
    pub format: Format,
    #[serde(default)]
    pub limit: Option<usize>,
    /// Attach the projected graph to solve and extremes results.
    #[serde(default)]
    pub graph: bool,
}

impl Request {
    pub fn new(document: PuzzleDocument) -> Self {
        Request {
            document,
            tiling: None,
            extremal: Extremal::default(),
            method: Method::default(),
            format: Format::default(),
            limit: None,
            graph: false,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(parse_error)?;
        if value.get("document").is_some() {
            serde_json::from_str(text).map_err(parse_error)
        } else {
            Ok(Request::new(PuzzleDocument::from_json(text)?))
        }
    }
}

/// Reads a tiling file: a bare calisson list or any object with a `tiling` field.
pub fn parse_tiling(text: &str) -> Result<Tiling> {
    let value: Value = serde_json::from_str(text).map_err(parse_error)?;
    match value.get("tiling") {
        Some(inner) => serde_json::from_value(inner.clone())
            .map_err(|e| Error::Parse { message: e.to_string(), location: Some("tiling".into()) }),
        None => Tiling::from_json(text),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// Solvable, valid, or an artifact was produced.
    Positive,
    /// Unsolvable or invalid.
    Negative,
    InputError,
    RuleViolation,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Positive => 0,
            Status::Negative => 1,
            Status::InputError | Status::RuleViolation => 2,
        }
    }

    pub fn http_code(self) -> u16 {
        match self {
            Status::Positive | Status::Negative => 200,
            Status::InputError => 400,
            Status::RuleViolation => 422,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Body {
    Json(Value),
    Text { text: String, content_type: &'static str },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Response {
    pub status: Status,
    pub body: Body,
}

impl Response {
    fn json(status: Status, v: Value) -> Self {
        Response { status, body: Body::Json(v) }
    }

    pub fn error(e: &Error) -> Self {
        let status = if e.is_rule_violation() { Status::RuleViolation } else { Status::InputError };
        Response::json(status, json!({ "error": { "code": e.code(), "message": e.to_string(), "location": e.location() } }))
    }

    pub fn text(&self) -> String {
        match &self.body {
            Body::Json(v) => serde_json::to_string_pretty(v).expect("values serialize") + "\n",
            Body::Text { text, .. } => text.clone(),
        }
    }

    pub fn content_type(&self) -> &'static str {
        match &self.body {
            Body::Json(_) => "application/json",
            Body::Text { content_type, .. } => content_type,
        }
    }
}

fn finite(p: &Puzzle) -> Result<&Region> {
    p.finite().ok_or(Error::WrongRegionKind { expected: "a finite" })
}

fn value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("results serialize")
}

fn run(f: impl FnOnce() -> Result<Response>) -> Response {
    f().unwrap_or_else(|e| Response::error(&e))
}

fn solve_with(region: &Region, p: &Puzzle, req: &Request, extremal: Extremal) -> Result<SolveOutcome> {
    match req.method {
        Method::Advancing => solve_finite(region, &p.x, extremal),
        Method::BellmanFord => solve_finite_bf(region, &p.x, extremal),
    }
}

pub fn solve(req: &Request) -> Response {
    run(|| {
        let p = req.document.resolve()?;
        let region = finite(&p)?;
        let outcome = solve_with(region, &p, req, req.extremal)?;
        let status = if outcome.is_solution() { Status::Positive } else { Status::Negative };
        let mut v = value(&outcome);
        v["method"] = value(&req.method);
        if req.graph {
            v["graph"] = build_projected_graph(region, &p.x)?.dump();
        }
        Ok(Response::json(status, v))
    })
}

pub fn decide(req: &Request) -> Response {
    run(|| {
        let p = req.document.resolve()?;
        if p.finite().is_some() {
            return Err(Error::WrongRegionKind { expected: "an infinite" });
        }
        let verdict = decide_infinite(&p.x)?;
        let status = if verdict.is_solvable() { Status::Positive } else { Status::Negative };
        Ok(Response::json(status, value(&verdict)))
    })
}

pub fn check_tiling(req: &Request) -> Response {
    run(|| {
        let p = req.document.resolve()?;
        let region = finite(&p)?;
        let tiling = req.tiling.as_ref().ok_or(Error::Parse {
            message: "a tiling is required".into(),
            location: Some("tiling".into()),
        })?;
        let violations = check(region, &p.x, tiling);
        let status = if violations.is_empty() { Status::Positive } else { Status::Negative };
        Ok(Response::json(status, json!({ "valid": violations.is_empty(), "violations": violations })))
    })
}

pub fn enumerate_tilings(req: &Request) -> Response {
    run(|| {
        let p = req.document.resolve()?;
        let e = enumerate(finite(&p)?, &p.x, req.limit);
        let status = if e.tilings.is_empty() { Status::Negative } else { Status::Positive };
        Ok(Response::json(
            status,
            json!({ "count": e.tilings.len(), "truncated": e.truncated, "tilings": e.tilings }),
        ))
    })
}

/// Lowest and highest solutions with their height fields, measured from the
/// first contour vertex at its base height.
pub fn extremes(req: &Request) -> Response {
    run(|| {
        let p = req.document.resolve()?;
        let region = finite(&p)?;
        let source = region.vertices()[region.contour()[0]];
        let mut v = json!({});
        let mut status = Status::Positive;
        for (key, extremal) in [("lowest", Extremal::Lowest), ("highest", Extremal::Highest)] {
            match solve_with(region, &p, req, extremal)? {
                SolveOutcome::Solution { tiling, .. } => {
                    let h = heights_from_tiling(region, &tiling, source, source.base_height())?;
                    v[key] = json!({ "tiling": tiling, "heights": h });
                }
                SolveOutcome::Unsolvable { witness } => {
                    status = Status::Negative;
                    v = json!({ "verdict": "unsolvable", "witness": witness });
                    break;
                }
            }
        }
        if status == Status::Positive {
            v["verdict"] = json!("solution");
        }
        if req.graph {
            v["graph"] = build_projected_graph(region, &p.x)?.dump();
        }
        Ok(Response::json(status, v))
    })
}

pub fn encode_sat(req: &Request) -> Response {
    run(|| {
        let p = req.document.resolve()?;
        let text = sat_encode(finite(&p)?, &p.x).to_dimacs();
        Ok(Response { status: Status::Positive, body: Body::Text { text, content_type: "text/plain; charset=utf-8" } })
    })
}

pub fn render_picture(req: &Request) -> Response {
    run(|| {
        let p = req.document.resolve()?;
        let text = render(p.finite(), &p.x, req.tiling.as_ref(), req.format)?;
        let content_type = match req.format {
            Format::Svg => "image/svg+xml",
            Format::Ascii => "text/plain; charset=utf-8",
        };
        Ok(Response { status: Status::Positive, body: Body::Text { text, content_type } })
    })
}
