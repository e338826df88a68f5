//! SVG and ASCII pictures of a puzzle and, optionally, a tiling.
//!
//! SVG units: edge length 1, canonical (0, 0) at the origin, screen y down
//! (so `+z` points up the page).

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{Axis, Calisson, Color, GridEdge, GridVertex, Triangle};
use crate::region::Region;
use crate::tiling::Tiling;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Svg,
    Ascii,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "svg" => Ok(Format::Svg),
            "ascii" => Ok(Format::Ascii),
            _ => Err(Error::Parse { message: format!("unknown render format `{s}`"), location: None }),
        }
    }
}

const HALF_ROOT3: f64 = 0.866_025_403_784_438_6;

fn point(v: GridVertex) -> (f64, f64) {
    ((v.u - v.v) as f64 * HALF_ROOT3, (v.u + v.v) as f64 * 0.5)
}

fn fill(c: Color) -> &'static str {
    match c {
        Color::Blue => "#3a6ab0",
        Color::Red => "#c43c35",
        Color::Yellow => "#f2c12e",
    }
}

/// Triangles to draw: the region, or a margin around whatever is given.
fn canvas(region: Option<&Region>, x: &BTreeSet<GridEdge>, tiling: Option<&Tiling>) -> Vec<Triangle> {
    if let Some(r) = region {
        return r.triangles().to_vec();
    }
    let mut pts: Vec<GridVertex> = x.iter().flat_map(|e| e.endpoints()).collect();
    if let Some(t) = tiling {
        pts.extend(t.iter().flat_map(Calisson::outline));
    }
    if pts.is_empty() {
        pts.push(GridVertex::new(0, 0));
    }
    let lo_u = pts.iter().map(|p| p.u).min().unwrap() - 2;
    let hi_u = pts.iter().map(|p| p.u).max().unwrap() + 1;
    let lo_v = pts.iter().map(|p| p.v).min().unwrap() - 2;
    let hi_v = pts.iter().map(|p| p.v).max().unwrap() + 1;
    let mut out = Vec::new();
    for u in lo_u..=hi_u {
        for v in lo_v..=hi_v {
            out.push(Triangle::left(u, v));
            out.push(Triangle::right(u, v));
        }
    }
    out
}

fn check_fit(region: Option<&Region>, tiling: Option<&Tiling>) -> Result<()> {
    let (Some(r), Some(t)) = (region, tiling) else { return Ok(()) };
    match t.iter().find(|c| !c.triangles().iter().all(|tr| r.contains_triangle(*tr))) {
        Some(c) => Err(Error::TilingMismatch { reason: format!("{c} is not inside the region") }),
        None => Ok(()),
    }
}

fn polygon(out: &mut String, pts: &[GridVertex], attrs: &str) {
    out.push_str("<polygon points=\"");
    for (i, p) in pts.iter().enumerate() {
        let (x, y) = point(*p);
        if i > 0 {
            out.push(' ');
        }
        write!(out, "{x:.4},{y:.4}").unwrap();
    }
    writeln!(out, "\" {attrs}/>").unwrap();
}

fn line(out: &mut String, e: GridEdge, attrs: &str) {
    let [p, q] = e.endpoints();
    let ((x1, y1), (x2, y2)) = (point(p), point(q));
    writeln!(out, "<line x1=\"{x1:.4}\" y1=\"{y1:.4}\" x2=\"{x2:.4}\" y2=\"{y2:.4}\" {attrs}/>").unwrap();
}

pub fn render_svg(region: Option<&Region>, x: &BTreeSet<GridEdge>, tiling: Option<&Tiling>) -> Result<String> {
    check_fit(region, tiling)?;
    let tris = canvas(region, x, tiling);
    let mut pts: Vec<(f64, f64)> = tris.iter().flat_map(|t| t.vertices()).map(point).collect();
    if let Some(t) = tiling {
        pts.extend(t.iter().flat_map(Calisson::outline).map(point));
    }
    let min_x = pts.iter().map(|p| p.0).fold(f64::INFINITY, f64::min) - 0.5;
    let max_x = pts.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max) + 0.5;
    let min_y = pts.iter().map(|p| p.1).fold(f64::INFINITY, f64::min) - 0.5;
    let max_y = pts.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max) + 0.5;

    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{min_x:.4} {min_y:.4} {:.4} {:.4}\" width=\"{:.0}\" height=\"{:.0}\">",
        max_x - min_x,
        max_y - min_y,
        (max_x - min_x) * 40.0,
        (max_y - min_y) * 40.0
    )
    .unwrap();
    out.push_str("<g id=\"grid\" fill=\"#fbfaf6\" stroke=\"#c9c9c9\" stroke-width=\"0.02\">\n");
    for t in &tris {
        polygon(&mut out, &t.vertices(), "");
    }
    out.push_str("</g>\n");
    if let Some(t) = tiling {
        out.push_str("<g id=\"tiling\" stroke=\"#222\" stroke-width=\"0.04\" stroke-linejoin=\"round\">\n");
        for c in t.iter() {
            polygon(&mut out, &c.outline(), &format!("fill=\"{}\" class=\"{}\"", fill(c.color()), c.normal));
        }
        out.push_str("</g>\n");
    }
    if let Some(r) = region {
        let edges: BTreeSet<GridEdge> =
            r.triangles().iter().flat_map(|t| t.edges()).filter(|e| r.is_boundary_edge(*e)).collect();
        out.push_str("<g id=\"boundary\" stroke=\"#000\" stroke-width=\"0.06\" stroke-linecap=\"round\">\n");
        for e in edges {
            line(&mut out, e, "");
        }
        out.push_str("</g>\n");
    }
    out.push_str("<g id=\"constraints\" stroke=\"#000\" stroke-width=\"0.16\" stroke-linecap=\"round\">\n");
    for e in x {
        line(&mut out, *e, "");
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}

/// Text picture. Rows step by half a vertical edge and columns by a quarter
/// of a horizontal vertex spacing. Calissons print as `B`, `R`, `Y`, bare
/// triangles as `.`, constrained edges as `#`.
pub fn render_ascii(region: Option<&Region>, x: &BTreeSet<GridEdge>, tiling: Option<&Tiling>) -> Result<String> {
    check_fit(region, tiling)?;
    let tris = canvas(region, x, tiling);
    let at = |p: GridVertex| (2 * (p.u + p.v), 4 * (p.u - p.v));
    let all: Vec<(i64, i64)> = tris.iter().flat_map(|t| t.vertices()).map(at).collect();
    let r0 = all.iter().map(|p| p.0).min().unwrap_or(0);
    let c0 = all.iter().map(|p| p.1).min().unwrap_or(0);
    let rows = (all.iter().map(|p| p.0).max().unwrap_or(0) - r0 + 1) as usize;
    let cols = (all.iter().map(|p| p.1).max().unwrap_or(0) - c0 + 1) as usize;
    let mut grid = vec![vec![' '; cols]; rows];
    let mut put = |(r, c): (i64, i64), ch: char| grid[(r - r0) as usize][(c - c0) as usize] = ch;

    let cover = |t: Triangle| -> Option<Calisson> {
        tiling.and_then(|tl| t.edges().into_iter().map(Calisson::across).find(|c| tl.contains(*c)))
    };
    let letter = |c: Option<Calisson>| match c.map(Calisson::color) {
        Some(Color::Blue) => 'B',
        Some(Color::Red) => 'R',
        Some(Color::Yellow) => 'Y',
        None => '.',
    };
    let covered = tiling.map(Tiling::covered_edges).unwrap_or_default();
    let mut drawn = BTreeSet::new();
    for &t in &tris {
        let a = at(t.vertices()[0]);
        let side = if t.vertices()[1] == t.vertices()[0].plus(Axis::Y) { -1 } else { 1 };
        let ch = letter(cover(t));
        for k in 1..=3 {
            put((a.0 + 2, a.1 + side * k), ch);
        }
        for e in t.edges() {
            if !drawn.insert(e.raw()) {
                continue;
            }
            let [p, q] = e.endpoints();
            let (p, q) = (at(p), at(q));
            let diag = covered.contains(&e);
            let glyph = match e.axis {
                _ if x.contains(&e) => '#',
                _ if diag => letter(Some(Calisson::across(e))),
                Axis::X => '\\',
                Axis::Y => '/',
                Axis::Z => '|',
            };
            match e.axis {
                Axis::Z => (1..4).for_each(|k| put((p.0 - k, p.1), glyph)),
                _ => put(((p.0 + q.0) / 2, (p.1 + q.1) / 2), glyph),
            }
            put(p, '+');
            put(q, '+');
        }
    }
    let mut out = String::new();
    for row in grid {
        let s: String = row.into_iter().collect();
        out.push_str(s.trim_end());
        out.push('\n');
    }
    Ok(out)
}

pub fn render(region: Option<&Region>, x: &BTreeSet<GridEdge>, tiling: Option<&Tiling>, format: Format) -> Result<String> {
    match format {
        Format::Svg => render_svg(region, x, tiling),
        Format::Ascii => render_ascii(region, x, tiling),
    }
}
