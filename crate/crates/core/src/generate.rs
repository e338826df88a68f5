//! Seeded random instances for tests, benchmarks and the `generate` command.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::document::{PuzzleDocument, RegionSpec};
use crate::grid::{Axis, Calisson, GridEdge, GridVertex, Triangle};
use crate::region::Region;
use crate::tiling::Tiling;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Hexagonal distance from the origin: a hexagon of size `n` holds exactly
/// the vertices of norm at most `n`.
pub fn hex_norm(p: GridVertex) -> i64 {
    if (p.u >= 0) == (p.v >= 0) {
        p.u.abs().max(p.v.abs())
    } else {
        p.u.abs() + p.v.abs()
    }
}

fn neighbours(t: Triangle) -> [Triangle; 3] {
    t.edges().map(|e| t.across(e))
}

/// Connected, simply connected union of about `triangles` triangles grown
/// one triangle at a time. Not necessarily tilable.
pub fn random_polyiamond<R: Rng>(rng: &mut R, triangles: usize) -> Region {
    let mut set = BTreeSet::from([Triangle::left(0, 0)]);
    let mut attempts = 0;
    while set.len() < triangles.max(1) && attempts < 50 * triangles {
        attempts += 1;
        let frontier: Vec<Triangle> = set.iter().flat_map(|&t| neighbours(t)).filter(|t| !set.contains(t)).collect();
        let t = *frontier.choose(rng).expect("finite sets have neighbours");
        set.insert(t);
        if Region::from_triangles(&set).is_err() {
            set.remove(&t);
        }
    }
    Region::from_triangles(&set).expect("growth keeps the set simply connected")
}

/// Union of about `lozenges` calissons glued edge to edge. Always tilable.
pub fn random_lozenge_region<R: Rng>(rng: &mut R, lozenges: usize) -> Region {
    let first = Calisson::across(GridEdge::new(GridVertex::new(0, 0), Axis::ALL[rng.gen_range(0..3)]));
    let mut set: BTreeSet<Triangle> = first.triangles().into_iter().collect();
    let mut attempts = 0;
    while set.len() < 2 * lozenges.max(1) && attempts < 50 * lozenges {
        attempts += 1;
        let frontier: Vec<Triangle> = set.iter().flat_map(|&t| neighbours(t)).filter(|t| !set.contains(t)).collect();
        let t = *frontier.choose(rng).unwrap();
        let partners: Vec<Triangle> = neighbours(t).into_iter().filter(|s| !set.contains(s)).collect();
        let Some(&s) = partners.choose(rng) else { continue };
        set.insert(t);
        set.insert(s);
        if Region::from_triangles(&set).is_err() {
            set.remove(&t);
            set.remove(&s);
        }
    }
    Region::from_triangles(&set).expect("growth keeps the set simply connected")
}

/// Edges whose both sides lie in the region and that are not on its boundary.
pub fn interior_edges(region: &Region) -> Vec<GridEdge> {
    let set: BTreeSet<GridEdge> = region
        .triangles()
        .iter()
        .flat_map(|t| t.edges())
        .filter(|e| e.origin.copy == 0 && region.is_interior_edge(*e))
        .collect();
    set.into_iter().collect()
}

pub fn random_interior_edges<R: Rng>(rng: &mut R, region: &Region, k: usize) -> BTreeSet<GridEdge> {
    interior_edges(region).choose_multiple(rng, k).copied().collect()
}

/// The flip available at `v`, as the calissons to remove and to add.
fn flip_at(region: &Region, t: &Tiling, v: GridVertex) -> Option<([Calisson; 3], [Calisson; 3])> {
    let up = Axis::ALL.map(|a| Calisson::across(GridEdge::new(v, a)));
    let down = Axis::ALL.map(|a| Calisson::across(GridEdge::new(v.minus(a), a)));
    let inside = |cs: &[Calisson; 3]| cs.iter().all(|c| c.triangles().iter().all(|tr| region.contains_triangle(*tr)));
    if !inside(&up) || !inside(&down) {
        return None;
    }
    if up.iter().all(|c| t.contains(*c)) {
        Some((up, down))
    } else if down.iter().all(|c| t.contains(*c)) {
        Some((down, up))
    } else {
        None
    }
}

/// Random walk of local three-calisson flips.
pub fn flip_tiling<R: Rng>(rng: &mut R, region: &Region, start: &Tiling, steps: usize) -> Tiling {
    let inner: Vec<GridVertex> = (0..region.vertex_count())
        .filter(|&i| !region.is_boundary_vertex(i))
        .map(|i| region.vertices()[i])
        .collect();
    let mut t = start.clone();
    if inner.is_empty() {
        return t;
    }
    for _ in 0..steps {
        let v = inner[rng.gen_range(0..inner.len())];
        if let Some((old, new)) = flip_at(region, &t, v) {
            t = t.iter().filter(|c| !old.contains(c)).chain(new).collect();
        }
    }
    t
}

/// Uncovered interior edges whose two sides are covered by calissons of
/// different colors: constraining any subset keeps `t` a solution.
pub fn salient_edges(region: &Region, t: &Tiling) -> Vec<GridEdge> {
    let covered = t.covered_edges();
    let cover = |tr: Triangle| tr.edges().into_iter().map(Calisson::across).find(|c| t.contains(*c));
    interior_edges(region)
        .into_iter()
        .filter(|e| !covered.contains(e))
        .filter(|e| {
            let [a, b] = e.triangles();
            matches!((cover(a), cover(b)), (Some(p), Some(q)) if p.normal != q.normal)
        })
        .collect()
}

pub fn planted_edges<R: Rng>(rng: &mut R, region: &Region, t: &Tiling, k: usize) -> BTreeSet<GridEdge> {
    salient_edges(region, t).choose_multiple(rng, k).copied().collect()
}

/// Random constraint sets inside the hexagon of the given radius.
pub fn random_disc_edges<R: Rng>(rng: &mut R, radius: i64, k: usize) -> BTreeSet<GridEdge> {
    let mut out = BTreeSet::new();
    while out.len() < k {
        let e = GridEdge::new(
            GridVertex::new(rng.gen_range(-radius..=radius), rng.gen_range(-radius..=radius)),
            Axis::ALL[rng.gen_range(0..3)],
        );
        if e.endpoints().iter().all(|p| hex_norm(*p) <= radius) {
            out.insert(e);
        }
    }
    out
}

/// A random region with at most `max_triangles` triangles and a random
/// constraint set: sometimes planted in a known tiling, sometimes arbitrary.
pub fn random_instance<R: Rng>(rng: &mut R, max_triangles: usize) -> (Region, BTreeSet<GridEdge>) {
    let size = rng.gen_range(2..=max_triangles.max(2));
    let region = if rng.gen_bool(0.7) {
        random_lozenge_region(rng, size / 2)
    } else {
        random_polyiamond(rng, size)
    };
    let interior = interior_edges(&region);
    let k = rng.gen_range(0..=interior.len().min(6));
    let x = if rng.gen_bool(0.5) {
        if let Ok(base) = crate::thurston::thurston_extremes(&region) {
            let t = flip_tiling(rng, &region, &base.min, 4 * region.vertex_count());
            planted_edges(rng, &region, &t, k)
        } else {
            random_interior_edges(rng, &region, k)
        }
    } else {
        random_interior_edges(rng, &region, k)
    };
    (region, x)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    /// A random contour with at most `size` triangles.
    Region,
    Hexagon,
    /// Edges inside the hexagon of radius `size` on the whole grid.
    Infinite,
}

/// A puzzle document drawn from `seed`. Hexagon and whole-grid documents get
/// `size` edges unless `edges` says otherwise.
pub fn random_document(kind: Kind, seed: u64, size: usize, edges: Option<usize>) -> PuzzleDocument {
    let mut rng = seeded(seed);
    let size = size.max(1);
    match kind {
        Kind::Region => {
            let (region, x) = match edges {
                None => random_instance(&mut rng, size),
                Some(k) => {
                    let region = random_lozenge_region(&mut rng, size / 2);
                    let x = random_interior_edges(&mut rng, &region, k);
                    (region, x)
                }
            };
            PuzzleDocument::new(RegionSpec::of(&region), &x)
        }
        Kind::Hexagon => {
            let region = Region::hexagon(size as u32).expect("size is positive");
            let x = random_interior_edges(&mut rng, &region, edges.unwrap_or(size));
            PuzzleDocument::new(RegionSpec::Hexagon { n: size as u32 }, &x)
        }
        Kind::Infinite => {
            let x = random_disc_edges(&mut rng, size as i64, edges.unwrap_or(size));
            PuzzleDocument::new(RegionSpec::Infinite, &x)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::check;

    #[test]
    fn hex_norm_matches_hexagon_vertices() {
        for n in 1..=4u32 {
            let r = Region::hexagon(n).unwrap();
            for u in -6..=6 {
                for v in -6..=6 {
                    let p = GridVertex::new(u, v);
                    assert_eq!(r.vertex_index(p).is_some(), hex_norm(p) <= n as i64, "{p} in hexagon {n}");
                }
            }
        }
    }

    #[test]
    fn generators_are_seeded() {
        let a = random_instance(&mut seeded(7), 30);
        let b = random_instance(&mut seeded(7), 30);
        assert_eq!(a.0, b.0);
        assert_eq!(a.1, b.1);
    }

    #[test]
    fn lozenge_regions_are_tilable() {
        let mut rng = seeded(1);
        for _ in 0..30 {
            let r = random_lozenge_region(&mut rng, 12);
            assert!(crate::thurston::thurston_extremes(&r).is_ok());
            let p = random_polyiamond(&mut rng, 15);
            assert!(p.triangles().len() <= 15);
        }
    }

    #[test]
    fn flips_and_planting_keep_a_solution() {
        let mut rng = seeded(3);
        let r = Region::hexagon(4).unwrap();
        let base = crate::thurston::thurston_extremes(&r).unwrap();
        let t = flip_tiling(&mut rng, &r, &base.min, 500);
        assert_ne!(t, base.min);
        assert_eq!(check(&r, &BTreeSet::new(), &t), vec![]);
        let x = planted_edges(&mut rng, &r, &t, 8);
        assert_eq!(x.len(), 8);
        assert_eq!(check(&r, &x, &t), vec![]);
    }

    #[test]
    fn documents_resolve() {
        for (kind, size) in [(Kind::Region, 30), (Kind::Hexagon, 5), (Kind::Infinite, 8)] {
            let d = random_document(kind, 42, size, None);
            assert_eq!(d, random_document(kind, 42, size, None));
            d.resolve().unwrap();
        }
    }

    #[test]
    fn disc_edges_stay_in_the_disc() {
        let x = random_disc_edges(&mut seeded(5), 8, 20);
        assert_eq!(x.len(), 20);
        assert!(x.iter().flat_map(|e| e.endpoints()).all(|p| hex_norm(p) <= 8));
    }
}
