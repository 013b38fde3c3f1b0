//! Best lattice translation at a fixed orientation.
//!
//! The polygon is first moved so its centroid is at the origin. For a
//! rotation `θ`, cell `(m, n)` meets the placed polygon `R(θ)Ω + t` exactly
//! when `t` lies in the region `T_mn = x_mn + (R(π+θ)Ω ⊕ ⬡₀)`. The number of
//! cells met is therefore the depth of the arrangement of these regions at
//! `t`, and it suffices to search one fundamental cell `⬡₀`.
//!
//! The depth is constant on each open face of the arrangement and never
//! smaller on a face's boundary, so the minimum is attained inside some
//! face. Every face clipped to `⬡₀` has a vertex among the candidate points
//! (region crossings, region vertices, crossings with the cell boundary and
//! the cell corners). Each candidate is probed once per angular sector around
//! it, a short step along the sector bisector, which visits every face.

use std::collections::HashMap;
use std::f64::consts::{PI, TAU};

use crate::error::Result;
use crate::geom::{
    edges, min_enclosing_circle, minkowski_sum_convex, Angle, BBox, ConvexPolygon, Point2, Polygon,
    EPS,
};
use crate::lattice::{
    cell_containing, cell_hexagon, cell_vertex, cells_intersecting_all, indices_in_window,
    lattice_point, LatticeIndex, Window,
};
use crate::orientation::minimize_f;

/// One translated copy of the base region, tagged with its lattice index.
#[derive(Debug, Clone, PartialEq)]
pub struct MinkowskiRegion {
    pub index: LatticeIndex,
    pub polygon: ConvexPolygon,
}

/// Which boundaries produced a [`CandidatePoint`]. Region numbers refer to
/// positions in the region slice, edges and corners to vertex positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    RegionRegionIntersection(usize, usize),
    RegionHexEdge(usize, usize),
    RegionCorner(usize, usize),
    HexCorner(usize),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CandidatePoint {
    pub point: Point2,
    pub provenance: Provenance,
}

/// Work counters reported alongside a placement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Diagnostics {
    pub candidates_evaluated: usize,
    /// Orientation slices searched (1 for a fixed orientation).
    pub slices: usize,
    pub surface_triples: u64,
    pub ill_conditioned: usize,
}

/// A lattice placement: the polygon, centered at `centroid`, is rotated by
/// `theta` and shifted by `translation`; `indices` lists every cell it meets.
#[derive(Debug, Clone, PartialEq)]
pub struct PlacementResult {
    pub translation: Point2,
    pub theta: Angle,
    pub count: usize,
    pub indices: Vec<LatticeIndex>,
    pub centroid: Point2,
    pub diagnostics: Diagnostics,
}

impl PlacementResult {
    /// Maps a point of the input frame into the lattice frame.
    pub fn to_lattice(&self, q: Point2) -> Point2 {
        (q - self.centroid).rotate(self.theta.radians()) + self.translation
    }

    /// Maps a point of the lattice frame back into the input frame.
    pub fn to_input(&self, p: Point2) -> Point2 {
        (p - self.translation).rotate(-self.theta.radians()) + self.centroid
    }
}

/// The algorithm that produced a [`Covering`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Fixed,
    Combined,
    Nonconvex,
    Sweep,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Fixed => "fixed",
            Algorithm::Combined => "combined",
            Algorithm::Nonconvex => "nonconvex",
            Algorithm::Sweep => "sweep",
        }
    }
}

impl std::str::FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "fixed" => Ok(Algorithm::Fixed),
            "combined" => Ok(Algorithm::Combined),
            "nonconvex" => Ok(Algorithm::Nonconvex),
            "sweep" => Ok(Algorithm::Sweep),
            other => Err(format!(
                "unknown algorithm '{other}' (expected fixed, combined, nonconvex or sweep)"
            )),
        }
    }
}

/// A set of unit discs covering the input polygon.
///
/// The pose maps input coordinates into the lattice frame as
/// `p ↦ R(theta)·p + translation`. Centers are in input coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Covering {
    pub theta: Angle,
    pub translation: Point2,
    pub centers: Vec<Point2>,
    /// Lattice cells behind the centers; empty when one disc suffices and
    /// the covering is not a lattice covering.
    pub indices: Vec<LatticeIndex>,
    pub count: usize,
    pub algorithm: Algorithm,
    pub diagnostics: Diagnostics,
}

impl Covering {
    pub fn from_placement(r: &PlacementResult, algorithm: Algorithm) -> Self {
        let theta = r.theta.radians();
        let translation = r.translation - r.centroid.rotate(theta);
        let centers = r
            .indices
            .iter()
            .map(|&i| r.to_input(lattice_point(i)))
            .collect();
        Covering {
            theta: r.theta,
            translation,
            centers,
            indices: r.indices.clone(),
            count: r.count,
            algorithm,
            diagnostics: r.diagnostics,
        }
    }

    /// A single disc, if the polygon's smallest enclosing circle has radius
    /// at most 1. The pose puts the disc center on a cell corner, which is
    /// never a lattice point.
    pub fn single_disc(points: &[Point2], algorithm: Algorithm) -> Option<Self> {
        let c = min_enclosing_circle(points)?;
        if c.radius > 1.0 {
            return None;
        }
        Some(Covering {
            theta: Angle::new(0.0),
            translation: cell_vertex(0) - c.center,
            centers: vec![c.center],
            indices: Vec::new(),
            count: 1,
            algorithm,
            diagnostics: Diagnostics::default(),
        })
    }

    pub fn is_lattice(&self) -> bool {
        !self.indices.is_empty()
    }

    /// Maps an input point into the lattice frame.
    pub fn to_lattice(&self, q: Point2) -> Point2 {
        q.rotate(self.theta.radians()) + self.translation
    }
}

/// The base region `R(π+θ)Ω ⊕ ⬡₀` for a polygon centered at the origin.
pub(crate) fn base_region(piece: &ConvexPolygon, theta: f64) -> Result<ConvexPolygon> {
    minkowski_sum_convex(&piece.rotate(theta).reflect_origin(), &cell_hexagon())
}

/// Copies of the base region at every lattice point of `window` whose
/// bounding box meets `⬡₀`. `poly` must already be centered at its centroid.
pub fn build_regions(
    poly: &ConvexPolygon,
    theta: f64,
    window: Window,
) -> Result<Vec<MinkowskiRegion>> {
    regions_for_pieces(std::slice::from_ref(poly), theta, window)
}

/// [`build_regions`] for several convex pieces sharing one reference frame.
pub(crate) fn regions_for_pieces(
    pieces: &[ConvexPolygon],
    theta: f64,
    window: Window,
) -> Result<Vec<MinkowskiRegion>> {
    let focus = cell_hexagon().bbox().inflate(1e-3);
    let lattice = indices_in_window(window);
    let mut out = Vec::new();
    for piece in pieces {
        let base = base_region(piece, theta)?;
        let bb = base.bbox();
        for &idx in &lattice {
            let x = lattice_point(idx);
            if bb.translate(x).intersects(&focus) {
                out.push(MinkowskiRegion {
                    index: idx,
                    polygon: base.translate(x),
                });
            }
        }
    }
    Ok(out)
}

/// Number of distinct lattice indices among regions containing `p` in their
/// interior with margin [`EPS`].
pub fn count_interior(p: Point2, regions: &[MinkowskiRegion]) -> usize {
    distinct(
        regions
            .iter()
            .filter(|r| r.polygon.depth(p) > EPS)
            .map(|r| r.index),
    )
}

/// Number of distinct lattice indices among regions whose closure (within
/// [`EPS`]) contains `p`.
pub fn count_closed(p: Point2, regions: &[MinkowskiRegion]) -> usize {
    distinct(
        regions
            .iter()
            .filter(|r| r.polygon.depth(p) >= -EPS)
            .map(|r| r.index),
    )
}

fn distinct(it: impl Iterator<Item = LatticeIndex>) -> usize {
    let mut v: Vec<LatticeIndex> = it.collect();
    v.sort_unstable();
    v.dedup();
    v.len()
}

#[derive(Debug, Clone, Copy)]
struct ArrEdge {
    a: Point2,
    b: Point2,
    /// Region position, or `None` for an edge of the cell.
    region: Option<usize>,
    k: usize,
}

fn arrangement_edges(regions: &[MinkowskiRegion], hexagon: &ConvexPolygon) -> Vec<ArrEdge> {
    let focus = hexagon.bbox().inflate(1e-3);
    let mut out = Vec::new();
    for (k, (a, b)) in edges(hexagon.vertices()).enumerate() {
        out.push(ArrEdge {
            a,
            b,
            region: None,
            k,
        });
    }
    for (r, reg) in regions.iter().enumerate() {
        if !reg.polygon.bbox().intersects(&focus) {
            continue;
        }
        for (k, (a, b)) in edges(reg.polygon.vertices()).enumerate() {
            if BBox::of_points(&[a, b]).intersects(&focus) {
                out.push(ArrEdge {
                    a,
                    b,
                    region: Some(r),
                    k,
                });
            }
        }
    }
    out
}

fn crossing(e: &ArrEdge, f: &ArrEdge) -> Option<Point2> {
    let r = e.b - e.a;
    let s = f.b - f.a;
    let den = r.cross(s);
    if den.abs() <= 1e-14 * r.norm() * s.norm() {
        // parallel; any overlap endpoints are already corner candidates
        return None;
    }
    let w = f.a - e.a;
    let t = w.cross(s) / den;
    let u = w.cross(r) / den;
    let tol = 1e-12;
    if (-tol..=1.0 + tol).contains(&t) && (-tol..=1.0 + tol).contains(&u) {
        Some(e.a + r * t.clamp(0.0, 1.0))
    } else {
        None
    }
}

fn candidates_from_edges(edges: &[ArrEdge], hexagon: &ConvexPolygon) -> Vec<CandidatePoint> {
    let tol = 10.0 * EPS;
    let mut out = Vec::new();
    let mut seen: HashMap<(i64, i64), ()> = HashMap::new();
    let mut push = |p: Point2, prov: Provenance, out: &mut Vec<CandidatePoint>| {
        let key = ((p.x / tol).round() as i64, (p.y / tol).round() as i64);
        if seen.insert(key, ()).is_none() {
            out.push(CandidatePoint {
                point: p,
                provenance: prov,
            });
        }
    };
    for (k, &v) in hexagon.vertices().iter().enumerate() {
        push(v, Provenance::HexCorner(k), &mut out);
    }
    for e in edges {
        if let Some(r) = e.region {
            if hexagon.depth(e.a) >= -tol {
                push(e.a, Provenance::RegionCorner(r, e.k), &mut out);
            }
        }
    }
    for (i, e) in edges.iter().enumerate() {
        for f in &edges[i + 1..] {
            let prov = match (e.region, f.region) {
                (None, None) => continue,
                (Some(r), Some(s)) if r == s => continue,
                (Some(r), Some(s)) => Provenance::RegionRegionIntersection(r, s),
                (Some(r), None) => Provenance::RegionHexEdge(r, f.k),
                (None, Some(r)) => Provenance::RegionHexEdge(r, e.k),
            };
            if let Some(p) = crossing(e, f) {
                if hexagon.depth(p) >= -tol {
                    push(p, prov, &mut out);
                }
            }
        }
    }
    out
}

/// Candidate translations inside the closed `hexagon`: the hexagon corners,
/// region vertices inside it, region boundary crossings with its edges and
/// pairwise crossings of region boundaries. Deduplicated on a `10·EPS` grid.
pub fn candidate_points(
    regions: &[MinkowskiRegion],
    hexagon: &ConvexPolygon,
) -> Vec<CandidatePoint> {
    candidates_from_edges(&arrangement_edges(regions, hexagon), hexagon)
}

/// Best point found by a slice search, with its closed depth.
#[derive(Debug, Clone, Copy)]
pub(crate) struct SliceBest {
    pub point: Point2,
    pub count: usize,
    pub candidates: usize,
}

/// Searches every face of the region arrangement that meets `⬡₀`.
pub(crate) fn search_slice(regions: &[MinkowskiRegion]) -> SliceBest {
    let hex = cell_hexagon();
    let focus_poly =
        ConvexPolygon::from_trusted(hex.vertices().iter().map(|&v| v * (1.0 + 1e-3)).collect());
    let focus_box = focus_poly.bbox();

    // regions containing the whole focus count everywhere; disjoint ones never
    let mut always: Vec<LatticeIndex> = Vec::new();
    let mut boundary: Vec<(LatticeIndex, &ConvexPolygon, BBox)> = Vec::new();
    for r in regions {
        let bb = r.polygon.bbox();
        if !bb.intersects(&focus_box) {
            continue;
        }
        if focus_poly
            .vertices()
            .iter()
            .all(|&v| r.polygon.depth(v) > EPS)
        {
            always.push(r.index);
        } else {
            boundary.push((r.index, &r.polygon, bb.inflate(EPS)));
        }
    }
    always.sort_unstable();
    always.dedup();

    let closed_count = |p: Point2| -> usize {
        let mut hit: Vec<LatticeIndex> = always.clone();
        for (idx, poly, bb) in &boundary {
            if bb.contains(p) && poly.depth(p) >= -EPS {
                hit.push(*idx);
            }
        }
        hit.sort_unstable();
        hit.dedup();
        hit.len()
    };

    let edges = arrangement_edges(regions, &hex);
    let cands = candidates_from_edges(&edges, &hex);

    let mut best: Option<(usize, Point2, Point2)> = None;
    let mut dirs: Vec<f64> = Vec::new();
    for c in &cands {
        let p = c.point;
        dirs.clear();
        for e in &edges {
            let near_a = p.distance(e.a) <= 10.0 * EPS;
            let near_b = p.distance(e.b) <= 10.0 * EPS;
            if near_a {
                dirs.push((e.b - e.a).angle());
            } else if near_b {
                dirs.push((e.a - e.b).angle());
            } else if crate::geom::Segment::new(e.a, e.b).distance_to(p) <= 10.0 * EPS {
                dirs.push((e.b - e.a).angle());
                dirs.push((e.a - e.b).angle());
            }
        }
        let probes = sector_probes(p, &mut dirs);
        for q in probes {
            let n = closed_count(q);
            let better = match best {
                None => true,
                Some((bn, bp, _)) => n < bn || (n == bn && (p.x, p.y) < (bp.x, bp.y)),
            };
            if better {
                best = Some((n, p, q));
            }
        }
    }
    let (count, _, point) = best.expect("the cell corners are always candidates");
    SliceBest {
        point,
        count,
        candidates: cands.len(),
    }
}

/// One probe point per angular sector around `p`, a short step along the
/// sector bisector. With no incident edges, `p` itself.
fn sector_probes(p: Point2, dirs: &mut Vec<f64>) -> Vec<Point2> {
    if dirs.is_empty() {
        return vec![p];
    }
    for d in dirs.iter_mut() {
        *d = d.rem_euclid(TAU);
    }
    dirs.sort_by(f64::total_cmp);
    dirs.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    let n = dirs.len();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let lo = dirs[i];
        let hi = if i + 1 < n {
            dirs[i + 1]
        } else {
            dirs[0] + TAU
        };
        let gap = hi - lo;
        if gap < 1e-12 {
            continue;
        }
        let half = 0.5 * gap;
        let step = (1e-7 / half.min(PI / 2.0).sin()).clamp(1e-7, 1e-4);
        out.push(p + Point2::from_angle(lo + half) * step);
    }
    out
}

/// Places centered `pieces` at the orientation `theta` with the fewest
/// cells, recounting the winner exactly.
pub(crate) fn place_pieces(
    pieces: &[ConvexPolygon],
    centroid: Point2,
    theta: f64,
    window: Window,
) -> Result<PlacementResult> {
    let regions = regions_for_pieces(pieces, theta, window)?;
    let best = search_slice(&regions);
    let mut r = finish(pieces, centroid, theta, best.point);
    r.diagnostics = Diagnostics {
        candidates_evaluated: best.candidates,
        slices: 1,
        ..Default::default()
    };
    Ok(r)
}

/// Wraps the translation into `⬡₀` and lists the cells met at that pose.
pub(crate) fn finish(
    pieces: &[ConvexPolygon],
    centroid: Point2,
    theta: f64,
    t: Point2,
) -> PlacementResult {
    let t = t - lattice_point(cell_containing(t));
    let placed: Vec<ConvexPolygon> = pieces
        .iter()
        .map(|p| p.rotate(theta).translate(t))
        .collect();
    let indices = cells_intersecting_all(&placed);
    PlacementResult {
        translation: t,
        theta: Angle::new(theta),
        count: indices.len(),
        indices,
        centroid,
        diagnostics: Diagnostics::default(),
    }
}

/// Best translation of `poly` at the rotation `theta`.
pub fn optimal_translation(poly: &ConvexPolygon, theta: f64) -> Result<PlacementResult> {
    let c = poly.centroid();
    let centered = poly.translate(-c);
    let window = Window::for_diameter(poly.diameter());
    place_pieces(std::slice::from_ref(&centered), c, theta, window)
}

/// Covering at the orientation minimizing the width objective, or a single
/// disc when the polygon fits in one.
pub fn cover_fixed(poly: &ConvexPolygon) -> Result<Covering> {
    if let Some(c) = Covering::single_disc(poly.vertices(), Algorithm::Fixed) {
        return Ok(c);
    }
    let theta = minimize_f(poly)?.theta_star.radians();
    let r = optimal_translation(poly, theta)?;
    Ok(Covering::from_placement(&r, Algorithm::Fixed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Containment;
    use crate::lattice::cells_intersecting;
    use crate::orientation::expected_hexagons;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rect(w: f64, h: f64) -> ConvexPolygon {
        ConvexPolygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(w, 0.0),
            Point2::new(w, h),
            Point2::new(0.0, h),
        ])
        .unwrap()
    }

    fn centered(p: &ConvexPolygon) -> ConvexPolygon {
        p.translate(-p.centroid())
    }

    /// Exact count by direct cell intersection at translation `t`.
    fn count_at(poly0: &ConvexPolygon, theta: f64, t: Point2) -> usize {
        cells_intersecting(&poly0.rotate(theta).translate(t)).len()
    }

    fn hex_grid(n: usize) -> Vec<Point2> {
        let hex = cell_hexagon();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let p = Point2::new(
                    -1.0 + 2.0 * (i as f64 + 0.5) / n as f64,
                    -1.0 + 2.0 * (j as f64 + 0.5) / n as f64,
                );
                if hex.contains(p, Containment::Closed, 0.0) {
                    out.push(p);
                }
            }
        }
        out
    }

    #[test]
    fn tiny_square_regions() {
        let sq = centered(&rect(0.1, 0.1));
        let regions = build_regions(&sq, 0.0, Window::for_diameter(sq.diameter())).unwrap();
        assert_eq!(regions.len(), 7);
        for r in &regions {
            assert!(r.polygon.len() <= 4 + 6);
        }
        let origin = regions
            .iter()
            .find(|r| r.index == LatticeIndex::ORIGIN)
            .unwrap();
        assert!(origin
            .polygon
            .contains(Point2::ORIGIN, Containment::Interior, 0.0));
    }

    #[test]
    fn region_vertex_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..50 {
            let pts: Vec<Point2> = (0..8)
                .map(|_| Point2::new(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0)))
                .collect();
            let poly = centered(&crate::geom::convex_hull(&pts).unwrap());
            let t = rng.random_range(0.0..1.0);
            for r in build_regions(&poly, t, Window::for_diameter(poly.diameter())).unwrap() {
                assert!(r.polygon.len() <= poly.len() + 6);
            }
        }
    }

    #[test]
    fn membership_equivalence() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let hex = cell_hexagon();
        let mut violations = 0;
        for _ in 0..1000 {
            let pts: Vec<Point2> = (0..6)
                .map(|_| Point2::new(rng.random_range(-1.5..1.5), rng.random_range(-1.5..1.5)))
                .collect();
            let poly = centered(&crate::geom::convex_hull(&pts).unwrap());
            let theta = rng.random_range(0.0..TAU);
            let t = Point2::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            let regions =
                build_regions(&poly, theta, Window::for_diameter(poly.diameter())).unwrap();
            let placed = poly.rotate(theta).translate(t);
            for r in &regions {
                let in_region = r.polygon.depth(t);
                let cell = hex.translate(lattice_point(r.index));
                let meets = crate::geom::convex_intersects(&placed, &cell, 0.0);
                if in_region.abs() > 1e-9 && (in_region > 0.0) != meets {
                    violations += 1;
                }
            }
        }
        assert_eq!(violations, 0);
    }

    #[test]
    fn candidates_without_regions_are_corners() {
        let c = candidate_points(&[], &cell_hexagon());
        assert_eq!(c.len(), 6);
        assert!(c
            .iter()
            .all(|c| matches!(c.provenance, Provenance::HexCorner(_))));
    }

    #[test]
    fn candidates_include_constructed_crossing() {
        let sq = |x: f64, y: f64| MinkowskiRegion {
            index: LatticeIndex::ORIGIN,
            polygon: rect(1.0, 1.0).translate(Point2::new(x, y)),
        };
        let regions = vec![sq(-0.7, -0.5), sq(-0.2, -0.2)];
        let c = candidate_points(&regions, &cell_hexagon());
        for p in [Point2::new(0.3, -0.2), Point2::new(-0.2, 0.5)] {
            assert!(
                c.iter().any(|c| c.point.distance(p) < 1e-12),
                "missing {p:?}"
            );
        }
    }

    #[test]
    fn candidates_lie_in_cell() {
        let sq = centered(&rect(10.0, 10.0));
        let regions = build_regions(&sq, 0.0, Window::for_diameter(sq.diameter())).unwrap();
        let hex = cell_hexagon();
        let c = candidate_points(&regions, &hex);
        assert!(c.len() >= 6);
        let pairs = regions.len() * (regions.len() - 1) / 2;
        assert!(c.len() <= 6 + pairs * 10 * 10 + regions.len() * 10 * 7);
        for p in &c {
            assert!(hex.depth(p.point) >= -1e-8);
        }
    }

    #[test]
    fn interior_and_closed_counts() {
        let sq = centered(&rect(2.0, 1.0));
        let regions = build_regions(&sq, 0.3, Window::for_diameter(sq.diameter())).unwrap();
        assert_eq!(count_interior(Point2::new(100.0, 100.0), &regions), 0);
        let one = &regions[..1];
        assert_eq!(count_interior(one[0].polygon.centroid(), one), 1);
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..500 {
            let p = Point2::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            assert!(count_interior(p, &regions) <= count_closed(p, &regions));
        }
    }

    #[test]
    fn tiny_square_needs_one_cell() {
        let r = optimal_translation(&rect(0.1, 0.1), 0.0).unwrap();
        assert_eq!(r.count, 1);
        assert_eq!(r.indices.len(), 1);
    }

    #[test]
    fn unit_square_matches_grid_oracle() {
        let poly = rect(1.0, 1.0);
        let r = optimal_translation(&poly, 0.0).unwrap();
        assert!(r.count <= 3);
        let p0 = centered(&poly);
        let grid_min = hex_grid(200)
            .into_iter()
            .map(|t| count_at(&p0, 0.0, t))
            .min()
            .unwrap();
        assert_eq!(r.count, grid_min);
        assert!(cell_hexagon().depth(r.translation) >= -1e-12);
    }

    #[test]
    fn ten_square_below_expected() {
        let poly = rect(10.0, 10.0);
        let th = minimize_f(&poly).unwrap().theta_star.radians();
        let r = optimal_translation(&poly, th).unwrap();
        assert!(r.count <= expected_hexagons(&poly, th).floor() as usize);
        assert!(r.count <= 53);
    }

    #[test]
    fn random_polygons_beat_grid() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let grid = hex_grid(60);
        for _ in 0..8 {
            let n = rng.random_range(3..7);
            let pts: Vec<Point2> = (0..n)
                .map(|_| Point2::new(rng.random_range(0.0..2.5), rng.random_range(0.0..2.5)))
                .collect();
            let Ok(poly) = crate::geom::convex_hull(&pts) else {
                continue;
            };
            let theta = rng.random_range(0.0..1.0);
            let r = optimal_translation(&poly, theta).unwrap();
            let p0 = centered(&poly);
            for &t in &grid {
                assert!(r.count <= count_at(&p0, theta, t));
            }
            assert_eq!(r.count, count_at(&p0, theta, r.translation));
        }
    }

    #[test]
    fn cover_fixed_shortcut_and_frames() {
        let c = cover_fixed(&rect(1.0, 1.0)).unwrap();
        assert_eq!(c.count, 1);
        assert!(c.centers[0].distance(Point2::new(0.5, 0.5)) < 1e-12);
        assert!(!c.is_lattice());

        let poly = rect(10.0, 10.0).translate(Point2::new(3.0, -7.0));
        let c = cover_fixed(&poly).unwrap();
        assert_eq!(c.count, c.centers.len());
        assert!((31..=54).contains(&c.count));
        for (&i, &q) in c.indices.iter().zip(&c.centers) {
            assert!(c.to_lattice(q).distance(lattice_point(i)) < 1e-9);
        }
        // every vertex lies within one unit of a center
        for v in poly.vertices() {
            let d = c
                .centers
                .iter()
                .map(|q| q.distance(*v))
                .fold(f64::INFINITY, f64::min);
            assert!(d <= 1.0 + 1e-9);
        }
    }

    #[test]
    fn thin_rectangle() {
        // at the width-optimal angle the segment runs along cell edges
        let poly = rect(6.0, 0.01);
        let c = cover_fixed(&poly).unwrap();
        let th = c.theta.radians();
        assert!((th - PI / 6.0).abs() < 1e-6);
        assert_eq!(c.count, 5);
        assert!(c.count <= expected_hexagons(&poly, th).floor() as usize);
        // along a lattice row four cells suffice
        assert_eq!(optimal_translation(&poly, 0.0).unwrap().count, 4);
    }
}
