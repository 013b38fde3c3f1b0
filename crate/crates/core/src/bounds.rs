//! Closed-form bounds on the optimal number of discs, a coverage certifier
//! and a brute-force reference search.

use std::collections::{HashMap, HashSet};
use std::f64::consts::{FRAC_PI_3, PI};

use serde::{Deserialize, Serialize};

use crate::combined::triangulate;
use crate::error::{Error, Result};
use crate::geom::{edges, Angle, BBox, ConvexPolygon, Point2, Polygon, SimplePolygon, EPS};
use crate::lattice::{
    cell_containing, cell_hexagon, cells_intersecting, cells_intersecting_all, lattice_point,
    HexLattice, LatticeIndex, SQRT3,
};
use crate::orientation::expected_hexagons;
use crate::placement::{Diagnostics, PlacementResult};

/// Slack absorbed by the floors below, so that a value a rounding error
/// short of an integer still floors to that integer.
const FLOOR_SLACK: f64 = 1e-9;

/// Largest ratio between the lattice covering and the optimum, up to a
/// vanishing term: `1 + 8/(π√3)`.
pub const RATIO_BOUND: f64 = 1.0 + 8.0 / (PI * SQRT3);

/// Area constant in the explicit lower bound.
pub const AREA_CONSTANT: f64 = 2.0 * PI * PI * PI / 3.0;

/// Upper and lower bounds for one polygon and orientation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundsReport {
    pub toth_upper: u64,
    pub improved_upper: u64,
    pub lower_asymptotic: f64,
    pub lower_explicit: f64,
    pub ratio_bound: f64,
}

impl BoundsReport {
    /// Bounds for a convex polygon covered at orientation `theta`.
    pub fn convex(poly: &ConvexPolygon, theta: f64) -> Self {
        let (a, l) = (poly.area(), poly.perimeter());
        BoundsReport {
            toth_upper: toth_upper(a, l),
            improved_upper: improved_upper(poly, theta),
            lower_asymptotic: lower_bound(a, l, false),
            lower_explicit: lower_bound(a, l, true),
            ratio_bound: RATIO_BOUND,
        }
    }

    /// Bounds for a simple polygon. The upper bounds come from its convex
    /// hull, which is covered whenever the polygon is; the lower bounds use
    /// the polygon's own area and ignore its perimeter.
    pub fn simple(gamma: &SimplePolygon, hull: &ConvexPolygon, theta: f64) -> Self {
        let a = gamma.area();
        BoundsReport {
            toth_upper: toth_upper(hull.area(), hull.perimeter()),
            improved_upper: improved_upper(hull, theta),
            lower_asymptotic: lower_bound(a, 0.0, false),
            lower_explicit: lower_bound(a, 0.0, true),
            ratio_bound: RATIO_BOUND,
        }
    }
}

fn floor_count(x: f64) -> u64 {
    (x + FLOOR_SLACK).floor().max(0.0) as u64
}

/// Tóth's bound `⌊2A/(3√3) + 2L/(π√3) + 1⌋`.
pub fn toth_upper(area: f64, perimeter: f64) -> u64 {
    floor_count(2.0 * area / (3.0 * SQRT3) + 2.0 * perimeter / (PI * SQRT3) + 1.0)
}

/// The orientation-dependent bound: the floor of the expected number of
/// cells met at `theta`.
pub fn improved_upper(poly: &ConvexPolygon, theta: f64) -> u64 {
    floor_count(expected_hexagons(poly, theta))
}

/// Lower bound on the optimal number of unit discs. The asymptotic form is
/// `max{2A/(3√3), L/4}`; the explicit form subtracts the constants
/// `2π³/3` (from the area) and `π` (from the perimeter term) and is
/// clamped at zero.
pub fn lower_bound(area: f64, perimeter: f64, explicit: bool) -> f64 {
    if explicit {
        let by_area = 2.0 * (area - AREA_CONSTANT) / (3.0 * SQRT3);
        let by_perimeter = perimeter / 4.0 - PI;
        by_area.max(by_perimeter).max(0.0)
    } else {
        (2.0 * area / (3.0 * SQRT3)).max(perimeter / 4.0)
    }
}

/// `n` divided by the explicit lower bound; infinite when that bound is 0.
pub fn approximation_ratio(n: u64, area: f64, perimeter: f64) -> f64 {
    let lb = lower_bound(area, perimeter, true);
    if lb <= 0.0 {
        f64::INFINITY
    } else {
        n as f64 / lb
    }
}

/// Result of [`verify_coverage`].
#[derive(Debug, Clone, PartialEq)]
pub struct CoverageReport {
    pub valid: bool,
    /// How far the worst offending point is from being covered.
    pub max_violation_distance: f64,
    pub uncovered_witness: Option<Point2>,
    /// Cells compared in the exact lattice check (0 when it does not apply).
    pub cells_checked: usize,
    pub samples_checked: usize,
}

/// Tuning for [`verify_coverage_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    pub boundary_samples: usize,
    pub interior_spacing: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            boundary_samples: 10_000,
            interior_spacing: 0.05,
        }
    }
}

/// Checks that the unit discs at `centers` cover `poly`. Both must be in the
/// same frame.
///
/// When every center is a lattice point, each cell met by the polygon must
/// be among the centers; a missing cell is measured by how deep the polygon
/// reaches into it. Independently, boundary and interior samples must each
/// lie within distance 1 of some center.
pub fn verify_coverage(poly: &SimplePolygon, centers: &[Point2]) -> Result<CoverageReport> {
    verify_coverage_with(poly, centers, &VerifyOptions::default())
}

pub fn verify_coverage_with(
    poly: &SimplePolygon,
    centers: &[Point2],
    opts: &VerifyOptions,
) -> Result<CoverageReport> {
    if centers.is_empty() {
        return Err(Error::DegenerateInput("no disc centers".into()));
    }
    if let Some(p) = centers.iter().find(|p| !p.is_finite()) {
        return Err(Error::FrameMismatch(format!("center {p:?} is not finite")));
    }
    let reach = poly.bbox().inflate(poly.diameter() + 3.0);
    if let Some(p) = centers.iter().find(|&&p| !reach.contains(p)) {
        return Err(Error::FrameMismatch(format!(
            "center ({}, {}) is far from the polygon",
            p.x, p.y
        )));
    }

    let mut violation = 0.0f64;
    let mut witness = None;
    let mut cells_checked = 0;

    if let Some(claimed) = lattice_indices(centers) {
        let pieces = match poly.to_convex() {
            Some(c) => vec![c],
            None => triangulate(poly)?.triangles,
        };
        let cells = cells_intersecting_all(&pieces);
        cells_checked = cells.len();
        for idx in cells.iter().filter(|i| !claimed.contains(i)) {
            let (depth, at) = deepest_point_in_cell(&pieces, *idx);
            if depth > violation || witness.is_none() && depth > FLOOR_SLACK {
                violation = violation.max(depth);
                witness = Some(at);
            }
        }
    }

    let buckets = CenterBuckets::new(centers);
    let mut samples_checked = 0;
    let mut check = |p: Point2| {
        samples_checked += 1;
        let excess = buckets.nearest_distance(p) - 1.0;
        if excess > EPS && witness.is_none() {
            witness = Some(p);
        }
        violation = violation.max(excess);
    };
    for p in boundary_samples(poly, opts.boundary_samples) {
        check(p);
    }
    interior_grid(poly, opts.interior_spacing, &mut check);

    Ok(CoverageReport {
        valid: violation <= EPS,
        max_violation_distance: violation.max(0.0),
        uncovered_witness: witness,
        cells_checked,
        samples_checked,
    })
}

/// The lattice indices of `centers`, or `None` if some center is not a
/// lattice point.
fn lattice_indices(centers: &[Point2]) -> Option<HashSet<LatticeIndex>> {
    centers
        .iter()
        .map(|&p| {
            let idx = cell_containing(p);
            (lattice_point(idx).distance(p) <= 1e-7 * (1.0 + p.norm())).then_some(idx)
        })
        .collect()
}

/// Deepest point of the pieces inside cell `idx`, measured by the distance
/// to the cell boundary. Checks the vertices and centroid of each clipped
/// piece.
fn deepest_point_in_cell(pieces: &[ConvexPolygon], idx: LatticeIndex) -> (f64, Point2) {
    let cell = cell_hexagon().translate(lattice_point(idx));
    let mut best = (f64::NEG_INFINITY, lattice_point(idx));
    for piece in pieces {
        let clipped = clip_to_convex(piece.vertices(), &cell);
        if clipped.is_empty() {
            continue;
        }
        let mut probe = clipped.clone();
        let inv = 1.0 / clipped.len() as f64;
        probe.push(clipped.iter().fold(Point2::ORIGIN, |s, &p| s + p * inv));
        for p in probe {
            let d = cell.depth(p);
            if d > best.0 {
                best = (d, p);
            }
        }
    }
    (best.0.max(0.0), best.1)
}

/// Sutherland–Hodgman clipping of a convex polygon against a convex one.
fn clip_to_convex(subject: &[Point2], clip: &ConvexPolygon) -> Vec<Point2> {
    let mut out = subject.to_vec();
    for i in 0..clip.len() {
        if out.is_empty() {
            break;
        }
        let input = std::mem::take(&mut out);
        let n = input.len();
        for k in 0..n {
            let (a, b) = (input[k], input[(k + 1) % n]);
            let (da, db) = (clip.edge_distance(i, a), clip.edge_distance(i, b));
            if da >= 0.0 {
                out.push(a);
            }
            if (da >= 0.0) != (db >= 0.0) {
                out.push(a.lerp(b, da / (da - db)));
            }
        }
    }
    out
}

/// Centers hashed into unit squares for nearest-center queries.
struct CenterBuckets<'a> {
    all: &'a [Point2],
    grid: HashMap<(i64, i64), Vec<Point2>>,
}

impl<'a> CenterBuckets<'a> {
    fn new(all: &'a [Point2]) -> Self {
        let mut grid: HashMap<(i64, i64), Vec<Point2>> = HashMap::new();
        for &p in all {
            grid.entry(Self::key(p)).or_default().push(p);
        }
        CenterBuckets { all, grid }
    }

    fn key(p: Point2) -> (i64, i64) {
        (p.x.floor() as i64, p.y.floor() as i64)
    }

    /// Exact when the answer is at most 1; otherwise falls back to a scan.
    fn nearest_distance(&self, p: Point2) -> f64 {
        let (kx, ky) = Self::key(p);
        let mut best = f64::INFINITY;
        for dx in -1..=1 {
            for dy in -1..=1 {
                if let Some(v) = self.grid.get(&(kx + dx, ky + dy)) {
                    for &c in v {
                        best = best.min(c.distance(p));
                    }
                }
            }
        }
        if best <= 1.0 {
            return best;
        }
        self.all.iter().map(|c| c.distance(p)).fold(best, f64::min)
    }
}

/// The vertices plus `count` points spread evenly by arc length.
fn boundary_samples(poly: &SimplePolygon, count: usize) -> Vec<Point2> {
    let v = poly.vertices();
    let total = poly.perimeter();
    let mut out = v.to_vec();
    if count == 0 || total <= 0.0 {
        return out;
    }
    let step = total / count as f64;
    let mut walked = 0.0;
    let mut k = 0usize;
    for (a, b) in edges(v) {
        let len = a.distance(b);
        while k < count {
            let s = (k as f64 + 0.5) * step - walked;
            if s > len {
                break;
            }
            out.push(a.lerp(b, s / len));
            k += 1;
        }
        walked += len;
    }
    out
}

/// Visits the points of a triangular grid with the given spacing that lie
/// inside the polygon, row by row.
fn interior_grid(poly: &SimplePolygon, spacing: f64, visit: &mut impl FnMut(Point2)) {
    if spacing <= 0.0 {
        return;
    }
    let b: BBox = poly.bbox();
    let dy = spacing * SQRT3 / 2.0;
    let rows = ((b.max.y - b.min.y) / dy).floor() as usize;
    let mut xs = Vec::new();
    for j in 0..=rows {
        let y = b.min.y + j as f64 * dy;
        xs.clear();
        for (a, c) in edges(poly.vertices()) {
            if (a.y <= y) != (c.y <= y) {
                xs.push(a.x + (y - a.y) / (c.y - a.y) * (c.x - a.x));
            }
        }
        xs.sort_by(f64::total_cmp);
        let offset = if j % 2 == 1 { spacing / 2.0 } else { 0.0 };
        for span in xs.chunks_exact(2) {
            let first = ((span[0] - b.min.x - offset) / spacing).ceil() as i64;
            let mut x = b.min.x + offset + first as f64 * spacing;
            while x <= span[1] {
                visit(Point2::new(x, y));
                x += spacing;
            }
        }
    }
}

/// Exhaustive search over `theta_grid` equally spaced orientations in
/// `[0, π/3)` and a `trans_grid × trans_grid` grid of translations over a
/// fundamental parallelogram of the lattice. Returns the best pose found
/// with its exact count; ties keep the first pose in scan order.
pub fn oracle_grid_search(
    poly: &ConvexPolygon,
    theta_grid: usize,
    trans_grid: usize,
) -> Result<PlacementResult> {
    if theta_grid == 0 || trans_grid == 0 {
        return Err(Error::DegenerateInput(
            "oracle grid must be non-empty".into(),
        ));
    }
    let centroid = poly.centroid();
    let centered = poly.translate(-centroid);
    let mut best: Option<(usize, f64, Point2)> = None;
    for i in 0..theta_grid {
        let theta = FRAC_PI_3 * i as f64 / theta_grid as f64;
        let rotated = centered.rotate(theta);
        for a in 0..trans_grid {
            for b in 0..trans_grid {
                let t = HexLattice::BASIS1 * (a as f64 / trans_grid as f64)
                    + HexLattice::BASIS2 * (b as f64 / trans_grid as f64);
                let count = cells_intersecting(&rotated.translate(t)).len();
                if best.is_none_or(|(c, _, _)| count < c) {
                    best = Some((count, theta, t));
                }
            }
        }
    }
    let (count, theta, t) = best.expect("grid is non-empty");
    let indices = cells_intersecting(&centered.rotate(theta).translate(t));
    Ok(PlacementResult {
        translation: t,
        theta: Angle::new(theta),
        count,
        indices,
        centroid,
        diagnostics: Diagnostics {
            candidates_evaluated: theta_grid * trans_grid * trans_grid,
            slices: theta_grid,
            ..Diagnostics::default()
        },
    })
}

/// `|∫₀^π w(θ) dθ − L|` by the midpoint rule on 10⁴ points.
pub fn cauchy_residual(poly: &ConvexPolygon) -> f64 {
    const N: usize = 10_000;
    let h = PI / N as f64;
    let integral: f64 = (0..N)
        .map(|k| poly.width((k as f64 + 0.5) * h))
        .sum::<f64>()
        * h;
    (integral - poly.perimeter()).abs()
}
