//! The hexagonal lattice with basis `(√3, 0)`, `(√3/2, 3/2)`, its Voronoi
//! cell (a regular hexagon of circumradius 1) and exact cell queries.

use std::f64::consts::{FRAC_PI_3, FRAC_PI_6};

use crate::error::{Error, Result};
use crate::geom::{convex_intersects, ConvexPolygon, Point2, Polygon, EPS};

pub const SQRT3: f64 = 1.732_050_807_568_877_2;

/// Area of one lattice cell, `3√3/2`.
pub const CELL_AREA: f64 = 1.5 * SQRT3;

/// Integer coordinates of a lattice point. Orders lexicographically by `(m, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LatticeIndex {
    pub m: i64,
    pub n: i64,
}

impl LatticeIndex {
    pub const ORIGIN: LatticeIndex = LatticeIndex { m: 0, n: 0 };

    pub const fn new(m: i64, n: i64) -> Self {
        Self { m, n }
    }
}

/// The fixed lattice. Exists to name the basis; all queries are free functions.
#[derive(Debug, Clone, Copy, Default)]
pub struct HexLattice;

impl HexLattice {
    pub const BASIS1: Point2 = Point2::new(SQRT3, 0.0);
    pub const BASIS2: Point2 = Point2::new(SQRT3 / 2.0, 1.5);
}

pub fn lattice_point(idx: LatticeIndex) -> Point2 {
    HexLattice::BASIS1 * idx.m as f64 + HexLattice::BASIS2 * idx.n as f64
}

/// Real-valued lattice coordinates `(m, n)` of `p`.
pub fn lattice_coords(p: Point2) -> (f64, f64) {
    let n = p.y / 1.5;
    let m = (p.x - n * SQRT3 / 2.0) / SQRT3;
    (m, n)
}

/// Phase of the Voronoi cell: vertices at `π/6 + kπ/3`, edge normals at `kπ/3`.
pub const CELL_PHASE: f64 = FRAC_PI_6;

/// Regular hexagon of circumradius 1 centered at the origin with vertices at
/// angles `phase + kπ/3`. Only the phases `0` and `π/6` are supported; `π/6`
/// is the lattice's Voronoi cell.
pub fn canonical_hexagon(phase: f64) -> Result<ConvexPolygon> {
    let phase_ok = phase.abs() < 1e-12 || (phase - FRAC_PI_6).abs() < 1e-12;
    if !phase_ok {
        return Err(Error::UnsupportedPhase(phase));
    }
    Ok(hexagon_with_phase(phase))
}

fn hexagon_with_phase(phase: f64) -> ConvexPolygon {
    let v = (0..6)
        .map(|k| Point2::from_angle(phase + k as f64 * FRAC_PI_3))
        .collect();
    ConvexPolygon::from_trusted(v)
}

/// The Voronoi cell of the origin.
pub fn cell_hexagon() -> ConvexPolygon {
    hexagon_with_phase(CELL_PHASE)
}

/// Vertex `k` of [`cell_hexagon`], at angle `π/6 + kπ/3`.
pub fn cell_vertex(k: usize) -> Point2 {
    Point2::from_angle(CELL_PHASE + (k % 6) as f64 * FRAC_PI_3)
}

/// Support function of the hexagon with vertex phase `phase`:
/// `max_k cos(φ − phase − kπ/3)`.
pub fn hex_support(phi: f64, phase: f64) -> f64 {
    (0..6)
        .map(|k| (phi - phase - k as f64 * FRAC_PI_3).cos())
        .fold(f64::NEG_INFINITY, f64::max)
}

/// The square `[-h, h]²` searched for lattice points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window {
    half_extent: f64,
}

impl Window {
    pub fn new(half_extent: f64) -> Result<Self> {
        if !half_extent.is_finite() || half_extent < 3.0 {
            return Err(Error::InvalidWindow(half_extent));
        }
        Ok(Self { half_extent })
    }

    /// Window for a region of diameter `d`: half-extent `d + 3`.
    pub fn for_diameter(d: f64) -> Self {
        Self {
            half_extent: d.max(0.0) + 3.0,
        }
    }

    pub fn half_extent(&self) -> f64 {
        self.half_extent
    }
}

pub fn indices_in_window(w: Window) -> Vec<LatticeIndex> {
    let h = w.half_extent;
    let n_max = (h / 1.5).floor() as i64;
    let mut out = Vec::new();
    for n in -n_max..=n_max {
        let shift = n as f64 * SQRT3 / 2.0;
        let m_lo = ((-h - shift) / SQRT3).ceil() as i64 - 1;
        let m_hi = ((h - shift) / SQRT3).floor() as i64 + 1;
        for m in m_lo..=m_hi {
            let p = lattice_point(LatticeIndex::new(m, n));
            if p.x.abs() <= h && p.y.abs() <= h {
                out.push(LatticeIndex::new(m, n));
            }
        }
    }
    out
}

/// Index of the lattice point whose closed Voronoi cell contains `p`; ties go
/// to the lexicographically smallest index.
pub fn cell_containing(p: Point2) -> LatticeIndex {
    let (m, n) = lattice_coords(p);
    let (m0, n0) = (m.round() as i64, n.round() as i64);
    let tol = 1e-12 * (1.0 + p.norm());
    let mut best = LatticeIndex::new(m0, n0);
    let mut best_d = f64::INFINITY;
    // neighbors of the rounded coordinate, visited in lexicographic order
    for dm in -1..=1 {
        for dn in -1..=1 {
            let idx = LatticeIndex::new(m0 + dm, n0 + dn);
            let d = p.distance(lattice_point(idx));
            if d < best_d - tol || ((d - best_d).abs() <= tol && idx < best) {
                best = idx;
                best_d = d;
            }
        }
    }
    best
}

/// All cells whose closed hexagon meets the closed polygon (touching within
/// [`EPS`] counts), sorted.
pub fn cells_intersecting(poly: &ConvexPolygon) -> Vec<LatticeIndex> {
    cells_intersecting_all(std::slice::from_ref(poly))
}

/// Union of [`cells_intersecting`] over several convex pieces, sorted and deduplicated.
pub fn cells_intersecting_all(pieces: &[ConvexPolygon]) -> Vec<LatticeIndex> {
    let hex = cell_hexagon();
    let mut out = Vec::new();
    for poly in pieces {
        let b = poly.bbox();
        let n_lo = ((b.min.y - 1.0) / 1.5).floor() as i64;
        let n_hi = ((b.max.y + 1.0) / 1.5).ceil() as i64;
        for n in n_lo..=n_hi {
            let shift = n as f64 * SQRT3 / 2.0;
            let m_lo = ((b.min.x - 1.0 - shift) / SQRT3).floor() as i64;
            let m_hi = ((b.max.x + 1.0 - shift) / SQRT3).ceil() as i64;
            for m in m_lo..=m_hi {
                let idx = LatticeIndex::new(m, n);
                let c = lattice_point(idx);
                let cell_box = hex.bbox().translate(c).inflate(EPS);
                if !cell_box.intersects(&b) {
                    continue;
                }
                if convex_intersects(poly, &hex.translate(c), EPS) {
                    out.push(idx);
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}
