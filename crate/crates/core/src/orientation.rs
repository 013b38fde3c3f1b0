//! Choice of the lattice orientation: the width objective `f`, its exact
//! minimization over one period, and the expected cell count at a given angle.
//!
//! With the Voronoi cell normals at `kπ/3`, rotating the polygon by `θ` exposes
//! the widths `w(kπ/3 − θ)` to the three lattice directions, so
//! `f(θ) = Σₖ w(kπ/3 − θ)`. This is the convention under which
//! `area(R(π+θ)Ω ⊕ ⬡₀) = A + 3√3/2 + f(θ)` holds exactly.

use std::f64::consts::{FRAC_PI_3, PI};

use crate::error::{Error, Result};
use crate::geom::{wrap, Angle, ConvexPolygon, Point2, Polygon};
use crate::lattice::CELL_AREA;

/// One piece of the width function: on `[start, end)` the width is
/// `(v − u)·(cos θ, sin θ)` for fixed vertices `v` (support in direction `θ`)
/// and `u` (support in direction `θ + π`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WidthPiece {
    pub start: f64,
    pub end: f64,
    pub v: usize,
    pub u: usize,
}

/// Piecewise-sinusoidal description of `w(θ)` on `[0, π)`.
#[derive(Debug, Clone, PartialEq)]
pub struct WidthProfile {
    pub breakpoints: Vec<f64>,
    pub pieces: Vec<WidthPiece>,
    vertices: Vec<Point2>,
}

impl WidthProfile {
    fn piece_at(&self, theta: f64) -> &WidthPiece {
        let t = wrap(theta, PI);
        let i = self.pieces.partition_point(|p| p.end <= t);
        &self.pieces[i.min(self.pieces.len() - 1)]
    }

    /// Width along `theta`, evaluated from the active vertex pair.
    pub fn eval(&self, theta: f64) -> f64 {
        let p = self.piece_at(theta);
        let d = self.vertices[p.v] - self.vertices[p.u];
        let t = wrap(theta, PI);
        d.dot(Point2::from_angle(t))
    }
}

/// Builds the width profile. Breakpoints are the outward edge-normal angles
/// of the polygon and of its reflection, reduced mod π.
pub fn width_profile(poly: &ConvexPolygon) -> Result<WidthProfile> {
    if poly.len() < 3 {
        return Err(Error::DegenerateInput(
            "width profile needs a polygon".into(),
        ));
    }
    let mut bps: Vec<f64> = (0..poly.len())
        .map(|i| wrap(poly.edge_normal_angle(i), PI))
        .collect();
    bps.sort_by(f64::total_cmp);
    bps.dedup_by(|a, b| (*a - *b).abs() < 1e-14);
    if bps.len() > 1 && PI - bps[bps.len() - 1] + bps[0] < 1e-14 {
        bps.pop();
    }
    let mut bounds = bps.clone();
    if bounds.first().is_none_or(|&b| b > 0.0) {
        bounds.insert(0, 0.0);
    }
    bounds.push(PI);
    let pieces = bounds
        .windows(2)
        .filter(|w| w[1] > w[0])
        .map(|w| {
            let mid = 0.5 * (w[0] + w[1]);
            WidthPiece {
                start: w[0],
                end: w[1],
                v: poly.support_vertex(mid),
                u: poly.support_vertex(mid + PI),
            }
        })
        .collect();
    Ok(WidthProfile {
        breakpoints: bps,
        pieces,
        vertices: poly.vertices().to_vec(),
    })
}

/// Sum of the polygon's widths along the three lattice normals after
/// rotating it by `theta`.
pub fn objective_f(poly: &ConvexPolygon, theta: f64) -> f64 {
    (0..3)
        .map(|k| poly.width(k as f64 * FRAC_PI_3 - theta))
        .sum()
}

/// Result of [`minimize_f`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObjectiveReport {
    /// Minimizer in `[0, π/3)`.
    pub theta_star: Angle,
    pub f_min: f64,
    pub evaluated_candidates: usize,
}

/// Exact global minimum of [`objective_f`] over `[0, π/3)`.
///
/// Between breakpoints `f` is one sinusoid `a cos θ + b sin θ`, so the
/// minimum is at a breakpoint or at that sinusoid's trough. Ties go to the
/// smallest angle.
pub fn minimize_f(poly: &ConvexPolygon) -> Result<ObjectiveReport> {
    let profile = width_profile(poly)?;
    let verts = poly.vertices();

    // w(kπ/3 − θ) changes piece when kπ/3 − θ ≡ β (mod π), i.e. θ ≡ −β (mod π/3)
    let mut cuts: Vec<f64> = profile
        .breakpoints
        .iter()
        .map(|&b| reduce_period(-b))
        .collect();
    cuts.push(0.0);
    cuts.sort_by(f64::total_cmp);
    cuts.dedup_by(|a, b| (*a - *b).abs() < 1e-14);

    let mut candidates = cuts.clone();
    let mut ends = cuts.clone();
    ends.push(FRAC_PI_3);
    for w in ends.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        if hi - lo < 1e-15 {
            continue;
        }
        let mid = 0.5 * (lo + hi);
        let (mut a, mut b) = (0.0, 0.0);
        for k in 0..3 {
            let alpha = k as f64 * FRAC_PI_3;
            let p = profile.piece_at(alpha - mid);
            let d = verts[p.v] - verts[p.u];
            // d · (cos(α−θ), sin(α−θ)) expanded in cos θ, sin θ
            let (sa, ca) = alpha.sin_cos();
            a += d.x * ca + d.y * sa;
            b += d.x * sa - d.y * ca;
        }
        if a == 0.0 && b == 0.0 {
            continue;
        }
        let trough = reduce_period(b.atan2(a) + PI);
        if trough > lo && trough < hi {
            candidates.push(trough);
        }
    }

    let mut best_theta = 0.0;
    let mut best_f = f64::INFINITY;
    candidates.sort_by(f64::total_cmp);
    for &t in &candidates {
        let f = objective_f(poly, t);
        if f < best_f - 1e-12 * (1.0 + best_f.abs().min(f64::MAX)) {
            best_f = f;
            best_theta = t;
        }
    }
    Ok(ObjectiveReport {
        theta_star: Angle::new(best_theta),
        f_min: best_f,
        evaluated_candidates: candidates.len(),
    })
}

fn reduce_period(t: f64) -> f64 {
    let r = wrap(t, FRAC_PI_3);
    if FRAC_PI_3 - r < 1e-15 {
        0.0
    } else {
        r
    }
}

/// Expected number of cells met by the polygon under a uniformly random
/// translation at orientation `theta`.
pub fn expected_hexagons(poly: &ConvexPolygon, theta: f64) -> f64 {
    expected_hexagons_from(poly.area(), objective_f(poly, theta))
}

/// Same as [`expected_hexagons`] from the area and objective value:
/// `(A + f)/(3√3/2) + 1`.
pub fn expected_hexagons_from(area: f64, f: f64) -> f64 {
    (area + f) / CELL_AREA + 1.0
}
