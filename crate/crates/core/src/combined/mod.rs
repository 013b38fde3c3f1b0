//! Joint optimization of orientation and translation.
//!
//! In `(x, y, θ)` space the region boundaries sweep out surfaces, and the
//! cell count is constant on every open cell of their arrangement inside the
//! prism `⬡₀ × [0, π/3]`. The combinatorics of a `θ`-slice only change at
//! angles where three surfaces meet or where a facet appears or disappears.
//! Between consecutive such angles one exact slice search (the fixed-angle
//! algorithm) finds the best open cell, so the global optimum is the best
//! slice over the midpoints of those intervals.

mod roots;
mod surfaces;
mod triangulate;

pub use roots::{eval_poly, real_roots_in};
pub use surfaces::{
    build_surfaces, facet_switch_angles, prism_faces, triple_intersection, Candidate3D, Prism,
    SurfaceKind, SweptSurface, Trig,
};
pub use triangulate::{triangulate, Triangulation};

use std::f64::consts::FRAC_PI_3;

use crate::error::{Error, Result};
use crate::geom::{ConvexPolygon, Point2, Polygon, SimplePolygon};
use crate::lattice::Window;
use crate::placement::{
    count_interior, finish, regions_for_pieces, search_slice, Algorithm, Covering, Diagnostics,
    PlacementResult,
};
use surfaces::{overlapping_triples, triple_intersection_ids};

/// Default cap on the number of surface triples examined.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Settings for the joint search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoseOptions {
    /// Maximum number of surface triples before giving up with
    /// [`Error::BudgetExceeded`].
    pub budget: u64,
}

impl Default for PoseOptions {
    fn default() -> Self {
        PoseOptions {
            budget: DEFAULT_BUDGET,
        }
    }
}

/// Interior count at a 3D candidate, from the regions rebuilt at its angle.
/// `poly` must be centered at the placement's reference point.
pub fn count_at(candidate: &Candidate3D, poly: &ConvexPolygon, window: Window) -> Result<usize> {
    let regions = regions_for_pieces(std::slice::from_ref(poly), candidate.theta, window)?;
    Ok(count_interior(
        Point2::new(candidate.x, candidate.y),
        &regions,
    ))
}

/// Best joint pose of a convex polygon with the default budget.
pub fn optimal_pose(poly: &ConvexPolygon) -> Result<PlacementResult> {
    optimal_pose_with(poly, &PoseOptions::default())
}

pub fn optimal_pose_with(poly: &ConvexPolygon, opts: &PoseOptions) -> Result<PlacementResult> {
    let c = poly.centroid();
    let centered = poly.translate(-c);
    let window = Window::for_diameter(poly.diameter());
    joint_search(&[centered], c, window, opts)
}

/// Best joint pose of a simple polygon, via a triangulation. A lattice cell
/// is counted once however many triangles meet it.
pub fn optimal_pose_nonconvex(gamma: &SimplePolygon) -> Result<PlacementResult> {
    optimal_pose_nonconvex_with(gamma, &PoseOptions::default())
}

pub fn optimal_pose_nonconvex_with(
    gamma: &SimplePolygon,
    opts: &PoseOptions,
) -> Result<PlacementResult> {
    let c = gamma.centroid();
    let centered = gamma.translate(-c);
    let tri = triangulate(&centered)?;
    let window = Window::for_diameter(gamma.diameter());
    joint_search(&tri.triangles, c, window, opts)
}

fn joint_search(
    pieces: &[ConvexPolygon],
    centroid: Point2,
    window: Window,
    opts: &PoseOptions,
) -> Result<PlacementResult> {
    let mut all = Vec::new();
    for (i, p) in pieces.iter().enumerate() {
        all.extend(build_surfaces(p, i, window)?);
    }
    // the caps only produce θ = 0 and θ = π/3, which are always cut points
    all.extend(prism_faces().into_iter().filter(|s| !s.is_cap()));

    let triples = overlapping_triples(&all, opts.budget)?;
    let mut diagnostics = Diagnostics {
        surface_triples: triples.len() as u64,
        ..Default::default()
    };

    let mut cuts: Vec<f64> = vec![0.0, FRAC_PI_3];
    for p in pieces {
        cuts.extend(facet_switch_angles(p));
    }
    for &(i, j, k) in &triples {
        match triple_intersection_ids([&all[i], &all[j], &all[k]], (i, j, k)) {
            Ok(found) => {
                diagnostics.candidates_evaluated += found.len();
                cuts.extend(found.iter().map(|c| c.theta));
            }
            Err(Error::IllConditioned) => diagnostics.ill_conditioned += 1,
            Err(e) => return Err(e),
        }
    }
    cuts.sort_by(f64::total_cmp);
    cuts.dedup_by(|a, b| (*a - *b).abs() <= 1e-9);

    let mut best: Option<(usize, f64, Point2)> = None;
    for w in cuts.windows(2) {
        let theta = 0.5 * (w[0] + w[1]);
        let regions = regions_for_pieces(pieces, theta, window)?;
        let s = search_slice(&regions);
        diagnostics.slices += 1;
        if best.is_none_or(|(n, _, _)| s.count < n) {
            best = Some((s.count, theta, s.point));
        }
    }
    let (_, theta, point) = best.expect("at least one slice");
    let mut r = finish(pieces, centroid, theta, point);
    r.diagnostics = diagnostics;
    Ok(r)
}

/// Best fixed-angle placement over `k` equally spaced angles
/// `i·(π/3)/k`, `i = 0..k`. Ties go to the smaller angle.
pub fn sweep_baseline(poly: &ConvexPolygon, k: usize) -> Result<PlacementResult> {
    let k = k.max(1);
    let c = poly.centroid();
    let centered = [poly.translate(-c)];
    let window = Window::for_diameter(poly.diameter());
    let mut best: Option<PlacementResult> = None;
    let mut evaluated = 0;
    for i in 0..k {
        let theta = i as f64 * FRAC_PI_3 / k as f64;
        let r = crate::placement::place_pieces(&centered, c, theta, window)?;
        evaluated += r.diagnostics.candidates_evaluated;
        if best.as_ref().is_none_or(|b| r.count < b.count) {
            best = Some(r);
        }
    }
    let mut r = best.expect("k >= 1");
    r.diagnostics = Diagnostics {
        candidates_evaluated: evaluated,
        slices: k,
        ..Default::default()
    };
    Ok(r)
}

/// Covering from the joint search, or one disc when it suffices.
pub fn cover_combined(poly: &ConvexPolygon, opts: &PoseOptions) -> Result<Covering> {
    if let Some(c) = Covering::single_disc(poly.vertices(), Algorithm::Combined) {
        return Ok(c);
    }
    Ok(Covering::from_placement(
        &optimal_pose_with(poly, opts)?,
        Algorithm::Combined,
    ))
}

/// Covering from the non-convex joint search, or one disc when it suffices.
pub fn cover_nonconvex(gamma: &SimplePolygon, opts: &PoseOptions) -> Result<Covering> {
    if let Some(c) = Covering::single_disc(gamma.vertices(), Algorithm::Nonconvex) {
        return Ok(c);
    }
    let r = optimal_pose_nonconvex_with(gamma, opts)?;
    Ok(Covering::from_placement(&r, Algorithm::Nonconvex))
}

/// Covering from the angle sweep, or one disc when it suffices.
pub fn cover_sweep(poly: &ConvexPolygon, k: usize) -> Result<Covering> {
    if let Some(c) = Covering::single_disc(poly.vertices(), Algorithm::Sweep) {
        return Ok(c);
    }
    Ok(Covering::from_placement(
        &sweep_baseline(poly, k)?,
        Algorithm::Sweep,
    ))
}
