use std::path::{Path, PathBuf};
use std::time::Instant;

use super::bench::{run_bench, write_bench, BenchRow};
use super::files::{lattice_frame, CliError, CliResult, CoveringFile, PolygonFile};
use super::svg::render_svg;
use crate::bounds::{verify_coverage_with, BoundsReport, CoverageReport, VerifyOptions};
use crate::combined::{cover_combined, cover_nonconvex, cover_sweep, PoseOptions};
use crate::error::Error;
use crate::geom::{convex_hull, ConvexPolygon, Polygon, SimplePolygon};
use crate::orientation::minimize_f;
use crate::placement::{cover_fixed, Algorithm, Covering};

#[derive(Debug, Clone)]
pub struct CoverArgs {
    pub input: PathBuf,
    pub algorithm: Algorithm,
    pub sweep_angles: usize,
    pub output: PathBuf,
    pub svg: Option<PathBuf>,
    pub budget: u64,
}

fn read_polygon(path: &Path) -> CliResult<SimplePolygon> {
    Ok(PolygonFile::read(path)?.polygon()?)
}

fn require_convex(gamma: &SimplePolygon) -> CliResult<ConvexPolygon> {
    Ok(gamma.to_convex().ok_or(Error::NotConvex)?)
}

fn bounds_for(gamma: &SimplePolygon, theta: f64) -> CliResult<BoundsReport> {
    Ok(match gamma.to_convex() {
        Some(poly) => BoundsReport::convex(&poly, theta),
        None => {
            let hull = convex_hull(gamma.vertices())?;
            BoundsReport::simple(gamma, &hull, theta)
        }
    })
}

/// Runs one solver and writes the covering (and optionally an SVG).
///
/// When the joint search runs out of budget, a fixed-orientation covering
/// of the convex hull is written instead, flagged with `budget_hit`, and the
/// budget error is still returned.
pub fn cmd_cover(args: &CoverArgs) -> CliResult<CoveringFile> {
    let gamma = read_polygon(&args.input)?;
    let opts = PoseOptions {
        budget: args.budget,
    };
    let start = Instant::now();
    let solved = match args.algorithm {
        Algorithm::Fixed => cover_fixed(&require_convex(&gamma)?),
        Algorithm::Combined => cover_combined(&require_convex(&gamma)?, &opts),
        Algorithm::Sweep => cover_sweep(&require_convex(&gamma)?, args.sweep_angles),
        Algorithm::Nonconvex => cover_nonconvex(&gamma, &opts),
    };
    let (covering, budget_error) = match solved {
        Ok(c) => (c, None),
        Err(e @ Error::BudgetExceeded { .. }) => {
            (cover_fixed(&convex_hull(gamma.vertices())?)?, Some(e))
        }
        Err(e) => return Err(e.into()),
    };
    let runtime_ms = start.elapsed().as_secs_f64() * 1e3;

    let bounds = bounds_for(&gamma, covering.theta.radians())?;
    let file = CoveringFile::new(&covering, bounds, runtime_ms, budget_error.is_some());
    file.write(&args.output)?;
    if let Some(svg) = &args.svg {
        render_svg(&gamma, &covering, svg)?;
    }
    match budget_error {
        Some(e) => Err(e.into()),
        None => Ok(file),
    }
}

/// Bounds at the orientation that minimizes the expected cell count.
pub fn cmd_bounds(input: &Path) -> CliResult<BoundsReport> {
    let gamma = read_polygon(input)?;
    let hull = match gamma.to_convex() {
        Some(p) => p,
        None => convex_hull(gamma.vertices())?,
    };
    let theta = minimize_f(&hull)?.theta_star.radians();
    bounds_for(&gamma, theta)
}

/// Checks a covering file against its polygon in the lattice frame.
pub fn cmd_verify(input: &Path, covering: &Path, samples: usize) -> CliResult<CoverageReport> {
    let gamma = read_polygon(input)?;
    let file = CoveringFile::read(covering)?;
    let c: Covering = file.covering();
    let (pose, centers) = lattice_frame(&gamma, &c);
    let opts = VerifyOptions {
        boundary_samples: samples,
        ..VerifyOptions::default()
    };
    Ok(verify_coverage_with(&pose, &centers, &opts)?)
}

pub fn cmd_bench(
    seed: u64,
    sizes: &[u32],
    trials: usize,
    report: &Path,
) -> CliResult<Vec<BenchRow>> {
    if sizes.is_empty() || sizes.contains(&0) || trials == 0 {
        return Err(CliError::Usage(
            "bench needs at least one positive size and one trial".into(),
        ));
    }
    let rows = run_bench(seed, sizes, trials)?;
    write_bench(&rows, report)?;
    Ok(rows)
}
