//! Randomized benchmark over convex hulls of uniform points in `k × k` boxes.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::files::{write_text, CliResult};
use crate::bounds::{approximation_ratio, improved_upper, lower_bound, toth_upper};
use crate::combined::cover_sweep;
use crate::error::Result;
use crate::geom::{convex_hull, ConvexPolygon, Point2, Polygon};
use crate::placement::cover_fixed;

/// Points drawn per polygon before taking the hull.
pub const POINTS_PER_POLYGON: usize = 16;

/// Orientations tried by the sweep baseline.
pub const SWEEP_ANGLES: usize = 24;

/// Convex hull of `n` uniform points in `[0, k]²`.
pub fn random_hull(rng: &mut impl Rng, k: f64, n: usize) -> Result<ConvexPolygon> {
    let pts: Vec<Point2> = (0..n)
        .map(|_| Point2::new(rng.random_range(0.0..k), rng.random_range(0.0..k)))
        .collect();
    convex_hull(&pts)
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub k: u32,
    pub trial: usize,
    pub vertices: usize,
    pub area: f64,
    pub perimeter: f64,
    pub diameter: f64,
    pub count_fixed: usize,
    pub theta_fixed: f64,
    pub count_sweep: usize,
    pub theta_sweep: f64,
    pub toth: u64,
    /// Orientation bound at the fixed algorithm's angle.
    pub improved: u64,
    pub improved_sweep: u64,
    pub lower: f64,
    /// `count_fixed` over the explicit lower bound.
    pub ratio: f64,
    pub fixed_ms: f64,
    pub sweep_ms: f64,
}

/// Runs `trials` polygons for each size, in order. Everything but the
/// timings is determined by `seed`.
pub fn run_bench(seed: u64, sizes: &[u32], trials: usize) -> Result<Vec<BenchRow>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::with_capacity(sizes.len() * trials);
    for &k in sizes {
        for trial in 0..trials {
            let poly = random_hull(&mut rng, k as f64, POINTS_PER_POLYGON)?;
            let (a, l) = (poly.area(), poly.perimeter());

            let start = Instant::now();
            let fixed = cover_fixed(&poly)?;
            let fixed_ms = start.elapsed().as_secs_f64() * 1e3;
            let start = Instant::now();
            let sweep = cover_sweep(&poly, SWEEP_ANGLES)?;
            let sweep_ms = start.elapsed().as_secs_f64() * 1e3;

            rows.push(BenchRow {
                k,
                trial,
                vertices: poly.len(),
                area: a,
                perimeter: l,
                diameter: poly.diameter(),
                count_fixed: fixed.count,
                theta_fixed: fixed.theta.radians(),
                count_sweep: sweep.count,
                theta_sweep: sweep.theta.radians(),
                toth: toth_upper(a, l),
                improved: improved_upper(&poly, fixed.theta.radians()),
                improved_sweep: improved_upper(&poly, sweep.theta.radians()),
                lower: lower_bound(a, l, true),
                ratio: approximation_ratio(fixed.count as u64, a, l),
                fixed_ms,
                sweep_ms,
            });
        }
    }
    Ok(rows)
}

/// The deterministic table: one CSV row per polygon.
pub fn report_csv(rows: &[BenchRow]) -> String {
    let mut s = String::from("k,trial,N,A,L,count_fixed,count_sweep,toth,improved,lower,ratio\n");
    for r in rows {
        let _ = writeln!(
            s,
            "{},{},{},{:.6},{:.6},{},{},{},{},{:.6},{:.6}",
            r.k,
            r.trial,
            r.vertices,
            r.area,
            r.perimeter,
            r.count_fixed,
            r.count_sweep,
            r.toth,
            r.improved,
            r.lower,
            r.ratio
        );
    }
    s
}

/// Wall-clock timings, kept apart from the report so the report stays
/// reproducible.
pub fn timings_csv(rows: &[BenchRow]) -> String {
    let mut s = String::from("k,trial,diameter,fixed_ms,sweep_ms\n");
    for r in rows {
        let _ = writeln!(
            s,
            "{},{},{:.6},{:.3},{:.3}",
            r.k, r.trial, r.diameter, r.fixed_ms, r.sweep_ms
        );
    }
    s
}

/// Path of the timings file written next to `report`.
pub fn timings_path(report: &Path) -> PathBuf {
    let mut name = report.as_os_str().to_owned();
    name.push(".timings.csv");
    PathBuf::from(name)
}

pub fn write_bench(rows: &[BenchRow], report: &Path) -> CliResult<()> {
    write_text(report, &report_csv(rows))?;
    write_text(&timings_path(report), &timings_csv(rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_is_deterministic() {
        let a = run_bench(7, &[3, 4], 2).unwrap();
        let b = run_bench(7, &[3, 4], 2).unwrap();
        assert_eq!(a.len(), 4);
        assert_eq!(report_csv(&a), report_csv(&b));
        assert_eq!(report_csv(&a).lines().count(), 5);
        assert_ne!(
            report_csv(&a),
            report_csv(&run_bench(8, &[3, 4], 2).unwrap())
        );
    }

    #[test]
    fn hulls_stay_in_the_box() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let h = random_hull(&mut rng, 5.0, 16).unwrap();
            let b = h.bbox();
            assert!(b.min.x >= 0.0 && b.min.y >= 0.0 && b.max.x <= 5.0 && b.max.y <= 5.0);
            assert!(h.len() >= 3 && h.len() <= 16);
        }
    }

    #[test]
    fn timings_path_appends_suffix() {
        assert_eq!(
            timings_path(Path::new("/tmp/report.csv")),
            PathBuf::from("/tmp/report.csv.timings.csv")
        );
    }
}
