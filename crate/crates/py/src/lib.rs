use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use hexcover_core::bounds::{self as hb, BoundsReport, CoverageReport};
use hexcover_core::combined::{
    cover_combined, cover_nonconvex, cover_sweep, PoseOptions, DEFAULT_BUDGET,
};
use hexcover_core::geom::{convex_hull, ConvexPolygon, Point2, Polygon, SimplePolygon};
use hexcover_core::io::lattice_frame;
use hexcover_core::lattice;
use hexcover_core::orientation;
use hexcover_core::placement::{cover_fixed, Algorithm, Covering};
use hexcover_core::Error;

create_exception!(hexcover, BudgetExceededError, PyRuntimeError);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::BudgetExceeded { .. } => BudgetExceededError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn points(v: &[(f64, f64)]) -> Vec<Point2> {
    v.iter().map(|&p| p.into()).collect()
}

fn simple(v: &[(f64, f64)]) -> PyResult<SimplePolygon> {
    SimplePolygon::new(points(v)).map_err(to_py)
}

fn convex(v: &[(f64, f64)]) -> PyResult<ConvexPolygon> {
    ConvexPolygon::new(points(v)).map_err(to_py)
}

/// A set of unit discs covering a polygon. `theta` and `translation` map
/// input points into the lattice frame as p -> R(theta) p + translation.
#[pyclass(name = "Covering", frozen, get_all)]
struct PyCovering {
    theta: f64,
    translation: (f64, f64),
    centers: Vec<(f64, f64)>,
    indices: Vec<(i64, i64)>,
    count: usize,
    algorithm: String,
    candidates_evaluated: usize,
}

impl From<&Covering> for PyCovering {
    fn from(c: &Covering) -> Self {
        PyCovering {
            theta: c.theta.radians(),
            translation: (c.translation.x, c.translation.y),
            centers: c.centers.iter().map(|p| (p.x, p.y)).collect(),
            indices: c.indices.iter().map(|i| (i.m, i.n)).collect(),
            count: c.count,
            algorithm: c.algorithm.name().to_string(),
            candidates_evaluated: c.diagnostics.candidates_evaluated,
        }
    }
}

#[pymethods]
impl PyCovering {
    fn __len__(&self) -> usize {
        self.count
    }

    fn __repr__(&self) -> String {
        format!(
            "Covering(count={}, algorithm='{}', theta={})",
            self.count, self.algorithm, self.theta
        )
    }
}

#[pyclass(name = "Bounds", frozen, get_all)]
struct PyBounds {
    toth_upper: u64,
    improved_upper: u64,
    lower_asymptotic: f64,
    lower_explicit: f64,
    ratio_bound: f64,
}

impl From<BoundsReport> for PyBounds {
    fn from(b: BoundsReport) -> Self {
        PyBounds {
            toth_upper: b.toth_upper,
            improved_upper: b.improved_upper,
            lower_asymptotic: b.lower_asymptotic,
            lower_explicit: b.lower_explicit,
            ratio_bound: b.ratio_bound,
        }
    }
}

#[pymethods]
impl PyBounds {
    fn __repr__(&self) -> String {
        format!(
            "Bounds(toth_upper={}, improved_upper={}, lower_explicit={:.4})",
            self.toth_upper, self.improved_upper, self.lower_explicit
        )
    }
}

#[pyclass(name = "CoverageReport", frozen, get_all)]
struct PyCoverageReport {
    valid: bool,
    max_violation_distance: f64,
    uncovered_witness: Option<(f64, f64)>,
    cells_checked: usize,
    samples_checked: usize,
}

impl From<CoverageReport> for PyCoverageReport {
    fn from(r: CoverageReport) -> Self {
        PyCoverageReport {
            valid: r.valid,
            max_violation_distance: r.max_violation_distance,
            uncovered_witness: r.uncovered_witness.map(|p| (p.x, p.y)),
            cells_checked: r.cells_checked,
            samples_checked: r.samples_checked,
        }
    }
}

#[pymethods]
impl PyCoverageReport {
    fn __bool__(&self) -> bool {
        self.valid
    }
}

/// Covers the polygon with unit discs.
///
/// `algorithm` is one of "fixed", "combined", "nonconvex" or "sweep".
#[pyfunction]
#[pyo3(signature = (vertices, algorithm = "fixed", sweep_angles = 720, budget = DEFAULT_BUDGET))]
fn cover(
    py: Python<'_>,
    vertices: Vec<(f64, f64)>,
    algorithm: &str,
    sweep_angles: usize,
    budget: u64,
) -> PyResult<PyCovering> {
    let algorithm: Algorithm = algorithm.parse().map_err(PyValueError::new_err)?;
    let opts = PoseOptions { budget };
    let c = match algorithm {
        Algorithm::Nonconvex => {
            let gamma = simple(&vertices)?;
            py.detach(|| cover_nonconvex(&gamma, &opts))
        }
        _ => {
            let poly = convex(&vertices)?;
            py.detach(|| match algorithm {
                Algorithm::Combined => cover_combined(&poly, &opts),
                Algorithm::Sweep => cover_sweep(&poly, sweep_angles),
                _ => cover_fixed(&poly),
            })
        }
    }
    .map_err(to_py)?;
    Ok(PyCovering::from(&c))
}

/// Upper and lower bounds at the given orientation, or at the orientation
/// minimizing the expected cell count when `theta` is omitted.
#[pyfunction]
#[pyo3(signature = (vertices, theta = None))]
fn bounds(vertices: Vec<(f64, f64)>, theta: Option<f64>) -> PyResult<PyBounds> {
    let gamma = simple(&vertices)?;
    let hull = convex_hull(gamma.vertices()).map_err(to_py)?;
    let theta = match theta {
        Some(t) => t,
        None => orientation::minimize_f(&hull).map_err(to_py)?.theta_star.radians(),
    };
    let report = match gamma.to_convex() {
        Some(poly) => BoundsReport::convex(&poly, theta),
        None => BoundsReport::simple(&gamma, &hull, theta),
    };
    Ok(report.into())
}

/// Checks that `covering` covers the polygon given in input coordinates.
#[pyfunction]
fn verify(vertices: Vec<(f64, f64)>, covering: &PyCovering) -> PyResult<PyCoverageReport> {
    let gamma = simple(&vertices)?;
    let c = Covering {
        theta: covering.theta.into(),
        translation: covering.translation.into(),
        centers: points(&covering.centers),
        indices: Vec::new(),
        count: covering.count,
        algorithm: covering.algorithm.parse().map_err(PyValueError::new_err)?,
        diagnostics: Default::default(),
    };
    let (pose, centers) = lattice_frame(&gamma, &c);
    hb::verify_coverage(&pose, &centers)
        .map(Into::into)
        .map_err(to_py)
}

/// Sum of the widths at the three lattice directions relative to `theta`.
#[pyfunction]
fn objective_f(vertices: Vec<(f64, f64)>, theta: f64) -> PyResult<f64> {
    Ok(orientation::objective_f(&convex(&vertices)?, theta))
}

/// Returns `(theta_star, f_min)`.
#[pyfunction]
fn minimize_f(vertices: Vec<(f64, f64)>) -> PyResult<(f64, f64)> {
    let r = orientation::minimize_f(&convex(&vertices)?).map_err(to_py)?;
    Ok((r.theta_star.radians(), r.f_min))
}

#[pyfunction]
fn expected_hexagons(vertices: Vec<(f64, f64)>, theta: f64) -> PyResult<f64> {
    Ok(orientation::expected_hexagons(&convex(&vertices)?, theta))
}

#[pyfunction]
fn toth_upper(area: f64, perimeter: f64) -> u64 {
    hb::toth_upper(area, perimeter)
}

#[pyfunction]
#[pyo3(signature = (area, perimeter, explicit = true))]
fn lower_bound(area: f64, perimeter: f64, explicit: bool) -> f64 {
    hb::lower_bound(area, perimeter, explicit)
}

/// Lattice cells `(m, n)` met by the convex polygon as placed.
#[pyfunction]
fn cells_intersecting(vertices: Vec<(f64, f64)>) -> PyResult<Vec<(i64, i64)>> {
    let poly = convex(&vertices)?;
    Ok(lattice::cells_intersecting(&poly)
        .into_iter()
        .map(|i| (i.m, i.n))
        .collect())
}

#[pyfunction]
fn lattice_point(m: i64, n: i64) -> (f64, f64) {
    let p = lattice::lattice_point(lattice::LatticeIndex::new(m, n));
    (p.x, p.y)
}

#[pymodule]
fn hexcover(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCovering>()?;
    m.add_class::<PyBounds>()?;
    m.add_class::<PyCoverageReport>()?;
    m.add("BudgetExceededError", m.py().get_type::<BudgetExceededError>())?;
    m.add("RATIO_BOUND", hb::RATIO_BOUND)?;
    m.add_function(wrap_pyfunction!(cover, m)?)?;
    m.add_function(wrap_pyfunction!(bounds, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(objective_f, m)?)?;
    m.add_function(wrap_pyfunction!(minimize_f, m)?)?;
    m.add_function(wrap_pyfunction!(expected_hexagons, m)?)?;
    m.add_function(wrap_pyfunction!(toth_upper, m)?)?;
    m.add_function(wrap_pyfunction!(lower_bound, m)?)?;
    m.add_function(wrap_pyfunction!(cells_intersecting, m)?)?;
    m.add_function(wrap_pyfunction!(lattice_point, m)?)?;
    Ok(())
}
