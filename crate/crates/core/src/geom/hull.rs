use super::{ConvexPolygon, Point2, EPS};
use crate::error::{Error, Result};

/// Andrew's monotone chain. Collinear boundary points are discarded.
pub fn convex_hull(points: &[Point2]) -> Result<ConvexPolygon> {
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::NonFinite);
    }
    let mut pts: Vec<Point2> = points.to_vec();
    pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    pts.dedup();
    if pts.len() < 3 {
        return Err(Error::DegenerateInput(
            "hull needs at least 3 distinct points".into(),
        ));
    }
    let turn = |o: Point2, a: Point2, b: Point2| {
        let u = a - o;
        let v = b - o;
        let c = u.cross(v);
        if c.abs() <= EPS * u.norm() * v.norm() {
            0.0
        } else {
            c
        }
    };
    let mut lower: Vec<Point2> = Vec::with_capacity(pts.len());
    for &p in &pts {
        while lower.len() >= 2 && turn(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0.0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Point2> = Vec::with_capacity(pts.len());
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && turn(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0.0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        return Err(Error::DegenerateInput("all points are collinear".into()));
    }
    ConvexPolygon::new(lower)
}
