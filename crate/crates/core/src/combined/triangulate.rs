use crate::error::{Error, Result};
use crate::geom::{ConvexPolygon, Point2, Polygon, SimplePolygon};

/// A decomposition of a simple polygon into triangles.
#[derive(Debug, Clone, PartialEq)]
pub struct Triangulation {
    pub triangles: Vec<ConvexPolygon>,
}

/// Ear-clipping triangulation. Produces `N − 2` triangles for an `N`-gon.
pub fn triangulate(gamma: &SimplePolygon) -> Result<Triangulation> {
    let v = gamma.vertices();
    let mut idx: Vec<usize> = (0..v.len()).collect();
    let mut triangles = Vec::with_capacity(v.len().saturating_sub(2));
    while idx.len() > 3 {
        let n = idx.len();
        let ear = (0..n)
            .find(|&i| is_ear(v, &idx, i))
            .or_else(|| most_convex(v, &idx))
            .ok_or(Error::NotSimple(0, 0))?;
        let (a, b, c) = (idx[(ear + n - 1) % n], idx[ear], idx[(ear + 1) % n]);
        triangles.push(ConvexPolygon::new(vec![v[a], v[b], v[c]])?);
        idx.remove(ear);
    }
    triangles.push(ConvexPolygon::new(idx.iter().map(|&i| v[i]).collect())?);
    Ok(Triangulation { triangles })
}

fn turn(a: Point2, b: Point2, c: Point2) -> f64 {
    (b - a).cross(c - b)
}

fn is_ear(v: &[Point2], idx: &[usize], i: usize) -> bool {
    let n = idx.len();
    let (ia, ib, ic) = (idx[(i + n - 1) % n], idx[i], idx[(i + 1) % n]);
    let (a, b, c) = (v[ia], v[ib], v[ic]);
    let scale = (b - a).norm().max((c - b).norm());
    if turn(a, b, c) <= 1e-12 * scale * scale {
        return false;
    }
    idx.iter()
        .filter(|&&k| k != ia && k != ib && k != ic)
        .all(|&k| !in_closed_triangle(v[k], a, b, c, 1e-12 * scale * scale))
}

/// Fallback for numerically flat inputs: the vertex with the sharpest left turn.
fn most_convex(v: &[Point2], idx: &[usize]) -> Option<usize> {
    let n = idx.len();
    (0..n)
        .map(|i| {
            let t = turn(v[idx[(i + n - 1) % n]], v[idx[i]], v[idx[(i + 1) % n]]);
            (i, t)
        })
        .filter(|&(_, t)| t > 0.0)
        .max_by(|x, y| x.1.total_cmp(&y.1))
        .map(|(i, _)| i)
}

/// Points within `tol` (in cross-product units) of an edge count as inside,
/// so that an ear never cuts through a vertex lying on its diagonal.
fn in_closed_triangle(p: Point2, a: Point2, b: Point2, c: Point2, tol: f64) -> bool {
    let d1 = (b - a).cross(p - a);
    let d2 = (c - b).cross(p - b);
    let d3 = (a - c).cross(p - c);
    d1 >= -tol && d2 >= -tol && d3 >= -tol
}
