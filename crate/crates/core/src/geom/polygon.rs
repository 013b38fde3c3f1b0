use std::f64::consts::{PI, TAU};

use super::{segment_intersect, BBox, Point2, Segment, EPS};
use crate::error::{Error, Result};

/// Operations shared by every polygon representation.
pub trait Polygon {
    fn vertices(&self) -> &[Point2];

    /// Shoelace area (positive for the CCW polygons built by this crate).
    fn area(&self) -> f64 {
        signed_area(self.vertices())
    }

    fn perimeter(&self) -> f64 {
        edges(self.vertices()).map(|(a, b)| a.distance(b)).sum()
    }

    /// Area centroid.
    fn centroid(&self) -> Point2 {
        let v = self.vertices();
        let origin = v[0];
        let mut acc = Point2::ORIGIN;
        let mut twice_area = 0.0;
        for (a, b) in edges(v) {
            let (a, b) = (a - origin, b - origin);
            let c = a.cross(b);
            twice_area += c;
            acc += (a + b) * c;
        }
        origin + acc * (1.0 / (3.0 * twice_area))
    }

    fn bbox(&self) -> BBox {
        BBox::of_points(self.vertices())
    }

    fn edge(&self, i: usize) -> Segment {
        let v = self.vertices();
        Segment::new(v[i], v[(i + 1) % v.len()])
    }
}

/// Iterates the closed edge cycle `(v[i], v[i+1])`.
pub fn edges(v: &[Point2]) -> impl Iterator<Item = (Point2, Point2)> + '_ {
    (0..v.len()).map(move |i| (v[i], v[(i + 1) % v.len()]))
}

pub fn signed_area(v: &[Point2]) -> f64 {
    if v.len() < 3 {
        return 0.0;
    }
    let o = v[0];
    let mut s = 0.0;
    for (a, b) in edges(v) {
        s += (a - o).cross(b - o);
    }
    0.5 * s
}

fn scale_of(v: &[Point2]) -> f64 {
    let b = BBox::of_points(v);
    (b.max.x - b.min.x).max(b.max.y - b.min.y)
}

/// Removes consecutive (cyclic) vertices closer than a scale-relative tolerance.
fn dedup_cyclic(mut v: Vec<Point2>) -> Vec<Point2> {
    let tol = 1e-12 * scale_of(&v).max(1.0);
    v.dedup_by(|b, a| a.distance(*b) <= tol);
    while v.len() > 1 && v[0].distance(v[v.len() - 1]) <= tol {
        v.pop();
    }
    v
}

fn check_finite(v: &[Point2]) -> Result<()> {
    if v.iter().all(|p| p.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFinite)
    }
}

/// A strictly convex polygon with CCW vertex order.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Point2>,
}

impl ConvexPolygon {
    /// Normalizes and validates a vertex list: duplicates and collinear
    /// vertices are dropped and the order is made CCW.
    pub fn new(vertices: Vec<Point2>) -> Result<Self> {
        check_finite(&vertices)?;
        let mut v = dedup_cyclic(vertices);
        if v.len() < 3 {
            return Err(Error::DegenerateInput(format!(
                "convex polygon needs at least 3 distinct vertices, got {}",
                v.len()
            )));
        }
        let a = signed_area(&v);
        let scale = scale_of(&v);
        if a.abs() <= EPS * EPS * scale * scale {
            return Err(Error::DegenerateInput("polygon has zero area".into()));
        }
        if a < 0.0 {
            v.reverse();
        }
        let v = drop_collinear(v)?;
        if v.len() < 3 {
            return Err(Error::DegenerateInput(
                "polygon collapses to a segment".into(),
            ));
        }
        // every turn is a left turn; the total turning must be exactly one revolution
        let mut turning = 0.0;
        for i in 0..v.len() {
            let a = v[(i + 1) % v.len()] - v[i];
            let b = v[(i + 2) % v.len()] - v[(i + 1) % v.len()];
            turning += a.cross(b).atan2(a.dot(b));
        }
        if (turning - TAU).abs() > 1e-6 {
            return Err(Error::NotConvex);
        }
        Ok(Self { vertices: v })
    }

    /// Wraps vertices already known to satisfy the invariants.
    pub(crate) fn from_trusted(vertices: Vec<Point2>) -> Self {
        debug_assert!(vertices.len() >= 3);
        Self { vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Support function: `max_v v·(cos φ, sin φ)`.
    pub fn support(&self, phi: f64) -> f64 {
        let d = Point2::from_angle(phi);
        self.vertices
            .iter()
            .map(|v| v.dot(d))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Index of a vertex attaining the support value in direction `phi`.
    pub fn support_vertex(&self, phi: f64) -> usize {
        let d = Point2::from_angle(phi);
        let mut best = 0;
        let mut best_v = f64::NEG_INFINITY;
        for (i, v) in self.vertices.iter().enumerate() {
            let s = v.dot(d);
            if s > best_v {
                best_v = s;
                best = i;
            }
        }
        best
    }

    /// Width `h(θ) + h(θ + π)`.
    pub fn width(&self, theta: f64) -> f64 {
        self.support(theta) + self.support(theta + PI)
    }

    /// Largest pairwise vertex distance.
    pub fn diameter(&self) -> f64 {
        let v = &self.vertices;
        let mut d: f64 = 0.0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                d = d.max(v[i].distance(v[j]));
            }
        }
        d
    }

    /// Outward normal angle of edge `i` (from vertex `i` to `i+1`).
    pub fn edge_normal_angle(&self, i: usize) -> f64 {
        let e = self.edge(i);
        let d = e.b - e.a;
        d.y.atan2(d.x) - PI / 2.0
    }

    pub fn rotate(&self, theta: f64) -> Self {
        Self::from_trusted(self.vertices.iter().map(|p| p.rotate(theta)).collect())
    }

    /// Point reflection through the origin (rotation by π); keeps CCW order.
    pub fn reflect_origin(&self) -> Self {
        Self::from_trusted(self.vertices.iter().map(|&p| -p).collect())
    }

    pub fn translate(&self, v: Point2) -> Self {
        Self::from_trusted(self.vertices.iter().map(|&p| p + v).collect())
    }

    /// Signed distance from `p` to the supporting line of edge `i`; positive inside.
    #[inline]
    pub fn edge_distance(&self, i: usize, p: Point2) -> f64 {
        let a = self.vertices[i];
        let b = self.vertices[(i + 1) % self.vertices.len()];
        let d = b - a;
        d.cross(p - a) / d.norm()
    }

    /// Smallest signed edge distance; positive iff `p` is strictly inside.
    pub fn depth(&self, p: Point2) -> f64 {
        (0..self.vertices.len())
            .map(|i| self.edge_distance(i, p))
            .fold(f64::INFINITY, f64::min)
    }

    pub fn contains(&self, p: Point2, mode: Containment, eps: f64) -> bool {
        point_in_convex(p, self, mode, eps)
    }
}

impl Polygon for ConvexPolygon {
    fn vertices(&self) -> &[Point2] {
        &self.vertices
    }
}

/// Drops collinear vertices from a CCW cycle; rejects reflex turns and spikes.
fn drop_collinear(mut v: Vec<Point2>) -> Result<Vec<Point2>> {
    loop {
        let n = v.len();
        if n < 3 {
            return Ok(v);
        }
        let mut removed = false;
        let mut i = 0;
        while i < v.len() && v.len() >= 3 {
            let n = v.len();
            let prev = v[(i + n - 1) % n];
            let cur = v[i];
            let next = v[(i + 1) % n];
            let a = cur - prev;
            let b = next - cur;
            let c = a.cross(b);
            let scale = a.norm() * b.norm();
            if c.abs() <= EPS * scale {
                if a.dot(b) < 0.0 {
                    return Err(Error::NotConvex);
                }
                v.remove(i);
                removed = true;
                continue;
            }
            if c < 0.0 {
                return Err(Error::NotConvex);
            }
            i += 1;
        }
        if !removed {
            return Ok(v);
        }
    }
}

/// Membership semantics for [`point_in_convex`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Containment {
    /// Every edge distance must exceed `eps`.
    Interior,
    /// Every edge distance must be at least `-eps`.
    Closed,
}

pub fn point_in_convex(p: Point2, poly: &ConvexPolygon, mode: Containment, eps: f64) -> bool {
    let n = poly.len();
    match mode {
        Containment::Interior => (0..n).all(|i| poly.edge_distance(i, p) > eps),
        Containment::Closed => (0..n).all(|i| poly.edge_distance(i, p) >= -eps),
    }
}

/// A simple (non-self-intersecting) polygon with CCW vertex order.
#[derive(Debug, Clone, PartialEq)]
pub struct SimplePolygon {
    vertices: Vec<Point2>,
}

impl SimplePolygon {
    pub fn new(vertices: Vec<Point2>) -> Result<Self> {
        check_finite(&vertices)?;
        let mut v = dedup_cyclic(vertices);
        if v.len() < 3 {
            return Err(Error::DegenerateInput(format!(
                "polygon needs at least 3 distinct vertices, got {}",
                v.len()
            )));
        }
        // straight-through vertices carry no shape; spikes make the boundary overlap itself
        let mut i = 0;
        while i < v.len() && v.len() >= 3 {
            let n = v.len();
            let a = v[i] - v[(i + n - 1) % n];
            let b = v[(i + 1) % n] - v[i];
            if a.cross(b).abs() <= EPS * a.norm() * b.norm() {
                if a.dot(b) < 0.0 {
                    return Err(Error::NotSimple((i + n - 1) % n, i));
                }
                v.remove(i);
                i = i.saturating_sub(1);
                continue;
            }
            i += 1;
        }
        if v.len() < 3 {
            return Err(Error::DegenerateInput(
                "polygon collapses to a segment".into(),
            ));
        }
        check_simple(&v)?;
        let a = signed_area(&v);
        if a.abs() <= EPS * EPS * scale_of(&v).powi(2) {
            return Err(Error::DegenerateInput("polygon has zero area".into()));
        }
        if a < 0.0 {
            v.reverse();
        }
        Ok(Self { vertices: v })
    }

    pub(crate) fn from_trusted(vertices: Vec<Point2>) -> Self {
        Self { vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// `Some` when the polygon is convex.
    pub fn to_convex(&self) -> Option<ConvexPolygon> {
        ConvexPolygon::new(self.vertices.clone()).ok()
    }

    pub fn rotate(&self, theta: f64) -> Self {
        Self::from_trusted(self.vertices.iter().map(|p| p.rotate(theta)).collect())
    }

    pub fn reflect_origin(&self) -> Self {
        Self::from_trusted(self.vertices.iter().map(|&p| -p).collect())
    }

    pub fn translate(&self, t: Point2) -> Self {
        Self::from_trusted(self.vertices.iter().map(|&p| p + t).collect())
    }

    pub fn diameter(&self) -> f64 {
        let v = &self.vertices;
        let mut d: f64 = 0.0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                d = d.max(v[i].distance(v[j]));
            }
        }
        d
    }
}

impl Polygon for SimplePolygon {
    fn vertices(&self) -> &[Point2] {
        &self.vertices
    }
}

fn check_simple(v: &[Point2]) -> Result<()> {
    let n = v.len();
    for i in 0..n {
        let si = Segment::new(v[i], v[(i + 1) % n]);
        for j in i + 1..n {
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            let sj = Segment::new(v[j], v[(j + 1) % n]);
            if adjacent {
                continue;
            }
            match segment_intersect(si, sj) {
                Ok(None) => {}
                _ => return Err(Error::NotSimple(i, j)),
            }
        }
    }
    Ok(())
}

impl From<ConvexPolygon> for SimplePolygon {
    fn from(p: ConvexPolygon) -> Self {
        SimplePolygon::from_trusted(p.vertices)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::FRAC_PI_4;

    fn square(side: f64) -> ConvexPolygon {
        ConvexPolygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(side, 0.0),
            Point2::new(side, side),
            Point2::new(0.0, side),
        ])
        .unwrap()
    }

    fn centered_unit_square() -> ConvexPolygon {
        square(1.0).translate(Point2::new(-0.5, -0.5))
    }

    fn tri() -> ConvexPolygon {
        ConvexPolygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(4.0, 0.0),
            Point2::new(0.0, 3.0),
        ])
        .unwrap()
    }

    #[test]
    fn area_and_perimeter() {
        assert_abs_diff_eq!(square(1.0).area(), 1.0);
        assert_abs_diff_eq!(square(10.0).area(), 100.0);
        assert_abs_diff_eq!(tri().area(), 6.0);
        assert_abs_diff_eq!(square(1.0).perimeter(), 4.0);
        assert_abs_diff_eq!(square(10.0).perimeter(), 40.0);
        assert_abs_diff_eq!(tri().perimeter(), 12.0);
    }

    #[test]
    fn support_values() {
        let sq = centered_unit_square();
        assert_abs_diff_eq!(sq.support(0.0), 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(sq.support(FRAC_PI_4), 2f64.sqrt() / 2.0, epsilon = 1e-15);
        let t = ConvexPolygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(0.0, 1.0),
        ])
        .unwrap();
        assert_abs_diff_eq!(t.support(PI / 2.0), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn width_values() {
        let sq = centered_unit_square();
        assert_abs_diff_eq!(sq.width(0.0), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(sq.width(FRAC_PI_4), 2f64.sqrt(), epsilon = 1e-15);
        let thin = ConvexPolygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1e-9),
            Point2::new(0.0, 1e-9),
        ])
        .unwrap();
        assert_abs_diff_eq!(thin.width(PI / 2.0), 1e-9, epsilon = 1e-15);
    }

    #[test]
    fn diameter_values() {
        assert_abs_diff_eq!(square(1.0).diameter(), 2f64.sqrt());
        assert_abs_diff_eq!(square(10.0).diameter(), 10.0 * 2f64.sqrt(), epsilon = 1e-12);
        let hex = ConvexPolygon::new(
            (0..6)
                .map(|k| Point2::from_angle(k as f64 * PI / 3.0))
                .collect(),
        )
        .unwrap();
        assert_abs_diff_eq!(hex.diameter(), 2.0, epsilon = 1e-15);
    }

    #[test]
    fn normalization_reorders_and_drops() {
        let p = ConvexPolygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(0.0, 2.0),
            Point2::new(2.0, 2.0),
            Point2::new(2.0, 1.0),
            Point2::new(2.0, 0.0),
            Point2::new(2.0, 0.0),
        ])
        .unwrap();
        assert_eq!(p.len(), 4);
        assert!(p.area() > 0.0);
    }

    #[test]
    fn rejects_bad_polygons() {
        assert!(matches!(
            ConvexPolygon::new(vec![Point2::new(0.0, 0.0), Point2::new(1.0, 0.0)]),
            Err(Error::DegenerateInput(_))
        ));
        assert!(matches!(
            ConvexPolygon::new(vec![
                Point2::new(0.0, 0.0),
                Point2::new(1.0, 0.0),
                Point2::new(2.0, 0.0)
            ]),
            Err(Error::DegenerateInput(_))
        ));
        let dart = vec![
            Point2::new(0.0, 0.0),
            Point2::new(2.0, 1.0),
            Point2::new(0.0, 2.0),
            Point2::new(1.0, 1.0),
        ];
        assert_eq!(ConvexPolygon::new(dart), Err(Error::NotConvex));
        let pentagram: Vec<_> = (0..5)
            .map(|k| Point2::from_angle(k as f64 * 4.0 * PI / 5.0))
            .collect();
        assert_eq!(ConvexPolygon::new(pentagram), Err(Error::NotConvex));
        assert_eq!(
            ConvexPolygon::new(vec![
                Point2::new(0.0, 0.0),
                Point2::new(f64::NAN, 0.0),
                Point2::new(0.0, 1.0)
            ]),
            Err(Error::NonFinite)
        );
    }

    #[test]
    fn membership_modes() {
        let t = tri();
        let c = t.centroid();
        assert!(point_in_convex(c, &t, Containment::Interior, EPS));
        let v = t.vertices()[1];
        assert!(!point_in_convex(v, &t, Containment::Interior, EPS));
        assert!(point_in_convex(v, &t, Containment::Closed, EPS));
    }

    #[test]
    fn transforms() {
        let sq = square(1.0);
        let r = sq.rotate(TAU);
        for (a, b) in sq.vertices().iter().zip(r.vertices()) {
            assert!(a.distance(*b) < 1e-12);
        }
        let t = ConvexPolygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(0.0, 1.0),
        ])
        .unwrap()
        .reflect_origin();
        let mut got: Vec<_> = t.vertices().iter().map(|p| (p.x, p.y)).collect();
        got.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(got, vec![(-1.0, -0.0), (-0.0, -1.0), (-0.0, -0.0)]);
        assert!(t.area() > 0.0);
        let back = sq
            .translate(Point2::new(3.0, 4.0))
            .translate(Point2::new(-3.0, -4.0));
        assert_eq!(back, sq);
    }

    #[test]
    fn simple_polygon_checks() {
        let l = SimplePolygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(2.0, 1.0),
            Point2::new(1.0, 1.0),
            Point2::new(1.0, 2.0),
            Point2::new(0.0, 2.0),
        ])
        .unwrap();
        assert_abs_diff_eq!(l.area(), 3.0);
        assert!(l.to_convex().is_none());
        let bowtie = SimplePolygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(1.0, 0.0),
            Point2::new(0.0, 1.0),
        ]);
        assert!(matches!(bowtie, Err(Error::NotSimple(_, _))));
        // clockwise input is flipped
        let cw = SimplePolygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(0.0, 1.0),
            Point2::new(1.0, 1.0),
            Point2::new(1.0, 0.0),
        ])
        .unwrap();
        assert!(cw.area() > 0.0);
    }

    #[test]
    fn centroid_of_l_shape() {
        let l = SimplePolygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(2.0, 1.0),
            Point2::new(1.0, 1.0),
            Point2::new(1.0, 2.0),
            Point2::new(0.0, 2.0),
        ])
        .unwrap();
        // three unit squares centered at (0.5,0.5), (1.5,0.5), (0.5,1.5)
        let c = l.centroid();
        assert_abs_diff_eq!(c.x, 2.5 / 3.0, epsilon = 1e-14);
        assert_abs_diff_eq!(c.y, 2.5 / 3.0, epsilon = 1e-14);
    }
}
