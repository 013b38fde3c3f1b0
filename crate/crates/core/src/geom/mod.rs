//! Planar primitives: points, convex and simple polygons, support and width
//! functions, Minkowski sums, enclosing circles and segment intersection.
//!
//! All arithmetic is `f64`. A single tolerance [`EPS`] decides incidences.

mod circle;
mod hull;
mod minkowski;
mod point;
mod polygon;
mod segment;

pub use circle::{min_enclosing_circle, Circle};
pub use hull::convex_hull;
pub use minkowski::minkowski_sum_convex;
pub use point::{wrap, Angle, Point2};
pub use polygon::{
    edges, point_in_convex, signed_area, Containment, ConvexPolygon, Polygon, SimplePolygon,
};
pub use segment::{segment_intersect, Segment, SegmentHit};

/// Global incidence tolerance.
pub const EPS: f64 = 1e-9;

/// Axis-aligned bounding box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BBox {
    pub min: Point2,
    pub max: Point2,
}

impl BBox {
    pub fn empty() -> Self {
        BBox {
            min: Point2::new(f64::INFINITY, f64::INFINITY),
            max: Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
        }
    }

    pub fn of_points(pts: &[Point2]) -> Self {
        let mut b = Self::empty();
        for &p in pts {
            b.include(p);
        }
        b
    }

    pub fn include(&mut self, p: Point2) {
        self.min.x = self.min.x.min(p.x);
        self.min.y = self.min.y.min(p.y);
        self.max.x = self.max.x.max(p.x);
        self.max.y = self.max.y.max(p.y);
    }

    pub fn union(&self, o: &BBox) -> BBox {
        BBox {
            min: Point2::new(self.min.x.min(o.min.x), self.min.y.min(o.min.y)),
            max: Point2::new(self.max.x.max(o.max.x), self.max.y.max(o.max.y)),
        }
    }

    pub fn inflate(&self, m: f64) -> BBox {
        BBox {
            min: Point2::new(self.min.x - m, self.min.y - m),
            max: Point2::new(self.max.x + m, self.max.y + m),
        }
    }

    pub fn translate(&self, t: Point2) -> BBox {
        BBox {
            min: self.min + t,
            max: self.max + t,
        }
    }

    pub fn intersects(&self, o: &BBox) -> bool {
        self.min.x <= o.max.x
            && o.min.x <= self.max.x
            && self.min.y <= o.max.y
            && o.min.y <= self.max.y
    }

    pub fn contains(&self, p: Point2) -> bool {
        p.x >= self.min.x && p.x <= self.max.x && p.y >= self.min.y && p.y <= self.max.y
    }
}

/// Separating-axis test for two convex polygons. Polygons closer than `eps`
/// along every axis count as intersecting, so touching boundaries intersect.
pub fn convex_intersects(p: &ConvexPolygon, q: &ConvexPolygon, eps: f64) -> bool {
    !separated_by_edges(p, q, eps) && !separated_by_edges(q, p, eps)
}

fn separated_by_edges(p: &ConvexPolygon, q: &ConvexPolygon, eps: f64) -> bool {
    let pv = p.vertices();
    let qv = q.vertices();
    for i in 0..pv.len() {
        let a = pv[i];
        let d = pv[(i + 1) % pv.len()] - a;
        let inv = 1.0 / d.norm();
        // every vertex of q strictly on the outer side of edge i
        if qv.iter().all(|&v| d.cross(v - a) * inv < -eps) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sq(x: f64, y: f64, s: f64) -> ConvexPolygon {
        ConvexPolygon::new(vec![
            Point2::new(x, y),
            Point2::new(x + s, y),
            Point2::new(x + s, y + s),
            Point2::new(x, y + s),
        ])
        .unwrap()
    }

    #[test]
    fn sat_cases() {
        assert!(convex_intersects(
            &sq(0.0, 0.0, 1.0),
            &sq(0.5, 0.5, 1.0),
            EPS
        ));
        assert!(convex_intersects(
            &sq(0.0, 0.0, 1.0),
            &sq(1.0, 0.0, 1.0),
            EPS
        ));
        assert!(convex_intersects(
            &sq(0.0, 0.0, 1.0),
            &sq(1.0, 1.0, 1.0),
            EPS
        ));
        assert!(!convex_intersects(
            &sq(0.0, 0.0, 1.0),
            &sq(1.01, 0.0, 1.0),
            EPS
        ));
        // separated only along a diagonal axis of the triangle
        let t = ConvexPolygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(0.0, 2.0),
        ])
        .unwrap();
        assert!(!convex_intersects(&t, &sq(1.1, 1.1, 1.0), EPS));
        assert!(convex_intersects(&t, &sq(0.9, 0.9, 1.0), EPS));
    }
}
