use super::{Point2, EPS};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub a: Point2,
    pub b: Point2,
}

impl Segment {
    pub const fn new(a: Point2, b: Point2) -> Self {
        Self { a, b }
    }

    pub fn direction(&self) -> Point2 {
        self.b - self.a
    }

    pub fn length(&self) -> f64 {
        self.a.distance(self.b)
    }

    /// Euclidean distance from `p` to the closed segment.
    pub fn distance_to(&self, p: Point2) -> f64 {
        let d = self.direction();
        let len2 = d.norm_sq();
        if len2 == 0.0 {
            return p.distance(self.a);
        }
        let t = ((p - self.a).dot(d) / len2).clamp(0.0, 1.0);
        p.distance(self.a + d * t)
    }
}

/// Result of a successful [`segment_intersect`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SegmentHit {
    pub point: Point2,
    /// The point is (within tolerance) an endpoint of one of the segments.
    pub at_endpoint: bool,
}

/// Intersection of two closed segments.
///
/// Returns `Ok(None)` when they are disjoint and [`Error::NoUniquePoint`] when
/// they overlap along a common line in more than one point.
pub fn segment_intersect(s1: Segment, s2: Segment) -> Result<Option<SegmentHit>> {
    let d1 = s1.direction();
    let d2 = s2.direction();
    let scale = d1.norm().max(d2.norm()).max(1.0);
    let tol = EPS * scale;
    let denom = d1.cross(d2);
    let w = s2.a - s1.a;
    if denom.abs() <= EPS * d1.norm() * d2.norm() {
        // parallel: collinear iff s2.a lies on the supporting line of s1
        let off = if d1.norm() > 0.0 {
            d1.cross(w).abs() / d1.norm()
        } else {
            w.norm()
        };
        if off > tol {
            return Ok(None);
        }
        let len2 = d1.norm_sq();
        if len2 == 0.0 {
            return Ok(None);
        }
        let t0 = w.dot(d1) / len2;
        let t1 = (s2.b - s1.a).dot(d1) / len2;
        let (lo, hi) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
        let lo = lo.max(0.0);
        let hi = hi.min(1.0);
        let ttol = tol / len2.sqrt();
        if lo > hi + ttol {
            return Ok(None);
        }
        if (hi - lo) <= ttol {
            return Ok(Some(SegmentHit {
                point: s1.a + d1 * lo,
                at_endpoint: true,
            }));
        }
        return Err(Error::NoUniquePoint);
    }
    let t = w.cross(d2) / denom;
    let u = w.cross(d1) / denom;
    let t_tol = tol / d1.norm();
    let u_tol = tol / d2.norm();
    if t < -t_tol || t > 1.0 + t_tol || u < -u_tol || u > 1.0 + u_tol {
        return Ok(None);
    }
    let at_endpoint = t.abs() <= t_tol
        || (t - 1.0).abs() <= t_tol
        || u.abs() <= u_tol
        || (u - 1.0).abs() <= u_tol;
    Ok(Some(SegmentHit {
        point: s1.a + d1 * t.clamp(0.0, 1.0),
        at_endpoint,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seg(ax: f64, ay: f64, bx: f64, by: f64) -> Segment {
        Segment::new(Point2::new(ax, ay), Point2::new(bx, by))
    }

    #[test]
    fn crossing() {
        let h = segment_intersect(seg(0.0, 0.0, 1.0, 1.0), seg(0.0, 1.0, 1.0, 0.0))
            .unwrap()
            .unwrap();
        assert!(h.point.distance(Point2::new(0.5, 0.5)) < 1e-15);
        assert!(!h.at_endpoint);
    }

    #[test]
    fn disjoint_collinear() {
        assert_eq!(
            segment_intersect(seg(0.0, 0.0, 1.0, 0.0), seg(2.0, 0.0, 3.0, 0.0)).unwrap(),
            None
        );
    }

    #[test]
    fn endpoint_touch() {
        let h = segment_intersect(seg(0.0, 0.0, 1.0, 0.0), seg(0.0, 0.0, 0.0, 1.0))
            .unwrap()
            .unwrap();
        assert_eq!(h.point, Point2::new(0.0, 0.0));
        assert!(h.at_endpoint);
    }

    #[test]
    fn overlap_is_error() {
        assert_eq!(
            segment_intersect(seg(0.0, 0.0, 2.0, 0.0), seg(1.0, 0.0, 3.0, 0.0)),
            Err(Error::NoUniquePoint)
        );
        // collinear, touching at one endpoint only
        let h = segment_intersect(seg(0.0, 0.0, 1.0, 0.0), seg(1.0, 0.0, 2.0, 0.0))
            .unwrap()
            .unwrap();
        assert!(h.at_endpoint);
        assert!(h.point.distance(Point2::new(1.0, 0.0)) < 1e-15);
    }

    #[test]
    fn parallel_offset() {
        assert_eq!(
            segment_intersect(seg(0.0, 0.0, 1.0, 0.0), seg(0.0, 1.0, 1.0, 1.0)).unwrap(),
            None
        );
    }
}
