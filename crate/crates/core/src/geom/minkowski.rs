use super::{ConvexPolygon, Point2, Polygon};
use crate::error::Result;

fn bottom_left(v: &[Point2]) -> usize {
    let mut best = 0;
    for (i, p) in v.iter().enumerate() {
        let b = v[best];
        if p.y < b.y || (p.y == b.y && p.x < b.x) {
            best = i;
        }
    }
    best
}

/// Minkowski sum of two CCW convex vertex cycles by merging their edge
/// sequences in angular order. A single-vertex operand acts as a translation.
pub(crate) fn minkowski_sum_vertices(p: &[Point2], q: &[Point2]) -> Vec<Point2> {
    if q.len() == 1 {
        return p.iter().map(|&v| v + q[0]).collect();
    }
    if p.len() == 1 {
        return q.iter().map(|&v| v + p[0]).collect();
    }
    let (n, m) = (p.len(), q.len());
    let i0 = bottom_left(p);
    let j0 = bottom_left(q);
    let pv = |k: usize| p[(i0 + k) % n];
    let qv = |k: usize| q[(j0 + k) % m];
    let mut out = Vec::with_capacity(n + m);
    let (mut i, mut j) = (0, 0);
    while i < n || j < m {
        out.push(pv(i) + qv(j));
        let e1 = pv(i + 1) - pv(i);
        let e2 = qv(j + 1) - qv(j);
        let c = e1.cross(e2);
        if j == m || (i < n && c > 0.0) {
            i += 1;
        } else if i == n || c < 0.0 {
            j += 1;
        } else {
            i += 1;
            j += 1;
        }
    }
    out
}

/// `{p + q : p ∈ P, q ∈ Q}` for convex polygons, in time linear in the edge counts.
pub fn minkowski_sum_convex(p: &ConvexPolygon, q: &ConvexPolygon) -> Result<ConvexPolygon> {
    ConvexPolygon::new(minkowski_sum_vertices(p.vertices(), q.vertices()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::convex_hull;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn unit_square() -> ConvexPolygon {
        ConvexPolygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ])
        .unwrap()
    }

    #[test]
    fn square_plus_square() {
        let s = minkowski_sum_convex(&unit_square(), &unit_square()).unwrap();
        assert_eq!(s.len(), 4);
        assert!((s.area() - 4.0).abs() < 1e-15);
        let b = s.bbox();
        assert_eq!(
            (b.min, b.max),
            (Point2::new(0.0, 0.0), Point2::new(2.0, 2.0))
        );
    }

    #[test]
    fn sum_with_point_translates() {
        let q = Point2::new(2.5, -1.0);
        let s = minkowski_sum_vertices(unit_square().vertices(), &[q]);
        assert_eq!(s, unit_square().translate(q).vertices());
    }

    #[test]
    fn matches_pairwise_hull() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let random_poly = |rng: &mut ChaCha8Rng| loop {
            let pts: Vec<Point2> = (0..rng.random_range(3..9))
                .map(|_| Point2::new(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0)))
                .collect();
            if let Ok(p) = convex_hull(&pts) {
                return p;
            }
        };
        for _ in 0..200 {
            let a = random_poly(&mut rng);
            let b = random_poly(&mut rng);
            let s = minkowski_sum_convex(&a, &b).unwrap();
            assert!(s.len() <= a.len() + b.len());
            let sums: Vec<Point2> = a
                .vertices()
                .iter()
                .flat_map(|&p| b.vertices().iter().map(move |&q| p + q))
                .collect();
            let h = convex_hull(&sums).unwrap();
            assert!((h.area() - s.area()).abs() < 1e-9 * h.area());
            assert!(s.area() >= a.area() + b.area() - 1e-9);
        }
    }
}
