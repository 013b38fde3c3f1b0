use super::Point2;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle {
    pub center: Point2,
    pub radius: f64,
}

impl Circle {
    pub fn new(center: Point2, radius: f64) -> Self {
        Self { center, radius }
    }

    fn contains(&self, p: Point2) -> bool {
        p.distance(self.center) <= self.radius + 1e-12 * (1.0 + self.radius)
    }

    fn diametral(a: Point2, b: Point2) -> Self {
        Circle::new((a + b) * 0.5, a.distance(b) * 0.5)
    }

    /// Circumcircle; falls back to the widest diametral circle for collinear input.
    fn through(a: Point2, b: Point2, c: Point2) -> Self {
        let ab = b - a;
        let ac = c - a;
        let d = 2.0 * ab.cross(ac);
        if d.abs() <= 1e-14 * ab.norm_sq().max(ac.norm_sq()) {
            let cands = [
                Self::diametral(a, b),
                Self::diametral(a, c),
                Self::diametral(b, c),
            ];
            return cands
                .into_iter()
                .max_by(|x, y| x.radius.total_cmp(&y.radius))
                .unwrap();
        }
        let ux = (ac.y * ab.norm_sq() - ab.y * ac.norm_sq()) / d;
        let uy = (ab.x * ac.norm_sq() - ac.x * ab.norm_sq()) / d;
        let center = a + Point2::new(ux, uy);
        let r = center
            .distance(a)
            .max(center.distance(b))
            .max(center.distance(c));
        Circle::new(center, r)
    }
}

/// Smallest circle containing all `points` (incremental Welzl).
///
/// Returns `None` for an empty slice.
pub fn min_enclosing_circle(points: &[Point2]) -> Option<Circle> {
    let (&first, rest) = points.split_first()?;
    let mut c = Circle::new(first, 0.0);
    for (i, &p) in rest.iter().enumerate() {
        if c.contains(p) {
            continue;
        }
        c = Circle::new(p, 0.0);
        let head = &points[..=i];
        for (j, &q) in head.iter().enumerate() {
            if c.contains(q) {
                continue;
            }
            c = Circle::diametral(p, q);
            for &r in &head[..j] {
                if !c.contains(r) {
                    c = Circle::through(p, q, r);
                }
            }
        }
    }
    Some(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Minimum over every pair/triple circle that encloses all points.
    fn brute_force(points: &[Point2]) -> f64 {
        let n = points.len();
        let mut best = f64::INFINITY;
        let encloses = |c: &Circle| {
            points
                .iter()
                .all(|&p| p.distance(c.center) <= c.radius + 1e-9)
        };
        if n == 1 {
            return 0.0;
        }
        for i in 0..n {
            for j in i + 1..n {
                let c = Circle::diametral(points[i], points[j]);
                if encloses(&c) {
                    best = best.min(c.radius);
                }
                for k in j + 1..n {
                    let c = Circle::through(points[i], points[j], points[k]);
                    if encloses(&c) {
                        best = best.min(c.radius);
                    }
                }
            }
        }
        best
    }

    #[test]
    fn square_and_point() {
        let sq = [
            Point2::new(-0.5, -0.5),
            Point2::new(0.5, -0.5),
            Point2::new(0.5, 0.5),
            Point2::new(-0.5, 0.5),
        ];
        let c = min_enclosing_circle(&sq).unwrap();
        assert!(c.center.norm() < 1e-15);
        assert!((c.radius - 2f64.sqrt() / 2.0).abs() < 1e-15);
        let c = min_enclosing_circle(&[Point2::new(3.0, 4.0)]).unwrap();
        assert_eq!(c, Circle::new(Point2::new(3.0, 4.0), 0.0));
        assert!(min_enclosing_circle(&[]).is_none());
    }

    #[test]
    fn obtuse_triangle_uses_long_side() {
        let pts = [
            Point2::new(0.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(1.0, 0.1),
        ];
        let c = min_enclosing_circle(&pts).unwrap();
        assert!((c.radius - brute_force(&pts)).abs() < 1e-12);
        assert!(c.center.distance(Point2::new(1.0, 0.0)) < 1e-12);
        assert!((c.radius - 1.0).abs() < 1e-12);
    }

    #[test]
    fn matches_brute_force_on_random_sets() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.random_range(1..=12);
            let pts: Vec<Point2> = (0..n)
                .map(|_| Point2::new(rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0)))
                .collect();
            let c = min_enclosing_circle(&pts).unwrap();
            for &p in &pts {
                assert!(p.distance(c.center) <= c.radius + 1e-9);
            }
            assert!((c.radius - brute_force(&pts)).abs() < 1e-9);
        }
    }
}
