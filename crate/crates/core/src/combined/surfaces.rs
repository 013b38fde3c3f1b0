//! Boundary facets of the regions `T_mn(θ)` swept over `θ ∈ [0, π/3]`, and
//! the points where three of them meet.
//!
//! At a fixed `θ` every facet is a segment on the line `A x + B y = C`,
//! with `A`, `B`, `C` of the form `c·cos θ + s·sin θ + k`. Three lines are
//! concurrent when their 3×3 coefficient determinant vanishes; with
//! `z = sin θ` and `cos θ = √(1 − z²)` (valid since `θ ≤ π/3 < π/2`), the
//! determinant reads `P(z) + √(1 − z²)·Q(z)`, and squaring gives a
//! polynomial of degree at most 6.

use std::f64::consts::{FRAC_PI_3, PI, TAU};

use super::roots::{eval_poly, real_roots_in};
use crate::error::{Error, Result};
use crate::geom::{BBox, ConvexPolygon, Point2, Polygon};
use crate::lattice::{
    cell_hexagon, cell_vertex, indices_in_window, lattice_point, LatticeIndex, Window,
};

/// `c·cos θ + s·sin θ + k`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Trig {
    pub c: f64,
    pub s: f64,
    pub k: f64,
}

impl Trig {
    pub const fn constant(k: f64) -> Self {
        Trig { c: 0.0, s: 0.0, k }
    }

    pub fn eval(&self, theta: f64) -> f64 {
        let (s, c) = theta.sin_cos();
        self.c * c + self.s * s + self.k
    }
}

/// The search space `⬡₀ × [0, π/3]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Prism;

impl Prism {
    pub const THETA_MAX: f64 = FRAC_PI_3;

    /// Closed membership with tolerance `tol`.
    pub fn contains(x: f64, y: f64, theta: f64, tol: f64) -> bool {
        theta >= -tol
            && theta <= Self::THETA_MAX + tol
            && cell_hexagon().depth(Point2::new(x, y)) >= -tol
    }
}

/// What a surface sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceKind {
    /// An edge of the rotated, reflected polygon placed at a cell corner.
    PolyEdgeHexVertex { edge: usize, hex_vertex: usize },
    /// A vertex of the rotated, reflected polygon swept along a cell edge.
    PolyVertexHexEdge { vertex: usize, hex_edge: usize },
    /// Lateral face `0..6` of the prism (cell edge `k` swept in `θ`).
    PrismLateral(usize),
    /// The cap `θ = 0` (`false`) or `θ = π/3` (`true`).
    PrismCap(bool),
}

/// One facet of one region, restricted to a single `θ` interval on which it
/// is part of the region boundary.
#[derive(Debug, Clone, PartialEq)]
pub struct SweptSurface {
    pub index: LatticeIndex,
    /// Which convex piece of the polygon produced the facet.
    pub piece: usize,
    pub kind: SurfaceKind,
    /// Line coefficients `[A, B, C]` of `A x + B y = C`.
    pub line: [Trig; 3],
    /// Segment endpoints at `θ` are `anchor + R(θ)·arm`.
    pub ends: [(Point2, Point2); 2],
    pub theta_lo: f64,
    pub theta_hi: f64,
    bbox: BBox,
}

impl SweptSurface {
    fn new(
        index: LatticeIndex,
        piece: usize,
        kind: SurfaceKind,
        line: [Trig; 3],
        ends: [(Point2, Point2); 2],
        theta_lo: f64,
        theta_hi: f64,
    ) -> Self {
        let mut bbox = BBox::empty();
        for &(anchor, arm) in &ends {
            bbox = bbox.union(&arc_bbox(anchor, arm, theta_lo, theta_hi));
        }
        SweptSurface {
            index,
            piece,
            kind,
            line,
            ends,
            theta_lo,
            theta_hi,
            bbox,
        }
    }

    pub fn is_cap(&self) -> bool {
        matches!(self.kind, SurfaceKind::PrismCap(_))
    }

    /// Segment endpoints at `theta`.
    pub fn segment_at(&self, theta: f64) -> (Point2, Point2) {
        let [(a0, r0), (a1, r1)] = self.ends;
        (a0 + r0.rotate(theta), a1 + r1.rotate(theta))
    }

    /// The point at parameter `t ∈ [0, 1]` along the facet at `theta`.
    pub fn point_at(&self, theta: f64, t: f64) -> Point2 {
        let (a, b) = self.segment_at(theta);
        a.lerp(b, t)
    }

    /// `(A, B, C)` at `theta`.
    pub fn line_at(&self, theta: f64) -> (f64, f64, f64) {
        (
            self.line[0].eval(theta),
            self.line[1].eval(theta),
            self.line[2].eval(theta),
        )
    }

    pub fn bbox(&self) -> BBox {
        self.bbox
    }

    /// Whether `(p, theta)` lies on the facet patch within `tol`.
    pub fn patch_contains(&self, p: Point2, theta: f64, tol: f64) -> bool {
        if theta < self.theta_lo - tol || theta > self.theta_hi + tol {
            return false;
        }
        if self.is_cap() {
            return cell_hexagon().depth(p) >= -tol;
        }
        let (a, b) = self.segment_at(theta);
        crate::geom::Segment::new(a, b).distance_to(p) <= tol * (1.0 + (b - a).norm())
    }

    fn overlaps(&self, other: &SweptSurface, tol: f64) -> bool {
        self.theta_lo <= other.theta_hi + tol
            && other.theta_lo <= self.theta_hi + tol
            && self.bbox.inflate(tol).intersects(&other.bbox)
    }
}

/// Bounding box of `center + R(θ)·arm` for `θ ∈ [lo, hi]`.
fn arc_bbox(center: Point2, arm: Point2, lo: f64, hi: f64) -> BBox {
    let r = arm.norm();
    let mut bb = BBox::of_points(&[center + arm.rotate(lo), center + arm.rotate(hi)]);
    if r == 0.0 {
        return bb;
    }
    let a0 = arm.angle() + lo;
    let a1 = arm.angle() + hi;
    // axis directions crossed by the arc
    let first = (a0 / (PI / 2.0)).ceil() as i64;
    let last = (a1 / (PI / 2.0)).floor() as i64;
    for k in first..=last {
        bb.include(center + Point2::from_angle(k as f64 * PI / 2.0) * r);
    }
    bb
}

/// Parts of `[lo, hi] + 2πk` inside `[0, π/3]`.
fn clip_periodic(lo: f64, hi: f64) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    let k0 = ((-hi) / TAU).floor() as i64;
    let k1 = ((FRAC_PI_3 - lo) / TAU).ceil() as i64;
    for k in k0..=k1 {
        let a = (lo + k as f64 * TAU).max(0.0);
        let b = (hi + k as f64 * TAU).min(FRAC_PI_3);
        if b > a {
            out.push((a, b));
        }
    }
    out
}

/// Outward unit normal angle of edge `i` of a CCW vertex list.
fn normal_angle(v: &[Point2], i: usize) -> f64 {
    let d = v[(i + 1) % v.len()] - v[i];
    d.y.atan2(d.x) - PI / 2.0
}

/// The eight faces of the prism: six lateral faces and two caps.
pub fn prism_faces() -> Vec<SweptSurface> {
    let mut out = Vec::with_capacity(8);
    for j in 0..6 {
        let (h0, h1) = (cell_vertex(j), cell_vertex(j + 1));
        let n = Point2::from_angle((j + 1) as f64 * FRAC_PI_3);
        out.push(SweptSurface::new(
            LatticeIndex::ORIGIN,
            0,
            SurfaceKind::PrismLateral(j),
            [
                Trig::constant(n.x),
                Trig::constant(n.y),
                Trig::constant(n.dot(h0)),
            ],
            [(h0, Point2::ORIGIN), (h1, Point2::ORIGIN)],
            0.0,
            FRAC_PI_3,
        ));
    }
    for top in [false, true] {
        let th = if top { FRAC_PI_3 } else { 0.0 };
        let mut cap = SweptSurface::new(
            LatticeIndex::ORIGIN,
            0,
            SurfaceKind::PrismCap(top),
            [Trig::default(); 3],
            [
                (cell_vertex(0), Point2::ORIGIN),
                (cell_vertex(3), Point2::ORIGIN),
            ],
            th,
            th,
        );
        cap.bbox = cell_hexagon().bbox();
        out.push(cap);
    }
    out
}

/// All boundary facets of the regions `T_mn(θ)` for lattice points in
/// `window` whose swept patch can reach `⬡₀`. `poly` must be centered at the
/// reference point of the placement; `piece` tags the facets.
pub fn build_surfaces(
    poly: &ConvexPolygon,
    piece: usize,
    window: Window,
) -> Result<Vec<SweptSurface>> {
    if poly.len() < 3 {
        return Err(Error::DegenerateInput("surfaces need a polygon".into()));
    }
    // T(θ) = R(θ)Q ⊕ ⬡₀ with Q the polygon reflected through the origin
    let q: Vec<Point2> = poly.vertices().iter().map(|&p| -p).collect();
    let nq = q.len();
    let nu: Vec<f64> = (0..nq).map(|i| normal_angle(&q, i)).collect();
    let focus = cell_hexagon().bbox().inflate(1e-6);

    let mut out = Vec::new();
    for idx in indices_in_window(window) {
        let x = lattice_point(idx);
        for i in 0..nq {
            let m = Point2::from_angle(nu[i]);
            let (qa, qb) = (q[i], q[(i + 1) % nq]);
            for j in 0..6 {
                let lo = j as f64 * FRAC_PI_3 - nu[i];
                for (a, b) in clip_periodic(lo, lo + FRAC_PI_3) {
                    let base = x + cell_vertex(j);
                    let line = [
                        Trig {
                            c: m.x,
                            s: -m.y,
                            k: 0.0,
                        },
                        Trig {
                            c: m.y,
                            s: m.x,
                            k: 0.0,
                        },
                        Trig {
                            c: m.dot(base),
                            s: m.x * base.y - m.y * base.x,
                            k: m.dot(qa),
                        },
                    ];
                    let s = SweptSurface::new(
                        idx,
                        piece,
                        SurfaceKind::PolyEdgeHexVertex {
                            edge: i,
                            hex_vertex: j,
                        },
                        line,
                        [(base, qa), (base, qb)],
                        a,
                        b,
                    );
                    if s.bbox.intersects(&focus) {
                        out.push(s);
                    }
                }
            }
        }
        for p in 0..nq {
            let prev = nu[(p + nq - 1) % nq];
            let mut next = nu[p];
            while next < prev {
                next += TAU;
            }
            let qp = q[p];
            for j in 0..6 {
                let phi = (j + 1) as f64 * FRAC_PI_3;
                let n = Point2::from_angle(phi);
                for (a, b) in clip_periodic(phi - next, phi - prev) {
                    let (h0, h1) = (x + cell_vertex(j), x + cell_vertex(j + 1));
                    let line = [
                        Trig::constant(n.x),
                        Trig::constant(n.y),
                        Trig {
                            c: n.dot(qp),
                            s: n.y * qp.x - n.x * qp.y,
                            k: n.dot(h0),
                        },
                    ];
                    let s = SweptSurface::new(
                        idx,
                        piece,
                        SurfaceKind::PolyVertexHexEdge {
                            vertex: p,
                            hex_edge: j,
                        },
                        line,
                        [(h0, qp), (h1, qp)],
                        a,
                        b,
                    );
                    if s.bbox.intersects(&focus) {
                        out.push(s);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Angles in `[0, π/3]` where some facet of `poly` starts or stops being
/// part of a region boundary: an edge of the polygon turns parallel to a
/// cell edge.
pub fn facet_switch_angles(poly: &ConvexPolygon) -> Vec<f64> {
    let q: Vec<Point2> = poly.vertices().iter().map(|&p| -p).collect();
    (0..q.len())
        .map(|i| {
            let r = (-normal_angle(&q, i)).rem_euclid(FRAC_PI_3);
            if FRAC_PI_3 - r < 1e-15 {
                0.0
            } else {
                r
            }
        })
        .collect()
}

/// A point where three surfaces meet inside the prism.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Candidate3D {
    pub x: f64,
    pub y: f64,
    pub theta: f64,
    pub provenance: (usize, usize, usize),
}

/// Products of `cos^i sin^j`, `i + j ≤ 3`.
#[derive(Debug, Clone, Copy, Default)]
struct CsPoly([[f64; 4]; 4]);

impl CsPoly {
    fn from_trig(t: Trig) -> Self {
        let mut p = CsPoly::default();
        p.0[0][0] = t.k;
        p.0[1][0] = t.c;
        p.0[0][1] = t.s;
        p
    }

    fn mul(&self, o: &CsPoly) -> CsPoly {
        let mut r = CsPoly::default();
        for i in 0..4 {
            for j in 0..4 - i {
                let a = self.0[i][j];
                if a == 0.0 {
                    continue;
                }
                for k in 0..4 - i {
                    for l in 0..4 - j {
                        if i + j + k + l <= 3 {
                            r.0[i + k][j + l] += a * o.0[k][l];
                        }
                    }
                }
            }
        }
        r
    }

    fn sub(&self, o: &CsPoly) -> CsPoly {
        let mut r = *self;
        for i in 0..4 {
            for j in 0..4 {
                r.0[i][j] -= o.0[i][j];
            }
        }
        r
    }

    fn add(&self, o: &CsPoly) -> CsPoly {
        let mut r = *self;
        for i in 0..4 {
            for j in 0..4 {
                r.0[i][j] += o.0[i][j];
            }
        }
        r
    }

    /// Splits into `P(z) + cos θ · Q(z)` with `z = sin θ`.
    fn split(&self) -> ([f64; 4], [f64; 3]) {
        let mut p = [0.0; 4];
        let mut q = [0.0; 3];
        for j in 0..4 {
            p[j] += self.0[0][j];
            if j < 3 {
                q[j] += self.0[1][j];
            }
            if j < 2 {
                // cos² = 1 − z²
                p[j] += self.0[2][j];
                p[j + 2] -= self.0[2][j];
            }
        }
        q[0] += self.0[3][0];
        q[2] -= self.0[3][0];
        (p, q)
    }
}

fn det_poly(s: [&SweptSurface; 3]) -> CsPoly {
    let [a1, b1, c1] = s[0].line.map(CsPoly::from_trig);
    let [a2, b2, c2] = s[1].line.map(CsPoly::from_trig);
    let [a3, b3, c3] = s[2].line.map(CsPoly::from_trig);
    let m1 = b2.mul(&c3).sub(&b3.mul(&c2));
    let m2 = a2.mul(&c3).sub(&a3.mul(&c2));
    let m3 = a2.mul(&b3).sub(&a3.mul(&b2));
    a1.mul(&m1).sub(&b1.mul(&m2)).add(&c1.mul(&m3))
}

/// Whether two surfaces have parallel lines at every `θ`.
pub(crate) fn always_parallel(s: &SweptSurface, t: &SweptSurface) -> bool {
    if s.is_cap() || t.is_cap() {
        return false;
    }
    let a = CsPoly::from_trig(s.line[0]).mul(&CsPoly::from_trig(t.line[1]));
    let b = CsPoly::from_trig(s.line[1]).mul(&CsPoly::from_trig(t.line[0]));
    let d = a.sub(&b);
    d.0.iter().flatten().all(|c| c.abs() <= 1e-12)
}

/// Tolerance for patch membership and for the final residual check.
const PATCH_TOL: f64 = 1e-7;

/// Points of `P₀` where the three surfaces meet (at most 6 from the
/// polynomial, plus cap cases).
pub fn triple_intersection(
    s1: &SweptSurface,
    s2: &SweptSurface,
    s3: &SweptSurface,
) -> Result<Vec<Candidate3D>> {
    triple_intersection_ids([s1, s2, s3], (0, 1, 2))
}

pub(crate) fn triple_intersection_ids(
    s: [&SweptSurface; 3],
    ids: (usize, usize, usize),
) -> Result<Vec<Candidate3D>> {
    let caps: Vec<usize> = (0..3).filter(|&i| s[i].is_cap()).collect();
    let thetas: Vec<f64> = match caps.len() {
        0 => {
            let (p, q) = det_poly(s).split();
            // (P)² − (1 − z²)(Q)²
            let mut r = [0.0; 7];
            for i in 0..4 {
                for j in 0..4 {
                    r[i + j] += p[i] * p[j];
                }
            }
            for i in 0..3 {
                for j in 0..3 {
                    r[i + j] -= q[i] * q[j];
                    r[i + j + 2] += q[i] * q[j];
                }
            }
            let zmax = (FRAC_PI_3).sin();
            let roots = real_roots_in(&r, 0.0, zmax)?;
            let mag: f64 = p.iter().chain(q.iter()).map(|c| c.abs()).sum();
            roots
                .into_iter()
                .filter(|&z| {
                    let c = (1.0 - z * z).max(0.0).sqrt();
                    (eval_poly(&p, z) + c * eval_poly(&q, z)).abs() <= 1e-8 * mag.max(1e-300)
                })
                .map(|z| z.asin())
                .collect()
        }
        1 => vec![s[caps[0]].theta_lo],
        _ => return Ok(Vec::new()),
    };

    let mut out = Vec::new();
    for theta in thetas {
        let lines: Vec<(usize, (f64, f64, f64))> = (0..3)
            .filter(|&i| !s[i].is_cap())
            .map(|i| (i, s[i].line_at(theta)))
            .collect();
        // the best-conditioned pair of lines fixes (x, y)
        let mut best: Option<(f64, usize, usize)> = None;
        for a in 0..lines.len() {
            for b in a + 1..lines.len() {
                let (a1, b1, _) = lines[a].1;
                let (a2, b2, _) = lines[b].1;
                let d = (a1 * b2 - a2 * b1).abs();
                if best.is_none_or(|(bd, _, _)| d > bd) {
                    best = Some((d, a, b));
                }
            }
        }
        let Some((d, ia, ib)) = best else { continue };
        if d < 1e-12 {
            continue;
        }
        let (a1, b1, c1) = lines[ia].1;
        let (a2, b2, c2) = lines[ib].1;
        let den = a1 * b2 - a2 * b1;
        let x = (c1 * b2 - c2 * b1) / den;
        let y = (a1 * c2 - a2 * c1) / den;
        let p = Point2::new(x, y);
        let residual_ok = lines
            .iter()
            .all(|&(_, (a, b, c))| (a * x + b * y - c).abs() <= PATCH_TOL * (1.0 + c.abs()));
        if !residual_ok {
            continue;
        }
        if !Prism::contains(x, y, theta, PATCH_TOL) {
            continue;
        }
        if !s.iter().all(|f| f.patch_contains(p, theta, PATCH_TOL)) {
            continue;
        }
        out.push(Candidate3D {
            x,
            y,
            theta: theta.clamp(0.0, FRAC_PI_3),
            provenance: ids,
        });
    }
    Ok(out)
}

/// Triples of surfaces whose patches pairwise overlap, as index triples.
/// Fails once more than `cap` triples are found.
pub(crate) fn overlapping_triples(
    surfaces: &[SweptSurface],
    cap: u64,
) -> Result<Vec<(usize, usize, usize)>> {
    let n = surfaces.len();
    let tol = 1e-7;
    let mut nbr: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (&surfaces[i], &surfaces[j]);
            if a.overlaps(b, tol) && !always_parallel(a, b) {
                nbr[i].push(j);
            }
        }
    }
    let mut required: u64 = 0;
    for i in 0..n {
        for (jj, &j) in nbr[i].iter().enumerate() {
            required += sorted_intersection_count(&nbr[i][jj + 1..], &nbr[j]);
        }
    }
    if required > cap {
        return Err(Error::BudgetExceeded { required, cap });
    }
    let mut out = Vec::with_capacity(required as usize);
    for i in 0..n {
        for (jj, &j) in nbr[i].iter().enumerate() {
            let rest = &nbr[i][jj + 1..];
            let (mut a, mut b) = (0, 0);
            while a < rest.len() && b < nbr[j].len() {
                match rest[a].cmp(&nbr[j][b]) {
                    std::cmp::Ordering::Less => a += 1,
                    std::cmp::Ordering::Greater => b += 1,
                    std::cmp::Ordering::Equal => {
                        out.push((i, j, rest[a]));
                        a += 1;
                        b += 1;
                    }
                }
            }
        }
    }
    Ok(out)
}

fn sorted_intersection_count(a: &[usize], b: &[usize]) -> u64 {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}
