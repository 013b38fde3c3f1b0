use std::fmt::Write as _;
use std::path::Path;

use super::files::{cell_outlines, write_text, CliResult};
use crate::geom::{BBox, Point2, Polygon, SimplePolygon};
use crate::placement::Covering;

/// Draws the polygon, the covering's lattice cells and its unit circles in
/// input coordinates (y up). The view box fits the polygon and every circle.
pub fn svg_document(poly: &SimplePolygon, covering: &Covering) -> String {
    let cells = cell_outlines(covering);
    let mut bb = poly.bbox();
    for c in &covering.centers {
        bb = bb.union(&BBox::of_points(&[*c]).inflate(1.0));
    }
    let bb = bb.inflate(0.25);
    let (w, h) = (bb.max.x - bb.min.x, bb.max.y - bb.min.y);
    let stroke = 0.004 * w.max(h);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        bb.min.x, -bb.max.y, w, h
    );
    let _ = writeln!(s, r#"<g transform="scale(1,-1)" stroke-width="{stroke}">"#);
    for cell in &cells {
        let _ = writeln!(
            s,
            r##"<polygon class="cell" points="{}" fill="none" stroke="#9ab"/>"##,
            points_attr(cell)
        );
    }
    let _ = writeln!(
        s,
        r##"<polygon class="region" points="{}" fill="#fc6" fill-opacity="0.6" stroke="#a60"/>"##,
        points_attr(poly.vertices())
    );
    for c in &covering.centers {
        let _ = writeln!(
            s,
            r##"<circle cx="{}" cy="{}" r="1" fill="none" stroke="#236"/>"##,
            c.x, c.y
        );
    }
    s.push_str("</g>\n</svg>\n");
    s
}

fn points_attr(v: &[Point2]) -> String {
    v.iter()
        .map(|p| format!("{},{}", p.x, p.y))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn render_svg(poly: &SimplePolygon, covering: &Covering, path: &Path) -> CliResult<()> {
    write_text(path, &svg_document(poly, covering))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{Angle, ConvexPolygon};
    use crate::placement::{cover_fixed, Algorithm, Diagnostics};

    fn square(k: f64) -> ConvexPolygon {
        ConvexPolygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(k, 0.0),
            Point2::new(k, k),
            Point2::new(0.0, k),
        ])
        .unwrap()
    }

    #[test]
    fn element_counts() {
        let empty = Covering {
            theta: Angle::new(0.0),
            translation: Point2::ORIGIN,
            centers: Vec::new(),
            indices: Vec::new(),
            count: 0,
            algorithm: Algorithm::Fixed,
            diagnostics: Diagnostics::default(),
        };
        let sq = square(1.0);
        let doc = svg_document(&sq.clone().into(), &empty);
        assert_eq!(doc.matches("<circle").count(), 0);
        assert_eq!(doc.matches("class=\"region\"").count(), 1);

        let one = cover_fixed(&sq).unwrap();
        let doc = svg_document(&sq.into(), &one);
        assert_eq!(doc.matches("<circle").count(), 1);

        let big = square(10.0);
        let cov = cover_fixed(&big).unwrap();
        let doc = svg_document(&big.into(), &cov);
        assert_eq!(doc.matches(r#"r="1""#).count(), cov.count);
        assert_eq!(doc.matches("class=\"cell\"").count(), cov.count);
    }
}
