//! Static SVG figures: a polygon inside `n * simplex` with its lattice points.

use std::fmt::Write;

use vertex_maximal::{Point, Polygon};

const UNIT: f64 = 32.0;
const MARGIN: f64 = 16.0;

struct Frame {
    n: i64,
    skew: bool,
}

impl Frame {
    /// `--skew` draws the simplex as `conv(0, e1, e1 + e2)`.
    fn place(&self, p: Point) -> (f64, f64) {
        let x = if self.skew { p.x + p.y } else { p.x };
        (MARGIN + UNIT * x as f64, MARGIN + UNIT * (self.n - p.y) as f64)
    }

    fn width(&self) -> f64 {
        2.0 * MARGIN + UNIT * self.n as f64
    }

    fn path(&self, pts: &[Point]) -> String {
        pts.iter()
            .map(|&p| {
                let (x, y) = self.place(p);
                format!("{x:.1},{y:.1}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub fn render(polygon: &Polygon, n: i64, skew: bool) -> String {
    let frame = Frame { n: n.max(1), skew };
    let n = frame.n;
    let size = frame.width();
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size:.0}" height="{size:.0}" viewBox="0 0 {size:.0} {size:.0}">"#
    )
    .unwrap();
    let corners = [Point::new(0, 0), Point::new(n, 0), Point::new(0, n)];
    writeln!(
        out,
        r##"  <polygon points="{}" fill="none" stroke="#999" stroke-width="1"/>"##,
        frame.path(&corners)
    )
    .unwrap();
    for y in 0..=n {
        for x in 0..=n - y {
            let (cx, cy) = frame.place(Point::new(x, y));
            writeln!(out, r##"  <circle cx="{cx:.1}" cy="{cy:.1}" r="2" fill="#bbb"/>"##).unwrap();
        }
    }
    let shape = if polygon.f0() >= 3 { "polygon" } else { "polyline" };
    writeln!(
        out,
        r##"  <{shape} points="{}" fill="#4a7bd0" fill-opacity="0.2" stroke="#1f4e9c" stroke-width="2"/>"##,
        frame.path(polygon.vertices())
    )
    .unwrap();
    for &v in polygon.vertices() {
        let (cx, cy) = frame.place(v);
        writeln!(out, r##"  <circle cx="{cx:.1}" cy="{cy:.1}" r="3.5" fill="#1f4e9c"/>"##).unwrap();
    }
    out.push_str("</svg>\n");
    out
}
