//! Minimal SVG 1.1 rendering of a polygon, a barrier and a witness line.

use std::fmt::Write;

use crate::barriers::Barrier;
use crate::geom::{ConvexPolygon, Point2};
use crate::verify::Witness;

/// Viewport is the bounding box of the polygon and barrier grown by 15%;
/// strokes are 0.8% of the polygon's diameter; `y` points up.
pub fn render(
    poly: &ConvexPolygon,
    barrier: Option<&Barrier>,
    witness: Option<&Witness>,
    caption: &str,
) -> String {
    let mut pts: Vec<Point2> = poly.vertices().to_vec();
    if let Some(b) = barrier {
        pts.extend(b.points());
    }
    let (mut lo, mut hi) = (pts[0], pts[0]);
    for q in &pts {
        lo = Point2::new(lo.x.min(q.x), lo.y.min(q.y));
        hi = Point2::new(hi.x.max(q.x), hi.y.max(q.y));
    }
    let (w, h) = (hi.x - lo.x, hi.y - lo.y);
    let pad = 0.075 * w.max(h);
    let (x0, y0) = (lo.x - pad, lo.y - pad);
    let (vw, vh) = (w + 2.0 * pad, h + 2.0 * pad);
    let diam = poly.diameter();
    let stroke = 0.008 * diam;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{x0} {} {vw} {vh}" width="600" height="{}">"#,
        -(y0 + vh),
        (600.0 * vh / vw).round()
    );
    let _ = writeln!(s, r#"<g transform="scale(1,-1)">"#);
    let _ = writeln!(
        s,
        r##"<polygon points="{}" fill="#dde6f0" stroke="#7a8896" stroke-width="{}"/>"##,
        points_attr(poly.vertices()),
        stroke / 2.0
    );
    if let Some(b) = barrier {
        for pl in b.polylines() {
            let _ = writeln!(
                s,
                r##"<polyline points="{}" fill="none" stroke="#1b1f24" stroke-width="{stroke}" stroke-linecap="round" stroke-linejoin="round"/>"##,
                points_attr(pl)
            );
        }
    }
    if let Some(wit) = witness {
        let (a, b) = wit.line_points(2.0 * (vw + vh));
        let _ = writeln!(
            s,
            r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#c0392b" stroke-width="{}" stroke-dasharray="{} {}"/>"##,
            a.x,
            a.y,
            b.x,
            b.y,
            stroke / 2.0,
            2.0 * stroke,
            stroke
        );
    }
    let _ = writeln!(s, "</g>");
    if !caption.is_empty() {
        let _ = writeln!(
            s,
            r##"<text x="{}" y="{}" font-family="sans-serif" font-size="{}" fill="#1b1f24">{}</text>"##,
            x0 + pad / 4.0,
            -(y0 + vh) + pad / 2.0,
            pad / 2.5,
            escape(caption)
        );
    }
    s.push_str("</svg>\n");
    s
}

fn points_attr(pts: &[Point2]) -> String {
    pts.iter()
        .map(|p| format!("{},{}", p.x, p.y))
        .collect::<Vec<_>>()
        .join(" ")
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}
