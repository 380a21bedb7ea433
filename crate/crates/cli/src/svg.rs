//! SVG 1.1 rendering of a Newton diagram.

use std::fmt::Write;

use nearirr_core::{Edge, LatticePoint, LatticePolygon, WeightVector};

/// Pixels per lattice unit.
const UNIT: i64 = 40;
/// Label offset from an edge midpoint, in lattice units.
const LABEL_OFFSET: f64 = 0.45;

struct Frame {
    max_alpha: i64,
    max_beta: i64,
}

impl Frame {
    fn x(&self, alpha: f64) -> f64 {
        (alpha + 1.0) * UNIT as f64
    }

    fn y(&self, beta: f64) -> f64 {
        (self.max_beta as f64 + 1.0 - beta) * UNIT as f64
    }

    fn px(&self, p: LatticePoint) -> (f64, f64) {
        (self.x(p.alpha as f64), self.y(p.beta as f64))
    }

    fn width(&self) -> i64 {
        (self.max_alpha + 2) * UNIT
    }

    fn height(&self) -> i64 {
        (self.max_beta + 2) * UNIT
    }
}

/// Renders the diagram, its edges and the given support points.
///
/// An edge is highlighted when its normal is `w` or `-w` for some `w` in
/// `highlight`, so one weight marks a whole antipodal pair.
pub fn render_svg(
    diagram: &LatticePolygon,
    edges: &[Edge],
    highlight: &[WeightVector],
    points: &[LatticePoint],
) -> String {
    let all = diagram.vertices().iter().chain(points);
    let frame = Frame {
        max_alpha: all.clone().map(|p| p.alpha).max().unwrap_or(0).max(0),
        max_beta: all.map(|p| p.beta).max().unwrap_or(0).max(0),
    };
    let (w, h) = (frame.width(), frame.height());
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let _ = writeln!(
        s,
        r#"<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>"#
    );

    let _ = writeln!(s, r##"<g class="grid" stroke="#dddddd" stroke-width="1">"##);
    for a in -1..=frame.max_alpha + 1 {
        let x = frame.x(a as f64);
        let stroke = if a == 0 { r##" stroke="#888888""## } else { "" };
        let _ = writeln!(
            s,
            r#"<line x1="{x:.1}" y1="0.0" x2="{x:.1}" y2="{h}.0"{stroke}/>"#
        );
    }
    for b in -1..=frame.max_beta + 1 {
        let y = frame.y(b as f64);
        let stroke = if b == 0 { r##" stroke="#888888""## } else { "" };
        let _ = writeln!(
            s,
            r#"<line x1="0.0" y1="{y:.1}" x2="{w}.0" y2="{y:.1}"{stroke}/>"#
        );
    }
    let _ = writeln!(s, "</g>");

    let v = diagram.vertices();
    if v.len() >= 3 {
        let pts: Vec<String> = v
            .iter()
            .map(|p| {
                let (x, y) = frame.px(*p);
                format!("{x:.1},{y:.1}")
            })
            .collect();
        let _ = writeln!(
            s,
            r##"<polygon class="diagram" points="{}" fill="#cfe3f7" fill-opacity="0.8" stroke="none"/>"##,
            pts.join(" ")
        );
    } else if v.len() == 2 {
        let ((x1, y1), (x2, y2)) = (frame.px(v[0]), frame.px(v[1]));
        let _ = writeln!(
            s,
            r##"<line class="diagram" x1="{x1:.1}" y1="{y1:.1}" x2="{x2:.1}" y2="{y2:.1}" stroke="#1f5f99" stroke-width="2"/>"##
        );
    }

    for e in edges {
        let lit = highlight.iter().any(|w| e.normal == *w || e.normal == -*w);
        let ((x1, y1), (x2, y2)) = (frame.px(e.start), frame.px(e.end));
        let (class, stroke, width) = if lit {
            ("edge highlight", "#d62728", 4)
        } else {
            ("edge", "#1f5f99", 2)
        };
        let _ = writeln!(
            s,
            r#"<line class="{class}" x1="{x1:.1}" y1="{y1:.1}" x2="{x2:.1}" y2="{y2:.1}" stroke="{stroke}" stroke-width="{width}"/>"#
        );
    }

    for e in edges {
        let (p, q) = (e.normal.p() as f64, e.normal.q() as f64);
        let len = (p * p + q * q).sqrt();
        let ma = (e.start.alpha + e.end.alpha) as f64 / 2.0 + LABEL_OFFSET * p / len;
        let mb = (e.start.beta + e.end.beta) as f64 / 2.0 + LABEL_OFFSET * q / len;
        let _ = writeln!(
            s,
            r#"<text class="normal" x="{:.1}" y="{:.1}" font-family="monospace" font-size="12" text-anchor="middle" dominant-baseline="middle">{}</text>"#,
            frame.x(ma),
            frame.y(mb),
            e.normal
        );
    }

    for p in points {
        let (x, y) = frame.px(*p);
        let _ = writeln!(
            s,
            r#"<circle class="support" cx="{x:.1}" cy="{y:.1}" r="4" fill="black"/>"#
        );
    }
    let _ = writeln!(s, "</svg>");
    s
}
