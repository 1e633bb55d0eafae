//! SVG rendering of layouts.

use std::fmt::Write as _;

use crate::geom::{Axis, Layout};

/// Pixels per unit square side.
const SCALE: f64 = 40.0;
const MARGIN: f64 = 0.5;

fn esc(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// An SVG 1.1 document with one labelled rectangle per square. With `edges`,
/// each visibility is drawn as a segment between the facing sides, through
/// the middle of the overlap of the two squares' projections.
pub fn render_svg(layout: &Layout, edges: bool) -> String {
    let Some(ext) = layout.extents() else {
        return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"0\" height=\"0\"/>\n".into();
    };
    let (x_min, x_max) = (ext.x_min.to_f64() - MARGIN, ext.x_max.to_f64() + 1.0 + MARGIN);
    let (y_min, y_max) = (ext.y_min.to_f64() - MARGIN, ext.y_max.to_f64() + 1.0 + MARGIN);
    let (w, h) = (x_max - x_min, y_max - y_min);
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(out, "<!-- y axis flipped for the screen: layout point (x, y) is drawn at (x, -y) -->").unwrap();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{:.0}\" height=\"{:.0}\" viewBox=\"{} {} {} {}\">",
        w * SCALE,
        h * SCALE,
        x_min,
        -y_max,
        w,
        h
    )
    .unwrap();
    writeln!(out, "<g fill=\"#dde6f2\" stroke=\"#1f3a5f\" stroke-width=\"0.03\">").unwrap();
    for s in layout.squares() {
        let (x, y) = (s.x.to_f64(), s.y.to_f64());
        writeln!(out, "  <rect x=\"{x}\" y=\"{}\" width=\"1\" height=\"1\"/>", -(y + 1.0)).unwrap();
    }
    out.push_str("</g>\n");
    if edges {
        if let Ok(split) = layout.split_xy() {
            out.push_str("<g stroke-width=\"0.04\">\n");
            for (g, axis, colour) in [(&split.gx, Axis::Horizontal, "#c0392b"), (&split.gy, Axis::Vertical, "#27ae60")] {
                for (a, b) in g.edges() {
                    let (sa, sb) = (layout.get(g.label(a)).unwrap(), layout.get(g.label(b)).unwrap());
                    let (pa, pb) = (sa.along(axis).to_f64(), sb.along(axis).to_f64());
                    let (ca, cb) = (sa.across(axis).to_f64(), sb.across(axis).to_f64());
                    let mid = (ca.max(cb) + ca.min(cb) + 1.0) / 2.0;
                    let (from, to) = if pa < pb { (pa + 1.0, pb) } else { (pb + 1.0, pa) };
                    let (x1, y1, x2, y2) = match axis {
                        Axis::Horizontal => (from, mid, to, mid),
                        Axis::Vertical => (mid, from, mid, to),
                    };
                    writeln!(out, "  <line x1=\"{x1}\" y1=\"{}\" x2=\"{x2}\" y2=\"{}\" stroke=\"{colour}\"/>", -y1, -y2).unwrap();
                }
            }
            out.push_str("</g>\n");
        }
    }
    writeln!(out, "<g font-family=\"sans-serif\" font-size=\"0.35\" text-anchor=\"middle\" fill=\"#111\">").unwrap();
    for s in layout.squares() {
        let (cx, cy) = (s.x.to_f64() + 0.5, s.y.to_f64() + 0.5);
        writeln!(out, "  <text x=\"{cx}\" y=\"{}\">{}</text>", -cy + 0.12, esc(&s.id)).unwrap();
    }
    out.push_str("</g>\n</svg>\n");
    out
}
