//! SVG pictures of tritangent classes.
//!
//! A class is drawn by projecting each cell of its bounded complex to the
//! positions of the two vertices of its members: light regions for `v0`,
//! dark regions for `v1`. Liftable members are dots labeled with their
//! multiplicity.

use std::fmt::Write;

use crate::error::CliError;
use crate::report::{ClassJson, ReportJson};

const WIDTH: f64 = 640.0;
const MARGIN: f64 = 24.0;
const LIGHT: &str = "#9ecae1";
const DARK: &str = "#08519c";

fn num(s: &str) -> f64 {
    match s.split_once('/') {
        Some((p, q)) => p.parse::<f64>().unwrap_or(0.0) / q.parse::<f64>().unwrap_or(1.0),
        None => s.parse().unwrap_or(0.0),
    }
}

fn pt(p: &[String; 2]) -> (f64, f64) {
    (num(&p[0]), num(&p[1]))
}

/// Convex hull in counterclockwise order.
pub fn convex_hull(points: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut p: Vec<(f64, f64)> = points.to_vec();
    p.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    p.dedup_by(|a, b| (a.0 - b.0).abs() < 1e-12 && (a.1 - b.1).abs() < 1e-12);
    if p.len() < 3 {
        return p;
    }
    let cross = |o: (f64, f64), a: (f64, f64), b: (f64, f64)| (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0);
    let mut hull: Vec<(f64, f64)> = Vec::with_capacity(2 * p.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &(f64, f64)>> =
            if pass == 0 { Box::new(p.iter()) } else { Box::new(p.iter().rev()) };
        for &q in iter {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], q) <= 0.0 {
                hull.pop();
            }
            hull.push(q);
        }
        hull.pop();
    }
    hull
}

struct View {
    min: (f64, f64),
    scale: f64,
    height: f64,
}

impl View {
    fn new(points: &[(f64, f64)]) -> View {
        let mut lo = (f64::INFINITY, f64::INFINITY);
        let mut hi = (f64::NEG_INFINITY, f64::NEG_INFINITY);
        for &(x, y) in points {
            lo = (lo.0.min(x), lo.1.min(y));
            hi = (hi.0.max(x), hi.1.max(y));
        }
        let pad = ((hi.0 - lo.0).max(hi.1 - lo.1) * 0.15).max(1.0);
        lo = (lo.0 - pad, lo.1 - pad);
        hi = (hi.0 + pad, hi.1 + pad);
        let scale = (WIDTH - 2.0 * MARGIN) / (hi.0 - lo.0).max(hi.1 - lo.1);
        let height = (hi.1 - lo.1) * scale + 2.0 * MARGIN;
        View { min: lo, scale, height }
    }

    fn map(&self, p: (f64, f64)) -> (f64, f64) {
        (MARGIN + (p.0 - self.min.0) * self.scale, self.height - MARGIN - (p.1 - self.min.1) * self.scale)
    }

    fn extent(&self) -> f64 {
        (WIDTH - 2.0 * MARGIN) / self.scale
    }
}

fn shape(out: &mut String, view: &View, pts: &[(f64, f64)], color: &str, opacity: f64) {
    let hull = convex_hull(pts);
    let mapped: Vec<String> = hull.iter().map(|&p| view.map(p)).map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
    match hull.len() {
        0 => {}
        1 => {
            let (x, y) = view.map(hull[0]);
            let _ = writeln!(out, r#"<circle cx="{x:.2}" cy="{y:.2}" r="3" fill="{color}" fill-opacity="{opacity}"/>"#);
        }
        2 => {
            let _ = writeln!(
                out,
                r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="3" stroke-opacity="{opacity}"/>"#,
                mapped.join(" ")
            );
        }
        _ => {
            let _ = writeln!(
                out,
                r#"<polygon points="{}" fill="{color}" fill-opacity="{opacity}" stroke="{color}" stroke-width="1"/>"#,
                mapped.join(" ")
            );
        }
    }
}

/// SVG 1.1 picture of one class over the curve.
pub fn render_class(report: &ReportJson, class: &ClassJson) -> String {
    let verts: Vec<(f64, f64)> = report.curve.vertices.iter().map(pt).collect();
    let mut all = verts.clone();
    for r in &class.regions {
        all.extend(r.v0.iter().map(pt));
        all.extend(r.v1.iter().map(pt));
    }
    let view = View::new(&all);
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{:.0}" viewBox="0 0 {WIDTH} {:.0}">"#,
        view.height, view.height
    );
    let title = match class.partition {
        Some([a, b, c, d]) => format!("class {} partition ({a},{b},{c},{d})", class.id),
        None => format!("class {}", class.id),
    };
    let _ = writeln!(out, "<title>{title}</title>");
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(out, r#"<g stroke="black" stroke-width="1.2" fill="none">"#);
    for e in &report.curve.edges {
        let (a, b) = (view.map(verts[e[0]]), view.map(verts[e[1]]));
        let _ = writeln!(out, r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#, a.0, a.1, b.0, b.1);
    }
    let reach = view.extent() * 2.0;
    for l in &report.curve.legs {
        let p = verts[l.endpoint];
        let n = ((l.direction[0] * l.direction[0] + l.direction[1] * l.direction[1]) as f64).sqrt();
        let q = (p.0 + reach * l.direction[0] as f64 / n, p.1 + reach * l.direction[1] as f64 / n);
        let (a, b) = (view.map(p), view.map(q));
        let _ = writeln!(out, r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#, a.0, a.1, b.0, b.1);
    }
    let _ = writeln!(out, "</g>");
    for r in &class.regions {
        let v0: Vec<(f64, f64)> = r.v0.iter().map(pt).collect();
        shape(&mut out, &view, &v0, LIGHT, 0.5);
    }
    for r in &class.regions {
        let v1: Vec<(f64, f64)> = r.v1.iter().map(pt).collect();
        shape(&mut out, &view, &v1, DARK, 0.5);
    }
    for m in &class.liftable_members {
        for (p, color) in [(pt(&m.v0), LIGHT), (pt(&m.v1), DARK)] {
            let (x, y) = view.map(p);
            let _ = writeln!(out, r#"<circle cx="{x:.2}" cy="{y:.2}" r="4" fill="{color}" stroke="black"/>"#);
            let _ = writeln!(
                out,
                r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="12">{}</text>"#,
                x + 5.0,
                y - 5.0,
                m.multiplicity
            );
        }
    }
    let _ = writeln!(out, "</svg>");
    out
}

/// Picture of the class with the given id.
pub fn render_class_id(report: &ReportJson, id: usize) -> Result<String, CliError> {
    let class = report.classes.iter().find(|c| c.id == id).ok_or(CliError::UnknownClass(id))?;
    Ok(render_class(report, class))
}
