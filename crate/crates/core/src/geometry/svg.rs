//! Deterministic SVG export of drawings.

use std::fmt::Write;

use num::ToPrimitive;

use super::{Drawing, Point};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct SvgOptions {
    pub width: f64,
    pub mark_crossings: bool,
    pub vertex_labels: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            width: 640.0,
            mark_crossings: true,
            vertex_labels: true,
        }
    }
}

const PART_COLORS: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#bcbd22",
];

fn approx(p: &Point) -> (f64, f64) {
    (p.x.to_f64().unwrap_or(0.0), p.y.to_f64().unwrap_or(0.0))
}

/// Renders a validated drawing as an SVG byte stream. Parts are color-coded;
/// crossings are marked with `class="crossing"` dots when requested.
pub fn to_svg(d: &Drawing, opts: &SvgOptions) -> Result<Vec<u8>> {
    let report = d.validate();
    if !report.is_valid() {
        return Err(Error::InvalidDrawing(report.violations.clone()));
    }
    let g = d.graph();

    let mut xs: Vec<f64> = Vec::new();
    let mut ys: Vec<f64> = Vec::new();
    for v in g.vertex_ids() {
        let (x, y) = approx(d.position(v));
        xs.push(x);
        ys.push(y);
    }
    for e in 0..g.edge_count() {
        for p in d.route(crate::graph::EdgeId(e as u32)) {
            let (x, y) = approx(p);
            xs.push(x);
            ys.push(y);
        }
    }
    let (min_x, max_x) = bounds(&xs);
    let (min_y, max_y) = bounds(&ys);
    let span_x = (max_x - min_x).max(1e-9);
    let span_y = (max_y - min_y).max(1e-9);
    let scale = (opts.width * 0.9) / span_x.max(span_y);
    let margin = opts.width * 0.05;
    let height = span_y * scale + 2.0 * margin;
    let tx = move |x: f64| (x - min_x) * scale + margin;
    // Flip y so larger coordinates render upward.
    let ty = move |y: f64| (max_y - y) * scale + margin;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{:.2}" height="{:.2}" viewBox="0 0 {:.2} {:.2}">"#,
        opts.width, height, opts.width, height
    )
    .unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();

    for (idx, _) in g.edges().iter().enumerate() {
        let route = d.route(crate::graph::EdgeId(idx as u32));
        let pts: Vec<String> = route
            .iter()
            .map(|p| {
                let (x, y) = approx(p);
                format!("{:.3},{:.3}", tx(x), ty(y))
            })
            .collect();
        writeln!(
            out,
            r##"<polyline points="{}" fill="none" stroke="#555" stroke-width="1"/>"##,
            pts.join(" ")
        )
        .unwrap();
    }

    for v in g.vertex_ids() {
        let (x, y) = approx(d.position(v));
        let color = PART_COLORS[g.vertex_part(v) % PART_COLORS.len()];
        writeln!(
            out,
            r##"<circle cx="{:.3}" cy="{:.3}" r="4" fill="{}"/>"##,
            tx(x),
            ty(y),
            color
        )
        .unwrap();
        if opts.vertex_labels {
            writeln!(
                out,
                r#"<text x="{:.3}" y="{:.3}" font-size="10" font-family="sans-serif">{}</text>"#,
                tx(x) + 5.0,
                ty(y) - 5.0,
                g.vertex_name(v)
            )
            .unwrap();
        }
    }

    if opts.mark_crossings {
        for c in &report.crossings {
            let (x, y) = approx(&c.point);
            writeln!(
                out,
                r##"<circle class="crossing" cx="{:.3}" cy="{:.3}" r="2.5" fill="none" stroke="#d62728" stroke-width="1.2"/>"##,
                tx(x),
                ty(y)
            )
            .unwrap();
        }
    }

    writeln!(out, "</svg>").unwrap();
    Ok(out.into_bytes())
}

fn bounds(vals: &[f64]) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &v in vals {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    if !lo.is_finite() {
        (0.0, 1.0)
    } else {
        (lo, hi)
    }
}
