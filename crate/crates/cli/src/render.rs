//! Text, JSON and SVG renderings. All output is a pure function of the
//! inputs; floating point appears only in SVG coordinates, printed at fixed
//! precision.

use std::fmt::Write;

use orchard_core::geometry::scalar::{format_scalar, to_f64};
use orchard_core::verify::Verdict;
use orchard_core::{Configuration, OrchardReport, TwoPartition};

/// Fill for the class containing point 0.
pub const COLOR_A: &str = "#1b9e77";
/// Fill for the other class.
pub const COLOR_B: &str = "#d95f02";

const CANVAS: f64 = 480.0;
const MARGIN: f64 = 40.0;
const RADIUS: f64 = 9.0;

fn list(items: &[usize]) -> String {
    items.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn coords(p: &[orchard_core::ExactScalar]) -> String {
    p.iter().map(format_scalar).collect::<Vec<_>>().join(" ")
}

/// One line per point (`index class coordinates`), then both classes.
pub fn coloring_text(config: &Configuration, partition: &TwoPartition) -> String {
    let (a, b) = partition.classes();
    let mut out = String::new();
    writeln!(
        out,
        "{} points in R^{}, split {}+{}",
        config.len(),
        config.dimension(),
        a.len(),
        b.len()
    )
    .unwrap();
    for (i, p) in config.points().iter().enumerate() {
        let class = if partition.same_class(0, i) { 'A' } else { 'B' };
        writeln!(out, "{i} {class} {}", coords(p)).unwrap();
    }
    writeln!(out, "A: {}", list(&a)).unwrap();
    writeln!(out, "B: {}", list(&b)).unwrap();
    out
}

pub fn partition_json(partition: &TwoPartition) -> String {
    let mut s = serde_json::to_string(partition).expect("serializable");
    s.push('\n');
    s
}

pub fn report_json(report: &OrchardReport) -> String {
    let mut s = serde_json::to_string(report).expect("serializable");
    s.push('\n');
    s
}

pub fn report_text(report: &OrchardReport) -> String {
    let mut out = String::new();
    writeln!(out, "n = {}, l = {}, {}", report.n, report.l, report.kind).unwrap();
    writeln!(out, "prefactor {}", report.prefactor).unwrap();
    for p in &report.cocycle {
        writeln!(out, "sigma({},{}) {}", p.pair[0], p.pair[1], p.sign).unwrap();
    }
    let (a, b) = report.partition.classes();
    writeln!(out, "class_of_0: {}", list(&a)).unwrap();
    writeln!(out, "other: {}", list(&b)).unwrap();
    out
}

pub fn verdicts_text(rows: &[Verdict]) -> String {
    let mut out = String::from("n l solution_dimension orchard_in_span exotic_detected\n");
    for v in rows {
        writeln!(
            out,
            "{} {} {} {} {}",
            v.n, v.l, v.solution_dimension, v.orchard_in_span, v.exotic_detected
        )
        .unwrap();
    }
    out
}

pub fn verdicts_json(rows: &[Verdict]) -> String {
    let mut out = String::new();
    for v in rows {
        out.push_str(&serde_json::to_string(v).expect("serializable"));
        out.push('\n');
    }
    out
}

/// Fixed two-decimal form without a negative zero.
fn num(x: f64) -> String {
    let s = format!("{x:.2}");
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

/// Planar drawing: class A (containing point 0) in [`COLOR_A`], the other
/// class in [`COLOR_B`], each point labeled by its index. With `lines`, every
/// line through two points is drawn underneath.
pub fn coloring_svg(config: &Configuration, partition: &TwoPartition, lines: bool) -> String {
    assert_eq!(config.dimension(), 2, "SVG needs planar input");
    let pts: Vec<(f64, f64)> = config
        .points()
        .iter()
        .map(|p| (to_f64(&p[0]), to_f64(&p[1])))
        .collect();
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in &pts {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let span = (x1 - x0).max(y1 - y0);
    let scale = if span > 0.0 && span.is_finite() {
        (CANVAS - 2.0 * MARGIN) / span
    } else {
        1.0
    };
    let (cx, cy) = ((x0 + x1) / 2.0, (y0 + y1) / 2.0);
    let screen: Vec<(f64, f64)> = pts
        .iter()
        .map(|&(x, y)| (CANVAS / 2.0 + (x - cx) * scale, CANVAS / 2.0 - (y - cy) * scale))
        .collect();

    let (a, b) = partition.classes();
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = CANVAS,
        h = CANVAS + 30.0
    )
    .unwrap();
    writeln!(
        out,
        "<title>orchard coloring: {} points, split {}+{}</title>",
        pts.len(),
        a.len(),
        b.len()
    )
    .unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    if lines {
        writeln!(out, r##"<g stroke="#bbbbbb" stroke-width="0.8">"##).unwrap();
        for j in 1..screen.len() {
            for i in 0..j {
                let (p, q) = (screen[i], screen[j]);
                let (dx, dy) = (q.0 - p.0, q.1 - p.1);
                let len = (dx * dx + dy * dy).sqrt();
                if len == 0.0 {
                    continue;
                }
                let t = 2.0 * CANVAS / len;
                writeln!(
                    out,
                    r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                    num(p.0 - dx * t),
                    num(p.1 - dy * t),
                    num(p.0 + dx * t),
                    num(p.1 + dy * t)
                )
                .unwrap();
            }
        }
        writeln!(out, "</g>").unwrap();
    }
    for (i, &(x, y)) in screen.iter().enumerate() {
        let fill = if partition.same_class(0, i) { COLOR_A } else { COLOR_B };
        writeln!(
            out,
            r#"<circle cx="{}" cy="{}" r="{RADIUS}" fill="{fill}" stroke="black"/>"#,
            num(x),
            num(y)
        )
        .unwrap();
        writeln!(
            out,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="12">{i}</text>"#,
            num(x + RADIUS + 2.0),
            num(y - RADIUS - 2.0)
        )
        .unwrap();
    }
    writeln!(
        out,
        r#"<text x="{}" y="{}" font-family="sans-serif" font-size="12"><tspan fill="{COLOR_A}">A: {}</tspan> <tspan fill="{COLOR_B}">B: {}</tspan></text>"#,
        num(MARGIN),
        num(CANVAS + 15.0),
        list(&a),
        list(&b)
    )
    .unwrap();
    out.push_str("</svg>\n");
    out
}
