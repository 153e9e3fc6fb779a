//! SVG rendering of a Coxeter-plane diagram.

use coxstokes::coxeter::CoxeterPlaneDiagram;
use coxstokes::RootSystem;
use std::fmt::Write;

const SIZE: f64 = 800.0;
const CENTER: f64 = 400.0;
const RIM: f64 = 330.0;
/// Root coordinates are printed next to the points up to this many roots.
const LABEL_LIMIT: usize = 48;

fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

fn at(radius: f64, angle: f64) -> (String, String) {
    (num(CENTER + radius * angle.cos()), num(CENTER - radius * angle.sin()))
}

fn coords_label(c: &[i64]) -> String {
    c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

/// Spokes labelled `d1..d2s`, one circle per wheel, Π₂ highlighted on `d1`.
pub fn render(rs: &RootSystem, plane: &CoxeterPlaneDiagram) -> String {
    let scale = RIM / plane.coords.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{s}" height="{s}" viewBox="0 0 {s} {s}" font-family="sans-serif">"#,
        s = SIZE
    );
    let _ = writeln!(
        out,
        "<title>{} Coxeter plane: {} spokes, {} wheels</title>",
        rs.ty,
        plane.num_rays(),
        plane.wheels.len()
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);

    let _ = writeln!(out, r##"<g id="wheels" fill="none" stroke="#b0b0b0" stroke-width="1">"##);
    for w in &plane.wheels {
        let _ = writeln!(out, r#"<circle cx="{c}" cy="{c}" r="{}"/>"#, num(w * RIM), c = num(CENTER));
    }
    let _ = writeln!(out, "</g>");

    let _ = writeln!(out, r##"<g id="spokes" stroke="#d0d0d0" stroke-width="1">"##);
    for &theta in &plane.ray_angles {
        let (x, y) = at(RIM * 1.04, theta);
        let _ = writeln!(out, r#"<line x1="{c}" y1="{c}" x2="{x}" y2="{y}"/>"#, c = num(CENTER));
    }
    let _ = writeln!(out, "</g>");

    let _ = writeln!(out, r##"<g id="ray-labels" font-size="13" fill="#404040" text-anchor="middle" dominant-baseline="middle">"##);
    for (i, &theta) in plane.ray_angles.iter().enumerate() {
        let (x, y) = at(RIM * 1.12, theta);
        let _ = writeln!(out, r#"<text x="{x}" y="{y}">d{}</text>"#, i + 1);
    }
    let _ = writeln!(out, "</g>");

    let head = &plane.assignment[0];
    let show_labels = rs.num_roots() <= LABEL_LIMIT;
    let _ = writeln!(out, r#"<g id="roots">"#);
    for (k, z) in plane.coords.iter().enumerate() {
        let (x, y) = (num(CENTER + scale * z.re), num(CENTER - scale * z.im));
        let label = coords_label(&rs.roots[k].coords);
        let (r, fill) = if head.contains(&k) { ("6", "#d62728") } else { ("3.5", "#202020") };
        let _ = writeln!(out, r#"<circle cx="{x}" cy="{y}" r="{r}" fill="{fill}"><title>({label})</title></circle>"#);
        if show_labels {
            let _ = writeln!(
                out,
                r##"<text x="{}" y="{}" font-size="10" fill="#606060">{label}</text>"##,
                num(CENTER + scale * z.re + 7.0),
                num(CENTER - scale * z.im - 7.0)
            );
        }
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "</svg>");
    out
}
