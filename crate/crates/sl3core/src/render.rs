//! Diagnostic renderers: Graphviz DOT and a self-contained SVG.
//!
//! The SVG places boundary vertices on a circle (clockwise from the marked
//! point at the top-left gap) and relaxes internal vertices to neighbor
//! barycenters. It is a debugging aid, not a faithful isotopy picture;
//! crossings are drawn as square nodes labeled with their sign.

use crate::web::{Color, Diagram, VKind};
use std::fmt::Write as _;

/// Graphviz DOT output (undirected; boundary circle dashed).
pub fn to_dot(d: &Diagram) -> String {
    let d = d.compact();
    let mut s = String::new();
    s.push_str("graph web {\n  layout=neato;\n  node [fontsize=10];\n");
    for v in 0..d.verts.len() {
        let vv = &d.verts[v];
        let (shape, fill, label) = match vv.kind {
            VKind::Boundary => ("square", if vv.color == Color::Black { "black" } else { "white" }, format!("{}", v)),
            VKind::Internal => ("circle", if vv.color == Color::Black { "black" } else { "white" }, String::new()),
            VKind::Crossing => ("diamond", "lightgray", format!("{}", if vv.sign > 0 { "+" } else { "-" })),
        };
        let fontcolor = if fill == "black" { "white" } else { "black" };
        writeln!(
            s,
            "  v{} [shape={},style=filled,fillcolor={},fontcolor={},label=\"{}\"];",
            v, shape, fill, fontcolor, label
        )
        .unwrap();
    }
    for h in 0..d.halfs.len() {
        let t = d.halfs[h].twin;
        if h < t {
            writeln!(s, "  v{} -- v{};", d.halfs[h].vertex, d.halfs[t].vertex).unwrap();
        }
    }
    for i in 0..d.boundary.len() {
        let j = (i + 1) % d.boundary.len();
        if d.boundary.len() > 1 {
            writeln!(s, "  v{} -- v{} [style=dashed,color=gray];", d.boundary[i], d.boundary[j]).unwrap();
        }
    }
    s.push_str("}\n");
    s
}

/// Self-contained SVG output.
pub fn to_svg(d: &Diagram) -> String {
    let d = d.compact();
    let n = d.verts.len();
    let size = 640.0f64;
    let cx = size / 2.0;
    let cy = size / 2.0;
    let r = size * 0.42;
    let mut pos = vec![(cx, cy); n];
    let nb = d.boundary.len();
    for (i, &b) in d.boundary.iter().enumerate() {
        // clockwise from the top gap: angle measured from 12 o'clock, going
        // clockwise, with a small offset so the marked gap is visible
        let theta = std::f64::consts::TAU * (i as f64 + 0.6) / (nb as f64);
        pos[b] = (cx + r * theta.sin(), cy - r * theta.cos());
    }
    // deterministic jitter for internal starts
    let mut k = 0usize;
    for v in 0..n {
        if d.verts[v].kind != VKind::Boundary {
            let a = (k as f64) * 2.399963; // golden-angle spiral
            let rr = 12.0 + 6.0 * (k as f64).sqrt();
            pos[v] = (cx + rr * a.cos(), cy + rr * a.sin());
            k += 1;
        }
    }
    // barycentric relaxation with boundary pinned
    for _ in 0..300 {
        let mut next = pos.clone();
        for v in 0..n {
            if d.verts[v].kind == VKind::Boundary {
                continue;
            }
            let mut sx = 0.0;
            let mut sy = 0.0;
            let deg = d.verts[v].half.len().max(1);
            for &h in &d.verts[v].half {
                let u = d.far_vertex(h);
                sx += pos[u].0;
                sy += pos[u].1;
            }
            next[v] = (sx / deg as f64, sy / deg as f64);
        }
        pos = next;
    }
    let mut s = String::new();
    writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">",
        size
    )
    .unwrap();
    writeln!(s, "<rect width=\"{0}\" height=\"{0}\" fill=\"white\"/>", size).unwrap();
    writeln!(
        s,
        "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"#bbbbbb\" stroke-dasharray=\"6 4\"/>",
        cx, cy, r
    )
    .unwrap();
    // marked point: small tick at the gap (just before boundary vertex 0)
    if nb > 0 {
        let theta = std::f64::consts::TAU * 0.1 / (nb as f64);
        let (mx, my) = (cx + r * theta.sin(), cy - r * theta.cos());
        writeln!(s, "<circle cx=\"{:.1}\" cy=\"{:.1}\" r=\"4\" fill=\"#d33\"/>", mx, my).unwrap();
    }
    for h in 0..d.halfs.len() {
        let t = d.halfs[h].twin;
        if h < t {
            let (x1, y1) = pos[d.halfs[h].vertex];
            let (x2, y2) = pos[d.halfs[t].vertex];
            writeln!(
                s,
                "<line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"#333\" stroke-width=\"1.5\"/>",
                x1, y1, x2, y2
            )
            .unwrap();
        }
    }
    for v in 0..n {
        let (x, y) = pos[v];
        match d.verts[v].kind {
            VKind::Boundary => {
                let fill = if d.verts[v].color == Color::Black { "#000" } else { "#fff" };
                writeln!(
                    s,
                    "<rect x=\"{:.1}\" y=\"{:.1}\" width=\"10\" height=\"10\" fill=\"{}\" stroke=\"#000\"/>",
                    x - 5.0,
                    y - 5.0,
                    fill
                )
                .unwrap();
                let m = d.verts[v].half.len();
                if m > 1 {
                    writeln!(s, "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"9\" fill=\"#d33\">{}</text>", x + 7.0, y - 7.0, m)
                        .unwrap();
                }
            }
            VKind::Internal => {
                let fill = if d.verts[v].color == Color::Black { "#000" } else { "#fff" };
                writeln!(s, "<circle cx=\"{:.1}\" cy=\"{:.1}\" r=\"5\" fill=\"{}\" stroke=\"#000\"/>", x, y, fill)
                    .unwrap();
            }
            VKind::Crossing => {
                writeln!(
                    s,
                    "<rect x=\"{:.1}\" y=\"{:.1}\" width=\"9\" height=\"9\" transform=\"rotate(45 {:.1} {:.1})\" fill=\"#eee\" stroke=\"#666\"/>",
                    x - 4.5,
                    y - 4.5,
                    x,
                    y
                )
                .unwrap();
                writeln!(
                    s,
                    "<text x=\"{:.1}\" y=\"{:.1}\" font-size=\"9\" text-anchor=\"middle\" fill=\"#666\">{}</text>",
                    x,
                    y - 8.0,
                    if d.verts[v].sign > 0 { "+" } else { "-" }
                )
                .unwrap();
            }
        }
    }
    s.push_str("</svg>\n");
    s
}
