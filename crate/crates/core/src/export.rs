//! Graphviz DOT and SVG output.

use std::f64::consts::PI;
use std::fmt::Write as _;

use crate::quiver::{Quiver, Seed};
use crate::triangulation::Triangulation;

fn push_quiver_edges(out: &mut String, q: &Quiver) {
    for (a, b, mult) in q.arrows() {
        if mult == 1 {
            let _ = writeln!(out, "  {a} -> {b};");
        } else {
            let _ = writeln!(out, "  {a} -> {b} [label=\"{mult}\"];");
        }
    }
}

pub fn quiver_dot(q: &Quiver) -> String {
    let mut out = String::from("digraph quiver {\n");
    for v in 1..=q.n() {
        let _ = writeln!(out, "  {v};");
    }
    push_quiver_edges(&mut out, q);
    out.push_str("}\n");
    out
}

/// Frozen vertices are drawn as grey boxes named `f<j>` and labelled `j'`.
pub fn seed_dot(s: &Seed) -> String {
    let n = s.n();
    let mut out = String::from("digraph seed {\n");
    for v in 1..=n {
        let _ = writeln!(out, "  {v};");
    }
    for j in 1..=n {
        let _ = writeln!(
            out,
            "  f{j} [label=\"{j}'\", shape=box, style=filled, fillcolor=lightgrey];"
        );
    }
    push_quiver_edges(&mut out, s.quiver());
    for j in 1..=n {
        for i in 1..=n {
            let c = s.c(j, i);
            let (from, to) = if c > 0 {
                (format!("f{j}"), i.to_string())
            } else {
                (i.to_string(), format!("f{j}"))
            };
            match c.unsigned_abs() {
                0 => {}
                1 => {
                    let _ = writeln!(out, "  {from} -> {to};");
                }
                k => {
                    let _ = writeln!(out, "  {from} -> {to} [label=\"{k}\"];");
                }
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Undirected drawing: polygon edges plus labelled arcs.
pub fn triangulation_dot(t: &Triangulation) -> String {
    let m = t.m();
    let mut out = String::from("graph triangulation {\n  layout=circo;\n");
    for v in 0..m {
        let _ = writeln!(out, "  p{v} [label=\"{v}\"];");
    }
    for v in 0..m {
        let _ = writeln!(out, "  p{v} -- p{};", (v + 1) % m);
    }
    for (i, c) in t.arcs().iter().enumerate() {
        let _ = writeln!(out, "  p{} -- p{} [label=\"{}\", color=blue];", c.0, c.1, i + 1);
    }
    out.push_str("}\n");
    out
}

/// Polygon vertex `k` sits on the unit circle at angle `2πk/m`, counterclockwise.
pub fn vertex_position(k: usize, m: usize) -> (f64, f64) {
    let a = 2.0 * PI * k as f64 / m as f64;
    (a.cos(), a.sin())
}

pub fn triangulation_svg(t: &Triangulation) -> String {
    let m = t.m();
    const SIZE: f64 = 400.0;
    const R: f64 = 170.0;
    // SVG y grows downwards, so flip it to keep the counterclockwise order.
    let pt = |k: usize| {
        let (x, y) = vertex_position(k, m);
        (SIZE / 2.0 + R * x, SIZE / 2.0 - R * y)
    };
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">\n"
    );
    let points: Vec<String> = (0..m)
        .map(|k| {
            let (x, y) = pt(k);
            format!("{x:.3},{y:.3}")
        })
        .collect();
    let _ = writeln!(
        out,
        "  <polygon points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>",
        points.join(" ")
    );
    for (i, c) in t.arcs().iter().enumerate() {
        let (x1, y1) = pt(c.0);
        let (x2, y2) = pt(c.1);
        let _ = writeln!(
            out,
            "  <line class=\"arc\" x1=\"{x1:.3}\" y1=\"{y1:.3}\" x2=\"{x2:.3}\" y2=\"{y2:.3}\" stroke=\"steelblue\" stroke-width=\"2\"/>"
        );
        let _ = writeln!(
            out,
            "  <text x=\"{:.3}\" y=\"{:.3}\" font-size=\"14\" text-anchor=\"middle\">{}</text>",
            (x1 + x2) / 2.0,
            (y1 + y2) / 2.0,
            i + 1
        );
    }
    for k in 0..m {
        let (x, y) = pt(k);
        let _ = writeln!(out, "  <circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"4\"/>");
        let (lx, ly) = (
            SIZE / 2.0 + (R + 16.0) * (x - SIZE / 2.0) / R,
            SIZE / 2.0 + (R + 16.0) * (y - SIZE / 2.0) / R,
        );
        let _ = writeln!(
            out,
            "  <text x=\"{lx:.3}\" y=\"{ly:.3}\" font-size=\"12\" text-anchor=\"middle\">{k}</text>"
        );
    }
    out.push_str("</svg>\n");
    out
}
