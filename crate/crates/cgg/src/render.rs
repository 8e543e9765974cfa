//! Deterministic SVG and DOT exports.
//!
//! Layout follows the figures: the ambient 2n-gon on a circle, label 0 on
//! the right, positive labels counterclockwise through the top, the avoided
//! vertices drawn red and underlined. Trigonometry is evaluated with a
//! fixed-order Taylor expansion over exact quadrant reduction so the emitted
//! bytes are identical across platforms.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::edge::Edge;
use crate::graph::Cgg;
use crate::labelling::Labelling;

/// Visual class of an edge, matching the line styles used in the figures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum EdgeClass {
    Ordinary,
    Bold,
    Punctured,
}

#[derive(Clone, Debug, Default)]
pub struct RenderOptions {
    /// Labels to draw as avoided vertices (red, underlined).
    pub avoided: Vec<i32>,
    /// Per-edge style; edges not listed render as ordinary.
    pub classes: BTreeMap<Edge, EdgeClass>,
}

impl RenderOptions {
    /// Styling derived from construction metadata: the designated arc is
    /// marked, the maximal construction gets its band styling (boundary
    /// directions punctured, back directions bold), and the extended
    /// construction draws its compensating edges bold.
    pub fn for_construction(g: &Cgg, meta: &crate::doc::Meta) -> RenderOptions {
        let mut opts = RenderOptions::default();
        let lab = g.labelling();
        let n = g.n();
        if let Some(q) = meta.q {
            if let Ok(arc) = lab.free_arc(q) {
                opts.avoided = arc.iter().map(|v| v.value()).collect();
            }
        }
        let (Some(name), Some(k)) = (meta.construction.as_deref(), meta.k) else {
            return opts;
        };
        match name {
            "max_arc" => {
                let m = ((n - 2 * k) / 2) as i32;
                for e in g.edges() {
                    let r = e.direction(lab).signed_rep().abs();
                    let class = if r < m {
                        EdgeClass::Ordinary
                    } else if r == m || (n % 2 == 1 && r == m + 1) {
                        EdgeClass::Punctured
                    } else {
                        EdgeClass::Bold
                    };
                    opts.classes.insert(*e, class);
                }
            }
            "extended_arc" => {
                if let Ok(plain) = crate::construct::max_arc_graph(n, k) {
                    if plain.labelling() == lab {
                        for e in g.edges() {
                            if !plain.has_edge(e) {
                                opts.classes.insert(*e, EdgeClass::Bold);
                            }
                        }
                    }
                }
            }
            _ => {}
        }
        opts
    }
}

const SIZE: f64 = 520.0;
const RADIUS: f64 = 220.0;

/// Point on the unit circle at position `p` of the 2n-gon, computed with
/// exact quadrant reduction and a fixed Taylor expansion.
fn unit_point(p: u32, n: u32) -> (f64, f64) {
    // Angle is p·π/n; with t = 2p = q·n + r the quadrant is q and the
    // residual angle is (r/n)·(π/2).
    let t = 2 * (p % (2 * n));
    let quadrant = t / n;
    let r = t % n;
    let phi = std::f64::consts::FRAC_PI_2 * (r as f64 / n as f64);
    let (c, s) = cos_sin_taylor(phi);
    match quadrant {
        0 => (c, s),
        1 => (-s, c),
        2 => (-c, -s),
        _ => (s, -c),
    }
}

fn cos_sin_taylor(x: f64) -> (f64, f64) {
    let x2 = x * x;
    let mut sin = x;
    let mut term = x;
    for i in 1..=10u32 {
        term *= -x2 / ((2 * i) * (2 * i + 1)) as f64;
        sin += term;
    }
    let mut cos = 1.0;
    let mut term = 1.0;
    for i in 1..=10u32 {
        term *= -x2 / ((2 * i - 1) * (2 * i)) as f64;
        cos += term;
    }
    (cos, sin)
}

fn svg_xy(lab: &Labelling, pos: u32, radius: f64) -> (f64, f64) {
    let (x, y) = unit_point(pos, lab.n());
    // SVG y grows downward.
    (SIZE / 2.0 + radius * x, SIZE / 2.0 - radius * y)
}

/// Render the graph as standalone SVG 1.1 text. Byte-deterministic for a
/// fixed graph and options.
pub fn render_svg(g: &Cgg, opts: &RenderOptions) -> String {
    let lab = g.labelling();
    let two_n = lab.two_n();
    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    writeln!(
        out,
        r#"  <rect width="{SIZE}" height="{SIZE}" fill="white"/>"#
    )
    .unwrap();
    writeln!(
        out,
        r##"  <circle cx="{:.3}" cy="{:.3}" r="{:.3}" fill="none" stroke="#dddddd"/>"##,
        SIZE / 2.0,
        SIZE / 2.0,
        RADIUS
    )
    .unwrap();

    // Edges first so vertex marks sit on top.
    for e in g.edges() {
        let (a, b) = e.endpoints();
        let (x1, y1) = svg_xy(lab, lab.position_of(a.value() as i64), RADIUS);
        let (x2, y2) = svg_xy(lab, lab.position_of(b.value() as i64), RADIUS);
        let class = opts.classes.get(e).copied().unwrap_or(EdgeClass::Ordinary);
        let style = match class {
            EdgeClass::Ordinary => r#"stroke="black" stroke-width="1.2""#.to_string(),
            EdgeClass::Bold => r#"stroke="black" stroke-width="2.8""#.to_string(),
            EdgeClass::Punctured => {
                r#"stroke="black" stroke-width="1.2" stroke-dasharray="6 4""#.to_string()
            }
        };
        writeln!(
            out,
            r#"  <line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" {style}/>"#
        )
        .unwrap();
    }

    // All 2n polygon positions; graph vertices get labels.
    for pos in 0..two_n {
        let (x, y) = svg_xy(lab, pos, RADIUS);
        match lab.vertex_at(pos as i64) {
            None => {
                writeln!(
                    out,
                    r##"  <circle cx="{x:.3}" cy="{y:.3}" r="1.5" fill="#bbbbbb"/>"##
                )
                .unwrap();
            }
            Some(v) => {
                let avoided = opts.avoided.contains(&v.value());
                let fill = if avoided { "red" } else { "black" };
                writeln!(
                    out,
                    r#"  <circle cx="{x:.3}" cy="{y:.3}" r="3.5" fill="{fill}"/>"#
                )
                .unwrap();
                let (tx, ty) = svg_xy(lab, pos, RADIUS + 22.0);
                let deco = if avoided {
                    r#" text-decoration="underline""#
                } else {
                    ""
                };
                writeln!(
                    out,
                    r#"  <text x="{tx:.3}" y="{ty:.3}" font-family="Helvetica" font-size="13" fill="{fill}" text-anchor="middle" dominant-baseline="middle"{deco}>{}</text>"#,
                    v.value()
                )
                .unwrap();
            }
        }
    }
    writeln!(out, "</svg>").unwrap();
    out
}

/// Render the graph in DOT with pinned node positions, suitable for
/// `neato -n`.
pub fn render_dot(g: &Cgg, opts: &RenderOptions) -> String {
    let lab = g.labelling();
    let mut out = String::new();
    writeln!(out, "graph cgg {{").unwrap();
    writeln!(out, "  layout=neato;").unwrap();
    writeln!(out, "  node [shape=circle, fontsize=10, width=0.3];").unwrap();
    for v in lab.vertices() {
        let (x, y) = unit_point(lab.position_of(v.value() as i64), lab.n());
        let color = if opts.avoided.contains(&v.value()) {
            ", fontcolor=red, color=red"
        } else {
            ""
        };
        writeln!(
            out,
            r#"  "{}" [pos="{:.3},{:.3}!"{color}];"#,
            v.value(),
            3.0 * x,
            3.0 * y
        )
        .unwrap();
    }
    for e in g.edges() {
        let (a, b) = e.endpoints();
        let style = match opts.classes.get(e).copied().unwrap_or(EdgeClass::Ordinary) {
            EdgeClass::Ordinary => "",
            EdgeClass::Bold => r#" [style=bold]"#,
            EdgeClass::Punctured => r#" [style=dashed]"#,
        };
        writeln!(out, r#"  "{}" -- "{}"{style};"#, a.value(), b.value()).unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}
