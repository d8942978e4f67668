//! Deterministic SVG drawings of `T_n` with a highlighted edge subset and
//! optional straight-segment transversals.

use std::fmt::Write as _;

use crate::edgeset::EdgeSet;
use crate::grid::{TriGrid, Vertex};
use crate::transversal::TransversalGraph;

#[derive(Clone, Debug)]
pub struct SvgOptions {
    /// Length of a unit edge in pixels.
    pub unit_px: f64,
    pub margin_px: f64,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            unit_px: 40.0,
            margin_px: 20.0,
        }
    }
}

const HALF_SQRT3: f64 = 0.866_025_403_784_438_6;

struct Layout {
    n: f64,
    unit: f64,
    margin: f64,
}

impl Layout {
    /// Equilateral embedding `((x-1) + (y-1)/2, (y-1) sqrt(3)/2)`, y flipped.
    fn point(&self, v: Vertex) -> (f64, f64) {
        let (x, y) = (f64::from(v.x - 1), f64::from(v.y - 1));
        let px = self.margin + (x + y / 2.0) * self.unit;
        let py = self.margin + (self.n - y) * HALF_SQRT3 * self.unit;
        (px, py)
    }

    fn midpoint(&self, grid: &TriGrid, e: usize) -> (f64, f64) {
        let [a, b] = grid.edge(e).endpoints();
        let (p, q) = (self.point(a), self.point(b));
        ((p.0 + q.0) / 2.0, (p.1 + q.1) / 2.0)
    }
}

fn line(out: &mut String, p: (f64, f64), q: (f64, f64), style: &str) {
    writeln!(
        out,
        r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" {style}/>"#,
        p.0, p.1, q.0, q.1
    )
    .expect("write to string");
}

pub fn render_svg(
    grid: &TriGrid,
    set: &EdgeSet,
    transversal: Option<&TransversalGraph>,
    opts: &SvgOptions,
) -> String {
    let n = grid.n() as f64;
    let layout = Layout {
        n,
        unit: opts.unit_px,
        margin: opts.margin_px,
    };
    let width = n * opts.unit_px + 2.0 * opts.margin_px;
    let height = n * HALF_SQRT3 * opts.unit_px + 2.0 * opts.margin_px;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();

    out.push_str("<g id=\"grid\">\n");
    for e in grid.edges() {
        let [a, b] = e.endpoints();
        line(&mut out, layout.point(a), layout.point(b), r##"stroke="#c8c8c8" stroke-width="1""##);
    }
    out.push_str("</g>\n<g id=\"subset\">\n");
    let thick = format!(r##"stroke="#000000" stroke-width="{:.2}" stroke-linecap="round""##, opts.unit_px / 10.0);
    for e in set.edges(grid) {
        let [a, b] = e.endpoints();
        line(&mut out, layout.point(a), layout.point(b), &thick);
    }
    out.push_str("</g>\n");
    if let Some(t) = transversal {
        out.push_str("<g id=\"transversal\">\n");
        for l in t.links() {
            let (p, q) = (layout.midpoint(grid, l.ends.0), layout.midpoint(grid, l.ends.1));
            line(&mut out, p, q, r##"stroke="#d03020" stroke-width="1.5""##);
        }
        out.push_str("</g>\n");
    }
    out.push_str("<g id=\"vertices\">\n");
    let r = (opts.unit_px / 16.0).max(1.0);
    for &v in grid.vertices() {
        let (x, y) = layout.point(v);
        writeln!(out, r#"<circle cx="{x:.2}" cy="{y:.2}" r="{r:.2}" fill="black"/>"#).unwrap();
    }
    out.push_str("</g>\n</svg>\n");
    out
}
