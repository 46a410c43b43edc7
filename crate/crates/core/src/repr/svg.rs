//! Plain SVG output for heaps, wiring diagrams and tilings.
//!
//! Output is byte-for-byte deterministic: coordinates are printed with a
//! fixed precision and elements are emitted in input order.

use std::fmt::Write;

use super::heap::Heap;
use super::tiling::{Point, Tiling};
use super::wiring::WiringDiagram;

#[derive(Debug, Clone, PartialEq)]
pub struct SvgOptions {
    /// Pixels per lattice unit.
    pub scale: f64,
    pub margin: f64,
    /// Draw heaps with labels along the horizontal axis instead of down the side.
    pub transpose_heap: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        Self { scale: 40.0, margin: 10.0, transpose_heap: false }
    }
}

pub trait ToSvg {
    fn to_svg(&self, options: &SvgOptions) -> String;
}

pub fn render_svg<T: ToSvg + ?Sized>(object: &T, options: &SvgOptions) -> String {
    object.to_svg(options)
}

fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

fn open(out: &mut String, width: f64, height: f64) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = num(width),
        h = num(height)
    );
}

fn close(out: &mut String) {
    out.push_str("</svg>\n");
}

impl ToSvg for Heap {
    fn to_svg(&self, options: &SvgOptions) -> String {
        let s = options.scale;
        let m = options.margin;
        let max_col = self.coords.iter().map(|c| c.column).max().unwrap_or(0) as f64;
        let max_row = self.rank.max(2) as f64 - 1.0;
        // Cell centers sit on the lattice; each square has side s / sqrt(2)
        // rotated 45 degrees so diagonal neighbours share a corner.
        let (cols, rows) = if options.transpose_heap { (max_row, max_col) } else { (max_col + 1.0, max_row) };
        let width = cols * s + 2.0 * m + s;
        let height = rows * s + 2.0 * m + s;
        let mut out = String::new();
        open(&mut out, width, height);
        let _ = writeln!(out, r#"<g fill="none" stroke="black" stroke-width="1">"#);
        for (e, c) in self.elements.iter().zip(&self.coords) {
            let (x, y) = if options.transpose_heap {
                (m + s / 2.0 + (c.row - 1) as f64 * s, m + s / 2.0 + (max_col - c.column as f64) * s)
            } else {
                (m + s / 2.0 + c.column as f64 * s, m + s / 2.0 + (c.row - 1) as f64 * s)
            };
            let half = s / 2.0;
            let _ = writeln!(
                out,
                r#"<path d="M {} {} L {} {} L {} {} L {} {} Z"/>"#,
                num(x),
                num(y - half),
                num(x + half),
                num(y),
                num(x),
                num(y + half),
                num(x - half),
                num(y)
            );
            let _ = writeln!(
                out,
                r#"<text x="{}" y="{}" font-size="{}" text-anchor="middle" dominant-baseline="central" stroke="none" fill="black">{}</text>"#,
                num(x),
                num(y),
                num(s * 0.35),
                e.label
            );
        }
        out.push_str("</g>\n");
        close(&mut out);
        out
    }
}

impl ToSvg for WiringDiagram {
    fn to_svg(&self, options: &SvgOptions) -> String {
        let s = options.scale;
        let m = options.margin;
        let length = (self.columns() + 1) as f64 * s;
        let rows = self.wires.max(1) as f64 - 1.0;
        let mut out = String::new();
        open(&mut out, length + 2.0 * m, rows * s + 2.0 * m);
        let _ = writeln!(out, r#"<g stroke="black" stroke-width="2" stroke-linecap="round">"#);
        for i in 0..self.wires {
            let y = m + i as f64 * s;
            let _ =
                writeln!(out, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, num(m), num(y), num(m + length), num(y));
        }
        for r in &self.rungs {
            let x = m + (r.column + 1) as f64 * s;
            let top = m + (r.row as f64 - 1.0) * s;
            let _ = writeln!(out, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, num(x), num(top), num(x), num(top + s));
        }
        out.push_str("</g>\n");
        close(&mut out);
        out
    }
}

impl ToSvg for Tiling {
    fn to_svg(&self, options: &SvgOptions) -> String {
        let s = options.scale;
        let m = options.margin;
        let poly = self.polygon();
        let (min_x, max_x) = poly.iter().fold((f64::MAX, f64::MIN), |(lo, hi), p| (lo.min(p[0]), hi.max(p[0])));
        let (min_y, max_y) = poly.iter().fold((f64::MAX, f64::MIN), |(lo, hi), p| (lo.min(p[1]), hi.max(p[1])));
        // SVG y grows downward.
        let map = |p: Point| -> (String, String) { (num(m + (p[0] - min_x) * s), num(m + (max_y - p[1]) * s)) };
        let path = |pts: &[Point]| -> String {
            let mut d = String::new();
            for (i, &p) in pts.iter().enumerate() {
                let (x, y) = map(p);
                let _ = write!(d, "{}{} {} ", if i == 0 { "M " } else { "L " }, x, y);
            }
            d.push('Z');
            d
        };
        let mut out = String::new();
        open(&mut out, (max_x - min_x) * s + 2.0 * m, (max_y - min_y) * s + 2.0 * m);
        let _ = writeln!(out, r#"<g fill="none" stroke="black" stroke-width="1" stroke-linejoin="round">"#);
        for r in &self.rhombi {
            let _ = writeln!(
                out,
                r#"<path class="rhombus" data-wires="{} {}" d="{}"/>"#,
                r.wires.0,
                r.wires.1,
                path(&r.corners())
            );
        }
        let _ = writeln!(out, r#"<path class="outline" stroke-width="2" d="{}"/>"#, path(&poly));
        out.push_str("</g>\n");
        close(&mut out);
        out
    }
}
