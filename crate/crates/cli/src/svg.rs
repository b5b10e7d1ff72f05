//! Minimal SVG line plots of piecewise linear functions.
//!
//! Coordinates are computed exactly and converted to decimals only when
//! written; corner labels keep the exact rationals.

use std::fmt::Write;

use num_traits::{Signed, Zero};
use pdens_core::rational::{int, to_decimal};
use pdens_core::{format_rational, PiecewiseLinear, Rational};

const WIDTH: i64 = 720;
const HEIGHT: i64 = 400;
const MARGIN: i64 = 56;
const DIGITS: usize = 12;
const PALETTE: &[&str] = &["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"];

pub struct Curve<'a> {
    pub label: String,
    pub f: &'a PiecewiseLinear,
    pub dashed: bool,
}

pub struct Plot<'a> {
    pub title: String,
    pub tmax: Rational,
    pub curves: Vec<Curve<'a>>,
    /// Write the exact `(t, v)` next to every corner.
    pub label_corners: bool,
}

// corners inside [0, tmax] plus the value at tmax
fn visible(f: &PiecewiseLinear, tmax: &Rational) -> Vec<(Rational, Rational)> {
    let mut pts: Vec<(Rational, Rational)> =
        f.corners().iter().filter(|c| c.t <= *tmax).map(|c| (c.t.clone(), c.v.clone())).collect();
    if pts.last().is_none_or(|(t, _)| t < tmax) {
        pts.push((tmax.clone(), f.evaluate(tmax).expect("tmax is positive")));
    }
    pts
}

fn dec(x: &Rational) -> String {
    to_decimal(x, DIGITS)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

impl Plot<'_> {
    pub fn render(&self) -> String {
        let plot_w = int(WIDTH - 2 * MARGIN);
        let plot_h = int(HEIGHT - 2 * MARGIN);
        let ymax = self
            .curves
            .iter()
            .flat_map(|c| visible(c.f, &self.tmax))
            .map(|(_, v)| v)
            .fold(Rational::zero(), |a, b| if b > a { b } else { a });
        let ymax = if ymax.is_positive() { ymax } else { int(1) };
        let x = |t: &Rational| int(MARGIN) + t * &plot_w / &self.tmax;
        let y = |v: &Rational| int(HEIGHT - MARGIN) - v * &plot_h / &ymax;

        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="11">"#
        );
        let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
        let _ = writeln!(out, r#"<text x="{}" y="20" text-anchor="middle" font-size="14">{}</text>"#, WIDTH / 2, escape(&self.title));

        // axes with exact end labels
        let (x0, x1) = (dec(&x(&Rational::zero())), dec(&x(&self.tmax)));
        let (y0, y1) = (dec(&y(&Rational::zero())), dec(&y(&ymax)));
        let _ = writeln!(out, r#"<g stroke="black" stroke-width="1"><line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}"/><line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}"/></g>"#);
        let _ = writeln!(out, r#"<text x="{x0}" y="{}" text-anchor="middle">0</text>"#, HEIGHT - MARGIN + 16);
        let _ = writeln!(out, r#"<text x="{x1}" y="{}" text-anchor="middle">t = {}</text>"#, HEIGHT - MARGIN + 16, format_rational(&self.tmax));
        let _ = writeln!(out, r#"<text x="{}" y="{y1}" text-anchor="end">{}</text>"#, MARGIN - 6, format_rational(&ymax));

        for (n, c) in self.curves.iter().enumerate() {
            let color = PALETTE[n % PALETTE.len()];
            let pts = visible(c.f, &self.tmax);
            let coords: Vec<String> = pts.iter().map(|(t, v)| format!("{},{}", dec(&x(t)), dec(&y(v)))).collect();
            let dash = if c.dashed { r#" stroke-dasharray="4 3""# } else { "" };
            let _ = writeln!(
                out,
                r#"<polyline fill="none" stroke="{color}" stroke-width="{}"{dash} points="{}"><title>{}</title></polyline>"#,
                if c.dashed { 1 } else { 2 },
                coords.join(" "),
                escape(&c.label)
            );
            if !c.dashed {
                let _ = writeln!(out, r#"<text x="{}" y="{}" fill="{color}">{}</text>"#, WIDTH - MARGIN + 4, MARGIN + 14 * n as i64, escape(&c.label));
            }
            if self.label_corners && !c.dashed {
                for corner in c.f.corners().iter().filter(|k| k.t <= self.tmax) {
                    let _ = writeln!(
                        out,
                        r#"<circle cx="{}" cy="{}" r="2.5" fill="{color}"/><text x="{}" y="{}" font-size="9" fill="{color}">({}, {})</text>"#,
                        dec(&x(&corner.t)),
                        dec(&y(&corner.v)),
                        dec(&(x(&corner.t) + int(4))),
                        dec(&(y(&corner.v) - int(4))),
                        format_rational(&corner.t),
                        format_rational(&corner.v)
                    );
                }
            }
        }
        out.push_str("</svg>\n");
        out
    }
}
