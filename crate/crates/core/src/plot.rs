//! Real affine slices of two curves as SVG: marching-squares contours plus
//! labelled markers at the real intersection points.

use std::fmt::Write as _;

use num_traits::ToPrimitive;

use crate::cycle::Cycle;
use crate::error::{Error, Result};
use crate::homog::HPoly;
use crate::mpoly::Var;
use crate::numeric::{unpack, ApproxPoint};

/// Which coordinate is set to 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slice {
    X,
    Y,
    Z,
}

impl Slice {
    /// The fixed variable and the two plotted ones (horizontal, vertical).
    pub fn vars(self) -> (Var, Var, Var) {
        match self {
            Slice::Z => (Var::Z, Var::X, Var::Y),
            Slice::Y => (Var::Y, Var::X, Var::Z),
            Slice::X => (Var::X, Var::Y, Var::Z),
        }
    }
}

impl std::str::FromStr for Slice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace(' ', "").as_str() {
            "z=1" => Ok(Slice::Z),
            "y=1" => Ok(Slice::Y),
            "x=1" => Ok(Slice::X),
            _ => Err(Error::Usage(format!(
                "slice must be z=1, y=1 or x=1, got {s:?}"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlotRange {
    pub umin: f64,
    pub umax: f64,
    pub vmin: f64,
    pub vmax: f64,
}

impl Default for PlotRange {
    fn default() -> Self {
        PlotRange {
            umin: -2.0,
            umax: 2.0,
            vmin: -2.0,
            vmax: 2.0,
        }
    }
}

impl std::str::FromStr for PlotRange {
    type Err = Error;

    /// `umin:umax:vmin:vmax`
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<f64> = s
            .split(':')
            .map(|p| p.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Usage(format!("range must be xmin:xmax:ymin:ymax, got {s:?}")))?;
        match parts[..] {
            [umin, umax, vmin, vmax]
                if umin < umax && vmin < vmax && parts.iter().all(|v| v.is_finite()) =>
            {
                Ok(PlotRange {
                    umin,
                    umax,
                    vmin,
                    vmax,
                })
            }
            _ => Err(Error::Usage(format!(
                "range must be xmin:xmax:ymin:ymax with min < max, got {s:?}"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlotOptions {
    pub slice: Slice,
    pub range: PlotRange,
    pub grid: usize,
}

impl Default for PlotOptions {
    fn default() -> Self {
        PlotOptions {
            slice: Slice::Z,
            range: PlotRange::default(),
            grid: 512,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Marker {
    pub u: f64,
    pub v: f64,
    pub multiplicity: u64,
}

#[derive(Clone, Debug)]
pub struct PlotOutput {
    pub svg: String,
    pub markers: Vec<Marker>,
    pub warnings: Vec<String>,
}

/// Shortest decimal that round-trips the value rounded to 6 significant
/// digits.
pub fn fmt_num(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let rounded: f64 = format!("{v:.5e}").parse().unwrap_or(v);
    format!("{rounded}")
}

type Segment = [(f64, f64); 2];

/// Real-valued evaluator for a polynomial in the two plotted variables.
struct Evaluator {
    terms: Vec<(f64, i32, i32)>,
}

impl Evaluator {
    fn new(a: &HPoly, slice: Slice) -> Self {
        let (_, u, v) = slice.vars();
        let terms = a
            .poly()
            .terms()
            .map(|(m, c)| (c.to_f64().unwrap_or(0.0), m.exp(u) as i32, m.exp(v) as i32))
            .collect();
        Evaluator { terms }
    }

    fn eval(&self, u: f64, v: f64) -> f64 {
        self.terms
            .iter()
            .map(|(c, i, j)| c * u.powi(*i) * v.powi(*j))
            .sum()
    }
}

/// Zero set of `f` on a `grid × grid` lattice by marching squares, with
/// saddle cells resolved by the cell-centre value.
fn marching_squares(f: &Evaluator, r: &PlotRange, grid: usize) -> Vec<Segment> {
    let n = grid.max(2);
    let du = (r.umax - r.umin) / n as f64;
    let dv = (r.vmax - r.vmin) / n as f64;
    let at = |i: usize, j: usize| (r.umin + i as f64 * du, r.vmin + j as f64 * dv);
    let mut vals = vec![0.0; (n + 1) * (n + 1)];
    for j in 0..=n {
        for i in 0..=n {
            let (u, v) = at(i, j);
            vals[j * (n + 1) + i] = f.eval(u, v);
        }
    }
    let val = |i: usize, j: usize| vals[j * (n + 1) + i];
    let lerp = |p: (f64, f64), q: (f64, f64), a: f64, b: f64| {
        let t = if a == b { 0.5 } else { a / (a - b) };
        (p.0 + t * (q.0 - p.0), p.1 + t * (q.1 - p.1))
    };
    let mut segs = Vec::new();
    for j in 0..n {
        for i in 0..n {
            // corners counter-clockwise from bottom-left
            let c = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)];
            let f: Vec<f64> = c.iter().map(|&(a, b)| val(a, b)).collect();
            if f.iter().any(|x| !x.is_finite()) {
                continue;
            }
            let idx = f
                .iter()
                .enumerate()
                .fold(0, |acc, (k, x)| acc | (((*x >= 0.0) as usize) << k));
            if idx == 0 || idx == 15 {
                continue;
            }
            let p: Vec<(f64, f64)> = c.iter().map(|&(a, b)| at(a, b)).collect();
            // edge k joins corner k and corner k+1
            let edge = |k: usize| lerp(p[k], p[(k + 1) % 4], f[k], f[(k + 1) % 4]);
            let crossing: Vec<usize> = (0..4)
                .filter(|&k| (f[k] >= 0.0) != (f[(k + 1) % 4] >= 0.0))
                .collect();
            match crossing.len() {
                2 => segs.push([edge(crossing[0]), edge(crossing[1])]),
                4 => {
                    let centre = f.iter().sum::<f64>() / 4.0;
                    let centre_sign = centre >= 0.0;
                    // join the edges around corners whose sign differs from the centre
                    if (f[0] >= 0.0) == centre_sign {
                        segs.push([edge(0), edge(1)]);
                        segs.push([edge(2), edge(3)]);
                    } else {
                        segs.push([edge(3), edge(0)]);
                        segs.push([edge(1), edge(2)]);
                    }
                }
                _ => {}
            }
        }
    }
    segs
}

/// Real points of the slice, in slice coordinates.
pub fn slice_markers(points: &[ApproxPoint<f64>], slice: Slice, range: &PlotRange) -> Vec<Marker> {
    const IMAG_EPS: f64 = 1e-9;
    let mut out = Vec::new();
    for p in points {
        let coords = [p.x, p.y, num_complex::Complex::new(p.z as f64, 0.0)];
        let (w, u, v) = slice.vars();
        let idx = |var: Var| var as usize;
        let (cw, cu, cv) = (coords[idx(w)], coords[idx(u)], coords[idx(v)]);
        if cw.norm() < IMAG_EPS {
            continue;
        }
        let (su, sv) = (cu / cw, cv / cw);
        if su.im.abs() > IMAG_EPS || sv.im.abs() > IMAG_EPS {
            continue;
        }
        let (mu, mv) = (su.re, sv.re);
        if mu < range.umin || mu > range.umax || mv < range.vmin || mv > range.vmax {
            continue;
        }
        out.push(Marker {
            u: mu,
            v: mv,
            multiplicity: p.multiplicity,
        });
    }
    out
}

const SIZE: f64 = 640.0;
const COLORS: [&str; 2] = ["#1f77b4", "#d62728"];

/// Render both slices and the markers.
pub fn render_svg(a: &HPoly, b: &HPoly, markers: &[Marker], opts: &PlotOptions) -> PlotOutput {
    let r = &opts.range;
    let sx = |u: f64| fmt_num((u - r.umin) / (r.umax - r.umin) * SIZE);
    let sy = |v: f64| fmt_num((r.vmax - v) / (r.vmax - r.vmin) * SIZE);
    let (w, u, v) = opts.slice.vars();
    let mut svg = String::new();
    let mut warnings = Vec::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{s}" height="{s}" viewBox="0 0 {s} {s}">"#,
        s = fmt_num(SIZE)
    );
    let _ = writeln!(
        svg,
        "<title>slice {}=1 ({}, {})</title>",
        w.name(),
        u.name(),
        v.name()
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    if r.umin <= 0.0 && 0.0 <= r.umax {
        let _ = writeln!(
            svg,
            r##"<line x1="{x}" y1="0" x2="{x}" y2="{s}" stroke="#999" stroke-width="1"/>"##,
            x = sx(0.0),
            s = fmt_num(SIZE)
        );
    }
    if r.vmin <= 0.0 && 0.0 <= r.vmax {
        let _ = writeln!(
            svg,
            r##"<line x1="0" y1="{y}" x2="{s}" y2="{y}" stroke="#999" stroke-width="1"/>"##,
            y = sy(0.0),
            s = fmt_num(SIZE)
        );
    }
    let mut visible = false;
    for (curve, color) in [a, b].into_iter().zip(COLORS) {
        let segs = marching_squares(&Evaluator::new(curve, opts.slice), r, opts.grid);
        visible |= !segs.is_empty();
        let mut d = String::new();
        for [p, q] in &segs {
            let _ = write!(d, "M{} {}L{} {}", sx(p.0), sy(p.1), sx(q.0), sy(q.1));
        }
        let _ = writeln!(
            svg,
            r#"<path d="{d}" fill="none" stroke="{color}" stroke-width="1.5"/>"#
        );
    }
    if !visible {
        warnings.push("no part of either curve is visible in the plotted range".into());
    }
    for m in markers {
        let _ = writeln!(
            svg,
            r#"<circle cx="{x}" cy="{y}" r="5" fill="black"/><text x="{tx}" y="{ty}" font-family="sans-serif" font-size="14">{k}</text>"#,
            x = sx(m.u),
            y = sy(m.v),
            tx = fmt_num((m.u - r.umin) / (r.umax - r.umin) * SIZE + 8.0),
            ty = fmt_num((r.vmax - m.v) / (r.vmax - r.vmin) * SIZE - 8.0),
            k = m.multiplicity
        );
    }
    for (i, (curve, color)) in [a, b].into_iter().zip(COLORS).enumerate() {
        let _ = writeln!(
            svg,
            r#"<text x="10" y="{y}" font-family="sans-serif" font-size="14" fill="{color}">{name}: {curve}</text>"#,
            y = 20 + 18 * i,
            name = if i == 0 { "A" } else { "B" }
        );
    }
    svg.push_str("</svg>\n");
    PlotOutput {
        svg,
        markers: markers.to_vec(),
        warnings,
    }
}

/// Slice plot of two curves with markers at the real points of their
/// intersection cycle.
pub fn plot(a: &HPoly, b: &HPoly, cycle: &Cycle, opts: &PlotOptions) -> Result<PlotOutput> {
    let points = unpack(cycle, 15, None)?;
    let markers = slice_markers(&points, opts.slice, &opts.range);
    Ok(render_svg(a, b, &markers, opts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intersect::intersection_cycle;
    use crate::parse::parse_poly;

    fn h(s: &str) -> HPoly {
        HPoly::new(parse_poly(s).unwrap()).unwrap()
    }

    #[test]
    fn number_format() {
        assert_eq!(fmt_num(0.0), "0");
        assert_eq!(fmt_num(320.0), "320");
        assert_eq!(fmt_num(123.456789), "123.457");
        assert_eq!(fmt_num(-0.000123456789), "-0.000123457");
        assert_eq!(fmt_num(1.0 / 3.0), "0.333333");
    }

    #[test]
    fn parse_options() {
        assert_eq!("y=1".parse::<Slice>().unwrap(), Slice::Y);
        assert!("w=1".parse::<Slice>().is_err());
        let r: PlotRange = "-1:1:-3:3".parse().unwrap();
        assert_eq!((r.umin, r.vmax), (-1.0, 3.0));
        assert!("1:0:0:1".parse::<PlotRange>().is_err());
        assert!("1:2:3".parse::<PlotRange>().is_err());
    }

    #[test]
    fn circle_contour_stays_on_circle() {
        let c = h("x^2+y^2-z^2");
        let segs = marching_squares(&Evaluator::new(&c, Slice::Z), &PlotRange::default(), 64);
        assert!(!segs.is_empty());
        for [p, q] in segs {
            for (u, v) in [p, q] {
                assert!(((u * u + v * v).sqrt() - 1.0).abs() < 0.01);
            }
        }
    }

    #[test]
    fn slice_markers_carry_multiplicities() {
        let (a, b) = (h("y^2*z-x^3"), h("y^2*z-x^2*(x+z)"));
        let cycle = intersection_cycle(&a, &b).unwrap();
        let mut opts = PlotOptions {
            grid: 64,
            ..Default::default()
        };
        let out = plot(&a, &b, &cycle, &opts).unwrap();
        assert_eq!(
            out.markers,
            vec![Marker {
                u: 0.0,
                v: 0.0,
                multiplicity: 4
            }]
        );
        assert!(out.svg.contains(">4</text>"));
        opts.slice = Slice::Y;
        let out = plot(&a, &b, &cycle, &opts).unwrap();
        assert_eq!(
            out.markers,
            vec![Marker {
                u: 0.0,
                v: 0.0,
                multiplicity: 5
            }]
        );
        assert!(out.warnings.is_empty());
    }

    #[test]
    fn empty_window_warns() {
        let (a, b) = (h("x^2+y^2+z^2"), h("x^2+2y^2+z^2"));
        let cycle = intersection_cycle(&a, &b).unwrap();
        let out = plot(
            &a,
            &b,
            &cycle,
            &PlotOptions {
                grid: 16,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(out.markers.is_empty());
        assert_eq!(out.warnings.len(), 1);
        assert!(out.svg.ends_with("</svg>\n"));
    }
}
