//! Text and JSON renderings of an intersection result.

use bezout_core::verify::{resultant_oracle, Shear, Verdict};
use bezout_core::{bezout_check, on_curve, ApproxPoint, Cycle, Error, GaloisCycle, HPoly};
use num_complex::Complex;
use serde::Serialize;

#[derive(Serialize)]
pub struct CycleEntry {
    #[serde(rename = "type")]
    kind: &'static str,
    mult: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    f: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    g: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    h: Option<String>,
    size: u64,
}

#[derive(Serialize)]
pub struct PointEntry {
    x: [f64; 2],
    y: [f64; 2],
    z: u8,
    mult: u64,
}

#[derive(Serialize)]
pub struct Checks {
    pub bezout: bool,
    pub membership: bool,
    pub oracle: String,
    pub shear: Shear,
}

impl Checks {
    pub fn all_passed(&self) -> bool {
        self.bezout && self.membership && self.oracle == "pass"
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Document<'a> {
    deg_a: u32,
    deg_b: u32,
    bezout: u64,
    cycles: Vec<CycleEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    points: Option<Vec<PointEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verify: Option<&'a Checks>,
}

fn entry(gc: &GaloisCycle, mult: i64) -> CycleEntry {
    let (kind, f, g, h) = match gc {
        GaloisCycle::PInf => ("Pinf", None, None, None),
        GaloisCycle::C0 { f } => ("C0", Some(f.to_string_var("x")), None, None),
        GaloisCycle::C1 { h, g } => (
            "C1",
            None,
            Some(g.to_string_var("y")),
            Some(GaloisCycle::h_text(h)),
        ),
    };
    CycleEntry {
        kind,
        mult,
        f,
        g,
        h,
        size: gc.size(),
    }
}

fn pair(z: Complex<f64>) -> [f64; 2] {
    [z.re, z.im]
}

impl<'a> Document<'a> {
    pub fn new(
        a: &HPoly,
        b: &HPoly,
        cycle: &Cycle,
        points: Option<&[ApproxPoint<f64>]>,
        checks: Option<&'a Checks>,
    ) -> Self {
        Document {
            deg_a: a.degree(),
            deg_b: b.degree(),
            bezout: a.degree() as u64 * b.degree() as u64,
            cycles: cycle.iter().map(|(gc, k)| entry(gc, k)).collect(),
            points: points.map(|ps| {
                ps.iter()
                    .map(|p| PointEntry {
                        x: pair(p.x),
                        y: pair(p.y),
                        z: p.z,
                        mult: p.multiplicity,
                    })
                    .collect()
            }),
            verify: checks,
        }
    }
}

pub fn run_checks(a: &HPoly, b: &HPoly, cycle: &Cycle, seed: u64) -> Result<Checks, Error> {
    let bezout = bezout_check(cycle, a.degree(), b.degree());
    let membership = cycle
        .iter()
        .all(|(gc, _)| on_curve(a, gc) && on_curve(b, gc));
    let (oracle, shear) = if a.is_constant() || b.is_constant() {
        (
            "skipped (empty curve)".to_string(),
            bezout_core::verify::IDENTITY,
        )
    } else {
        let r = resultant_oracle(a, b, seed)?;
        let v = match r.verdict {
            Verdict::Pass => "pass".to_string(),
            Verdict::Fail(m) => format!("fail: {m}"),
            Verdict::Inconclusive(m) => format!("inconclusive: {m}"),
        };
        (v, r.shear)
    };
    Ok(Checks {
        bezout,
        membership,
        oracle,
        shear,
    })
}

/// Twelve significant digits, shortest round trip; scientific notation
/// outside `[1e-4, 1e15)`.
fn fmt_real(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let r: f64 = format!("{v:.11e}").parse().unwrap_or(v);
    if (1e-4..1e15).contains(&r.abs()) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

/// Components below `1e-12·|z|` are shown as zero.
fn fmt_complex(z: Complex<f64>) -> String {
    let cut = 1e-12 * z.norm();
    let (re, im) = (
        if z.re.abs() < cut { 0.0 } else { z.re },
        if z.im.abs() < cut { 0.0 } else { z.im },
    );
    match (re == 0.0, im == 0.0) {
        (_, true) => fmt_real(re),
        (true, false) => format!("{}i", fmt_real(im)),
        (false, false) => {
            let sign = if im < 0.0 { '-' } else { '+' };
            format!("{}{sign}{}i", fmt_real(re), fmt_real(im.abs()))
        }
    }
}

fn paint(s: &str, ok: bool, color: bool) -> String {
    if !color {
        return s.to_string();
    }
    let code = if ok { 32 } else { 31 };
    format!("\x1b[{code}m{s}\x1b[0m")
}

pub fn text(
    doc: &Document<'_>,
    cycle: &Cycle,
    points: Option<&[ApproxPoint<f64>]>,
    checks: Option<&Checks>,
    precision: u32,
    color: bool,
) -> String {
    let mut out = format!("{cycle}\n");
    let size = cycle.size().unwrap_or(0);
    let ok = size == doc.bezout;
    out += &format!(
        "# Bezout: {size} = {}*{} {}\n",
        doc.deg_a,
        doc.deg_b,
        paint(if ok { "OK" } else { "FAIL" }, ok, color)
    );
    if let Some(c) = checks {
        let flag = |b: bool| paint(if b { "OK" } else { "FAIL" }, b, color);
        out += &format!("# verify: bezout {}\n", flag(c.bezout));
        out += &format!(
            "# verify: membership {} ({} cycle{})\n",
            flag(c.membership),
            cycle.len(),
            if cycle.len() == 1 { "" } else { "s" }
        );
        let frame = if c.shear == bezout_core::verify::IDENTITY {
            "identity frame".to_string()
        } else {
            format!("shear {:?}", c.shear)
        };
        out += &format!(
            "# verify: resultant oracle {} ({frame})\n",
            paint(&c.oracle, c.oracle == "pass", color)
        );
    }
    if let Some(ps) = points {
        out += &format!("# points (precision {precision}):\n");
        for p in ps {
            out += &format!(
                "({}, {}, {})  mult {}",
                fmt_complex(p.x),
                fmt_complex(p.y),
                p.z,
                p.multiplicity
            );
            if let Some([ra, rb]) = p.residuals {
                out += &format!("  |A|={ra:.1e} |B|={rb:.1e}");
            }
            out += "\n";
        }
    }
    out
}
