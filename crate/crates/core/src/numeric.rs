//! Approximate complex points of Galois cycles.
//!
//! Roots come from the Aberth–Ehrlich simultaneous iteration, written once
//! over [`Real`] and run in `f64` (up to 15 digits) or double-double
//! `TwoFloat` (up to 31 digits).

use std::cmp::Ordering;
use std::fmt::Debug;

use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Float, FloatConst, ToPrimitive, Zero};
use twofloat::TwoFloat;

use crate::cycle::{Cycle, GaloisCycle};
use crate::error::{Error, Result};
use crate::factor::squarefree;
use crate::homog::HPoly;
use crate::upoly::UPoly;

/// Default working precision in decimal digits.
pub const DEFAULT_PRECISION: u32 = 30;
/// Largest precision the double-double type can honour.
pub const MAX_PRECISION: u32 = 31;
/// Aberth iterations allowed per polynomial.
pub const ITERATION_CAP: usize = 200;

/// A floating type the root finder can run in.
pub trait Real: Float + FloatConst + Debug + Send + Sync + 'static {
    /// Decimal digits carried.
    const DIGITS: u32;
    /// Relative rounding error of one operation.
    fn unit_roundoff() -> Self;
    fn from_rational(q: &BigRational) -> Self;
}

impl Real for f64 {
    const DIGITS: u32 = 15;

    fn unit_roundoff() -> Self {
        f64::EPSILON / 2.0
    }

    fn from_rational(q: &BigRational) -> Self {
        q.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for TwoFloat {
    const DIGITS: u32 = MAX_PRECISION;

    fn unit_roundoff() -> Self {
        TwoFloat::from(2f64.powi(-104))
    }

    fn from_rational(q: &BigRational) -> Self {
        let hi = q.to_f64().unwrap_or(f64::NAN);
        let Some(exact) = BigRational::from_float(hi) else {
            return TwoFloat::from(hi);
        };
        let lo = (q - exact).to_f64().unwrap_or(0.0);
        TwoFloat::new_add(hi, lo)
    }
}

fn cabs<F: Real>(z: &Complex<F>) -> F {
    z.norm()
}

/// `(p(z), p'(z), Σ|a_i||z|^i)` by Horner's rule.
fn horner<F: Real>(p: &[Complex<F>], z: Complex<F>) -> (Complex<F>, Complex<F>, F) {
    let mut v = Complex::zero();
    let mut d = Complex::zero();
    let mut bound = F::zero();
    let az = cabs(&z);
    for c in p.iter().rev() {
        d = d * z + v;
        v = v * z + *c;
        bound = bound * az + cabs(c);
    }
    (v, d, bound)
}

/// Aberth–Ehrlich iteration for all roots of `p` (coefficients low to
/// high, nonzero leading and constant coefficients). `None` when the
/// iteration cap is reached first.
fn aberth<F: Real>(p: &[Complex<F>], tol: F, cap: usize, rotation: F) -> Option<Vec<Complex<F>>> {
    let n = p.len() - 1;
    if n == 1 {
        return Some(vec![-p[0] / p[1]]);
    }
    let nf = F::from(n).unwrap();
    let radius = (cabs(&p[0]) / cabs(&p[n])).powf(nf.recip());
    let mut z: Vec<Complex<F>> = (0..n)
        .map(|k| {
            let theta = F::TAU() * F::from(k).unwrap() / nf + rotation;
            Complex::from_polar(radius, theta)
        })
        .collect();
    let mut done = vec![false; n];
    let guard = F::from(4 * n).unwrap() * F::unit_roundoff();
    for _ in 0..cap {
        let mut all = true;
        for k in 0..n {
            if done[k] {
                continue;
            }
            let (v, d, bound) = horner(p, z[k]);
            if cabs(&v) <= guard * bound {
                done[k] = true;
                continue;
            }
            let w = v / d;
            let s: Complex<F> = (0..n)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .fold(Complex::zero(), |a, b| a + b);
            let delta = w / (Complex::from(F::one()) - w * s);
            if !delta.re.is_finite() || !delta.im.is_finite() {
                return None;
            }
            z[k] = z[k] - delta;
            if cabs(&delta) <= tol * cabs(&z[k]).max(F::one()) {
                done[k] = true;
            } else {
                all = false;
            }
        }
        if all && done.iter().all(|d| *d) {
            return Some(z);
        }
    }
    None
}

/// Roots of a squarefree polynomial with complex coefficients; exact zero
/// roots are split off first. Real-coefficient inputs get imaginary parts
/// below the tolerance cleared.
fn simple_roots<F: Real>(p: &[Complex<F>], tol: F, cap: usize) -> Result<Vec<Complex<F>>> {
    let start = p.iter().position(|c| !c.is_zero()).unwrap_or(0);
    let mut roots = vec![Complex::zero(); start];
    let q = &p[start..];
    if q.len() > 1 {
        let attempt = aberth(q, tol, cap, F::from(0.4).unwrap())
            .or_else(|| aberth(q, tol, 2 * cap, F::from(1.1).unwrap()))
            .ok_or(Error::NoConvergence {
                degree: q.len() - 1,
            })?;
        roots.extend(attempt);
    }
    if p.iter().all(|c| c.im.is_zero()) {
        for r in roots.iter_mut() {
            if r.im.abs() <= tol * r.norm().max(F::one()) {
                r.im = F::zero();
            }
        }
    }
    Ok(roots)
}

fn to_complex<F: Real>(f: &UPoly<BigRational>) -> Vec<Complex<F>> {
    f.coeffs()
        .iter()
        .map(|c| Complex::from(F::from_rational(c)))
        .collect()
}

fn tolerance<F: Real>(digits: u32) -> F {
    let wanted = F::from(10f64.powi(-(digits as i32))).unwrap();
    wanted.max(F::from(16.0).unwrap() * F::unit_roundoff())
}

/// All complex roots of `f`, repeated by multiplicity.
pub fn complex_roots_with<F: Real>(
    f: &UPoly<BigRational>,
    digits: u32,
    cap: usize,
) -> Result<Vec<Complex<F>>> {
    if f.deg() == 0 {
        return Err(Error::Usage(
            "complex_roots needs a nonconstant polynomial".into(),
        ));
    }
    let tol = tolerance::<F>(digits);
    let mut out = Vec::with_capacity(f.deg());
    for (part, m) in squarefree(f) {
        for r in simple_roots(&to_complex::<F>(&part), tol, cap)? {
            out.extend(std::iter::repeat_n(r, m));
        }
    }
    out.sort_by(|a, b| root_order(a, b));
    Ok(out)
}

/// [`complex_roots_with`] at `precision` digits, returned in `f64`.
pub fn complex_roots(f: &UPoly<BigRational>, precision: u32) -> Result<Vec<Complex<f64>>> {
    with_precision(precision, |digits, cap| {
        if digits <= f64::DIGITS {
            complex_roots_with::<f64>(f, digits, cap)
        } else {
            complex_roots_with::<TwoFloat>(f, digits, cap)
                .map(|v| v.into_iter().map(lower).collect())
        }
    })
}

fn check_precision(precision: u32) -> Result<()> {
    if precision == 0 || precision > MAX_PRECISION {
        return Err(Error::Usage(format!(
            "precision must be between 1 and {MAX_PRECISION} digits"
        )));
    }
    Ok(())
}

/// Run at `precision`; on non-convergence retry once at doubled precision
/// (capped) with a doubled iteration budget.
fn with_precision<T>(precision: u32, run: impl Fn(u32, usize) -> Result<T>) -> Result<T> {
    check_precision(precision)?;
    match run(precision, ITERATION_CAP) {
        Err(Error::NoConvergence { .. }) => {
            run((2 * precision).min(MAX_PRECISION), 2 * ITERATION_CAP)
        }
        other => other,
    }
}

fn lower<F: Real>(z: Complex<F>) -> Complex<f64> {
    Complex::new(
        z.re.to_f64().unwrap_or(f64::NAN),
        z.im.to_f64().unwrap_or(f64::NAN),
    )
}

/// Angle first, then magnitude.
fn root_order<F: Real>(a: &Complex<F>, b: &Complex<F>) -> Ordering {
    a.arg()
        .partial_cmp(&b.arg())
        .unwrap_or(Ordering::Equal)
        .then(a.norm().partial_cmp(&b.norm()).unwrap_or(Ordering::Equal))
}

/// A point `(x, y, z)` with `z ∈ {0, 1}` and last nonzero coordinate 1.
#[derive(Clone, Debug, PartialEq)]
pub struct ApproxPoint<F> {
    pub x: Complex<F>,
    pub y: Complex<F>,
    pub z: u8,
    pub multiplicity: u64,
    /// `|A(P)|`, `|B(P)|` with curve coefficients scaled to unit max norm.
    pub residuals: Option<[F; 2]>,
}

impl<F: Real> ApproxPoint<F> {
    pub fn to_f64(&self) -> ApproxPoint<f64> {
        ApproxPoint {
            x: lower(self.x),
            y: lower(self.y),
            z: self.z,
            multiplicity: self.multiplicity,
            residuals: self
                .residuals
                .map(|r| r.map(|v| v.to_f64().unwrap_or(f64::NAN))),
        }
    }
}

/// `|A(P)|` for `A` scaled so its largest coefficient has magnitude one.
fn residual<F: Real>(a: &HPoly, p: [Complex<F>; 3]) -> F {
    let scale = a
        .poly()
        .coefficients()
        .map(|c| F::from_rational(c).abs())
        .fold(F::zero(), F::max);
    let mut acc = Complex::zero();
    for (m, c) in a.poly().terms() {
        let mut t = Complex::from(F::from_rational(c) / scale);
        for (v, e) in p.iter().zip(m.0) {
            t = t * v.powu(e);
        }
        acc = acc + t;
    }
    acc.norm()
}

/// Points of one Galois cycle in the working type `F`.
pub fn galois_points<F: Real>(
    gc: &GaloisCycle,
    digits: u32,
    cap: usize,
) -> Result<Vec<[Complex<F>; 3]>> {
    let one = Complex::from(F::one());
    let zero = Complex::zero();
    let tol = tolerance::<F>(digits);
    Ok(match gc {
        GaloisCycle::PInf => vec![[one, zero, zero]],
        GaloisCycle::C0 { f } => simple_roots(&to_complex::<F>(f), tol, cap)?
            .into_iter()
            .map(|a| [a, one, zero])
            .collect(),
        GaloisCycle::C1 { h, g } => {
            let mut betas = simple_roots(&to_complex::<F>(g), tol, cap)?;
            betas.sort_by(root_order);
            let mut out = Vec::new();
            for beta in betas {
                let hb: Vec<Complex<F>> = h
                    .coeffs()
                    .iter()
                    .map(|c| {
                        c.coeffs().iter().rev().fold(Complex::zero(), |acc, a| {
                            acc * beta + Complex::from(F::from_rational(a))
                        })
                    })
                    .collect();
                let mut gammas = simple_roots(&hb, tol, cap)?;
                gammas.sort_by(root_order);
                out.extend(gammas.into_iter().map(|x| [x, beta, one]));
            }
            out
        }
    })
}

/// Unpack a positive cycle into points in the working type `F`, in cycle
/// order and, within a cycle, by root angle and magnitude.
pub fn unpack_with<F: Real>(
    cycle: &Cycle,
    digits: u32,
    cap: usize,
    curves: Option<(&HPoly, &HPoly)>,
) -> Result<Vec<ApproxPoint<F>>> {
    if !cycle.all_positive() {
        return Err(Error::Usage(
            "cannot unpack a cycle with negative coefficients".into(),
        ));
    }
    let mut out = Vec::new();
    for (gc, k) in cycle.iter() {
        let mut pts = galois_points::<F>(gc, digits, cap)?;
        if matches!(gc, GaloisCycle::C0 { .. }) {
            pts.sort_by(|a, b| root_order(&a[0], &b[0]));
        }
        for p in pts {
            out.push(ApproxPoint {
                x: p[0],
                y: p[1],
                z: if p[2].is_zero() { 0 } else { 1 },
                multiplicity: k as u64,
                residuals: curves.map(|(a, b)| [residual(a, p), residual(b, p)]),
            });
        }
    }
    Ok(out)
}

/// [`unpack_with`] at `precision` decimal digits, reported in `f64`.
pub fn unpack(
    cycle: &Cycle,
    precision: u32,
    curves: Option<(&HPoly, &HPoly)>,
) -> Result<Vec<ApproxPoint<f64>>> {
    with_precision(precision, |digits, cap| {
        if digits <= f64::DIGITS {
            unpack_with::<f64>(cycle, digits, cap, curves)
        } else {
            unpack_with::<TwoFloat>(cycle, digits, cap, curves)
                .map(|v| v.iter().map(ApproxPoint::to_f64).collect())
        }
    })
}
