//! Independent checks on computed intersection cycles: the Bézout count,
//! exact membership of every Galois cycle on both curves, a resultant
//! projection oracle, and a seeded property harness.
//!
//! The oracle relies on a classical fact (Fulton, *Algebraic Curves*, chapter 5):
//! when (1,0,0) does not lie on both curves, `Res_x(A, B)` factors into
//! linear forms `y − βz`, and the multiplicity of each equals the sum of the
//! intersection multiplicities at the points on that line through (1,0,0).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cycle::{Cycle, GaloisCycle};
use crate::error::{Error, Result};
use crate::factor::{factor_homog_bivariate, Factorization};
use crate::homog::{gcd_homogeneous, resultant_x, substitute_line, HPoly};
use crate::intersect::{
    intersection_cycle, intersection_cycle_with, line_point, DivisionStrategy, Line,
};
use crate::mpoly::{MPoly, Monomial, Var};
use crate::upoly::UPoly;

type QPoly = UPoly<BigRational>;

/// True when the cycle is positive with total size `m·n`.
pub fn bezout_check(c: &Cycle, m: u32, n: u32) -> bool {
    c.all_positive() && c.size().is_ok_and(|s| s == m as u64 * n as u64)
}

/// Exact test that every point of `gc` lies on the curve `a`.
pub fn on_curve(a: &HPoly, gc: &GaloisCycle) -> bool {
    let zero = BigRational::zero();
    let one = BigRational::one();
    match gc {
        GaloisCycle::PInf => a.poly().eval([&one, &zero, &zero]).is_zero(),
        GaloisCycle::C0 { f } => {
            let at_inf = a.poly().specialize(Var::Z, &zero).specialize(Var::Y, &one);
            at_inf.to_univariate(Var::X).rem(f).is_zero()
        }
        GaloisCycle::C1 { .. } => {
            let (field, h) = gc.h_over_field().expect("C1 carries h");
            match substitute_line(a, &field.generator()) {
                Ok((_, c)) => c.rem(&h).is_zero(),
                // the curve contains every line y = βz, hence every point
                Err(_) => true,
            }
        }
    }
}

pub type Shear = [[i64; 3]; 3];

pub const IDENTITY: Shear = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];

fn det(m: &Shear) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// `A(M·(x, y, z))`.
pub fn apply_shear(a: &HPoly, m: &Shear) -> HPoly {
    let row = |r: &[i64; 3]| {
        let mut p = MPoly::zero();
        for (k, c) in r.iter().enumerate() {
            let mut e = [0u32; 3];
            e[k] = 1;
            p.add_term(
                Monomial::new(e[0], e[1], e[2]),
                BigRational::from_integer(BigInt::from(*c)),
            );
        }
        p
    };
    let images = [row(&m[0]), row(&m[1]), row(&m[2])];
    HPoly::new(a.poly().substitute([&images[0], &images[1], &images[2]]))
        .expect("invertible substitution")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(String),
    Inconclusive(String),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        *self == Verdict::Pass
    }
}

#[derive(Clone, Debug)]
pub struct OracleReport {
    pub sheared: bool,
    pub shear: Shear,
    /// `Res_x = z^e · (homogenized factorization of Res_x(y, 1))`.
    pub resultant: Option<(u32, Factorization<BigRational>)>,
    /// Multiplicities of the lines through (1,0,0) predicted by the cycle;
    /// `None` stands for the line z = 0.
    pub projection: Vec<(Option<QPoly>, usize)>,
    pub verdict: Verdict,
}

const SHEAR_ATTEMPTS: usize = 32;

fn random_shear(rng: &mut ChaCha8Rng) -> Shear {
    loop {
        let mut m = [[0i64; 3]; 3];
        for row in m.iter_mut() {
            for v in row.iter_mut() {
                *v = rng.gen_range(-5..=5);
            }
        }
        if det(&m) != 0 {
            return m;
        }
    }
}

/// Compare the factored resultant of a sheared pair with the projection of
/// the cycle computed for that pair.
pub fn resultant_oracle(a: &HPoly, b: &HPoly, seed: u64) -> Result<OracleReport> {
    if a.is_constant() || b.is_constant() {
        return Err(Error::Usage("oracle needs nonconstant curves".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let zero = BigRational::zero();
    let one = BigRational::one();
    let at_p = |p: &HPoly| !p.poly().eval([&one, &zero, &zero]).is_zero();
    let mut frame = None;
    for attempt in 0..SHEAR_ATTEMPTS {
        let m = if attempt == 0 {
            IDENTITY
        } else {
            random_shear(&mut rng)
        };
        let (sa, sb) = (apply_shear(a, &m), apply_shear(b, &m));
        if at_p(&sa) || at_p(&sb) {
            frame = Some((m, sa, sb));
            break;
        }
    }
    let Some((shear, sa, sb)) = frame else {
        return Ok(OracleReport {
            sheared: false,
            shear: IDENTITY,
            resultant: None,
            projection: Vec::new(),
            verdict: Verdict::Inconclusive("no admissible coordinate change found".into()),
        });
    };
    let cycle = intersection_cycle(&sa, &sb)?;

    let mut lines: BTreeMap<Vec<BigRational>, (Option<QPoly>, usize)> = BTreeMap::new();
    let mut at_infinity = 0usize;
    let mut stray = None;
    for (gc, k) in cycle.iter() {
        match gc {
            GaloisCycle::PInf => stray = Some(format!("{k}*(1,0,0) after coordinate change")),
            GaloisCycle::C0 { f } => at_infinity += k as usize * f.deg(),
            GaloisCycle::C1 { h, g } => {
                let e = lines
                    .entry(g.coeffs().to_vec())
                    .or_insert((Some(g.clone()), 0));
                e.1 += k as usize * h.deg();
            }
        }
    }
    let mut projection: Vec<(Option<QPoly>, usize)> = lines.into_values().collect();
    if at_infinity > 0 {
        projection.insert(0, (None, at_infinity));
    }

    let res = resultant_x(&sa, &sb);
    if res.is_zero() {
        return Err(Error::CommonComponent(gcd_homogeneous(a, b).into_poly()));
    }
    let res = HPoly::new(res).map_err(|_| Error::Internal("resultant is not a form".into()))?;
    let (ez, fac) = factor_homog_bivariate(&res, Var::Y, Var::Z)?;

    let mut expected: Vec<(Option<QPoly>, usize)> = Vec::new();
    if ez > 0 {
        expected.push((None, ez as usize));
    }
    let mut finite: Vec<(Option<QPoly>, usize)> = fac
        .factors
        .iter()
        .map(|(g, m)| (Some(g.clone()), *m))
        .collect();
    finite.sort_by(|x, y| {
        x.0.as_ref()
            .map(|p| p.coeffs().to_vec())
            .cmp(&y.0.as_ref().map(|p| p.coeffs().to_vec()))
    });
    expected.extend(finite);

    let verdict = if let Some(s) = stray {
        Verdict::Fail(s)
    } else if res.degree() != a.degree() * b.degree() {
        Verdict::Fail(format!(
            "resultant degree {} is not {}",
            res.degree(),
            a.degree() * b.degree()
        ))
    } else if expected != projection {
        let show = |v: &[(Option<QPoly>, usize)]| {
            v.iter()
                .map(|(g, m)| match g {
                    None => format!("z^{m}"),
                    Some(g) => format!("({})^{m}", g.to_string_var("y")),
                })
                .collect::<Vec<_>>()
                .join(" ")
        };
        Verdict::Fail(format!(
            "resultant {} but cycle projects to {}",
            show(&expected),
            show(&projection)
        ))
    } else {
        Verdict::Pass
    };
    Ok(OracleReport {
        sheared: shear != IDENTITY,
        shear,
        resultant: Some((ez, fac)),
        projection,
        verdict,
    })
}

// ---------------------------------------------------------------------------
// random inputs

/// A random form of the given degree with integer coefficients in
/// `[-bound, bound]`, each monomial present with probability 1/2.
pub fn random_form(rng: &mut impl Rng, degree: u32, bound: i64) -> HPoly {
    loop {
        let mut p = MPoly::zero();
        for i in 0..=degree {
            for j in 0..=degree - i {
                if rng.gen_bool(0.5) {
                    let c = rng.gen_range(-bound..=bound);
                    p.add_term(
                        Monomial::new(i, j, degree - i - j),
                        BigRational::from_integer(BigInt::from(c)),
                    );
                }
            }
        }
        if !p.is_zero() {
            return HPoly::new(p).expect("built from one degree");
        }
    }
}

/// A random pair of coprime forms with degrees in `1..=max_degree`.
pub fn random_coprime_pair(rng: &mut impl Rng, max_degree: u32) -> (HPoly, HPoly) {
    loop {
        let da = rng.gen_range(1..=max_degree);
        let db = rng.gen_range(1..=max_degree);
        let a = random_form(rng, da, 5);
        let b = random_form(rng, db, 5);
        if gcd_homogeneous(&a, &b).is_constant() {
            return (a, b);
        }
    }
}

fn random_rational(rng: &mut impl Rng) -> BigRational {
    loop {
        let n: i64 = rng.gen_range(-9..=9);
        let d: i64 = rng.gen_range(1..=9);
        if n != 0 {
            return BigRational::new(BigInt::from(n), BigInt::from(d));
        }
    }
}

/// A random line `a·x + b·y + c·z` with small rational coefficients, some
/// of them zero.
pub fn random_line(rng: &mut impl Rng) -> Line {
    loop {
        let mut c = || {
            if rng.gen_bool(0.25) {
                BigRational::zero()
            } else {
                random_rational(rng)
            }
        };
        if let Ok(l) = Line::new(c(), c(), c()) {
            return l;
        }
    }
}

// ---------------------------------------------------------------------------
// property harness

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub passed: usize,
    pub total: usize,
    pub first_failure: Option<String>,
}

impl CheckReport {
    fn new(name: &str) -> Self {
        CheckReport {
            name: name.into(),
            ..Default::default()
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else if self.first_failure.is_none() {
            self.first_failure = Some(describe());
        }
    }

    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HarnessReport {
    pub checks: Vec<CheckReport>,
}

impl HarnessReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckReport::all_passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for HarnessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{:<12} {}/{}", c.name, c.passed, c.total)?;
            if let Some(e) = &c.first_failure {
                write!(f, "  first failure: {e}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn outcome(r: &Result<Cycle>) -> String {
    match r {
        Ok(c) => c.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

fn same(x: &Result<Cycle>, y: &Result<Cycle>) -> bool {
    matches!((x, y), (Ok(a), Ok(b)) if a == b)
}

/// Run the cycle-level properties on seeded random inputs: symmetry,
/// additivity, shift invariance, scalar invariance, strategy independence,
/// the Bézout count, membership, and multiplicity one for distinct lines.
pub fn property_harness(trials: usize, max_degree: u32, seed: u64) -> HarnessReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_degree = max_degree.max(1);
    let mut symmetry = CheckReport::new("symmetry");
    let mut additivity = CheckReport::new("additivity");
    let mut shift = CheckReport::new("shift");
    let mut scalar = CheckReport::new("scalar");
    let mut strategy = CheckReport::new("strategy");
    let mut bezout = CheckReport::new("bezout");
    let mut membership = CheckReport::new("membership");
    let mut lines = CheckReport::new("lines");

    for _ in 0..trials {
        let (a, b) = random_coprime_pair(&mut rng, max_degree);
        let ab = intersection_cycle(&a, &b);
        let ba = intersection_cycle(&b, &a);
        symmetry.record(same(&ab, &ba), || {
            format!("A = {a}, B = {b}: {} vs {}", outcome(&ab), outcome(&ba))
        });
        bezout.record(
            ab.as_ref()
                .is_ok_and(|c| bezout_check(c, a.degree(), b.degree())),
            || format!("A = {a}, B = {b}: {}", outcome(&ab)),
        );
        membership.record(
            ab.as_ref()
                .is_ok_and(|c| c.iter().all(|(gc, _)| on_curve(&a, gc) && on_curve(&b, gc))),
            || format!("A = {a}, B = {b}: {}", outcome(&ab)),
        );
        let pseudo = intersection_cycle_with(&a, &b, DivisionStrategy::PseudoDivision);
        strategy.record(same(&ab, &pseudo), || {
            format!("A = {a}, B = {b}: {} vs {}", outcome(&ab), outcome(&pseudo))
        });

        let (l, m) = (random_rational(&mut rng), random_rational(&mut rng));
        let scaled = intersection_cycle(&a.scale(&l), &b.scale(&m));
        scalar.record(same(&ab, &scaled), || {
            format!("A = {a}, B = {b}, λ = {l}, μ = {m}")
        });

        // A·(BC) = A·B + A·C
        let c = loop {
            let d = rng.gen_range(1..=max_degree);
            let c = random_form(&mut rng, d, 5);
            if gcd_homogeneous(&a, &c).is_constant() {
                break c;
            }
        };
        let lhs = intersection_cycle(&a, &b.mul(&c));
        let ac = intersection_cycle(&a, &c);
        let rhs = match (&ab, &ac) {
            (Ok(x), Ok(y)) => Ok(x.add(y)),
            (Err(e), _) | (_, Err(e)) => Err(e.clone()),
        };
        additivity.record(same(&lhs, &rhs), || format!("A = {a}, B = {b}, C = {c}"));

        // A·(B + A·C) = A·B with ∂C = ∂B − ∂A
        let (small, big) = if a.degree() <= b.degree() {
            (&a, &b)
        } else {
            (&b, &a)
        };
        let base = if a.degree() <= b.degree() {
            ab.clone()
        } else {
            ba.clone()
        };
        let c = random_form(&mut rng, big.degree() - small.degree(), 3);
        let moved = HPoly::new(big.poly().clone() + small.poly() * c.poly());
        let lhs = match moved {
            Ok(m) => intersection_cycle(small, &m),
            Err(e) => Err(e),
        };
        shift.record(same(&lhs, &base), || {
            format!(
                "A = {small}, B = {big}, C = {c}: {} vs {}",
                outcome(&lhs),
                outcome(&base)
            )
        });

        let (l1, l2) = (random_line(&mut rng), random_line(&mut rng));
        let ok = match line_point(&l1, &l2) {
            Ok(p) => {
                let on = |l: &Line| {
                    let [x, y, z] = &p.coords;
                    (&l.a[0] * x + &l.a[1] * y + &l.a[2] * z).is_zero()
                };
                on(&l1)
                    && on(&l2)
                    && intersection_cycle(&l1.to_hpoly(), &l2.to_hpoly())
                        .is_ok_and(|c| c == Cycle::single(p.to_cycle(), 1))
            }
            // proportional lines are not a counterexample
            Err(Error::CommonComponent(_)) => true,
            Err(_) => false,
        };
        lines.record(ok, || {
            format!("L1 = {}, L2 = {}", l1.to_hpoly(), l2.to_hpoly())
        });
    }
    HarnessReport {
        checks: vec![
            symmetry, additivity, shift, scalar, strategy, bezout, membership, lines,
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn h(s: &str) -> HPoly {
        HPoly::new(parse_poly(s).unwrap()).unwrap()
    }

    fn c1(hs: &str, g: &[i64]) -> GaloisCycle {
        GaloisCycle::canonical_c1_xy(&parse_poly(hs).unwrap(), &UPoly::from_ints(g)).unwrap()
    }

    #[test]
    fn membership() {
        let a = h("y^2*z-x^3");
        assert!(on_curve(&a, &c1("x", &[0, 1])));
        assert!(on_curve(
            &a,
            &GaloisCycle::c0(&UPoly::from_ints(&[0, 1])).unwrap()
        ));
        assert!(!on_curve(
            &a,
            &GaloisCycle::c0(&UPoly::from_ints(&[-1, 1])).unwrap()
        ));
        assert!(!on_curve(&a, &GaloisCycle::PInf));
        assert!(on_curve(&h("y*z"), &c1("x^2+1", &[0, 1])));
    }

    #[test]
    fn oracle_examples() {
        let r = resultant_oracle(&h("y^2*z-x^3"), &h("y^2*z-x^2*(x+z)"), 1).unwrap();
        assert!(!r.sheared);
        assert_eq!(r.verdict, Verdict::Pass);
        let (ez, fac) = r.resultant.unwrap();
        assert_eq!(ez, 5);
        assert_eq!(fac.factors, vec![(UPoly::from_ints(&[0, 1]), 4)]);

        let r = resultant_oracle(&h("x"), &h("y"), 1).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn harness_small() {
        let r = property_harness(0, 3, 7);
        assert!(r.all_passed());
        let r = property_harness(5, 2, 7);
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn shear_determinant() {
        assert_eq!(det(&IDENTITY), 1);
        assert_eq!(det(&[[1, 2, 3], [4, 5, 6], [7, 8, 9]]), 0);
    }
}
