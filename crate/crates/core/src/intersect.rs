//! The intersection cycle of two plane curves by Euclidean reduction.
//!
//! Each step divides in x over ℚ(y,z), `H'·A = Q·B' + R'`, which turns the
//! cycle identity into `A·B = R'·B' − H'·B' + A·G` with a smaller minimum
//! x-degree. Operands free of x meet the other curve along lines through
//! (1,0,0) and are handled by factoring over number fields.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cycle::{Cycle, GaloisCycle};
use crate::error::{Error, Result};
use crate::factor::{factor_homog_bivariate, factor_nf};
use crate::homog::{
    clear_denominators, ff_divide, gcd_homogeneous, homogenize, pseudo_divide, substitute_line,
    x_content, HPoly,
};
use crate::mpoly::{MPoly, Monomial, Var};
use crate::numfield::NumberField;
use crate::upoly::UPoly;

/// The line `a[0]·x + a[1]·y + a[2]·z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub a: [BigRational; 3],
}

impl Line {
    pub fn new(a1: BigRational, a2: BigRational, a3: BigRational) -> Result<Self> {
        if a1.is_zero() && a2.is_zero() && a3.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Line { a: [a1, a2, a3] })
    }

    pub fn to_hpoly(&self) -> HPoly {
        let mut p = MPoly::zero();
        p.add_term(Monomial::new(1, 0, 0), self.a[0].clone());
        p.add_term(Monomial::new(0, 1, 0), self.a[1].clone());
        p.add_term(Monomial::new(0, 0, 1), self.a[2].clone());
        HPoly::new(p).expect("a nonzero line is a form of degree one")
    }
}

/// A rational point whose last nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoint {
    pub coords: [BigRational; 3],
}

impl RatPoint {
    pub fn normalized(c: [BigRational; 3]) -> Option<Self> {
        let last = c.iter().rev().find(|v| !v.is_zero())?.clone();
        Some(RatPoint {
            coords: c.map(|v| v / &last),
        })
    }

    /// The degree-one Galois cycle naming this point.
    pub fn to_cycle(&self) -> GaloisCycle {
        let [x, y, z] = &self.coords;
        if z.is_one() {
            let h = MPoly::x() - MPoly::constant(x.clone());
            let g = UPoly::new(vec![-y.clone(), BigRational::one()]);
            GaloisCycle::canonical_c1_xy(&h, &g).expect("linear data is irreducible")
        } else if y.is_one() {
            GaloisCycle::c0_unchecked(&UPoly::new(vec![-x.clone(), BigRational::one()]))
        } else {
            GaloisCycle::PInf
        }
    }
}

/// The intersection point of two distinct lines, from the cross product of
/// their coefficient vectors.
pub fn line_point(l1: &Line, l2: &Line) -> Result<RatPoint> {
    let [a1, a2, a3] = &l1.a;
    let [b1, b2, b3] = &l2.a;
    let p = [a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1];
    RatPoint::normalized(p)
        .ok_or_else(|| Error::CommonComponent(l1.to_hpoly().normalize().into_poly()))
}

/// How the division step clears denominators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DivisionStrategy {
    /// `H` is the lcm of the reduced denominators over ℚ(y,z).
    #[default]
    FractionField,
    /// `H` is a power of the leading x-coefficient of the divisor.
    PseudoDivision,
}

/// `hp·A = q·bp + rp`, `B = bp·g`, with `hp`, `g` free of x,
/// `deg_x rp < deg_x bp` and `rp`, `hp` both coprime to `bp`.
#[derive(Clone, Debug, PartialEq)]
pub struct EuclidStep {
    pub hp: HPoly,
    pub q: HPoly,
    pub bp: HPoly,
    pub rp: HPoly,
    pub g: HPoly,
}

pub fn euclid_step(a: &HPoly, b: &HPoly, strategy: DivisionStrategy) -> Result<EuclidStep> {
    let (h, q, r) = match strategy {
        DivisionStrategy::FractionField => clear_denominators(&ff_divide(a, b)?),
        DivisionStrategy::PseudoDivision => pseudo_divide(a, b)?,
    };
    let common = || Error::CommonComponent(gcd_homogeneous(a, b).into_poly());
    if r.is_zero() {
        return Err(common());
    }
    let q = HPoly::new(q).map_err(|_| Error::Internal("quotient is not homogeneous".into()))?;
    let r = HPoly::new(r).map_err(|_| Error::Internal("remainder is not homogeneous".into()))?;
    let g = gcd_homogeneous(b, &r);
    if g.deg_x() > 0 {
        return Err(common());
    }
    let bp = b
        .checked_div(&g)
        .ok_or_else(|| Error::Internal("gcd does not divide B".into()))?;
    let rp = r
        .checked_div(&g)
        .ok_or_else(|| Error::Internal("gcd does not divide R".into()))?;
    let hp = h.checked_div(&g).ok_or_else(common)?;
    if !gcd_homogeneous(&bp, &hp).is_constant() {
        return Err(Error::Internal(format!(
            "H' = {hp} shares a factor with B' = {bp}"
        )));
    }
    debug_assert!(
        (hp.poly() * a.poly()) == (q.poly() * bp.poly()) + rp.poly().clone(),
        "division identity"
    );
    Ok(EuclidStep { hp, q, bp, rp, g })
}

/// `C·D` for a form `D` free of x: lines through (1,0,0).
pub fn intersect_1var(c: &HPoly, d: &HPoly) -> Result<Cycle> {
    if d.involves(Var::X) {
        return Err(Error::Usage(format!("{d} involves x")));
    }
    let mut out = Cycle::new();
    if d.is_constant() || c.is_constant() {
        return Ok(out);
    }
    let (ez, fac) = factor_homog_bivariate(d, Var::Y, Var::Z)?;
    if ez > 0 {
        out.add_assign(&meet_line_at_infinity(c)?.scale(ez as i64));
    }
    for (g, m) in &fac.factors {
        let field = NumberField::new_unchecked(g.clone());
        let (e0, cx) =
            substitute_line(c, &field.generator()).map_err(|_| common_with_line(c, g))?;
        let mut part = Cycle::new();
        part.insert(GaloisCycle::PInf, e0 as i64 * g.deg() as i64);
        if cx.deg() > 0 {
            for (h, k) in factor_nf(&cx, &field).factors {
                part.insert(GaloisCycle::c1_unchecked(&h, field.modulus()), k as i64);
            }
        }
        out.add_assign(&part.scale(*m as i64));
    }
    Ok(out)
}

fn common_with_line(c: &HPoly, g: &UPoly<BigRational>) -> Error {
    let line =
        HPoly::new(MPoly::from_univariate(g, Var::Y).homogenize_with(Var::Z, g.deg() as u32))
            .expect("nonzero form");
    Error::CommonComponent(gcd_homogeneous(c, &line).into_poly())
}

/// `C·z`: the points of `C` on the line at infinity.
fn meet_line_at_infinity(c: &HPoly) -> Result<Cycle> {
    let at_inf = c.poly().specialize(Var::Z, &BigRational::zero());
    if at_inf.is_zero() {
        return Err(Error::CommonComponent(MPoly::z()));
    }
    let form = HPoly::new(at_inf).expect("restriction of a form");
    let (ey, fac) = factor_homog_bivariate(&form, Var::X, Var::Y)?;
    let mut out = Cycle::single(GaloisCycle::PInf, ey as i64);
    for (f, k) in fac.factors {
        out.insert(GaloisCycle::c0_unchecked(&f), k as i64);
    }
    Ok(out)
}

/// `A·B` for coprime nonconstant forms, by the recursive cycle identity.
pub fn reduce(a: &HPoly, b: &HPoly, strategy: DivisionStrategy) -> Result<Cycle> {
    let mut out = Cycle::new();
    let (ca, a) = x_content(a);
    let (cb, b) = x_content(b);
    if !ca.is_constant() {
        out.add_assign(&intersect_1var(&b, &ca)?);
        if !cb.is_constant() {
            out.add_assign(&intersect_1var(&ca, &cb)?);
        }
    }
    if !cb.is_constant() {
        out.add_assign(&intersect_1var(&a, &cb)?);
    }
    if a.is_constant() || b.is_constant() {
        return Ok(out);
    }
    let (a, b) = if a.deg_x() >= b.deg_x() {
        (a, b)
    } else {
        (b, a)
    };
    let step = euclid_step(&a, &b, strategy)?;
    out.add_assign(&reduce(&step.rp, &step.bp, strategy)?);
    out.add_assign(&intersect_1var(&step.bp, &step.hp)?.scale(-1));
    out.add_assign(&intersect_1var(&a, &step.g)?);
    Ok(out)
}

/// The intersection cycle of two curves given by forms.
///
/// A constant form defines the empty curve and gives the empty cycle. The
/// result is checked to be a positive combination of total size `∂A·∂B`.
pub fn intersection_cycle(a: &HPoly, b: &HPoly) -> Result<Cycle> {
    intersection_cycle_with(a, b, DivisionStrategy::default())
}

pub fn intersection_cycle_with(a: &HPoly, b: &HPoly, strategy: DivisionStrategy) -> Result<Cycle> {
    if a.is_constant() || b.is_constant() {
        return Ok(Cycle::new());
    }
    let g = gcd_homogeneous(a, b);
    if !g.is_constant() {
        return Err(Error::CommonComponent(g.into_poly()));
    }
    let cycle = if a.deg_x() == 0 {
        intersect_1var(b, a)?
    } else if b.deg_x() == 0 {
        intersect_1var(a, b)?
    } else {
        reduce(a, b, strategy)?
    };
    if !cycle.all_positive() {
        return Err(Error::Internal(format!("negative coefficient in {cycle}")));
    }
    let expected = a.degree() as u64 * b.degree() as u64;
    let size = cycle.size()?;
    if size != expected {
        return Err(Error::Internal(format!(
            "cycle size {size} differs from {expected}"
        )));
    }
    Ok(cycle)
}

/// Intersection of two polynomials, homogenized when `affine` is set and
/// required to be forms otherwise.
pub fn intersect_polys(a: &MPoly, b: &MPoly, affine: bool) -> Result<(HPoly, HPoly, Cycle)> {
    let lift = |p: &MPoly| {
        if affine {
            homogenize(p)
        } else {
            HPoly::new(p.clone())
        }
    };
    let (ha, hb) = (lift(a)?, lift(b)?);
    let c = intersection_cycle(&ha, &hb)?;
    Ok((ha, hb, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::scalar::{rat, rat_frac};

    fn h(s: &str) -> HPoly {
        HPoly::new(parse_poly(s).unwrap()).unwrap()
    }

    fn q(c: &[i64]) -> UPoly<BigRational> {
        UPoly::from_ints(c)
    }

    fn c1(hs: &str, g: &[i64]) -> GaloisCycle {
        GaloisCycle::canonical_c1_xy(&parse_poly(hs).unwrap(), &q(g)).unwrap()
    }

    fn c0(f: &[i64]) -> GaloisCycle {
        GaloisCycle::c0(&q(f)).unwrap()
    }

    const EX2_A: &str = "(y-z)x^5+(y^2-y*z)x^4+(y^3-y^2z)x^3+(-y^2z^2+y*z^3)x^2\
        +(-y^3z^2+y^2z^3)x-y^4z^2+y^3z^3";
    const EX2_B: &str = "(y^2-2z^2)x^2+(y^3-2y*z^2)x+y^4-y^2z^2-2z^4";

    #[test]
    fn lines() {
        let l = |a, b, c| Line::new(rat(a), rat(b), rat(c)).unwrap();
        let p = line_point(&l(1, 1, 1), &l(1, -1, 0)).unwrap();
        assert_eq!(p.coords, [rat_frac(-1, 2), rat_frac(-1, 2), rat(1)]);
        assert_eq!(
            line_point(&l(1, 0, 0), &l(0, 1, 0)).unwrap().to_cycle(),
            c1("x", &[0, 1])
        );
        assert_eq!(
            line_point(&l(1, -3, 0), &l(0, 0, 1)).unwrap().to_cycle(),
            c0(&[-3, 1])
        );
        assert!(matches!(
            line_point(&l(1, 2, 3), &l(2, 4, 6)),
            Err(Error::CommonComponent(_))
        ));
    }

    #[test]
    fn euclid_step_examples() {
        let s = euclid_step(
            &h("y^2*z-x^3"),
            &h("y^2*z-x^2*(x+z)"),
            DivisionStrategy::FractionField,
        )
        .unwrap();
        assert!(s.hp.is_constant() && s.g.is_constant());
        assert_eq!(s.rp.normalize(), h("x^2*z"));
        let s = euclid_step(&h("x^2+y^2"), &h("x"), DivisionStrategy::FractionField).unwrap();
        assert_eq!(s.q, h("x"));
        assert_eq!(s.rp, h("y^2"));
    }

    #[test]
    fn one_variable_cases() {
        let c = intersect_1var(&h("y^2*z-x^3"), &h("z")).unwrap();
        assert_eq!(c, Cycle::single(c0(&[0, 1]), 3));
        let c = intersect_1var(&h("x^2"), &h("y^2*z")).unwrap();
        let expect: Cycle = [(c1("x", &[0, 1]), 4), (c0(&[0, 1]), 2)]
            .into_iter()
            .collect();
        assert_eq!(c, expect);
        let c = intersect_1var(&h(EX2_A), &h("y^2-2z^2")).unwrap();
        let expect: Cycle = [
            (c1("x^3-y", &[-2, 0, 1]), 1),
            (c1("x^2+y*x+2", &[-2, 0, 1]), 1),
            (GaloisCycle::PInf, 2),
        ]
        .into_iter()
        .collect();
        assert_eq!(c, expect);
    }

    #[test]
    fn example_one() {
        let c = intersection_cycle(&h("y^2*z-x^3"), &h("y^2*z-x^2*(x+z)")).unwrap();
        let expect: Cycle = [(c1("x", &[0, 1]), 4), (c0(&[0, 1]), 5)]
            .into_iter()
            .collect();
        assert_eq!(c, expect);
    }

    #[test]
    fn example_two() {
        let expect: Cycle = [
            (GaloisCycle::PInf, 2),
            (c0(&[1, 1, 1]), 2),
            (c1("x^2+x+2", &[-1, 1]), 1),
            (c1("x+y", &[1, 0, 1]), 1),
            (c1("x-y^3", &[1, 0, 0, 0, 1]), 1),
            (c1("x^3-y", &[-2, 0, 1]), 1),
            (c1("x^2+y*x+2", &[-2, 0, 1]), 1),
        ]
        .into_iter()
        .collect();
        for s in [
            DivisionStrategy::FractionField,
            DivisionStrategy::PseudoDivision,
        ] {
            let c = intersection_cycle_with(&h(EX2_A), &h(EX2_B), s).unwrap();
            assert_eq!(c, expect);
        }
    }

    #[test]
    fn trivial_pairs() {
        let c = intersection_cycle(&h("x"), &h("y")).unwrap();
        assert_eq!(c, Cycle::single(c1("x", &[0, 1]), 1));
        let c = intersection_cycle(&h("y"), &h("z^2")).unwrap();
        assert_eq!(c, Cycle::single(GaloisCycle::PInf, 2));
        assert!(intersection_cycle(&h("3"), &h("x")).unwrap().is_empty());
        match intersection_cycle(&h("x"), &h("2*x")) {
            Err(Error::CommonComponent(g)) => assert_eq!(g.to_string(), "x"),
            other => panic!("{other:?}"),
        }
    }
}
