//! Homogeneous forms in x, y, z and the operations the Euclidean reduction
//! needs: division over ℚ(y,z) with denominator clearing, gcd, x-content,
//! substitution of a line family, and resultants in x.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::mpoly::{MPoly, Monomial, Var};
use crate::numfield::NfElem;
use crate::scalar::ExactDiv;
use crate::upoly::{pow, UPoly};

/// A nonzero homogeneous polynomial in x, y, z.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HPoly {
    poly: MPoly,
    degree: u32,
}

impl HPoly {
    pub fn new(poly: MPoly) -> Result<Self> {
        let degree = poly.total_degree().ok_or(Error::ZeroPolynomial)?;
        if !poly.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        Ok(HPoly { poly, degree })
    }

    /// Wraps a polynomial already known to be nonzero and homogeneous.
    pub(crate) fn from_form(poly: MPoly) -> Self {
        debug_assert!(
            !poly.is_zero() && poly.is_homogeneous(),
            "not a form: {poly}"
        );
        let degree = poly.total_degree().unwrap_or(0);
        HPoly { poly, degree }
    }

    pub fn poly(&self) -> &MPoly {
        &self.poly
    }

    pub fn into_poly(self) -> MPoly {
        self.poly
    }

    /// Total degree ∂.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn deg_x(&self) -> u32 {
        self.poly.deg_x()
    }

    pub fn involves(&self, v: Var) -> bool {
        self.poly.involves(v)
    }

    pub fn is_constant(&self) -> bool {
        self.degree == 0
    }

    pub fn normalize(&self) -> HPoly {
        HPoly::from_form(self.poly.normalize())
    }

    pub fn mul(&self, other: &HPoly) -> HPoly {
        HPoly::from_form(&self.poly * &other.poly)
    }

    pub fn scale(&self, c: &BigRational) -> HPoly {
        assert!(!c.is_zero());
        HPoly::from_form(self.poly.scale(c))
    }

    pub fn checked_div(&self, d: &HPoly) -> Option<HPoly> {
        self.poly.checked_div(&d.poly).map(HPoly::from_form)
    }

    pub fn one() -> HPoly {
        HPoly::from_form(MPoly::one())
    }
}

impl fmt::Display for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

impl fmt::Debug for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HPoly({})", self.poly)
    }
}

impl TryFrom<MPoly> for HPoly {
    type Error = Error;
    fn try_from(p: MPoly) -> Result<Self> {
        HPoly::new(p)
    }
}

/// Lift an affine polynomial in x, y to a form in x, y, z of the same total
/// degree.
pub fn homogenize(p: &MPoly) -> Result<HPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.involves(Var::Z) {
        return Err(Error::Usage("affine input must not contain z".into()));
    }
    Ok(HPoly::from_form(p.homogenize()))
}

// ---------------------------------------------------------------------------
// gcd

type Bivariate = UPoly<UPoly<BigRational>>;

/// Set z = 1 and view the result in ℚ[y][x].
fn dehomogenize_z(p: &MPoly) -> Bivariate {
    let n = p.deg_x() as usize;
    let mut outer: Vec<Vec<BigRational>> = vec![Vec::new(); n + 1];
    for (m, c) in p.terms() {
        let row = &mut outer[m.0[0] as usize];
        let j = m.0[1] as usize;
        if row.len() <= j {
            row.resize(j + 1, BigRational::zero());
        }
        row[j] += c;
    }
    UPoly::new(outer.into_iter().map(UPoly::new).collect())
}

fn rehomogenize_z(p: &Bivariate) -> MPoly {
    let mut out = MPoly::zero();
    for (i, inner) in p.coeffs().iter().enumerate() {
        for (j, c) in inner.coeffs().iter().enumerate() {
            out.add_term(Monomial::new(i as u32, j as u32, 0), c.clone());
        }
    }
    out.homogenize()
}

fn content_y(p: &Bivariate) -> UPoly<BigRational> {
    p.coeffs().iter().fold(UPoly::zero(), |acc, c| acc.gcd(c))
}

fn primitive_y(p: &Bivariate) -> Bivariate {
    if p.is_zero() {
        return p.clone();
    }
    let c = content_y(p);
    p.map(|a| a.exact_quo(&c))
}

/// gcd in ℚ[x, y] by the primitive remainder sequence in x over ℚ[y].
fn bivariate_gcd(a: &Bivariate, b: &Bivariate) -> Bivariate {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let c = content_y(a).gcd(&content_y(b));
    let (mut p, mut q) = (primitive_y(a), primitive_y(b));
    if p.deg() < q.deg() {
        std::mem::swap(&mut p, &mut q);
    }
    let g = loop {
        if q.deg() == 0 {
            break UPoly::one();
        }
        let r = p.prem(&q);
        if r.is_zero() {
            break q;
        }
        p = q;
        q = primitive_y(&r);
    };
    primitive_y(&g).map(|coef| coef * &c)
}

/// gcd of two nonzero forms, normalized to leading coefficient 1 in graded
/// lex order. Works by stripping explicit powers of z, taking the gcd of the
/// z = 1 dehomogenizations, and homogenizing back.
pub fn gcd_homogeneous(a: &HPoly, b: &HPoly) -> HPoly {
    let ea = a.poly.min_exp(Var::Z);
    let eb = b.poly.min_exp(Var::Z);
    let g = bivariate_gcd(&dehomogenize_z(a.poly()), &dehomogenize_z(b.poly()));
    let zp = MPoly::z().pow(ea.min(eb));
    let out = &zp * &rehomogenize_z(&g);
    HPoly::from_form(out.normalize())
}

/// True when the two forms share no nonconstant factor.
pub fn coprime(a: &HPoly, b: &HPoly) -> bool {
    gcd_homogeneous(a, b).is_constant()
}

/// Split `A = content · primitive`, where the content is the gcd of the
/// x-coefficients (a form in y, z, normalized) and the primitive part has no
/// nonconstant factor free of x.
pub fn x_content(a: &HPoly) -> (HPoly, HPoly) {
    let coeffs = a.poly.coeffs_in_x();
    let mut content: Option<HPoly> = None;
    for c in coeffs.into_iter().filter(|c| !c.is_zero()) {
        let c = HPoly::from_form(c);
        content = Some(match content {
            None => c.normalize(),
            Some(g) => gcd_homogeneous(&g, &c),
        });
        if content.as_ref().is_some_and(|g| g.is_constant()) {
            break;
        }
    }
    let content = content.expect("x_content of zero polynomial");
    let primitive = a.checked_div(&content).expect("content divides polynomial");
    (content, primitive)
}

// ---------------------------------------------------------------------------
// division in x over ℚ(y, z)

/// `num / den` with `num` a form in x, y, z and `den` a form in y, z; the
/// fraction is reduced (no nonconstant factor of `den` divides every
/// x-coefficient of `num`) and `den` is normalized.
#[derive(Clone, Debug, PartialEq)]
pub struct XFraction {
    pub num: MPoly,
    pub den: HPoly,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FracDivision {
    pub q: XFraction,
    pub r: XFraction,
}

fn as_x_upoly(p: &MPoly) -> UPoly<MPoly> {
    UPoly::new(p.coeffs_in_x())
}

fn from_x_upoly(p: &UPoly<MPoly>) -> MPoly {
    MPoly::from_coeffs_in_x(p.coeffs())
}

/// Pseudo-division in x: `(L, Q0, R0)` with `L·A = Q0·B + R0`,
/// `L = lc_x(B)^(deg_x A - deg_x B + 1)`.
pub fn pseudo_divide(a: &HPoly, b: &HPoly) -> Result<(HPoly, MPoly, MPoly)> {
    let (da, db) = (a.deg_x(), b.deg_x());
    if db == 0 {
        return Err(Error::Usage("divisor has x-degree 0".into()));
    }
    if da < db {
        return Err(Error::Usage(
            "dividend has smaller x-degree than divisor".into(),
        ));
    }
    let bu = as_x_upoly(b.poly());
    let (q0, r0) = as_x_upoly(a.poly()).pseudo_div_rem(&bu);
    let lead = HPoly::from_form(pow(&bu.lc(), (da - db + 1) as usize));
    Ok((lead, from_x_upoly(&q0), from_x_upoly(&r0)))
}

fn reduce_fraction(num: MPoly, den: &HPoly) -> XFraction {
    if num.is_zero() {
        return XFraction {
            num,
            den: HPoly::one(),
        };
    }
    let (content, _) = x_content(&HPoly::from_form(num.clone()));
    let g = gcd_homogeneous(den, &content);
    let den_r = den.checked_div(&g).expect("gcd divides denominator");
    let num_r = num.checked_div(g.poly()).expect("gcd divides numerator");
    let lead = den_r.poly().leading().map(|(_, c)| c.recip()).unwrap();
    XFraction {
        num: num_r.scale(&lead),
        den: den_r.scale(&lead),
    }
}

/// `A = q·B + r` over ℚ(y,z)[x] with `deg_x r < deg_x B`, each of `q`, `r`
/// given over its reduced common denominator.
pub fn ff_divide(a: &HPoly, b: &HPoly) -> Result<FracDivision> {
    let (lead, q0, r0) = pseudo_divide(a, b)?;
    Ok(FracDivision {
        q: reduce_fraction(q0, &lead),
        r: reduce_fraction(r0, &lead),
    })
}

/// Multiply through by `H = lcm` of the denominators: `H·A = Q·B + R`.
/// `Q` or `R` is returned as the zero polynomial when the corresponding
/// fraction vanishes.
pub fn clear_denominators(div: &FracDivision) -> (HPoly, MPoly, MPoly) {
    let g = gcd_homogeneous(&div.q.den, &div.r.den);
    let h = div
        .q
        .den
        .mul(&div.r.den.checked_div(&g).expect("gcd divides"));
    let fq = h.checked_div(&div.q.den).expect("lcm multiple");
    let fr = h.checked_div(&div.r.den).expect("lcm multiple");
    (h, &div.q.num * fq.poly(), &div.r.num * fr.poly())
}

// ---------------------------------------------------------------------------
// line-family substitution

/// `C(x, β, 1)` over ℚ(β), with `e0 = ∂C - deg`, so that
/// `C(x, βz, z) = z^e0 · (homogenization of the result)`.
pub fn substitute_line(c: &HPoly, beta: &NfElem) -> Result<(u32, UPoly<NfElem>)> {
    let n = c.deg_x() as usize;
    let max_j = c.poly.degree_in(Var::Y).unwrap_or(0) as usize;
    let mut powers = Vec::with_capacity(max_j + 1);
    powers.push(NfElem::one());
    for j in 1..=max_j {
        let next = powers[j - 1].try_mul(beta)?;
        powers.push(next);
    }
    let mut coeffs = vec![NfElem::zero(); n + 1];
    for (m, a) in c.poly.terms() {
        let i = m.0[0] as usize;
        let t = powers[m.0[1] as usize].try_mul(&NfElem::rational(a.clone()))?;
        coeffs[i] = coeffs[i].try_add(&t)?;
    }
    let u = UPoly::new(coeffs);
    let Some(d) = u.degree() else {
        return Err(Error::Usage(
            "curve contains a line of the family (common factor)".into(),
        ));
    };
    Ok((c.degree - d as u32, u))
}

// ---------------------------------------------------------------------------
// resultants

/// Resultant in x of two forms with positive x-degree; a form in y, z
/// (possibly zero).
pub fn resultant_x(a: &HPoly, b: &HPoly) -> MPoly {
    let r = as_x_upoly(a.poly()).resultant(&as_x_upoly(b.poly()));
    debug_assert!(r.is_homogeneous());
    r
}

/// Sylvester-matrix determinant by fraction-free (Bareiss) elimination; an
/// independent route to [`resultant_x`] for small degrees.
pub fn sylvester_resultant_x(a: &HPoly, b: &HPoly) -> MPoly {
    let ca = a.poly.coeffs_in_x();
    let cb = b.poly.coeffs_in_x();
    let (m, n) = (ca.len() - 1, cb.len() - 1);
    let size = m + n;
    if size == 0 {
        return MPoly::one();
    }
    let mut mat = vec![vec![MPoly::zero(); size]; size];
    for i in 0..n {
        for (k, c) in ca.iter().rev().enumerate() {
            mat[i][i + k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in cb.iter().rev().enumerate() {
            mat[n + i][i + k] = c.clone();
        }
    }
    bareiss_det(mat)
}

pub fn bareiss_det<T: ExactDiv>(mut mat: Vec<Vec<T>>) -> T {
    let n = mat.len();
    let mut sign = false;
    let mut prev = T::one();
    for k in 0..n {
        if mat[k][k].is_zero() {
            match (k + 1..n).find(|&i| !mat[i][k].is_zero()) {
                Some(i) => {
                    mat.swap(i, k);
                    sign = !sign;
                }
                None => return T::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v =
                    mat[i][j].clone() * mat[k][k].clone() - mat[i][k].clone() * mat[k][j].clone();
                mat[i][j] = v.exact_div(&prev);
            }
        }
        prev = mat[k][k].clone();
    }
    let d = mat[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::NumberField;
    use crate::parse::parse_poly;
    use crate::scalar::rat;

    fn h(s: &str) -> HPoly {
        HPoly::new(parse_poly(s).unwrap()).unwrap()
    }

    fn ex2() -> (HPoly, HPoly) {
        (
            h("(y-z)x^5+(y^2-y*z)x^4+(y^3-y^2z)x^3+(-y^2z^2+y*z^3)x^2+(-y^3z^2+y^2z^3)x-y^4z^2+y^3z^3"),
            h("(y^2-2z^2)x^2+(y^3-2y*z^2)x+y^4-y^2z^2-2z^4"),
        )
    }

    #[test]
    fn homogenize_rejects_zero() {
        assert!(matches!(
            homogenize(&MPoly::zero()),
            Err(Error::ZeroPolynomial)
        ));
        assert_eq!(
            homogenize(&parse_poly("y^2-x^3").unwrap()).unwrap(),
            h("y^2z-x^3")
        );
        assert_eq!(homogenize(&MPoly::int(5)).unwrap().degree(), 0);
    }

    #[test]
    fn non_homogeneous_rejected() {
        assert!(matches!(
            HPoly::new(parse_poly("x+1").unwrap()),
            Err(Error::NotHomogeneous)
        ));
    }

    #[test]
    fn ff_divide_example_two() {
        let (a, b) = ex2();
        let d = ff_divide(&a, &b).unwrap();
        assert_eq!(d.q.den, h("y^2-2z^2"));
        assert_eq!(d.q.num, parse_poly("(y-z)x(x^2-z^2)").unwrap());
        assert_eq!(d.r.den, HPoly::one());
        assert_eq!(d.r.num, parse_poly("z^2(y-z)(z^2x-y^3)").unwrap());
        let (hh, q, r) = clear_denominators(&d);
        assert_eq!(hh, h("y^2-2z^2"));
        assert_eq!(hh.poly() * a.poly(), &(&q * b.poly()) + &r);
    }

    #[test]
    fn ff_divide_example_one() {
        let a = h("y^2z-x^3");
        let b = h("y^2z-x^2(x+z)");
        let d = ff_divide(&a, &b).unwrap();
        assert_eq!(d.q.num, MPoly::one());
        assert_eq!(d.r.num, parse_poly("x^2z").unwrap());
        let (hh, q, r) = clear_denominators(&d);
        assert_eq!(
            (hh, q, r),
            (HPoly::one(), MPoly::one(), parse_poly("x^2z").unwrap())
        );
        let same = ff_divide(&a, &a).unwrap();
        assert_eq!(same.q.num, MPoly::one());
        assert!(same.r.num.is_zero());
    }

    #[test]
    fn ff_divide_needs_positive_x_degree() {
        assert!(matches!(
            ff_divide(&h("x^2"), &h("y")),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn gcds() {
        let (a, b) = ex2();
        let (_, q, r) = clear_denominators(&ff_divide(&a, &b).unwrap());
        let _ = q;
        assert_eq!(gcd_homogeneous(&b, &HPoly::from_form(r)), h("y^2-2z^2"));
        assert_eq!(gcd_homogeneous(&a, &a), a.normalize());
        assert_eq!(gcd_homogeneous(&h("x*y"), &h("z^2")), HPoly::one());
        assert_eq!(gcd_homogeneous(&h("x*z^2"), &h("y*z")), h("z"));
        assert_eq!(gcd_homogeneous(&h("x^2-y^2"), &h("x*z+y*z")), h("x+y"));
    }

    #[test]
    fn x_content_examples() {
        let (c, p) = x_content(&h("z^2(y-z)(z^2x-y^3)"));
        assert_eq!(c, h("z^2(y-z)"));
        assert_eq!(p, h("z^2x-y^3"));
        let (c, p) = x_content(&h("x^2z"));
        assert_eq!((c, p), (h("z"), h("x^2")));
        assert_eq!(x_content(&h("x+y")).0, HPoly::one());
    }

    #[test]
    fn substitute_line_examples() {
        let k = NumberField::new(UPoly::from_ints(&[-2, 0, 1])).unwrap();
        let (a, _) = ex2();
        let (e0, c) = substitute_line(&a, &k.generator()).unwrap();
        assert_eq!(e0, 1);
        assert_eq!(c.deg(), 5);
        // C = y^2z - x^3 on y = 0
        let k0 = NumberField::new(UPoly::from_ints(&[0, 1])).unwrap();
        let (e0, c) = substitute_line(&h("y^2z-x^3"), &k0.generator()).unwrap();
        assert_eq!(e0, 0);
        assert_eq!(c, UPoly::monomial(NfElem::rational(rat(-1)), 3));
        let k1 = NumberField::new(UPoly::from_ints(&[-1, 1])).unwrap();
        let (_, c) = substitute_line(&h("x+y"), &k1.generator()).unwrap();
        assert_eq!(c, UPoly::new(vec![NfElem::one(), NfElem::one()]));
        assert!(substitute_line(&h("y-z"), &k1.generator()).is_err());
    }

    #[test]
    fn resultants() {
        assert_eq!(resultant_x(&h("x-z"), &h("x+z")), parse_poly("2z").unwrap());
        assert_eq!(resultant_x(&h("x"), &h("x+y")), parse_poly("y").unwrap());
        let r = resultant_x(&h("y^2z-x^3"), &h("y^2z-x^2(x+z)"));
        assert_eq!(r.num_terms(), 1);
        assert_eq!(r.leading().unwrap().0, Monomial::new(0, 4, 5));
        let (a, b) = ex2();
        assert_eq!(resultant_x(&a, &b), sylvester_resultant_x(&a, &b));
        assert!(resultant_x(&h("x^2-y^2"), &h("x*z+y*z")).is_zero());
    }
}
