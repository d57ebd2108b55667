//! Dense univariate polynomials over a generic coefficient ring.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalar::{ExactDiv, FieldScalar, Scalar};

/// Coefficients stored low-to-high; the leading coefficient is nonzero
/// unless the polynomial is zero (empty vector).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UPoly<T> {
    coeffs: Vec<T>,
}

/// `k` as an element of `T`, by double-and-add.
pub fn scalar_from_int<T: Scalar>(k: i64) -> T {
    let mut acc = T::zero();
    let mut base = T::one();
    let mut n = k.unsigned_abs();
    while n > 0 {
        if n & 1 == 1 {
            acc = acc + base.clone();
        }
        base = base.clone() + base;
        n >>= 1;
    }
    if k < 0 {
        -acc
    } else {
        acc
    }
}

pub fn pow<T: Scalar>(base: &T, mut e: usize) -> T {
    let mut acc = T::one();
    let mut b = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b.clone();
        }
        e >>= 1;
        if e > 0 {
            b = b.clone() * b;
        }
    }
    acc
}

impl<T: Scalar> UPoly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The variable itself.
    pub fn var() -> Self {
        UPoly {
            coeffs: vec![T::zero(), T::one()],
        }
    }

    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn from_fn(len: usize, f: impl FnMut(usize) -> T) -> Self {
        Self::new((0..len).map(f).collect())
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `var^i`, zero past the end.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention deg 0 = 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, at: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    pub fn map<U: Scalar>(&self, mut f: impl FnMut(&T) -> U) -> UPoly<U> {
        UPoly::new(self.coeffs.iter().map(&mut f).collect())
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UPoly { coeffs }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * scalar_from_int::<T>(i as i64))
                .collect(),
        )
    }

    /// `self(other(var))`.
    pub fn compose(&self, other: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            acc * other.clone() + Self::constant(c.clone())
        })
    }

    pub fn pow(&self, e: usize) -> Self {
        pow(self, e)
    }

    /// Pseudo-division: returns `(q, r)` with `lc(d)^(deg self - deg d + 1) * self = q*d + r`.
    pub fn pseudo_div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("pseudo-division by zero polynomial");
        let Some(ds) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if ds < dd {
            return (Self::zero(), self.clone());
        }
        let lc = d.lc();
        let mut e = ds - dd + 1;
        let mut q = Self::zero();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let t = Self::monomial(r.lc(), dr - dd);
            q = q.scale(&lc) + t.clone();
            r = r.scale(&lc) - t * d.clone();
            e -= 1;
        }
        let m = pow(&lc, e);
        (q.scale(&m), r.scale(&m))
    }

    pub fn prem(&self, d: &Self) -> Self {
        self.pseudo_div_rem(d).1
    }
}

impl<T: ExactDiv> UPoly<T> {
    pub fn div_scalar_exact(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.exact_div(c)).collect())
    }

    /// Resultant by the subresultant PRS.
    pub fn resultant(&self, other: &Self) -> T {
        let (Some(da), Some(db)) = (self.degree(), other.degree()) else {
            return T::zero();
        };
        let (mut a, mut b) = (self.clone(), other.clone());
        let mut sign = false;
        if da < db {
            std::mem::swap(&mut a, &mut b);
            if da % 2 == 1 && db % 2 == 1 {
                sign = true;
            }
        }
        if b.deg() == 0 {
            let r = pow(&b.lc(), a.deg());
            return if sign { -r } else { r };
        }
        let mut g = T::one();
        let mut h = T::one();
        loop {
            let (dega, degb) = (a.deg(), b.deg());
            let delta = dega - degb;
            if dega % 2 == 1 && degb % 2 == 1 {
                sign = !sign;
            }
            let r = a.prem(&b);
            if r.is_zero() {
                return T::zero();
            }
            a = b;
            b = r.div_scalar_exact(&(g.clone() * pow(&h, delta)));
            g = a.lc();
            if delta > 0 {
                h = pow(&g, delta).exact_div(&pow(&h, delta - 1));
            }
            if b.deg() == 0 {
                let dega = a.deg();
                let t = pow(&b.lc(), dega).exact_div(&pow(&h, dega - 1));
                return if sign { -t } else { t };
            }
        }
    }
}

impl<T: FieldScalar> UPoly<T> {
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = self.lc().inv();
        self.scale(&inv)
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.lc().inv();
        let mut r = self.coeffs.clone();
        let Some(ds) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if ds < dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![T::zero(); ds - dd + 1];
        for i in (0..=ds - dd).rev() {
            let c = r[i + dd].clone() * inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i + j] = r[i + j].clone() - c.clone() * dc.clone();
            }
            q[i] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic gcd (zero iff both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        T::poly_gcd(self, other)
    }

    /// Monic gcd by the plain Euclidean algorithm.
    pub fn euclid_gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0 - q.clone() * s1.clone();
            let t = t0 - q * t1.clone();
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lc().inv();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Quotient, asserting that the division is exact.
    pub fn exact_quo(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).is_zero()
    }
}

impl<T: FieldScalar> ExactDiv for UPoly<T> {
    fn exact_div(&self, other: &Self) -> Self {
        self.exact_quo(other)
    }
}

impl<T: Scalar> Zero for UPoly<T> {
    fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Scalar> One for UPoly<T> {
    fn one() -> Self {
        UPoly {
            coeffs: vec![T::one()],
        }
    }
}

impl<T: Scalar> Add for UPoly<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (a, b) in long.iter_mut().zip(short) {
            *a = a.clone() + b;
        }
        Self::new(long)
    }
}

impl<T: Scalar> Neg for UPoly<T> {
    type Output = Self;
    fn neg(self) -> Self {
        UPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<T: Scalar> Sub for UPoly<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Scalar> Mul for UPoly<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<T: Scalar> Mul for &UPoly<T> {
    type Output = UPoly<T>;
    fn mul(self, rhs: Self) -> UPoly<T> {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UPoly::new(out)
    }
}

impl<T: Scalar> Add for &UPoly<T> {
    type Output = UPoly<T>;
    fn add(self, rhs: Self) -> UPoly<T> {
        self.clone() + rhs.clone()
    }
}

impl<T: Scalar> Sub for &UPoly<T> {
    type Output = UPoly<T>;
    fn sub(self, rhs: Self) -> UPoly<T> {
        self.clone() - rhs.clone()
    }
}

// Rational-coefficient specifics.
impl UPoly<BigRational> {
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| crate::scalar::rat(c)).collect())
    }

    /// Primitive integer polynomial with positive leading coefficient that is
    /// a rational multiple of `self`.
    pub fn primitive_integer(&self) -> UPoly<BigInt> {
        use num_integer::Integer;
        let den = crate::scalar::denominator_lcm(&self.coeffs);
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().is_some_and(|c| c.is_negative()) {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        let g = g * sign;
        UPoly::new(ints.into_iter().map(|c| c / &g).collect())
    }

    /// Monic gcd by the primitive remainder sequence over ℤ, which keeps
    /// coefficient growth polynomial.
    pub fn primitive_gcd(&self, other: &Self) -> Self {
        use num_integer::Integer;
        if self.is_zero() || other.is_zero() {
            return (self.clone() + other.clone()).monic();
        }
        let prim = |p: UPoly<BigInt>| {
            let g = p.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
            p.map(|c| c / &g)
        };
        let (mut a, mut b) = (self.primitive_integer(), other.primitive_integer());
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while b.deg() > 0 {
            let r = a.prem(&b);
            if r.is_zero() {
                return Self::from_integer_poly(&b).monic();
            }
            a = std::mem::replace(&mut b, prim(r));
        }
        Self::one()
    }

    pub fn from_integer_poly(p: &UPoly<BigInt>) -> Self {
        p.map(|c| BigRational::from_integer(c.clone()))
    }

    /// Render with the given variable name, highest degree first, e.g.
    /// `x^2+x+1`, `y-1`, `-1/2*x`.
    pub fn to_string_var(&self, var: &str) -> String {
        let terms: Vec<(BigRational, String)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let mono = match i {
                    0 => String::new(),
                    1 => var.to_string(),
                    _ => format!("{var}^{i}"),
                };
                (c.clone(), mono)
            })
            .collect();
        crate::mpoly::join_terms(&terms)
    }
}

impl fmt::Display for UPoly<BigRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_var("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn q(c: &[i64]) -> UPoly<BigRational> {
        UPoly::from_ints(c)
    }

    #[test]
    fn division_and_gcd() {
        // (x-1)(x+2) / (x-1)
        let a = q(&[-2, 1, 1]);
        let (quo, r) = a.div_rem(&q(&[-1, 1]));
        assert_eq!(quo, q(&[2, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&q(&[6, 5, 1]).scale(&rat(3))), q(&[2, 1]));
        assert_eq!(q(&[1, 0, 1]).gcd(&q(&[-1, 1])), UPoly::one());
    }

    #[test]
    fn ext_gcd_identity() {
        let a = q(&[1, 0, 0, 1]);
        let b = q(&[2, 3, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(s * a + t * b, g);
        assert_eq!(g, q(&[1, 1]));
    }

    #[test]
    fn pseudo_division_identity() {
        let a = q(&[3, 0, 5, 2]);
        let d = q(&[1, 3]);
        let (quo, r) = a.pseudo_div_rem(&d);
        let m = pow(&rat(3), 3);
        assert_eq!(a.scale(&m), quo * d + r);
    }

    #[test]
    fn resultant_small() {
        // Res(f,g) = lc(f)^deg g * prod g(roots f) = g(1) = 2
        assert_eq!(q(&[-1, 1]).resultant(&q(&[1, 1])), rat(2));
        // Res(x^2+1, x^2-2): prod over roots of first of (r^2-2) = (-3)(-3) = 9
        assert_eq!(q(&[1, 0, 1]).resultant(&q(&[-2, 0, 1])), rat(9));
        // shared root
        assert_eq!(q(&[-1, 0, 1]).resultant(&q(&[-1, 1])), rat(0));
        // constant
        assert_eq!(q(&[3]).resultant(&q(&[1, 2, 1])), rat(9));
    }

    #[test]
    fn compose_and_derivative() {
        let p = q(&[0, 0, 1]);
        assert_eq!(p.compose(&q(&[1, 1])), q(&[1, 2, 1]));
        assert_eq!(q(&[5, 3, 0, 4]).derivative(), q(&[3, 0, 12]));
        assert_eq!(scalar_from_int::<BigRational>(-7), rat(-7));
    }

    #[test]
    fn printing() {
        assert_eq!(q(&[1, 1, 1]).to_string_var("x"), "x^2+x+1");
        assert_eq!(q(&[-1, 1]).to_string_var("y"), "y-1");
        assert_eq!(q(&[0, -2]).to_string_var("x"), "-2*x");
        assert_eq!(q(&[]).to_string_var("x"), "0");
    }
}
