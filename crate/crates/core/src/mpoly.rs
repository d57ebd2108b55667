//! Sparse polynomials in x, y, z over ℚ.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalar::ExactDiv;
use crate::upoly::UPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
        }
    }
}

/// Exponent triple for `x^i y^j z^k`, ordered graded-lexicographically with
/// x > y > z.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub fn new(i: u32, j: u32, k: u32) -> Self {
        Monomial([i, j, k])
    }

    pub fn degree(self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exp(self, v: Var) -> u32 {
        self.0[v as usize]
    }

    pub fn divides(self, o: Self) -> bool {
        (0..3).all(|i| self.0[i] <= o.0[i])
    }
}

impl Mul for Monomial {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Monomial([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }
}

/// Quotient of monomials; only valid when `o` divides `self`.
impl Div for Monomial {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        Monomial([self.0[0] - o.0[0], self.0[1] - o.0[1], self.0[2] - o.0[2]])
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// No stored zero coefficients; the map order is graded lex, so the leading
/// term is the last entry.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl MPoly {
    pub fn constant(c: BigRational) -> Self {
        let mut p = MPoly::zero();
        p.add_term(Monomial::default(), c);
        p
    }

    pub fn int(c: i64) -> Self {
        Self::constant(crate::scalar::rat(c))
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; 3];
        e[v as usize] = 1;
        Self::term(BigRational::one(), Monomial(e))
    }

    pub fn x() -> Self {
        Self::var(Var::X)
    }
    pub fn y() -> Self {
        Self::var(Var::Y)
    }
    pub fn z() -> Self {
        Self::var(Var::Z)
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut p = MPoly::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut p = MPoly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: Monomial) -> BigRational {
        self.terms
            .get(&m)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<(Monomial, &BigRational)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(v)).max()
    }

    /// x-degree, zero for the zero polynomial.
    pub fn deg_x(&self) -> u32 {
        self.degree_in(Var::X).unwrap_or(0)
    }

    /// Smallest exponent of `v` over all terms.
    pub fn min_exp(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).min().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn involves(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, c: &BigRational, mono: Monomial) -> Self {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, a)| (*m * mono, a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        crate::upoly::pow(self, e as usize)
    }

    /// Scale so the leading term (graded lex) has coefficient 1.
    pub fn normalize(&self) -> Self {
        match self.leading() {
            None => MPoly::zero(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    /// Coefficients as a polynomial in `x`: entry `i` is the coefficient of
    /// `x^i`, a polynomial in y, z.
    pub fn coeffs_in_x(&self) -> Vec<MPoly> {
        let n = self.deg_x() as usize;
        let mut out = vec![MPoly::zero(); if self.is_zero() { 0 } else { n + 1 }];
        for (m, c) in &self.terms {
            let i = m.0[0] as usize;
            out[i].add_term(Monomial::new(0, m.0[1], m.0[2]), c.clone());
        }
        out
    }

    pub fn from_coeffs_in_x(coeffs: &[MPoly]) -> Self {
        let mut out = MPoly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                out.add_term(Monomial::new(m.0[0] + i as u32, m.0[1], m.0[2]), a.clone());
            }
        }
        out
    }

    /// Leading coefficient with respect to x.
    pub fn lc_x(&self) -> MPoly {
        self.coeffs_in_x().pop().unwrap_or_default()
    }

    pub fn eval(&self, point: [&BigRational; 3]) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t *= crate::upoly::pow(point[v], e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Replace each variable by the given polynomial.
    pub fn substitute(&self, images: [&MPoly; 3]) -> MPoly {
        let mut cache: [Vec<MPoly>; 3] = Default::default();
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(c.clone());
            for v in 0..3 {
                let e = m.0[v] as usize;
                if e == 0 {
                    continue;
                }
                let powers = &mut cache[v];
                if powers.is_empty() {
                    powers.push(MPoly::one());
                }
                while powers.len() <= e {
                    let next = powers.last().unwrap() * images[v];
                    powers.push(next);
                }
                t = &t * &powers[e];
            }
            out = out + t;
        }
        out
    }

    /// Set one variable to a rational value.
    pub fn specialize(&self, v: Var, value: &BigRational) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut e = m.0;
            let k = e[v as usize];
            e[v as usize] = 0;
            out.add_term(Monomial(e), c * crate::upoly::pow(value, k as usize));
        }
        out
    }

    /// The univariate polynomial in `v` obtained when `v` is the only
    /// variable present; panics otherwise.
    pub fn to_univariate(&self, v: Var) -> UPoly<BigRational> {
        let n = self.degree_in(v).unwrap_or(0) as usize;
        let mut coeffs = vec![BigRational::zero(); n + 1];
        for (m, c) in &self.terms {
            assert!(
                m.degree() == m.exp(v),
                "to_univariate: polynomial involves more than {}",
                v.name()
            );
            coeffs[m.exp(v) as usize] = c.clone();
        }
        UPoly::new(coeffs)
    }

    pub fn from_univariate(p: &UPoly<BigRational>, v: Var) -> Self {
        let mut out = MPoly::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            let mut e = [0; 3];
            e[v as usize] = i as u32;
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Multivariate division by a single divisor: `(q, r)` with
    /// `self = q*d + r` and no term of `r` divisible by `lt(d)`.
    pub fn div_rem(&self, d: &MPoly) -> (MPoly, MPoly) {
        let (lm, lc) = d.leading().expect("division by zero polynomial");
        let lc_inv = lc.recip();
        let mut q = MPoly::zero();
        let mut r = MPoly::zero();
        let mut p = self.clone();
        while let Some((m, c)) = p.leading() {
            let c = c.clone();
            if lm.divides(m) {
                let t = m / lm;
                let f = &c * &lc_inv;
                p = p - d.mul_monomial(&f, t);
                q.add_term(t, f);
            } else {
                p.terms.remove(&m);
                r.add_term(m, c);
            }
        }
        (q, r)
    }

    /// Quotient when `d` divides `self`; `None` otherwise.
    pub fn checked_div(&self, d: &MPoly) -> Option<MPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Homogenize to total degree (an affine x, y polynomial becomes a form
    /// in x, y, z).
    pub fn homogenize(&self) -> MPoly {
        let d = self.total_degree().unwrap_or(0);
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(
                Monomial::new(m.0[0], m.0[1], m.0[2] + d - m.degree()),
                c.clone(),
            );
        }
        out
    }

    /// Homogenize `self` (in the two variables other than `missing`) to the
    /// given degree using `missing` as the homogenizing variable.
    pub fn homogenize_with(&self, missing: Var, degree: u32) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            let mut e = m.0;
            debug_assert_eq!(e[missing as usize], 0);
            e[missing as usize] = degree - m.degree();
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Rationals with the ith term's coefficient, for printing or hashing.
    pub fn coefficients(&self) -> impl Iterator<Item = &BigRational> {
        self.terms.values()
    }
}

impl Zero for MPoly {
    fn zero() -> Self {
        MPoly {
            terms: BTreeMap::new(),
        }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MPoly {
    fn one() -> Self {
        MPoly::int(1)
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(mut self, rhs: MPoly) -> MPoly {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.clone() + rhs.clone()
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(mut self, rhs: MPoly) -> MPoly {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
        self
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.clone() - rhs.clone()
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(*ma * *mb, ca * cb);
            }
        }
        out
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl ExactDiv for MPoly {
    fn exact_div(&self, other: &Self) -> Self {
        self.checked_div(other)
            .expect("inexact multivariate division")
    }
}

/// Join `(coefficient, monomial)` pairs, highest first, into compact text
/// such as `-x^3+y^2*z` or `1/2*x-3`.
pub(crate) fn join_terms(terms: &[(BigRational, String)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut s = String::new();
    for (idx, (c, mono)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        if neg {
            s.push('-');
        } else if idx > 0 {
            s.push('+');
        }
        let a = c.abs();
        if mono.is_empty() {
            s.push_str(&a.to_string());
        } else if a.is_one() {
            s.push_str(mono);
        } else {
            s.push_str(&format!("{a}*{mono}"));
        }
    }
    s
}

fn monomial_text(m: Monomial) -> String {
    let parts: Vec<String> = [Var::X, Var::Y, Var::Z]
        .iter()
        .filter(|v| m.exp(**v) > 0)
        .map(|v| match m.exp(*v) {
            1 => v.name().to_string(),
            e => format!("{}^{e}", v.name()),
        })
        .collect();
    parts.join("*")
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(BigRational, String)> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| (c.clone(), monomial_text(*m)))
            .collect();
        f.write_str(&join_terms(&terms))
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn x() -> MPoly {
        MPoly::x()
    }
    fn y() -> MPoly {
        MPoly::y()
    }
    fn z() -> MPoly {
        MPoly::z()
    }

    #[test]
    fn grlex_order_and_printing() {
        let p = &(&y().pow(2) * &z()) - &x().pow(3);
        assert_eq!(p.to_string(), "-x^3+y^2*z");
        assert!(Monomial::new(1, 0, 0) > Monomial::new(0, 1, 0));
        assert!(Monomial::new(0, 0, 2) > Monomial::new(1, 0, 0));
        assert_eq!(
            (x() + MPoly::int(-1))
                .scale(&crate::scalar::rat_frac(1, 2))
                .to_string(),
            "1/2*x-1/2"
        );
    }

    #[test]
    fn exact_division() {
        let a = &(x() + y()) * &(&x() - &z());
        assert_eq!(a.checked_div(&(x() + y())), Some(&x() - &z()));
        assert_eq!(a.checked_div(&(x() + z())), None);
    }

    #[test]
    fn x_coefficients_round_trip() {
        let p = &(&x().pow(2) * &z()) + &(&y() * &x()) + MPoly::int(3);
        let cs = p.coeffs_in_x();
        assert_eq!(cs.len(), 3);
        assert_eq!(cs[2], z());
        assert_eq!(MPoly::from_coeffs_in_x(&cs), p);
    }

    #[test]
    fn homogenize_affine() {
        let p = &y().pow(2) - &x().pow(3);
        assert_eq!(p.homogenize(), &(&y().pow(2) * &z()) - &x().pow(3));
        assert_eq!((x() + y() + MPoly::int(1)).homogenize(), x() + y() + z());
        assert_eq!(MPoly::int(5).homogenize(), MPoly::int(5));
    }

    #[test]
    fn substitution_and_eval() {
        let p = &x().pow(2) - &y();
        let s = p.substitute([&(x() + z()), &y(), &z()]);
        assert_eq!(
            s,
            &(&(&x().pow(2) + &(&x() * &z()).scale(&rat(2))) + &z().pow(2)) - &y()
        );
        assert_eq!(p.eval([&rat(3), &rat(4), &rat(0)]), rat(5));
    }
}
