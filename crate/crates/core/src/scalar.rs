//! Coefficient traits shared by every polynomial type in the crate.
//!
//! The polynomial code is written once against [`Scalar`] (a commutative
//! ring), [`FieldScalar`] (a field) and [`ExactDiv`] (an integral domain with
//! exact division), and is instantiated with rationals, number-field
//! elements, and polynomial rings over those.

use std::fmt::Debug;
use std::ops::{Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::upoly::UPoly;

/// A commutative ring element usable as a polynomial coefficient.
pub trait Scalar:
    Clone + PartialEq + Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self> + Send + Sync
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Neg<Output = Self>
        + Sub<Output = Self>
        + Send
        + Sync
{
}

/// A field element. `inv` panics on zero; use the checked variants of the
/// concrete types where zero is a possibility.
pub trait FieldScalar: Scalar {
    fn inv(&self) -> Self;

    fn div_by(&self, other: &Self) -> Self {
        self.clone() * other.inv()
    }

    /// Monic gcd of two polynomials over this field.
    fn poly_gcd(a: &UPoly<Self>, b: &UPoly<Self>) -> UPoly<Self> {
        a.euclid_gcd(b)
    }
}

impl FieldScalar for BigRational {
    fn inv(&self) -> Self {
        self.recip()
    }

    fn poly_gcd(a: &UPoly<Self>, b: &UPoly<Self>) -> UPoly<Self> {
        a.primitive_gcd(b)
    }
}

/// Exact division in an integral domain: `a.exact_div(b)` is only called
/// when `b` divides `a`.
pub trait ExactDiv: Scalar {
    fn exact_div(&self, other: &Self) -> Self;
}

impl ExactDiv for BigRational {
    fn exact_div(&self, other: &Self) -> Self {
        self / other
    }
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// lcm of denominators of an iterator of rationals (always positive).
pub fn denominator_lcm<'a>(it: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    it.into_iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

/// gcd of numerators (nonnegative; zero iff all inputs are zero).
pub fn numerator_gcd<'a>(it: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    it.into_iter()
        .fold(BigInt::zero(), |acc, c| acc.gcd(c.numer()))
}
