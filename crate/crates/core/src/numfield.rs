//! Simple algebraic extensions ℚ(β) = ℚ[t]/(g(t)).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::FieldScalar;
use crate::upoly::UPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberField {
    modulus: UPoly<BigRational>,
}

impl NumberField {
    /// Builds ℚ[t]/(modulus), verifying that the modulus is irreducible.
    /// A non-monic modulus is made monic first.
    pub fn new(modulus: UPoly<BigRational>) -> Result<Arc<Self>> {
        if modulus.deg() == 0 {
            return Err(Error::Usage(
                "number field modulus must be nonconstant".into(),
            ));
        }
        let modulus = modulus.monic();
        if !crate::factor::is_irreducible_q(&modulus) {
            return Err(Error::Reducible);
        }
        Ok(Arc::new(NumberField { modulus }))
    }

    /// Skips the irreducibility check; the caller guarantees `modulus` is
    /// monic and irreducible.
    pub fn new_unchecked(modulus: UPoly<BigRational>) -> Arc<Self> {
        debug_assert!(modulus.deg() > 0 && modulus.lc().is_one());
        Arc::new(NumberField { modulus })
    }

    pub fn modulus(&self) -> &UPoly<BigRational> {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.deg()
    }

    /// The class of `t`.
    pub fn generator(self: &Arc<Self>) -> NfElem {
        self.elem(UPoly::var())
    }

    pub fn elem(self: &Arc<Self>, p: UPoly<BigRational>) -> NfElem {
        let coeffs = if p.deg() >= self.degree() {
            p.rem(&self.modulus)
        } else {
            p
        };
        NfElem {
            field: Some(self.clone()),
            coeffs,
        }
    }

    pub fn from_rational(self: &Arc<Self>, c: BigRational) -> NfElem {
        self.elem(UPoly::constant(c))
    }
}

/// An element of a number field, stored as its reduced representative.
///
/// Rational constants may carry no field: they embed in every extension,
/// which lets `zero()` and `one()` exist without a field context.
/// Non-constant elements always carry their field.
#[derive(Clone, Debug)]
pub struct NfElem {
    field: Option<Arc<NumberField>>,
    coeffs: UPoly<BigRational>,
}

impl NfElem {
    pub fn rational(c: BigRational) -> Self {
        NfElem {
            field: None,
            coeffs: UPoly::constant(c),
        }
    }

    pub fn field(&self) -> Option<&Arc<NumberField>> {
        self.field.as_ref()
    }

    /// Representative as a polynomial in the generator, degree < field degree.
    pub fn poly(&self) -> &UPoly<BigRational> {
        &self.coeffs
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        self.coeffs.is_constant().then(|| self.coeffs.coeff(0))
    }

    fn join(&self, other: &Self) -> Result<Option<Arc<NumberField>>> {
        match (&self.field, &other.field) {
            (None, f) | (f, None) => Ok(f.clone()),
            (Some(a), Some(b)) => {
                if Arc::ptr_eq(a, b) || a.modulus == b.modulus {
                    Ok(Some(a.clone()))
                } else {
                    Err(Error::FieldMismatch)
                }
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let field = self.join(other)?;
        Ok(NfElem {
            field,
            coeffs: &self.coeffs + &other.coeffs,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let field = self.join(other)?;
        let prod = &self.coeffs * &other.coeffs;
        let coeffs = match &field {
            Some(f) if prod.deg() >= f.degree() => prod.rem(&f.modulus),
            _ => prod,
        };
        Ok(NfElem { field, coeffs })
    }

    /// Inverse via the extended Euclidean algorithm against the modulus.
    pub fn checked_inv(&self) -> Result<Self> {
        if self.coeffs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.coeffs.is_constant() {
            return Ok(NfElem {
                field: self.field.clone(),
                coeffs: UPoly::constant(self.coeffs.coeff(0).recip()),
            });
        }
        let field = self
            .field
            .as_ref()
            .expect("non-constant element without field");
        let (g, s, _) = self.coeffs.ext_gcd(&field.modulus);
        if !g.is_one() {
            return Err(Error::Reducible);
        }
        Ok(field.elem(s))
    }

    pub fn to_string_var(&self, var: &str) -> String {
        self.coeffs.to_string_var(var)
    }
}

impl PartialEq for NfElem {
    fn eq(&self, other: &Self) -> bool {
        if self.coeffs != other.coeffs {
            return false;
        }
        if self.coeffs.is_constant() {
            return true;
        }
        match (&self.field, &other.field) {
            (Some(a), Some(b)) => a.modulus == b.modulus,
            _ => false,
        }
    }
}

impl Eq for NfElem {}

impl Zero for NfElem {
    fn zero() -> Self {
        NfElem {
            field: None,
            coeffs: UPoly::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }
}

impl One for NfElem {
    fn one() -> Self {
        NfElem::rational(BigRational::one())
    }
}

impl Add for NfElem {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.try_add(&rhs).expect("number field mismatch")
    }
}

impl Sub for NfElem {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.try_add(&-rhs).expect("number field mismatch")
    }
}

impl Mul for NfElem {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.try_mul(&rhs).expect("number field mismatch")
    }
}

impl Neg for NfElem {
    type Output = Self;
    fn neg(self) -> Self {
        NfElem {
            field: self.field,
            coeffs: -self.coeffs,
        }
    }
}

impl FieldScalar for NfElem {
    fn inv(&self) -> Self {
        self.checked_inv()
            .expect("inverse of zero number-field element")
    }
}

impl fmt::Display for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_var("t"))
    }
}
