//! Exact intersection cycles of projective plane curves over ℚ.
//!
//! Two curves `A = 0`, `B = 0` given by coprime forms in x, y, z meet in a
//! formal sum of points weighted by intersection multiplicity. This crate
//! computes that sum exactly as a [`Cycle`] of Galois-stable point sets by a
//! Euclidean reduction in x, checks it against Bézout's count, and can
//! unpack it into approximate complex points or plot real slices.
//!
//! ```
//! use bezout_core::{intersection_cycle, parse_poly, HPoly};
//!
//! let a = HPoly::new(parse_poly("y^2*z - x^3").unwrap()).unwrap();
//! let b = HPoly::new(parse_poly("y^2*z - x^2*(x+z)").unwrap()).unwrap();
//! let c = intersection_cycle(&a, &b).unwrap();
//! assert_eq!(c.to_string(), "5*C0(x) + 4*C1(x; y)");
//! assert_eq!(c.size().unwrap(), 9);
//! ```
//!
//! Polynomial code is generic over the coefficient traits in [`scalar`];
//! the numeric side is generic over [`numeric::Real`]. The aliases below
//! name the instantiations used throughout.

pub mod cycle;
pub mod error;
pub mod factor;
pub mod homog;
pub mod intersect;
pub mod modp;
pub mod mpoly;
pub mod numeric;
pub mod numfield;
pub mod parse;
pub mod plot;
pub mod scalar;
pub mod upoly;
pub mod verify;
mod zassenhaus;

pub use cycle::{Cycle, GaloisCycle};
pub use error::{Error, Result};
pub use factor::{factor_nf, factor_q, squarefree, Factorization};
pub use homog::{gcd_homogeneous, homogenize, HPoly};
pub use intersect::{
    euclid_step, intersect_1var, intersection_cycle, intersection_cycle_with, line_point,
    DivisionStrategy, EuclidStep, Line, RatPoint,
};
pub use mpoly::{MPoly, Monomial, Var};
pub use numeric::{complex_roots, unpack, ApproxPoint};
pub use numfield::{NfElem, NumberField};
pub use parse::parse_poly;
pub use upoly::UPoly;
pub use verify::{bezout_check, on_curve, property_harness, resultant_oracle};

/// Exact rationals, the base field.
pub type Rat = num_rational::BigRational;
/// Univariate polynomials over ℚ.
pub type QPoly = UPoly<Rat>;
/// Univariate polynomials over a number field ℚ(β).
pub type NfPoly = UPoly<NfElem>;
/// Double-double precision real, about 31 decimal digits.
pub type DoubleDouble = twofloat::TwoFloat;
/// Unpacked point in `f64`.
pub type Point64 = ApproxPoint<f64>;
/// Unpacked point in double-double precision.
pub type PointDD = ApproxPoint<DoubleDouble>;
