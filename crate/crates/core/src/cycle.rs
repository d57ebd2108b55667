//! Galois cycles and integer-weighted formal sums of them.
//!
//! A [`GaloisCycle`] names a Galois-stable set of points of the projective
//! plane: the point (1,0,0); `C0(f)`, the points (α,1,0) over the roots α of
//! `f`; or `C1(h, g)`, the points (γ,β,1) over the roots β of `g` and the
//! roots γ of `h(x, β)`. Canonical data denote disjoint point sets, so a
//! [`Cycle`] can cancel signed contributions by plain key comparison.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::factor::{factor_nf, is_irreducible_q};
use crate::mpoly::{join_terms, MPoly, Var};
use crate::numfield::{NfElem, NumberField};
use crate::upoly::UPoly;

type QPoly = UPoly<BigRational>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GaloisCycle {
    /// The point (1,0,0).
    PInf,
    /// Σ (α,1,0) over the roots of the monic irreducible `f(x)`.
    C0 { f: QPoly },
    /// Σ_β Σ_γ (γ,β,1): `g(y)` monic irreducible; `h` monic in x, stored as
    /// x-coefficients that are polynomials in y reduced modulo `g`.
    C1 { h: UPoly<QPoly>, g: QPoly },
}

fn cmp_q(a: &QPoly, b: &QPoly) -> Ordering {
    a.deg()
        .cmp(&b.deg())
        .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
}

fn cmp_h(a: &UPoly<QPoly>, b: &UPoly<QPoly>) -> Ordering {
    a.deg().cmp(&b.deg()).then_with(|| {
        a.coeffs()
            .iter()
            .rev()
            .zip(b.coeffs().iter().rev())
            .map(|(x, y)| cmp_q(x, y))
            .find(|o| *o != Ordering::Equal)
            .unwrap_or(Ordering::Equal)
    })
}

impl Ord for GaloisCycle {
    fn cmp(&self, other: &Self) -> Ordering {
        use GaloisCycle::*;
        match (self, other) {
            (PInf, PInf) => Ordering::Equal,
            (PInf, _) => Ordering::Less,
            (_, PInf) => Ordering::Greater,
            (C0 { f: a }, C0 { f: b }) => cmp_q(a, b),
            (C0 { .. }, C1 { .. }) => Ordering::Less,
            (C1 { .. }, C0 { .. }) => Ordering::Greater,
            (C1 { h: ha, g: ga }, C1 { h: hb, g: gb }) => cmp_q(ga, gb).then_with(|| cmp_h(ha, hb)),
        }
    }
}

impl PartialOrd for GaloisCycle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl GaloisCycle {
    /// `C0(f)` for a nonconstant irreducible `f`; content is discarded.
    pub fn c0(f: &QPoly) -> Result<Self> {
        if f.deg() == 0 {
            return Err(Error::Usage("C0 needs a nonconstant polynomial".into()));
        }
        if !is_irreducible_q(f) {
            return Err(Error::Usage(format!(
                "C0({}) : polynomial is reducible",
                f.to_string_var("x")
            )));
        }
        Ok(Self::c0_unchecked(f))
    }

    pub(crate) fn c0_unchecked(f: &QPoly) -> Self {
        GaloisCycle::C0 { f: f.monic() }
    }

    /// Canonical `C1(h, g)`: `g` made monic and checked irreducible, `h`
    /// made monic over ℚ[y]/(g) and checked irreducible there.
    pub fn canonical_c1(h: &UPoly<NfElem>, g: &QPoly) -> Result<Self> {
        if g.deg() == 0 {
            return Err(Error::Usage("C1 needs a nonconstant g".into()));
        }
        let field = NumberField::new(g.clone())?;
        let h = rebase(h, &field)?;
        if h.deg() == 0 {
            return Err(Error::Usage("C1 needs h of positive x-degree".into()));
        }
        if !factor_nf(&h, &field).is_irreducible() {
            return Err(Error::Usage("C1: h is reducible over Q[y]/(g)".into()));
        }
        Ok(Self::c1_unchecked(&h, field.modulus()))
    }

    /// `C1(h, g)` from `h` given as a polynomial in x, y.
    pub fn canonical_c1_xy(h: &MPoly, g: &QPoly) -> Result<Self> {
        if h.involves(Var::Z) {
            return Err(Error::Usage("h must be a polynomial in x and y".into()));
        }
        let field = NumberField::new(g.clone())?;
        let beta = field.generator();
        let n = h.deg_x() as usize;
        let mut coeffs = vec![NfElem::zero(); n + 1];
        for (m, c) in h.terms() {
            let t = crate::upoly::pow(&beta, m.0[1] as usize) * NfElem::rational(c.clone());
            let i = m.0[0] as usize;
            coeffs[i] = coeffs[i].clone() + t;
        }
        Self::canonical_c1(&UPoly::new(coeffs), field.modulus())
    }

    /// `h` must be irreducible over the field of the monic irreducible `g`.
    pub(crate) fn c1_unchecked(h: &UPoly<NfElem>, g: &QPoly) -> Self {
        let h = h.clone().into_coeffs();
        let inv = h
            .last()
            .expect("nonzero h")
            .checked_inv()
            .expect("leading coefficient is nonzero");
        let coeffs: Vec<QPoly> = h
            .iter()
            .map(|c| (c.clone() * inv.clone()).poly().clone())
            .collect();
        GaloisCycle::C1 {
            h: UPoly::new(coeffs),
            g: g.clone(),
        }
    }

    /// Number of points: `deg f` for `C0`, `deg_x h · deg g` for `C1`.
    pub fn size(&self) -> u64 {
        match self {
            GaloisCycle::PInf => 1,
            GaloisCycle::C0 { f } => f.deg() as u64,
            GaloisCycle::C1 { h, g } => (h.deg() * g.deg()) as u64,
        }
    }

    /// `h` with coefficients in the number field of `g`.
    pub fn h_over_field(&self) -> Option<(Arc<NumberField>, UPoly<NfElem>)> {
        match self {
            GaloisCycle::C1 { h, g } => {
                let field = NumberField::new_unchecked(g.clone());
                let hf = h.map(|c| field.elem(c.clone()));
                Some((field, hf))
            }
            _ => None,
        }
    }

    /// `h(x, y)` as a text polynomial, x-powers first: `x^2+y*x+2`.
    pub fn h_text(h: &UPoly<QPoly>) -> String {
        let mut terms = Vec::new();
        for (i, c) in h.coeffs().iter().enumerate().rev() {
            for (j, a) in c.coeffs().iter().enumerate().rev() {
                if a.is_zero() {
                    continue;
                }
                let mut parts = Vec::new();
                match j {
                    0 => {}
                    1 => parts.push("y".to_string()),
                    _ => parts.push(format!("y^{j}")),
                }
                match i {
                    0 => {}
                    1 => parts.push("x".to_string()),
                    _ => parts.push(format!("x^{i}")),
                }
                terms.push((a.clone(), parts.join("*")));
            }
        }
        join_terms(&terms)
    }
}

/// Move `h` into `field` (coefficients must be rational or from a field with
/// the same modulus).
fn rebase(h: &UPoly<NfElem>, field: &Arc<NumberField>) -> Result<UPoly<NfElem>> {
    let mut coeffs = Vec::with_capacity(h.coeffs().len());
    for c in h.coeffs() {
        if let Some(f) = c.field() {
            if f.modulus() != field.modulus() && !c.poly().is_constant() {
                return Err(Error::FieldMismatch);
            }
        }
        coeffs.push(field.elem(c.poly().clone()));
    }
    Ok(UPoly::new(coeffs))
}

impl fmt::Display for GaloisCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GaloisCycle::PInf => f.write_str("(1,0,0)"),
            GaloisCycle::C0 { f: p } => write!(f, "C0({})", p.to_string_var("x")),
            GaloisCycle::C1 { h, g } => {
                write!(
                    f,
                    "C1({}; {})",
                    GaloisCycle::h_text(h),
                    g.to_string_var("y")
                )
            }
        }
    }
}

/// Formal integer combination of Galois cycles; zero weights are never
/// stored and iteration follows the canonical cycle order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Cycle {
    entries: BTreeMap<GaloisCycle, i64>,
}

impl Cycle {
    pub fn new() -> Self {
        Cycle::default()
    }

    pub fn single(c: GaloisCycle, k: i64) -> Self {
        let mut out = Cycle::new();
        out.insert(c, k);
        out
    }

    pub fn insert(&mut self, c: GaloisCycle, k: i64) {
        if k == 0 {
            return;
        }
        let e = self.entries.entry(c).or_insert(0);
        *e += k;
        if *e == 0 {
            // re-borrow to remove the zero entry
            let key = self
                .entries
                .iter()
                .find(|(_, v)| **v == 0)
                .map(|(key, _)| key.clone())
                .unwrap();
            self.entries.remove(&key);
        }
    }

    pub fn add_assign(&mut self, other: &Cycle) {
        for (c, k) in &other.entries {
            self.insert(c.clone(), *k);
        }
    }

    pub fn add(&self, other: &Cycle) -> Cycle {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn scale(&self, k: i64) -> Cycle {
        if k == 0 {
            return Cycle::new();
        }
        Cycle {
            entries: self
                .entries
                .iter()
                .map(|(c, v)| (c.clone(), v * k))
                .collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GaloisCycle, i64)> {
        self.entries.iter().map(|(c, k)| (c, *k))
    }

    pub fn coefficient(&self, c: &GaloisCycle) -> i64 {
        self.entries.get(c).copied().unwrap_or(0)
    }

    pub fn all_positive(&self) -> bool {
        self.entries.values().all(|k| *k > 0)
    }

    /// Weighted point count; undefined (an error) when any weight is negative.
    pub fn size(&self) -> Result<u64> {
        let mut total = 0u64;
        for (c, k) in &self.entries {
            if *k < 0 {
                return Err(Error::Usage(format!("negative coefficient {k} on {c}")));
            }
            total += *k as u64 * c.size();
        }
        Ok(total)
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("0");
        }
        for (idx, (c, k)) in self.entries.iter().enumerate() {
            let (neg, a) = (*k < 0, k.unsigned_abs());
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if a != 1 {
                write!(f, "{a}*")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromIterator<(GaloisCycle, i64)> for Cycle {
    fn from_iter<I: IntoIterator<Item = (GaloisCycle, i64)>>(iter: I) -> Self {
        let mut out = Cycle::new();
        for (c, k) in iter {
            out.insert(c, k);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn q(c: &[i64]) -> QPoly {
        UPoly::from_ints(c)
    }

    fn c1(h: &str, g: &[i64]) -> GaloisCycle {
        GaloisCycle::canonical_c1_xy(&parse_poly(h).unwrap(), &q(g)).unwrap()
    }

    #[test]
    fn rational_points() {
        let p = c1("x-3", &[-4, 1]);
        assert_eq!(p.to_string(), "C1(x-3; y-4)");
        assert_eq!(c1("2x-6", &[-4, 1]), p);
        assert_eq!(c1("x", &[0, 1]).to_string(), "C1(x; y)");
        assert_eq!(
            GaloisCycle::c0(&q(&[-2, 1])).unwrap().to_string(),
            "C0(x-2)"
        );
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let a = c1("x^2+y*x+2", &[-2, 0, 1]);
        let (_, h) = a.h_over_field().unwrap();
        let GaloisCycle::C1 { g, .. } = &a else {
            unreachable!()
        };
        assert_eq!(GaloisCycle::canonical_c1(&h, g).unwrap(), a);
        assert_eq!(a.to_string(), "C1(x^2+y*x+2; y^2-2)");
        assert_eq!(
            c1("x-y^3", &[1, 0, 0, 0, 1]).to_string(),
            "C1(x-y^3; y^4+1)"
        );
        // y^5 reduces modulo y^4+1
        assert_eq!(c1("x+y^5", &[1, 0, 0, 0, 1]), c1("x-y", &[1, 0, 0, 0, 1]));
    }

    #[test]
    fn reducible_inputs_rejected() {
        assert!(GaloisCycle::canonical_c1_xy(&parse_poly("x").unwrap(), &q(&[-1, 0, 1])).is_err());
        assert!(
            GaloisCycle::canonical_c1_xy(&parse_poly("x^2-2").unwrap(), &q(&[-2, 0, 1])).is_err()
        );
        assert!(GaloisCycle::c0(&q(&[-1, 0, 1])).is_err());
    }

    #[test]
    fn sizes() {
        assert_eq!(GaloisCycle::c0(&q(&[1, 1, 1])).unwrap().size(), 2);
        assert_eq!(c1("x^3-y", &[-2, 0, 1]).size(), 6);
        assert_eq!(GaloisCycle::PInf.size(), 1);
        let mut c = Cycle::single(GaloisCycle::PInf, 2);
        assert_eq!(c.size().unwrap(), 2);
        c.insert(GaloisCycle::PInf, -3);
        assert!(c.size().is_err());
    }

    #[test]
    fn arithmetic_and_order() {
        let origin = c1("x", &[0, 1]);
        let y_inf = GaloisCycle::c0(&q(&[0, 1])).unwrap();
        let a: Cycle = [(origin.clone(), 2), (y_inf.clone(), 1)]
            .into_iter()
            .collect();
        let b = a.scale(2).add(&Cycle::single(y_inf.clone(), 3));
        assert_eq!(b.coefficient(&origin), 4);
        assert_eq!(b.coefficient(&y_inf), 5);
        assert_eq!(b.to_string(), "5*C0(x) + 4*C1(x; y)");
        assert!(a.add(&a.scale(-1)).is_empty());
        let mut p = Cycle::single(GaloisCycle::PInf, -12);
        p.insert(GaloisCycle::PInf, 4);
        p.insert(GaloisCycle::PInf, 8);
        assert!(p.is_empty());
    }
}
