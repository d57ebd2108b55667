//! Irreducible factorization over ℚ and over a single extension ℚ(β).

use std::cmp::Ordering;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::homog::HPoly;
use crate::mpoly::Var;
use crate::numfield::{NfElem, NumberField};
use crate::scalar::{FieldScalar, Scalar};
use crate::upoly::UPoly;
use crate::zassenhaus;

/// `unit · ∏ factor^multiplicity` with monic, pairwise distinct factors.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization<T> {
    pub unit: T,
    pub factors: Vec<(UPoly<T>, usize)>,
}

impl<T: Scalar> Factorization<T> {
    pub fn expand(&self) -> UPoly<T> {
        self.factors
            .iter()
            .fold(UPoly::constant(self.unit.clone()), |acc, (f, m)| {
                acc * f.pow(*m)
            })
    }

    /// Sum of factor degrees times multiplicities.
    pub fn degree(&self) -> usize {
        self.factors.iter().map(|(f, m)| f.deg() * m).sum()
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// Yun's squarefree decomposition of the monic associate of `f`: pairwise
/// coprime squarefree parts with their multiplicities.
pub fn squarefree<T: FieldScalar>(f: &UPoly<T>) -> Vec<(UPoly<T>, usize)> {
    assert!(!f.is_zero(), "squarefree decomposition of zero");
    let f = f.monic();
    if f.deg() == 0 {
        return Vec::new();
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_quo(&a0);
    let mut c = df.exact_quo(&a0);
    let mut d = c.clone() - b.derivative();
    let mut out = Vec::new();
    let mut i = 1;
    while b.deg() > 0 {
        let a = b.gcd(&d);
        b = b.exact_quo(&a);
        c = d.exact_quo(&a);
        d = c.clone() - b.derivative();
        if a.deg() > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

fn cmp_rational_poly(a: &UPoly<BigRational>, b: &UPoly<BigRational>) -> Ordering {
    a.deg()
        .cmp(&b.deg())
        .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
}

fn cmp_nf_poly(a: &UPoly<NfElem>, b: &UPoly<NfElem>) -> Ordering {
    a.deg().cmp(&b.deg()).then_with(|| {
        for (x, y) in a.coeffs().iter().rev().zip(b.coeffs().iter().rev()) {
            let o = cmp_rational_poly(x.poly(), y.poly());
            if o != Ordering::Equal {
                return o;
            }
        }
        Ordering::Equal
    })
}

/// Complete factorization over ℚ.
pub fn factor_q(f: &UPoly<BigRational>) -> Factorization<BigRational> {
    assert!(!f.is_zero(), "factorization of zero");
    let unit = f.lc();
    let mut factors = Vec::new();
    for (part, mult) in squarefree(f) {
        if part.deg() == 1 {
            factors.push((part, mult));
            continue;
        }
        let int = part.primitive_integer();
        for g in zassenhaus::factor_squarefree_primitive(&int) {
            factors.push((UPoly::from_integer_poly(&g).monic(), mult));
        }
    }
    factors.sort_by(|a, b| cmp_rational_poly(&a.0, &b.0).then(a.1.cmp(&b.1)));
    Factorization { unit, factors }
}

pub fn is_irreducible_q(f: &UPoly<BigRational>) -> bool {
    f.deg() > 0 && factor_q(f).is_irreducible()
}

/// Norm of `f ∈ ℚ(β)[x]` down to ℚ[x]: `Res_t(g(t), f(x, t))` for the
/// monic modulus `g`, which equals the product of the conjugates of `f`.
pub fn norm(f: &UPoly<NfElem>, field: &NumberField) -> UPoly<BigRational> {
    let d = field.degree();
    let mut by_t: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); f.deg() + 1]; d];
    for (i, c) in f.coeffs().iter().enumerate() {
        for (j, a) in c.poly().coeffs().iter().enumerate() {
            by_t[j][i] = a.clone();
        }
    }
    let ft: UPoly<UPoly<BigRational>> = UPoly::new(by_t.into_iter().map(UPoly::new).collect());
    let gt: UPoly<UPoly<BigRational>> = field.modulus().map(|c| UPoly::constant(c.clone()));
    gt.resultant(&ft)
}

fn embed(f: &UPoly<BigRational>, field: &Arc<NumberField>) -> UPoly<NfElem> {
    f.map(|c| field.from_rational(c.clone()))
}

/// `f(g) mod m` by Horner's rule, reducing after every step.
fn compose_mod(f: &UPoly<NfElem>, g: &UPoly<NfElem>, m: &UPoly<NfElem>) -> UPoly<NfElem> {
    f.coeffs().iter().rev().fold(UPoly::zero(), |acc, c| {
        (acc * g.clone() + UPoly::constant(c.clone())).rem(m)
    })
}

/// Trager's algorithm on a monic squarefree polynomial; `unshifted` is its
/// norm when already known.
fn trager(
    p: &UPoly<NfElem>,
    field: &Arc<NumberField>,
    unshifted: Option<UPoly<BigRational>>,
) -> Vec<UPoly<NfElem>> {
    if p.deg() <= 1 {
        return vec![p.clone()];
    }
    let beta = field.generator();
    let mut k: i64 = 0;
    let mut known = unshifted;
    let (shift, n) = loop {
        let shift = beta.clone() * NfElem::rational(crate::scalar::rat(k));
        let n = known.take().unwrap_or_else(|| {
            let q = p.compose(&UPoly::new(vec![-shift.clone(), NfElem::one()]));
            norm(&q, field)
        });
        if n.gcd(&n.derivative()).deg() == 0 {
            break (shift, n);
        }
        // 0, 1, -1, 2, -2, ...
        k = if k > 0 { -k } else { -k + 1 };
    };
    let fq = factor_q(&n);
    if fq.factors.len() == 1 {
        return vec![p.clone()];
    }
    let back = UPoly::new(vec![shift, NfElem::one()]);
    let mut out = Vec::new();
    let mut rest = p.clone();
    for (ni, _) in &fq.factors[..fq.factors.len() - 1] {
        let h = rest.gcd(&compose_mod(&embed(ni, field), &back, &rest));
        if h.deg() > 0 {
            rest = rest.exact_quo(&h);
            out.push(h);
        }
    }
    if rest.deg() > 0 {
        out.push(rest);
    }
    debug_assert_eq!(out.iter().map(|h| h.deg()).sum::<usize>(), p.deg());
    out
}

/// Complete factorization over ℚ(β) by Trager's norm method.
pub fn factor_nf(f: &UPoly<NfElem>, field: &Arc<NumberField>) -> Factorization<NfElem> {
    assert!(!f.is_zero(), "factorization of zero");
    let unit = f.lc();
    if field.degree() == 1 {
        let fq = f.map(|c| {
            c.as_rational()
                .expect("degree-one field elements are rational")
        });
        let fac = factor_q(&fq);
        return Factorization {
            unit,
            factors: fac
                .factors
                .iter()
                .map(|(g, m)| (embed(g, field), *m))
                .collect(),
        };
    }
    let mut factors = Vec::new();
    // a squarefree norm implies a squarefree input
    let monic = f.monic();
    let n = norm(&monic, field);
    if n.gcd(&n.derivative()).deg() == 0 {
        factors.extend(trager(&monic, field, Some(n)).into_iter().map(|h| (h, 1)));
    } else {
        for (part, mult) in squarefree(f) {
            for h in trager(&part, field, None) {
                factors.push((h, mult));
            }
        }
    }
    factors.sort_by(|a, b| cmp_nf_poly(&a.0, &b.0).then(a.1.cmp(&b.1)));
    Factorization { unit, factors }
}

/// Factor a nonzero form in the two variables `u`, `v`:
/// `C(u, v) = v^e · (homogenized factorization of C(u, 1))`.
pub fn factor_homog_bivariate(
    c: &HPoly,
    u: Var,
    v: Var,
) -> Result<(u32, Factorization<BigRational>)> {
    let other = [Var::X, Var::Y, Var::Z]
        .into_iter()
        .find(|w| *w != u && *w != v)
        .expect("three variables");
    if u == v || c.involves(other) {
        return Err(Error::Usage(format!(
            "expected a form in {} and {} only",
            u.name(),
            v.name()
        )));
    }
    let dehom = c.poly().specialize(v, &BigRational::one()).to_univariate(u);
    let e = c.degree() - dehom.deg() as u32;
    Ok((e, factor_q(&dehom)))
}
