//! Factorization of squarefree primitive integer polynomials: modular
//! factorization, multifactor Hensel lifting, and subset recombination.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::modp::{self, Fp};
use crate::upoly::UPoly;

type ZPoly = UPoly<BigInt>;

/// Number of admissible primes tried; the one giving the fewest modular
/// factors is used for lifting.
const PRIME_CANDIDATES: usize = 5;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn to_fp(f: &ZPoly, p: u64) -> Fp {
    let pb = BigInt::from(p);
    let mut v: Fp = f
        .coeffs()
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().unwrap())
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn from_fp(a: &[u64]) -> ZPoly {
    UPoly::new(a.iter().map(|&c| BigInt::from(c)).collect())
}

fn reduce(a: &ZPoly, m: &BigInt) -> ZPoly {
    UPoly::new(a.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn symmetric(a: &ZPoly, m: &BigInt) -> ZPoly {
    let half = m >> 1;
    UPoly::new(
        a.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn mul_m(a: &ZPoly, b: &ZPoly, m: &BigInt) -> ZPoly {
    reduce(&(a * b), m)
}

/// Division by a monic polynomial modulo `m`.
fn divrem_monic(a: &ZPoly, h: &ZPoly, m: &BigInt) -> (ZPoly, ZPoly) {
    let dh = h.deg();
    debug_assert!(h.lc().mod_floor(m).is_one() || m.is_one());
    let mut r: Vec<BigInt> = a.coeffs().to_vec();
    let Some(da) = a.degree() else {
        return (ZPoly::zero(), ZPoly::zero());
    };
    if da < dh {
        return (ZPoly::zero(), a.clone());
    }
    let mut q = vec![BigInt::zero(); da - dh + 1];
    for i in (0..=da - dh).rev() {
        let c = r[i + dh].mod_floor(m);
        if c.is_zero() {
            continue;
        }
        for (j, hc) in h.coeffs().iter().enumerate() {
            r[i + j] = (&r[i + j] - &c * hc).mod_floor(m);
        }
        q[i] = c;
    }
    r.truncate(dh);
    (UPoly::new(q), reduce(&UPoly::new(r), m))
}

struct Lifted {
    g: ZPoly,
    h: ZPoly,
    s: ZPoly,
    t: ZPoly,
}

/// One quadratic Hensel step from modulus `m` to `m²`. Requires
/// `f ≡ g·h`, `s·g + t·h ≡ 1 (mod m)`, `h` monic.
fn hensel_step(f: &ZPoly, l: Lifted, m: &BigInt) -> Lifted {
    let mm = m * m;
    let Lifted { g, h, s, t } = l;
    let e = reduce(&(f - &(&g * &h)), &mm);
    let (q, r) = divrem_monic(&mul_m(&s, &e, &mm), &h, &mm);
    let g2 = reduce(&(&(&g + &(&t * &e)) + &(&q * &g)), &mm);
    let h2 = reduce(&(&h + &r), &mm);
    let b = reduce(&(&(&(&s * &g2) + &(&t * &h2)) - &ZPoly::one()), &mm);
    let (c, d) = divrem_monic(&mul_m(&s, &b, &mm), &h2, &mm);
    let s2 = reduce(&(&s - &d), &mm);
    let t2 = reduce(&(&(&t - &(&t * &b)) - &(&c * &g2)), &mm);
    Lifted {
        g: g2,
        h: h2,
        s: s2,
        t: t2,
    }
}

fn inv_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "not invertible");
    e.x.mod_floor(m)
}

/// Lift `f ≡ lc(f)·∏ factors (mod p)` (factors monic mod p) to monic
/// factors modulo `p^(2^k) ≥ target`. Returns the factors and the modulus.
fn multifactor_lift(f: &ZPoly, factors: &[Fp], p: u64, target: &BigInt) -> (Vec<ZPoly>, BigInt) {
    let pb = BigInt::from(p);
    let mut m_final = pb.clone();
    while &m_final < target {
        m_final = &m_final * &m_final;
    }
    if factors.len() == 1 {
        let li = inv_mod(&f.lc(), &m_final);
        return (vec![reduce(&f.scale(&li), &m_final)], m_final);
    }
    let k = factors.len() / 2;
    let (left, right) = factors.split_at(k);
    let h0 = left.iter().fold(vec![1u64], |acc, g| modp::mul(&acc, g, p));
    let lc = to_fp(&ZPoly::constant(f.lc()), p);
    let g0 = right.iter().fold(lc, |acc, g| modp::mul(&acc, g, p));
    let (one, s0, t0) = modp::ext_gcd(&g0, &h0, p);
    debug_assert_eq!(one, vec![1]);
    let mut state = Lifted {
        g: from_fp(&g0),
        h: from_fp(&h0),
        s: from_fp(&s0),
        t: from_fp(&t0),
    };
    let mut m = pb;
    while m < m_final {
        state = hensel_step(f, state, &m);
        m = &m * &m;
    }
    let li = inv_mod(&state.g.lc(), &m);
    let g_monic = reduce(&state.g.scale(&li), &m);
    let (mut out, _) = multifactor_lift(&state.h, left, p, target);
    let (rest, _) = multifactor_lift(&g_monic, right, p, target);
    out.extend(rest);
    (out, m)
}

fn primitive(a: &ZPoly) -> ZPoly {
    let g = a.coeffs().iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let g = if a.lc().is_negative() { -g } else { g };
    UPoly::new(a.coeffs().iter().map(|c| c / &g).collect())
}

/// Exact quotient `f / g` over ℤ if `g` divides `f`.
fn try_divide(f: &ZPoly, g: &ZPoly) -> Option<ZPoly> {
    let fq = UPoly::<BigRational>::from_integer_poly(f);
    let gq = UPoly::<BigRational>::from_integer_poly(g);
    let (q, r) = fq.div_rem(&gq);
    if !r.is_zero() || q.coeffs().iter().any(|c| !c.is_integer()) {
        return None;
    }
    Some(q.map(|c| c.to_integer()))
}

/// Bound on coefficients of `lc(f)·g/lc(g)` for any factor `g` of `f`.
fn coefficient_bound(f: &ZPoly) -> BigInt {
    let norm2: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let n = f.deg() as u32;
    let sqrt = BigInt::from_biguint(Sign::Plus, norm2.magnitude().sqrt()) + 1;
    f.lc().abs() * (BigInt::one() << n) * sqrt
}

fn combinations(n: usize, k: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if visit(&idx) {
            return;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Choose a prime for modular factorization: among the first few primes
/// above `2·deg f` that keep `f` squarefree with the same degree, the one
/// with the fewest modular factors.
fn choose_prime(f: &ZPoly) -> (u64, Vec<Fp>) {
    let n = f.deg() as u64;
    let mut best: Option<(u64, Vec<Fp>)> = None;
    let mut tried = 0;
    let mut p = 2 * n;
    while tried < PRIME_CANDIDATES {
        p += 1;
        if !is_prime(p) || (f.lc() % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = to_fp(f, p);
        if !modp::is_squarefree(&fp, p) {
            continue;
        }
        tried += 1;
        let fs = modp::factor_squarefree(&modp::monic(&fp, p), p);
        let better = best.as_ref().is_none_or(|(_, b)| fs.len() < b.len());
        if better {
            let done = fs.len() == 1;
            best = Some((p, fs));
            if done {
                break;
            }
        }
    }
    best.expect("some prime is admissible")
}

/// Irreducible factors over ℤ of a squarefree primitive polynomial with
/// positive leading coefficient. Factors are primitive with positive
/// leading coefficient.
pub fn factor_squarefree_primitive(f: &ZPoly) -> Vec<ZPoly> {
    if f.deg() <= 1 {
        return vec![f.clone()];
    }
    let (p, modular) = choose_prime(f);
    if modular.len() == 1 {
        return vec![f.clone()];
    }
    let target = coefficient_bound(f) * 2 + 1;
    let (mut lifted, m) = multifactor_lift(f, &modular, p, &target);

    let mut result = Vec::new();
    let mut f = f.clone();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let lc = f.lc();
        let mut found: Option<(Vec<usize>, ZPoly, ZPoly)> = None;
        combinations(lifted.len(), size, |subset| {
            let prod = subset.iter().fold(ZPoly::constant(lc.clone()), |acc, &i| {
                mul_m(&acc, &lifted[i], &m)
            });
            let cand = primitive(&symmetric(&prod, &m));
            if let Some(q) = try_divide(&f, &cand) {
                found = Some((subset.to_vec(), cand, q));
                return true;
            }
            false
        });
        match found {
            Some((subset, g, q)) => {
                result.push(g);
                f = q;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => size += 1,
        }
    }
    if f.deg() > 0 {
        result.push(primitive(&f));
    }
    result
}
