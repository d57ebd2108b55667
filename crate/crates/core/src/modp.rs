//! Dense polynomials over a small prime field F_p, coefficients low-to-high.
//! Only what integer factorization needs: arithmetic, gcd, distinct-degree
//! and equal-degree splitting.

use num_bigint::BigUint;
use num_traits::One;

pub type Fp = Vec<u64>;

fn trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn deg(a: &[u64]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

pub fn inv(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p), "inverse of zero mod {p}");
    powmod(a, p - 2, p)
}

pub fn add(a: &[u64], b: &[u64], p: u64) -> Fp {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> Fp {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    trim(out)
}

pub fn scale(a: &[u64], c: u64, p: u64) -> Fp {
    trim(a.iter().map(|&x| mulmod(x, c, p)).collect())
}

pub fn monic(a: &[u64], p: u64) -> Fp {
    match a.last() {
        None => Vec::new(),
        Some(&l) => scale(a, inv(l, p), p),
    }
}

pub fn divrem(a: &[u64], d: &[u64], p: u64) -> (Fp, Fp) {
    let dd = deg(d).expect("division by zero polynomial mod p");
    let mut r = a.to_vec();
    let Some(da) = deg(a) else {
        return (Vec::new(), Vec::new());
    };
    if da < dd {
        return (Vec::new(), r);
    }
    let li = inv(d[dd], p);
    let mut q = vec![0u64; da - dd + 1];
    for i in (0..=da - dd).rev() {
        let c = mulmod(r[i + dd], li, p);
        if c == 0 {
            continue;
        }
        q[i] = c;
        for (j, &dc) in d.iter().enumerate() {
            r[i + j] = (r[i + j] + p - mulmod(c, dc, p)) % p;
        }
    }
    r.truncate(dd);
    (trim(q), trim(r))
}

pub fn rem(a: &[u64], d: &[u64], p: u64) -> Fp {
    divrem(a, d, p).1
}

pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Fp {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

/// `(g, s, t)` with `s*a + t*b = g` monic.
pub fn ext_gcd(a: &[u64], b: &[u64], p: u64) -> (Fp, Fp, Fp) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        let t = sub(&t0, &mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    let l = inv(*r0.last().expect("gcd of zeros"), p);
    (scale(&r0, l, p), scale(&s0, l, p), scale(&t0, l, p))
}

pub fn derivative(a: &[u64], p: u64) -> Fp {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulmod(c, i as u64 % p, p))
            .collect(),
    )
}

pub fn is_squarefree(a: &[u64], p: u64) -> bool {
    deg(&gcd(a, &derivative(a, p), p)) == Some(0)
}

/// `base^e mod m`.
pub fn pow_mod_poly(base: &[u64], e: &BigUint, m: &[u64], p: u64) -> Fp {
    let mut acc = vec![1u64];
    let b = rem(base, m, p);
    for i in (0..e.bits()).rev() {
        acc = rem(&mul(&acc, &acc, p), m, p);
        if e.bit(i) {
            acc = rem(&mul(&acc, &b, p), m, p);
        }
    }
    acc
}

/// Distinct-degree factorization of a monic squarefree polynomial:
/// `(product of all irreducible factors of degree d, d)`.
pub fn distinct_degree(f: &[u64], p: u64) -> Vec<(Fp, usize)> {
    let mut out = Vec::new();
    let mut f = f.to_vec();
    let x = vec![0u64, 1];
    let mut h = x.clone();
    let pb = BigUint::from(p);
    let mut d = 0;
    while let Some(n) = deg(&f) {
        if 2 * (d + 1) > n {
            break;
        }
        d += 1;
        h = pow_mod_poly(&h, &pb, &f, p);
        let g = gcd(&sub(&h, &x, p), &f, p);
        if deg(&g) > Some(0) {
            f = divrem(&f, &g, p).0;
            h = rem(&h, &f, p);
            out.push((g, d));
        }
    }
    if deg(&f) > Some(0) {
        let n = deg(&f).unwrap();
        out.push((f, n));
    }
    out
}

/// Deterministic sequence of trial polynomials of degree below `n`.
fn trial_poly(k: u64, n: usize, p: u64) -> Fp {
    let mut coeffs = Vec::with_capacity(n);
    let mut v = k;
    for _ in 0..n {
        coeffs.push(v % p);
        v /= p;
    }
    trim(coeffs)
}

/// Equal-degree splitting (Cantor–Zassenhaus, odd p) of a monic squarefree
/// product of irreducibles of degree `d`. Trial polynomials are enumerated
/// in a fixed order, so the output is reproducible.
pub fn equal_degree(f: &[u64], d: usize, p: u64) -> Vec<Fp> {
    let n = deg(f).unwrap_or(0);
    if n == d {
        return vec![f.to_vec()];
    }
    let e: BigUint = (BigUint::from(p).pow(d as u32) - BigUint::one()) >> 1;
    let mut k = p; // skip constants
    loop {
        let a = trial_poly(k, n, p);
        k += 1;
        if deg(&a).unwrap_or(0) == 0 {
            continue;
        }
        let g = gcd(&a, f, p);
        let split = if deg(&g) > Some(0) {
            g
        } else {
            let b = pow_mod_poly(&a, &e, f, p);
            gcd(&sub(&b, &[1], p), f, p)
        };
        let dg = deg(&split).unwrap_or(0);
        if dg > 0 && dg < n {
            let other = divrem(f, &split, p).0;
            let mut out = equal_degree(&split, d, p);
            out.extend(equal_degree(&monic(&other, p), d, p));
            return out;
        }
    }
}

/// Monic irreducible factors of a monic squarefree polynomial mod p.
pub fn factor_squarefree(f: &[u64], p: u64) -> Vec<Fp> {
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f, p) {
        out.extend(equal_degree(&g, d, p));
    }
    out.sort();
    out
}
