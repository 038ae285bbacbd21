//! Polynomial arithmetic with coefficients in an arbitrary GF(p^n),
//! just enough for deterministic root finding inside extension fields.

use super::{FieldElem, Gf};

/// Coefficients low degree first, no trailing zeros (zero = empty vec).
pub type Poly = Vec<FieldElem>;

pub fn trim(gf: &Gf, a: &mut Poly) {
    while a.last().map(|c| gf.is_zero(c)) == Some(true) {
        a.pop();
    }
}

pub fn monic(gf: &Gf, a: &Poly) -> Poly {
    let mut a = a.clone();
    trim(gf, &mut a);
    if let Some(lead) = a.last().cloned() {
        if !gf.is_one(&lead) {
            let inv = gf.inv(&lead).unwrap();
            for c in a.iter_mut() {
                *c = gf.mul(c, &inv);
            }
        }
    }
    a
}

pub fn mul(gf: &Gf, a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut prod = vec![gf.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if gf.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            prod[i + j] = gf.add(&prod[i + j], &gf.mul(x, y));
        }
    }
    trim(gf, &mut prod);
    prod
}

pub fn rem(gf: &Gf, a: &Poly, m: &Poly) -> Poly {
    let mut r = a.clone();
    trim(gf, &mut r);
    let dm = m.len() - 1;
    let lead_inv = gf.inv(m.last().unwrap()).unwrap();
    while r.len() > dm {
        let k = r.len() - 1 - dm;
        let c = gf.mul(r.last().unwrap(), &lead_inv);
        for j in 0..=dm {
            let sub = gf.mul(&c, &m[j]);
            r[k + j] = gf.sub(&r[k + j], &sub);
        }
        trim(gf, &mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

pub fn mulmod(gf: &Gf, a: &Poly, b: &Poly, m: &Poly) -> Poly {
    rem(gf, &mul(gf, a, b), m)
}

pub fn powmod(gf: &Gf, a: &Poly, mut e: u128, m: &Poly) -> Poly {
    let mut base = rem(gf, a, m);
    let mut acc = vec![gf.one()];
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(gf, &acc, &base, m);
        }
        base = mulmod(gf, &base, &base, m);
        e >>= 1;
    }
    acc
}

pub fn gcd(gf: &Gf, a: &Poly, b: &Poly) -> Poly {
    let mut a = a.clone();
    let mut b = b.clone();
    trim(gf, &mut a);
    trim(gf, &mut b);
    while !b.is_empty() {
        let r = rem(gf, &a, &b);
        a = b;
        b = r;
    }
    monic(gf, &a)
}

pub fn add(gf: &Gf, a: &Poly, b: &Poly) -> Poly {
    let mut r = vec![gf.zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        r[i] = x.clone();
    }
    for (i, y) in b.iter().enumerate() {
        r[i] = gf.add(&r[i], y);
    }
    trim(gf, &mut r);
    r
}
