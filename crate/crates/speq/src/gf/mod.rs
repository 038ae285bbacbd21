//! Exact arithmetic in GF(p^n).
//!
//! Fields are described by a characteristic and a monic irreducible modulus;
//! moduli are chosen deterministically (the lexicographically least monic
//! irreducible, coefficient tuples compared low-degree-first), so every
//! derived structure is reproducible bit for bit across runs.

mod embed;
mod poly;
mod tensor;

pub use embed::{Embedding, RelView};
pub use tensor::{tensor_decompose, TensorFactor, TensorSplit};

use crate::error::{Error, Result};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// Desk-scale bound on extension degrees.
pub const MAX_DEGREE: usize = 16;
/// Desk-scale bound on the characteristic.
pub const MAX_CHAR: u64 = 17;

/// An element of GF(p^n): a reduced coefficient vector of length n,
/// low degree first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem {
    pub coeffs: Vec<u64>,
}

impl std::fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

/// A finite field GF(p^n) with a fixed monic irreducible modulus.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Gf {
    p: u64,
    n: usize,
    /// Monic, length n+1, low degree first.
    modulus: Vec<u64>,
}

struct FieldCache {
    moduli: HashMap<(u64, usize), Vec<u64>>,
    primitives: HashMap<(u64, usize), Vec<u64>>,
}

fn cache() -> &'static Mutex<FieldCache> {
    static CACHE: OnceLock<Mutex<FieldCache>> = OnceLock::new();
    CACHE.get_or_init(|| {
        Mutex::new(FieldCache {
            moduli: HashMap::new(),
            primitives: HashMap::new(),
        })
    })
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Gf {
    /// Construct GF(p^n) with the canonical modulus. Memoized.
    pub fn make(p: u64, n: usize) -> Result<Gf> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 || n > MAX_DEGREE || p > MAX_CHAR {
            return Err(Error::DegreeTooLarge(n));
        }
        let mut guard = cache().lock().unwrap();
        if let Some(m) = guard.moduli.get(&(p, n)) {
            return Ok(Gf {
                p,
                n,
                modulus: m.clone(),
            });
        }
        let m = least_irreducible(p, n);
        guard.moduli.insert((p, n), m.clone());
        Ok(Gf { p, n, modulus: m })
    }

    pub fn char(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Number of elements, p^n.
    pub fn order(&self) -> u128 {
        (self.p as u128).pow(self.n as u32)
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem {
            coeffs: vec![0; self.n],
        }
    }

    pub fn one(&self) -> FieldElem {
        let mut c = vec![0; self.n];
        c[0] = 1;
        FieldElem { coeffs: c }
    }

    pub fn from_int(&self, k: u64) -> FieldElem {
        let mut c = vec![0; self.n];
        c[0] = k % self.p;
        FieldElem { coeffs: c }
    }

    /// Residue of x, the canonical ring generator. Zero in a prime field
    /// (the degree-1 modulus is x itself).
    pub fn gen(&self) -> FieldElem {
        let mut c = vec![0; self.n];
        if self.n > 1 {
            c[1] = 1;
        }
        FieldElem { coeffs: c }
    }

    pub fn is_zero(&self, a: &FieldElem) -> bool {
        a.coeffs.iter().all(|&c| c == 0)
    }

    pub fn elem(&self, coeffs: &[u64]) -> FieldElem {
        assert!(coeffs.len() <= self.n, "coefficient vector too long");
        let mut c = vec![0; self.n];
        for (i, &x) in coeffs.iter().enumerate() {
            c[i] = x % self.p;
        }
        FieldElem { coeffs: c }
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let mut c = vec![0; self.n];
        for i in 0..self.n {
            c[i] = (a.coeffs[i] + b.coeffs[i]) % self.p;
        }
        FieldElem { coeffs: c }
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        let mut c = vec![0; self.n];
        for i in 0..self.n {
            c[i] = (self.p - a.coeffs[i]) % self.p;
        }
        FieldElem { coeffs: c }
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        // Schoolbook product followed by reduction mod the modulus.
        let mut prod = vec![0u64; 2 * self.n - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        self.reduce(&mut prod);
        prod.truncate(self.n);
        prod.resize(self.n, 0);
        FieldElem { coeffs: prod }
    }

    fn reduce(&self, v: &mut [u64]) {
        // modulus is monic: x^n = -(lower part)
        for i in (self.n..v.len()).rev() {
            let c = v[i];
            if c == 0 {
                continue;
            }
            v[i] = 0;
            for j in 0..self.n {
                let sub = (c * self.modulus[j]) % self.p;
                v[i - self.n + j] = (v[i - self.n + j] + self.p - sub) % self.p;
            }
        }
    }

    pub fn pow(&self, a: &FieldElem, mut e: u128) -> FieldElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: &FieldElem) -> Result<FieldElem> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        // a^(p^n - 2)
        Ok(self.pow(a, self.order() - 2))
    }

    /// The p-power Frobenius iterated k times: a ↦ a^(p^k).
    pub fn frobenius(&self, a: &FieldElem, k: usize) -> FieldElem {
        let k = k % self.n;
        let e = (self.p as u128).pow(k as u32);
        self.pow(a, e)
    }

    /// Index of an element in the canonical enumeration (base-p digits,
    /// low coefficient least significant).
    pub fn index_of(&self, a: &FieldElem) -> u128 {
        let mut idx = 0u128;
        for &c in a.coeffs.iter().rev() {
            idx = idx * self.p as u128 + c as u128;
        }
        idx
    }

    pub fn elem_of(&self, mut idx: u128) -> FieldElem {
        let mut c = vec![0; self.n];
        for slot in c.iter_mut() {
            *slot = (idx % self.p as u128) as u64;
            idx /= self.p as u128;
        }
        FieldElem { coeffs: c }
    }

    pub fn all_elems(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.order()).map(|i| self.elem_of(i))
    }

    /// A deterministic multiplicative generator of GF(p^n)^×. Memoized.
    pub fn primitive(&self) -> FieldElem {
        {
            let guard = cache().lock().unwrap();
            if let Some(c) = guard.primitives.get(&(self.p, self.n)) {
                return FieldElem { coeffs: c.clone() };
            }
        }
        let m = self.order() - 1;
        let mut primes = vec![];
        let mut rest = m;
        let mut d = 2u128;
        while d * d <= rest {
            if rest.is_multiple_of(d) {
                primes.push(d);
                while rest.is_multiple_of(d) {
                    rest /= d;
                }
            }
            d += 1;
        }
        if rest > 1 {
            primes.push(rest);
        }
        let g = (1..self.order())
            .map(|i| self.elem_of(i))
            .find(|g| primes.iter().all(|&q| !self.is_one(&self.pow(g, m / q))))
            .expect("finite field has a primitive element");
        let mut guard = cache().lock().unwrap();
        guard.primitives.insert((self.p, self.n), g.coeffs.clone());
        g
    }

    pub fn is_one(&self, a: &FieldElem) -> bool {
        a.coeffs[0] == 1 && a.coeffs[1..].iter().all(|&c| c == 0)
    }
}

/// Lexicographically least monic irreducible of degree n over GF(p),
/// coefficient tuples (c_0, ..., c_{n-1}) compared low-degree-first.
fn least_irreducible(p: u64, n: usize) -> Vec<u64> {
    let mut tail = vec![0u64; n];
    loop {
        let mut f = tail.clone();
        f.push(1);
        if pf_is_irreducible(p, &f) {
            return f;
        }
        // lexicographic successor: bump the last coordinate first so that
        // earlier (lower-degree) coordinates stay minimal as long as possible
        let mut i = n;
        loop {
            assert!(i > 0, "no irreducible of degree {n} over GF({p})");
            i -= 1;
            tail[i] += 1;
            if tail[i] < p {
                break;
            }
            tail[i] = 0;
        }
    }
}

// ---- polynomial helpers over the prime field ----

fn pf_trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn pf_rem(p: u64, a: &[u64], m: &[u64]) -> Vec<u64> {
    let mut r = a.to_vec();
    pf_trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = mod_inv(m[dm], p);
    while r.len() > dm {
        let k = r.len() - 1 - dm;
        let c = (r[r.len() - 1] * lead_inv) % p;
        for j in 0..=dm {
            let idx = k + j;
            r[idx] = (r[idx] + p - (c * m[j]) % p) % p;
        }
        pf_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn pf_mulmod(p: u64, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    pf_rem(p, &prod, m)
}

fn pf_powmod(p: u64, a: &[u64], mut e: u128, m: &[u64]) -> Vec<u64> {
    let mut base = pf_rem(p, a, m);
    let mut acc = vec![1u64];
    while e > 0 {
        if e & 1 == 1 {
            acc = pf_mulmod(p, &acc, &base, m);
        }
        base = pf_mulmod(p, &base, &base, m);
        e >>= 1;
    }
    acc
}

fn pf_gcd(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    pf_trim(&mut a);
    pf_trim(&mut b);
    while !b.is_empty() {
        let r = pf_rem(p, &a, &b);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        let inv = mod_inv(lead, p);
        for c in a.iter_mut() {
            *c = (*c * inv) % p;
        }
    }
    a
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // p is a small prime
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Rabin irreducibility test for a monic polynomial over GF(p).
fn pf_is_irreducible(p: u64, f: &[u64]) -> bool {
    let n = f.len() - 1;
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let x = vec![0, 1];
    // x^(p^n) ≡ x mod f
    let xq = pf_powmod(p, &x, (p as u128).pow(n as u32), f);
    let mut diff = xq.clone();
    diff.resize(diff.len().max(2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    pf_trim(&mut diff);
    if !diff.is_empty() {
        return false;
    }
    // gcd(x^(p^(n/l)) - x, f) = 1 for every prime l | n
    let mut primes = vec![];
    let mut rest = n;
    let mut d = 2;
    while d * d <= rest {
        if rest.is_multiple_of(d) {
            primes.push(d);
            while rest.is_multiple_of(d) {
                rest /= d;
            }
        }
        d += 1;
    }
    if rest > 1 {
        primes.push(rest);
    }
    for l in primes {
        let e = (p as u128).pow((n / l) as u32);
        let mut g = pf_powmod(p, &x, e, f);
        g.resize(g.len().max(2), 0);
        g[1] = (g[1] + p - 1) % p;
        pf_trim(&mut g);
        let gcd = pf_gcd(p, &g, f);
        if gcd.len() != 1 {
            return false;
        }
    }
    true
}

/// Exp/log tables for fast arithmetic in small fields, indexed by the
/// canonical element enumeration. Addition stays digit-wise (XOR at p = 2).
pub struct SmallField {
    pub p: u64,
    pub n: usize,
    pub order: u64,
    /// exp[k] = index of primitive^k, length order-1
    exp: Vec<u64>,
    /// log[idx] = k with primitive^k = elem(idx); log[0] unused
    log: Vec<u32>,
    /// digit masks for addition when p > 2
    digits: Option<Vec<Vec<u64>>>,
}

/// Largest field order for which lookup tables are built.
pub const SMALL_FIELD_LIMIT: u128 = 1 << 16;

impl SmallField {
    pub fn build(gf: &Gf) -> SmallField {
        let order = gf.order();
        assert!(
            order <= SMALL_FIELD_LIMIT,
            "field of order {order} too large for lookup tables"
        );
        let order = order as u64;
        let g = gf.primitive();
        let mut exp = Vec::with_capacity(order as usize - 1);
        let mut log = vec![0u32; order as usize];
        let mut cur = gf.one();
        for k in 0..(order - 1) {
            let idx = gf.index_of(&cur) as u64;
            exp.push(idx);
            log[idx as usize] = k as u32;
            cur = gf.mul(&cur, &g);
        }
        let digits = if gf.p == 2 {
            None
        } else {
            // idx -> digit vector, for additive lookups
            let table = (0..order)
                .map(|i| gf.elem_of(i as u128).coeffs)
                .collect::<Vec<_>>();
            Some(table)
        };
        SmallField {
            p: gf.p,
            n: gf.n,
            order,
            exp,
            log,
            digits,
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        let m = self.order - 1;
        self.exp[((self.log[a as usize] as u64 + self.log[b as usize] as u64) % m) as usize]
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.p == 2 {
            return a ^ b;
        }
        let digits = self.digits.as_ref().unwrap();
        let (da, db) = (&digits[a as usize], &digits[b as usize]);
        let mut idx = 0u64;
        for i in (0..self.n).rev() {
            idx = idx * self.p + (da[i] + db[i]) % self.p;
        }
        idx
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if self.p == 2 {
            return a;
        }
        let digits = self.digits.as_ref().unwrap();
        let da = &digits[a as usize];
        let mut idx = 0u64;
        for i in (0..self.n).rev() {
            idx = idx * self.p + (self.p - da[i]) % self.p;
        }
        idx
    }

    #[inline]
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        let m = self.order - 1;
        self.exp[((m - self.log[a as usize] as u64) % m) as usize]
    }
}
