//! Deterministic subfield embeddings and relative coordinate views.

use super::poly::{self, Poly};
use super::{FieldElem, Gf};
use crate::error::{Error, Result};
use crate::linalg::Mat;

/// An embedding GF(p^a) → GF(p^N) for a | N, pinned down by the image of
/// the source generator: the root of the source modulus in the target with
/// the lexicographically least coefficient vector.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub src: Gf,
    pub dst: Gf,
    pub gen_image: FieldElem,
}

impl Embedding {
    pub fn new(src: &Gf, dst: &Gf) -> Result<Embedding> {
        if src.char() != dst.char() || !dst.degree().is_multiple_of(src.degree()) {
            return Err(Error::NotASubfield);
        }
        let roots = roots_in(dst, src.modulus());
        let gen_image = roots.into_iter().min().expect("modulus has a root");
        Ok(Embedding {
            src: src.clone(),
            dst: dst.clone(),
            gen_image,
        })
    }

    pub fn apply(&self, a: &FieldElem) -> FieldElem {
        let mut acc = self.dst.zero();
        for &c in a.coeffs.iter().rev() {
            acc = self.dst.mul(&acc, &self.gen_image);
            acc = self.dst.add(&acc, &self.dst.from_int(c));
        }
        acc
    }
}

/// All roots in `dst` of a monic irreducible polynomial over the prime field
/// whose degree divides `dst.degree()`, sorted by coefficient vector.
pub fn roots_in(dst: &Gf, prime_poly: &[u64]) -> Vec<FieldElem> {
    let deg = prime_poly.len() - 1;
    assert!(
        dst.degree().is_multiple_of(deg),
        "polynomial does not split"
    );
    let lifted: Poly = prime_poly.iter().map(|&c| dst.from_int(c)).collect();
    if deg == 1 {
        // monic linear: root is -c0
        return vec![dst.neg(&lifted[0])];
    }
    let one_root = find_root(dst, &lifted);
    let mut roots: Vec<FieldElem> = (0..deg).map(|j| dst.frobenius(&one_root, j)).collect();
    roots.sort();
    roots.dedup();
    assert_eq!(
        roots.len(),
        deg,
        "irreducible polynomial has distinct roots"
    );
    roots
}

/// Deterministic root extraction from a monic polynomial that splits into
/// distinct linear factors over `dst`. Splitting candidates are scanned in
/// the canonical element order, so the result never depends on a RNG.
fn find_root(dst: &Gf, f: &Poly) -> FieldElem {
    let mut g = poly::monic(dst, f);
    while g.len() > 2 {
        g = split_once(dst, &g);
    }
    assert_eq!(g.len(), 2, "splitting ended above degree one");
    dst.neg(&g[0])
}

fn split_once(dst: &Gf, g: &Poly) -> Poly {
    let p = dst.char();
    let order = dst.order();
    for idx in 0..order {
        let c = dst.elem_of(idx);
        let cand = if p == 2 {
            if dst.is_zero(&c) {
                continue;
            }
            // additive splitting: gcd with the trace polynomial of c·y
            let cy = vec![dst.zero(), c.clone()];
            let mut term = poly::rem(dst, &cy, g);
            let mut acc = term.clone();
            for _ in 1..dst.degree() {
                term = poly::mulmod(dst, &term, &term, g);
                acc = poly::add(dst, &acc, &term);
            }
            poly::gcd(dst, g, &acc)
        } else {
            // multiplicative splitting: gcd with (y+c)^((q-1)/2) - 1
            let linear = vec![c.clone(), dst.one()];
            let d = poly::gcd(dst, g, &linear);
            if d.len() == 2 {
                return d;
            }
            let mut s = poly::powmod(dst, &linear, (order - 1) / 2, g);
            s = poly::add(dst, &s, &vec![dst.neg(&dst.one())]);
            poly::gcd(dst, g, &s)
        };
        if cand.len() > 1 && cand.len() < g.len() {
            return cand;
        }
    }
    unreachable!("no splitting element found for a split polynomial");
}

/// A view of GF(p^B) as a free module over a (possibly Frobenius-twisted)
/// embedded copy of GF(p^S), with the generator-power basis 1, G, ..., G^(k-1).
///
/// The scalar action is λ · x = φ^twist(ι(λ)) · x where ι is the canonical
/// embedding and φ the p-power Frobenius of the big field.
#[derive(Clone, Debug)]
pub struct RelView {
    pub big: Gf,
    pub small: Gf,
    pub twist: usize,
    pub rank: usize,
    embedding: Embedding,
    /// Inverse of the flattening matrix over GF(p); maps a flattened big
    /// element to coordinates (basis small-coeff major: chunk t holds the
    /// small coefficients of the G^t coordinate).
    unflatten: Mat,
}

impl RelView {
    pub fn new(big: &Gf, small: &Gf, twist: usize) -> Result<RelView> {
        let embedding = Embedding::new(small, big)?;
        let rank = big.degree() / small.degree();
        let fp = Gf::make(big.char(), 1)?;
        let s = small.degree();
        let b = big.degree();
        let gen = big.gen();
        // column (t*s + u) = flatten(φ^twist(ι(x^u)) · G^t)
        let mut cols: Vec<Vec<FieldElem>> = vec![];
        let mut gpow = big.one();
        for _t in 0..rank {
            for u in 0..s {
                let mut unit = vec![0u64; s];
                unit[u] = 1;
                let img = big.frobenius(&embedding.apply(&small.elem(&unit)), twist);
                let prod = big.mul(&img, &gpow);
                cols.push(prod.coeffs.iter().map(|&c| fp.elem(&[c])).collect());
            }
            gpow = big.mul(&gpow, &gen);
        }
        let mut m = Mat::zero(&fp, b, b);
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                *m.at_mut(i, j) = v.clone();
            }
        }
        let unflatten = m
            .inverse(&fp)
            .expect("generator powers form a basis over the twisted subfield");
        Ok(RelView {
            big: big.clone(),
            small: small.clone(),
            twist,
            rank,
            embedding,
            unflatten,
        })
    }

    /// Image of a small-field scalar under the twisted embedding.
    pub fn scalar_image(&self, lambda: &FieldElem) -> FieldElem {
        self.big
            .frobenius(&self.embedding.apply(lambda), self.twist)
    }

    /// Coordinates of x over the twisted subfield w.r.t. the G^t basis.
    pub fn to_coords(&self, x: &FieldElem) -> Vec<FieldElem> {
        let fp = Gf::make(self.big.char(), 1).unwrap();
        let flat: Vec<FieldElem> = x.coeffs.iter().map(|&c| fp.elem(&[c])).collect();
        let sol = self.unflatten.mul_vec(&fp, &flat);
        let s = self.small.degree();
        (0..self.rank)
            .map(|t| {
                let digits: Vec<u64> = (0..s).map(|u| sol[t * s + u].coeffs[0]).collect();
                self.small.elem(&digits)
            })
            .collect()
    }

    pub fn from_coords(&self, coords: &[FieldElem]) -> FieldElem {
        assert_eq!(coords.len(), self.rank);
        let gen = self.big.gen();
        let mut gpow = self.big.one();
        let mut acc = self.big.zero();
        for c in coords {
            let term = self.big.mul(&self.scalar_image(c), &gpow);
            acc = self.big.add(&acc, &term);
            gpow = self.big.mul(&gpow, &gen);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inclusion() {
        let f2 = Gf::make(2, 1).unwrap();
        let f4 = Gf::make(2, 2).unwrap();
        let e = Embedding::new(&f2, &f4).unwrap();
        assert_eq!(e.apply(&f2.one()), f4.one());
        assert_eq!(e.apply(&f2.zero()), f4.zero());
    }

    #[test]
    fn gf4_into_gf16_satisfies_modulus() {
        let f4 = Gf::make(2, 2).unwrap();
        let f16 = Gf::make(2, 4).unwrap();
        let e = Embedding::new(&f4, &f16).unwrap();
        // image of the GF(4) generator is a root of x^2+x+1 in GF(16)
        let img = &e.gen_image;
        let val = f16.add(&f16.add(&f16.mul(img, img), img), &f16.one());
        assert!(f16.is_zero(&val));
    }

    #[test]
    fn embedding_is_ring_hom() {
        let f4 = Gf::make(2, 2).unwrap();
        let f16 = Gf::make(2, 4).unwrap();
        let e = Embedding::new(&f4, &f16).unwrap();
        for a in f4.all_elems() {
            for b in f4.all_elems() {
                assert_eq!(
                    e.apply(&f4.add(&a, &b)),
                    f16.add(&e.apply(&a), &e.apply(&b))
                );
                assert_eq!(
                    e.apply(&f4.mul(&a, &b)),
                    f16.mul(&e.apply(&a), &e.apply(&b))
                );
            }
        }
    }

    #[test]
    fn tower_composition_fixes_prime_field() {
        let f2 = Gf::make(2, 1).unwrap();
        let f4 = Gf::make(2, 2).unwrap();
        let f16 = Gf::make(2, 4).unwrap();
        let lo = Embedding::new(&f2, &f4).unwrap();
        let hi = Embedding::new(&f4, &f16).unwrap();
        let direct = Embedding::new(&f2, &f16).unwrap();
        for a in f2.all_elems() {
            assert_eq!(hi.apply(&lo.apply(&a)), direct.apply(&a));
        }
    }

    #[test]
    fn frobenius_commutes_with_embedding() {
        let f4 = Gf::make(2, 2).unwrap();
        let f16 = Gf::make(2, 4).unwrap();
        let e = Embedding::new(&f4, &f16).unwrap();
        for a in f4.all_elems() {
            for k in 0..4 {
                assert_eq!(
                    f16.frobenius(&e.apply(&a), k),
                    e.apply(&f4.frobenius(&a, k))
                );
            }
        }
    }

    #[test]
    fn roots_are_deterministic_and_distinct() {
        let f64 = Gf::make(2, 6).unwrap();
        let f8 = Gf::make(2, 3).unwrap();
        let roots = roots_in(&f64, f8.modulus());
        assert_eq!(roots.len(), 3);
        let again = roots_in(&f64, f8.modulus());
        assert_eq!(roots, again);
    }

    #[test]
    fn odd_characteristic_roots() {
        let f9 = Gf::make(3, 2).unwrap();
        let f81 = Gf::make(3, 4).unwrap();
        let roots = roots_in(&f81, f9.modulus());
        assert_eq!(roots.len(), 2);
        for r in &roots {
            // r^2 + 1 = 0
            let v = f81.add(&f81.mul(r, r), &f81.one());
            assert!(f81.is_zero(&v));
        }
    }

    #[test]
    fn rel_view_round_trip() {
        let f4 = Gf::make(2, 2).unwrap();
        let f16 = Gf::make(2, 4).unwrap();
        for twist in 0..4 {
            let view = RelView::new(&f16, &f4, twist).unwrap();
            assert_eq!(view.rank, 2);
            for x in f16.all_elems() {
                let coords = view.to_coords(&x);
                assert_eq!(view.from_coords(&coords), x);
            }
        }
    }

    #[test]
    fn rel_view_scalar_action_matches_coords() {
        let f4 = Gf::make(2, 2).unwrap();
        let f16 = Gf::make(2, 4).unwrap();
        let view = RelView::new(&f16, &f4, 1).unwrap();
        for x in f16.all_elems() {
            for lam in f4.all_elems() {
                let scaled = f16.mul(&view.scalar_image(&lam), &x);
                let coords = view.to_coords(&x);
                let scaled_coords: Vec<_> = coords.iter().map(|c| f4.mul(c, &lam)).collect();
                assert_eq!(view.to_coords(&scaled), scaled_coords);
            }
        }
    }
}
