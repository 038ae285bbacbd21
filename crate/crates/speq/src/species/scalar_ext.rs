//! Scalar extension of a tensor algebra to a big enough finite field, where
//! it becomes a path algebra: the quiver has one vertex per primitive
//! idempotent (a Frobenius class of a vertex field) and arrow multiplicities
//! given by how each bimodule summand's tensor components meet the
//! idempotent classes.

use super::FqSpecies;
use crate::error::{Error, Result};
use crate::quiver::{Arrow, Quiver};

/// The quiver whose path algebra is the scalar extension of the tensor
/// algebra of `s`. Vertex `v:c` is the Frobenius class c of vertex field v;
/// the tensor component c of a summand with twists (ℓ, r) joins tail class
/// (c + r) mod d_tail to head class (c + ℓ) mod d_head.
pub fn scalar_extension_quiver(s: &FqSpecies) -> Result<Quiver> {
    s.validate()?;
    if !s.shape.quiver.is_acyclic() {
        return Err(Error::NotAcyclic);
    }
    let mut vertices = vec![];
    for (v, &d) in s.shape.quiver.vertices.iter().zip(&s.shape.d) {
        for c in 0..d {
            vertices.push(format!("{v}:{c}"));
        }
    }
    let mut arrows = vec![];
    for (a, summands) in s.shape.quiver.arrows.iter().zip(&s.bimodules) {
        let dt = s.shape.d_of(&a.tail);
        let dh = s.shape.d_of(&a.head);
        for (si, summand) in summands.iter().enumerate() {
            for c in 0..summand.m {
                let tail_class = (c + summand.rtwist) % dt;
                let head_class = (c + summand.ltwist) % dh;
                arrows.push(Arrow {
                    id: format!("{}:{si}:{c}", a.id),
                    tail: format!("{}:{tail_class}", a.tail),
                    head: format!("{}:{head_class}", a.head),
                });
            }
        }
    }
    Ok(Quiver::new(vertices, arrows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::gf::{Embedding, FieldElem, Gf, RelView};
    use crate::linalg::Mat;
    use crate::species::{species_from_folding, Base, FqSpecies};
    use std::collections::BTreeMap;

    /// Arrow multiplicities computed the long way: build the idempotents of
    /// GF(q^N) ⊗ K over an explicit extension and take ranks of projector
    /// products on GF(q^N) ⊗ M. Independent of the class bookkeeping above.
    fn explicit_arrow_counts(s: &FqSpecies, n_ext: u64) -> BTreeMap<(String, String), u64> {
        let base = s.base;
        let big = Gf::make(base.p, base.e * n_ext as usize).unwrap();
        let fq = base.field().unwrap();
        let embed_q = Embedding::new(&fq, &big).unwrap();
        let mut counts: BTreeMap<(String, String), u64> = BTreeMap::new();

        for (a, summands) in s.shape.quiver.arrows.iter().zip(&s.bimodules) {
            let dt = s.shape.d_of(&a.tail) as usize;
            let dh = s.shape.d_of(&a.head) as usize;
            let kt = s.vertex_field(&a.tail).unwrap();
            let kh = s.vertex_field(&a.head).unwrap();
            for summand in summands {
                let mfield = s.summand_field(summand).unwrap();
                let mdim = summand.m as usize;
                // coordinates of M over GF(q) in the generator-power basis
                let view = RelView::new(&mfield, &fq, 0).unwrap();
                assert_eq!(view.rank, mdim);
                // operator of a twisted scalar action, as a matrix over big
                let action = |scalar: &FieldElem| -> Mat {
                    let mut op = Mat::zero(&big, mdim, mdim);
                    let gen = mfield.gen();
                    let mut gpow = mfield.one();
                    for t in 0..mdim {
                        let col = view.to_coords(&mfield.mul(scalar, &gpow));
                        for (i, c) in col.iter().enumerate() {
                            *op.at_mut(i, t) = embed_q.apply(c);
                        }
                        gpow = mfield.mul(&gpow, &gen);
                    }
                    op
                };
                let left_gen = mfield.frobenius(
                    &Embedding::new(&kh, &mfield).unwrap().apply(&kh.gen()),
                    base.e * summand.ltwist as usize,
                );
                let right_gen = mfield.frobenius(
                    &Embedding::new(&kt, &mfield).unwrap().apply(&kt.gen()),
                    base.e * summand.rtwist as usize,
                );
                let lop = action(&left_gen);
                let rop = action(&right_gen);
                let head_projs = idempotent_projectors(&big, &kh, dh, &lop, base.e);
                let tail_projs = idempotent_projectors(&big, &kt, dt, &rop, base.e);
                for (u, eu) in head_projs.iter().enumerate() {
                    for (cls, es) in tail_projs.iter().enumerate() {
                        let rank = eu.mul(&big, es).rank(&big) as u64;
                        if rank > 0 {
                            *counts
                                .entry((format!("{}:{cls}", a.tail), format!("{}:{u}", a.head)))
                                .or_insert(0) += rank;
                        }
                    }
                }
            }
        }
        counts
    }

    /// Projectors onto the Frobenius-class components of GF(q^N) ⊗ K acting
    /// through the given operator of the field generator.
    fn idempotent_projectors(big: &Gf, k: &Gf, d: usize, gen_op: &Mat, e: usize) -> Vec<Mat> {
        // conjugates χ_s(g) = frobenius^(e·s) of the embedded generator
        let embed = Embedding::new(k, big).unwrap();
        let conjugates: Vec<FieldElem> = (0..d)
            .map(|s| big.frobenius(&embed.apply(&k.gen()), e * s))
            .collect();
        // Vandermonde solve: coefficients of the idempotent e_u as a
        // polynomial in the generator
        (0..d)
            .map(|u| {
                let mut vand = Mat::zero(big, d, d);
                for (s, conj) in conjugates.iter().enumerate() {
                    let mut pow = big.one();
                    for t in 0..d {
                        *vand.at_mut(s, t) = pow.clone();
                        pow = big.mul(&pow, conj);
                    }
                }
                let mut rhs = vec![big.zero(); d];
                rhs[u] = big.one();
                let coeffs = vand.solve(big, &rhs).expect("distinct conjugates");
                // Σ c_t · gen_op^t
                let n = gen_op.rows;
                let mut acc = Mat::zero(big, n, n);
                let mut pow = Mat::identity(big, n);
                for c in &coeffs {
                    let mut term = pow.clone();
                    for x in term.data.iter_mut() {
                        *x = big.mul(x, c);
                    }
                    acc = acc.add(big, &term);
                    pow = pow.mul(big, gen_op);
                }
                acc
            })
            .collect()
    }

    fn bookkeeping_counts(s: &FqSpecies) -> BTreeMap<(String, String), u64> {
        let q = scalar_extension_quiver(s).unwrap();
        let mut counts = BTreeMap::new();
        for a in &q.arrows {
            *counts.entry((a.tail.clone(), a.head.clone())).or_insert(0) += 1;
        }
        counts
    }

    #[test]
    fn split_pair_gives_two_double_arrows() {
        let s = catalog::ext_pair_split(Base::new(2, 1));
        let q = scalar_extension_quiver(&s).unwrap();
        assert_eq!(q.vertices.len(), 4);
        assert_eq!(q.arrows.len(), 4);
        let counts = bookkeeping_counts(&s);
        // two vertex pairs, each carrying a double arrow
        assert_eq!(counts.len(), 2);
        assert!(counts.values().all(|&c| c == 2));
    }

    #[test]
    fn mixed_pair_gives_complete_bipartite() {
        let s = catalog::ext_pair_mixed(Base::new(2, 1));
        let q = scalar_extension_quiver(&s).unwrap();
        assert_eq!(q.vertices.len(), 4);
        assert_eq!(q.arrows.len(), 4);
        let counts = bookkeeping_counts(&s);
        // four distinct vertex pairs, single arrows: complete bipartite
        assert_eq!(counts.len(), 4);
        assert!(counts.values().all(|&c| c == 1));
    }

    #[test]
    fn trivial_species_returns_the_quiver_itself() {
        let g = catalog::a2();
        let s = FqSpecies::untwisted(Base::new(2, 1), g.clone());
        let q = scalar_extension_quiver(&s).unwrap();
        assert_eq!(q.vertices, vec!["1:0".to_string(), "2:0".to_string()]);
        assert_eq!(q.arrows.len(), 1);
    }

    #[test]
    fn counts_match_dimension_bookkeeping() {
        for s in [
            catalog::ext_pair_split(Base::new(2, 1)),
            catalog::ext_pair_mixed(Base::new(3, 1)),
            FqSpecies::untwisted(Base::new(2, 1), catalog::indefinite_32()),
        ] {
            let q = scalar_extension_quiver(&s).unwrap();
            assert_eq!(q.vertices.len() as u64, s.shape.d.iter().sum::<u64>());
            assert_eq!(q.arrows.len() as u64, s.shape.m.iter().sum::<u64>());
        }
    }

    #[test]
    fn explicit_idempotents_agree_with_bookkeeping() {
        // the independent route: explicit idempotent projectors over
        // GF(q^N), checked at N and at 2N
        for s in [
            catalog::ext_pair_split(Base::new(2, 1)),
            catalog::ext_pair_mixed(Base::new(2, 1)),
        ] {
            let book = bookkeeping_counts(&s);
            assert_eq!(explicit_arrow_counts(&s, 4), book);
            assert_eq!(explicit_arrow_counts(&s, 8), book);
        }
        let (q, sig) = catalog::bipartite_3x2();
        let sp = species_from_folding(&q, &sig, Base::new(2, 1)).unwrap();
        let book = bookkeeping_counts(&sp);
        assert_eq!(explicit_arrow_counts(&sp, 6), book);
        assert_eq!(explicit_arrow_counts(&sp, 12), book);
    }

    #[test]
    fn folded_bipartite_extension_recovers_complete_bipartite() {
        // the species of the 3×2 folding scalar-extends back to a complete
        // bipartite 3×2 quiver
        let (q, sig) = catalog::bipartite_3x2();
        let sp = species_from_folding(&q, &sig, Base::new(2, 1)).unwrap();
        let ext = scalar_extension_quiver(&sp).unwrap();
        assert_eq!(ext.vertices.len(), 5);
        assert_eq!(ext.arrows.len(), 6);
        let counts = bookkeeping_counts(&sp);
        assert_eq!(counts.len(), 6);
        assert!(counts.values().all(|&c| c == 1));
    }

    #[test]
    fn folded_pair_species_reproduce_extension_patterns() {
        // where gcd of the endpoint values exceeds one, the twists extracted
        // by folding are the whole story: the parallel pairing folds to the
        // split species, the crossed pairing to the mixed one, and scalar
        // extension reproduces each original quiver's arrow pattern
        let base = Base::new(2, 1);
        let (q, sig) = catalog::pairs_with_parallel_arrows();
        let sp = species_from_folding(&q, &sig, base).unwrap();
        assert!(crate::species::tensor_ring_iso_check(
            &sp,
            &catalog::ext_pair_split(base),
            1_000_000
        )
        .unwrap());
        assert!(!crate::species::tensor_ring_iso_check(
            &sp,
            &catalog::ext_pair_mixed(base),
            1_000_000
        )
        .unwrap());
        let ext = scalar_extension_quiver(&sp).unwrap();
        let patterns: std::collections::BTreeSet<(String, String)> = ext
            .arrows
            .iter()
            .map(|a| (a.tail.clone(), a.head.clone()))
            .collect();
        assert_eq!(ext.arrows.len(), 4);
        assert_eq!(patterns.len(), 2, "double arrows on two vertex pairs");

        let (q, sig) = catalog::pairs_with_crossed_arrows();
        let sp = species_from_folding(&q, &sig, base).unwrap();
        assert!(crate::species::tensor_ring_iso_check(
            &sp,
            &catalog::ext_pair_mixed(base),
            1_000_000
        )
        .unwrap());
        assert!(!crate::species::tensor_ring_iso_check(
            &sp,
            &catalog::ext_pair_split(base),
            1_000_000
        )
        .unwrap());
        let ext = scalar_extension_quiver(&sp).unwrap();
        let patterns: std::collections::BTreeSet<(String, String)> = ext
            .arrows
            .iter()
            .map(|a| (a.tail.clone(), a.head.clone()))
            .collect();
        assert_eq!(ext.arrows.len(), 4);
        assert_eq!(patterns.len(), 4, "complete bipartite single arrows");
    }

    #[test]
    fn cycles_are_rejected() {
        let q = Quiver::new(
            vec!["1".into()],
            vec![Arrow {
                id: "t".into(),
                tail: "1".into(),
                head: "1".into(),
            }],
        );
        let s = FqSpecies::untwisted(Base::new(2, 1), crate::quiver::AbsValuedQuiver::trivial(q));
        assert!(matches!(
            scalar_extension_quiver(&s),
            Err(Error::NotAcyclic)
        ));
    }
}
