//! Automorphism twists of plain-quiver representations, invariant
//! decompositions, idempotent splitting, and the folding map on dimension
//! vectors.

use super::{class_of, hom_elements, submodules, RepCtx, Representation};
use crate::error::{Error, Result};
use crate::forms::DimVec;
use crate::quiver::{Quiver, QuiverAutomorphism};
use std::collections::BTreeMap;

fn require_trivial_species(ctx: &RepCtx) -> Result<()> {
    let trivial =
        ctx.species.shape.d.iter().all(|&d| d == 1) && ctx.species.shape.m.iter().all(|&m| m == 1);
    if trivial {
        Ok(())
    } else {
        Err(Error::SpeciesMismatch(
            "twisting is defined for plain-quiver representations only".into(),
        ))
    }
}

/// The twisted representation V^σ with V^σ_i = V_{σ^{-1}(i)} and
/// f^σ_ρ = f_{σ^{-1}(ρ)}.
pub fn sigma_twist(
    ctx: &RepCtx,
    v: &Representation,
    s: &QuiverAutomorphism,
) -> Result<Representation> {
    require_trivial_species(ctx)?;
    let q = &ctx.species.shape.quiver;
    s.validate(q)?;
    let inv_vertex: BTreeMap<&str, &str> = s
        .vertex_map
        .iter()
        .map(|(k, v)| (v.as_str(), k.as_str()))
        .collect();
    let inv_arrow: BTreeMap<&str, &str> = s
        .arrow_map
        .iter()
        .map(|(k, v)| (v.as_str(), k.as_str()))
        .collect();
    let dims: Vec<u64> = q
        .vertices
        .iter()
        .map(|i| v.dims[q.vertex_index(inv_vertex[i.as_str()]).unwrap()])
        .collect();
    let matrices = q
        .arrows
        .iter()
        .map(|a| {
            let src = q.arrow_index(inv_arrow[a.id.as_str()]).unwrap();
            v.matrices[src].clone()
        })
        .collect();
    Ok(Representation { dims, matrices })
}

/// V is invariant when V^σ ≅ V.
pub fn is_invariant(
    ctx: &RepCtx,
    v: &Representation,
    s: &QuiverAutomorphism,
    cap: u64,
) -> Result<bool> {
    let twisted = sigma_twist(ctx, v, s)?;
    super::is_isomorphic(ctx, v, &twisted, cap)
}

/// Split off the image of an idempotent endomorphism as a subrepresentation.
fn image_subrep(ctx: &RepCtx, v: &Representation, e: &super::Morphism) -> Representation {
    let bases: Vec<crate::linalg::Mat> = e
        .maps
        .iter()
        .zip(&ctx.vertex_fields)
        .map(|(m, gf)| {
            // column space of m: reduce the transpose and transpose back
            let mut rows = m.transpose(gf);
            let pivots = rows.rref(gf);
            let mut basis = crate::linalg::Mat::zero(gf, m.rows, pivots.len());
            for (r, _) in pivots.iter().enumerate() {
                for c in 0..m.rows {
                    *basis.at_mut(c, r) = rows.at(r, c).clone();
                }
            }
            basis
        })
        .collect();
    // the image of an idempotent endomorphism is closed under the arrow
    // maps, so this always finds it among the submodules
    let subs = submodules(ctx, v, u64::MAX).expect("submodule scan");
    for data in subs {
        if data
            .bases
            .iter()
            .zip(&bases)
            .zip(&ctx.vertex_fields)
            .all(|((a, b), gf)| a.cols == b.cols && a.hcat(gf, b).rank(gf) == a.cols)
        {
            return data.sub;
        }
    }
    unreachable!("idempotent image is a subrepresentation");
}

/// Decompose into indecomposable summands by repeated idempotent splitting.
pub fn decompose(ctx: &RepCtx, v: &Representation, cap: u64) -> Result<Vec<Representation>> {
    if v.is_zero_rep() {
        return Ok(vec![]);
    }
    let elements = hom_elements(ctx, v, v, cap)?;
    for e in &elements {
        if e.is_zero(ctx) || e.is_identity(ctx) {
            continue;
        }
        if e.compose(ctx, e) == *e {
            let image = image_subrep(ctx, v, e);
            // complementary idempotent 1 - e
            let one_minus = super::Morphism {
                maps: e
                    .maps
                    .iter()
                    .zip(&ctx.vertex_fields)
                    .map(|(m, gf)| crate::linalg::Mat::identity(gf, m.rows).sub(gf, m))
                    .collect(),
            };
            let co_image = image_subrep(ctx, v, &one_minus);
            let mut out = decompose(ctx, &image, cap)?;
            out.extend(decompose(ctx, &co_image, cap)?);
            return Ok(out);
        }
    }
    Ok(vec![v.clone()])
}

/// One σ-orbit of indecomposable summand classes: labels in twist order,
/// with a common multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistOrbit {
    pub labels: Vec<String>,
    pub multiplicity: u64,
}

/// Orbit structure of the indecomposable summands of an invariant
/// representation under the twist action. An invariant-indecomposable
/// representation yields a single orbit of multiplicity one:
/// W ⊕ W^σ ⊕ ⋯ ⊕ W^(σ^(r-1)).
pub fn invariant_decompose(
    ctx: &RepCtx,
    v: &Representation,
    s: &QuiverAutomorphism,
    cap: u64,
) -> Result<Vec<TwistOrbit>> {
    require_trivial_species(ctx)?;
    let summands = decompose(ctx, v, cap)?;
    let mut counts: BTreeMap<String, (u64, Representation)> = BTreeMap::new();
    for w in summands {
        let (classes, idx) = class_of(ctx, &w, cap)?;
        let label = classes.classes[idx].label.clone();
        counts
            .entry(label)
            .and_modify(|(c, _)| *c += 1)
            .or_insert((1, w));
    }
    let mut orbits = vec![];
    while let Some(start) = counts.keys().next().cloned() {
        let (mult, rep) = counts.remove(&start).unwrap();
        let mut labels = vec![start.clone()];
        let mut cur = rep;
        loop {
            cur = sigma_twist(ctx, &cur, s)?;
            let (classes, idx) = class_of(ctx, &cur, cap)?;
            let label = classes.classes[idx].label.clone();
            if label == start {
                break;
            }
            // twisting permutes the summand multiset of an invariant
            // representation, so the orbit stays inside the remaining counts
            let Some((m2, _)) = counts.remove(&label) else {
                return Err(Error::Invalid(vec![
                    "representation is not invariant under the automorphism".into(),
                ]));
            };
            if m2 != mult {
                return Err(Error::Invalid(vec![
                    "representation is not invariant under the automorphism".into(),
                ]));
            }
            labels.push(label);
        }
        orbits.push(TwistOrbit {
            labels,
            multiplicity: mult,
        });
    }
    Ok(orbits)
}

/// Push a σ-constant dimension vector down to the fold: the orbit of i gets
/// the common value α_i. Entries are indexed by the sorted vertex lists on
/// both sides.
pub fn fold_dim_vector(q: &Quiver, s: &QuiverAutomorphism, alpha: &[i64]) -> Result<DimVec> {
    s.validate(q)?;
    if alpha.len() != q.vertices.len() {
        return Err(Error::IndexMismatch(format!(
            "vector has {} entries, quiver has {} vertices",
            alpha.len(),
            q.vertices.len()
        )));
    }
    let orbits = s.vertex_orbits(q);
    for orbit in &orbits {
        let first = alpha[q.vertex_index(&orbit[0]).unwrap()];
        for v in orbit {
            if alpha[q.vertex_index(v).unwrap()] != first {
                return Err(Error::NotSigmaConstant(format!(
                    "orbit of {:?} carries different values",
                    orbit[0]
                )));
            }
        }
    }
    let mut reps: Vec<(&String, i64)> = orbits
        .iter()
        .map(|o| (&o[0], alpha[q.vertex_index(&o[0]).unwrap()]))
        .collect();
    reps.sort();
    Ok(reps.into_iter().map(|(_, v)| v).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::quiver::AbsValuedQuiver;
    use crate::rep::{direct_sum, RepCtx, Representation};
    use crate::species::Base;

    const CAP: u64 = 1_000_000;

    fn fork_ctx() -> (RepCtx, QuiverAutomorphism) {
        let (q, s) = catalog::fork_with_swap();
        let ctx = RepCtx::new(&catalog::untwisted(
            Base::new(2, 1),
            AbsValuedQuiver::trivial(q),
        ))
        .unwrap();
        (ctx, s)
    }

    #[test]
    fn identity_twist_is_identity() {
        let (ctx, _) = fork_ctx();
        let id = QuiverAutomorphism::identity(&ctx.species.shape.quiver);
        let v = Representation::simple(&ctx, 0);
        assert_eq!(sigma_twist(&ctx, &v, &id).unwrap(), v);
    }

    #[test]
    fn twist_iterates_like_the_automorphism() {
        let (ctx, s) = fork_ctx();
        let v = Representation::simple(&ctx, 0);
        let once = sigma_twist(&ctx, &v, &s).unwrap();
        let twice = sigma_twist(&ctx, &once, &s).unwrap();
        assert_eq!(twice, v);
        assert_ne!(once, v);
    }

    #[test]
    fn swapped_sum_is_invariant_lone_simple_is_not() {
        let (ctx, s) = fork_ctx();
        // vertices sorted "1", "2", "3": simples 0 and 2 are the outer ones
        let s1 = Representation::simple(&ctx, 0);
        let s3 = Representation::simple(&ctx, 2);
        let sum = direct_sum(&ctx, &s1, &s3);
        assert!(is_invariant(&ctx, &sum, &s, CAP).unwrap());
        assert!(!is_invariant(&ctx, &s1, &s, CAP).unwrap());
    }

    #[test]
    fn twist_rejects_genuinely_valued_species() {
        let ctx = RepCtx::new(&catalog::untwisted(Base::new(2, 1), catalog::b2_shape())).unwrap();
        let v = Representation::simple(&ctx, 0);
        let id = QuiverAutomorphism::identity(&ctx.species.shape.quiver);
        assert!(matches!(
            sigma_twist(&ctx, &v, &id),
            Err(Error::SpeciesMismatch(_))
        ));
    }

    #[test]
    fn decompose_splits_split_sums() {
        let (ctx, _) = fork_ctx();
        let s1 = Representation::simple(&ctx, 0);
        let s2 = Representation::simple(&ctx, 1);
        let sum = direct_sum(&ctx, &direct_sum(&ctx, &s1, &s2), &s1);
        let parts = decompose(&ctx, &sum, CAP).unwrap();
        assert_eq!(parts.len(), 3);
        let mut dimvecs: Vec<Vec<u64>> = parts.iter().map(|p| p.dims.clone()).collect();
        dimvecs.sort();
        assert_eq!(dimvecs, vec![vec![0, 1, 0], vec![1, 0, 0], vec![1, 0, 0]]);
    }

    #[test]
    fn krull_schmidt_multiset_is_splitting_order_independent() {
        // decompose in two different summand orders and compare label
        // multisets
        let (ctx, _) = fork_ctx();
        let s1 = Representation::simple(&ctx, 0);
        let s2 = Representation::simple(&ctx, 1);
        let v1 = direct_sum(&ctx, &direct_sum(&ctx, &s1, &s2), &s1);
        let v2 = direct_sum(&ctx, &s1, &direct_sum(&ctx, &s1, &s2));
        let labels = |v: &Representation| -> Vec<String> {
            let mut out: Vec<String> = decompose(&ctx, v, CAP)
                .unwrap()
                .iter()
                .map(|w| {
                    let (classes, idx) = class_of(&ctx, w, CAP).unwrap();
                    classes.classes[idx].label.clone()
                })
                .collect();
            out.sort();
            out
        };
        assert_eq!(labels(&v1), labels(&v2));
    }

    #[test]
    fn invariant_decompose_pairs_swapped_simples() {
        let (ctx, s) = fork_ctx();
        let s1 = Representation::simple(&ctx, 0);
        let s3 = Representation::simple(&ctx, 2);
        let sum = direct_sum(&ctx, &s1, &s3);
        let orbits = invariant_decompose(&ctx, &sum, &s, CAP).unwrap();
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].labels.len(), 2);
        assert_eq!(orbits[0].multiplicity, 1);
        // the middle simple is fixed by the twist
        let s2 = Representation::simple(&ctx, 1);
        let orbits = invariant_decompose(&ctx, &s2, &s, CAP).unwrap();
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].labels.len(), 1);
    }

    #[test]
    fn invariant_decompose_rejects_non_invariant_input() {
        let (ctx, s) = fork_ctx();
        let s1 = Representation::simple(&ctx, 0);
        assert!(invariant_decompose(&ctx, &s1, &s, CAP).is_err());
    }

    #[test]
    fn fold_dim_vector_on_bipartite() {
        let (q, s) = catalog::bipartite_3x2();
        let alpha = vec![1i64; 5];
        assert_eq!(fold_dim_vector(&q, &s, &alpha).unwrap(), vec![1, 1]);
    }

    #[test]
    fn fold_dim_vector_of_orbit_indicator() {
        let (q, s) = catalog::fork_with_swap();
        // vertices sorted "1","2","3"; orbit {1,3} indicator
        let alpha = vec![1i64, 0, 1];
        assert_eq!(fold_dim_vector(&q, &s, &alpha).unwrap(), vec![1, 0]);
    }

    #[test]
    fn fold_dim_vector_rejects_nonconstant() {
        let (q, s) = catalog::bipartite_3x2();
        let alpha = vec![1i64, 1, 2, 1, 1];
        assert!(matches!(
            fold_dim_vector(&q, &s, &alpha),
            Err(Error::NotSigmaConstant(_))
        ));
    }
}
