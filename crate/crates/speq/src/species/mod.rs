//! Finite-field species: modulations of absolute valued quivers by Frobenius-
//! twisted field bimodules, their crushing, tensor-algebra graded dimensions,
//! and isomorphism testing.
//!
//! Over a finite base field every division algebra is a field and every
//! bimodule of the right dimensions splits into Frobenius-twisted field
//! summands, so a bimodule is described by a multiset of summands
//! (field GF(q^m), left twist, right twist).

mod frobenius;
mod path_algebra;
mod scalar_ext;

pub use frobenius::{
    frobenius_fixed_dims, species_from_folding, verify_frobenius_iso, FrobeniusReport,
};
pub use path_algebra::{path_algebra_truncated, TruncatedAlgebra};
pub use scalar_ext::scalar_extension_quiver;

use crate::error::{Error, Result};
use crate::gf::Gf;
use crate::quiver::{crush_abs, AbsValuedQuiver, Id};
use std::collections::BTreeMap;

/// The base field GF(q), q = p^e.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Base {
    pub p: u64,
    pub e: usize,
}

impl Base {
    pub fn new(p: u64, e: usize) -> Base {
        Base { p, e }
    }

    pub fn q(&self) -> u64 {
        self.p.pow(self.e as u32)
    }

    pub fn field(&self) -> Result<Gf> {
        Gf::make(self.p, self.e)
    }
}

/// One Frobenius-twisted field summand of an arrow bimodule: the field
/// GF(q^m) with left action embed ∘ frobenius^(e·ltwist) of the head vertex
/// field and right action embed ∘ frobenius^(e·rtwist) of the tail field.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BimodSummand {
    /// Dimension over GF(q); the summand field is GF(q^m).
    pub m: u64,
    /// Left twist in Z/d_head.
    pub ltwist: u64,
    /// Right twist in Z/d_tail.
    pub rtwist: u64,
}

/// A finite-field species: a valued quiver shape, vertex fields GF(q^{d_i}),
/// and per-arrow bimodule summand multisets with Σ m = m_ρ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FqSpecies {
    pub base: Base,
    pub shape: AbsValuedQuiver,
    /// Summand multiset per arrow, aligned with `shape.quiver.arrows`,
    /// each kept sorted.
    pub bimodules: Vec<Vec<BimodSummand>>,
}

impl FqSpecies {
    pub fn new(
        base: Base,
        shape: AbsValuedQuiver,
        mut bimodules: Vec<Vec<BimodSummand>>,
    ) -> FqSpecies {
        assert_eq!(bimodules.len(), shape.quiver.arrows.len());
        for b in bimodules.iter_mut() {
            b.sort();
        }
        FqSpecies {
            base,
            shape,
            bimodules,
        }
    }

    /// The untwisted modulation: each arrow carries the single summand
    /// GF(q^{m_ρ}) with both twists zero.
    pub fn untwisted(base: Base, shape: AbsValuedQuiver) -> FqSpecies {
        let bimodules = shape
            .m
            .iter()
            .map(|&m| {
                vec![BimodSummand {
                    m,
                    ltwist: 0,
                    rtwist: 0,
                }]
            })
            .collect();
        FqSpecies {
            base,
            shape,
            bimodules,
        }
    }

    /// Vertex field K_i = GF(q^{d_i}).
    pub fn vertex_field(&self, v: &str) -> Result<Gf> {
        Gf::make(self.base.p, self.base.e * self.shape.d_of(v) as usize)
    }

    /// Field underlying one bimodule summand: GF(q^m).
    pub fn summand_field(&self, s: &BimodSummand) -> Result<Gf> {
        Gf::make(self.base.p, self.base.e * s.m as usize)
    }

    pub fn summands_of(&self, arrow: &str) -> &[BimodSummand] {
        &self.bimodules[self.shape.quiver.arrow_index(arrow).expect("unknown arrow")]
    }

    pub fn violations(&self) -> Vec<String> {
        let mut out = self.shape.violations();
        if !crate::gf::is_prime(self.base.p) {
            out.push(format!("base characteristic {} is not prime", self.base.p));
        }
        if self.base.e == 0 {
            out.push("base extension degree must be positive".into());
        }
        if !out.is_empty() {
            return out;
        }
        for (a, summands) in self.shape.quiver.arrows.iter().zip(&self.bimodules) {
            let (dt, dh) = (self.shape.d_of(&a.tail), self.shape.d_of(&a.head));
            let total: u64 = summands.iter().map(|s| s.m).sum();
            if total != self.shape.m_of(&a.id) {
                out.push(format!(
                    "arrow {:?}: summand dimensions sum to {total}, shape says {}",
                    a.id,
                    self.shape.m_of(&a.id)
                ));
            }
            for s in summands {
                if s.m % dt != 0 || s.m % dh != 0 {
                    out.push(format!(
                        "arrow {:?}: summand dimension {} is not a common multiple of {dt} and {dh}",
                        a.id, s.m
                    ));
                }
                if s.ltwist >= dh {
                    out.push(format!(
                        "arrow {:?}: left twist {} out of Z/{dh}",
                        a.id, s.ltwist
                    ));
                }
                if s.rtwist >= dt {
                    out.push(format!(
                        "arrow {:?}: right twist {} out of Z/{dt}",
                        a.id, s.rtwist
                    ));
                }
            }
        }
        out
    }

    pub fn validate(&self) -> Result<()> {
        let v = self.violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::Invalid(v))
        }
    }
}

/// Validation report: structural violations, the relative dimensions of each
/// arrow bimodule, and the duality condition, which holds automatically for
/// finite-field modulations.
#[derive(Clone, Debug)]
pub struct SpeciesReport {
    pub violations: Vec<String>,
    /// (arrow id, dim over tail field, dim over head field)
    pub arrow_dims: Vec<(Id, u64, u64)>,
    pub duality: &'static str,
}

pub fn validate_species(s: &FqSpecies) -> SpeciesReport {
    let violations = s.violations();
    let arrow_dims = if violations.is_empty() {
        s.shape
            .quiver
            .arrows
            .iter()
            .zip(&s.shape.m)
            .map(|(a, &m)| {
                (
                    a.id.clone(),
                    m / s.shape.d_of(&a.tail),
                    m / s.shape.d_of(&a.head),
                )
            })
            .collect()
    } else {
        vec![]
    };
    SpeciesReport {
        violations,
        arrow_dims,
        duality: "satisfied by theory for finite-field modulations",
    }
}

/// Crush a species: parallel arrows merge and their summand multisets
/// concatenate.
pub fn crush_species(s: &FqSpecies) -> FqSpecies {
    let crushed = crush_abs(&s.shape);
    let mut per_pair: BTreeMap<(Id, Id), Vec<BimodSummand>> = BTreeMap::new();
    for (a, summands) in s.shape.quiver.arrows.iter().zip(&s.bimodules) {
        per_pair
            .entry((a.tail.clone(), a.head.clone()))
            .or_default()
            .extend(summands.iter().copied());
    }
    let bimodules = crushed
        .quiver
        .arrows
        .iter()
        .map(|a| {
            let mut v = per_pair[&(a.tail.clone(), a.head.clone())].clone();
            v.sort();
            v
        })
        .collect();
    FqSpecies {
        base: s.base,
        shape: crushed,
        bimodules,
    }
}

/// Dimension over GF(q) of the degree-n component of the tensor algebra,
/// for n = 0..=l: the degree-0 part is Π K_i, and each composable path
/// ρ_n ⋯ ρ_1 in the shape contributes (Π m) / (Π intermediate d).
pub fn tensor_graded_dim(s: &FqSpecies, l: usize) -> Result<Vec<u64>> {
    s.validate()?;
    let shape = &s.shape;
    let mut dims = vec![shape.d.iter().sum::<u64>()];
    // frontier: (endpoint vertex index, accumulated dimension)
    let mut frontier: Vec<(usize, u64)> = shape
        .quiver
        .arrows
        .iter()
        .map(|a| {
            (
                shape.quiver.vertex_index(&a.head).unwrap(),
                shape.m_of(&a.id),
            )
        })
        .collect();
    for _n in 1..=l {
        dims.push(frontier.iter().map(|&(_, dim)| dim).sum());
        let mut next = vec![];
        for &(at, dim) in &frontier {
            for a in &shape.quiver.arrows {
                if shape.quiver.vertex_index(&a.tail).unwrap() == at {
                    let m = shape.m_of(&a.id);
                    let d = shape.d_of(&a.tail);
                    assert!(
                        (dim * m).is_multiple_of(d),
                        "graded dimension must stay integral"
                    );
                    next.push((shape.quiver.vertex_index(&a.head).unwrap(), dim * m / d));
                }
            }
        }
        frontier = next;
    }
    dims.truncate(l + 1);
    while dims.len() < l + 1 {
        dims.push(0);
    }
    Ok(dims)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Canonical form of an arrow's bimodule: its decomposition into simple
/// summands. A summand GF(q^m) with twists (ℓ, r) between vertex degrees
/// (d_t, d_h) is m/lcm copies of the simple bimodule of class
/// (r − ℓ) mod gcd(d_t, d_h); the class is a complete invariant under
/// simultaneous Frobenius re-coordinatization.
fn simple_classes(summands: &[BimodSummand], dt: u64, dh: u64) -> BTreeMap<u64, u64> {
    let g = gcd(dt, dh);
    let l = lcm(dt, dh);
    let mut classes: BTreeMap<u64, u64> = BTreeMap::new();
    for s in summands {
        let class = (s.rtwist % g + g - s.ltwist % g) % g;
        *classes.entry(class).or_insert(0) += s.m / l;
    }
    classes
}

/// An isomorphism certificate: bijections on vertices and arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpeciesIso {
    pub vertex_map: BTreeMap<Id, Id>,
    pub arrow_map: BTreeMap<Id, Id>,
}

/// Exhaustive isomorphism test: a valued-quiver isomorphism matching vertex
/// fields, with each arrow's bimodule matched up to simultaneous Frobenius
/// re-coordinatization of its summands.
pub fn species_iso_check(s1: &FqSpecies, s2: &FqSpecies, cap: u64) -> Result<Option<SpeciesIso>> {
    s1.validate()?;
    s2.validate()?;
    if s1.base != s2.base {
        return Ok(None);
    }
    let q1 = &s1.shape.quiver;
    let q2 = &s2.shape.quiver;
    if q1.vertices.len() != q2.vertices.len() || q1.arrows.len() != q2.arrows.len() {
        return Ok(None);
    }
    let n = q1.vertices.len();
    let mut count: u128 = 1;
    for k in 1..=n as u128 {
        count = count.saturating_mul(k);
    }
    if count > cap as u128 {
        return Err(Error::SizeLimitExceeded { needed: count, cap });
    }
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if let Some(iso) = try_vertex_bijection(s1, s2, &perm) {
            return Ok(Some(iso));
        }
        if !next_permutation(&mut perm) {
            return Ok(None);
        }
    }
}

fn try_vertex_bijection(s1: &FqSpecies, s2: &FqSpecies, perm: &[usize]) -> Option<SpeciesIso> {
    let q1 = &s1.shape.quiver;
    let q2 = &s2.shape.quiver;
    for (i, &pi) in perm.iter().enumerate() {
        if s1.shape.d[i] != s2.shape.d[pi] {
            return None;
        }
    }
    let image = |v: &str| -> Id {
        let i = q1.vertex_index(v).unwrap();
        q2.vertices[perm[i]].clone()
    };
    // group arrows of both species by (tail, head) pair and match summand
    // class data arrow by arrow within each group
    let mut arrow_map: BTreeMap<Id, Id> = BTreeMap::new();
    let mut groups: BTreeMap<(Id, Id), (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    for (k, a) in q1.arrows.iter().enumerate() {
        groups
            .entry((image(&a.tail), image(&a.head)))
            .or_default()
            .0
            .push(k);
    }
    for (k, a) in q2.arrows.iter().enumerate() {
        groups
            .entry((a.tail.clone(), a.head.clone()))
            .or_default()
            .1
            .push(k);
    }
    for ((tail, head), (from, to)) in &groups {
        if from.len() != to.len() {
            return None;
        }
        let dt = s2.shape.d_of(tail);
        let dh = s2.shape.d_of(head);
        // canonical multiset per arrow, then match greedily in sorted order
        let mut left: Vec<(BTreeMap<u64, u64>, usize)> = from
            .iter()
            .map(|&k| (simple_classes(&s1.bimodules[k], dt, dh), k))
            .collect();
        let mut right: Vec<(BTreeMap<u64, u64>, usize)> = to
            .iter()
            .map(|&k| (simple_classes(&s2.bimodules[k], dt, dh), k))
            .collect();
        left.sort();
        right.sort();
        for ((c1, k1), (c2, k2)) in left.iter().zip(&right) {
            if c1 != c2 {
                return None;
            }
            arrow_map.insert(q1.arrows[*k1].id.clone(), q2.arrows[*k2].id.clone());
        }
    }
    let vertex_map = q1.vertices.iter().map(|v| (v.clone(), image(v))).collect();
    Some(SpeciesIso {
        vertex_map,
        arrow_map,
    })
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| perm[i] < perm[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
    perm.swap(i, j);
    perm[i + 1..].reverse();
    true
}

/// Tensor rings of acyclic species are isomorphic exactly when the crushed
/// species are isomorphic.
pub fn tensor_ring_iso_check(s1: &FqSpecies, s2: &FqSpecies, cap: u64) -> Result<bool> {
    if !s1.shape.quiver.is_acyclic() || !s2.shape.quiver.is_acyclic() {
        return Err(Error::NotAcyclic);
    }
    Ok(species_iso_check(&crush_species(s1), &crush_species(s2), cap)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::quiver::Quiver;

    const CAP: u64 = 1_000_000;

    fn base2() -> Base {
        Base::new(2, 1)
    }

    #[test]
    fn trivial_species_is_valid() {
        let (q, _) = catalog::fork_with_swap();
        let s = FqSpecies::untwisted(base2(), AbsValuedQuiver::trivial(q));
        assert!(s.violations().is_empty());
    }

    #[test]
    fn report_carries_relative_dims() {
        let s = FqSpecies::untwisted(base2(), catalog::arrow_valued(2, 1, 2));
        let rep = validate_species(&s);
        assert!(rep.violations.is_empty());
        assert_eq!(rep.arrow_dims, vec![("a".to_string(), 1, 2)]);
    }

    #[test]
    fn divisibility_violation_detected() {
        let q = Quiver::new(
            vec!["1".into(), "2".into()],
            vec![crate::quiver::Arrow {
                id: "a".into(),
                tail: "1".into(),
                head: "2".into(),
            }],
        );
        let shape = AbsValuedQuiver::new(q, vec![2, 1], vec![3]);
        let s = FqSpecies::untwisted(base2(), shape);
        assert!(!s.violations().is_empty());
    }

    #[test]
    fn crush_merges_summand_multisets() {
        let (q, _) = catalog::double_arrow();
        let s = FqSpecies::untwisted(base2(), AbsValuedQuiver::trivial(q));
        let c = crush_species(&s);
        assert_eq!(c.shape.quiver.arrows.len(), 1);
        assert_eq!(c.shape.m, vec![2]);
        assert_eq!(
            c.bimodules[0],
            vec![
                BimodSummand {
                    m: 1,
                    ltwist: 0,
                    rtwist: 0
                },
                BimodSummand {
                    m: 1,
                    ltwist: 0,
                    rtwist: 0
                }
            ]
        );
    }

    #[test]
    fn crush_without_parallels_keeps_shape() {
        let s = FqSpecies::untwisted(base2(), catalog::b2_shape());
        let c = crush_species(&s);
        assert_eq!(c.shape, s.shape);
        assert_eq!(c.bimodules, s.bimodules);
    }

    #[test]
    fn crush_of_parallel_extension_fields() {
        // two parallel arrows each carrying GF(q^2)
        let q = Quiver::new(
            vec!["1".into(), "2".into()],
            vec![
                crate::quiver::Arrow {
                    id: "a".into(),
                    tail: "1".into(),
                    head: "2".into(),
                },
                crate::quiver::Arrow {
                    id: "b".into(),
                    tail: "1".into(),
                    head: "2".into(),
                },
            ],
        );
        let shape = AbsValuedQuiver::new(q, vec![1, 1], vec![2, 2]);
        let s = FqSpecies::untwisted(base2(), shape);
        let c = crush_species(&s);
        assert_eq!(c.shape.m, vec![4]);
    }

    #[test]
    fn graded_dims_fork_target() {
        // (2) --(2)--> (1): dims 3, 2, 0
        let s = FqSpecies::untwisted(base2(), catalog::arrow_valued(2, 1, 2));
        assert_eq!(tensor_graded_dim(&s, 2).unwrap(), vec![3, 2, 0]);
    }

    #[test]
    fn graded_dims_fan_target() {
        let s = FqSpecies::untwisted(base2(), catalog::fan_target());
        assert_eq!(tensor_graded_dim(&s, 3).unwrap(), vec![5, 6, 4, 0]);
    }

    #[test]
    fn graded_dims_point() {
        let q = Quiver::new(vec!["1".into()], vec![]);
        let shape = AbsValuedQuiver::new(q, vec![3], vec![]);
        let s = FqSpecies::untwisted(base2(), shape);
        assert_eq!(tensor_graded_dim(&s, 2).unwrap(), vec![3, 0, 0]);
    }

    #[test]
    fn graded_dims_survive_crush() {
        let (q, _) = catalog::double_arrow();
        let s = FqSpecies::untwisted(base2(), AbsValuedQuiver::trivial(q));
        let c = crush_species(&s);
        assert_eq!(
            tensor_graded_dim(&s, 4).unwrap(),
            tensor_graded_dim(&c, 4).unwrap()
        );
    }

    #[test]
    fn species_iso_self() {
        let s = FqSpecies::untwisted(base2(), catalog::b2_shape());
        let iso = species_iso_check(&s, &s, CAP).unwrap().unwrap();
        assert!(iso.vertex_map.iter().all(|(k, v)| k == v));
    }

    #[test]
    fn double_arrow_crush_matches_extension_field_arrow() {
        // (1) ⇉ (1) with trivial bimodules crushes to the same species as a
        // single arrow carrying GF(q^2)
        let (q, _) = catalog::double_arrow();
        let s1 = FqSpecies::untwisted(base2(), AbsValuedQuiver::trivial(q));
        let s2 = FqSpecies::untwisted(base2(), catalog::arrow_valued(1, 1, 2));
        assert!(tensor_ring_iso_check(&s1, &s2, CAP).unwrap());
    }

    #[test]
    fn twisted_bimodule_is_not_isomorphic_to_untwisted() {
        // GF(4) → GF(4), bimodule GF(4): untwisted vs right twist 1
        let shape = catalog::arrow_valued(2, 2, 2);
        let s1 = FqSpecies::untwisted(base2(), shape.clone());
        let s2 = FqSpecies::new(
            base2(),
            shape,
            vec![vec![BimodSummand {
                m: 2,
                ltwist: 0,
                rtwist: 1,
            }]],
        );
        assert!(species_iso_check(&s1, &s2, CAP).unwrap().is_none());
    }

    #[test]
    fn twist_invariant_respects_recoordinatization() {
        // twists (1, 1) are a simultaneous re-coordinatization of (0, 0)
        let shape = catalog::arrow_valued(2, 2, 2);
        let s1 = FqSpecies::untwisted(base2(), shape.clone());
        let s2 = FqSpecies::new(
            base2(),
            shape,
            vec![vec![BimodSummand {
                m: 2,
                ltwist: 1,
                rtwist: 1,
            }]],
        );
        assert!(species_iso_check(&s1, &s2, CAP).unwrap().is_some());
    }

    #[test]
    fn different_vertex_fields_never_match() {
        let s1 = FqSpecies::untwisted(base2(), catalog::arrow_valued(2, 2, 2));
        let s2 = FqSpecies::untwisted(base2(), catalog::arrow_valued(3, 3, 3));
        assert!(species_iso_check(&s1, &s2, CAP).unwrap().is_none());
        assert!(!tensor_ring_iso_check(&s1, &s2, CAP).unwrap());
    }

    #[test]
    fn species_iso_to_own_crush() {
        let (q, _) = catalog::double_arrow();
        let s = FqSpecies::untwisted(base2(), AbsValuedQuiver::trivial(q));
        assert!(tensor_ring_iso_check(&s, &crush_species(&s), CAP).unwrap());
    }

    #[test]
    fn cyclic_species_rejected_by_tensor_iso() {
        let q = Quiver::new(
            vec!["1".into(), "2".into()],
            vec![
                crate::quiver::Arrow {
                    id: "a".into(),
                    tail: "1".into(),
                    head: "2".into(),
                },
                crate::quiver::Arrow {
                    id: "b".into(),
                    tail: "2".into(),
                    head: "1".into(),
                },
            ],
        );
        let s = FqSpecies::untwisted(base2(), AbsValuedQuiver::trivial(q));
        assert!(matches!(
            tensor_ring_iso_check(&s, &s, CAP),
            Err(Error::NotAcyclic)
        ));
    }
}
