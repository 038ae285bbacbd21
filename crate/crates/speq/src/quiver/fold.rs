//! Folding a quiver with automorphism into a valued quiver, the explicit
//! unfolding construction, crushing of parallel arrows, and the passage
//! between absolute and relative valuations.

use super::{AbsValuedQuiver, Arrow, Id, Quiver, QuiverAutomorphism, RelValuedQuiver};
use crate::error::{Error, Result};
use crate::rational::Rational;
use std::collections::BTreeMap;

/// Fold a quiver with automorphism: vertices and arrows become orbits,
/// labelled by their least member, and values are orbit sizes.
pub fn fold(q: &Quiver, s: &QuiverAutomorphism) -> Result<AbsValuedQuiver> {
    s.validate(q)?;
    let vorbits = s.vertex_orbits(q);
    let aorbits = s.arrow_orbits(q);
    let mut vclass: BTreeMap<&Id, &Id> = BTreeMap::new();
    for orbit in &vorbits {
        for v in orbit {
            vclass.insert(v, &orbit[0]);
        }
    }
    let vertices: Vec<Id> = vorbits.iter().map(|o| o[0].clone()).collect();
    let arrows: Vec<Arrow> = aorbits
        .iter()
        .map(|o| {
            let rep = q.arrow(&o[0]).unwrap();
            Arrow {
                id: o[0].clone(),
                tail: vclass[&rep.tail].clone(),
                head: vclass[&rep.head].clone(),
            }
        })
        .collect();
    let quiver = Quiver::new(vertices, arrows);
    let d = quiver
        .vertices
        .iter()
        .map(|v| vorbits.iter().find(|o| &o[0] == v).unwrap().len() as u64)
        .collect();
    let m = quiver
        .arrows
        .iter()
        .map(|a| aorbits.iter().find(|o| o[0] == a.id).unwrap().len() as u64)
        .collect();
    let g = AbsValuedQuiver::new(quiver, d, m);
    g.validate()?;
    Ok(g)
}

/// Representative of x mod y in {1, ..., y}.
fn rep1(x: u64, y: u64) -> u64 {
    (x + y - 1) % y + 1
}

/// Unfold a valued quiver into a quiver with automorphism that folds back
/// into it. Vertex j of the fibre over i is labelled `v:<i>:<j>`, arrow k of
/// the fibre over ρ is `a:<ρ>:<k>`, indices 1-based.
pub fn unfold(g: &AbsValuedQuiver) -> Result<(Quiver, QuiverAutomorphism)> {
    g.validate()?;
    let mut vertices = vec![];
    let mut vertex_map = BTreeMap::new();
    for (v, &d) in g.quiver.vertices.iter().zip(&g.d) {
        for j in 1..=d {
            let name = format!("v:{v}:{j}");
            vertex_map.insert(name.clone(), format!("v:{v}:{}", rep1(j + 1, d)));
            vertices.push(name);
        }
    }
    let mut arrows = vec![];
    let mut arrow_map = BTreeMap::new();
    for (a, &m) in g.quiver.arrows.iter().zip(&g.m) {
        let dt = g.d_of(&a.tail);
        let dh = g.d_of(&a.head);
        for k in 1..=m {
            let name = format!("a:{}:{k}", a.id);
            arrow_map.insert(name.clone(), format!("a:{}:{}", a.id, rep1(k + 1, m)));
            arrows.push(Arrow {
                id: name,
                tail: format!("v:{}:{}", a.tail, rep1(k, dt)),
                head: format!("v:{}:{}", a.head, rep1(k, dh)),
            });
        }
    }
    let quiver = Quiver::new(vertices, arrows);
    let sigma = QuiverAutomorphism {
        vertex_map,
        arrow_map,
    };
    sigma.validate(&quiver)?;
    Ok((quiver, sigma))
}

/// Undo the label decoration of `unfold` on a fold of its output: orbit
/// labels of the form `v:<x>:1` / `a:<x>:1` become `<x>` again, so that
/// folding an unfolded quiver reproduces the original valued quiver exactly.
pub fn strip_unfold_labels(g: &AbsValuedQuiver) -> AbsValuedQuiver {
    let strip = |id: &str, prefix: char| -> Id {
        let parts: Vec<&str> = id.splitn(3, ':').collect();
        match parts.as_slice() {
            [p, mid, _idx] if p.len() == 1 && p.starts_with(prefix) => mid.to_string(),
            _ => id.to_string(),
        }
    };
    let vertices: Vec<Id> = g.quiver.vertices.iter().map(|v| strip(v, 'v')).collect();
    let arrows: Vec<Arrow> = g
        .quiver
        .arrows
        .iter()
        .map(|a| Arrow {
            id: strip(&a.id, 'a'),
            tail: strip(&a.tail, 'v'),
            head: strip(&a.head, 'v'),
        })
        .collect();
    let mut pairs: Vec<(Id, u64)> = vertices.iter().cloned().zip(g.d.iter().copied()).collect();
    pairs.sort();
    let mut apairs: Vec<(Arrow, u64)> = arrows.into_iter().zip(g.m.iter().copied()).collect();
    apairs.sort_by(|a, b| a.0.id.cmp(&b.0.id));
    let quiver = Quiver::new(
        pairs.iter().map(|(v, _)| v.clone()).collect(),
        apairs.iter().map(|(a, _)| a.clone()).collect(),
    );
    let d = pairs.into_iter().map(|(_, d)| d).collect();
    let m = apairs.into_iter().map(|(_, m)| m).collect();
    AbsValuedQuiver::new(quiver, d, m)
}

/// The forgetful passage from absolute to relative valuations:
/// an arrow ρ: i → j with value m over vertices (d_i, d_j) gets the pair
/// (m/d_j, m/d_i).
pub fn functor_f(g: &AbsValuedQuiver) -> RelValuedQuiver {
    let dval = g
        .quiver
        .arrows
        .iter()
        .zip(&g.m)
        .map(|(a, &m)| (m / g.d_of(&a.head), m / g.d_of(&a.tail)))
        .collect();
    RelValuedQuiver::new(g.quiver.clone(), dval)
}

/// Positive weight system for a relative valued quiver, one rational per
/// vertex, propagated over a spanning tree rooted at the least vertex.
pub(super) fn solve_weights(d: &RelValuedQuiver) -> Result<Vec<Rational>> {
    let n = d.quiver.vertices.len();
    let mut f: Vec<Option<Rational>> = vec![None; n];
    // deterministic sweep: repeatedly grow from the least unvisited vertex
    for root in 0..n {
        if f[root].is_some() {
            continue;
        }
        f[root] = Some(Rational::ONE);
        let mut stack = vec![root];
        while let Some(i) = stack.pop() {
            for (a, &(dij, dji)) in d.quiver.arrows.iter().zip(&d.dval) {
                let ti = d.quiver.vertex_index(&a.tail).unwrap();
                let hi = d.quiver.vertex_index(&a.head).unwrap();
                // arrow ρ: t → h carries (d_th, d_ht) = (dij, dji);
                // the constraint is d_th · f_h = d_ht · f_t
                let (from, to, ratio) = if ti == i {
                    (ti, hi, Rational::new(dji as i128, dij as i128))
                } else if hi == i {
                    (hi, ti, Rational::new(dij as i128, dji as i128))
                } else {
                    continue;
                };
                let expected = f[from].unwrap() * ratio;
                match f[to] {
                    None => {
                        f[to] = Some(expected);
                        stack.push(to);
                    }
                    Some(existing) => {
                        if existing != expected {
                            return Err(Error::InconsistentValuation(format!(
                                "cycle through arrow {:?}",
                                a.id
                            )));
                        }
                    }
                }
            }
        }
    }
    Ok(f.into_iter().map(|x| x.unwrap()).collect())
}

/// The unique absolute valued quiver mapping onto `d` whose vertex values
/// have greatest common divisor 1.
pub fn lift_relative(d: &RelValuedQuiver) -> Result<AbsValuedQuiver> {
    d.quiver
        .violations()
        .is_empty()
        .then_some(())
        .ok_or_else(|| Error::Invalid(d.quiver.violations()))?;
    if !d.quiver.is_connected() {
        return Err(Error::NotConnected);
    }
    let f = solve_weights(d)?;
    // clear denominators, then divide by the gcd
    let mut scale: i128 = 1;
    for x in &f {
        let den = x.den();
        let g = gcd_i(scale, den);
        scale = scale / g * den;
    }
    let mut ints: Vec<i128> = f.iter().map(|x| x.num() * (scale / x.den())).collect();
    let mut g = 0i128;
    for &x in &ints {
        g = gcd_i(g, x);
    }
    for x in ints.iter_mut() {
        *x /= g;
    }
    let dvals: Vec<u64> = ints.iter().map(|&x| x as u64).collect();
    let m = d
        .quiver
        .arrows
        .iter()
        .zip(&d.dval)
        .map(|(a, &(dij, _))| {
            let hj = d.quiver.vertex_index(&a.head).unwrap();
            dij * dvals[hj]
        })
        .collect();
    let g = AbsValuedQuiver::new(d.quiver.clone(), dvals, m);
    g.validate()?;
    Ok(g)
}

fn gcd_i(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Merge parallel arrows of an absolute valued quiver, summing values. The
/// merged arrow keeps the least id among the parallel group.
pub fn crush_abs(g: &AbsValuedQuiver) -> AbsValuedQuiver {
    let mut groups: BTreeMap<(Id, Id), (Id, u64)> = BTreeMap::new();
    for (a, &m) in g.quiver.arrows.iter().zip(&g.m) {
        let key = (a.tail.clone(), a.head.clone());
        groups
            .entry(key)
            .and_modify(|(id, total)| {
                if a.id < *id {
                    *id = a.id.clone();
                }
                *total += m;
            })
            .or_insert((a.id.clone(), m));
    }
    let arrows: Vec<Arrow> = groups
        .iter()
        .map(|((t, h), (id, _))| Arrow {
            id: id.clone(),
            tail: t.clone(),
            head: h.clone(),
        })
        .collect();
    let quiver = Quiver::new(g.quiver.vertices.clone(), arrows);
    let m = quiver
        .arrows
        .iter()
        .map(|a| groups[&(a.tail.clone(), a.head.clone())].1)
        .collect();
    AbsValuedQuiver::new(quiver, g.d.clone(), m)
}

/// Merge parallel arrows of a relative valued quiver, summing both values
/// componentwise.
pub fn crush_rel(d: &RelValuedQuiver) -> RelValuedQuiver {
    let mut groups: BTreeMap<(Id, Id), (Id, u64, u64)> = BTreeMap::new();
    for (a, &(dij, dji)) in d.quiver.arrows.iter().zip(&d.dval) {
        let key = (a.tail.clone(), a.head.clone());
        groups
            .entry(key)
            .and_modify(|(id, x, y)| {
                if a.id < *id {
                    *id = a.id.clone();
                }
                *x += dij;
                *y += dji;
            })
            .or_insert((a.id.clone(), dij, dji));
    }
    let arrows: Vec<Arrow> = groups
        .iter()
        .map(|((t, h), (id, _, _))| Arrow {
            id: id.clone(),
            tail: t.clone(),
            head: h.clone(),
        })
        .collect();
    let quiver = Quiver::new(d.quiver.vertices.clone(), arrows);
    let dval = quiver
        .arrows
        .iter()
        .map(|a| {
            let (_, x, y) = &groups[&(a.tail.clone(), a.head.clone())];
            (*x, *y)
        })
        .collect();
    RelValuedQuiver::new(quiver, dval)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn two_vertex(d1: u64, d2: u64, m: u64) -> AbsValuedQuiver {
        catalog::arrow_valued(d1, d2, m)
    }

    #[test]
    fn fold_fan_gives_triple() {
        let (q, s) = catalog::fan_with_swap();
        let g = fold(&q, &s).unwrap();
        let mut d = g.d.clone();
        d.sort();
        assert_eq!(d, vec![1, 2, 2]);
        assert_eq!(g.m, vec![2, 2, 2]);
        assert_eq!(g.quiver.arrows.len(), 3);
    }

    #[test]
    fn fold_fan_alt_gives_same_shape() {
        let (q, s) = catalog::fan_alt_with_swap();
        let g = fold(&q, &s).unwrap();
        let mut d = g.d.clone();
        d.sort();
        assert_eq!(d, vec![1, 2, 2]);
        assert_eq!(g.m, vec![2, 2, 2]);
    }

    #[test]
    fn fold_identity_automorphism_is_trivial_valuation() {
        let (q, _) = catalog::fan_with_swap();
        let id = QuiverAutomorphism::identity(&q);
        let g = fold(&q, &id).unwrap();
        assert!(g.d.iter().all(|&x| x == 1));
        assert!(g.m.iter().all(|&x| x == 1));
        assert_eq!(g.quiver, q);
    }

    #[test]
    fn fold_bipartite_gives_three_six_two() {
        let (q, s) = catalog::bipartite_3x2();
        let g = fold(&q, &s).unwrap();
        let mut d = g.d.clone();
        d.sort();
        assert_eq!(d, vec![2, 3]);
        assert_eq!(g.m, vec![6]);
    }

    #[test]
    fn fold_divisibility_always_holds() {
        let (q, s) = catalog::fan_with_swap();
        let g = fold(&q, &s).unwrap();
        g.validate().unwrap();
    }

    #[test]
    fn functor_f_collapses_scale() {
        let g1 = two_vertex(2, 1, 2);
        let g2 = two_vertex(4, 2, 4);
        let r1 = functor_f(&g1);
        let r2 = functor_f(&g2);
        assert_eq!(r1.dval, vec![(2, 1)]);
        assert_eq!(r2.dval, vec![(2, 1)]);
    }

    #[test]
    fn functor_f_trivial_values() {
        let g = two_vertex(1, 1, 1);
        assert_eq!(functor_f(&g).dval, vec![(1, 1)]);
    }

    #[test]
    fn lift_single_arrow() {
        let delta = functor_f(&two_vertex(2, 1, 2));
        let g = lift_relative(&delta).unwrap();
        assert_eq!(g.d, vec![2, 1]);
        assert_eq!(g.m, vec![2]);
    }

    #[test]
    fn lift_normalizes_gcd() {
        // the image of the (4)-(4)-(2) quiver lifts to (2)-(2)-(1), not back
        let delta = functor_f(&two_vertex(4, 2, 4));
        let g = lift_relative(&delta).unwrap();
        assert_eq!(g.d, vec![2, 1]);
        assert_eq!(g.m, vec![2]);
    }

    #[test]
    fn lift_trivial() {
        let delta = functor_f(&two_vertex(1, 1, 1));
        let g = lift_relative(&delta).unwrap();
        assert_eq!(g.d, vec![1, 1]);
        assert_eq!(g.m, vec![1]);
    }

    #[test]
    fn lift_then_f_is_identity() {
        for g in [
            two_vertex(2, 1, 2),
            two_vertex(3, 2, 6),
            two_vertex(1, 2, 4),
        ] {
            let delta = functor_f(&g);
            let lifted = lift_relative(&delta).unwrap();
            assert_eq!(functor_f(&lifted), delta);
            let gg = num_gcd(&lifted.d);
            assert_eq!(gg, 1);
        }
    }

    fn num_gcd(xs: &[u64]) -> u64 {
        xs.iter().fold(0, |a, &b| {
            let (mut a, mut b) = (a, b);
            while b != 0 {
                let r = a % b;
                a = b;
                b = r;
            }
            a
        })
    }

    #[test]
    fn lift_detects_cycle_inconsistency() {
        // a directed 2-cycle whose two arrows demand incompatible weights
        let q = Quiver::new(
            vec!["1".into(), "2".into()],
            vec![
                Arrow {
                    id: "a".into(),
                    tail: "1".into(),
                    head: "2".into(),
                },
                Arrow {
                    id: "b".into(),
                    tail: "2".into(),
                    head: "1".into(),
                },
            ],
        );
        let delta = RelValuedQuiver::new(q, vec![(2, 1), (1, 1)]);
        assert!(matches!(
            lift_relative(&delta),
            Err(Error::InconsistentValuation(_))
        ));
    }

    #[test]
    fn unfold_small_example() {
        // values d = (1, 2), m = 2: three vertices, two arrows out of the
        // singleton fibre, swapped by the automorphism
        let g = two_vertex(1, 2, 2);
        let (q, s) = unfold(&g).unwrap();
        assert_eq!(q.vertices.len(), 3);
        assert_eq!(q.arrows.len(), 2);
        let a1 = q.arrow("a:a:1").unwrap();
        let a2 = q.arrow("a:a:2").unwrap();
        assert_eq!(a1.tail, "v:1:1");
        assert_eq!(a1.head, "v:2:1");
        assert_eq!(a2.tail, "v:1:1");
        assert_eq!(a2.head, "v:2:2");
        assert_eq!(s.vertex_map["v:2:1"], "v:2:2");
        assert_eq!(s.arrow_map["a:a:1"], "a:a:2");
    }

    #[test]
    fn unfold_trivial_valuation_is_identity() {
        let (q0, _) = catalog::fork_with_swap();
        let g = AbsValuedQuiver::trivial(q0.clone());
        let (q, s) = unfold(&g).unwrap();
        assert_eq!(q.vertices.len(), q0.vertices.len());
        assert!(s.vertex_map.iter().all(|(k, v)| k == v));
        assert!(s.arrow_map.iter().all(|(k, v)| k == v));
    }

    #[test]
    fn fold_after_unfold_round_trips() {
        for g in [
            two_vertex(1, 2, 2),
            two_vertex(2, 1, 2),
            two_vertex(3, 2, 6),
            catalog::indefinite_32(),
            catalog::fan_target(),
        ] {
            let (q, s) = unfold(&g).unwrap();
            let folded = fold(&q, &s).unwrap();
            assert_eq!(strip_unfold_labels(&folded), g);
        }
    }

    #[test]
    fn crush_double_arrow() {
        let (q, _) = catalog::double_arrow();
        let g = AbsValuedQuiver::trivial(q);
        let c = crush_abs(&g);
        assert_eq!(c.quiver.arrows.len(), 1);
        assert_eq!(c.m, vec![2]);
        assert_eq!(c.d, vec![1, 1]);
    }

    #[test]
    fn crush_without_parallels_is_identity() {
        let g = catalog::fan_target();
        // fan target has two parallel arrows, so take a chain instead
        let chain = two_vertex(2, 1, 2);
        assert_eq!(crush_abs(&chain), chain);
        // and crushing twice equals crushing once
        assert_eq!(crush_abs(&crush_abs(&g)), crush_abs(&g));
    }

    #[test]
    fn crush_rel_sums_componentwise() {
        let q = Quiver::new(
            vec!["1".into(), "2".into()],
            vec![
                Arrow {
                    id: "a".into(),
                    tail: "1".into(),
                    head: "2".into(),
                },
                Arrow {
                    id: "b".into(),
                    tail: "1".into(),
                    head: "2".into(),
                },
            ],
        );
        let d = RelValuedQuiver::new(q, vec![(1, 2), (1, 2)]);
        let c = crush_rel(&d);
        assert_eq!(c.dval, vec![(2, 4)]);
    }

    #[test]
    fn functor_f_commutes_with_crush() {
        let (q, _) = catalog::double_arrow();
        let g = AbsValuedQuiver::trivial(q);
        assert_eq!(functor_f(&crush_abs(&g)), crush_rel(&functor_f(&g)));
    }
}
