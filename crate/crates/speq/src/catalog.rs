//! A small catalog of standard quivers, valued quivers, quivers with
//! automorphism, and species used throughout the tests, the guide, and the
//! CLI fixtures.

use crate::quiver::{AbsValuedQuiver, Arrow, Quiver, QuiverAutomorphism};
use crate::species::{Base, BimodSummand, FqSpecies};
use std::collections::BTreeMap;

fn arrow(id: &str, tail: &str, head: &str) -> Arrow {
    Arrow {
        id: id.into(),
        tail: tail.into(),
        head: head.into(),
    }
}

fn automorphism(vpairs: &[(&str, &str)], apairs: &[(&str, &str)]) -> QuiverAutomorphism {
    QuiverAutomorphism {
        vertex_map: vpairs
            .iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect::<BTreeMap<_, _>>(),
        arrow_map: apairs
            .iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect::<BTreeMap<_, _>>(),
    }
}

/// Two vertices, one arrow 1 → 2, with the given valuation.
pub fn arrow_valued(d1: u64, d2: u64, m: u64) -> AbsValuedQuiver {
    let q = Quiver::new(vec!["1".into(), "2".into()], vec![arrow("a", "1", "2")]);
    AbsValuedQuiver::new(q, vec![d1, d2], vec![m])
}

/// The A2 quiver with trivial valuation.
pub fn a2() -> AbsValuedQuiver {
    arrow_valued(1, 1, 1)
}

/// The Kronecker quiver: two parallel arrows with trivial valuation.
pub fn kronecker() -> AbsValuedQuiver {
    let (q, _) = double_arrow();
    AbsValuedQuiver::trivial(q)
}

/// B2-shaped valued quiver: (1) --(2)--> (2).
pub fn b2_shape() -> AbsValuedQuiver {
    arrow_valued(1, 2, 2)
}

/// G2-shaped valued quiver: (1) --(3)--> (3).
pub fn g2_shape() -> AbsValuedQuiver {
    arrow_valued(1, 3, 3)
}

/// Indefinite valued quiver (3) --(6)--> (2); its symmetrized form has
/// negative determinant and (1,1) is an imaginary root.
pub fn indefinite_32() -> AbsValuedQuiver {
    arrow_valued(3, 2, 6)
}

/// Wild valued quiver (2) --(6)--> (3), the transpose orientation of
/// `indefinite_32`.
pub fn wild_23() -> AbsValuedQuiver {
    arrow_valued(2, 3, 6)
}

/// Chain (4) --(4)--> (2) --(2)--> (1).
pub fn chain_4_2_1() -> AbsValuedQuiver {
    let q = Quiver::new(
        vec!["1".into(), "2".into(), "3".into()],
        vec![arrow("a", "1", "2"), arrow("b", "2", "3")],
    );
    AbsValuedQuiver::new(q, vec![4, 2, 1], vec![4, 2])
}

/// Double arrow 1 ⇉ 2 together with the automorphism swapping the arrows.
pub fn double_arrow() -> (Quiver, QuiverAutomorphism) {
    let q = Quiver::new(
        vec!["1".into(), "2".into()],
        vec![arrow("a", "1", "2"), arrow("b", "1", "2")],
    );
    let s = automorphism(&[("1", "1"), ("2", "2")], &[("a", "b"), ("b", "a")]);
    (q, s)
}

/// A fan on five vertices: 1 feeds two branches, each ending in a double
/// arrow, with the order-two automorphism exchanging the branches.
pub fn fan_with_swap() -> (Quiver, QuiverAutomorphism) {
    let q = Quiver::new(
        (1..=5).map(|i| i.to_string()).collect(),
        vec![
            arrow("a1", "1", "2"),
            arrow("a2", "1", "4"),
            arrow("a3", "2", "3"),
            arrow("a4", "2", "3"),
            arrow("a5", "4", "5"),
            arrow("a6", "4", "5"),
        ],
    );
    let s = automorphism(
        &[("1", "1"), ("2", "4"), ("3", "5"), ("4", "2"), ("5", "3")],
        &[
            ("a1", "a2"),
            ("a2", "a1"),
            ("a3", "a5"),
            ("a4", "a6"),
            ("a5", "a3"),
            ("a6", "a4"),
        ],
    );
    (q, s)
}

/// A second fan on five vertices with crossed double arrows; not isomorphic
/// to `fan_with_swap` as a quiver, yet folding into the same valued quiver.
pub fn fan_alt_with_swap() -> (Quiver, QuiverAutomorphism) {
    let q = Quiver::new(
        vec!["a".into(), "b".into(), "c".into(), "d".into(), "e".into()],
        vec![
            arrow("b1", "a", "b"),
            arrow("b2", "a", "d"),
            arrow("b3", "b", "c"),
            arrow("b4", "b", "e"),
            arrow("b5", "d", "c"),
            arrow("b6", "d", "e"),
        ],
    );
    let s = automorphism(
        &[("a", "a"), ("b", "d"), ("c", "e"), ("d", "b"), ("e", "c")],
        &[
            ("b1", "b2"),
            ("b2", "b1"),
            ("b3", "b6"),
            ("b4", "b5"),
            ("b5", "b4"),
            ("b6", "b3"),
        ],
    );
    (q, s)
}

/// The valued quiver both fans fold into: (1) --(2)--> (2) ⇉ (2) with both
/// parallel arrows valued (2).
pub fn fan_target() -> AbsValuedQuiver {
    let q = Quiver::new(
        vec!["1".into(), "2".into(), "3".into()],
        vec![
            arrow("a1", "1", "2"),
            arrow("a3", "2", "3"),
            arrow("a4", "2", "3"),
        ],
    );
    AbsValuedQuiver::new(q, vec![1, 2, 2], vec![2, 2, 2])
}

/// The fork 1 → 2 ← 3 with the automorphism swapping the outer vertices.
/// Its automorphism-fixed path algebra has dimension 3 while the tensor
/// algebra of the folded species has dimension 5.
pub fn fork_with_swap() -> (Quiver, QuiverAutomorphism) {
    let q = Quiver::new(
        vec!["1".into(), "2".into(), "3".into()],
        vec![arrow("a", "1", "2"), arrow("b", "3", "2")],
    );
    let s = automorphism(
        &[("1", "3"), ("2", "2"), ("3", "1")],
        &[("a", "b"), ("b", "a")],
    );
    (q, s)
}

/// Complete bipartite 3 × 2 quiver with the automorphism cycling each side;
/// folds into (3) --(6)--> (2).
pub fn bipartite_3x2() -> (Quiver, QuiverAutomorphism) {
    let mut arrows = vec![];
    for i in 1..=3u32 {
        for j in 1..=2u32 {
            arrows.push(arrow(
                &format!("a{i}{j}"),
                &format!("l{i}"),
                &format!("r{j}"),
            ));
        }
    }
    let q = Quiver::new(
        vec![
            "l1".into(),
            "l2".into(),
            "l3".into(),
            "r1".into(),
            "r2".into(),
        ],
        arrows,
    );
    let nxt3 = |i: u32| i % 3 + 1;
    let nxt2 = |j: u32| j % 2 + 1;
    let mut apairs = vec![];
    for i in 1..=3u32 {
        for j in 1..=2u32 {
            apairs.push((format!("a{i}{j}"), format!("a{}{}", nxt3(i), nxt2(j))));
        }
    }
    let s = QuiverAutomorphism {
        vertex_map: [
            ("l1", "l2"),
            ("l2", "l3"),
            ("l3", "l1"),
            ("r1", "r2"),
            ("r2", "r1"),
        ]
        .iter()
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect(),
        arrow_map: apairs.into_iter().collect(),
    };
    (q, s)
}

/// Four vertices in two swapped pairs joined by two parallel-arrow orbits:
/// both arrow orbits connect matching pair members. Folds into (2)-(4)->(2)
/// with two untwisted summands.
pub fn pairs_with_parallel_arrows() -> (Quiver, QuiverAutomorphism) {
    let q = Quiver::new(
        vec!["x1".into(), "x2".into(), "y1".into(), "y2".into()],
        vec![
            arrow("b1", "x1", "y1"),
            arrow("b2", "x1", "y1"),
            arrow("b3", "x2", "y2"),
            arrow("b4", "x2", "y2"),
        ],
    );
    let s = automorphism(
        &[("x1", "x2"), ("x2", "x1"), ("y1", "y2"), ("y2", "y1")],
        &[("b1", "b3"), ("b2", "b4"), ("b3", "b1"), ("b4", "b2")],
    );
    (q, s)
}

/// Four vertices in two swapped pairs joined by a complete bipartite arrow
/// set: one arrow orbit stays parallel, the other crosses. Folds into
/// (2)-(4)->(2) with one untwisted and one twisted summand.
pub fn pairs_with_crossed_arrows() -> (Quiver, QuiverAutomorphism) {
    let q = Quiver::new(
        vec!["x1".into(), "x2".into(), "y1".into(), "y2".into()],
        vec![
            arrow("c1", "x1", "y1"),
            arrow("c2", "x2", "y2"),
            arrow("c3", "x1", "y2"),
            arrow("c4", "x2", "y1"),
        ],
    );
    let s = automorphism(
        &[("x1", "x2"), ("x2", "x1"), ("y1", "y2"), ("y2", "y1")],
        &[("c1", "c2"), ("c2", "c1"), ("c3", "c4"), ("c4", "c3")],
    );
    (q, s)
}

/// Species on GF(q²) = GF(q²) with bimodule GF(q²) ⊕ GF(q²), both summands
/// untwisted: its scalar extension is a 4-vertex quiver with two double
/// arrows.
pub fn ext_pair_split(base: Base) -> FqSpecies {
    let shape = arrow_valued(2, 2, 4);
    FqSpecies::new(
        base,
        shape,
        vec![vec![
            BimodSummand {
                m: 2,
                ltwist: 0,
                rtwist: 0,
            },
            BimodSummand {
                m: 2,
                ltwist: 0,
                rtwist: 0,
            },
        ]],
    )
}

/// Species on GF(q²) = GF(q²) with bimodule GF(q²) ⊗ GF(q²): one untwisted
/// and one twisted summand. Its scalar extension is the 4-vertex complete
/// bipartite quiver with single arrows.
pub fn ext_pair_mixed(base: Base) -> FqSpecies {
    let shape = arrow_valued(2, 2, 4);
    FqSpecies::new(
        base,
        shape,
        vec![vec![
            BimodSummand {
                m: 2,
                ltwist: 0,
                rtwist: 0,
            },
            BimodSummand {
                m: 2,
                ltwist: 1,
                rtwist: 0,
            },
        ]],
    )
}

/// Untwisted species over GF(q) on any valued quiver shape.
pub fn untwisted(base: Base, shape: AbsValuedQuiver) -> FqSpecies {
    FqSpecies::untwisted(base, shape)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver;

    #[test]
    fn all_automorphisms_validate() {
        for (q, s) in [
            double_arrow(),
            fan_with_swap(),
            fan_alt_with_swap(),
            fork_with_swap(),
            bipartite_3x2(),
            pairs_with_parallel_arrows(),
            pairs_with_crossed_arrows(),
        ] {
            s.validate(&q).unwrap();
        }
    }

    #[test]
    fn all_valued_quivers_validate() {
        for g in [
            a2(),
            kronecker(),
            b2_shape(),
            g2_shape(),
            indefinite_32(),
            wild_23(),
            chain_4_2_1(),
            fan_target(),
        ] {
            g.validate().unwrap();
        }
    }

    #[test]
    fn fans_are_not_isomorphic_as_quivers() {
        // vertex "1" of the first fan has out-degree 2 onto distinct targets
        // whose own out-neighbourhoods are parallel pairs; in the second fan
        // the double arrows cross. A cheap certificate: count vertices whose
        // two out-arrows share their head.
        let (q1, _) = fan_with_swap();
        let (q2, _) = fan_alt_with_swap();
        let parallel_pairs = |q: &quiver::Quiver| {
            q.vertices
                .iter()
                .filter(|v| {
                    let heads: Vec<_> = q
                        .arrows
                        .iter()
                        .filter(|a| &a.tail == *v)
                        .map(|a| a.head.clone())
                        .collect();
                    heads.len() == 2 && heads[0] == heads[1]
                })
                .count()
        };
        assert_eq!(parallel_pairs(&q1), 2);
        assert_eq!(parallel_pairs(&q2), 0);
    }
}
