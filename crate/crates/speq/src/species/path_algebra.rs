//! Truncated path algebras with explicit basis and structure constants.

use crate::gf::Gf;
use crate::quiver::{paths_up_to, Path, Quiver};

/// A path algebra truncated at a fixed length: basis of all paths up to that
/// length, with 0/1 structure constants. Products whose length exceeds the
/// truncation are zero.
#[derive(Clone, Debug)]
pub struct TruncatedAlgebra {
    pub field: Gf,
    pub quiver: Quiver,
    pub basis: Vec<Path>,
    pub truncation: usize,
    /// `table[i][j]` = index of `basis[i]·basis[j]` when nonzero.
    pub table: Vec<Vec<Option<usize>>>,
}

/// Build the path algebra of a quiver over the given field, truncated at
/// length l. The truncation must be explicit: with oriented cycles the path
/// algebra is infinite-dimensional.
pub fn path_algebra_truncated(q: &Quiver, field: &Gf, l: usize) -> TruncatedAlgebra {
    let basis: Vec<Path> = paths_up_to(q, l).into_iter().flatten().collect();
    let index: std::collections::HashMap<&Path, usize> =
        basis.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let table = basis
        .iter()
        .map(|left| {
            basis
                .iter()
                .map(|right| {
                    // product (left)(right) composes right first
                    left.compose_after(right, q)
                        .and_then(|p| index.get(&p).copied())
                })
                .collect()
        })
        .collect();
    TruncatedAlgebra {
        field: field.clone(),
        quiver: q.clone(),
        basis,
        truncation: l,
        table,
    }
}

impl TruncatedAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Exhaustive associativity check on basis triples. Associativity can
    /// only fail at the truncation boundary, where both sides are zero, so
    /// this holds identically.
    pub fn is_associative_on_basis(&self) -> bool {
        let n = self.dim();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let left = self.table[a][b].and_then(|ab| self.table[ab][c]);
                    let right = self.table[b][c].and_then(|bc| self.table[a][bc]);
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::quiver::Arrow;

    fn f2() -> Gf {
        Gf::make(2, 1).unwrap()
    }

    #[test]
    fn a2_structure() {
        let g = catalog::a2();
        let alg = path_algebra_truncated(&g.quiver, &f2(), 2);
        assert_eq!(alg.dim(), 3);
        let eps1 = alg
            .basis
            .iter()
            .position(|p| p.is_empty() && p.start == "1")
            .unwrap();
        let eps2 = alg
            .basis
            .iter()
            .position(|p| p.is_empty() && p.start == "2")
            .unwrap();
        let a = alg.basis.iter().position(|p| p.len() == 1).unwrap();
        assert_eq!(alg.table[a][eps1], Some(a));
        assert_eq!(alg.table[eps2][a], Some(a));
        assert_eq!(alg.table[a][a], None);
        assert_eq!(alg.table[eps1][a], None);
    }

    #[test]
    fn jordan_quiver_truncates_like_polynomials() {
        let q = Quiver::new(
            vec!["1".into()],
            vec![Arrow {
                id: "t".into(),
                tail: "1".into(),
                head: "1".into(),
            }],
        );
        let alg = path_algebra_truncated(&q, &f2(), 3);
        assert_eq!(alg.dim(), 4);
        let t1 = 1; // basis sorted by length group: ε, t, t², t³
        let t2 = 2;
        let t3 = 3;
        assert_eq!(alg.table[t1][t1], Some(t2));
        assert_eq!(alg.table[t1][t2], Some(t3));
        assert_eq!(alg.table[t2][t2], None);
    }

    #[test]
    fn fan_basis_size() {
        let (q, _) = catalog::fan_with_swap();
        let alg = path_algebra_truncated(&q, &f2(), 2);
        assert_eq!(alg.dim(), 15);
    }

    #[test]
    fn associativity_exhaustive() {
        let (q, _) = catalog::fan_with_swap();
        for l in 0..=3 {
            let alg = path_algebra_truncated(&q, &f2(), l);
            assert!(alg.is_associative_on_basis());
        }
        let (q2, _) = catalog::double_arrow();
        assert!(path_algebra_truncated(&q2, &f2(), 3).is_associative_on_basis());
    }
}
