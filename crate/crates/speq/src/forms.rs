//! Euler, symmetric and Tits forms, generalized Cartan matrices, Weyl-group
//! reflections, bounded root enumeration, stable elements, and
//! representation-type classification.
//!
//! Dimension vectors are integer vectors aligned with the sorted vertex list
//! of a fixed valued quiver. All computations are exact integer arithmetic.

use crate::error::{Error, Result};
use crate::quiver::{lift_relative, AbsValuedQuiver, RelValuedQuiver};
use crate::rational::Rational;
use std::collections::{BTreeSet, VecDeque};

pub type DimVec = Vec<i64>;

fn check_len(g: &AbsValuedQuiver, x: &[i64]) -> Result<()> {
    if x.len() != g.quiver.vertices.len() {
        return Err(Error::IndexMismatch(format!(
            "vector has {} entries, quiver has {} vertices",
            x.len(),
            g.quiver.vertices.len()
        )));
    }
    Ok(())
}

/// Euler form ⟨x,y⟩ = Σ d_i x_i y_i − Σ m_ρ x_{t(ρ)} y_{h(ρ)}.
pub fn euler_form(g: &AbsValuedQuiver, x: &[i64], y: &[i64]) -> Result<i64> {
    check_len(g, x)?;
    check_len(g, y)?;
    let mut acc: i64 = 0;
    for (i, &d) in g.d.iter().enumerate() {
        acc += d as i64 * x[i] * y[i];
    }
    for (a, &m) in g.quiver.arrows.iter().zip(&g.m) {
        let t = g.quiver.vertex_index(&a.tail).unwrap();
        let h = g.quiver.vertex_index(&a.head).unwrap();
        acc -= m as i64 * x[t] * y[h];
    }
    Ok(acc)
}

/// Symmetric Euler form (x,y) = ⟨x,y⟩ + ⟨y,x⟩.
pub fn symmetric_form(g: &AbsValuedQuiver, x: &[i64], y: &[i64]) -> Result<i64> {
    Ok(euler_form(g, x, y)? + euler_form(g, y, x)?)
}

/// Tits form q(x) = ⟨x,x⟩.
pub fn tits_form(g: &AbsValuedQuiver, x: &[i64]) -> Result<i64> {
    euler_form(g, x, x)
}

/// Forms on a relative valued quiver go through the gcd-normalized lift,
/// which fixes the scale (the forms are otherwise defined only up to a
/// positive rational multiple).
pub fn euler_form_rel(d: &RelValuedQuiver, x: &[i64], y: &[i64]) -> Result<i64> {
    euler_form(&lift_relative(d)?, x, y)
}

/// Matrix of the symmetric form: (e_i, e_j).
pub fn symmetric_matrix(g: &AbsValuedQuiver) -> Vec<Vec<i64>> {
    let n = g.quiver.vertices.len();
    let mut b = vec![vec![0i64; n]; n];
    for (i, &d) in g.d.iter().enumerate() {
        b[i][i] = 2 * d as i64;
    }
    for (a, &m) in g.quiver.arrows.iter().zip(&g.m) {
        let t = g.quiver.vertex_index(&a.tail).unwrap();
        let h = g.quiver.vertex_index(&a.head).unwrap();
        b[t][h] -= m as i64;
        b[h][t] -= m as i64;
    }
    b
}

/// A generalized Cartan matrix with its symmetrizer diag(d_i).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMatrix {
    pub entries: Vec<Vec<i64>>,
    pub symmetrizer: Vec<i64>,
}

/// c_ij = 2(e_i,e_j)/(e_i,e_i) = −Σ m_ρ/d_i over all arrows between i and j
/// regardless of orientation.
pub fn cartan_matrix(g: &AbsValuedQuiver) -> Result<CartanMatrix> {
    if g.quiver.has_loop() {
        let l = g.quiver.arrows.iter().find(|a| a.tail == a.head).unwrap();
        return Err(Error::LoopPresent(l.tail.clone()));
    }
    let n = g.quiver.vertices.len();
    let b = symmetric_matrix(g);
    let mut c = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                c[i][j] = 2;
            } else {
                let num = 2 * b[i][j];
                let den = b[i][i];
                assert!(num % den == 0, "Cartan entry must be integral");
                c[i][j] = num / den;
                assert!(c[i][j] <= 0);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            assert_eq!((c[i][j] == 0), (c[j][i] == 0));
            assert_eq!(g.d[i] as i64 * c[i][j], g.d[j] as i64 * c[j][i]);
        }
    }
    Ok(CartanMatrix {
        entries: c,
        symmetrizer: g.d.iter().map(|&d| d as i64).collect(),
    })
}

/// Simple reflection r_i(x) = x − (Σ_j c_ij x_j) e_i.
pub fn simple_reflection(g: &AbsValuedQuiver, i: usize, x: &[i64]) -> Result<DimVec> {
    check_len(g, x)?;
    let c = cartan_matrix(g)?;
    let coeff: i64 = c.entries[i].iter().zip(x).map(|(&cij, &xj)| cij * xj).sum();
    let mut out = x.to_vec();
    out[i] -= coeff;
    Ok(out)
}

fn reflect_with(c: &CartanMatrix, i: usize, x: &[i64]) -> DimVec {
    let coeff: i64 = c.entries[i].iter().zip(x).map(|(&cij, &xj)| cij * xj).sum();
    let mut out = x.to_vec();
    out[i] -= coeff;
    out
}

/// Breadth-first closure of the seed set under all simple reflections,
/// pruned to max |coordinate| ≤ bound. Deterministic order.
fn weyl_closure(g: &AbsValuedQuiver, seeds: Vec<DimVec>, bound: i64) -> Result<BTreeSet<DimVec>> {
    let c = cartan_matrix(g)?;
    let n = g.quiver.vertices.len();
    let mut seen: BTreeSet<DimVec> = BTreeSet::new();
    let mut queue: VecDeque<DimVec> = VecDeque::new();
    for s in seeds {
        if s.iter().all(|&v| v.abs() <= bound) && seen.insert(s.clone()) {
            queue.push_back(s);
        }
    }
    while let Some(x) = queue.pop_front() {
        for i in 0..n {
            let y = reflect_with(&c, i, &x);
            if y.iter().all(|&v| v.abs() <= bound) && seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}

/// All real roots with coordinates bounded by `bound` that are reachable
/// from the simple roots without leaving the bound.
pub fn real_roots_up_to(g: &AbsValuedQuiver, bound: i64) -> Result<Vec<DimVec>> {
    let n = g.quiver.vertices.len();
    let mut seeds = vec![];
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        seeds.push(e.clone());
        e[i] = -1;
        seeds.push(e);
    }
    Ok(weyl_closure(g, seeds, bound)?.into_iter().collect())
}

pub fn positive_real_roots_up_to(g: &AbsValuedQuiver, bound: i64) -> Result<Vec<DimVec>> {
    Ok(real_roots_up_to(g, bound)?
        .into_iter()
        .filter(|x| x.iter().all(|&v| v >= 0))
        .collect())
}

/// Membership in the fundamental set: nonzero, nonnegative, (x,e_i) ≤ 0 for
/// every vertex, and connected support.
pub fn fundamental_set_member(g: &AbsValuedQuiver, x: &[i64]) -> Result<bool> {
    check_len(g, x)?;
    if x.iter().any(|&v| v < 0) || x.iter().all(|&v| v == 0) {
        return Ok(false);
    }
    let b = symmetric_matrix(g);
    let n = x.len();
    for i in 0..n {
        let pairing: i64 = (0..n).map(|j| b[i][j] * x[j]).sum();
        if pairing > 0 {
            return Ok(false);
        }
    }
    // connectedness of the support subquiver
    let support: BTreeSet<usize> = (0..n).filter(|&i| x[i] != 0).collect();
    let mut seen = BTreeSet::new();
    let start = *support.iter().next().unwrap();
    let mut queue = VecDeque::from([start]);
    seen.insert(start);
    while let Some(v) = queue.pop_front() {
        for a in &g.quiver.arrows {
            let t = g.quiver.vertex_index(&a.tail).unwrap();
            let h = g.quiver.vertex_index(&a.head).unwrap();
            for (from, to) in [(t, h), (h, t)] {
                if from == v && support.contains(&to) && seen.insert(to) {
                    queue.push_back(to);
                }
            }
        }
    }
    Ok(seen.len() == support.len())
}

/// Imaginary roots within the coordinate bound: the Weyl closure of the
/// fundamental set and its negative.
pub fn imaginary_roots_up_to(g: &AbsValuedQuiver, bound: i64) -> Result<Vec<DimVec>> {
    let n = g.quiver.vertices.len();
    let total = ((bound + 1) as u128).checked_pow(n as u32);
    match total {
        Some(t) if t <= 10_000_000 => {}
        _ => {
            return Err(Error::SizeLimitExceeded {
                needed: total.unwrap_or(u128::MAX),
                cap: 10_000_000,
            })
        }
    }
    let mut seeds = vec![];
    let mut x = vec![0i64; n];
    loop {
        if fundamental_set_member(g, &x)? {
            seeds.push(x.clone());
            seeds.push(x.iter().map(|&v| -v).collect());
        }
        let mut i = 0;
        loop {
            if i == n {
                let closure = weyl_closure(g, seeds, bound)?;
                return Ok(closure.into_iter().collect());
            }
            x[i] += 1;
            if x[i] <= bound {
                break;
            }
            x[i] = 0;
            i += 1;
        }
    }
}

/// Integer basis of the radical of the symmetric form; these are exactly the
/// vectors fixed by every simple reflection.
pub fn stable_lattice(g: &AbsValuedQuiver) -> Vec<DimVec> {
    let b = symmetric_matrix(g);
    let n = b.len();
    // rational row reduction of B, then read off the kernel
    let mut m: Vec<Vec<Rational>> = b
        .iter()
        .map(|row| row.iter().map(|&v| Rational::from_int(v as i128)).collect())
        .collect();
    let mut pivots: Vec<(usize, usize)> = vec![];
    let mut row = 0;
    for col in 0..n {
        let Some(pr) = (row..n).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pr, row);
        let inv = m[row][col].inv();
        for j in 0..n {
            m[row][j] = m[row][j] * inv;
        }
        for r in 0..n {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col];
                for j in 0..n {
                    m[r][j] = m[r][j] - f * m[row][j];
                }
            }
        }
        pivots.push((row, col));
        row += 1;
    }
    let pivot_cols: BTreeSet<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = vec![];
    for free in (0..n).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![Rational::ZERO; n];
        v[free] = Rational::ONE;
        for &(r, c) in &pivots {
            v[c] = -m[r][free];
        }
        // clear denominators and normalize to a primitive vector
        let mut scale: i128 = 1;
        for x in &v {
            let den = x.den();
            let g = gcd_i(scale, den);
            scale = scale / g * den;
        }
        let mut ints: Vec<i64> = v
            .iter()
            .map(|x| (x.num() * (scale / x.den())) as i64)
            .collect();
        let mut g = 0i64;
        for &x in &ints {
            g = gcd_i64(g, x);
        }
        if g != 0 {
            for x in ints.iter_mut() {
                *x /= g;
            }
        }
        if ints.iter().find(|&&x| x != 0).map(|&x| x < 0) == Some(true) {
            for x in ints.iter_mut() {
                *x = -*x;
            }
        }
        basis.push(ints);
    }
    basis
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

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReprType {
    /// Positive definite symmetrized form: finite representation type.
    Finite,
    /// Positive semidefinite with one-dimensional radical: tame/affine.
    Affine,
    Indefinite,
}

impl std::fmt::Display for ReprType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ReprType::Finite => write!(f, "Finite"),
            ReprType::Affine => write!(f, "Affine"),
            ReprType::Indefinite => write!(f, "Indefinite"),
        }
    }
}

/// Exact determinant by fraction-free elimination.
fn det_i128(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(sw) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return 0;
            };
            a.swap(k, sw);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Classify by definiteness of the symmetrized matrix DC: positive definite
/// is finite type, positive semidefinite with radical of rank one is affine,
/// anything else is indefinite.
pub fn classify_type(g: &AbsValuedQuiver) -> Result<ReprType> {
    if !g.quiver.is_connected() {
        return Err(Error::NotConnected);
    }
    if g.quiver.has_loop() {
        let l = g.quiver.arrows.iter().find(|a| a.tail == a.head).unwrap();
        return Err(Error::LoopPresent(l.tail.clone()));
    }
    let b = symmetric_matrix(g);
    let n = b.len();
    // Sylvester: definite iff all leading principal minors are positive
    let leading_positive = (1..=n).all(|k| {
        let sub: Vec<Vec<i128>> = (0..k)
            .map(|i| (0..k).map(|j| b[i][j] as i128).collect())
            .collect();
        det_i128(&sub) > 0
    });
    if leading_positive {
        return Ok(ReprType::Finite);
    }
    // semidefinite iff every principal minor is nonnegative
    let mut semidefinite = true;
    'subsets: for mask in 1u32..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let sub: Vec<Vec<i128>> = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| b[i][j] as i128).collect())
            .collect();
        if det_i128(&sub) < 0 {
            semidefinite = false;
            break 'subsets;
        }
    }
    if semidefinite {
        let radical = stable_lattice(g);
        assert_eq!(
            radical.len(),
            1,
            "connected semidefinite form has a rank-one radical"
        );
        return Ok(ReprType::Affine);
    }
    Ok(ReprType::Indefinite)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::quiver::{functor_f, Arrow, Quiver};

    #[test]
    fn forms_on_indefinite_32() {
        let g = catalog::indefinite_32();
        assert_eq!(euler_form(&g, &[1, 0], &[0, 1]).unwrap(), -6);
        let beta = [1, 1];
        assert_eq!(symmetric_form(&g, &beta, &[1, 0]).unwrap(), 0);
        assert_eq!(symmetric_form(&g, &beta, &[0, 1]).unwrap(), -2);
    }

    #[test]
    fn tits_of_simples_is_d() {
        for g in [catalog::a2(), catalog::b2_shape(), catalog::indefinite_32()] {
            for i in 0..g.d.len() {
                let mut e = vec![0i64; g.d.len()];
                e[i] = 1;
                assert_eq!(tits_form(&g, &e).unwrap(), g.d[i] as i64);
            }
        }
    }

    #[test]
    fn kronecker_radical_vector() {
        let g = catalog::kronecker();
        assert_eq!(tits_form(&g, &[1, 1]).unwrap(), 0);
    }

    #[test]
    fn index_mismatch_is_reported() {
        let g = catalog::a2();
        assert!(matches!(
            euler_form(&g, &[1], &[0, 1]),
            Err(Error::IndexMismatch(_))
        ));
    }

    #[test]
    fn cartan_matrices() {
        assert_eq!(
            cartan_matrix(&catalog::indefinite_32()).unwrap().entries,
            vec![vec![2, -2], vec![-3, 2]]
        );
        assert_eq!(
            cartan_matrix(&catalog::kronecker()).unwrap().entries,
            vec![vec![2, -2], vec![-2, 2]]
        );
        assert_eq!(
            cartan_matrix(&catalog::a2()).unwrap().entries,
            vec![vec![2, -1], vec![-1, 2]]
        );
        assert_eq!(
            cartan_matrix(&catalog::b2_shape()).unwrap().entries,
            vec![vec![2, -2], vec![-1, 2]]
        );
        assert_eq!(
            cartan_matrix(&catalog::g2_shape()).unwrap().entries,
            vec![vec![2, -3], vec![-1, 2]]
        );
    }

    #[test]
    fn cartan_rejects_loops() {
        let q = Quiver::new(
            vec!["1".into()],
            vec![Arrow {
                id: "a".into(),
                tail: "1".into(),
                head: "1".into(),
            }],
        );
        let g = crate::quiver::AbsValuedQuiver::trivial(q);
        assert!(matches!(cartan_matrix(&g), Err(Error::LoopPresent(_))));
    }

    #[test]
    fn reflections() {
        let g = catalog::indefinite_32();
        assert_eq!(simple_reflection(&g, 0, &[1, 0]).unwrap(), vec![-1, 0]);
        assert_eq!(simple_reflection(&g, 0, &[1, 1]).unwrap(), vec![1, 1]);
        assert_eq!(simple_reflection(&g, 1, &[1, 1]).unwrap(), vec![1, 2]);
    }

    #[test]
    fn positive_real_roots_small_types() {
        let a2 = positive_real_roots_up_to(&catalog::a2(), 2).unwrap();
        assert_eq!(a2, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        let b2 = positive_real_roots_up_to(&catalog::b2_shape(), 3).unwrap();
        assert_eq!(b2, vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![2, 1]]);
        let g2 = positive_real_roots_up_to(&catalog::g2_shape(), 4).unwrap();
        assert_eq!(g2.len(), 6);
    }

    #[test]
    fn real_root_set_is_negation_symmetric() {
        for g in [catalog::a2(), catalog::b2_shape(), catalog::kronecker()] {
            let roots = real_roots_up_to(&g, 3).unwrap();
            for r in &roots {
                let neg: Vec<i64> = r.iter().map(|&v| -v).collect();
                assert!(roots.contains(&neg));
            }
        }
    }

    #[test]
    fn real_roots_have_simple_tits_values() {
        for g in [catalog::a2(), catalog::b2_shape(), catalog::g2_shape()] {
            let dvals: BTreeSet<i64> = g.d.iter().map(|&d| d as i64).collect();
            for r in real_roots_up_to(&g, 4).unwrap() {
                assert!(dvals.contains(&tits_form(&g, &r).unwrap()));
            }
        }
    }

    #[test]
    fn fundamental_and_imaginary() {
        let g = catalog::indefinite_32();
        assert!(fundamental_set_member(&g, &[1, 1]).unwrap());
        let im = imaginary_roots_up_to(&g, 2).unwrap();
        assert!(im.contains(&vec![1, 1]));

        let k = catalog::kronecker();
        for kk in 1..=3 {
            assert!(fundamental_set_member(&k, &[kk, kk]).unwrap());
            assert!(imaginary_roots_up_to(&k, 3)
                .unwrap()
                .contains(&vec![kk, kk]));
        }

        let a2 = catalog::a2();
        let im_a2 = imaginary_roots_up_to(&a2, 3).unwrap();
        assert!(im_a2.is_empty());
        for x in [[1, 0], [1, 1], [2, 1]] {
            assert!(!fundamental_set_member(&a2, &x).unwrap());
        }
    }

    #[test]
    fn imaginary_roots_nonpositive_tits() {
        for g in [catalog::kronecker(), catalog::indefinite_32()] {
            for r in imaginary_roots_up_to(&g, 3).unwrap() {
                assert!(tits_form(&g, &r).unwrap() <= 0);
            }
        }
    }

    #[test]
    fn stable_lattices() {
        assert_eq!(stable_lattice(&catalog::kronecker()), vec![vec![1, 1]]);
        assert!(stable_lattice(&catalog::a2()).is_empty());
        assert!(stable_lattice(&catalog::indefinite_32()).is_empty());
    }

    #[test]
    fn stable_vectors_are_reflection_fixed() {
        let g = catalog::kronecker();
        for v in stable_lattice(&g) {
            for i in 0..2 {
                assert_eq!(simple_reflection(&g, i, &v).unwrap(), v);
            }
        }
    }

    #[test]
    fn classification() {
        assert_eq!(classify_type(&catalog::a2()).unwrap(), ReprType::Finite);
        assert_eq!(
            classify_type(&catalog::b2_shape()).unwrap(),
            ReprType::Finite
        );
        assert_eq!(
            classify_type(&catalog::g2_shape()).unwrap(),
            ReprType::Finite
        );
        assert_eq!(
            classify_type(&catalog::kronecker()).unwrap(),
            ReprType::Affine
        );
        assert_eq!(
            classify_type(&catalog::indefinite_32()).unwrap(),
            ReprType::Indefinite
        );
    }

    #[test]
    fn classification_matches_crush() {
        for g in [catalog::kronecker(), catalog::fan_target()] {
            assert_eq!(
                classify_type(&g).unwrap(),
                classify_type(&crate::quiver::crush_abs(&g)).unwrap()
            );
        }
    }

    #[test]
    fn forms_are_orientation_independent() {
        let g = catalog::b2_shape();
        let mut rev_arrows = g.quiver.arrows.clone();
        for a in rev_arrows.iter_mut() {
            std::mem::swap(&mut a.tail, &mut a.head);
        }
        let rev = crate::quiver::AbsValuedQuiver::new(
            Quiver::new(g.quiver.vertices.clone(), rev_arrows),
            g.d.clone(),
            g.m.clone(),
        );
        for x in [[1i64, 0], [0, 1], [2, -1], [3, 5]] {
            for y in [[1i64, 1], [-1, 2]] {
                assert_eq!(
                    symmetric_form(&g, &x, &y).unwrap(),
                    symmetric_form(&rev, &x, &y).unwrap()
                );
            }
            assert_eq!(tits_form(&g, &x).unwrap(), tits_form(&rev, &x).unwrap());
        }
    }

    #[test]
    fn relative_forms_via_lift() {
        let g = catalog::arrow_valued(4, 2, 4);
        let rel = functor_f(&g);
        // lift normalizes to (2)-(2)->(1); the forms use that scale
        assert_eq!(euler_form_rel(&rel, &[1, 0], &[0, 1]).unwrap(), -2);
    }

    #[test]
    fn weyl_invariance_of_tits_form_sampled() {
        let mut rng = crate::testutil::SplitMix::new(7);
        for g in [
            catalog::a2(),
            catalog::kronecker(),
            catalog::indefinite_32(),
        ] {
            for _ in 0..2000 {
                let x: Vec<i64> = (0..2).map(|_| rng.range(-9, 9)).collect();
                let i = rng.range(0, 1) as usize;
                let rx = simple_reflection(&g, i, &x).unwrap();
                assert_eq!(tits_form(&g, &x).unwrap(), tits_form(&g, &rx).unwrap());
            }
        }
    }
}
